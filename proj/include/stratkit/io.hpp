#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stratkit/decomposition.hpp"
#include "stratkit/oracle.hpp"
#include "stratkit/order.hpp"
#include "stratkit/topology.hpp"

namespace stratkit {

struct ProsetDocument {
  Proset value;
  friend bool operator==(const ProsetDocument&, const ProsetDocument&) = default;
};
struct PosetDocument {
  Poset value;
  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};
/// A partial order whose elements are meant to be stratum ids.
struct StrataOrderDocument {
  Poset value;
  friend bool operator==(const StrataOrderDocument&, const StrataOrderDocument&) = default;
};
struct SymbolicDocument {
  SymbolicFamily family;
  friend bool operator==(const SymbolicDocument&, const SymbolicDocument&) = default;
};

/// Every validated structure that has a JSON form. Kinds on the wire:
/// space, proset, poset, decomposition, map, order-on-strata, symbolic,
/// poset-stratification.
using Document = std::variant<FiniteSpace, ProsetDocument, PosetDocument, Decomposition, SpaceMap,
                              StrataOrderDocument, SymbolicDocument, PosetStratification>;

std::string_view kind_of(const Document& doc);

/// Parses and validates. Syntax errors report line and column; invariant
/// violations report the broken invariant. Both throw InputError.
Document load(std::string_view text);
Document from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, sorted point and pair lists, two-space
/// indentation, trailing newline.
std::string save(const Document& doc);
nlohmann::json to_json(const Document& doc);

/// Typed accessors that throw InputError naming the expected kind.
Decomposition expect_decomposition(const Document& doc);
Poset expect_order(const Document& doc);

nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepReport& r);
SweepReport sweep_from_json(const nlohmann::json& j);

/// Renders canonical JSON text for any json value.
std::string dump_canonical(const nlohmann::json& j);

struct Fixture {
  std::string name;
  Document document;
  std::string notes;
};

/// Throws InputError on an unknown name.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

struct FacePosetModel {
  Poset poset;
  FiniteSpace space;
  /// Strata are the faces of each dimension, ids "0", "1", ...
  Decomposition skeleton;
};

/// Nonempty faces of a simplicial complex ordered by inclusion. Faces are
/// named "{v0,v1,...}" with vertices sorted.
FacePosetModel face_poset_model(const std::vector<std::vector<std::string>>& facets);

/// splitmix64: the documented generator behind `generate`.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform in [0, n) by modular reduction; n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

enum class GenKind { preorder, partition };

struct GenParams {
  double density = 0.5;  ///< preorder: pair probability; partition: density of the ambient preorder
  std::size_t k = 0;     ///< partition: number of strata (0 means n)
  bool density_set = false;
};

/// Preorder: each ordered pair (a, b), a != b, row-major, is drawn with
/// probability `density`, then closed. Partition: a random ambient preorder
/// (density default 0, i.e. discrete) followed by a surjection onto k labels
/// relabeled by first occurrence.
Document generate(GenKind kind, std::size_t n, const GenParams& params, std::uint64_t seed);

/// Hasse diagram, bottom to top.
std::string export_dot(const Poset& p);
/// Strata as nodes labeled with classification flags; edges are the covers
/// of the decomposition preorder, dashed two-way edges mark equivalent strata.
std::string export_dot(const Decomposition& d);

}  // namespace stratkit
