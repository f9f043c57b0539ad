#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratkit/point_set.hpp"
#include "stratkit/topology.hpp"

namespace stratkit {

/// A finite set with a reflexive, transitive relation.
///
/// Stored as a dense boolean matrix: row i holds {j : i <= j}.
class Proset {
 public:
  Proset() = default;

  /// Builds from explicit pairs (a, b) meaning a <= b. With `close` the
  /// reflexive-transitive closure is taken; otherwise the pairs must
  /// already form a preorder and the first violation is reported.
  static Proset from_relation(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs, bool close);

  /// Rows are up-sets; validated as a preorder.
  static Proset from_up_sets(std::vector<std::string> elements, std::vector<PointSet> up);

  static Proset discrete(std::vector<std::string> elements);
  static Proset chain(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  bool equivalent(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }
  PointSet up_set(std::size_t a) const { return up_[a]; }
  PointSet down_set(std::size_t a) const;
  const std::vector<PointSet>& up_sets() const { return up_; }

  /// Relation containment: every a <= b here also holds in `other`.
  /// Both prosets must have the same element list.
  bool contained_in(const Proset& other) const;

  /// Pairs (a, b) with a <= b and a != b, in index order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const Proset& a, const Proset& b) {
    return a.elements_ == b.elements_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<PointSet> up_;
};

/// A proset known to be antisymmetric.
class Poset {
 public:
  Poset() = default;
  /// Throws InputError naming a 2-cycle if `p` is not antisymmetric.
  explicit Poset(Proset p);

  const Proset& proset() const { return p_; }
  std::size_t size() const { return p_.size(); }
  const std::vector<std::string>& elements() const { return p_.elements(); }
  bool leq(std::size_t a, std::size_t b) const { return p_.leq(a, b); }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Proset p_;
};

struct PosetCheck {
  bool value = true;
  /// A pair a != b with a <= b <= a, on failure.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

PosetCheck is_poset(const Proset& p);

struct MonotoneMap {
  Proset source;
  Proset target;
  std::vector<std::size_t> assignment;

  bool is_monotone() const;
};

/// T: the Alexandrov space, U_p = {q : p <= q}; opens are the up-sets.
FiniteSpace alexandrov_space(const Proset& p);

/// P: x <= y iff x lies in the closure of {y}. Computed both from closures
/// and from minimal neighbourhoods; disagreement raises DefectError.
Proset specialization_preorder(const FiniteSpace& space);

struct AdjunctionReport {
  bool unit_identity = false;         ///< P(T(p)) == p
  bool counit_homeomorphism = false;  ///< T(P(x)) == x
};

AdjunctionReport adjunction_roundtrips(const Proset& p, const FiniteSpace& x);

struct Reflection {
  Poset poset;
  MonotoneMap quotient;
};

/// Quotient by mutual comparability. Classes are named by their
/// lexicographically least member and listed in order of first occurrence.
Reflection poset_reflection(const Proset& p);

/// Minimal open (up-set) and minimal closed (down-set) neighbourhood of `e`.
std::pair<PointSet, PointSet> up_down_sets(const Proset& p, std::string_view e);

/// Checks, independently, antisymmetry and local closedness of every
/// singleton of T(p). Returns the common value; DefectError if they differ.
bool singleton_locally_closed_check(const Proset& p);

/// Cover pairs a < b with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const Poset& p);

enum class SymbolicFamily { nat_usual, nat_opposite, nat_discrete };

struct LocalFiniteness {
  bool locally_finite_space = false;  ///< every up-set [p, inf) finite
  bool locally_finite_poset = false;  ///< every interval [p, q] finite
  std::string space_reason;
  std::string poset_reason;
};

/// Closed catalog of infinite orders on the naturals, answered analytically.
LocalFiniteness symbolic_local_finiteness(SymbolicFamily f);
SymbolicFamily parse_symbolic_family(std::string_view tag);
std::string_view to_string(SymbolicFamily f);

/// Finite prosets: both notions hold trivially. Provided for contract symmetry.
LocalFiniteness finite_local_finiteness(const Proset& p);

}  // namespace stratkit
