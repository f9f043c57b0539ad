#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stratkit/point_set.hpp"

namespace stratkit {

/// A finite topological space.
///
/// The topology is stored as the map x -> U_x to the minimal open
/// neighbourhood of each point. Every finite space is Alexandrov, so this
/// determines the topology: S is open iff U_x is contained in S for all x in S.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Validates reflexivity (x in U_x) and transitivity (y in U_x implies
  /// U_y within U_x). Throws InputError on duplicate names or violations.
  static FiniteSpace from_min_open(std::vector<std::string> points, std::vector<PointSet> min_open);

  /// Coarsest topology containing every generator. A point lying in no
  /// generator gets the whole space as its minimal neighbourhood.
  static FiniteSpace from_subbasis(std::vector<std::string> points, std::span<const PointSet> generators);
  static FiniteSpace from_subbasis(std::vector<std::string> points,
                                   const std::vector<std::vector<std::string>>& generators);

  /// Topology given by an explicit open family; the family must be closed
  /// under union and intersection and contain the empty set and the space.
  static FiniteSpace from_open_sets(std::vector<std::string> points, std::span<const PointSet> opens);

  static FiniteSpace discrete(std::vector<std::string> points);
  static FiniteSpace indiscrete(std::vector<std::string> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  PointSet all() const { return PointSet::full(size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(std::size_t i) const { return points_[i]; }

  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  PointSet subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names(PointSet s) const;

  PointSet min_open(std::size_t x) const { return min_open_[x]; }
  PointSet min_open(std::string_view x) const { return min_open_[index_of(x)]; }
  const std::vector<PointSet>& min_open_map() const { return min_open_; }

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement(size())); }

  /// Smallest open set containing s (union of the U_x).
  PointSet open_hull(PointSet s) const;
  /// Smallest closed superset: {x : U_x meets s}.
  PointSet closure(PointSet s) const;
  /// Largest open subset.
  PointSet interior(PointSet s) const;
  /// closure(s) minus s.
  PointSet frontier(PointSet s) const { return closure(s) - s; }

  /// All open sets in ascending bit order. Guarded by final_topology_limit().
  std::vector<PointSet> open_sets() const;

  bool is_t0() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.min_open_ == b.min_open_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<PointSet> min_open_;
  std::unordered_map<std::string, std::size_t> index_;

  void check_subset(PointSet s) const;
};

struct LocallyClosed {
  bool value = false;
  /// An open O with S = O and closure(S) on success.
  std::optional<PointSet> open_witness;
};

/// S is locally closed iff S = O and closure(S) for some open O.
LocallyClosed is_locally_closed(const FiniteSpace& space, PointSet s);

/// Subspace on S; point order follows the parent's order.
FiniteSpace subspace(const FiniteSpace& space, PointSet s);

/// A point map between finite spaces, continuity unchecked.
struct SpaceMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> assignment;

  /// Validates totality and range.
  SpaceMap(FiniteSpace src, FiniteSpace dst, std::vector<std::size_t> assign);

  PointSet image(PointSet s) const;
  PointSet preimage(PointSet t) const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;
};

enum class MapMode { continuous, open, closed };

struct MapCheck {
  bool holds = true;
  /// A violating set: an open of the target (continuous), an open of the
  /// source (open) or a closed set of the source (closed).
  std::optional<PointSet> witness;
};

/// Decides the map property from the minimal-neighbourhood basis.
MapCheck map_check(const SpaceMap& f, MapMode mode);

/// Decides the property by the closure criteria
///   continuous: closure(f^-1 B) within f^-1(closure B) for all B,
///   open:       f^-1(closure B) within closure(f^-1 B) for all B.
/// Enumerates all subsets of the target; guarded. `closed` is rejected.
bool map_check_by_closure(const SpaceMap& f, MapMode mode);

/// One member of a family of maps into a common target point set.
struct FamilyMember {
  FiniteSpace source;
  std::vector<std::size_t> assignment;
};

/// Finest topology on `target_points` making every family member
/// continuous. Filters all 2^n candidate subsets; n is guarded.
FiniteSpace final_topology(std::vector<std::string> target_points, std::span<const FamilyMember> family);

}  // namespace stratkit
