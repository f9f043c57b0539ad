#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratkit/enumerate.hpp"
#include "stratkit/order.hpp"
#include "stratkit/topology.hpp"

namespace stratkit {

/// A finite space partitioned into named, nonempty, disjoint strata.
class Decomposition {
 public:
  Decomposition() = default;

  /// Throws InputError: "strata not disjoint", "strata do not cover the space",
  /// "empty stratum", or a duplicate stratum id.
  Decomposition(FiniteSpace space, std::vector<std::string> ids, std::vector<PointSet> strata);

  /// One stratum per point, named after the point.
  static Decomposition pointwise(FiniteSpace space);
  /// Strata from a block labeling; ids "0", ..., "k-1".
  static Decomposition from_partition(FiniteSpace space, const Partition& blocks);

  const FiniteSpace& space() const { return space_; }
  std::size_t stratum_count() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;
  PointSet stratum(std::size_t i) const { return strata_[i]; }
  const std::vector<PointSet>& strata() const { return strata_; }
  PointSet all_strata() const { return PointSet::full(stratum_count()); }

  /// The decomposition map as a point -> stratum index table.
  const std::vector<std::size_t>& pi() const { return pi_; }
  std::size_t stratum_of(std::size_t x) const { return pi_[x]; }

  PointSet preimage(PointSet strata_set) const;
  PointSet image(PointSet points) const;
  /// Union of the strata meeting `points`.
  PointSet saturation(PointSet points) const { return preimage(image(points)); }

  /// Stratum indices sorted by id; witness searches follow this order.
  const std::vector<std::size_t>& lex_order() const { return lex_; }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.space_ == b.space_ && a.ids_ == b.ids_ && a.strata_ == b.strata_;
  }

 private:
  FiniteSpace space_;
  std::vector<std::string> ids_;
  std::vector<PointSet> strata_;
  std::vector<std::size_t> pi_;
  std::vector<std::size_t> lex_;
};

/// The decomposition map as a SpaceMap into `target`, whose points are the
/// stratum ids in the decomposition's order.
SpaceMap decomposition_map(const Decomposition& d, const FiniteSpace& target);

/// Quotient topology on the stratum ids. U_i is the least J containing i
/// whose preimage is open, found by saturation to a fixpoint.
FiniteSpace decomposition_space(const Decomposition& d);

/// Least set of strata containing j whose preimage is closed, found by
/// closure saturation. Equals the down-set D_j of the decomposition preorder.
PointSet min_closed_union(const Decomposition& d, std::size_t j);

/// Specialization preorder of the decomposition space. Checked against
/// i <= j iff X_i lies in the preimage of min_closed_union(j).
Proset decomposition_preorder(const Decomposition& d);

struct AlexandrovReport {
  bool quotient_is_alexandrov = false;
  bool identity_homeomorphism = false;
  bool pi_continuous = false;
  bool value() const { return quotient_is_alexandrov; }
  friend bool operator==(const AlexandrovReport&, const AlexandrovReport&) = default;
};

AlexandrovReport alexandrov_equivalences(const Decomposition& d);

/// Every point has an open neighbourhood meeting finitely many strata.
bool locally_finite_decomposition(const Decomposition& d);

using Witnesses = std::map<std::string, std::string>;

struct FrontierReport {
  bool frontier_condition = false;        ///< X_i meets cl(X_j) implies X_i within cl(X_j)
  bool closure_is_min_closed_union = false;  ///< cl(X_j) = preimage of D_j
  bool preorder_matches_closure = false;  ///< i <= j iff X_i within cl(X_j)
  bool pi_open = false;                   ///< X -> I_pi is open
  Witnesses witnesses;
  bool value() const { return frontier_condition; }
  friend bool operator==(const FrontierReport&, const FrontierReport&) = default;
};

FrontierReport frontier_equivalences(const Decomposition& d);

struct PosetStratifiedReport {
  bool exists_partial_order = false;        ///< some partial order makes pi continuous
  bool preorder_partial_and_continuous = false;
  bool strata_open_in_closed_union = false; ///< X_i open in preimage of D_i
  /// Result of the exhaustive search over partial orders, when run (|I| <= 4).
  std::optional<bool> search_result;
  Witnesses witnesses;
  bool value() const { return preorder_partial_and_continuous; }
  friend bool operator==(const PosetStratifiedReport&, const PosetStratifiedReport&) = default;
};

PosetStratifiedReport poset_stratified_equivalences(const Decomposition& d);

struct StratificationVerdict {
  bool value = false;
  std::vector<std::string> reasons;  ///< one entry per failed clause
};

StratificationVerdict is_stratification(const Decomposition& d);

struct WrtCheck {
  bool continuous = false;
  bool surjective = false;
  bool open = false;
};

/// Tests pi: X -> T(order). The order's elements must be exactly the
/// stratum ids (any listing order).
WrtCheck check_poset_stratified_wrt(const Decomposition& d, const Poset& order);

/// Drops order elements that are not stratum ids (empty preimages) and
/// reports them. Throws InputError if a stratum id is missing from the order.
std::pair<Poset, std::vector<std::string>> restrict_order_to_strata(const Poset& order, const Decomposition& d);

/// A decomposition together with a partial order on its strata for which
/// the decomposition map is continuous.
class PosetStratification {
 public:
  /// Reorders `order` to the decomposition's id order. Throws InputError on
  /// id mismatch and PreconditionError if the map is not continuous.
  PosetStratification(Decomposition dec, const Poset& order);

  const Decomposition& decomposition() const { return dec_; }
  const Poset& order() const { return order_; }

  friend bool operator==(const PosetStratification&, const PosetStratification&) = default;

 private:
  Decomposition dec_;
  Poset order_;
};

struct Coarsening {
  Decomposition coarse;
  PosetStratification stratification;
};

/// Merges strata equivalent under the decomposition preorder.
Coarsening coarsen(const Decomposition& d);

/// A stratification is poset-stratified over its decomposition preorder.
/// Throws PreconditionError naming the failed clause otherwise.
PosetStratification theorem_A(const Decomposition& d);

struct TheoremBVerdict {
  bool stratification = false;
  bool identity_monotone = false;  ///< decomposition preorder within the given order
};

/// Requires pi: X -> T(order) open (PreconditionError otherwise) and
/// confirms the decomposition is a stratification.
TheoremBVerdict theorem_B(const PosetStratification& ps);

/// All partial orders on I making pi continuous; each contains the
/// decomposition preorder. Requires a poset-stratified decomposition.
std::vector<Poset> initial_order_check(const Decomposition& d, std::size_t bound = 4);

/// Tests every strict partial-order refinement of the decomposition
/// preorder: continuous yes, open never. Returns how many were tested.
std::size_t refinement_never_open(const Decomposition& d);

struct SemicontinuityReport {
  bool sat_open_open = false;      ///< saturation of every open set is open
  bool sat_closed_closed = false;  ///< saturation of every closed set is closed
  bool pi_open = false;
  bool pi_closed = false;
  bool lower() const { return pi_open; }
  bool upper() const { return pi_closed; }
  bool continuous() const { return pi_open && pi_closed; }
  friend bool operator==(const SemicontinuityReport&, const SemicontinuityReport&) = default;
};

SemicontinuityReport semicontinuity(const Decomposition& d);

enum class Ladder { decomposition, alexandrov, poset_stratified, stratification };

std::string_view to_string(Ladder l);
Ladder parse_ladder(std::string_view s);

struct ClassificationReport {
  AlexandrovReport alexandrov;
  bool locally_finite = false;
  std::map<std::string, bool> locally_closed;
  FrontierReport frontier;
  PosetStratifiedReport poset_stratified;
  bool stratification = false;
  std::vector<std::string> stratification_reasons;
  SemicontinuityReport semicontinuity;
  Witnesses witnesses;
  Ladder verdict = Ladder::decomposition;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Runs every check; any disagreement inside an equivalence group raises DefectError.
ClassificationReport classify(const Decomposition& d);

}  // namespace stratkit
