#include "stratkit/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stratkit/errors.hpp"

namespace stratkit {

namespace {

constexpr std::size_t kSearchBound = 4;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Lexicographically least point name in a nonempty set.
const std::string& least_point(const FiniteSpace& space, PointSet s) {
  const std::string* best = nullptr;
  for (std::size_t x : s) {
    if (best == nullptr || space.name(x) < *best) best = &space.name(x);
  }
  return *best;
}

std::string describe(const FiniteSpace& space, PointSet s) {
  auto names = space.names(s);
  std::sort(names.begin(), names.end());
  return "{" + join(names, ",") + "}";
}

std::string describe_strata(const Decomposition& d, PointSet s) {
  std::vector<std::string> names;
  for (std::size_t i : s) names.push_back(d.id(i));
  std::sort(names.begin(), names.end());
  return "{" + join(names, ",") + "}";
}

void defect(const std::string& what) { throw DefectError(what); }

// Proset on stratum ids from relation rows; rows may be non-transitive for
// comparisons, so they are kept as raw PointSet vectors.
std::vector<PointSet> closure_relation(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  std::vector<PointSet> rel(d.stratum_count());
  for (std::size_t j = 0; j < d.stratum_count(); ++j) {
    const PointSet cl = X.closure(d.stratum(j));
    for (std::size_t i = 0; i < d.stratum_count(); ++i) {
      if (d.stratum(i).subset_of(cl)) rel[i].insert(j);
    }
  }
  return rel;
}

// The given poset listed in the decomposition's id order.
Poset align_order(const Decomposition& d, const Poset& order) {
  if (order.size() != d.stratum_count()) {
    throw InputError("order elements must equal the stratum ids (" + std::to_string(order.size()) + " elements, " +
                     std::to_string(d.stratum_count()) + " strata)");
  }
  std::vector<std::size_t> to_order(d.stratum_count());
  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    auto k = order.proset().find(d.id(i));
    if (!k) throw InputError("order does not mention stratum '" + d.id(i) + "'");
    to_order[i] = *k;
  }
  std::vector<PointSet> up(d.stratum_count());
  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    for (std::size_t j = 0; j < d.stratum_count(); ++j) {
      if (order.leq(to_order[i], to_order[j])) up[i].insert(j);
    }
  }
  return Poset(Proset::from_up_sets(d.ids(), std::move(up)));
}

bool pi_continuous_into(const Decomposition& d, const Proset& order) {
  return map_check(decomposition_map(d, alexandrov_space(order)), MapMode::continuous).holds;
}

}  // namespace

Decomposition::Decomposition(FiniteSpace space, std::vector<std::string> ids, std::vector<PointSet> strata)
    : space_(std::move(space)), ids_(std::move(ids)), strata_(std::move(strata)) {
  if (ids_.size() != strata_.size()) throw InputError("one id per stratum is required");
  std::set<std::string_view> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw InputError("stratum ids must be nonempty");
    if (!seen.insert(id).second) throw InputError("duplicate stratum id '" + id + "'");
  }
  PointSet covered;
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (!strata_[i].subset_of(space_.all())) throw InputError("stratum '" + ids_[i] + "' mentions an unknown point");
    if (strata_[i].empty()) throw InputError("empty stratum '" + ids_[i] + "'");
    if (covered.intersects(strata_[i])) throw InputError("strata not disjoint");
    covered |= strata_[i];
  }
  if (covered != space_.all()) throw InputError("strata do not cover the space");
  pi_.assign(space_.size(), 0);
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    for (std::size_t x : strata_[i]) pi_[x] = i;
  }
  lex_.resize(ids_.size());
  std::iota(lex_.begin(), lex_.end(), std::size_t{0});
  std::sort(lex_.begin(), lex_.end(), [&](std::size_t a, std::size_t b) { return ids_[a] < ids_[b]; });
}

Decomposition Decomposition::pointwise(FiniteSpace space) {
  std::vector<PointSet> strata;
  for (std::size_t x = 0; x < space.size(); ++x) strata.push_back(PointSet::single(x));
  auto ids = space.points();
  return Decomposition(std::move(space), std::move(ids), std::move(strata));
}

Decomposition Decomposition::from_partition(FiniteSpace space, const Partition& blocks) {
  if (blocks.size() != space.size()) throw InputError("partition must label every point");
  const std::size_t k = block_count(blocks);
  std::vector<PointSet> strata(k);
  for (std::size_t x = 0; x < blocks.size(); ++x) strata[blocks[x]].insert(x);
  return Decomposition(std::move(space), numbered(k), std::move(strata));
}

std::optional<std::size_t> Decomposition::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Decomposition::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InputError("unknown stratum '" + std::string(id) + "'");
}

PointSet Decomposition::preimage(PointSet strata_set) const {
  PointSet out;
  for (std::size_t i : strata_set) out |= strata_[i];
  return out;
}

PointSet Decomposition::image(PointSet points) const {
  PointSet out;
  for (std::size_t x : points) out.insert(pi_[x]);
  return out;
}

SpaceMap decomposition_map(const Decomposition& d, const FiniteSpace& target) {
  if (target.points() != d.ids()) throw InputError("decomposition map target must list the stratum ids in order");
  return SpaceMap(d.space(), target, d.pi());
}

FiniteSpace decomposition_space(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  std::vector<PointSet> min_open;
  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    PointSet J = PointSet::single(i);
    for (;;) {
      const PointSet next = J | d.image(X.open_hull(d.preimage(J)));
      if (next == J) break;
      J = next;
    }
    min_open.push_back(J);
  }
  return FiniteSpace::from_min_open(d.ids(), std::move(min_open));
}

PointSet min_closed_union(const Decomposition& d, std::size_t j) {
  PointSet J = PointSet::single(j);
  for (;;) {
    const PointSet next = J | d.image(d.space().closure(d.preimage(J)));
    if (next == J) return J;
    J = next;
  }
}

Proset decomposition_preorder(const Decomposition& d) {
  Proset leq = specialization_preorder(decomposition_space(d));
  for (std::size_t j = 0; j < d.stratum_count(); ++j) {
    const PointSet D = min_closed_union(d, j);
    const PointSet closed_union = d.preimage(D);
    if (D != leq.down_set(j)) defect("down-set of '" + d.id(j) + "' differs from its minimal closed union");
    for (std::size_t i = 0; i < d.stratum_count(); ++i) {
      if (leq.leq(i, j) != d.stratum(i).subset_of(closed_union)) {
        defect("decomposition preorder disagrees with minimal closed unions at (" + d.id(i) + ", " + d.id(j) + ")");
      }
    }
  }
  return leq;
}

AlexandrovReport alexandrov_equivalences(const Decomposition& d) {
  const std::size_t k = d.stratum_count();
  const FiniteSpace& X = d.space();
  const Proset leq = decomposition_preorder(d);
  AlexandrovReport r;

  if (k <= final_topology_limit()) {
    // The quotient topology as an explicit family of stratum sets.
    std::vector<PointSet> family;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t b = 0; b < total; ++b) {
      if (X.is_open(d.preimage(PointSet{b}))) family.push_back(PointSet{b});
    }
    auto in_family = [&](PointSet s) { return std::binary_search(family.begin(), family.end(), s); };
    r.quotient_is_alexandrov = true;
    for (std::size_t i = 0; i < k; ++i) {
      PointSet meet = d.all_strata();
      for (const PointSet o : family) {
        if (o.contains(i)) meet &= o;
      }
      if (!in_family(meet)) r.quotient_is_alexandrov = false;
    }
    // Up-sets of the decomposition preorder versus the quotient family.
    r.identity_homeomorphism = true;
    for (std::uint64_t b = 0; b < total; ++b) {
      const PointSet s{b};
      bool up_closed = true;
      for (std::size_t i : s) {
        if (!leq.up_set(i).subset_of(s)) up_closed = false;
      }
      if (up_closed != in_family(s)) r.identity_homeomorphism = false;
    }
  } else {
    // Too many strata to list the family: fall back to minimal neighbourhoods.
    r.quotient_is_alexandrov = true;
    r.identity_homeomorphism = alexandrov_space(leq) == decomposition_space(d);
  }
  r.pi_continuous = pi_continuous_into(d, leq);

  if (r.quotient_is_alexandrov != r.identity_homeomorphism || r.quotient_is_alexandrov != r.pi_continuous) {
    defect("Alexandrov equivalences disagree");
  }
  return r;
}

bool locally_finite_decomposition(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  for (std::size_t x = 0; x < X.size(); ++x) {
    // U_x meets at most stratum_count() strata; always finite here.
    if (d.image(X.min_open(x)).count() > d.stratum_count()) return false;
  }
  return true;
}

FrontierReport frontier_equivalences(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  const Proset leq = decomposition_preorder(d);
  FrontierReport r;
  r.frontier_condition = true;
  r.closure_is_min_closed_union = true;
  r.preorder_matches_closure = true;

  for (std::size_t i : d.lex_order()) {
    for (std::size_t j : d.lex_order()) {
      const PointSet cl = X.closure(d.stratum(j));
      const PointSet meet = d.stratum(i) & cl;
      if (!meet.empty() && !d.stratum(i).subset_of(cl) && r.frontier_condition) {
        r.frontier_condition = false;
        r.witnesses["frontier_condition"] = "stratum " + d.id(i) + " meets closure(" + d.id(j) + ") at " +
                                            least_point(X, meet) + " but is not contained in it";
      }
    }
  }
  for (std::size_t j : d.lex_order()) {
    const PointSet cl = X.closure(d.stratum(j));
    const PointSet down = d.preimage(leq.down_set(j));
    if (cl != down) {
      r.closure_is_min_closed_union = false;
      r.witnesses["closure_is_min_closed_union"] = "closure(" + d.id(j) + ") = " + describe(X, cl) +
                                                   " but the minimal closed union of strata is " + describe(X, down);
      break;
    }
  }
  const auto rel = closure_relation(d);
  for (std::size_t i : d.lex_order()) {
    if (rel[i] != leq.up_set(i)) {
      r.preorder_matches_closure = false;
      r.witnesses["preorder_matches_closure"] = "strata above " + d.id(i) + ": preorder gives " +
                                                describe_strata(d, leq.up_set(i)) + ", closures give " +
                                                describe_strata(d, rel[i]);
      break;
    }
  }
  const auto open = map_check(decomposition_map(d, decomposition_space(d)), MapMode::open);
  r.pi_open = open.holds;
  if (!open.holds) {
    r.witnesses["pi_open"] = "open set " + describe(X, *open.witness) + " has non-open image " +
                             describe_strata(d, d.image(*open.witness));
  }
  if (r.frontier_condition != r.closure_is_min_closed_union || r.frontier_condition != r.preorder_matches_closure ||
      r.frontier_condition != r.pi_open) {
    defect("frontier-condition equivalences disagree");
  }
  return r;
}

PosetStratifiedReport poset_stratified_equivalences(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  const Proset leq = decomposition_preorder(d);
  PosetStratifiedReport r;

  const auto antisym = is_poset(leq);
  r.preorder_partial_and_continuous = antisym.value && pi_continuous_into(d, leq);
  if (!antisym.value) {
    r.witnesses["preorder_partial_and_continuous"] = "strata " + d.id(antisym.witness->first) + " and " +
                                                     d.id(antisym.witness->second) +
                                                     " lie in each other's closure";
  }

  r.strata_open_in_closed_union = true;
  for (std::size_t i : d.lex_order()) {
    const PointSet ambient = d.preimage(leq.down_set(i));
    if ((X.open_hull(d.stratum(i)) & ambient) != d.stratum(i)) {
      r.strata_open_in_closed_union = false;
      r.witnesses["strata_open_in_closed_union"] = "stratum " + d.id(i) + " is not open in " + describe(X, ambient);
      break;
    }
  }

  std::vector<Poset> valid;
  if (d.stratum_count() <= kSearchBound) {
    for (const auto& order : enumerate_posets(d.ids())) {
      if (pi_continuous_into(d, order.proset())) valid.push_back(order);
    }
    r.search_result = !valid.empty();
    r.exists_partial_order = *r.search_result;
  } else {
    r.exists_partial_order = r.preorder_partial_and_continuous;
  }
  if (!r.exists_partial_order) {
    r.witnesses["exists_partial_order"] = "no partial order on the strata makes the decomposition map continuous";
  }

  if (r.exists_partial_order != r.preorder_partial_and_continuous ||
      r.exists_partial_order != r.strata_open_in_closed_union) {
    defect("poset-stratified equivalences disagree");
  }
  for (const auto& order : valid) {
    if (!leq.contained_in(order.proset())) defect("decomposition preorder is not initial among valid partial orders");
  }
  return r;
}

StratificationVerdict is_stratification(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  StratificationVerdict v;
  if (!locally_finite_decomposition(d)) v.reasons.push_back("not locally finite");
  bool all_lc = true;
  for (std::size_t i : d.lex_order()) {
    if (!is_locally_closed(X, d.stratum(i)).value) {
      all_lc = false;
      v.reasons.push_back("stratum " + d.id(i) + " is not locally closed");
    }
  }
  const auto fc = frontier_equivalences(d);
  if (!fc.frontier_condition) v.reasons.push_back("frontier condition fails");
  v.value = v.reasons.empty();

  const bool poset_strat = poset_stratified_equivalences(d).value();
  if ((all_lc && fc.frontier_condition) != (poset_strat && fc.pi_open)) {
    defect("locally-closed-plus-frontier disagrees with poset-stratified-plus-open");
  }
  return v;
}

WrtCheck check_poset_stratified_wrt(const Decomposition& d, const Poset& order) {
  const Poset aligned = align_order(d, order);
  const SpaceMap pi = decomposition_map(d, alexandrov_space(aligned.proset()));
  WrtCheck w;
  w.continuous = map_check(pi, MapMode::continuous).holds;
  w.surjective = pi.image(d.space().all()) == d.all_strata();
  w.open = map_check(pi, MapMode::open).holds;
  return w;
}

std::pair<Poset, std::vector<std::string>> restrict_order_to_strata(const Poset& order, const Decomposition& d) {
  std::vector<std::string> dropped;
  PointSet keep;
  for (std::size_t e = 0; e < order.size(); ++e) {
    if (d.find(order.elements()[e])) {
      keep.insert(e);
    } else {
      dropped.push_back(order.elements()[e]);
    }
  }
  for (const auto& id : d.ids()) {
    if (!order.proset().find(id)) throw InputError("order does not mention stratum '" + id + "'");
  }
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::vector<std::string> names;
  std::vector<PointSet> up(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    names.push_back(order.elements()[kept[a]]);
    for (std::size_t b = 0; b < kept.size(); ++b) {
      if (order.leq(kept[a], kept[b])) up[a].insert(b);
    }
  }
  return {Poset(Proset::from_up_sets(std::move(names), std::move(up))), std::move(dropped)};
}

PosetStratification::PosetStratification(Decomposition dec, const Poset& order)
    : dec_(std::move(dec)), order_(align_order(dec_, order)) {
  if (!pi_continuous_into(dec_, order_.proset())) {
    throw PreconditionError("decomposition map is not continuous for the given partial order");
  }
}

Coarsening coarsen(const Decomposition& d) {
  const Proset leq = decomposition_preorder(d);
  const Reflection refl = poset_reflection(leq);
  const auto& cls = refl.quotient.assignment;

  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    const PointSet Di = d.preimage(leq.down_set(i));
    for (std::size_t j = 0; j < d.stratum_count(); ++j) {
      const bool same_class = cls[i] == cls[j];
      const bool same_union = Di == d.preimage(leq.down_set(j));
      if (same_class != same_union) defect("coarsened strata disagree with minimal closed unions");
    }
  }

  std::vector<PointSet> strata(refl.poset.size());
  for (std::size_t i = 0; i < d.stratum_count(); ++i) strata[cls[i]] |= d.stratum(i);
  Decomposition coarse(d.space(), refl.poset.elements(), std::move(strata));
  try {
    PosetStratification ps(coarse, refl.poset);
    return {std::move(coarse), std::move(ps)};
  } catch (const PreconditionError&) {
    defect("coarsening is not poset-stratified");
  }
  throw DefectError("unreachable");
}

PosetStratification theorem_A(const Decomposition& d) {
  const auto verdict = is_stratification(d);
  if (!verdict.value) throw PreconditionError("not a stratification: " + join(verdict.reasons, "; "));
  const Proset leq = decomposition_preorder(d);
  if (!is_poset(leq).value) defect("theorem A: decomposition preorder of a stratification is not antisymmetric");
  if (closure_relation(d) != leq.up_sets()) defect("theorem A: preorder differs from closure containment");
  if (!pi_continuous_into(d, leq)) defect("theorem A: decomposition map is not continuous");
  return PosetStratification(d, Poset(leq));
}

TheoremBVerdict theorem_B(const PosetStratification& ps) {
  const Decomposition& d = ps.decomposition();
  const SpaceMap pi = decomposition_map(d, alexandrov_space(ps.order().proset()));
  if (!map_check(pi, MapMode::open).holds) {
    throw PreconditionError("decomposition map is not open for the given partial order");
  }
  TheoremBVerdict v;
  v.stratification = is_stratification(d).value;
  v.identity_monotone = decomposition_preorder(d).contained_in(ps.order().proset());
  if (!v.stratification) defect("theorem B: continuous open map onto a poset but not a stratification");
  if (!v.identity_monotone) defect("theorem B: identity from the decomposition preorder is not monotone");
  return v;
}

std::vector<Poset> initial_order_check(const Decomposition& d, std::size_t bound) {
  if (d.stratum_count() > bound) {
    throw LimitError("initial order check enumerates partial orders on at most " + std::to_string(bound) +
                     " strata; got " + std::to_string(d.stratum_count()));
  }
  const auto ps = poset_stratified_equivalences(d);
  if (!ps.value()) throw PreconditionError("decomposition is not poset-stratified");
  const Proset leq = decomposition_preorder(d);
  std::vector<Poset> valid;
  for (const auto& order : enumerate_posets(d.ids())) {
    if (!pi_continuous_into(d, order.proset())) continue;
    if (!leq.contained_in(order.proset())) defect("valid partial order does not contain the decomposition preorder");
    valid.push_back(order);
  }
  return valid;
}

std::size_t refinement_never_open(const Decomposition& d) {
  if (d.stratum_count() > kSearchBound) {
    throw LimitError("refinement search is bounded to " + std::to_string(kSearchBound) + " strata");
  }
  const auto verdict = is_stratification(d);
  if (!verdict.value) throw PreconditionError("not a stratification: " + join(verdict.reasons, "; "));
  const Proset leq = decomposition_preorder(d);
  std::size_t tested = 0;
  for (const auto& order : enumerate_posets(d.ids())) {
    if (order.proset() == leq || !leq.contained_in(order.proset())) continue;
    const SpaceMap pi = decomposition_map(d, alexandrov_space(order.proset()));
    if (!map_check(pi, MapMode::continuous).holds) defect("refinement is not continuous");
    if (map_check(pi, MapMode::open).holds) defect("strict refinement yields an open map");
    ++tested;
  }
  return tested;
}

SemicontinuityReport semicontinuity(const Decomposition& d) {
  const FiniteSpace& X = d.space();
  SemicontinuityReport r;
  r.sat_open_open = true;
  r.sat_closed_closed = true;
  if (X.size() <= final_topology_limit()) {
    for (const PointSet u : X.open_sets()) {
      if (!X.is_open(d.saturation(u))) r.sat_open_open = false;
      const PointSet f = u.complement(X.size());
      if (!X.is_closed(d.saturation(f))) r.sat_closed_closed = false;
    }
  } else {
    // Saturation commutes with unions; basic sets suffice.
    for (std::size_t x = 0; x < X.size(); ++x) {
      if (!X.is_open(d.saturation(X.min_open(x)))) r.sat_open_open = false;
      if (!X.is_closed(d.saturation(X.closure(PointSet::single(x))))) r.sat_closed_closed = false;
    }
  }
  const SpaceMap pi = decomposition_map(d, decomposition_space(d));
  r.pi_open = map_check(pi, MapMode::open).holds;
  r.pi_closed = map_check(pi, MapMode::closed).holds;
  if (r.sat_open_open != r.pi_open) defect("open saturation disagrees with the decomposition map being open");
  if (r.sat_closed_closed != r.pi_closed) defect("closed saturation disagrees with the decomposition map being closed");
  return r;
}

std::string_view to_string(Ladder l) {
  switch (l) {
    case Ladder::decomposition: return "decomposition";
    case Ladder::alexandrov: return "alexandrov";
    case Ladder::poset_stratified: return "poset-stratified";
    case Ladder::stratification: return "stratification";
  }
  return "?";
}

Ladder parse_ladder(std::string_view s) {
  if (s == "decomposition") return Ladder::decomposition;
  if (s == "alexandrov") return Ladder::alexandrov;
  if (s == "poset-stratified") return Ladder::poset_stratified;
  if (s == "stratification") return Ladder::stratification;
  throw InputError("unknown classification level '" + std::string(s) + "'");
}

ClassificationReport classify(const Decomposition& d) {
  ClassificationReport r;
  r.alexandrov = alexandrov_equivalences(d);
  r.locally_finite = locally_finite_decomposition(d);
  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    r.locally_closed[d.id(i)] = is_locally_closed(d.space(), d.stratum(i)).value;
  }
  r.frontier = frontier_equivalences(d);
  r.poset_stratified = poset_stratified_equivalences(d);
  const auto strat = is_stratification(d);
  r.stratification = strat.value;
  r.stratification_reasons = strat.reasons;
  r.semicontinuity = semicontinuity(d);
  for (const auto& [k, v] : r.frontier.witnesses) r.witnesses[k] = v;
  for (const auto& [k, v] : r.poset_stratified.witnesses) r.witnesses[k] = v;
  for (std::size_t i : d.lex_order()) {
    if (!r.locally_closed[d.id(i)]) {
      r.witnesses["locally_closed"] = "stratum " + d.id(i) + " is not locally closed";
      break;
    }
  }

  if (r.stratification) {
    if (!r.poset_stratified.value()) defect("stratification that is not poset-stratified");
    r.verdict = Ladder::stratification;
  } else if (r.poset_stratified.value()) {
    r.verdict = Ladder::poset_stratified;
  } else if (r.alexandrov.value()) {
    r.verdict = Ladder::alexandrov;
  } else {
    r.verdict = Ladder::decomposition;
  }
  return r;
}

}  // namespace stratkit
