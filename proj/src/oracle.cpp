#include "stratkit/oracle.hpp"

#include <functional>

#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"

namespace stratkit {

std::size_t SweepReport::failures() const {
  std::size_t f = 0;
  for (const auto& [name, pf] : checks) f += pf.fail;
  return f;
}

namespace {

// Records one check outcome; a DefectError counts as a failure.
void record(SweepReport& report, const std::string& name, const std::function<std::string()>& bundle,
            const std::function<bool()>& check) {
  bool ok = false;
  try {
    ok = check();
  } catch (const DefectError&) {
    ok = false;
  }
  auto& pf = report.checks[name];
  if (ok) {
    ++pf.pass;
    return;
  }
  ++pf.fail;
  if (!report.first_counterexample) {
    report.first_counterexample = bundle();
    report.first_failed_check = name;
  }
}

std::vector<PointSet> closure_relation_rows(const Decomposition& d) {
  std::vector<PointSet> rel(d.stratum_count());
  for (std::size_t j = 0; j < d.stratum_count(); ++j) {
    const PointSet cl = d.space().closure(d.stratum(j));
    for (std::size_t i = 0; i < d.stratum_count(); ++i) {
      if (d.stratum(i).subset_of(cl)) rel[i].insert(j);
    }
  }
  return rel;
}

}  // namespace

void verify_space(const Proset& p, SweepReport& report) {
  const auto bundle = [&] { return save(ProsetDocument{p}); };
  const FiniteSpace X = alexandrov_space(p);

  record(report, "adjunction_unit", bundle, [&] { return specialization_preorder(X) == p; });
  record(report, "adjunction_counit", bundle, [&] { return alexandrov_space(specialization_preorder(X)) == X; });
  record(report, "singleton_locally_closed", bundle, [&] {
    singleton_locally_closed_check(p);
    return true;
  });
  record(report, "open_cover_final_topology", bundle, [&] {
    // X carries the final topology of the inclusions of its minimal open sets.
    std::vector<FamilyMember> family;
    for (std::size_t x = 0; x < X.size(); ++x) {
      const PointSet u = X.min_open(x);
      family.push_back({subspace(X, u), std::vector<std::size_t>(u.begin(), u.end())});
    }
    return final_topology(X.points(), family) == X;
  });
}

void verify_instance(const Decomposition& d, SweepReport& report) {
  const auto bundle = [&] { return save(d); };
  ++report.instances;

  std::optional<ClassificationReport> cls;
  record(report, "classification", bundle, [&] {
    cls = classify(d);
    return true;
  });
  if (!cls) return;

  record(report, "alexandrov_equivalences", bundle, [&] {
    const auto& a = cls->alexandrov;
    return a.quotient_is_alexandrov && a.identity_homeomorphism && a.pi_continuous;
  });
  record(report, "frontier_equivalences", bundle, [&] {
    const auto& f = cls->frontier;
    return f.frontier_condition == f.closure_is_min_closed_union && f.frontier_condition == f.preorder_matches_closure &&
           f.frontier_condition == f.pi_open;
  });
  record(report, "poset_stratified_equivalences", bundle, [&] {
    const auto& p = cls->poset_stratified;
    return p.exists_partial_order == p.preorder_partial_and_continuous &&
           p.exists_partial_order == p.strata_open_in_closed_union && p.search_result == p.exists_partial_order;
  });
  record(report, "semicontinuity_pairings", bundle, [&] {
    const auto& s = cls->semicontinuity;
    return s.sat_open_open == s.pi_open && s.sat_closed_closed == s.pi_closed;
  });
  record(report, "locally_closed_plus_frontier", bundle, [&] {
    bool all_lc = true;
    for (const auto& [id, lc] : cls->locally_closed) all_lc = all_lc && lc;
    return (all_lc && cls->frontier.frontier_condition) == (cls->poset_stratified.value() && cls->frontier.pi_open);
  });
  record(report, "quotient_fixpoint_vs_filter", bundle, [&] {
    const FamilyMember pi{d.space(), d.pi()};
    return decomposition_space(d) == final_topology(d.ids(), std::span(&pi, 1));
  });
  record(report, "locally_finite", bundle, [&] { return cls->locally_finite; });
  record(report, "coarsening_poset_stratified", bundle, [&] {
    return poset_stratified_equivalences(coarsen(d).coarse).value();
  });

  const Proset leq = decomposition_preorder(d);
  if (cls->poset_stratified.value()) {
    ++report.poset_stratified;
    record(report, "initial_order", bundle, [&] {
      for (const auto& order : initial_order_check(d, d.stratum_count())) {
        if (!leq.contained_in(order.proset())) return false;
      }
      return true;
    });
    // With the decomposition preorder as the order: stratification iff open.
    record(report, "theorem_b_converse", bundle, [&] {
      const auto w = check_poset_stratified_wrt(d, Poset(leq));
      return w.continuous && cls->stratification == (cls->locally_finite && w.open);
    });
  }

  if (cls->stratification) {
    ++report.stratifications;
    record(report, "theorem_a", bundle, [&] {
      const PosetStratification ps = theorem_A(d);
      return is_poset(ps.order().proset()).value && ps.order().proset().up_sets() == closure_relation_rows(d);
    });
    record(report, "refinement_never_open", bundle, [&] {
      report.refinements_tested += refinement_never_open(d);
      return true;
    });
  }

  if (d.stratum_count() <= 4) {
    for (const auto& order : enumerate_posets(d.ids())) {
      const auto w = check_poset_stratified_wrt(d, order);
      if (!(w.continuous && w.open)) continue;
      ++report.theorem_b_checks;
      record(report, "theorem_b", bundle, [&] {
        const auto v = theorem_B(PosetStratification(d, order));
        return v.stratification && v.identity_monotone;
      });
    }
  }
}

SweepReport exhaustive_verify(std::size_t n) {
  const auto preorders = enumerate_preorders(n);
  const auto partitions = enumerate_partitions(n);
  SweepReport report;
  report.points = n;
  report.spaces = preorders.size();
  report.partitions = partitions.size();
  for (const auto& p : preorders) {
    verify_space(p, report);
    const FiniteSpace X = alexandrov_space(p);
    for (const auto& blocks : partitions) verify_instance(Decomposition::from_partition(X, blocks), report);
  }
  return report;
}

}  // namespace stratkit
