#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "stratkit/decomposition.hpp"
#include "stratkit/enumerate.hpp"
#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"

using namespace stratkit;

namespace {

Decomposition fx(std::string_view name) { return expect_decomposition(fixture(name).document); }

Poset order(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> pairs) {
  return Poset(Proset::from_relation(std::move(elements), pairs, true));
}

Poset diamond() { return order({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}}); }

}  // namespace

TEST_CASE("construction errors") {
  const auto s = FiniteSpace::discrete({"a", "b", "c"});
  CHECK_THROWS_WITH_AS(Decomposition(s, {"0", "1"}, {s.subset({"a", "b"}), s.subset({"b", "c"})}),
                       doctest::Contains("strata not disjoint"), InputError);
  CHECK_THROWS_WITH_AS(Decomposition(s, {"0"}, {s.subset({"a", "b"})}), doctest::Contains("do not cover"),
                       InputError);
  CHECK_THROWS_WITH_AS(Decomposition(s, {"0", "1"}, {s.all(), PointSet{}}), doctest::Contains("empty stratum"),
                       InputError);
  CHECK_THROWS_AS(Decomposition(s, {"0", "0"}, {s.subset({"a"}), s.subset({"b", "c"})}), InputError);
}

TEST_CASE("decomposition_space") {
  SUBCASE("line_3 gives Sierpinski") {
    const auto q = decomposition_space(fx("line_3"));
    CHECK(q.points() == std::vector<std::string>{"0", "1"});
    CHECK(q.open_sets() == std::vector<PointSet>{PointSet{0b00}, PointSet{0b10}, PointSet{0b11}});
  }
  SUBCASE("pseudo_circle_4 gives the indiscrete pair") {
    const auto q = decomposition_space(fx("pseudo_circle_4"));
    CHECK(q == FiniteSpace::indiscrete({"1", "2"}));
  }
  SUBCASE("pointwise decompositions return the space") {
    for (const auto& p : enumerate_preorders(3)) {
      const auto x = alexandrov_space(p);
      CHECK(decomposition_space(Decomposition::pointwise(x)) == x);
    }
  }
  SUBCASE("fixpoint agrees with the quotient topology by filtering") {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& fam : brute::all_topologies(n)) {
        const auto x = FiniteSpace::from_open_sets(brute::names(n), fam);
        for (const auto& part : enumerate_partitions(n)) {
          const auto d = Decomposition::from_partition(x, part);
          CHECK(decomposition_space(d).open_sets() == brute::quotient(fam, d.pi(), d.stratum_count()));
        }
      }
    }
  }
}

TEST_CASE("decomposition_preorder") {
  const auto l = decomposition_preorder(fx("line_3"));
  CHECK(l.strict_pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  const auto pc = decomposition_preorder(fx("pseudo_circle_4"));
  CHECK(pc.equivalent(0, 1));

  CHECK(decomposition_preorder(fx("quadrant_4")) == diamond().proset());
}

TEST_CASE("alexandrov_equivalences") {
  for (auto name : {"line_3", "pseudo_circle_4", "quadrant_4"}) {
    const auto r = alexandrov_equivalences(fx(name));
    CHECK(r == AlexandrovReport{true, true, true});
  }
}

TEST_CASE("locally_finite_decomposition") {
  CHECK(locally_finite_decomposition(fx("line_3")));
  CHECK(locally_finite_decomposition(fx("quadrant_4")));
  CHECK(locally_finite_decomposition(Decomposition::pointwise(FiniteSpace::discrete({}))));
}

TEST_CASE("frontier_equivalences") {
  const auto q = frontier_equivalences(fx("quadrant_4"));
  CHECK(q.frontier_condition);
  CHECK(q.closure_is_min_closed_union);
  CHECK(q.preorder_matches_closure);
  CHECK(q.pi_open);

  for (auto name : {"line_3", "pseudo_circle_4"}) {
    const auto r = frontier_equivalences(fx(name));
    CHECK_FALSE(r.frontier_condition);
    CHECK_FALSE(r.closure_is_min_closed_union);
    CHECK_FALSE(r.preorder_matches_closure);
    CHECK_FALSE(r.pi_open);
    CHECK_FALSE(r.witnesses.empty());
  }
  CHECK(frontier_equivalences(fx("pseudo_circle_4")).witnesses.at("frontier_condition") ==
        "stratum 1 meets closure(2) at x but is not contained in it");
}

TEST_CASE("poset_stratified_equivalences") {
  for (auto name : {"line_3", "quadrant_4"}) {
    const auto r = poset_stratified_equivalences(fx(name));
    CHECK(r.exists_partial_order);
    CHECK(r.preorder_partial_and_continuous);
    CHECK(r.strata_open_in_closed_union);
    CHECK(r.search_result == std::optional<bool>(true));
  }
  const auto pc = poset_stratified_equivalences(fx("pseudo_circle_4"));
  CHECK_FALSE(pc.exists_partial_order);
  CHECK_FALSE(pc.preorder_partial_and_continuous);
  CHECK_FALSE(pc.strata_open_in_closed_union);
}

TEST_CASE("is_stratification") {
  CHECK(is_stratification(fx("quadrant_4")).value);
  const auto l = is_stratification(fx("line_3"));
  CHECK_FALSE(l.value);
  CHECK(l.reasons == std::vector<std::string>{"frontier condition fails"});
  const auto pc = is_stratification(fx("pseudo_circle_4"));
  CHECK_FALSE(pc.value);
  CHECK(pc.reasons == std::vector<std::string>{"frontier condition fails"});

  // The closed-open-closed pattern on a chain: {c0, c2} is not locally closed.
  const auto c = alexandrov_space(Proset::chain({"c0", "c1", "c2"}));
  const Decomposition bad(c, {"a", "b"}, {c.subset({"c0", "c2"}), c.subset({"c1"})});
  const auto v = is_stratification(bad);
  CHECK_FALSE(v.value);
  CHECK(std::find(v.reasons.begin(), v.reasons.end(), "stratum a is not locally closed") != v.reasons.end());
}

TEST_CASE("check_poset_stratified_wrt") {
  const auto q = fx("quadrant_4");
  const auto w = check_poset_stratified_wrt(q, diamond());
  CHECK((w.continuous && w.surjective && w.open));

  const auto chain = Poset(Proset::chain({"0", "1", "2", "3"}));
  const auto c = check_poset_stratified_wrt(q, chain);
  CHECK(c.continuous);
  CHECK(c.surjective);
  CHECK_FALSE(c.open);

  const auto l = check_poset_stratified_wrt(fx("line_3"), order({"0", "1"}, {{"1", "0"}}));
  CHECK_FALSE(l.continuous);

  CHECK_THROWS_AS(check_poset_stratified_wrt(q, order({"0", "1"}, {})), InputError);
}

TEST_CASE("restrict_order_to_strata") {
  const auto l = fx("line_3");
  auto [kept, dropped] = restrict_order_to_strata(order({"0", "1", "extra"}, {{"0", "1"}, {"1", "extra"}}), l);
  CHECK(kept.elements() == std::vector<std::string>{"0", "1"});
  CHECK(kept.leq(0, 1));
  CHECK(dropped == std::vector<std::string>{"extra"});
  CHECK_THROWS_AS(restrict_order_to_strata(order({"0"}, {}), l), InputError);
}

TEST_CASE("coarsen") {
  const auto pc = coarsen(fx("pseudo_circle_4"));
  CHECK(pc.coarse.stratum_count() == 1);
  CHECK(pc.coarse.stratum(0) == pc.coarse.space().all());
  CHECK(pc.stratification.order().size() == 1);

  const auto q = fx("quadrant_4");
  const auto cq = coarsen(q);
  CHECK(cq.coarse == q);
  CHECK(cq.stratification.order() == diamond());

  for (const auto& p : enumerate_posets(3)) {
    const auto d = Decomposition::pointwise(alexandrov_space(p.proset()));
    CHECK(coarsen(d).coarse == d);
  }
}

TEST_CASE("theorem_A") {
  CHECK(theorem_A(fx("quadrant_4")).order() == diamond());
  const auto c = theorem_A(fx("chain_3"));
  CHECK(c.order().proset() == Proset::chain({"c0", "c1", "c2"}));
  CHECK_THROWS_WITH_AS(theorem_A(fx("line_3")), doctest::Contains("frontier condition fails"), PreconditionError);
}

TEST_CASE("theorem_B") {
  const PosetStratification q(fx("quadrant_4"), diamond());
  const auto v = theorem_B(q);
  CHECK(v.stratification);
  CHECK(v.identity_monotone);

  const PosetStratification l(fx("line_3"), order({"0", "1"}, {{"0", "1"}}));
  CHECK_THROWS_AS(theorem_B(l), PreconditionError);

  CHECK_THROWS_AS(PosetStratification(fx("line_3"), order({"0", "1"}, {{"1", "0"}})), PreconditionError);
}

TEST_CASE("theorem_B exhaustive on three points") {
  std::size_t confirmed = 0;
  for (const auto& p : enumerate_preorders(3)) {
    const auto x = alexandrov_space(p);
    for (const auto& part : enumerate_partitions(3)) {
      const auto d = Decomposition::from_partition(x, part);
      for (const auto& o : enumerate_posets(numbered(d.stratum_count()))) {
        const auto w = check_poset_stratified_wrt(d, o);
        if (!(w.continuous && w.open)) continue;
        CHECK(theorem_B(PosetStratification(d, o)).stratification);
        CHECK(is_stratification(d).value);
        ++confirmed;
      }
    }
  }
  CHECK(confirmed > 0);
}

TEST_CASE("initial_order_check") {
  const auto two = initial_order_check(fx("two_point_discrete"));
  CHECK(two.size() == 3);
  const auto pre = decomposition_preorder(fx("two_point_discrete"));
  for (const auto& o : two) CHECK(pre.contained_in(o.proset()));

  const auto l = initial_order_check(fx("line_3"));
  REQUIRE(l.size() == 1);
  CHECK(l.front().leq(0, 1));

  const auto q = initial_order_check(fx("quadrant_4"));
  std::size_t refinements = 0;
  for (const auto& o : enumerate_posets(numbered(4))) {
    if (diamond().proset().contained_in(o.proset())) ++refinements;
  }
  CHECK(q.size() == refinements);

  CHECK_THROWS_AS(initial_order_check(fx("pseudo_circle_4")), PreconditionError);
}

TEST_CASE("refinement_never_open") {
  CHECK(refinement_never_open(fx("chain_3")) == 0);
  CHECK(refinement_never_open(fx("quadrant_4")) > 0);
  CHECK(refinement_never_open(fx("two_point_discrete")) == 2);
}

TEST_CASE("semicontinuity") {
  CHECK(semicontinuity(fx("line_3")) == SemicontinuityReport{false, true, false, true});
  CHECK(semicontinuity(fx("quadrant_4")) == SemicontinuityReport{true, true, true, true});
  CHECK(semicontinuity(fx("pseudo_circle_4")) == SemicontinuityReport{false, false, false, false});

  SUBCASE("agrees with the definitions on three points") {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& fam : brute::all_topologies(n)) {
        const auto x = FiniteSpace::from_open_sets(brute::names(n), fam);
        for (const auto& part : enumerate_partitions(n)) {
          const auto d = Decomposition::from_partition(x, part);
          const auto k = d.stratum_count();
          const auto qf = brute::quotient(fam, d.pi(), k);
          const auto r = semicontinuity(d);
          CHECK(r.pi_open == brute::open_map(fam, qf, d.pi()));
          CHECK(r.pi_closed == brute::closed_map(fam, n, qf, k, d.pi()));
          CHECK(r.sat_open_open == r.pi_open);
          CHECK(r.sat_closed_closed == r.pi_closed);
        }
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(fx("quadrant_4")).verdict == Ladder::stratification);
  CHECK(classify(fx("chain_3")).verdict == Ladder::stratification);
  CHECK(classify(fx("line_3")).verdict == Ladder::poset_stratified);
  const auto pc = classify(fx("pseudo_circle_4"));
  CHECK(pc.verdict == Ladder::alexandrov);
  CHECK(pc.locally_closed == std::map<std::string, bool>{{"1", true}, {"2", true}});

  for (auto l : {Ladder::decomposition, Ladder::alexandrov, Ladder::poset_stratified, Ladder::stratification}) {
    CHECK(parse_ladder(to_string(l)) == l);
  }
  CHECK_THROWS_AS(parse_ladder("manifold"), InputError);
}

TEST_CASE("a stratification is poset-stratified over its preorder everywhere on three points") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& p : enumerate_preorders(n)) {
      const auto x = alexandrov_space(p);
      for (const auto& part : enumerate_partitions(n)) {
        const auto d = Decomposition::from_partition(x, part);
        if (!is_stratification(d).value) continue;
        const auto ps = theorem_A(d);
        for (std::size_t i = 0; i < d.stratum_count(); ++i) {
          for (std::size_t j = 0; j < d.stratum_count(); ++j) {
            CHECK(ps.order().leq(i, j) == d.stratum(i).subset_of(x.closure(d.stratum(j))));
          }
        }
      }
    }
  }
}
