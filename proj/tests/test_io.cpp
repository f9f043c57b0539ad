#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"

using namespace stratkit;

namespace {

const char* kLine3 = R"({
  "kind": "decomposition",
  "space": {"kind": "space", "points": ["m", "z", "p"], "subbasis": [["m"], ["p"]]},
  "strata": {"1": ["p"], "0": ["z", "m"]}
})";

}  // namespace

TEST_CASE("load and save") {
  SUBCASE("line_3 text gives two strata") {
    const auto d = expect_decomposition(load(kLine3));
    CHECK(d.stratum_count() == 2);
    CHECK(d == expect_decomposition(fixture("line_3").document));
  }
  SUBCASE("save is canonical and idempotent for every fixture") {
    for (const auto& name : fixture_names()) {
      const auto doc = fixture(name).document;
      const std::string once = save(doc);
      CHECK(save(load(once)) == once);
      CHECK(once.back() == '\n');
    }
  }
  SUBCASE("listing order does not change the canonical text") {
    const std::string a = R"({"kind":"proset","elements":["b","a"],"leq_pairs":[["a","b"]]})";
    const std::string b = R"({"leq_pairs":[["a","b"]],"elements":["a","b"],"kind":"proset","close":true})";
    CHECK(save(load(a)) == save(load(b)));
  }
  SUBCASE("fixture reference inside a decomposition") {
    const auto d = load(R"({"kind":"decomposition","space":{"fixture":"sierpinski"},"strata":{"s":["c","o"]}})");
    CHECK(expect_decomposition(d).stratum_count() == 1);
  }
  SUBCASE("map documents round-trip") {
    const std::string text = R"({"kind":"map",
      "source":{"kind":"space","points":["a","b"],"subbasis":[]},
      "target":{"kind":"space","points":["u"],"subbasis":[]},
      "assignment":{"a":"u","b":"u"}})";
    const auto doc = load(text);
    CHECK(kind_of(doc) == "map");
    CHECK(save(load(save(doc))) == save(doc));
  }
  SUBCASE("poset-stratification documents are validated") {
    const std::string malformed = R"({"kind":"poset-stratification","decomposition":{"fixture_doc":1}})";
    CHECK_THROWS_AS(load(malformed), InputError);
    const std::string text = R"({"kind":"poset-stratification",
      "decomposition":{"kind":"decomposition","space":{"fixture":"line_3"},"strata":{"0":["m","z"],"1":["p"]}},
      "order":{"elements":["0","1"],"leq_pairs":[["0","1"]]}})";
    const auto doc = load(text);
    CHECK(kind_of(doc) == "poset-stratification");
    CHECK(save(load(save(doc))) == save(doc));
    const std::string backwards = R"({"kind":"poset-stratification",
      "decomposition":{"kind":"decomposition","space":{"fixture":"line_3"},"strata":{"0":["m","z"],"1":["p"]}},
      "order":{"elements":["0","1"],"leq_pairs":[["1","0"]]}})";
    CHECK_THROWS_AS(load(backwards), InputError);
  }
}

TEST_CASE("load errors") {
  CHECK_THROWS_WITH_AS(load(R"({"kind":"decomposition","space":{"fixture":"line_3"},
    "strata":{"0":["m","z"],"1":["z","p"]}})"),
                       doctest::Contains("strata not disjoint"), InputError);
  CHECK_THROWS_WITH_AS(load("{\n  \"kind\": \"space\",\n  \"points\": [\"a\" \"b\"]\n}"),
                       doctest::Contains("line 3"), InputError);
  CHECK_THROWS_AS(load(R"({"kind":"space","points":["a"],"min_open":{"a":["a"]},"extra":1})"), InputError);
  CHECK_THROWS_AS(load(R"({"kind":"torus"})"), InputError);
  CHECK_THROWS_AS(load(R"({"kind":"space","points":["a"]})"), InputError);
  CHECK_THROWS_AS(load(R"({"kind":"poset","elements":["a","b"],"leq_pairs":[["a","b"],["b","a"]]})"), InputError);
  CHECK_THROWS_AS(expect_decomposition(fixture("sierpinski").document), InputError);
  CHECK_THROWS_AS(expect_order(fixture("sierpinski").document), InputError);
}

TEST_CASE("fixture catalog") {
  const auto pc = expect_decomposition(fixture("pseudo_circle_4").document);
  CHECK(pc.space().size() == 4);
  CHECK(pc.stratum_count() == 2);

  const auto q = expect_decomposition(fixture("quadrant_4").document);
  CHECK(q.space().size() == 4);
  CHECK(q.stratum_count() == 4);
  CHECK(decomposition_preorder(q).strict_pairs().size() == 5);

  CHECK(std::get<SymbolicDocument>(fixture("nat_usual").document).family == SymbolicFamily::nat_usual);
  CHECK_THROWS_AS(fixture("nope"), InputError);
  const auto names = fixture_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const auto& name : fixture_names()) CHECK_FALSE(fixture(name).notes.empty());
}

TEST_CASE("shipped fixture files match the catalog") {
  for (const auto& name : fixture_names()) {
    std::ifstream f(std::string(STRATKIT_FIXTURE_DIR) + "/" + name + ".json");
    REQUIRE_MESSAGE(f.good(), name);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK_MESSAGE(buf.str() == save(fixture(name).document), name);
  }
}

TEST_CASE("face_poset_model") {
  SUBCASE("one edge") {
    const auto m = face_poset_model({{"v0", "v1"}});
    CHECK(m.poset.size() == 3);
    const auto& e = m.poset.proset();
    const auto edge = e.index_of("{v0,v1}");
    CHECK(e.leq(e.index_of("{v0}"), edge));
    CHECK(e.leq(e.index_of("{v1}"), edge));
    CHECK_FALSE(e.leq(edge, e.index_of("{v0}")));
  }
  SUBCASE("triangle boundary") {
    const auto m = face_poset_model({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(m.poset.size() == 6);
    CHECK(m.skeleton.stratum_count() == 2);
    CHECK(is_stratification(m.skeleton).value);
  }
  SUBCASE("single vertex") {
    const auto m = face_poset_model({{"v"}});
    CHECK(m.space.size() == 1);
  }
  SUBCASE("errors") { CHECK_THROWS_AS(face_poset_model({{}}), InputError); }
}

TEST_CASE("generate") {
  GenParams none;
  none.density = 0.0;
  none.density_set = true;
  const auto d0 = std::get<ProsetDocument>(generate(GenKind::preorder, 3, none, 7));
  CHECK(d0.value == Proset::discrete(numbered(3)));

  GenParams all;
  all.density = 1.0;
  all.density_set = true;
  const auto d1 = std::get<ProsetDocument>(generate(GenKind::preorder, 3, all, 7));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(d1.value.leq(a, b));
  }

  for (std::uint64_t seed : {0u, 1u, 42u}) {
    CHECK(save(generate(GenKind::preorder, 5, {}, seed)) == save(generate(GenKind::preorder, 5, {}, seed)));
    GenParams p;
    p.k = 3;
    const auto a = save(generate(GenKind::partition, 6, p, seed));
    CHECK(a == save(generate(GenKind::partition, 6, p, seed)));
    CHECK(expect_decomposition(load(a)).stratum_count() == 3);
  }
  GenParams bad;
  bad.density = 1.5;
  bad.density_set = true;
  CHECK_THROWS_AS(generate(GenKind::preorder, 3, bad, 1), InputError);
  GenParams too_many;
  too_many.k = 4;
  CHECK_THROWS_AS(generate(GenKind::partition, 3, too_many, 1), InputError);

  SplitMix64 r(0);
  CHECK(r.next() == 0xe220a8397b1dcdafULL);
}

TEST_CASE("export_dot") {
  const auto chain = export_dot(Poset(Proset::chain({"0", "1", "2"})));
  CHECK(chain.find("\"0\" -> \"1\"") != std::string::npos);
  CHECK(chain.find("\"1\" -> \"2\"") != std::string::npos);
  CHECK(chain.find("\"0\" -> \"2\"") == std::string::npos);

  const auto q = export_dot(Poset(decomposition_preorder(expect_decomposition(fixture("quadrant_4").document))));
  std::size_t edges = 0;
  for (std::size_t at = q.find("->"); at != std::string::npos; at = q.find("->", at + 2)) ++edges;
  CHECK(edges == 4);

  const auto anti = export_dot(Poset(Proset::discrete({"a", "b"})));
  CHECK(anti.find("->") == std::string::npos);
  CHECK(anti.find("\"a\"") != std::string::npos);

  const auto pc = export_dot(expect_decomposition(fixture("pseudo_circle_4").document));
  CHECK(pc.find("dashed") != std::string::npos);
}

TEST_CASE("classification report JSON round-trip") {
  for (const auto& name : {"line_3", "pseudo_circle_4", "quadrant_4", "chain_3", "two_point_discrete"}) {
    const auto r = classify(expect_decomposition(fixture(name).document));
    const auto j = to_json(r);
    CHECK(classification_from_json(j) == r);
    CHECK(dump_canonical(to_json(classification_from_json(nlohmann::json::parse(dump_canonical(j))))) ==
          dump_canonical(j));
  }
}

TEST_CASE("sweep report JSON round-trip") {
  const auto r = exhaustive_verify(2);
  CHECK(sweep_from_json(to_json(r)) == r);
}
