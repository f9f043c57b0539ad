#include <algorithm>
#include <set>

#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"

namespace stratkit {

namespace {

Decomposition named_strata(const FiniteSpace& space,
                           const std::vector<std::pair<std::string, std::vector<std::string>>>& strata) {
  std::vector<std::string> ids;
  std::vector<PointSet> sets;
  for (const auto& [id, pts] : strata) {
    ids.push_back(id);
    sets.push_back(space.subset(pts));
  }
  return Decomposition(space, std::move(ids), std::move(sets));
}

Fixture make(std::string_view name) {
  if (name == "sierpinski") {
    return {"sierpinski", FiniteSpace::from_subbasis({"c", "o"}, {{"o"}}),
            "two points, {o} open and dense, c closed"};
  }
  if (name == "chain_3") {
    return {"chain_3", Decomposition::pointwise(alexandrov_space(Proset::chain({"c0", "c1", "c2"}))),
            "Alexandrov space of the chain c0 < c1 < c2 with the pointwise decomposition"};
  }
  if (name == "pseudo_circle_4") {
    const auto X = FiniteSpace::from_subbasis({"a", "b", "x", "y"}, {{"a"}, {"b"}, {"a", "b", "x"}, {"a", "b", "y"}});
    return {"pseudo_circle_4", named_strata(X, {{"1", {"a", "x"}}, {"2", {"b", "y"}}}),
            "finite model of the circle cut into two half-open arcs: locally closed strata whose "
            "decomposition space is the indiscrete two-point space"};
  }
  if (name == "line_3") {
    const auto X = FiniteSpace::from_subbasis({"m", "z", "p"}, {{"m"}, {"p"}});
    return {"line_3", named_strata(X, {{"0", {"m", "z"}}, {"1", {"p"}}}),
            "finite model of the real line split as (-inf, 0] and (0, inf): poset-stratified over 0 < 1 "
            "but the frontier condition fails"};
  }
  if (name == "quadrant_4") {
    const auto diamond = Proset::from_relation({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}}, true);
    return {"quadrant_4", Decomposition::pointwise(alexandrov_space(diamond)),
            "closed quadrant as corner 0, two boundary rays 1 and 2, open interior 3: the diamond 0 < 1,2 < 3"};
  }
  if (name == "two_point_discrete") {
    return {"two_point_discrete", Decomposition::pointwise(FiniteSpace::discrete({"0", "1"})),
            "discrete pair, pointwise: poset-stratified over each of the three partial orders on two strata"};
  }
  if (name == "nat_usual") {
    return {"nat_usual", SymbolicDocument{SymbolicFamily::nat_usual},
            "naturals with the standard order: locally finite poset, Alexandrov space not locally finite"};
  }
  if (name == "nat_opposite") {
    return {"nat_opposite", SymbolicDocument{SymbolicFamily::nat_opposite}, "naturals with the reversed order"};
  }
  if (name == "nat_discrete") {
    return {"nat_discrete", SymbolicDocument{SymbolicFamily::nat_discrete}, "naturals with the equality order"};
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"chain_3",      "line_3", "nat_discrete", "nat_opposite",      "nat_usual",
          "pseudo_circle_4", "quadrant_4", "sierpinski", "two_point_discrete"};
}

Fixture fixture(std::string_view name) { return make(name); }

FacePosetModel face_poset_model(const std::vector<std::vector<std::string>>& facets) {
  auto by_dim = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::set<std::vector<std::string>, decltype(by_dim)> faces(by_dim);
  for (const auto& facet : facets) {
    std::vector<std::string> verts(facet);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw InputError("empty facet");
    if (verts.size() > 6) throw LimitError("facet has more than 6 vertices; the face poset would exceed 64 faces");
    const std::uint64_t subsets = std::uint64_t{1} << verts.size();
    for (std::uint64_t m = 1; m < subsets; ++m) {
      std::vector<std::string> face;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if ((m >> v) & 1u) face.push_back(verts[v]);
      }
      faces.insert(std::move(face));
      if (faces.size() > kMaxPoints) throw LimitError("face poset exceeds 64 faces");
    }
  }
  std::vector<std::vector<std::string>> list(faces.begin(), faces.end());
  std::vector<std::string> names;
  for (const auto& f : list) {
    std::string n = "{";
    for (std::size_t v = 0; v < f.size(); ++v) n += (v ? "," : "") + f[v];
    names.push_back(n + "}");
  }
  std::vector<PointSet> up(list.size());
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < list.size(); ++b) {
      if (std::includes(list[b].begin(), list[b].end(), list[a].begin(), list[a].end())) up[a].insert(b);
    }
  }
  Poset poset(Proset::from_up_sets(names, std::move(up)));
  FiniteSpace space = alexandrov_space(poset.proset());
  std::size_t max_dim = 0;
  for (const auto& f : list) max_dim = std::max(max_dim, f.size() - 1);
  std::vector<PointSet> strata(list.empty() ? 0 : max_dim + 1);
  for (std::size_t a = 0; a < list.size(); ++a) strata[list[a].size() - 1].insert(a);
  auto ids = numbered(strata.size());
  Decomposition skeleton(space, std::move(ids), std::move(strata));
  return {std::move(poset), std::move(space), std::move(skeleton)};
}

}  // namespace stratkit
