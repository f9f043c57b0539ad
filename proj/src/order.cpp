#include "stratkit/order.hpp"

#include <algorithm>
#include <set>

#include "stratkit/errors.hpp"

namespace stratkit {

namespace {

void check_elements(const std::vector<std::string>& elements) {
  if (elements.size() > kMaxPoints) {
    throw LimitError("proset has " + std::to_string(elements.size()) + " elements; at most 64 are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw InputError("element names must be nonempty");
    if (!seen.insert(e).second) throw InputError("duplicate element '" + e + "'");
  }
}

// Warshall on bit rows.
void transitive_close(std::vector<PointSet>& up) {
  for (std::size_t k = 0; k < up.size(); ++k) {
    for (auto& row : up) {
      if (row.contains(k)) row |= up[k];
    }
  }
}

}  // namespace

Proset Proset::from_relation(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& pairs, bool close) {
  check_elements(elements);
  Proset p;
  p.elements_ = std::move(elements);
  p.up_.assign(p.size(), PointSet{});
  for (const auto& [a, b] : pairs) p.up_[p.index_of(a)].insert(p.index_of(b));
  if (close) {
    for (std::size_t i = 0; i < p.size(); ++i) p.up_[i].insert(i);
    transitive_close(p.up_);
    return p;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.up_[i].contains(i)) throw InputError("relation is not reflexive: missing (" + p.name(i) + ", " + p.name(i) + ")");
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b : p.up_[a]) {
      const PointSet missing = p.up_[b] - p.up_[a];
      if (!missing.empty()) {
        throw InputError("relation is not transitive: (" + p.name(a) + ", " + p.name(b) + ") and (" + p.name(b) +
                         ", " + p.name(missing.front()) + ") without (" + p.name(a) + ", " +
                         p.name(missing.front()) + ")");
      }
    }
  }
  return p;
}

Proset Proset::from_up_sets(std::vector<std::string> elements, std::vector<PointSet> up) {
  check_elements(elements);
  if (up.size() != elements.size()) throw InputError("one up-set per element is required");
  const PointSet all = PointSet::full(elements.size());
  for (std::size_t a = 0; a < up.size(); ++a) {
    if (!up[a].subset_of(all) || !up[a].contains(a)) throw InputError("up-set of '" + elements[a] + "' is invalid");
    for (std::size_t b : up[a]) {
      if (!up[b].subset_of(up[a])) throw InputError("relation is not transitive at '" + elements[a] + "'");
    }
  }
  Proset p;
  p.elements_ = std::move(elements);
  p.up_ = std::move(up);
  return p;
}

Proset Proset::discrete(std::vector<std::string> elements) {
  std::vector<PointSet> up;
  for (std::size_t i = 0; i < elements.size(); ++i) up.push_back(PointSet::single(i));
  return from_up_sets(std::move(elements), std::move(up));
}

Proset Proset::chain(std::vector<std::string> elements) {
  std::vector<PointSet> up;
  const PointSet all = PointSet::full(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) up.push_back(all - PointSet::full(i));
  return from_up_sets(std::move(elements), std::move(up));
}

std::optional<std::size_t> Proset::find(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Proset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown element '" + std::string(name) + "'");
}

PointSet Proset::down_set(std::size_t a) const {
  PointSet d;
  for (std::size_t q = 0; q < size(); ++q) {
    if (leq(q, a)) d.insert(q);
  }
  return d;
}

bool Proset::contained_in(const Proset& other) const {
  if (elements_ != other.elements_) throw InputError("relation comparison needs identical element lists");
  for (std::size_t a = 0; a < size(); ++a) {
    if (!up_[a].subset_of(other.up_[a])) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Proset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : up_[a]) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

PosetCheck is_poset(const Proset& p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p.equivalent(a, b)) return {false, std::pair{a, b}};
    }
  }
  return {};
}

Poset::Poset(Proset p) : p_(std::move(p)) {
  if (auto c = is_poset(p_); !c.value) {
    throw InputError("relation is not antisymmetric: " + p_.name(c.witness->first) + " <= " +
                     p_.name(c.witness->second) + " <= " + p_.name(c.witness->first));
  }
}

bool MonotoneMap::is_monotone() const {
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b : source.up_set(a)) {
      if (!target.leq(assignment[a], assignment[b])) return false;
    }
  }
  return true;
}

FiniteSpace alexandrov_space(const Proset& p) {
  return FiniteSpace::from_min_open(p.elements(), p.up_sets());
}

Proset specialization_preorder(const FiniteSpace& space) {
  const std::size_t n = space.size();
  // x <= y iff x in closure{y}; row x collects such y.
  std::vector<PointSet> by_closure(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x : space.closure(PointSet::single(y))) by_closure[x].insert(y);
  }
  if (by_closure != space.min_open_map()) {
    throw DefectError("specialization preorder: closure and minimal-neighbourhood routes disagree");
  }
  return Proset::from_up_sets(space.points(), std::move(by_closure));
}

AdjunctionReport adjunction_roundtrips(const Proset& p, const FiniteSpace& x) {
  AdjunctionReport r;
  r.unit_identity = specialization_preorder(alexandrov_space(p)) == p;
  r.counit_homeomorphism = alexandrov_space(specialization_preorder(x)) == x;
  return r;
}

Reflection poset_reflection(const Proset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> reps;  // first-occurring member of each class
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] != n) continue;
    const std::size_t c = reps.size();
    reps.push_back(a);
    for (std::size_t b = a; b < n; ++b) {
      if (p.equivalent(a, b)) cls[b] = c;
    }
  }
  std::vector<std::string> names;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::string least;
    for (std::size_t a = 0; a < n; ++a) {
      if (cls[a] == c && (least.empty() || p.name(a) < least)) least = p.name(a);
    }
    names.push_back(least);
  }
  std::vector<PointSet> up(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t b : p.up_set(reps[c])) up[c].insert(cls[b]);
  }
  Proset q = Proset::from_up_sets(std::move(names), std::move(up));
  Reflection r{Poset(q), MonotoneMap{p, q, cls}};
  if (!r.quotient.is_monotone()) throw DefectError("poset reflection: quotient map is not monotone");
  return r;
}

std::pair<PointSet, PointSet> up_down_sets(const Proset& p, std::string_view e) {
  const std::size_t i = p.index_of(e);
  return {p.up_set(i), p.down_set(i)};
}

bool singleton_locally_closed_check(const Proset& p) {
  const bool antisymmetric = is_poset(p).value;
  const FiniteSpace space = alexandrov_space(p);
  bool all_lc = true;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!is_locally_closed(space, PointSet::single(i)).value) {
      all_lc = false;
      break;
    }
  }
  if (antisymmetric != all_lc) {
    throw DefectError("singleton local closure disagrees with antisymmetry");
  }
  return antisymmetric;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const Poset& poset) {
  const Proset& p = poset.proset();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const PointSet above = p.up_set(a) - PointSet::single(a);
    for (std::size_t b : above) {
      bool between = false;
      for (std::size_t c : above) {
        if (c != b && p.leq(c, b)) {
          between = true;
          break;
        }
      }
      if (!between) covers.emplace_back(a, b);
    }
  }
  return covers;
}

LocalFiniteness symbolic_local_finiteness(SymbolicFamily f) {
  switch (f) {
    case SymbolicFamily::nat_usual:
      return {false, true, "[p, inf) = {p, p+1, ...} is infinite", "[p, q] has q - p + 1 elements"};
    case SymbolicFamily::nat_opposite:
      return {true, true, "up-sets under the reversed order are {0, ..., p}",
              "[p, q] under the reversed order is {q, ..., p}"};
    case SymbolicFamily::nat_discrete:
      return {true, true, "every up-set is the singleton {p}", "every interval is empty or a singleton"};
  }
  throw InputError("unknown symbolic family");
}

SymbolicFamily parse_symbolic_family(std::string_view tag) {
  if (tag == "nat_usual") return SymbolicFamily::nat_usual;
  if (tag == "nat_opposite") return SymbolicFamily::nat_opposite;
  if (tag == "nat_discrete") return SymbolicFamily::nat_discrete;
  throw InputError("unknown symbolic family '" + std::string(tag) + "'");
}

std::string_view to_string(SymbolicFamily f) {
  switch (f) {
    case SymbolicFamily::nat_usual: return "nat_usual";
    case SymbolicFamily::nat_opposite: return "nat_opposite";
    case SymbolicFamily::nat_discrete: return "nat_discrete";
  }
  return "?";
}

LocalFiniteness finite_local_finiteness(const Proset& p) {
  const std::string why = "finite set of " + std::to_string(p.size()) + " elements";
  return {true, true, why, why};
}

}  // namespace stratkit
