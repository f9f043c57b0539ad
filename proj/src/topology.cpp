#include "stratkit/topology.hpp"

#include <algorithm>

#include "stratkit/errors.hpp"

namespace stratkit {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxPoints) {
    throw LimitError("space has " + std::to_string(n) + " points; at most 64 are supported");
  }
}

void check_enumerable(std::size_t n, const char* what) {
  const std::size_t limit = final_topology_limit();
  if (n > limit) {
    throw LimitError(std::string(what) + " needs 2^" + std::to_string(n) +
                     " subsets; the guard is " + std::to_string(limit) + " (STRATKIT_MAX_POINTS)");
  }
}

std::unordered_map<std::string, std::size_t> build_index(const std::vector<std::string>& points) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].empty()) throw InputError("point names must be nonempty");
    if (!index.emplace(points[i], i).second) throw InputError("duplicate point name '" + points[i] + "'");
  }
  return index;
}

}  // namespace

FiniteSpace FiniteSpace::from_min_open(std::vector<std::string> points, std::vector<PointSet> min_open) {
  check_size(points.size());
  if (min_open.size() != points.size()) throw InputError("min_open must list every point exactly once");
  FiniteSpace s;
  s.index_ = build_index(points);
  s.points_ = std::move(points);
  s.min_open_ = std::move(min_open);
  const PointSet all = s.all();
  for (std::size_t x = 0; x < s.size(); ++x) {
    const PointSet u = s.min_open_[x];
    if (!u.subset_of(all)) throw InputError("min_open of '" + s.points_[x] + "' mentions an unknown point");
    if (!u.contains(x)) throw InputError("min_open of '" + s.points_[x] + "' does not contain the point");
    for (std::size_t y : u) {
      if (!s.min_open_[y].subset_of(u)) {
        throw InputError("min_open of '" + s.points_[x] + "' contains '" + s.points_[y] +
                         "' but not its minimal open neighbourhood");
      }
    }
  }
  return s;
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> points, std::span<const PointSet> generators) {
  check_size(points.size());
  const PointSet all = PointSet::full(points.size());
  std::vector<PointSet> min_open(points.size(), all);
  for (const PointSet g : generators) {
    if (!g.subset_of(all)) throw InputError("generator mentions an unknown point");
    for (std::size_t x : g) min_open[x] &= g;
  }
  return from_min_open(std::move(points), std::move(min_open));
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> points,
                                       const std::vector<std::vector<std::string>>& generators) {
  check_size(points.size());
  const auto index = build_index(points);
  std::vector<PointSet> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    PointSet s;
    for (const auto& p : g) {
      auto it = index.find(p);
      if (it == index.end()) throw InputError("generator mentions unknown point '" + p + "'");
      s.insert(it->second);
    }
    gens.push_back(s);
  }
  return from_subbasis(std::move(points), gens);
}

FiniteSpace FiniteSpace::from_open_sets(std::vector<std::string> points, std::span<const PointSet> opens) {
  check_size(points.size());
  const PointSet all = PointSet::full(points.size());
  std::vector<PointSet> min_open(points.size(), all);
  for (const PointSet o : opens) {
    for (std::size_t x : o) min_open[x] &= o;
  }
  auto space = from_min_open(std::move(points), std::move(min_open));
  std::vector<PointSet> given(opens.begin(), opens.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != space.open_sets()) throw InputError("open family is not a topology");
  return space;
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
  std::vector<PointSet> u;
  for (std::size_t i = 0; i < points.size(); ++i) u.push_back(PointSet::single(i));
  return from_min_open(std::move(points), std::move(u));
}

FiniteSpace FiniteSpace::indiscrete(std::vector<std::string> points) {
  std::vector<PointSet> u(points.size(), PointSet::full(points.size()));
  return from_min_open(std::move(points), std::move(u));
}

std::optional<std::size_t> FiniteSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown point '" + std::string(name) + "'");
}

PointSet FiniteSpace::subset(const std::vector<std::string>& names) const {
  PointSet s;
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::string> FiniteSpace::names(PointSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(points_[i]);
  return out;
}

void FiniteSpace::check_subset(PointSet s) const {
  if (!s.subset_of(all())) throw InputError("subset mentions a point outside the space");
}

bool FiniteSpace::is_open(PointSet s) const {
  check_subset(s);
  for (std::size_t x : s) {
    if (!min_open_[x].subset_of(s)) return false;
  }
  return true;
}

PointSet FiniteSpace::open_hull(PointSet s) const {
  check_subset(s);
  PointSet h;
  for (std::size_t x : s) h |= min_open_[x];
  return h;
}

PointSet FiniteSpace::closure(PointSet s) const {
  check_subset(s);
  PointSet c;
  for (std::size_t x = 0; x < size(); ++x) {
    if (min_open_[x].intersects(s)) c.insert(x);
  }
  return c;
}

PointSet FiniteSpace::interior(PointSet s) const {
  check_subset(s);
  PointSet in;
  for (std::size_t x : s) {
    if (min_open_[x].subset_of(s)) in.insert(x);
  }
  return in;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  check_enumerable(size(), "open-set enumeration");
  std::vector<PointSet> out;
  const std::uint64_t n = std::uint64_t{1} << size();
  for (std::uint64_t b = 0; b < n; ++b) {
    if (is_open(PointSet{b})) out.push_back(PointSet{b});
  }
  return out;
}

bool FiniteSpace::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (min_open_[x] == min_open_[y]) return false;
    }
  }
  return true;
}

LocallyClosed is_locally_closed(const FiniteSpace& space, PointSet s) {
  // The smallest open containing S works whenever any open does.
  const PointSet hull = space.open_hull(s);
  if ((hull & space.closure(s)) == s) return {true, hull};
  return {false, std::nullopt};
}

FiniteSpace subspace(const FiniteSpace& space, PointSet s) {
  if (!s.subset_of(space.all())) throw InputError("subspace: subset mentions a point outside the space");
  std::vector<std::size_t> keep(s.begin(), s.end());
  std::vector<std::size_t> local(space.size(), 0);
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = k;
  std::vector<std::string> names;
  std::vector<PointSet> u;
  for (std::size_t x : keep) {
    names.push_back(space.name(x));
    PointSet r;
    for (std::size_t y : space.min_open(x) & s) r.insert(local[y]);
    u.push_back(r);
  }
  return FiniteSpace::from_min_open(std::move(names), std::move(u));
}

SpaceMap::SpaceMap(FiniteSpace src, FiniteSpace dst, std::vector<std::size_t> assign)
    : source(std::move(src)), target(std::move(dst)), assignment(std::move(assign)) {
  if (assignment.size() != source.size()) throw InputError("map must assign every source point");
  for (std::size_t y : assignment) {
    if (y >= target.size()) throw InputError("map assigns a point outside the target");
  }
}

PointSet SpaceMap::image(PointSet s) const {
  PointSet out;
  for (std::size_t x : s) out.insert(assignment[x]);
  return out;
}

PointSet SpaceMap::preimage(PointSet t) const {
  PointSet out;
  for (std::size_t x = 0; x < assignment.size(); ++x) {
    if (t.contains(assignment[x])) out.insert(x);
  }
  return out;
}

MapCheck map_check(const SpaceMap& f, MapMode mode) {
  switch (mode) {
    case MapMode::continuous:
      // Preimages commute with unions, so basic opens suffice.
      for (std::size_t y = 0; y < f.target.size(); ++y) {
        const PointSet u = f.target.min_open(y);
        if (!f.source.is_open(f.preimage(u))) return {false, u};
      }
      return {};
    case MapMode::open:
      for (std::size_t x = 0; x < f.source.size(); ++x) {
        const PointSet u = f.source.min_open(x);
        if (!f.target.is_open(f.image(u))) return {false, u};
      }
      return {};
    case MapMode::closed:
      // Closed sets are unions of point closures.
      for (std::size_t x = 0; x < f.source.size(); ++x) {
        const PointSet c = f.source.closure(PointSet::single(x));
        if (!f.target.is_closed(f.image(c))) return {false, c};
      }
      return {};
  }
  return {};
}

bool map_check_by_closure(const SpaceMap& f, MapMode mode) {
  if (mode == MapMode::closed) throw InputError("closure criterion is defined for continuous and open only");
  check_enumerable(f.target.size(), "closure criterion");
  const std::uint64_t n = std::uint64_t{1} << f.target.size();
  for (std::uint64_t b = 0; b < n; ++b) {
    const PointSet B{b};
    const PointSet cl_pre = f.source.closure(f.preimage(B));
    const PointSet pre_cl = f.preimage(f.target.closure(B));
    const bool ok = mode == MapMode::continuous ? cl_pre.subset_of(pre_cl) : pre_cl.subset_of(cl_pre);
    if (!ok) return false;
  }
  return true;
}

FiniteSpace final_topology(std::vector<std::string> target_points, std::span<const FamilyMember> family) {
  check_size(target_points.size());
  check_enumerable(target_points.size(), "final topology");
  const std::size_t n = target_points.size();
  for (const auto& m : family) {
    if (m.assignment.size() != m.source.size()) throw InputError("family member must assign every source point");
    for (std::size_t y : m.assignment) {
      if (y >= n) throw InputError("family member assigns a point outside the target");
    }
  }
  std::vector<PointSet> opens;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < total; ++b) {
    const PointSet cand{b};
    const bool ok = std::all_of(family.begin(), family.end(), [&](const FamilyMember& m) {
      PointSet pre;
      for (std::size_t x = 0; x < m.assignment.size(); ++x) {
        if (cand.contains(m.assignment[x])) pre.insert(x);
      }
      return m.source.is_open(pre);
    });
    if (ok) opens.push_back(cand);
  }
  return FiniteSpace::from_open_sets(std::move(target_points), opens);
}

}  // namespace stratkit
