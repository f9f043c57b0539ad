#pragma once

// Brute-force oracles over explicit open families. Nothing here goes through
// the minimal-neighbourhood representation used by the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "stratkit/order.hpp"
#include "stratkit/point_set.hpp"
#include "stratkit/topology.hpp"

namespace brute {

using stratkit::PointSet;
using Family = std::vector<PointSet>;

inline std::vector<PointSet> all_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(PointSet{b});
  return out;
}

inline bool contains(const Family& f, PointSet s) { return std::find(f.begin(), f.end(), s) != f.end(); }

/// Every topology on n labeled points, by filtering all families of subsets
/// against the axioms. Feasible for n <= 4.
inline std::vector<Family> all_topologies(std::size_t n) {
  const auto subsets = all_subsets(n);
  const PointSet all = PointSet::full(n);
  std::vector<Family> out;
  const std::uint64_t families = std::uint64_t{1} << subsets.size();
  for (std::uint64_t m = 0; m < families; ++m) {
    if (!((m >> 0) & 1u) || !((m >> all.bits()) & 1u)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < subsets.size() && ok; ++a) {
      if (!((m >> a) & 1u)) continue;
      for (std::size_t b = a + 1; b < subsets.size() && ok; ++b) {
        if (!((m >> b) & 1u)) continue;
        const auto u = (subsets[a] | subsets[b]).bits();
        const auto i = (subsets[a] & subsets[b]).bits();
        if (!((m >> u) & 1u) || !((m >> i) & 1u)) ok = false;
      }
    }
    if (!ok) continue;
    Family f;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      if ((m >> a) & 1u) f.push_back(subsets[a]);
    }
    out.push_back(f);
  }
  return out;
}

/// The open family of a library space, read off by the derived membership
/// rule. Used only to bridge a library value into the oracle.
inline Family family_of(const stratkit::FiniteSpace& s) {
  Family f;
  for (auto b : all_subsets(s.size())) {
    if (s.is_open(b)) f.push_back(b);
  }
  return f;
}

inline Family closed_sets(const Family& f, std::size_t n) {
  Family c;
  for (auto o : f) c.push_back(o.complement(n));
  return c;
}

/// Intersection of all closed supersets.
inline PointSet closure(const Family& f, std::size_t n, PointSet s) {
  PointSet c = PointSet::full(n);
  for (auto k : closed_sets(f, n)) {
    if (s.subset_of(k)) c &= k;
  }
  return c;
}

/// Union of all open subsets.
inline PointSet interior(const Family& f, PointSet s) {
  PointSet in;
  for (auto o : f) {
    if (o.subset_of(s)) in |= o;
  }
  return in;
}

/// Exists open O and closed C with S = O and C.
inline bool locally_closed(const Family& f, std::size_t n, PointSet s) {
  for (auto o : f) {
    for (auto c : closed_sets(f, n)) {
      if ((o & c) == s) return true;
    }
  }
  return false;
}

inline PointSet image(const std::vector<std::size_t>& f, PointSet s) {
  PointSet out;
  for (auto x : s) out.insert(f[x]);
  return out;
}

inline PointSet preimage(const std::vector<std::size_t>& f, PointSet t) {
  PointSet out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (t.contains(f[x])) out.insert(x);
  }
  return out;
}

inline bool continuous(const Family& src, const Family& dst, const std::vector<std::size_t>& f) {
  return std::all_of(dst.begin(), dst.end(), [&](PointSet o) { return contains(src, preimage(f, o)); });
}

inline bool open_map(const Family& src, const Family& dst, const std::vector<std::size_t>& f) {
  return std::all_of(src.begin(), src.end(), [&](PointSet o) { return contains(dst, image(f, o)); });
}

inline bool closed_map(const Family& src, std::size_t n_src, const Family& dst, std::size_t n_dst,
                       const std::vector<std::size_t>& f) {
  const auto dst_closed = closed_sets(dst, n_dst);
  for (auto c : closed_sets(src, n_src)) {
    if (!contains(dst_closed, image(f, c))) return false;
  }
  return true;
}

/// Quotient family: J open iff its preimage is open.
inline Family quotient(const Family& f, const std::vector<std::size_t>& pi, std::size_t k) {
  Family q;
  for (auto j : all_subsets(k)) {
    if (contains(f, preimage(pi, j))) q.push_back(j);
  }
  return q;
}

/// Every map {0..n-1} -> {0..m-1}.
inline std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n, 0);
  if (m == 0) {
    if (n == 0) out.push_back(cur);
    return out;
  }
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == m) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Naive preorder count: all 2^(n*n) relations filtered for reflexivity and
/// transitivity.
inline std::size_t naive_preorder_count(std::size_t n, bool posets_only) {
  std::size_t count = 0;
  const std::size_t cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    auto rel = [&](std::size_t a, std::size_t b) { return ((m >> (a * n + b)) & 1u) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = rel(a, a);
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (rel(a, b) && rel(b, c) && !rel(a, c)) ok = false;
        }
        if (posets_only && a != b && rel(a, b) && rel(b, a)) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Second route: close every relation, keep distinct results.
inline std::size_t closure_dedupe_count(std::size_t n) {
  std::set<std::vector<std::uint64_t>> seen;
  const std::size_t cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) r[a][b] = a == b || ((m >> (a * n + b)) & 1u);
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) r[a][b] = r[a][b] || (r[a][k] && r[k][b]);
      }
    }
    std::vector<std::uint64_t> key;
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t bits = 0;
      for (std::size_t b = 0; b < n; ++b) bits |= static_cast<std::uint64_t>(r[a][b] ? 1 : 0) << b;
      key.push_back(bits);
    }
    seen.insert(key);
  }
  return seen.size();
}

/// Bell numbers by the recursive set-partition count.
inline std::size_t partition_count(std::size_t n) {
  // B(n+1) = sum C(n,k) B(k)
  std::vector<std::size_t> bell{1};
  for (std::size_t m = 0; m < n; ++m) {
    std::size_t next = 0, binom = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      next += binom * bell[k];
      binom = binom * (m - k) / (k + 1);
    }
    bell.push_back(next);
  }
  return bell[n];
}

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

}  // namespace brute
