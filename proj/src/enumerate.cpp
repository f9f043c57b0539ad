#include "stratkit/enumerate.hpp"

#include <functional>

#include "stratkit/errors.hpp"

namespace stratkit {

namespace {

constexpr std::size_t kOrderBound = 4;
constexpr std::size_t kPartitionBound = 6;

void check_bound(std::size_t n, std::size_t bound, const char* what) {
  const std::size_t limit = limits_overridden() ? final_topology_limit() : bound;
  if (n > limit) {
    throw LimitError(std::string(what) + " enumeration is bounded to n <= " + std::to_string(limit) +
                     "; got " + std::to_string(n));
  }
}

}  // namespace

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<Proset> enumerate_preorders(const std::vector<std::string>& elements) {
  const std::size_t n = elements.size();
  check_bound(n, kOrderBound, "preorder");
  // Off-diagonal pairs, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) slots.emplace_back(a, b);
    }
  }
  std::vector<Proset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<PointSet> up(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t a = 0; a < n; ++a) up[a] = PointSet::single(a);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) up[slots[k].first].insert(slots[k].second);
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b : up[a]) {
        if (!up[b].subset_of(up[a])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) out.push_back(Proset::from_up_sets(elements, up));
  }
  return out;
}

std::vector<Proset> enumerate_preorders(std::size_t n) { return enumerate_preorders(numbered(n)); }

std::vector<Poset> enumerate_posets(const std::vector<std::string>& elements) {
  std::vector<Poset> out;
  for (auto& p : enumerate_preorders(elements)) {
    if (is_poset(p).value) out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<Poset> enumerate_posets(std::size_t n) { return enumerate_posets(numbered(n)); }

std::vector<Partition> enumerate_partitions(std::size_t n) {
  check_bound(n, kPartitionBound, "partition");
  std::vector<Partition> out;
  Partition cur(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      cur[pos] = b;
      rec(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return out;
}

std::size_t block_count(const Partition& p) {
  std::size_t k = 0;
  for (std::size_t b : p) k = std::max(k, b + 1);
  return k;
}

std::size_t enumeration_count(EnumKind kind, std::size_t n) {
  switch (kind) {
    case EnumKind::preorders: return enumerate_preorders(n).size();
    case EnumKind::posets: return enumerate_posets(n).size();
    case EnumKind::partitions: return enumerate_partitions(n).size();
  }
  return 0;
}

}  // namespace stratkit
