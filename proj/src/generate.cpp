#include <numeric>

#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"

namespace stratkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

namespace {

Proset random_preorder(std::size_t n, double density, SplitMix64& rng) {
  std::vector<PointSet> up(n);
  for (std::size_t a = 0; a < n; ++a) {
    up[a].insert(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (rng.uniform() < density) up[a].insert(b);
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  const auto names = numbered(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : up[a]) pairs.emplace_back(names[a], names[b]);
  }
  return Proset::from_relation(names, pairs, true);
}

}  // namespace

Document generate(GenKind kind, std::size_t n, const GenParams& params, std::uint64_t seed) {
  if (n > kMaxPoints) throw InputError("n must be at most 64");
  if (!(params.density >= 0.0 && params.density <= 1.0)) throw InputError("density must lie in [0, 1]");
  SplitMix64 rng(seed);

  if (kind == GenKind::preorder) return ProsetDocument{random_preorder(n, params.density, rng)};

  const std::size_t k = params.k == 0 ? n : params.k;
  if (k > n) throw InputError("partition needs k <= n");
  const double ambient = params.density_set ? params.density : 0.0;
  const FiniteSpace space = alexandrov_space(random_preorder(n, ambient, rng));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::size_t> label(n, 0);
  for (std::size_t r = 0; r < n; ++r) label[order[r]] = r < k ? r : static_cast<std::size_t>(rng.below(k));

  // Canonical relabeling by first occurrence.
  std::vector<std::size_t> remap(k, k);
  std::size_t next = 0;
  Partition blocks(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (remap[label[x]] == k) remap[label[x]] = next++;
    blocks[x] = remap[label[x]];
  }
  return Decomposition::from_partition(space, blocks);
}

}  // namespace stratkit
