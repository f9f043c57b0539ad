#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stratkit/order.hpp"

namespace stratkit {

enum class EnumKind { preorders, posets, partitions };

/// A set partition of {0, ..., n-1} as a restricted growth string:
/// block[x] is the index of x's block, blocks numbered by first occurrence.
using Partition = std::vector<std::size_t>;

/// Elements "0", ..., "n-1".
std::vector<std::string> numbered(std::size_t n);

/// Every labeled preorder on `elements`, each exactly once, ordered by the
/// bit pattern of the strict relation. Bounded to 4 elements unless
/// STRATKIT_MAX_POINTS is set.
std::vector<Proset> enumerate_preorders(const std::vector<std::string>& elements);
std::vector<Proset> enumerate_preorders(std::size_t n);

/// The antisymmetric subset of enumerate_preorders, in the same order.
std::vector<Poset> enumerate_posets(const std::vector<std::string>& elements);
std::vector<Poset> enumerate_posets(std::size_t n);

/// Every set partition of an n-set in lexicographic RGS order. Bounded to 6.
std::vector<Partition> enumerate_partitions(std::size_t n);

std::size_t block_count(const Partition& p);

/// Item count for a kind and size (runs the enumeration).
std::size_t enumeration_count(EnumKind kind, std::size_t n);

}  // namespace stratkit
