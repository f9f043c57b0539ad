#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "stratkit/decomposition.hpp"
#include "stratkit/enumerate.hpp"

namespace stratkit {

struct PassFail {
  std::size_t pass = 0;
  std::size_t fail = 0;
  friend bool operator==(const PassFail&, const PassFail&) = default;
};

struct SweepReport {
  std::size_t points = 0;
  std::size_t spaces = 0;
  std::size_t partitions = 0;
  std::size_t instances = 0;
  /// Instances that are stratifications / poset-stratified, for context.
  std::size_t stratifications = 0;
  std::size_t poset_stratified = 0;
  /// (instance, partial order) pairs run through Theorem B.
  std::size_t theorem_b_checks = 0;
  std::size_t refinements_tested = 0;
  /// Per proposition; pass + fail = number of instances it applied to.
  std::map<std::string, PassFail> checks;
  /// First failing instance as canonical decomposition JSON, with its check.
  std::optional<std::string> first_counterexample;
  std::optional<std::string> first_failed_check;

  std::size_t failures() const;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Runs every equivalence and theorem check over all (preorder space,
/// partition) pairs on n labeled points. Bounded to n <= 4 unless
/// STRATKIT_MAX_POINTS is set.
SweepReport exhaustive_verify(std::size_t n);

/// Runs the per-instance checks on one decomposition and records them.
void verify_instance(const Decomposition& d, SweepReport& report);

/// Space-level checks (adjunction, singleton local closure, closure and
/// open-cover reconstruction) for one preorder.
void verify_space(const Proset& p, SweepReport& report);

}  // namespace stratkit
