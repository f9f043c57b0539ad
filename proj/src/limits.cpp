#include <cstdlib>
#include <string>

#include "stratkit/errors.hpp"
#include "stratkit/point_set.hpp"

namespace stratkit {

namespace {
constexpr std::size_t kDefaultFinalTopologyLimit = 20;

const char* override_value() {
  const char* v = std::getenv("STRATKIT_MAX_POINTS");
  return (v != nullptr && *v != '\0') ? v : nullptr;
}
}  // namespace

std::size_t final_topology_limit() {
  const char* v = override_value();
  if (v == nullptr) return kDefaultFinalTopologyLimit;
  try {
    std::size_t used = 0;
    const unsigned long n = std::stoul(v, &used);
    if (used != std::string(v).size()) throw InputError("");
    return n > kMaxPoints ? kMaxPoints : static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw InputError(std::string("STRATKIT_MAX_POINTS is not a non-negative integer: ") + v);
  }
}

bool limits_overridden() { return override_value() != nullptr; }

}  // namespace stratkit
