#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratkit {

/// Malformed or invalid input: unknown names, broken invariants, parse errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard was exceeded (enumeration bound, final-topology bound, 64 points).
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

/// A theorem's or operation's precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independently computed sides of an equivalence disagree.
/// This always indicates a library defect, never bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reads the size guard shared by final-topology filtering and the
/// enumeration oracle. Default 20; STRATKIT_MAX_POINTS overrides it.
std::size_t final_topology_limit();

/// True when STRATKIT_MAX_POINTS is set, lifting the fixed enumeration bounds.
bool limits_overridden();

}  // namespace stratkit
