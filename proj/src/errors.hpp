#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zz {

// Input could not be parsed or references unknown ids.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A presentation fails its axioms; carries one message per violation.
struct axiom_error : std::runtime_error {
  std::vector<std::string> violations;
  explicit axiom_error(std::vector<std::string> vs)
      : std::runtime_error(vs.empty() ? std::string("axiom violation")
                                      : vs.front()),
        violations(std::move(vs)) {}
};

// A precondition on an operation's arguments does not hold
// (NotComposable, LengthMismatch, BoundaryMismatch, ...).
struct arg_error : std::runtime_error {
  explicit arg_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested dimension or feature outside the supported range.
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace zz
