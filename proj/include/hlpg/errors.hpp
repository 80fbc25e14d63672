#pragma once

#include <stdexcept>
#include <string>

namespace hlpg {

// Base for all runtime failures raised by the library. Static problems
// (malformed models, type errors, syntax errors) are reported as
// Diagnostic lists instead and never throw.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation failed: unbound symbol, arithmetic out of range, value not a
// member of the target place type, function argument outside its domain.
struct EvalError : Error {
  using Error::Error;
};

// A configured resource limit was exceeded. Never silently truncates.
struct LimitError : Error {
  using Error::Error;
};

// A firing produced a token on a place that still held it outside the
// consumed part. Only reachable for games that are not contact-free.
struct ContactViolation : Error {
  using Error::Error;
};

} // namespace hlpg
