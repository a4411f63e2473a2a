// errors.hpp
//
// Error taxonomy for the engine. Two failure classes matter to callers:
//
//  * DomainError      — the request itself is inadmissible (wrong parity,
//                       gcd condition violated, malformed composition, ...).
//                       The message always names the violated condition.
//  * PrecisionError   — a truncated Laurent-series computation could not
//                       resolve the requested quantity.  Exact inputs never
//                       raise this; it exists so that truncated arithmetic
//                       fails loudly instead of silently returning an
//                       unflagged approximation.
//
// The CLI maps DomainError to exit code 2 and everything unexpected to a
// nonzero generic failure.

#pragma once

#include <stdexcept>
#include <string>

namespace springer {

class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace springer
