#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rmac {

/// Input outside an operation's domain (bad n, mismatched sizes, wrong complex type).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called before the certificate it depends on was established.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two routes that must agree did not; signals an arithmetic or construction bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size cap would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Faces or features a routine does not handle (3-cells, non-quadrilateral walks).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Default ceiling on the ambient coordinate count of a built complex.
inline constexpr int kDefaultAmbientCap = 20;
/// Hard limit imposed by the 32-bit cell masks.
inline constexpr int kMaxAmbient = 30;

using Mask = std::uint32_t;

inline constexpr Mask bit(int coord) { return Mask{1} << coord; }

inline constexpr Mask low_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

/// base^exp, throwing InternalError on signed 64-bit overflow.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw DomainError("checked_pow: negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && (result > std::numeric_limits<std::int64_t>::max() / base ||
                      result < std::numeric_limits<std::int64_t>::min() / base)) {
      throw InternalError("checked_pow: overflow computing " + std::to_string(base) + "^" +
                          std::to_string(exp));
    }
    result *= base;
  }
  return result;
}

inline std::int64_t pow2(int exp) {
  if (exp < 0 || exp > 62) throw DomainError("pow2: exponent out of range");
  return std::int64_t{1} << exp;
}

}  // namespace rmac
