#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace d3twist {

// Coordinates grow without bound under repeated twisting, so every
// coordinate is an arbitrary precision integer.
using Integer = boost::multiprecision::cpp_int;

// Raised when an operation receives input outside its domain: the zero
// vector, a multicurve where an essential curve is needed, non-coprime
// pairs, non-unimodular matrices.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exploration exceeds its configured vertex budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline int sign(const Integer& x) { return x.sign(); }

inline Integer gcd(const Integer& x, const Integer& y) {
  return boost::multiprecision::gcd(abs(x), abs(y));
}

// Floor division for a nonzero divisor.
inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

inline bool is_even(const Integer& x) { return !boost::multiprecision::bit_test(abs(x), 0); }

// x mod 4 in {0,1,2,3}.
inline int mod4(const Integer& x) {
  Integer r = x % 4;
  if (r < 0) r += 4;
  return r.convert_to<int>();
}

inline std::string to_string(const Integer& x) { return x.str(); }

// Parses a decimal integer with optional sign; throws InvalidInput otherwise.
Integer parse_integer(const std::string& text);

// Returns the value when it fits into int64_t.
std::optional<std::int64_t> to_int64(const Integer& x);

struct IntegerHash {
  std::size_t operator()(const Integer& x) const { return boost::hash<Integer>{}(x); }
};

}  // namespace d3twist
