#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "d3twist/coords.hpp"

namespace d3twist {

/// 2x2 integer matrix acting on column vectors (p,q).
struct Mat2 {
  Integer m11{1}, m12{0}, m21{0}, m22{1};

  static Mat2 identity() { return {}; }
  static Mat2 upper(const Integer& k) { return {1, k, 0, 1}; }  // U^k
  static Mat2 lower(const Integer& k) { return {1, 0, k, 1}; }  // L^k

  Integer det() const { return m11 * m22 - m12 * m21; }
  Mat2 operator*(const Mat2& o) const;
  TorusCoord operator*(const TorusCoord& v) const;
  Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Level-2 congruence subgroup: odd diagonal, even off-diagonal.
/// Throws InvalidInput unless det(m) == 1.
bool in_gamma2(const Mat2& m);
/// The index-two subgroup of Gamma(2) with diagonal entries = 1 (mod 4),
/// freely generated by U^2 and L^2.
bool in_gamma2_bar(const Mat2& m);

/// Even continued fraction m/n = [q0, ..., qr] or [q0, ..., qr, 1]
/// (the latter flagged by trailing_one) together with the terminal vector
/// the modified Euclid division reaches: (0,e), (e,0) or (e,e).
struct EcfExpansion {
  std::vector<Integer> quotients;
  bool trailing_one = false;
  int epsilon = 1;
  TorusCoord terminal;
  // Set only for mn = -1, the one input with two admissible expansions.
  bool ambiguous = false;

  /// Half the sum of |qi|.
  Integer length() const;
  friend bool operator==(const EcfExpansion&, const EcfExpansion&) = default;
};

std::string to_string(const EcfExpansion& e);

/// Modified Euclid: each division uses the even quotient nearest to the
/// ratio, so remainders stay strictly smaller and parities of both
/// components are preserved. Requires gcd(m,n) == 1.
EcfExpansion ecf_expand(const Integer& m, const Integer& n);

Integer ecf_length(const Integer& m, const Integer& n);

/// Evaluates a continued fraction as a projective pair (num, den); the
/// empty list evaluates to (1,0).
std::pair<Integer, Integer> evaluate_continued_fraction(const std::vector<Integer>& quotients, bool trailing_one);

struct Factorization {
  std::vector<Mat2> factors;  // U^{q0}, L^{q1}, U^{q2}, ...
  TorusCoord terminal;

  Mat2 product() const;
};

/// (m,n) = U^{q0} L^{q1} U^{q2} ... terminal.
Factorization factorize(const Integer& m, const Integer& n);

/// Postconditions of ecf_expand and factorize for one coprime pair, checked
/// by evaluating the fraction and multiplying the factors out. Returns a
/// description of every violated condition; empty means the pair passes.
std::vector<std::string> ecf_contract_violations(const Integer& m, const Integer& n);

}  // namespace d3twist
