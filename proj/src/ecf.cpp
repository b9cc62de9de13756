#include "d3twist/ecf.hpp"

#include <sstream>

namespace d3twist {
namespace {

void require_coprime(const Integer& m, const Integer& n, const char* what) {
  if (m == 0 && n == 0) throw InvalidInput(std::string(what) + ": (0,0) has no continued fraction");
  if (gcd(m, n) != 1) {
    throw InvalidInput(std::string(what) + ": " + to_string(m) + " and " + to_string(n) + " are not coprime");
  }
}

// Even integer q with |x - q*y| < |y|; x/y must not be an odd integer.
Integer nearest_even_quotient(Integer x, Integer y) {
  if (y < 0) {
    x = -x;
    y = -y;
  }
  return 2 * floor_div(x + y, 2 * y);
}

void require_unimodular(const Mat2& m) {
  if (m.det() != 1) {
    std::ostringstream os;
    os << "matrix " << m << " has determinant " << m.det() << ", expected 1";
    throw InvalidInput(os.str());
  }
}

}  // namespace

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
          m21 * o.m12 + m22 * o.m22};
}

TorusCoord Mat2::operator*(const TorusCoord& v) const {
  return {m11 * v.p + m12 * v.q, m21 * v.p + m22 * v.q};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.m11 << ',' << m.m12 << "],[" << m.m21 << ',' << m.m22 << "]]";
}

bool in_gamma2(const Mat2& m) {
  require_unimodular(m);
  return !is_even(m.m11) && !is_even(m.m22) && is_even(m.m12) && is_even(m.m21);
}

bool in_gamma2_bar(const Mat2& m) { return in_gamma2(m) && mod4(m.m11) == 1 && mod4(m.m22) == 1; }

Integer EcfExpansion::length() const {
  Integer sum = 0;
  for (const auto& q : quotients) sum += abs(q);
  return sum / 2;
}

std::string to_string(const EcfExpansion& e) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < e.quotients.size(); ++i) os << (i ? "," : "") << e.quotients[i];
  if (e.trailing_one) os << (e.quotients.empty() ? "1" : ",1");
  os << ']';
  return os.str();
}

EcfExpansion ecf_expand(const Integer& m, const Integer& n) {
  require_coprime(m, n, "ecf_expand");
  EcfExpansion out;

  if (m * n == -1) {
    // -1 = [-2,1]: U^{-2} carries (e,e) to (m,n) with e = n.
    out.quotients = {-2};
    out.trailing_one = true;
    out.epsilon = sign(n);
    out.terminal = {n, n};
    out.ambiguous = true;
    return out;
  }

  Integer x = m, y = n;
  // Even steps divide x by y, odd steps divide y by x. The first division
  // always runs unless n == 0, so 0 = [0] and 1 = [0,1].
  for (bool divide_x = true; y != 0; divide_x = !divide_x) {
    if (!out.quotients.empty() && (x == 0 || x == y)) break;
    const Integer& num = divide_x ? x : y;
    const Integer& den = divide_x ? y : x;
    Integer q;
    if (abs(den) == 1 && !is_even(num)) {
      // num/den is an odd integer k: one more step lands on (e,e) with q = (k - e)/e.
      q = (num - den) * den;
    } else {
      q = nearest_even_quotient(num, den);
    }
    if (divide_x)
      x -= q * y;
    else
      y -= q * x;
    out.quotients.push_back(std::move(q));
  }

  out.terminal = {x, y};
  out.trailing_one = x == y;
  out.epsilon = x != 0 ? sign(x) : sign(y);
  return out;
}

Integer ecf_length(const Integer& m, const Integer& n) { return ecf_expand(m, n).length(); }

std::pair<Integer, Integer> evaluate_continued_fraction(const std::vector<Integer>& quotients, bool trailing_one) {
  // Fold from the tail: [.., q, tail] = q + 1/tail, with tail = h/k kept projectively.
  Integer h = 1, k = trailing_one ? 1 : 0;
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    Integer nh = *it * h + k;
    k = std::move(h);
    h = std::move(nh);
  }
  return {h, k};
}

Mat2 Factorization::product() const {
  Mat2 acc;
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

Factorization factorize(const Integer& m, const Integer& n) {
  EcfExpansion e = ecf_expand(m, n);
  Factorization out;
  out.terminal = e.terminal;
  for (std::size_t i = 0; i < e.quotients.size(); ++i) {
    out.factors.push_back(i % 2 == 0 ? Mat2::upper(e.quotients[i]) : Mat2::lower(e.quotients[i]));
  }
  return out;
}

std::vector<std::string> ecf_contract_violations(const Integer& m, const Integer& n) {
  std::vector<std::string> out;
  const std::string where = "(" + to_string(m) + "," + to_string(n) + "): ";
  EcfExpansion e = ecf_expand(m, n);
  const auto& qs = e.quotients;
  const bool odd_odd = !is_even(m) && !is_even(n);

  auto [num, den] = evaluate_continued_fraction(qs, e.trailing_one);
  if (num * n != den * m || gcd(num, den) != 1) out.push_back(where + "expansion " + to_string(e) + " evaluates elsewhere");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (!is_even(qs[i])) out.push_back(where + "odd quotient at index " + std::to_string(i));
    if (i > 0 && qs[i] == 0) out.push_back(where + "zero quotient at index " + std::to_string(i));
  }
  if (e.trailing_one != odd_odd) out.push_back(where + "trailing 1 flag disagrees with parity of mn");
  if (e.trailing_one && !qs.empty() && qs.back() == -2 && m * n != -1)
    out.push_back(where + "last even quotient is -2");
  if (!odd_odd && !is_even(Integer(qs.size()) - 1 - m)) out.push_back(where + "r and m differ in parity");

  const Integer eps = e.epsilon;
  TorusCoord expected_terminal = is_even(m) && !odd_odd   ? TorusCoord{0, eps}
                                 : is_even(n) && !odd_odd ? TorusCoord{eps, 0}
                                                          : TorusCoord{eps, eps};
  if (e.terminal != expected_terminal) out.push_back(where + "terminal " + to_string(e.terminal) + " has the wrong shape");
  if (is_even(m) && !odd_odd && mod4(n - eps) != 0) out.push_back(where + "epsilon not congruent to n mod 4");
  if (is_even(n) && !odd_odd && mod4(m - eps) != 0) out.push_back(where + "epsilon not congruent to m mod 4");

  Factorization f = factorize(m, n);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Mat2& x = f.factors[i];
    const bool shape = i % 2 == 0 ? (x == Mat2::upper(x.m12)) : (x == Mat2::lower(x.m21));
    if (!shape) out.push_back(where + "factor " + std::to_string(i) + " is not a transvection of the right kind");
  }
  if (f.product() * f.terminal != TorusCoord{m, n}) out.push_back(where + "factor product misses (m,n)");
  return out;
}

}  // namespace d3twist
