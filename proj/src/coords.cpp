#include "d3twist/coords.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace d3twist {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidInput("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InvalidInput("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return x.convert_to<std::int64_t>();
}

void require_nonzero(const DynnikovCoord& d, const char* what) {
  if (d.is_zero()) throw InvalidInput(std::string(what) + ": Dynnikov coordinates (0,0) do not label a curve");
}

void require_nonzero(const TorusCoord& t, const char* what) {
  if (t.is_zero()) throw InvalidInput(std::string(what) + ": torus class (0,0) does not label a curve");
}

DynnikovCoord phi(const TorusCoord& t) {
  require_nonzero(t, "phi");
  const auto& [p, q] = t;
  return {(abs(p - q) - abs(p + q)) / 2, abs(p) - abs(q)};
}

TorusCoord phi_inverse(const DynnikovCoord& d) {
  require_nonzero(d, "phi_inverse");
  const auto& [a, b] = d;
  TorusCoord t = b >= 0 ? TorusCoord{abs(a) + b, -a} : TorusCoord{a, b - abs(a)};
  return t.canonical();
}

CurveKind curve_kind(const DynnikovCoord& d) {
  require_nonzero(d, "curve_kind");
  TorusCoord lift = phi_inverse(d);
  Integer g = gcd(lift.p, lift.q);
  if (g == 1) return {CurveTag::Essential, 1, d};
  return {CurveTag::Multicurve, g, phi({lift.p / g, lift.q / g})};
}

bool is_essential(const DynnikovCoord& d) {
  return !d.is_zero() && curve_kind(d).essential();
}

void require_essential(const DynnikovCoord& d, const char* what) {
  require_nonzero(d, what);
  CurveKind kind = curve_kind(d);
  if (!kind.essential()) {
    throw InvalidInput(std::string(what) + ": " + to_string(d) + " is a multicurve of multiplicity " +
                       to_string(kind.multiplicity) + ", not an essential curve");
  }
}

std::string to_string(const DynnikovCoord& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::string to_string(const TorusCoord& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DynnikovCoord& d) {
  return os << '(' << d.a << ',' << d.b << ')';
}

std::ostream& operator<<(std::ostream& os, const TorusCoord& t) {
  return os << '(' << t.p << ',' << t.q << ')';
}

}  // namespace d3twist
