#include "d3twist/untwist.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>

#include "d3twist/ecf.hpp"

namespace d3twist {

std::string_view to_string(CurveClass k) {
  switch (k) {
    case CurveClass::C: return "c";
    case CurveClass::D: return "d";
    case CurveClass::E: return "e";
  }
  return "?";
}

CurveClass parse_curve_class(std::string_view text) {
  for (CurveClass k : kCurveClasses) {
    if (to_string(k) == text) return k;
  }
  throw InvalidInput("unknown curve class '" + std::string(text) + "'");
}

DynnikovCoord coords_of(CurveClass k) {
  switch (k) {
    case CurveClass::C: return {0, 1};
    case CurveClass::D: return {0, -1};
    case CurveClass::E: return {-1, 0};
  }
  return {0, 1};
}

bool is_terminal(const DynnikovCoord& d) {
  return d == coords_of(CurveClass::C) || d == coords_of(CurveClass::D) || d == coords_of(CurveClass::E);
}

namespace {

Generator quadrant_step(const DynnikovCoord& d) {
  const int sa = sign(d.a), sb = sign(d.b);
  if (sa > 0 && sb > 0) return Generator::Tc;
  if (sa < 0 && sb > 0) return Generator::TcInv;
  if (sa < 0 && sb < 0) return Generator::Td;
  return Generator::TdInv;  // a > 0 > b
}

}  // namespace

UntwistResult untwist(const DynnikovCoord& d) {
  require_essential(d, "untwist");
  UntwistResult out;
  out.trajectory.push_back(d);
  DynnikovCoord cur = d;
  std::optional<Generator> previous;
  const DynnikovCoord one_zero{1, 0};

  while (!is_terminal(cur)) {
    Generator g;
    if (cur == one_zero) {
      if (!previous) {
        g = Generator::TdInv;
      } else if (*previous == Generator::Tc || *previous == Generator::TdInv) {
        g = *previous;
      } else {
        // t_c^-1 and t_d only reach (1,0) from (-1,0), which is terminal.
        throw std::logic_error("untwist: reached (1,0) by " + std::string(to_string(*previous)));
      }
    } else {
      // Primitive vectors with a zero coordinate are (0,+-1) and (+-1,0).
      assert(cur.a != 0 && cur.b != 0);
      g = quadrant_step(cur);
    }
    cur = apply_twist(g, cur);
    out.word.letters.push_back(g);
    out.trajectory.push_back(cur);
    previous = g;
  }
  out.terminal = cur;
  return out;
}

CurveClass classify(const DynnikovCoord& d) {
  require_essential(d, "classify");
  if (is_even(d.b)) return CurveClass::E;
  // (-1)^a b > 0  <=>  a even and b > 0, or a odd and b < 0.
  const bool positive = is_even(d.a) == (d.b > 0);
  return positive ? CurveClass::C : CurveClass::D;
}

Integer conjugation_length(const DynnikovCoord& d) {
  require_essential(d, "conjugation_length");
  const auto& [a, b] = d;
  return b >= 0 ? ecf_length(abs(a) + b, -a) : ecf_length(a, b - abs(a));
}

Conjugator conjugator(const DynnikovCoord& d) {
  UntwistResult r = untwist(d);
  for (CurveClass k : kCurveClasses) {
    if (coords_of(k) == r.terminal) return {std::move(r.word), k};
  }
  throw std::logic_error("conjugator: untwist ended outside {c,d,e}");
}

bool twists_conjugate(const DynnikovCoord& d1, const DynnikovCoord& d2) { return classify(d1) == classify(d2); }

}  // namespace d3twist
