#pragma once

#include <string_view>
#include <vector>

#include "d3twist/actions.hpp"
#include "d3twist/coords.hpp"

namespace d3twist {

/// Conjugacy classes of Dehn twists, represented by the curves
/// c = (0,1), d = (0,-1), e = (-1,0).
enum class CurveClass { C, D, E };

inline constexpr CurveClass kCurveClasses[] = {CurveClass::C, CurveClass::D, CurveClass::E};

std::string_view to_string(CurveClass k);
CurveClass parse_curve_class(std::string_view text);
DynnikovCoord coords_of(CurveClass k);
bool is_terminal(const DynnikovCoord& d);

struct UntwistResult {
  TwistWord word;
  std::vector<DynnikovCoord> trajectory;  // input first, terminal last
  DynnikovCoord terminal;
};

/// Greedy untwisting by the sign quadrant of (a,b):
///   a,b > 0 -> t_c;  a < 0 < b -> t_c^-1;  a,b < 0 -> t_d;  b < 0 < a -> t_d^-1.
/// From (1,0) one more twist reaches e, repeating the previous letter
/// (t_c or t_d^-1), or t_d^-1 when (1,0) is the input.
/// The word has minimal length among all words carrying d into {c,d,e}.
UntwistResult untwist(const DynnikovCoord& d);

/// E if b is even, C if b is odd and (-1)^a b > 0, D otherwise.
CurveClass classify(const DynnikovCoord& d);

/// ECF length of p/q for the lift (|a|+b, -a) when b >= 0, (a, b-|a|) when b < 0.
Integer conjugation_length(const DynnikovCoord& d);

struct Conjugator {
  TwistWord word;  // application order; the mapping class is its reversed composition
  CurveClass target;
};

/// x with x t_d x^-1 = t_target, certified at the curve level:
/// apply_word(word, d) == coords_of(target).
Conjugator conjugator(const DynnikovCoord& d);

bool twists_conjugate(const DynnikovCoord& d1, const DynnikovCoord& d2);

}  // namespace d3twist
