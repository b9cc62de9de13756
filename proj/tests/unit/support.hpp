#pragma once

#include <doctest.h>

#include <ostream>

#include "d3twist/coords.hpp"

namespace doctest {
template <>
struct StringMaker<d3twist::DynnikovCoord> {
  static String convert(const d3twist::DynnikovCoord& d) { return d3twist::to_string(d).c_str(); }
};
template <>
struct StringMaker<d3twist::TorusCoord> {
  static String convert(const d3twist::TorusCoord& t) { return d3twist::to_string(t).c_str(); }
};
template <>
struct StringMaker<d3twist::Integer> {
  static String convert(const d3twist::Integer& x) { return x.str().c_str(); }
};
}  // namespace doctest

// Nonzero lattice points of the square |a|,|b| <= r.
template <class F>
void sweep(int r, F f) {
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b)
      if (a != 0 || b != 0) f(d3twist::DynnikovCoord{a, b});
}
