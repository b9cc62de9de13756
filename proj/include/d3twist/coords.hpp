#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "d3twist/integer.hpp"

namespace d3twist {

/// A point of the Dynnikov plane. Every nonzero point labels exactly one
/// multicurve on the three-punctured disk.
struct DynnikovCoord {
  Integer a;
  Integer b;

  bool is_zero() const { return a == 0 && b == 0; }
  DynnikovCoord operator-() const { return {-a, -b}; }
  friend bool operator==(const DynnikovCoord&, const DynnikovCoord&) = default;
};

/// Homology class (p,q) of the lifted multicurve on the one-holed torus.
/// Curves only determine the class up to sign; canonical() picks p > 0,
/// or p == 0 and q > 0.
struct TorusCoord {
  Integer p;
  Integer q;

  bool is_zero() const { return p == 0 && q == 0; }
  bool is_canonical() const { return p > 0 || (p == 0 && q > 0); }
  TorusCoord canonical() const { return is_canonical() ? *this : TorusCoord{-p, -q}; }
  bool is_primitive() const { return gcd(p, q) == 1; }
  TorusCoord operator-() const { return {-p, -q}; }
  friend bool operator==(const TorusCoord&, const TorusCoord&) = default;

  // Equality of the underlying unoriented classes.
  bool same_class(const TorusCoord& o) const { return *this == o || *this == -o; }
};

enum class CurveTag { Essential, Multicurve };

struct CurveKind {
  CurveTag tag;
  Integer multiplicity;
  DynnikovCoord primitive_part;

  bool essential() const { return tag == CurveTag::Essential; }
  friend bool operator==(const CurveKind&, const CurveKind&) = default;
};

/// (p,q) -> ((|p-q| - |p+q|)/2, |p| - |q|). Even in (p,q); two-to-one
/// away from the origin.
DynnikovCoord phi(const TorusCoord& t);

/// Inverse of phi up to sign; the result is canonical().
TorusCoord phi_inverse(const DynnikovCoord& d);

/// Multiplicity is the gcd of the torus lift; the primitive part is the
/// image of the reduced lift.
CurveKind curve_kind(const DynnikovCoord& d);

bool is_essential(const DynnikovCoord& d);

void require_nonzero(const DynnikovCoord& d, const char* what);
void require_nonzero(const TorusCoord& t, const char* what);
void require_essential(const DynnikovCoord& d, const char* what);

std::string to_string(const DynnikovCoord& d);
std::string to_string(const TorusCoord& t);
std::ostream& operator<<(std::ostream& os, const DynnikovCoord& d);
std::ostream& operator<<(std::ostream& os, const TorusCoord& t);

struct DynnikovHash {
  std::size_t operator()(const DynnikovCoord& d) const {
    std::size_t seed = IntegerHash{}(d.a);
    boost::hash_combine(seed, IntegerHash{}(d.b));
    return seed;
  }
};

struct TorusHash {
  std::size_t operator()(const TorusCoord& t) const {
    std::size_t seed = IntegerHash{}(t.p);
    boost::hash_combine(seed, IntegerHash{}(t.q));
    return seed;
  }
};

}  // namespace d3twist
