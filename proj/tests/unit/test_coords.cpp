#include "support.hpp"

#include <set>

#include "d3twist/coords.hpp"

using namespace d3twist;

TEST_CASE("phi on the terminal curves and a long lift") {
  CHECK(phi({1, 0}) == DynnikovCoord{0, 1});
  CHECK(phi({0, 1}) == DynnikovCoord{0, -1});
  CHECK(phi({1, 1}) == DynnikovCoord{-1, 0});
  CHECK(phi({13, -10}) == DynnikovCoord{10, 3});
}

TEST_CASE("phi_inverse returns the canonical lift") {
  CHECK(phi_inverse({10, 3}) == TorusCoord{13, -10});
  CHECK(phi_inverse({-1, 0}) == TorusCoord{1, 1});
  CHECK(phi_inverse({0, 1}) == TorusCoord{1, 0});
  sweep(25, [](const DynnikovCoord& d) { CHECK(phi_inverse(d).is_canonical()); });
}

TEST_CASE("zero coordinates are rejected") {
  CHECK_THROWS_AS(phi(TorusCoord{0, 0}), InvalidInput);
  CHECK_THROWS_AS(phi_inverse(DynnikovCoord{0, 0}), InvalidInput);
  CHECK_THROWS_AS(curve_kind(DynnikovCoord{0, 0}), InvalidInput);
  CHECK_FALSE(is_essential(DynnikovCoord{0, 0}));
}

TEST_CASE("curve kind comes from the torus lift") {
  CurveKind c = curve_kind({0, 1});
  CHECK(c.essential());
  CHECK(c.multiplicity == 1);

  CurveKind m = curve_kind({2, 0});
  CHECK(m.tag == CurveTag::Multicurve);
  CHECK(m.multiplicity == 2);
  CHECK(m.primitive_part == DynnikovCoord{1, 0});

  CHECK(curve_kind({10, 3}).essential());
  CHECK_THROWS_AS(require_essential({2, 0}, "test"), InvalidInput);

  // k copies of an essential curve have multiplicity k
  for (int k = 1; k <= 6; ++k) {
    CurveKind kk = curve_kind(phi({13 * k, -10 * k}));
    CHECK(kk.multiplicity == k);
    CHECK(kk.primitive_part == DynnikovCoord{10, 3});
  }
}

TEST_CASE("round trips and evenness over a box") {
  for (int p = -40; p <= 40; ++p) {
    for (int q = -40; q <= 40; ++q) {
      if (p == 0 && q == 0) continue;
      TorusCoord t{p, q};
      CHECK(phi(t) == phi(-t));
      CHECK(phi_inverse(phi(t)).same_class(t));
    }
  }
  sweep(40, [](const DynnikovCoord& d) { CHECK(phi(phi_inverse(d)) == d); });
}

TEST_CASE("phi is injective on canonical lifts") {
  std::set<std::pair<long, long>> seen;
  std::size_t n = 0;
  for (int p = 0; p <= 30; ++p) {
    for (int q = -30; q <= 30; ++q) {
      TorusCoord t{p, q};
      if (!t.is_canonical()) continue;
      DynnikovCoord d = phi(t);
      CHECK_FALSE(d.is_zero());
      seen.insert({d.a.convert_to<long>(), d.b.convert_to<long>()});
      ++n;
    }
  }
  CHECK(seen.size() == n);
}

TEST_CASE("phi is linear and area preserving on each of the eight sectors") {
  const TorusCoord rays[] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (int i = 0; i < 8; ++i) {
    const TorusCoord& r1 = rays[i];
    const TorusCoord& r2 = rays[(i + 1) % 8];
    DynnikovCoord f1 = phi(r1), f2 = phi(r2);
    Integer det_in = r1.p * r2.q - r1.q * r2.p;
    Integer det_out = f1.a * f2.b - f1.b * f2.a;
    CHECK(abs(det_out) == abs(det_in));
    for (int s = 0; s <= 12; ++s) {
      for (int t = 0; t <= 12; ++t) {
        if (s == 0 && t == 0) continue;
        DynnikovCoord got = phi({s * r1.p + t * r2.p, s * r1.q + t * r2.q});
        CHECK(got == DynnikovCoord{s * f1.a + t * f2.a, s * f1.b + t * f2.b});
      }
    }
  }
}

TEST_CASE("|a| is the smaller of |p|,|q| and a has the sign of -pq") {
  for (int p = -30; p <= 30; ++p) {
    for (int q = -30; q <= 30; ++q) {
      if (p == 0 || q == 0) continue;
      DynnikovCoord d = phi({p, q});
      CHECK(abs(d.a) == std::min(std::abs(p), std::abs(q)));
      CHECK(sign(d.a) == -sign(Integer(p * q)));
    }
  }
}

TEST_CASE("integers beyond 64 bits") {
  Integer big = parse_integer("123456789012345678901234567890");
  CHECK_FALSE(to_int64(big).has_value());
  CHECK(to_int64(Integer(-42)).value() == -42);
  TorusCoord t{big + 1, -big};
  CHECK(phi_inverse(phi(t)).same_class(t));
  CHECK(curve_kind(phi(t)).essential());
  CHECK_THROWS_AS(parse_integer("12x"), InvalidInput);
  CHECK_THROWS_AS(parse_integer(""), InvalidInput);
  CHECK(parse_integer("-7") == -7);
  CHECK(parse_integer("+7") == 7);
}
