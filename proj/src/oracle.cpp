#include "d3twist/oracle.hpp"

#include <stdexcept>

namespace d3twist {

std::string_view to_string(PlaneKind p) { return p == PlaneKind::Dynnikov ? "dynnikov" : "torus"; }

PlaneKind parse_plane(std::string_view text) {
  if (text == "dynnikov") return PlaneKind::Dynnikov;
  if (text == "torus") return PlaneKind::Torus;
  throw InvalidInput("unknown plane '" + std::string(text) + "' (expected dynnikov or torus)");
}

std::string_view to_string(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Tc: return "tc";
    case EdgeLabel::Td: return "td";
    case EdgeLabel::U2: return "U2";
    case EdgeLabel::L2: return "L2";
  }
  return "?";
}

std::string_view to_string(TorusOrbit o) {
  switch (o) {
    case TorusOrbit::PEvenQ1: return "p even, q = 1 mod 4";
    case TorusOrbit::PEvenQ3: return "p even, q = -1 mod 4";
    case TorusOrbit::QEvenP1: return "q even, p = 1 mod 4";
    case TorusOrbit::QEvenP3: return "q even, p = -1 mod 4";
    case TorusOrbit::OddOdd: return "p, q odd";
  }
  return "?";
}

TorusOrbit torus_orbit_class(const TorusCoord& v) {
  if (!TorusPlane::valid(v)) throw InvalidInput("torus_orbit_class: " + to_string(v) + " is not primitive");
  if (is_even(v.p)) return mod4(v.q) == 1 ? TorusOrbit::PEvenQ1 : TorusOrbit::PEvenQ3;
  if (is_even(v.q)) return mod4(v.p) == 1 ? TorusOrbit::QEvenP1 : TorusOrbit::QEvenP3;
  return TorusOrbit::OddOdd;
}

CurveClass projected_class(TorusOrbit o) {
  switch (o) {
    case TorusOrbit::PEvenQ1:
    case TorusOrbit::PEvenQ3: return CurveClass::D;  // phi(0,+-1) = (0,-1)
    case TorusOrbit::QEvenP1:
    case TorusOrbit::QEvenP3: return CurveClass::C;  // phi(+-1,0) = (0,1)
    case TorusOrbit::OddOdd: return CurveClass::E;   // phi(+-1,+-1) = (-1,0)
  }
  return CurveClass::E;
}

namespace {

CurveClass terminal_class(const DynnikovCoord& root) {
  for (CurveClass k : kCurveClasses) {
    if (coords_of(k) == root) return k;
  }
  throw std::logic_error("component root " + to_string(root) + " is not in {c,d,e}");
}

}  // namespace

DynnikovCensus dynnikov_census(const Integer& box, const DynnikovPlane& plane) {
  if (box < 1) throw InvalidInput("dynnikov_census: box must be >= 1");
  CayleySpec<DynnikovPlane> spec;
  spec.seeds = DynnikovPlane::terminal_set();
  spec.window = 2 * box;
  auto map = bfs_distances(plane, spec);

  DynnikovCensus census;
  census.box = box;
  census.components = map.component_count();
  for (Integer a = -box; a <= box; ++a) {
    for (Integer b = -box; b <= box; ++b) {
      DynnikovCoord v{a, b};
      if (!DynnikovPlane::valid(v)) continue;
      ++census.vertices;
      auto root = map.component(v);
      if (!root) {
        ++census.unresolved;
        if (census.counterexamples.size() < 8) census.counterexamples.push_back("unreached " + to_string(v));
        continue;
      }
      CurveClass label = terminal_class(*root);
      ++census.counts[label];
      CurveClass predicted = classify(v);
      if (predicted != label) {
        ++census.mismatches;
        if (census.counterexamples.size() < 8) {
          census.counterexamples.push_back(to_string(v) + " lies in the component of " + to_string(*root) +
                                           " but classifies as " + std::string(to_string(predicted)));
        }
      }
      census.members.emplace_back(std::move(v), label);
    }
  }
  return census;
}

TorusCensus torus_census(const Integer& box) {
  if (box < 1) throw InvalidInput("torus_census: box must be >= 1");
  CayleySpec<TorusPlane> spec;
  spec.seeds = TorusPlane::terminal_set();
  spec.window = box;
  auto map = bfs_distances(TorusPlane{}, spec);

  TorusCensus census;
  census.box = box;
  census.components = map.component_count();
  for (Integer p = -box; p <= box; ++p) {
    for (Integer q = -box; q <= box; ++q) {
      TorusCoord v{p, q};
      if (!TorusPlane::valid(v)) continue;
      ++census.vertices;
      auto root = map.component(v);
      if (!root) {
        ++census.unresolved;
        if (census.counterexamples.size() < 8) census.counterexamples.push_back("unreached " + to_string(v));
        continue;
      }
      TorusOrbit label = torus_orbit_class(*root);
      ++census.counts[label];
      TorusOrbit predicted = torus_orbit_class(v);
      if (predicted != label) {
        ++census.mismatches;
        if (census.counterexamples.size() < 8) {
          census.counterexamples.push_back(to_string(v) + " lies in the component of " + to_string(*root) +
                                           " but has parity class '" + std::string(to_string(predicted)) + "'");
        }
      }
      census.members.emplace_back(std::move(v), label);
    }
  }
  return census;
}

Mat2 four_cycle_matrix() {
  const Mat2 u2 = Mat2::upper(2), l2inv = Mat2::lower(-2);
  return u2 * l2inv * u2 * l2inv;
}

CoveringReport check_covering(const Integer& box, std::size_t depth_limit, const DynnikovPlane& plane) {
  if (box < 1) throw InvalidInput("check_covering: box must be >= 1");
  CoveringReport report;
  report.box = box;

  CayleySpec<TorusPlane> tspec;
  tspec.seeds = TorusPlane::terminal_set();
  tspec.window = box;
  tspec.depth_limit = depth_limit;
  auto torus = bfs_distances(TorusPlane{}, tspec);

  CayleySpec<DynnikovPlane> dspec;
  dspec.seeds = DynnikovPlane::terminal_set();
  dspec.window = box;
  dspec.depth_limit = depth_limit;
  auto dyn = bfs_distances(plane, dspec);

  auto note = [&](std::string msg) {
    if (report.counterexamples.size() < 8) report.counterexamples.push_back(std::move(msg));
  };

  std::size_t torus_reached = 0;
  for (Integer p = -box; p <= box; ++p) {
    for (Integer q = -box; q <= box; ++q) {
      TorusCoord v{p, q};
      if (!TorusPlane::valid(v)) continue;
      ++report.torus_vertices;
      DynnikovCoord image = phi(v);
      auto td = torus.distance(v);
      auto dd = dyn.distance(image);
      torus_reached += td.has_value();
      if (td.has_value() != dd.has_value()) {
        ++report.reach_mismatches;
        note("reach: torus " + to_string(v) + (td ? " reached" : " unreached") + ", Dynnikov " +
             to_string(image) + (dd ? " reached" : " unreached"));
        continue;
      }
      if (!td) continue;
      ++report.compared;
      if (*td != *dd) {
        ++report.distance_mismatches;
        note("distance: torus " + to_string(v) + " at " + std::to_string(*td) + ", Dynnikov " + to_string(image) +
             " at " + std::to_string(*dd));
      }
      if (depth_limit == kUnlimitedDepth && Integer(*td) != ecf_length(p, q)) {
        ++report.formula_mismatches;
        note("formula: torus " + to_string(v) + " at distance " + std::to_string(*td) + ", ECF length " +
             to_string(ecf_length(p, q)));
      }
      CurveClass expected = projected_class(torus_orbit_class(*torus.component(v)));
      if (terminal_class(*dyn.component(image)) != expected) {
        ++report.component_mismatches;
        note("component: torus " + to_string(v) + " projects into the component of " +
             to_string(*dyn.component(image)));
      }
    }
  }
  for (Integer a = -box; a <= box; ++a) {
    for (Integer b = -box; b <= box; ++b) {
      DynnikovCoord v{a, b};
      if (abs(a) + abs(b) <= box && DynnikovPlane::valid(v)) ++report.dynnikov_vertices;
    }
  }
  report.two_to_one = report.torus_vertices == 2 * report.dynnikov_vertices && torus.size() == 2 * dyn.size() &&
                      torus_reached == torus.size();
  return report;
}

}  // namespace d3twist
