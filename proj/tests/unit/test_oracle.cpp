#include "support.hpp"

#include "d3twist/oracle.hpp"

using namespace d3twist;

namespace {

DistanceMap<DynnikovPlane> dynnikov_ball(std::size_t depth, unsigned threads = 1) {
  CayleySpec<DynnikovPlane> spec;
  spec.seeds = DynnikovPlane::terminal_set();
  spec.depth_limit = depth;
  spec.threads = threads;
  return bfs_distances(DynnikovPlane{}, spec);
}

}  // namespace

TEST_CASE("distances from the terminal curves") {
  auto map = dynnikov_ball(5);
  CHECK(map.distance({10, 3}) == 5u);
  CHECK(map.distance({0, 1}) == 0u);
  CHECK(map.distance({1, 0}) == 1u);
  CHECK(map.distance({3, 10}) == 4u);
  CHECK_FALSE(map.distance({100, 1}).has_value());
  CHECK(map.component({10, 3}) == DynnikovCoord{0, 1});
  CHECK(map.component({3, 10}) == DynnikovCoord{-1, 0});
}

TEST_CASE("BFS is the same with one thread or four") {
  auto one = dynnikov_ball(7, 1);
  auto four = dynnikov_ball(7, 4);
  REQUIRE(one.size() == four.size());
  for (const auto& [v, visit] : one.visits) {
    auto it = four.visits.find(v);
    REQUIRE(it != four.visits.end());
    CHECK(it->second.distance == visit.distance);
    CHECK(it->second.seed == visit.seed);
  }
  CHECK(one.component_count() == four.component_count());
}

TEST_CASE("neighbouring vertices differ by at most one and every vertex has a parent") {
  auto map = dynnikov_ball(7);
  DynnikovPlane plane;
  for (const auto& [v, visit] : map.visits) {
    bool parent = visit.distance == 0;
    for (const auto& s : plane.steps(v)) {
      // generator edges are undirected: the inverse step leads back
      bool back = false;
      for (const auto& t : plane.steps(s.target)) back = back || t.target == v;
      CHECK(back);
      auto d = map.distance(s.target);
      if (!d) {
        CHECK(visit.distance == 7u);
        continue;
      }
      CHECK(*d + 1 >= visit.distance);
      CHECK(visit.distance + 1 >= *d);
      parent = parent || *d + 1 == visit.distance;
    }
    CHECK(parent);
  }
}

TEST_CASE("distance equals untwisting length and ECF length") {
  auto map = dynnikov_ball(8);
  for (const auto& [v, visit] : map.visits) {
    CHECK(untwist(v).word.size() == visit.distance);
    CHECK(conjugation_length(v) == Integer(visit.distance));
  }
}

TEST_CASE("the vertex budget is enforced") {
  CayleySpec<DynnikovPlane> spec;
  spec.seeds = DynnikovPlane::terminal_set();
  spec.depth_limit = 10;
  spec.max_vertices = 1000;
  CHECK_THROWS_AS(bfs_distances(DynnikovPlane{}, spec), ResourceLimit);
  spec.seeds = {{2, 0}};
  spec.max_vertices = 1000;
  CHECK_THROWS_AS(bfs_distances(DynnikovPlane{}, spec), InvalidInput);
}

TEST_CASE("three Dynnikov orbits and five torus orbits") {
  for (int box : {2, 5, 20}) {
    DynnikovCensus d = dynnikov_census(box);
    CHECK(d.ok(3));
    CHECK(d.counts.size() == 3);
    TorusCensus t = torus_census(box);
    CHECK(t.ok(5));
    CHECK(t.counts.size() == 5);
  }
  CHECK(torus_orbit_class({2, 1}) == TorusOrbit::PEvenQ1);
  CHECK(torus_orbit_class({1, 1}) == torus_orbit_class({3, 5}));
  CHECK(classify({0, 1}) == classify({10, 3}));
  CHECK_THROWS_AS(torus_orbit_class({2, 4}), InvalidInput);
}

TEST_CASE("a broken twist is caught by the census") {
  DynnikovPlane broken;
  broken.twist = [](Generator g, const DynnikovCoord& d) {
    DynnikovCoord x = apply_twist(g, d);
    return g == Generator::Tc && d.a > 3 && d.b == 1 ? DynnikovCoord{x.a, x.b + 2} : x;
  };
  CHECK_FALSE(dynnikov_census(10, broken).ok(3));
}

TEST_CASE("torus graph: trees around the even lifts, one square around (1,1)") {
  for (TorusCoord seed : {TorusCoord{1, 0}, TorusCoord{-1, 0}, TorusCoord{0, 1}, TorusCoord{0, -1}}) {
    auto r = find_simple_cycles(TorusPlane{}, seed, 6);
    CHECK(r.cycles.empty());
    CHECK(r.cyclomatic_number == 0);
    CHECK(r.edges + 1 == r.vertices);
  }
  auto r = find_simple_cycles(TorusPlane{}, TorusCoord{1, 1}, 6);
  CHECK(r.cyclomatic_number == 1);
  REQUIRE(r.cycles.size() == 1);
  REQUIRE(r.cycles[0].vertices.size() == 4);
  for (const auto& v : r.cycles[0].vertices) {
    CHECK(abs(v.p) == 1);
    CHECK(abs(v.q) == 1);
  }
  CHECK_FALSE(r.truncated);

  Mat2 loop = four_cycle_matrix();
  CHECK(loop == Mat2{5, -4, 4, -3});
  CHECK(loop * TorusCoord{1, 1} == TorusCoord{1, 1});
}

TEST_CASE("the depth-6 ball around (1,0) has 3^6 branching") {
  auto r = find_simple_cycles(TorusPlane{}, TorusCoord{1, 0}, 6);
  // (1,0) is fixed by U^2, so it has two neighbours; every other vertex has four.
  std::size_t expected = 1, layer = 2;
  for (int k = 1; k <= 6; ++k, layer *= 3) expected += layer;
  CHECK(r.vertices == expected);
}

TEST_CASE("phi covers the Cayley graphs two-to-one") {
  CoveringReport report = check_covering(20);
  CHECK(report.ok());
  CHECK(report.two_to_one);
  CHECK(report.compared > 0);

  CayleySpec<TorusPlane> tspec;
  tspec.seeds = TorusPlane::terminal_set();
  tspec.depth_limit = 6;
  auto torus = bfs_distances(TorusPlane{}, tspec);
  CHECK(torus.distance({13, -10}) == 5u);
  CHECK(torus.distance({-13, 10}) == 5u);
  CHECK(phi({1, 0}) == phi({-1, 0}));
  CHECK(projected_class(torus_orbit_class({1, 1})) == CurveClass::E);
  CHECK(projected_class(torus_orbit_class({0, 1})) == CurveClass::D);
  CHECK(projected_class(torus_orbit_class({1, 0})) == CurveClass::C);
}

TEST_CASE("plane names") {
  CHECK(parse_plane("torus") == PlaneKind::Torus);
  CHECK(parse_plane(to_string(PlaneKind::Dynnikov)) == PlaneKind::Dynnikov);
  CHECK_THROWS_AS(parse_plane("sphere"), InvalidInput);
}
