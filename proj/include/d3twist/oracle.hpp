#pragma once

// Brute-force Cayley graph exploration, used as ground truth for the
// closed-form machinery in actions, ecf and untwist.
//
// Two planes are explored:
//   Dynnikov: essential curves, generators t_c^{+-1}, t_d^{+-1}, seeds {c,d,e}.
//   Torus:    primitive vectors of Z^2, generators U^{+-2}, L^{+-2},
//             seeds the six lifts of {c,d,e}.
// phi maps the torus graph two-to-one onto the Dynnikov graph, with
// U^2 -> t_c and L^2 -> t_d^{-1}.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "d3twist/actions.hpp"
#include "d3twist/coords.hpp"
#include "d3twist/ecf.hpp"
#include "d3twist/untwist.hpp"

namespace d3twist {

enum class PlaneKind { Dynnikov, Torus };

// Undirected edge labels; an edge v -> g(v) and its reverse g^-1 share one.
enum class EdgeLabel { Tc, Td, U2, L2 };

std::string_view to_string(PlaneKind p);
PlaneKind parse_plane(std::string_view text);
std::string_view to_string(EdgeLabel l);

struct DynnikovPlane {
  using Vertex = DynnikovCoord;
  using Hash = DynnikovHash;
  static constexpr PlaneKind kind = PlaneKind::Dynnikov;

  TwistFn twist = apply_twist;

  struct Step {
    Vertex target;
    EdgeLabel label;
  };

  std::array<Step, 4> steps(const Vertex& v) const {
    return {Step{twist(Generator::Tc, v), EdgeLabel::Tc}, Step{twist(Generator::TcInv, v), EdgeLabel::Tc},
            Step{twist(Generator::Td, v), EdgeLabel::Td}, Step{twist(Generator::TdInv, v), EdgeLabel::Td}};
  }
  // |a| + |b|, which equals max(|p|,|q|) of the torus lift.
  static Integer norm(const Vertex& v) { return abs(v.a) + abs(v.b); }
  static bool valid(const Vertex& v) { return is_essential(v); }
  static std::vector<Vertex> terminal_set() {
    return {coords_of(CurveClass::C), coords_of(CurveClass::D), coords_of(CurveClass::E)};
  }
};

struct TorusPlane {
  using Vertex = TorusCoord;
  using Hash = TorusHash;
  static constexpr PlaneKind kind = PlaneKind::Torus;

  struct Step {
    Vertex target;
    EdgeLabel label;
  };

  std::array<Step, 4> steps(const Vertex& v) const {
    return {Step{{v.p + 2 * v.q, v.q}, EdgeLabel::U2}, Step{{v.p - 2 * v.q, v.q}, EdgeLabel::U2},
            Step{{v.p, v.q + 2 * v.p}, EdgeLabel::L2}, Step{{v.p, v.q - 2 * v.p}, EdgeLabel::L2}};
  }
  static Integer norm(const Vertex& v) { return std::max(abs(v.p), abs(v.q)); }
  static bool valid(const Vertex& v) { return !v.is_zero() && v.is_primitive(); }
  // +-(1,0), +-(0,1), +-(1,1): the lifts of c, d, e.
  static std::vector<Vertex> terminal_set() { return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}; }
};

inline constexpr std::size_t kUnlimitedDepth = std::numeric_limits<std::size_t>::max();

template <class Plane>
struct CayleySpec {
  std::vector<typename Plane::Vertex> seeds;
  std::size_t depth_limit = kUnlimitedDepth;
  // Vertices with Plane::norm above the window are not explored.
  std::optional<Integer> window;
  std::size_t max_vertices = 20'000'000;
  unsigned threads = 1;
};

template <class Plane>
struct DistanceMap {
  using Vertex = typename Plane::Vertex;

  struct Visit {
    std::size_t distance;
    std::size_t seed;  // index into seeds of the BFS tree root
  };

  std::vector<Vertex> seeds;
  std::unordered_map<Vertex, Visit, typename Plane::Hash> visits;
  // Union-find over seed indices, merged whenever an edge joins two BFS trees.
  std::vector<std::size_t> seed_parent;
  std::size_t depth_reached = 0;

  std::optional<std::size_t> distance(const Vertex& v) const {
    auto it = visits.find(v);
    if (it == visits.end()) return std::nullopt;
    return it->second.distance;
  }
  std::size_t size() const { return visits.size(); }

  std::size_t seed_group(std::size_t s) const {
    while (seed_parent[s] != s) s = seed_parent[s];
    return s;
  }
  // Seed representing the connected component containing v.
  std::optional<Vertex> component(const Vertex& v) const {
    auto it = visits.find(v);
    if (it == visits.end()) return std::nullopt;
    return seeds[seed_group(it->second.seed)];
  }
  std::size_t component_count() const {
    std::size_t k = 0;
    for (std::size_t s = 0; s < seeds.size(); ++s) k += seed_group(s) == s;
    return k;
  }
};

namespace detail {

template <class Plane>
void link_seeds(DistanceMap<Plane>& map, std::size_t x, std::size_t y) {
  x = map.seed_group(x);
  y = map.seed_group(y);
  if (x != y) map.seed_parent[std::max(x, y)] = std::min(x, y);
}

}  // namespace detail

/// Exact unweighted distances from the seed set. Each level is expanded
/// (in parallel when spec.threads > 1) and merged serially in frontier
/// order, so the result does not depend on the thread count. Fixed points
/// contribute no edge.
template <class Plane>
DistanceMap<Plane> bfs_distances(const Plane& plane, const CayleySpec<Plane>& spec) {
  using Vertex = typename Plane::Vertex;
  if (spec.seeds.empty()) throw InvalidInput("bfs_distances: empty seed set");

  DistanceMap<Plane> map;
  std::vector<Vertex> frontier;
  for (const Vertex& s : spec.seeds) {
    if (!Plane::valid(s)) throw InvalidInput("bfs_distances: invalid seed " + to_string(s));
    if (spec.window && Plane::norm(s) > *spec.window)
      throw InvalidInput("bfs_distances: seed " + to_string(s) + " lies outside the window");
    if (map.visits.count(s)) continue;
    map.visits.emplace(s, typename DistanceMap<Plane>::Visit{0, map.seeds.size()});
    map.seeds.push_back(s);
    frontier.push_back(s);
  }
  map.seed_parent.resize(map.seeds.size());
  std::iota(map.seed_parent.begin(), map.seed_parent.end(), std::size_t{0});

  using Steps = decltype(plane.steps(std::declval<const Vertex&>()));
  std::vector<Steps> expanded;
  const unsigned threads = std::max(1u, spec.threads);

  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    map.depth_reached = depth;
    const bool grow = depth < spec.depth_limit;

    expanded.resize(frontier.size());
    auto expand = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) expanded[i] = plane.steps(frontier[i]);
    };
    if (threads == 1 || frontier.size() < 1024) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
        pool.emplace_back(expand, lo, std::min(frontier.size(), lo + chunk));
      for (auto& t : pool) t.join();
    }

    std::vector<Vertex> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t seed = map.visits.at(frontier[i]).seed;
      for (auto& step : expanded[i]) {
        if (step.target == frontier[i]) continue;
        if (spec.window && Plane::norm(step.target) > *spec.window) continue;
        auto it = map.visits.find(step.target);
        if (it != map.visits.end()) {
          detail::link_seeds(map, seed, it->second.seed);
          continue;
        }
        if (!grow) continue;
        map.visits.emplace(step.target, typename DistanceMap<Plane>::Visit{depth + 1, seed});
        next.push_back(std::move(step.target));
      }
      if (map.visits.size() > spec.max_vertices) {
        throw ResourceLimit("bfs_distances: more than " + std::to_string(spec.max_vertices) +
                            " vertices at depth " + std::to_string(depth + 1));
      }
    }
    frontier = std::move(next);
  }
  return map;
}

// ---------------------------------------------------------------------------
// Orbit census

/// Parity / mod-4 classes of primitive vectors under the U^2, L^2 action.
enum class TorusOrbit { PEvenQ1, PEvenQ3, QEvenP1, QEvenP3, OddOdd };

std::string_view to_string(TorusOrbit o);
TorusOrbit torus_orbit_class(const TorusCoord& v);
/// Image of a torus orbit in the Dynnikov plane under phi.
CurveClass projected_class(TorusOrbit o);

template <class Vertex, class Label>
struct OrbitCensus {
  Integer box;
  std::size_t vertices = 0;    // valid vertices in the box
  std::size_t unresolved = 0;  // box vertices the windowed search did not reach
  std::size_t mismatches = 0;  // component label disagreeing with the closed-form class
  std::size_t components = 0;  // connected components met by the search
  std::map<Label, std::size_t> counts;
  std::vector<std::pair<Vertex, Label>> members;
  std::vector<std::string> counterexamples;  // first few disagreements

  bool ok(std::size_t expected_components) const {
    return unresolved == 0 && mismatches == 0 && counts.size() == expected_components &&
           components == expected_components;
  }
};

using DynnikovCensus = OrbitCensus<DynnikovCoord, CurveClass>;
using TorusCensus = OrbitCensus<TorusCoord, TorusOrbit>;

/// Every essential (a,b) with |a|,|b| <= box is labelled by the component of
/// the Dynnikov graph restricted to |a|+|b| <= 2*box, and compared with classify.
DynnikovCensus dynnikov_census(const Integer& box, const DynnikovPlane& plane = {});
/// Every primitive (p,q) with |p|,|q| <= box is labelled by its component in
/// the torus graph restricted to the same box, and compared with torus_orbit_class.
TorusCensus torus_census(const Integer& box);

// ---------------------------------------------------------------------------
// Cycles

template <class Vertex>
struct SimpleCycle {
  std::vector<Vertex> vertices;  // v0, v1, ..., v(k-1), edge back to v0
  std::vector<EdgeLabel> labels;  // label of edge (vi, vi+1)
};

template <class Vertex>
struct CycleReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  // E - V + 1: number of independent cycles in the ball.
  std::size_t cyclomatic_number = 0;
  std::vector<SimpleCycle<Vertex>> cycles;
  bool truncated = false;  // enumeration stopped at max_cycles
};

/// Ball of the given radius around seed; edges join distinct ball vertices
/// (parallel edges with different labels are kept). Simple cycles are
/// enumerated on the 2-core left after repeatedly deleting leaves.
template <class Plane>
CycleReport<typename Plane::Vertex> find_simple_cycles(const Plane& plane, const typename Plane::Vertex& seed,
                                                       std::size_t depth, std::size_t max_cycles = 64) {
  using Vertex = typename Plane::Vertex;
  CayleySpec<Plane> spec;
  spec.seeds = {seed};
  spec.depth_limit = depth;
  DistanceMap<Plane> ball = bfs_distances(plane, spec);

  // Vertices numbered by (distance, textual form) so reports are reproducible.
  std::vector<Vertex> verts;
  verts.reserve(ball.size());
  for (const auto& [v, visit] : ball.visits) verts.push_back(v);
  std::vector<std::pair<std::size_t, std::string>> keys;
  std::vector<std::size_t> order(verts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (const auto& v : verts) keys.emplace_back(ball.visits.at(v).distance, to_string(v));
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<Vertex> sorted;
  sorted.reserve(verts.size());
  for (std::size_t i : order) sorted.push_back(verts[i]);
  verts = std::move(sorted);
  std::unordered_map<Vertex, std::size_t, typename Plane::Hash> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);

  struct Edge {
    std::size_t u, v;
    EdgeLabel label;
    bool operator<(const Edge& o) const { return std::tie(u, v, label) < std::tie(o.u, o.v, o.label); }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v && label == o.label; }
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (const auto& step : plane.steps(verts[i])) {
      auto it = index.find(step.target);
      if (it == index.end() || it->second == i) continue;
      edges.push_back({std::min(i, it->second), std::max(i, it->second), step.label});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  CycleReport<Vertex> report;
  report.vertices = verts.size();
  report.edges = edges.size();
  report.cyclomatic_number = edges.size() + 1 - verts.size();

  // adjacency: (neighbour, edge id)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(verts.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }
  std::vector<std::size_t> degree(verts.size());
  std::vector<bool> alive(verts.size(), true);
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    degree[i] = adj[i].size();
    if (degree[i] <= 1) leaves.push_back(i);
  }
  while (!leaves.empty()) {
    std::size_t x = leaves.back();
    leaves.pop_back();
    if (!alive[x]) continue;
    alive[x] = false;
    for (auto [y, e] : adj[x]) {
      if (alive[y] && --degree[y] == 1) leaves.push_back(y);
    }
  }

  // Each cycle is reported once, rooted at its smallest vertex and with
  // the first edge id smaller than the last.
  std::vector<std::size_t> path_v, path_e;
  std::vector<bool> on_path(verts.size(), false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t x) {
    if (report.cycles.size() >= max_cycles) {
      report.truncated = true;
      return;
    }
    for (auto [y, e] : adj[x]) {
      if (!alive[y] || y < root) continue;
      if (!path_e.empty() && e == path_e.back()) continue;
      if (y == root) {
        if (path_e.empty() || path_e.front() >= e) continue;
        SimpleCycle<Vertex> c;
        for (std::size_t k = 0; k < path_v.size(); ++k) {
          c.vertices.push_back(verts[path_v[k]]);
          c.labels.push_back(edges[k < path_e.size() ? path_e[k] : e].label);
        }
        report.cycles.push_back(std::move(c));
        continue;
      }
      if (on_path[y]) continue;
      on_path[y] = true;
      path_v.push_back(y);
      path_e.push_back(e);
      dfs(root, y);
      path_v.pop_back();
      path_e.pop_back();
      on_path[y] = false;
    }
  };
  for (std::size_t r = 0; r < verts.size(); ++r) {
    if (!alive[r]) continue;
    on_path[r] = true;
    path_v = {r};
    path_e.clear();
    dfs(r, r);
    on_path[r] = false;
  }
  return report;
}

/// U^2 L^-2 U^2 L^-2, the loop at (1,1) carried by the square on (+-1,+-1).
Mat2 four_cycle_matrix();

// ---------------------------------------------------------------------------
// Covering check

struct CoveringReport {
  Integer box;
  std::size_t torus_vertices = 0;     // primitive (p,q) with |p|,|q| <= box
  std::size_t dynnikov_vertices = 0;  // essential (a,b) with |a|+|b| <= box
  std::size_t compared = 0;           // torus vertices with both distances defined
  std::size_t distance_mismatches = 0;
  std::size_t reach_mismatches = 0;      // reached in one plane only
  std::size_t formula_mismatches = 0;    // torus distance != ECF length
  std::size_t component_mismatches = 0;  // torus orbit not sent to projected_class
  bool two_to_one = false;
  std::vector<std::string> counterexamples;

  bool ok() const {
    return distance_mismatches == 0 && reach_mismatches == 0 && formula_mismatches == 0 &&
           component_mismatches == 0 && two_to_one;
  }
};

/// Runs both searches restricted to max(|p|,|q|) <= box and |a|+|b| <= box
/// (phi maps the first window two-to-one onto the second) and compares
/// distances to the terminal sets vertex by vertex.
CoveringReport check_covering(const Integer& box, std::size_t depth_limit = kUnlimitedDepth,
                              const DynnikovPlane& plane = {});

}  // namespace d3twist
