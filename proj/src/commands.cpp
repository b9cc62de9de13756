#include "d3twist/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "d3twist/ecf.hpp"
#include "d3twist/untwist.hpp"

namespace d3twist {
namespace {

std::vector<std::string> letters_of(const TwistWord& w) {
  std::vector<std::string> out;
  for (Generator g : w.letters) out.emplace_back(to_string(g));
  return out;
}

std::vector<Integer> ecf_with_tail(const EcfExpansion& e) {
  std::vector<Integer> out = e.quotients;
  if (e.trailing_one) out.emplace_back(1);
  return out;
}

std::string trajectory_text(const std::vector<DynnikovCoord>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " -> " : "") + to_string(path[i]);
  return out;
}

std::string factorization_text(const Factorization& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Mat2& x = f.factors[i];
    os << (i % 2 == 0 ? "U^" : "L^") << (i % 2 == 0 ? x.m12 : x.m21) << ' ';
  }
  os << f.terminal;
  return os.str();
}

// Fills the record for an essential curve and returns the text report.
std::string describe_essential(const DynnikovCoord& d, OutputRecord& r) {
  UntwistResult u = untwist(d);
  TorusCoord lift = phi_inverse(d);
  EcfExpansion e = ecf_expand(lift.p, lift.q);
  r.kind = "essential";
  r.curve_class = std::string(to_string(classify(d)));
  r.length = Integer(u.word.size());
  r.word = letters_of(u.word);
  r.trajectory = u.trajectory;
  r.terminal = u.terminal;
  r.torus_lift = lift;
  r.ecf = ecf_with_tail(e);

  std::ostringstream os;
  os << "input:      " << d << '\n'
     << "class:      " << *r.curve_class << '\n'
     << "length:     " << *r.length << '\n'
     << "word:       " << to_string(u.word) << '\n'
     << "trajectory: " << trajectory_text(u.trajectory) << '\n'
     << "terminal:   " << u.terminal << '\n'
     << "torus lift: " << lift << '\n'
     << "ecf:        " << to_string(e) << '\n';
  return os.str();
}

// Multicurve report; returns true when d is essential and nothing was written.
bool report_multicurve(const DynnikovCoord& d, CommandResult& out) {
  CurveKind kind = curve_kind(d);
  if (kind.essential()) return false;
  out.exit_code = kExitNotEssential;
  out.record.kind = "multicurve";
  out.record.multiplicity = kind.multiplicity;
  out.record.primitive_part = kind.primitive_part;
  std::ostringstream os;
  os << "input:          " << d << '\n'
     << "kind:           multicurve\n"
     << "multiplicity:   " << kind.multiplicity << '\n'
     << "primitive part: " << kind.primitive_part << '\n'
     << "not an essential curve\n";
  out.text = os.str();
  return true;
}

std::string svg_polyline(const std::vector<DynnikovCoord>& pts, const Integer& window) {
  const long w = to_int64(window).value_or(1000);
  const double scale = 400.0 / static_cast<double>(2 * w + 2);
  auto x = [&](const Integer& a) { return (static_cast<double>(a.convert_to<long>()) + w + 1) * scale; };
  auto y = [&](const Integer& b) { return (w + 1 - static_cast<double>(b.convert_to<long>())) * scale; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
     << "  <line x1=\"0\" y1=\"200\" x2=\"400\" y2=\"200\" stroke=\"#bbb\"/>\n"
     << "  <line x1=\"200\" y1=\"0\" x2=\"200\" y2=\"400\" stroke=\"#bbb\"/>\n"
     << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << x(pts[i].a) << ',' << y(pts[i].b);
  os << "\"/>\n";
  for (const auto& p : pts) os << "  <circle cx=\"" << x(p.a) << "\" cy=\"" << y(p.b) << "\" r=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string dot_name(const DynnikovCoord& v) { return "\"" + to_string(v) + "\""; }
std::string dot_name(const TorusCoord& v) { return "\"" + to_string(v) + "\""; }

std::string orbit_name(const DynnikovCoord& v) { return std::string(to_string(classify(v))); }
std::string orbit_name(const TorusCoord& v) { return std::string(to_string(torus_orbit_class(v))); }

constexpr const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00"};

template <class Plane>
CommandResult graph_of(const Plane& plane, std::size_t depth) {
  using Vertex = typename Plane::Vertex;
  CayleySpec<Plane> spec;
  spec.seeds = Plane::terminal_set();
  spec.depth_limit = depth;
  auto map = bfs_distances(plane, spec);

  std::vector<std::pair<std::size_t, Vertex>> order;
  for (const auto& [v, visit] : map.visits) order.emplace_back(visit.distance, v);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return to_string(x.second) < to_string(y.second);
  });

  std::vector<std::string> orbits;
  for (const auto& [dist, v] : order) {
    std::string o = orbit_name(v);
    if (std::find(orbits.begin(), orbits.end(), o) == orbits.end()) orbits.push_back(o);
  }
  std::sort(orbits.begin(), orbits.end());

  std::ostringstream os;
  os << "graph G {\n  node [style=filled, fontsize=10];\n";
  for (const auto& [dist, v] : order) {
    std::size_t color = std::find(orbits.begin(), orbits.end(), orbit_name(v)) - orbits.begin();
    os << "  " << dot_name(v) << " [fillcolor=\"" << kPalette[color % 5] << "\", distance=" << dist
       << ", orbit=\"" << orbit_name(v) << "\"];\n";
  }
  std::size_t edges = 0;
  for (const auto& [dist, v] : order) {
    auto steps = plane.steps(v);
    // Steps come in (g, g^-1) pairs; the forward one of each pair names the edge.
    for (std::size_t i = 0; i < steps.size(); i += 2) {
      const auto& s = steps[i];
      if (s.target == v || !map.distance(s.target)) continue;
      os << "  " << dot_name(v) << " -- " << dot_name(s.target) << " [label=\"" << to_string(s.label) << "\"];\n";
      ++edges;
    }
  }
  os << "}\n";

  CommandResult out;
  out.record.command = "graph";
  out.record.plane = std::string(to_string(Plane::kind));
  out.record.depth = depth;
  out.record.vertices = order.size();
  out.record.edges = edges;
  out.text = os.str();
  return out;
}

}  // namespace

TransformDirection parse_direction(std::string_view text) {
  if (text == "pq2ab") return TransformDirection::TorusToDynnikov;
  if (text == "ab2pq") return TransformDirection::DynnikovToTorus;
  throw InvalidInput("unknown direction '" + std::string(text) + "' (expected pq2ab or ab2pq)");
}

CommandResult cmd_classify(const Integer& a, const Integer& b) {
  DynnikovCoord d{a, b};
  require_nonzero(d, "classify");
  CommandResult out;
  out.record.command = "classify";
  out.record.input = d;
  if (report_multicurve(d, out)) return out;
  out.text = describe_essential(d, out.record);
  return out;
}

CommandResult cmd_untwist(const Integer& a, const Integer& b) {
  DynnikovCoord d{a, b};
  require_nonzero(d, "untwist");
  CommandResult out;
  out.record.command = "untwist";
  out.record.input = d;
  if (report_multicurve(d, out)) return out;
  UntwistResult u = untwist(d);
  out.record.word = letters_of(u.word);
  out.record.trajectory = u.trajectory;
  out.record.terminal = u.terminal;
  out.record.length = Integer(u.word.size());
  out.record.curve_class = std::string(to_string(classify(d)));
  std::ostringstream os;
  for (std::size_t i = 0; i < u.trajectory.size(); ++i) {
    os << u.trajectory[i];
    if (i < u.word.size()) os << "  --" << to_string(u.word.letters[i]) << "-->";
    os << '\n';
  }
  os << "word: " << to_string(u.word) << " (length " << u.word.size() << ", ends at "
     << to_string(classify(d)) << ")\n";
  out.text = os.str();
  return out;
}

CommandResult cmd_ecf(const Integer& m, const Integer& n) {
  EcfExpansion e = ecf_expand(m, n);
  Factorization f = factorize(m, n);
  CommandResult out;
  out.record.command = "ecf";
  out.record.torus_input = TorusCoord{m, n};
  out.record.ecf = ecf_with_tail(e);
  out.record.ecf_terminal = e.terminal;
  out.record.length = e.length();
  std::ostringstream os;
  os << m << '/' << n << " = " << to_string(e) << '\n'
     << "length:        " << e.length() << '\n'
     << "terminal:      " << e.terminal << " (epsilon " << e.epsilon << ")\n"
     << "factorization: (" << m << ',' << n << ") = " << factorization_text(f) << '\n';
  if (e.ambiguous) os << "note: -1 = [0,-2,1] as well; both have length 1\n";
  out.text = os.str();
  return out;
}

CommandResult cmd_transform(TransformDirection dir, const Integer& x, const Integer& y) {
  CommandResult out;
  out.record.command = "transform";
  std::ostringstream os;
  if (dir == TransformDirection::TorusToDynnikov) {
    TorusCoord t{x, y};
    require_nonzero(t, "transform");
    DynnikovCoord d = phi(t);
    out.record.torus_input = t;
    out.record.input = d;
    os << "(p,q) = " << t << "  ->  (a,b) = " << d << '\n';
  } else {
    DynnikovCoord d{x, y};
    require_nonzero(d, "transform");
    TorusCoord t = phi_inverse(d);
    out.record.input = d;
    out.record.torus_lift = t;
    os << "(a,b) = " << d << "  ->  (p,q) = +-" << t << '\n';
  }
  out.text = os.str();
  return out;
}

CommandResult cmd_track(TrackFamily family, const Integer& n, const Integer& window,
                        const std::optional<std::string>& svg_path) {
  if (n < 1) throw InvalidInput("track: n must be >= 1");
  if (window < n) throw InvalidInput("track: window must be >= n");
  Track t = track_of(DynnikovCoord{n, 0}, family, window);
  CommandResult out;
  out.record.command = "track";
  out.record.family = std::string(to_string(family));
  out.record.index = t.index;
  out.record.points = t.points;
  std::ostringstream os;
  os << "a,b\n";
  for (const auto& p : t.points) os << p.a << ',' << p.b << '\n';
  out.text = os.str();
  if (svg_path) {
    std::ofstream svg(*svg_path);
    if (!svg) throw InvalidInput("track: cannot write " + *svg_path);
    svg << svg_polyline(t.points, window);
  }
  return out;
}

CommandResult cmd_distance(PlaneKind plane, const Integer& x, const Integer& y, std::size_t depth, unsigned threads) {
  CommandResult out;
  out.record.command = "distance";
  out.record.plane = std::string(to_string(plane));
  out.record.depth = depth;
  std::optional<std::size_t> found;
  std::size_t explored = 0;
  Integer formula;
  if (plane == PlaneKind::Dynnikov) {
    DynnikovCoord d{x, y};
    require_nonzero(d, "distance");
    out.record.input = d;
    if (report_multicurve(d, out)) return out;
    CayleySpec<DynnikovPlane> spec;
    spec.seeds = DynnikovPlane::terminal_set();
    spec.depth_limit = depth;
    spec.threads = threads;
    auto map = bfs_distances(DynnikovPlane{}, spec);
    found = map.distance(d);
    explored = map.size();
    formula = conjugation_length(d);
  } else {
    TorusCoord t{x, y};
    require_nonzero(t, "distance");
    out.record.torus_input = t;
    if (!t.is_primitive()) {
      out.exit_code = kExitNotEssential;
      out.text = to_string(t) + " is not primitive; its image is a multicurve\n";
      return out;
    }
    CayleySpec<TorusPlane> spec;
    spec.seeds = TorusPlane::terminal_set();
    spec.depth_limit = depth;
    spec.threads = threads;
    auto map = bfs_distances(TorusPlane{}, spec);
    found = map.distance(t);
    explored = map.size();
    formula = ecf_length(x, y);
  }
  out.record.vertices = explored;
  out.record.length = formula;
  if (!found) {
    out.exit_code = kExitResourceLimit;
    out.text = "not reached within depth " + std::to_string(depth) + " (" + std::to_string(explored) +
               " vertices explored; ECF length " + to_string(formula) + ")\n";
    return out;
  }
  out.record.distance = Integer(*found);
  out.text = "distance: " + std::to_string(*found) + " (BFS over " + std::to_string(explored) +
             " vertices)\necf length: " + to_string(formula) + '\n';
  return out;
}

CommandResult cmd_graph(PlaneKind plane, std::size_t depth) {
  if (plane == PlaneKind::Dynnikov) return graph_of(DynnikovPlane{}, depth);
  return graph_of(TorusPlane{}, depth);
}

CommandResult cmd_verify(const VerifyOptions& options) {
  VerifyReport report = run_verification(options);
  CommandResult out;
  out.record.command = "verify";
  out.record.bound = options.bound;
  out.record.depth = options.depth;
  out.record.passed = report.passed();
  out.record.checks.emplace();
  for (const auto& c : report.checks) {
    out.record.checks->push_back({c.name, c.passed, c.checked, c.failures, c.counterexamples});
  }
  out.exit_code = report.passed() ? kExitOk : kExitVerifyFailed;
  out.text = format_report(report);
  return out;
}

CommandResult run_guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    CommandResult out;
    out.exit_code = kExitUsage;
    out.text = std::string("error: ") + e.what() + '\n';
    return out;
  } catch (const ResourceLimit& e) {
    CommandResult out;
    out.exit_code = kExitResourceLimit;
    out.text = std::string("resource limit: ") + e.what() + '\n';
    return out;
  }
}

}  // namespace d3twist
