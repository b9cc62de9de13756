#include "d3twist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "d3twist/ecf.hpp"
#include "d3twist/untwist.hpp"

namespace d3twist {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void pass() { ++result_.checked; }
  void fail(std::string what) {
    ++result_.checked;
    ++result_.failures;
    result_.passed = false;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(std::move(what));
  }
  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }

  CheckResult& result() { return result_; }

  void merge(const CheckResult& other) {
    result_.checked += other.checked;
    result_.failures += other.failures;
    result_.passed = result_.passed && other.passed;
    for (const auto& ex : other.counterexamples) {
      if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(ex);
    }
  }

 private:
  CheckResult result_;
};

// Runs body, timing it and turning exceptions other than ResourceLimit
// into a failed check.
template <class Body>
CheckResult run_check(std::string name, Body body) {
  Check check(std::move(name));
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const ResourceLimit&) {
    throw;
  } catch (const std::exception& e) {
    check.fail(std::string("exception: ") + e.what());
  }
  check.result().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return std::move(check.result());
}

template <class F>
void for_box(const Integer& bound, F f) {
  for (Integer a = -bound; a <= bound; ++a) {
    for (Integer b = -bound; b <= bound; ++b) {
      if (a != 0 || b != 0) f(DynnikovCoord{a, b});
    }
  }
}

std::string show(const DynnikovCoord& d) { return to_string(d); }

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

DynnikovCoord mutated_twist(Generator g, const DynnikovCoord& d) {
  auto tc = [](const DynnikovCoord& v) -> DynnikovCoord {
    if (tc_region(v) == Region::A) return {v.a - v.b, v.b};
    return apply_twist(Generator::Tc, v);
  };
  switch (g) {
    case Generator::Tc: return tc(d);
    case Generator::Td: return -tc(-d);
    default: return apply_twist(g, d);
  }
}

VerifyReport run_verification(const VerifyOptions& opt) {
  if (opt.bound < 1) throw InvalidInput("verify: bound must be >= 1");
  if (opt.depth < 1) throw InvalidInput("verify: depth must be >= 1");
  VerifyReport report;
  report.options = opt;
  const TwistFn& twist = opt.twist;
  const DynnikovPlane plane{twist};

  report.checks.push_back(run_check("sigma-squared equals twist", [&](Check& c) {
    const std::pair<BraidLetter, Generator> pairs[] = {{BraidLetter::S1, Generator::Tc},
                                                       {BraidLetter::S1Inv, Generator::TcInv},
                                                       {BraidLetter::S2, Generator::Td},
                                                       {BraidLetter::S2Inv, Generator::TdInv}};
    for_box(opt.bound, [&](const DynnikovCoord& d) {
      for (auto [l, g] : pairs) {
        DynnikovCoord twice = apply_braid(l, apply_braid(l, d));
        DynnikovCoord closed = twist(g, d);
        c.expect(twice == closed, [&] {
          return std::string(to_string(l)) + "^2" + show(d) + " = " + show(twice) + " but " +
                 std::string(to_string(g)) + show(d) + " = " + show(closed);
        });
      }
    });
  }));

  report.checks.push_back(run_check("inverse pairs cancel", [&](Check& c) {
    for_box(opt.bound, [&](const DynnikovCoord& d) {
      for (Generator g : kGenerators) {
        DynnikovCoord back = twist(inverse(g), twist(g, d));
        c.expect(back == d, [&] { return std::string(to_string(g)) + " then inverse sends " + show(d) + " to " + show(back); });
      }
      for (BraidLetter l : kBraidLetters) {
        DynnikovCoord back = apply_braid(inverse(l), apply_braid(l, d));
        c.expect(back == d, [&] { return std::string(to_string(l)) + " then inverse sends " + show(d) + " to " + show(back); });
      }
    });
  }));

  report.checks.push_back(run_check("central symmetry of t_c and t_d", [&](Check& c) {
    for_box(opt.bound, [&](const DynnikovCoord& d) {
      DynnikovCoord td = twist(Generator::Td, d), mirrored = -twist(Generator::Tc, -d);
      c.expect(td == mirrored, [&] { return "td" + show(d) + " = " + show(td) + " but -tc(-d) = " + show(mirrored); });
    });
  }));

  report.checks.push_back(run_check("track jumps equal twists", [&](Check& c) {
    for_box(opt.bound, [&](const DynnikovCoord& d) {
      for (Generator g : kGenerators) {
        DynnikovCoord jumped = twist_via_jumps(g, d), closed = twist(g, d);
        c.expect(jumped == closed, [&] {
          return std::string(to_string(g)) + show(d) + ": jumps give " + show(jumped) + ", formula " + show(closed);
        });
      }
    });
  }));

  report.checks.push_back(run_check("coordinate round trips", [&](Check& c) {
    for_box(opt.bound, [&](const DynnikovCoord& d) {
      DynnikovCoord back = phi(phi_inverse(d));
      c.expect(back == d, [&] { return "phi(phi_inverse" + show(d) + ") = " + show(back); });
      TorusCoord t{d.a, d.b};
      c.expect(phi(t) == phi(-t), [&] { return "phi not even at " + to_string(t); });
      c.expect(phi_inverse(phi(t)).same_class(t), [&] { return "phi_inverse(phi" + to_string(t) + ") lost the class"; });
    });
  }));

  report.checks.push_back(run_check("even continued fraction contract", [&](Check& c) {
    for (Integer m = -opt.bound; m <= opt.bound; ++m) {
      for (Integer n = -opt.bound; n <= opt.bound; ++n) {
        if (gcd(m, n) != 1) continue;
        auto violations = ecf_contract_violations(m, n);
        if (violations.empty())
          c.pass();
        else
          c.fail(violations.front());
      }
    }
  }));

  report.checks.push_back(run_check("BFS distance = untwist length = ECF length", [&](Check& c) {
    CayleySpec<DynnikovPlane> spec;
    spec.seeds = DynnikovPlane::terminal_set();
    spec.depth_limit = opt.depth;
    spec.threads = opt.threads;
    spec.max_vertices = opt.max_vertices;
    auto map = bfs_distances(plane, spec);
    std::vector<std::pair<const DynnikovCoord*, std::size_t>> work;
    work.reserve(map.visits.size());
    for (const auto& [v, visit] : map.visits) work.emplace_back(&v, visit.distance);

    // Each worker checks a contiguous slice; slices are merged in order so
    // the reported counterexamples do not depend on the thread count.
    const std::size_t workers = std::max(1u, opt.threads);
    std::vector<Check> partial(workers, Check(""));
    auto run_slice = [&](std::size_t w) {
      Check& pc = partial[w];
      for (std::size_t i = w * work.size() / workers; i < (w + 1) * work.size() / workers; ++i) {
        const DynnikovCoord& v = *work[i].first;
        const std::size_t distance = work[i].second;
        std::size_t word = 0;
        Integer formula;
        try {
          word = untwist(v).word.size();
          formula = conjugation_length(v);
        } catch (const std::exception& e) {
          pc.fail(show(v) + ": " + e.what());
          continue;
        }
        pc.expect(word == distance && formula == distance, [&] {
          return show(v) + ": BFS " + std::to_string(distance) + ", untwist " + std::to_string(word) + ", ECF " +
                 to_string(formula);
        });
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run_slice, w);
    run_slice(0);
    for (auto& t : pool) t.join();
    for (auto& pc : partial) c.merge(pc.result());
  }));

  report.checks.push_back(run_check("Dynnikov orbit census (3 orbits)", [&](Check& c) {
    DynnikovCensus census = dynnikov_census(opt.bound, plane);
    for (std::size_t i = 0; i < census.vertices - census.mismatches - census.unresolved; ++i) c.pass();
    for (const auto& s : census.counterexamples) c.fail(s);
    for (std::size_t i = census.counterexamples.size(); i < census.mismatches + census.unresolved; ++i) c.fail("");
    c.expect(census.counts.size() == 3 && census.components == 3, [&] {
      return std::to_string(census.counts.size()) + " orbit labels over " + std::to_string(census.components) +
             " components";
    });
  }));

  report.checks.push_back(run_check("torus orbit census (5 orbits)", [&](Check& c) {
    TorusCensus census = torus_census(opt.bound);
    for (std::size_t i = 0; i < census.vertices - census.mismatches - census.unresolved; ++i) c.pass();
    for (const auto& s : census.counterexamples) c.fail(s);
    for (std::size_t i = census.counterexamples.size(); i < census.mismatches + census.unresolved; ++i) c.fail("");
    c.expect(census.counts.size() == 5 && census.components == 5, [&] {
      return std::to_string(census.counts.size()) + " orbit labels over " + std::to_string(census.components) +
             " components";
    });
  }));

  report.checks.push_back(run_check("Cayley graph double covering", [&](Check& c) {
    CoveringReport cov = check_covering(opt.bound, kUnlimitedDepth, plane);
    const std::size_t bad = cov.distance_mismatches + cov.reach_mismatches + cov.formula_mismatches +
                            cov.component_mismatches;
    for (std::size_t i = bad; i < cov.torus_vertices; ++i) c.pass();
    for (const auto& s : cov.counterexamples) c.fail(s);
    for (std::size_t i = cov.counterexamples.size(); i < bad; ++i) c.fail("");
    c.expect(cov.two_to_one, [&] {
      return "vertex map is not two-to-one: " + std::to_string(cov.torus_vertices) + " torus vertices over " +
             std::to_string(cov.dynnikov_vertices) + " Dynnikov vertices";
    });
  }));

  report.checks.push_back(run_check("torus graph cycle structure", [&](Check& c) {
    const std::size_t depth = std::min<std::size_t>(opt.depth, 8);
    for (TorusCoord seed : {TorusCoord{1, 0}, TorusCoord{-1, 0}, TorusCoord{0, 1}, TorusCoord{0, -1}}) {
      auto r = find_simple_cycles(TorusPlane{}, seed, depth);
      c.expect(r.cycles.empty() && r.cyclomatic_number == 0,
               [&] { return "component of " + to_string(seed) + " has a cycle within depth " + std::to_string(depth); });
    }
    // The square on (+-1,+-1) closes at distance 2 from (1,1).
    auto r = find_simple_cycles(TorusPlane{}, TorusCoord{1, 1}, depth);
    bool square = depth < 2 ? r.cycles.empty() && r.cyclomatic_number == 0
                            : r.cycles.size() == 1 && r.cyclomatic_number == 1 && r.cycles[0].vertices.size() == 4;
    if (square && depth >= 2) {
      for (const auto& v : r.cycles[0].vertices) square = square && abs(v.p) == 1 && abs(v.q) == 1;
    }
    c.expect(square, [&] {
      return "component of (1,1): " + std::to_string(r.cycles.size()) + " simple cycles, cyclomatic number " +
             std::to_string(r.cyclomatic_number);
    });
    Mat2 loop = four_cycle_matrix();
    c.expect(loop * TorusCoord{1, 1} == TorusCoord{1, 1} && in_gamma2_bar(loop),
             [&] { return "U2 L-2 U2 L-2 does not fix (1,1)"; });
  }));

  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "verify: bound " << report.options.bound << ", depth " << report.options.depth << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed ? "  PASS  " : "  FAIL  ") << std::left << std::setw(46) << c.name << std::right << std::setw(10)
       << c.checked << " checked" << std::setw(8) << c.failures << " failed" << std::fixed << std::setprecision(2)
       << std::setw(9) << c.seconds << "s\n";
    for (const auto& ex : c.counterexamples) {
      if (!ex.empty()) os << "        counterexample: " << ex << '\n';
    }
  }
  os << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

}  // namespace d3twist
