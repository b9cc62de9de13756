// Command-line front end: one subcommand per library operation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "d3twist/commands.hpp"

using namespace d3twist;

namespace {

const char* kFooter =
    "Words are printed in application order: the first letter is applied first.\n"
    "As a mapping class the word composes right to left, so the group element is\n"
    "the reversed product. Inverse generators are written tc- and td-.\n"
    "\n"
    "Exit codes: 0 ok, 1 verification failed, 2 usage error,\n"
    "            3 input is not an essential curve, 4 resource limit reached.";

struct Pair {
  std::string x, y;
};

void add_pair(CLI::App* cmd, Pair& p, const char* x, const char* y) {
  cmd->add_option(x, p.x, "first coordinate")->required();
  cmd->add_option(y, p.y, "second coordinate")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn twists on the 3-punctured disk in Dynnikov coordinates", "d3twist"};
  app.footer(kFooter);
  app.require_subcommand(1);

  bool json = false;
  auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "print one JSON record instead of text"); };

  Pair in;
  auto* classify = app.add_subcommand("classify", "conjugacy class, length, untwisting word of t_(a,b)");
  add_pair(classify, in, "a", "b");
  json_flag(classify);

  auto* untwist = app.add_subcommand("untwist", "step-by-step untwisting trajectory of (a,b)");
  add_pair(untwist, in, "a", "b");
  json_flag(untwist);

  auto* ecf = app.add_subcommand("ecf", "even continued fraction and factorization of m/n");
  add_pair(ecf, in, "m", "n");
  json_flag(ecf);

  std::string direction;
  auto* transform = app.add_subcommand("transform", "convert between torus (p,q) and Dynnikov (a,b) coordinates");
  transform->add_option("direction", direction, "pq2ab or ab2pq")->required()->check(CLI::IsMember({"pq2ab", "ab2pq"}));
  add_pair(transform, in, "x", "y");
  json_flag(transform);

  std::string family, track_n, window;
  std::optional<std::string> svg;
  auto* track = app.add_subcommand("track", "lattice points of a twist track as CSV (header a,b)");
  track->add_option("family", family, "c or d")->required()->check(CLI::IsMember({"c", "d"}));
  track->add_option("n", track_n, "track index, >= 1")->required();
  track->add_option("window", window, "max |a|,|b| of listed points (default 2n)");
  track->add_option("--svg", svg, "also write an SVG polyline to this path");
  json_flag(track);

  std::string plane = "dynnikov";
  std::size_t depth = 12;
  unsigned threads = 1;
  auto* distance = app.add_subcommand("distance", "BFS distance from a curve to {c,d,e}");
  add_pair(distance, in, "x", "y");
  distance->add_option("--plane", plane, "dynnikov (a,b) or torus (p,q)")->check(CLI::IsMember({"dynnikov", "torus"}));
  distance->add_option("--depth", depth, "BFS depth limit")->capture_default_str();
  distance->add_option("--threads", threads, "BFS worker threads")->check(CLI::PositiveNumber);
  json_flag(distance);

  std::size_t graph_depth = 3;
  auto* graph = app.add_subcommand("graph", "DOT graph of the BFS ball around the terminal curves");
  graph->add_option("plane", plane, "dynnikov or torus")->required()->check(CLI::IsMember({"dynnikov", "torus"}));
  graph->add_option("depth", graph_depth, "ball radius")->required();
  json_flag(graph);

  std::string bound = "30";
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "cross-check every closed form against brute force");
  verify->add_option("--bound", bound, "coordinate box for sweeps and censuses")->capture_default_str();
  verify->add_option("--depth", depth, "BFS depth for the minimality check")->capture_default_str();
  verify->add_option("--threads", threads, "BFS worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", inject_fault, "use a deliberately broken t_c")->group("");
  json_flag(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommandResult result = run_guarded([&]() -> CommandResult {
    auto x = [&] { return parse_integer(in.x); };
    auto y = [&] { return parse_integer(in.y); };
    if (*classify) return cmd_classify(x(), y());
    if (*untwist) return cmd_untwist(x(), y());
    if (*ecf) return cmd_ecf(x(), y());
    if (*transform) return cmd_transform(parse_direction(direction), x(), y());
    if (*track) {
      Integer n = parse_integer(track_n);
      Integer w = window.empty() ? Integer(2 * n) : parse_integer(window);
      TrackFamily f = family == "c" ? TrackFamily::C : TrackFamily::D;
      return cmd_track(f, n, w, svg);
    }
    if (*distance) return cmd_distance(parse_plane(plane), x(), y(), depth, threads);
    if (*graph) return cmd_graph(parse_plane(plane), graph_depth);
    VerifyOptions opt;
    opt.bound = parse_integer(bound);
    opt.depth = depth;
    opt.threads = threads;
    if (inject_fault) opt.twist = mutated_twist;
    return cmd_verify(opt);
  });

  if (json && !result.record.command.empty()) {
    std::cout << to_json(result.record) << '\n';
    if (result.exit_code == kExitUsage || result.exit_code == kExitResourceLimit) std::cerr << result.text;
  } else {
    (result.exit_code == kExitUsage ? std::cerr : std::cout) << result.text;
  }
  return result.exit_code;
}
