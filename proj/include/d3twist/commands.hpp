#pragma once

#include <functional>
#include <optional>
#include <string>

#include "d3twist/oracle.hpp"
#include "d3twist/record.hpp"
#include "d3twist/verify.hpp"

namespace d3twist {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitNotEssential = 3,
  kExitResourceLimit = 4,
};

struct CommandResult {
  int exit_code = kExitOk;
  OutputRecord record;
  std::string text;  // human-readable report, CSV or DOT
};

enum class TransformDirection { TorusToDynnikov, DynnikovToTorus };
TransformDirection parse_direction(std::string_view text);  // "pq2ab" or "ab2pq"

CommandResult cmd_classify(const Integer& a, const Integer& b);
CommandResult cmd_untwist(const Integer& a, const Integer& b);
CommandResult cmd_ecf(const Integer& m, const Integer& n);
CommandResult cmd_transform(TransformDirection dir, const Integer& x, const Integer& y);
// CSV with header "a,b"; svg_path, when set, also receives a polyline drawing.
CommandResult cmd_track(TrackFamily family, const Integer& n, const Integer& window,
                        const std::optional<std::string>& svg_path = std::nullopt);
// BFS distance from (x,y) to the terminal set, searching at most depth levels.
CommandResult cmd_distance(PlaneKind plane, const Integer& x, const Integer& y, std::size_t depth,
                           unsigned threads = 1);
// Undirected DOT graph of the depth ball around the terminal set.
CommandResult cmd_graph(PlaneKind plane, std::size_t depth);
CommandResult cmd_verify(const VerifyOptions& options);

/// Runs body, mapping InvalidInput to kExitUsage and ResourceLimit to
/// kExitResourceLimit with the message in text.
CommandResult run_guarded(const std::function<CommandResult()>& body);

}  // namespace d3twist
