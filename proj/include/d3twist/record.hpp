#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d3twist/coords.hpp"

namespace d3twist {

struct CheckSummary {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

// What a command reports. Absent fields are left out of the JSON form.
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; coordinates are two-element arrays.
struct OutputRecord {
  std::string command;
  std::optional<DynnikovCoord> input;
  std::optional<TorusCoord> torus_input;
  std::optional<std::string> kind;  // "essential" or "multicurve"
  std::optional<Integer> multiplicity;
  std::optional<DynnikovCoord> primitive_part;
  std::optional<std::string> curve_class;  // "class" in JSON
  std::optional<Integer> length;
  std::optional<std::vector<std::string>> word;  // application order
  std::optional<std::vector<DynnikovCoord>> trajectory;
  std::optional<DynnikovCoord> terminal;
  std::optional<TorusCoord> torus_lift;
  std::optional<std::vector<Integer>> ecf;  // quotients, with the final 1 when present
  std::optional<TorusCoord> ecf_terminal;
  std::optional<Integer> distance;
  std::optional<std::string> plane;
  std::optional<std::string> family;
  std::optional<Integer> index;
  std::optional<std::vector<DynnikovCoord>> points;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
  std::optional<Integer> bound;
  std::optional<std::vector<CheckSummary>> checks;
  std::optional<bool> passed;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Compact single-line JSON, fields in declaration order.
std::string to_json(const OutputRecord& r);
/// Throws InvalidInput on malformed text or unknown field types.
OutputRecord record_from_json(const std::string& text);

}  // namespace d3twist
