#include "d3twist/record.hpp"

#include <json.hpp>

namespace d3twist {
namespace {

using Json = nlohmann::ordered_json;

Json encode(const Integer& x) {
  if (auto small = to_int64(x)) return *small;
  return to_string(x);
}
Json encode(const std::string& s) { return s; }
Json encode(bool b) { return b; }
Json encode(std::size_t n) { return n; }
Json encode(const DynnikovCoord& d) { return Json::array({encode(d.a), encode(d.b)}); }
Json encode(const TorusCoord& t) { return Json::array({encode(t.p), encode(t.q)}); }
Json encode(const CheckSummary& c) {
  Json j = Json::object();
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["checked"] = c.checked;
  j["failures"] = c.failures;
  j["counterexamples"] = c.counterexamples;
  return j;
}
template <class T>
Json encode(const std::vector<T>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(encode(x));
  return j;
}

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw InvalidInput("JSON field '" + field + "': " + why);
}

template <class T>
void decode(const Json& j, std::vector<T>& out, const std::string& f);

void decode(const Json& j, Integer& out, const std::string& f) {
  if (j.is_number_integer()) {
    out = j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  } else if (j.is_string()) {
    out = parse_integer(j.get<std::string>());
  } else {
    bad(f, "expected an integer");
  }
}
void decode(const Json& j, std::string& out, const std::string& f) {
  if (!j.is_string()) bad(f, "expected a string");
  out = j.get<std::string>();
}
void decode(const Json& j, bool& out, const std::string& f) {
  if (!j.is_boolean()) bad(f, "expected a boolean");
  out = j.get<bool>();
}
void decode(const Json& j, std::size_t& out, const std::string& f) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) bad(f, "expected a count");
  out = j.get<std::size_t>();
}
void decode(const Json& j, DynnikovCoord& out, const std::string& f) {
  if (!j.is_array() || j.size() != 2) bad(f, "expected [a,b]");
  decode(j[0], out.a, f);
  decode(j[1], out.b, f);
}
void decode(const Json& j, TorusCoord& out, const std::string& f) {
  if (!j.is_array() || j.size() != 2) bad(f, "expected [p,q]");
  decode(j[0], out.p, f);
  decode(j[1], out.q, f);
}
void decode(const Json& j, CheckSummary& out, const std::string& f) {
  if (!j.is_object()) bad(f, "expected an object");
  auto member = [&](const char* key) -> const Json& {
    if (!j.contains(key)) bad(f, std::string("missing '") + key + "'");
    return j.at(key);
  };
  decode(member("name"), out.name, f);
  decode(member("passed"), out.passed, f);
  decode(member("checked"), out.checked, f);
  decode(member("failures"), out.failures, f);
  decode(member("counterexamples"), out.counterexamples, f);
}

template <class T>
void decode(const Json& j, std::vector<T>& out, const std::string& f) {
  if (!j.is_array()) bad(f, "expected an array");
  out.clear();
  for (const auto& x : j) decode(x, out.emplace_back(), f);
}
// Calls visit(name, member) for every optional field in JSON order.
template <class Rec, class Visit>
void for_each_field(Rec& r, Visit&& visit) {
  visit("input", r.input);
  visit("torus_input", r.torus_input);
  visit("kind", r.kind);
  visit("multiplicity", r.multiplicity);
  visit("primitive_part", r.primitive_part);
  visit("class", r.curve_class);
  visit("length", r.length);
  visit("word", r.word);
  visit("trajectory", r.trajectory);
  visit("terminal", r.terminal);
  visit("torus_lift", r.torus_lift);
  visit("ecf", r.ecf);
  visit("ecf_terminal", r.ecf_terminal);
  visit("distance", r.distance);
  visit("plane", r.plane);
  visit("family", r.family);
  visit("index", r.index);
  visit("points", r.points);
  visit("depth", r.depth);
  visit("vertices", r.vertices);
  visit("edges", r.edges);
  visit("bound", r.bound);
  visit("checks", r.checks);
  visit("passed", r.passed);
}

}  // namespace

std::string to_json(const OutputRecord& r) {
  Json j = Json::object();
  j["command"] = r.command;
  for_each_field(r, [&](const char* name, const auto& field) {
    if (field) j[name] = encode(*field);
  });
  return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("JSON record must be an object");
  OutputRecord r;
  if (!j.contains("command")) throw InvalidInput("JSON record has no 'command'");
  decode(j["command"], r.command, "command");
  std::size_t known = 1;
  for_each_field(r, [&](const char* name, auto& field) {
    if (!j.contains(name)) return;
    ++known;
    decode(j[name], field.emplace(), name);
  });
  if (known != j.size()) throw InvalidInput("JSON record has unknown fields");
  return r;
}

}  // namespace d3twist
