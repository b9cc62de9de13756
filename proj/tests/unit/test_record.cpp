#include "support.hpp"

#include <limits>

#include "d3twist/commands.hpp"
#include "d3twist/record.hpp"

using namespace d3twist;

TEST_CASE("a classify record round-trips") {
  CommandResult r = cmd_classify(10, 3);
  std::string text = to_json(r.record);
  CHECK(text ==
        R"({"command":"classify","input":[10,3],"kind":"essential","class":"c","length":5,)"
        R"("word":["tc","td","tc","td","td"],"trajectory":[[10,3],[-7,-3],[4,3],[-1,-3],[-1,-1],[0,1]],)"
        R"("terminal":[0,1],"torus_lift":[13,-10],"ecf":[-2,2,-2,4]})");
  CHECK(record_from_json(text) == r.record);
}

TEST_CASE("every command's record parses back unchanged") {
  VerifyOptions small;
  small.bound = 3;
  small.depth = 3;
  const CommandResult results[] = {
      cmd_classify(3, 10),       cmd_classify(2, 0),
      cmd_untwist(10, 3),        cmd_ecf(13, -10),
      cmd_ecf(-1, 1),            cmd_transform(TransformDirection::TorusToDynnikov, 13, -10),
      cmd_transform(TransformDirection::DynnikovToTorus, -1, 0),
      cmd_track(TrackFamily::D, 2, 5),
      cmd_distance(PlaneKind::Torus, 13, -10, 6),
      cmd_graph(PlaneKind::Torus, 2),
      cmd_verify(small),
  };
  for (const auto& r : results) {
    CAPTURE(r.record.command);
    CHECK(record_from_json(to_json(r.record)) == r.record);
  }
}

TEST_CASE("huge integers are written as strings") {
  Integer big = parse_integer("-98765432109876543210987654321");
  OutputRecord r;
  r.command = "transform";
  r.torus_input = TorusCoord{big, 1};
  r.input = phi(*r.torus_input);
  r.length = big * big;
  r.ecf = std::vector<Integer>{big, 2, -4};
  std::string text = to_json(r);
  CHECK(text.find("\"-98765432109876543210987654321\"") != std::string::npos);
  CHECK(record_from_json(text) == r);

  OutputRecord edge;
  edge.command = "x";
  edge.length = Integer(std::numeric_limits<std::int64_t>::min());
  edge.distance = Integer(std::numeric_limits<std::int64_t>::max()) + 1;
  CHECK(record_from_json(to_json(edge)) == edge);
  CHECK(to_json(edge).find("-9223372036854775808,") != std::string::npos);
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(record_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(record_from_json("[]"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"input":[1,2]})"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"command":"c","input":[1]})"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"command":"c","length":1.5})"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"command":"c","length":"12a"})"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"command":"c","colour":"red"})"), InvalidInput);
  CHECK_THROWS_AS(record_from_json(R"({"command":"c","checks":[{"name":"x"}]})"), InvalidInput);
}
