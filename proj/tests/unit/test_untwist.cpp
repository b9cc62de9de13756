#include "support.hpp"

#include <optional>

#include "d3twist/untwist.hpp"

using namespace d3twist;

namespace {

std::vector<DynnikovCoord> path(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<DynnikovCoord> out;
  for (auto [a, b] : xs) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("untwisting (10,3)") {
  UntwistResult u = untwist({10, 3});
  CHECK(to_string(u.word) == "tc td tc td td");
  CHECK(u.trajectory == path({{10, 3}, {-7, -3}, {4, 3}, {-1, -3}, {-1, -1}, {0, 1}}));
  CHECK(u.terminal == DynnikovCoord{0, 1});
}

TEST_CASE("untwisting (3,10) takes the extra twist at (1,0)") {
  UntwistResult u = untwist({3, 10});
  CHECK(to_string(u.word) == "tc tc td- td-");
  CHECK(u.trajectory == path({{3, 10}, {3, 4}, {1, -2}, {1, 0}, {-1, 0}}));
  CHECK(u.terminal == DynnikovCoord{-1, 0});
}

TEST_CASE("terminal curves and (1,0)") {
  for (CurveClass k : kCurveClasses) {
    UntwistResult u = untwist(coords_of(k));
    CHECK(u.word.empty());
    CHECK(u.trajectory.size() == 1);
    CHECK(classify(coords_of(k)) == k);
    CHECK(conjugation_length(coords_of(k)) == 0);
  }
  UntwistResult u = untwist({1, 0});
  CHECK(to_string(u.word) == "td-");
  CHECK(u.terminal == DynnikovCoord{-1, 0});
  Conjugator x = conjugator({1, 0});
  CHECK(x.word.size() == 1);
  CHECK(x.target == CurveClass::E);
}

TEST_CASE("classes and lengths of the worked examples") {
  CHECK(classify({10, 3}) == CurveClass::C);
  CHECK(classify({3, 10}) == CurveClass::E);
  CHECK(classify({0, -1}) == CurveClass::D);
  CHECK(conjugation_length({10, 3}) == 5);
  CHECK(conjugation_length({3, 10}) == 4);
  CHECK(twists_conjugate({10, 3}, {0, 1}));
  CHECK_FALSE(twists_conjugate({0, 1}, {0, -1}));
  CHECK(twists_conjugate({3, 10}, {1, 0}));
  Conjugator x = conjugator({10, 3});
  CHECK(to_string(x.word) == "tc td tc td td");
  CHECK(x.target == CurveClass::C);
  CHECK(to_string(x.word.inverse()) == "td- td- tc- td- tc-");
}

TEST_CASE("non-curves are rejected") {
  CHECK_THROWS_AS(untwist({0, 0}), InvalidInput);
  CHECK_THROWS_AS(untwist({2, 0}), InvalidInput);
  CHECK_THROWS_AS(classify({2, 0}), InvalidInput);
  CHECK_THROWS_AS(conjugation_length({4, 2}), InvalidInput);
  CHECK_THROWS_AS(twists_conjugate({0, 1}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(parse_curve_class("f"), InvalidInput);
  CHECK(parse_curve_class("e") == CurveClass::E);
}

TEST_CASE("untwisting certificates over a box") {
  sweep(40, [](const DynnikovCoord& d) {
    if (!is_essential(d)) return;
    UntwistResult u = untwist(d);
    CHECK(is_terminal(u.terminal));
    CHECK(apply_word(u.word, d) == u.terminal);
    CHECK(u.terminal == coords_of(classify(d)));
    CHECK(u.word.is_freely_reduced());
    CHECK(Integer(u.word.size()) == conjugation_length(d));
    REQUIRE(u.trajectory.size() == u.word.size() + 1);
    for (std::size_t i = 0; i < u.word.size(); ++i) {
      CHECK(apply_twist(u.word.letters[i], u.trajectory[i]) == u.trajectory[i + 1]);
    }
  });
}

TEST_CASE("the track index never grows along an untwisting path") {
  // Index of the track the step moves along, before and after the step.
  sweep(40, [](const DynnikovCoord& d) {
    if (!is_essential(d)) return;
    UntwistResult u = untwist(d);
    std::optional<Integer> last;
    std::optional<Generator> prev;
    for (std::size_t i = 0; i < u.word.size(); ++i) {
      Generator g = u.word.letters[i];
      Integer n = track_index(u.trajectory[i], family_of(g));
      if (last) {
        CHECK(n <= *last);
        if (prev && *prev != g && u.trajectory[i] != DynnikovCoord{1, 0}) CHECK(n < *last);
      }
      last = n;
      prev = g;
    }
  });
}

TEST_CASE("classes are invariant under every generator") {
  sweep(30, [](const DynnikovCoord& d) {
    if (!is_essential(d)) return;
    CurveClass k = classify(d);
    for (Generator g : kGenerators) CHECK(classify(apply_twist(g, d)) == k);
  });
}

TEST_CASE("b = 0 forces (+-1,0) for curves") {
  for (int a = -20; a <= 20; ++a) {
    if (a == 0) continue;
    CHECK(is_essential({a, 0}) == (std::abs(a) == 1));
  }
}
