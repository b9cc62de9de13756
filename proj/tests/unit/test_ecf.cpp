#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "d3twist/ecf.hpp"

using namespace d3twist;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// m/n as a reduced pair with positive denominator ((1,0) for infinity).
std::pair<Integer, Integer> reduced(Integer m, Integer n) {
  Integer g = gcd(m, n);
  m /= g;
  n /= g;
  if (n < 0 || (n == 0 && m < 0)) {
    m = -m;
    n = -n;
  }
  return {m, n};
}

}  // namespace

TEST_CASE("worked expansions") {
  EcfExpansion e = ecf_expand(3, 1);
  CHECK(e.quotients == ints({2}));
  CHECK(e.trailing_one);
  CHECK(e.terminal == TorusCoord{1, 1});
  CHECK(to_string(e) == "[2,1]");

  e = ecf_expand(-1, 1);
  CHECK(e.quotients == ints({-2}));
  CHECK(e.trailing_one);
  CHECK(e.ambiguous);

  e = ecf_expand(13, -10);
  CHECK(e.quotients == ints({-2, 2, -2, 4}));
  CHECK_FALSE(e.trailing_one);
  CHECK(e.terminal == TorusCoord{1, 0});
  CHECK(e.epsilon == 1);

  e = ecf_expand(13, -3);
  CHECK(e.quotients == ints({-4, -4}));
  CHECK(e.trailing_one);
  CHECK(e.terminal == TorusCoord{1, 1});

  CHECK(ecf_expand(0, 1).quotients == ints({0}));
  CHECK(to_string(ecf_expand(1, 1)) == "[0,1]");
  CHECK(ecf_expand(1, 0).quotients.empty());
}

TEST_CASE("lengths") {
  CHECK(ecf_length(13, -10) == 5);
  CHECK(ecf_length(13, -3) == 4);
  CHECK(ecf_length(3, 1) == 1);
  CHECK(ecf_length(1, 0) == 0);
  CHECK(ecf_length(-13, 10) == 5);
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(ecf_expand(0, 0), InvalidInput);
  CHECK_THROWS_AS(ecf_expand(4, 6), InvalidInput);
  CHECK_THROWS_AS(factorize(2, 0), InvalidInput);
  CHECK_THROWS_AS(ecf_length(3, 9), InvalidInput);
}

TEST_CASE("factorizations") {
  Factorization f = factorize(3, 1);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == Mat2::upper(2));
  CHECK(f.terminal == TorusCoord{1, 1});

  f = factorize(13, -10);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == Mat2::upper(-2));
  CHECK(f.factors[1] == Mat2::lower(2));
  CHECK(f.factors[2] == Mat2::upper(-2));
  CHECK(f.factors[3] == Mat2::lower(4));
  CHECK(f.terminal == TorusCoord{1, 0});
  CHECK(f.product() * f.terminal == TorusCoord{13, -10});

  f = factorize(3, -1);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == Mat2::upper(-4));
  CHECK(f.terminal == TorusCoord{-1, -1});
  CHECK(ecf_expand(3, -1).epsilon == -1);
}

TEST_CASE("congruence subgroups") {
  CHECK(in_gamma2_bar({5, -4, 4, -3}));
  CHECK(in_gamma2_bar(Mat2::identity()));
  CHECK(in_gamma2(-Mat2::identity()));
  CHECK_FALSE(in_gamma2_bar(-Mat2::identity()));
  CHECK_FALSE(in_gamma2(Mat2::upper(1)));
  CHECK_THROWS_AS(in_gamma2({2, 0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(in_gamma2_bar({1, 1, 1, 1}), InvalidInput);

  // every word in U^{+-2}, L^{+-2} of length <= 6 lands in the subgroup
  const Mat2 gens[] = {Mat2::upper(2), Mat2::upper(-2), Mat2::lower(2), Mat2::lower(-2)};
  std::function<void(const Mat2&, int)> grow = [&](const Mat2& m, int left) {
    CHECK(in_gamma2_bar(m));
    if (left == 0) return;
    for (const Mat2& g : gens) grow(m * g, left - 1);
  };
  grow(Mat2::identity(), 6);
}

TEST_CASE("contract holds on every coprime pair in a box") {
  for (int m = -60; m <= 60; ++m) {
    for (int n = -60; n <= 60; ++n) {
      if (gcd(m, n) != 1) continue;
      auto v = ecf_contract_violations(m, n);
      CHECK_MESSAGE(v.empty(), (v.empty() ? std::string() : v.front()));
    }
  }
}

TEST_CASE("evaluating continued fractions") {
  auto [num, den] = evaluate_continued_fraction(ints({-2, 2, -2, 4}), false);
  CHECK(reduced(num, den) == reduced(13, -10));
  CHECK(reduced(num, den) != reduced(13, -9));
  CHECK(evaluate_continued_fraction({}, false) == std::pair<Integer, Integer>{1, 0});
  auto [h, k] = evaluate_continued_fraction(ints({-4, -4}), true);
  CHECK(reduced(h, k) == reduced(-13, 3));
}

TEST_CASE("expansions are unique apart from -1") {
  // All constrained expansions with |q| <= 8 and at most five even quotients,
  // bucketed by the rational they evaluate to.
  constexpr int kMaxQ = 8, kMaxLen = 5;
  std::map<std::pair<Integer, Integer>, std::vector<std::string>> found;
  std::vector<Integer> qs;
  std::function<void()> extend = [&] {
    if (!qs.empty()) {
      for (bool one : {false, true}) {
        auto value = evaluate_continued_fraction(qs, one);
        auto key = reduced(value.first, value.second);
        if (one && qs.back() == -2 && key != reduced(-1, 1)) continue;
        EcfExpansion e;
        e.quotients = qs;
        e.trailing_one = one;
        found[key].push_back(to_string(e));
      }
    }
    if (static_cast<int>(qs.size()) == kMaxLen) return;
    for (int q = -kMaxQ; q <= kMaxQ; q += 2) {
      if (q == 0 && !qs.empty()) continue;
      qs.emplace_back(q);
      extend();
      qs.pop_back();
    }
  };
  extend();

  std::size_t compared = 0;
  for (int m = -15; m <= 15; ++m) {
    for (int n = 1; n <= 15; ++n) {
      if (gcd(m, n) != 1) continue;
      EcfExpansion e = ecf_expand(m, n);
      bool inside = e.quotients.size() <= kMaxLen;
      for (const auto& q : e.quotients) inside = inside && abs(q) <= kMaxQ;
      if (!inside) continue;
      ++compared;
      const auto& all = found[reduced(m, n)];
      if (m * n == -1) {
        // -1 = [-2,1] = [0,-2,1] = [-2,2,-2,1] = ..., every one ending in -2
        CHECK(all.size() >= 2);
        CHECK(std::find(all.begin(), all.end(), to_string(e)) != all.end());
      } else {
        REQUIRE_MESSAGE(all.size() == 1, m << "/" << n << " has " << all.size() << " expansions");
        CHECK(all.front() == to_string(e));
      }
    }
  }
  CHECK(compared > 200);
}
