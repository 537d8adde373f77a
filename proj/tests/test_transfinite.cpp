// Copyright 2026 The nimforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "nimforge/formulas.hpp"
#include "nimforge/transfinite.hpp"

using namespace nimforge;

namespace {

Ordinal ord(const char* text) { return Ordinal::parse(text); }

OrdinalUniverse small_universe(Count cap = 4, Count margin = 1) {
  return OrdinalUniverse({Ordinal(0), Ordinal(1), Ordinal(2)}, cap, margin);
}

}  // namespace

TEST_CASE("ordinal text") {
  CHECK(ord("w^2*3 + w + 5").to_string() == "w^2*3 + w + 5");
  CHECK_THROWS_AS(ord("w^1*1 + 0"), UsageError);
  CHECK(ord("w^1*1").to_string() == "w");
  CHECK(ord("0").is_zero());
  CHECK(ord("7") == Ordinal(7));
  CHECK(ord("w^(w + 1)*2 + w^3").to_string() == "w^(w + 1)*2 + w^3");
  CHECK(ord("w^(w)").depth() == 2);
  CHECK(ord("w^(w^(w))").depth() == 3);
  for (const char* bad : {"", "w^", "w*0", "w + w^2", "w + w", "3 + w", "w^0", "x",
                          "w^(w^(w^(w)))", "w^2*", "-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ord(bad), UsageError);
  }
}

TEST_CASE("ordinal comparison") {
  CHECK(ord_cmp(Ordinal::omega(), Ordinal(5)) == std::strong_ordering::greater);
  CHECK(ord_cmp(ord("w + 3"), ord("w + 3")) == std::strong_ordering::equal);
  CHECK(ord_cmp(ord("w*2"), ord("w^2")) == std::strong_ordering::less);
  CHECK(ord("w^(w)") > ord("w^5*100"));
  CHECK(ord("w^(w + 1)") > ord("w^(w)*9"));
}

TEST_CASE("natural sum examples") {
  CHECK(natural_sum(Ordinal(1), Ordinal::omega()) == ord("w + 1"));
  CHECK(natural_sum(ord("w*2 + 1"), ord("w + 3")) == ord("w*3 + 4"));
  CHECK(natural_sum(ord("w^2 + 4"), Ordinal()) == ord("w^2 + 4"));
  CHECK(natural_sum(ord("w^(w)"), ord("w^2")) == ord("w^(w) + w^2"));
  CHECK_THROWS_AS(natural_sum(Ordinal(~Count{0}), Ordinal(1)), RangeError);
}

TEST_CASE("successor and predecessor") {
  CHECK(successor(Ordinal::omega()) == ord("w + 1"));
  CHECK_FALSE(predecessor(Ordinal::omega()).has_value());
  CHECK(predecessor(ord("w^2 + 5")) == ord("w^2 + 4"));
  CHECK(predecessor(successor(ord("w*3"))) == ord("w*3"));
}

TEST_CASE("universe elements round-trip through text and index") {
  const auto u = small_universe(5, 2);
  CHECK(u.size() == 216);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Ordinal a = u.element(i);
    REQUIRE(Ordinal::parse(a.to_string()) == a);
    REQUIRE(u.index_of(a) == i);
    if (i > 0) REQUIRE(u.element(i - 1) < a);
  }
  CHECK_FALSE(u.contains(ord("w^3")));
  CHECK_FALSE(u.contains(Ordinal(6)));
  CHECK(u.interior(ord("w^2*3 + 3")));
  CHECK_FALSE(u.interior(ord("w*4")));
  CHECK(u.describe() == "E={0,1,2},C=5,margin=2");
  CHECK_THROWS_AS(OrdinalUniverse({Ordinal(1)}, 3, 1), UsageError);
  CHECK_THROWS_AS(OrdinalUniverse({Ordinal(0)}, 3, 4), UsageError);
}

TEST_CASE("natural sum properties on random universe triples") {
  const auto u = small_universe(6, 2);
  std::mt19937_64 rng(99);
  for (int round = 0; round < 10000; ++round) {
    const Ordinal a = u.element(rng() % u.size());
    const Ordinal b = u.element(rng() % u.size());
    const Ordinal c = u.element(rng() % u.size());
    REQUIRE(natural_sum(a, b) == natural_sum(b, a));
    REQUIRE(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)));
    REQUIRE(natural_sum(a, Ordinal()) == a);
    const auto ab = natural_sum(a, c) <=> natural_sum(b, c);
    REQUIRE(ab == (a <=> b));  // strict monotonicity and cancellation at once
  }
}

TEST_CASE("nested exponents at depth two") {
  const OrdinalUniverse u({Ordinal(0), Ordinal(1), ord("w")}, 3, 1);
  CHECK(u.size() == 64);
  CHECK(u.contains(ord("w^(w)*2 + w + 3")));
  CHECK(u.element(u.size() - 1) == ord("w^(w)*3 + w*3 + 3"));
  const auto report = closure_check(TransfiniteFamily::Wythoff, u);
  CHECK(report.passed());
  CHECK(transfinite_wythoff_p(ord("w^(w) + 3"), ord("w^(w)*2 + 5")));
}

TEST_CASE("transfinite P formulas") {
  CHECK(transfinite_wythoff_p(ord("w + 3"), ord("w*2 + 5")));
  CHECK_FALSE(transfinite_wythoff_p(Ordinal::omega(), Ordinal::omega()));
  CHECK(transfinite_wythoff_p(Ordinal(), Ordinal()));
  CHECK_FALSE(transfinite_wythoff_p(ord("w + 3"), ord("w^2*2 + 5")));

  // The literal successor statement.
  CHECK(transfinite_successor_adjacent(Ordinal::omega(), ord("w + 1")));
  CHECK_FALSE(transfinite_successor_adjacent(Ordinal::omega(), Ordinal::omega()));
  CHECK(transfinite_successor_adjacent(Ordinal(0), Ordinal(1)));
  // The closure-consistent set adds the equal pairs.
  CHECK(transfinite_yama_p(Ordinal::omega(), Ordinal::omega()));
  CHECK(transfinite_triangular_p(ord("w + 4"), ord("w + 5")));
  CHECK_FALSE(transfinite_triangular_p(Ordinal::omega(), ord("w + 2")));
}

TEST_CASE("restriction to naturals matches the finite P-sets") {
  for (Count x = 0; x <= 60; ++x) {
    for (Count y = 0; y <= 60; ++y) {
      const Ordinal a(x), b(y);
      REQUIRE(transfinite_wythoff_p(a, b) == classic_wythoff_p(x, y));
      const bool close = (x > y ? x - y : y - x) <= 1;
      REQUIRE(transfinite_yama_p(a, b) == close);
      REQUIRE(transfinite_triangular_p(a, b) == close);
    }
  }
}

TEST_CASE("move rule examples") {
  const OrdinalUniverse u({Ordinal(0), Ordinal(1)}, 5, 1);
  const auto yama = transfinite_options(TransfiniteFamily::Yama, {Ordinal(3), Ordinal::omega()}, u);
  for (Count k = 0; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(std::count(yama.options.begin(), yama.options.end(),
                     OrdinalPair{Ordinal(4), Ordinal(k)}) == 1);
  }
  const auto tri = transfinite_options(TransfiniteFamily::Triangular,
                                       {Ordinal::omega(), Ordinal::omega()}, u);
  CHECK(std::count(tri.options.begin(), tri.options.end(),
                   OrdinalPair{ord("w + 1"), Ordinal(3)}) == 1);
  const auto wy = transfinite_options(TransfiniteFamily::Wythoff,
                                      {Ordinal::omega(), Ordinal::omega()}, u);
  CHECK(std::count(wy.options.begin(), wy.options.end(), OrdinalPair{Ordinal(), Ordinal()}) == 1);
  CHECK(wy.truncated);
}

TEST_CASE("every transfinite option lowers the natural sum") {
  const auto u = small_universe(3, 1);
  for (auto family : {TransfiniteFamily::Wythoff, TransfiniteFamily::Yama,
                      TransfiniteFamily::Triangular}) {
    for (std::size_t i = 0; i < u.size(); i += 3) {
      for (std::size_t j = 0; j < u.size(); j += 5) {
        const OrdinalPair from{u.element(i), u.element(j)};
        const auto sum = natural_sum(from.first, from.second);
        for (const auto& to : transfinite_options(family, from, u).options) {
          REQUIRE(natural_sum(to.first, to.second) < sum);
          REQUIRE(is_transfinite_move(family, from, to));
        }
      }
    }
  }
}

TEST_CASE("closure checks") {
  const OrdinalUniverse yama_u({Ordinal(0), Ordinal(1)}, 8, 2);
  CHECK(closure_check(TransfiniteFamily::Yama, yama_u).interior_failures == 0);
  const auto tri = closure_check(TransfiniteFamily::Triangular,
                                 OrdinalUniverse({Ordinal(0)}, 20, 2));
  CHECK(tri.passed());
  CHECK(tri.p_count == 21 + 2 * 20);

  const auto thread_a = closure_check(TransfiniteFamily::Wythoff, small_universe(5, 2), {}, 1);
  const auto thread_b = closure_check(TransfiniteFamily::Wythoff, small_universe(5, 2), {}, 6);
  CHECK(thread_a.interior_failures == thread_b.interior_failures);
  CHECK(thread_a.extended_resolved == thread_b.extended_resolved);
  CHECK(thread_a.unchecked == thread_b.unchecked);
  CHECK(thread_a.passed());
}

TEST_CASE("closure check catches a wrong P-set") {
  const auto literal = closure_check(TransfiniteFamily::Yama,
                                     OrdinalUniverse({Ordinal(0), Ordinal(1)}, 6, 2),
                                     transfinite_successor_adjacent);
  CHECK_FALSE(literal.passed());
  REQUIRE(literal.first_failure.has_value());

  const auto everything = closure_check(TransfiniteFamily::Wythoff, small_universe(3, 1),
                                        [](const Ordinal&, const Ordinal&) { return true; });
  CHECK(everything.condition1_failures > 0);
}

TEST_CASE("family names") {
  CHECK(parse_transfinite_family("triangular") == TransfiniteFamily::Triangular);
  CHECK(to_string(TransfiniteFamily::Wythoff) == "wythoff");
  CHECK_THROWS_AS(parse_transfinite_family("geo"), UsageError);
}
