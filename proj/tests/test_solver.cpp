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
#include <cstdlib>
#include <random>
#include <set>

#include <json.hpp>

#include "naive_oracle.hpp"
#include "nimforge/solver.hpp"

using namespace nimforge;
using nimforge::testing::all_pairs;
using nimforge::testing::all_triples;

namespace {

std::vector<RulesetSpec> pair_specs() {
  std::vector<RulesetSpec> specs = {RulesetSpec::yama(), RulesetSpec::triangular(),
                                    RulesetSpec::classic_wythoff(),
                                    RulesetSpec::ab_yama(3, 1), RulesetSpec::ab_triangular(3, -1),
                                    RulesetSpec::ab_yama(4, -2)};
  for (std::int64_t c = 0; c <= 4; ++c) {
    specs.push_back(RulesetSpec::yama_wythoff(c));
    specs.push_back(RulesetSpec::triangular_wythoff(c));
  }
  for (std::int64_t d = 2; d <= 4; ++d) {
    specs.push_back(RulesetSpec::geometric(d));
    specs.push_back(RulesetSpec::sub_geometric(d));
  }
  return specs;
}

SolveOptions full_layers(unsigned threads = 0) {
  SolveOptions o;
  o.threads = threads;
  o.with_phases = true;
  o.with_misere = true;
  return o;
}

}  // namespace

TEST_CASE("simplex indexing is dense and ordered by total") {
  for (int dim : {2, 3}) {
    const Simplex s(dim, 17);
    CHECK(s.size() == Simplex::count(dim, 17));
    Count prev_total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (dim == 2) {
        const HeapPair p = s.pair_at(i);
        REQUIRE(s.index(p) == i);
        REQUIRE(p.total() >= prev_total);
        prev_total = p.total();
      } else {
        const HeapTriple p = s.triple_at(i);
        REQUIRE(s.index(p) == i);
        REQUIRE(p.total() >= prev_total);
        prev_total = p.total();
      }
    }
  }
  CHECK(Simplex::count(2, 60) == 1891);
  CHECK(Simplex::count(3, 30) == 5456);
}

TEST_CASE("grundy table examples") {
  const auto tri = grundy_table<HeapPair>(RulesetSpec::triangular(), 30);
  CHECK(tri.grundy({2, 5}) == 6);
  CHECK(tri.grundy({7, 10}) == 3);
  CHECK(tri.grundy({0, 9}) == 8);
  CHECK(tri.grundy({4, 4}) == 0);
  const auto yama = grundy_table<HeapPair>(RulesetSpec::yama(), 20);
  CHECK(yama.grundy({2, 7}) == 3);
  CHECK(yama.grundy({3, 3}) == 0);
  CHECK(grundy_table<HeapPair>(RulesetSpec::geometric(3), 0).grundy({0, 0}) == 0);
  CHECK(grundy_table<HeapTriple>(RulesetSpec::three_heap(2), 0).grundy({{0, 0, 0}}) == 0);
  CHECK_THROWS_AS(tri.grundy({20, 20}), RangeError);
}

TEST_CASE("solver matches the naive oracle") {
  for (const auto& spec : pair_specs()) {
    CAPTURE(to_string(spec));
    const auto map = grundy_table<HeapPair>(spec, 18);
    for (const auto& [p, g] : testing::naive_grundy(spec, all_pairs(18))) {
      REQUIRE(map.grundy(p) == g);
    }
  }
  for (int v = 1; v <= 6; ++v) {
    const auto spec = RulesetSpec::three_heap(v);
    CAPTURE(v);
    const auto map = grundy_table<HeapTriple>(spec, 9);
    for (const auto& [p, g] : testing::naive_grundy(spec, all_triples(9))) {
      REQUIRE(map.grundy(p) == g);
    }
  }
}

TEST_CASE("self-consistency, P iff zero, symmetry") {
  for (const auto& spec : pair_specs()) {
    CAPTURE(to_string(spec));
    const auto map = grundy_table<HeapPair>(spec, 40);
    for (std::size_t i = 0; i < map.size(); ++i) {
      const HeapPair p = map.position(i);
      std::vector<Grundy> seen;
      for (const auto& q : options(spec, p)) seen.push_back(map.grundy(q));
      REQUIRE(map.values[i] == mex(seen));
      REQUIRE((map.outcome(p) == Outcome::P) == (map.values[i] == 0));
      REQUIRE(map.grundy(p.swapped()) == map.values[i]);
      REQUIRE(map.values[i] <= p.total() + 1);
    }
  }
  for (int v = 1; v <= 6; ++v) {
    const auto map = grundy_table<HeapTriple>(RulesetSpec::three_heap(v), 16);
    for (std::size_t i = 0; i < map.size(); ++i) {
      const HeapTriple p = map.position(i);
      const HeapTriple r{{p[2], p[0], p[1]}};
      const HeapTriple s{{p[1], p[0], p[2]}};
      REQUIRE(map.grundy(r) == map.values[i]);
      REQUIRE(map.grundy(s) == map.values[i]);
    }
  }
}

TEST_CASE("P-position examples") {
  std::set<HeapPair> yama;
  for (const auto& p : p_positions<HeapPair>(RulesetSpec::yama(), 10)) yama.insert(p);
  std::set<HeapPair> expected;
  for (const auto& p : all_pairs(10)) {
    if (p.max() - p.min() <= 1) expected.insert(p);
  }
  CHECK(yama == expected);

  std::set<HeapPair> geo;
  for (const auto& p : p_positions<HeapPair>(RulesetSpec::geometric(2), 13)) {
    geo.insert({p.min(), p.max()});
  }
  CHECK(geo == std::set<HeapPair>{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 4}, {4, 8}});

  for (const auto& p : p_positions<HeapTriple>(RulesetSpec::three_heap(4), 9)) {
    const HeapTriple s = p.sorted();
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
  }
  CHECK(p_positions<HeapTriple>(RulesetSpec::three_heap(4), 9).size() == 28);
}

TEST_CASE("capacity cap") {
  SolveOptions small;
  small.capacity = 100;
  CHECK_THROWS_AS(grundy_table<HeapPair>(RulesetSpec::yama(), 20, small), CapacityError);
  CHECK_THROWS_AS(grundy_table<HeapTriple>(RulesetSpec::yama(), 5), UsageError);
}

TEST_CASE("thread count does not change results") {
  for (const auto& spec : {RulesetSpec::triangular(), RulesetSpec::geometric(3)}) {
    const auto one = grundy_table<HeapPair>(spec, 120, full_layers(1));
    const auto many = grundy_table<HeapPair>(spec, 120, full_layers(8));
    CHECK(one.values == many.values);
    CHECK(one.phases == many.phases);
    CHECK(one.misere == many.misere);
  }
  const auto a = grundy_table<HeapTriple>(RulesetSpec::three_heap(2), 40, full_layers(1));
  const auto b = grundy_table<HeapTriple>(RulesetSpec::three_heap(2), 40, full_layers(5));
  CHECK(a.values == b.values);
}

TEST_CASE("phase examples") {
  const auto tri = phases<HeapPair>(RulesetSpec::triangular(), 30);
  const std::set<HeapPair> final_set{{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                     {1, 1}, {0, 2}, {2, 1}, {1, 2}};
  for (std::size_t i = 0; i < tri.size(); ++i) {
    const HeapPair p = tri.position(i);
    CAPTURE(p);
    CHECK((tri.phases[i] == Phase::Final) == (final_set.count(p) > 0));
  }
  const auto yw = phases<HeapPair>(RulesetSpec::yama_wythoff(0), 30);
  for (std::size_t i = 0; i < yw.size(); ++i) {
    if (yw.values[i] <= 1) CHECK(yw.phases[i] == Phase::Final);
  }
  for (const auto& spec : pair_specs()) {
    const auto m = phases<HeapPair>(spec, 25);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.values[i] > 1) REQUIRE(m.phases[i] == Phase::Normal);
    }
  }
}

TEST_CASE("misere examples") {
  const auto yama = misere_outcomes_direct<HeapPair>(RulesetSpec::yama(), 20);
  CHECK(yama.misere_outcome({0, 5}) == Outcome::P);
  CHECK(yama.misere_outcome({0, 0}) == Outcome::N);
  const auto tri = misere_outcomes_direct<HeapPair>(RulesetSpec::triangular(), 20);
  CHECK(tri.misere_outcome({0, 2}) == Outcome::P);
  CHECK(tri.misere_outcome({3, 3}) == Outcome::P);

  std::set<HeapPair> via;
  for (const auto& p : misere_p_via_phase<HeapPair>(RulesetSpec::yama(), 20).p_positions) {
    via.insert(p);
  }
  std::set<HeapPair> expected;
  for (const auto& p : all_pairs(20)) {
    if (p.min() == 0 && p.max() >= 2) expected.insert(p);
  }
  CHECK(via == expected);

  const auto yw = phases<HeapPair>(RulesetSpec::yama_wythoff(1), 30);
  const auto yw_via = misere_p_via_phase(yw);
  std::vector<HeapPair> ones;
  for (std::size_t i = 0; i < yw.size(); ++i) {
    if (yw.values[i] == 1) ones.push_back(yw.position(i));
  }
  CHECK(yw_via.p_positions == ones);
}

TEST_CASE("misere direct induction matches the naive oracle") {
  for (const auto& spec : pair_specs()) {
    CAPTURE(to_string(spec));
    const auto map = misere_outcomes_direct<HeapPair>(spec, 16);
    for (const auto& [p, is_p] : testing::naive_misere_p(spec, all_pairs(16))) {
      REQUIRE((map.misere_outcome(p) == Outcome::P) == is_p);
    }
  }
}

TEST_CASE("phase method equals direct misere on admissible families") {
  std::vector<RulesetSpec> specs = {RulesetSpec::yama(), RulesetSpec::triangular()};
  for (std::int64_t c = 0; c <= 4; ++c) {
    specs.push_back(RulesetSpec::yama_wythoff(c));
    specs.push_back(RulesetSpec::triangular_wythoff(c));
  }
  for (std::int64_t d = 2; d <= 4; ++d) {
    specs.push_back(RulesetSpec::geometric(d));
    specs.push_back(RulesetSpec::sub_geometric(d));
  }
  for (const auto& spec : specs) {
    CAPTURE(to_string(spec));
    const auto map = grundy_table<HeapPair>(spec, 60, full_layers());
    const auto via = misere_p_via_phase(map);
    REQUIRE_FALSE(via.flagged);
    CHECK(via.p_positions == misere_p_positions(map));
  }
}

TEST_CASE("admissibility examples") {
  const auto tri = check_admissible<HeapPair>(RulesetSpec::triangular(), 40);
  CHECK(tri.admissible);
  for (std::int64_t c = 0; c <= 4; ++c) {
    CAPTURE(c);
    CHECK(check_admissible<HeapPair>(RulesetSpec::yama_wythoff(c), 40).universally);
  }
  CHECK(check_admissible<HeapPair>(RulesetSpec::yama(), 40).universally);
}

TEST_CASE("admissibility witnesses name failing clauses") {
  // Classic Wythoff has g>1 positions whose low options are all Final, so
  // some clause fails and the witness must say which.
  const auto rep = check_admissible<HeapPair>(RulesetSpec::classic_wythoff(), 20);
  if (!rep.universally) {
    REQUIRE_FALSE(rep.witnesses.empty());
    for (const auto& w : rep.witnesses) {
      CHECK((w.clause == "admissible" || w.clause == "(i)" || w.clause == "(ii)" ||
             w.clause == "(iii)"));
    }
  }
}

TEST_CASE("disjunctive sum examples") {
  const auto yama = RulesetSpec::yama();
  CHECK(disjunctive_sum_grundy(yama, HeapPair{2, 7}, yama, HeapPair{3, 3}, 20) == 3);
  const auto g = ComponentGraph::from_ruleset(RulesetSpec::triangular(), 12);
  const auto dead = ComponentGraph::nim_heap(0);
  const auto tri_map = grundy_table<HeapPair>(RulesetSpec::triangular(), 12);
  for (std::size_t i = 0; i < tri_map.size(); ++i) {
    const HeapPair p = tri_map.position(i);
    REQUIRE(disjunctive_sum_grundy(g, p, dead, Count{0}) == tri_map.values[i]);
  }
  const auto y = ComponentGraph::from_ruleset(yama, 10);
  CHECK(disjunctive_sum_grundy(y, HeapPair{0, 2}, ComponentGraph::nim_heap(1), Count{1}) == 0);
}

TEST_CASE("sum of Grundy values is the XOR") {
  std::mt19937_64 rng(2024);
  const std::vector<RulesetSpec> specs = {RulesetSpec::yama(), RulesetSpec::triangular(),
                                          RulesetSpec::yama_wythoff(1),
                                          RulesetSpec::triangular_wythoff(2),
                                          RulesetSpec::geometric(2)};
  for (const auto& spec : specs) {
    CAPTURE(to_string(spec));
    const auto graph = ComponentGraph::from_ruleset(spec, 12);
    const auto other = ComponentGraph::from_ruleset(RulesetSpec::triangular(), 12);
    const auto map = grundy_table<HeapPair>(spec, 12);
    const auto tri = grundy_table<HeapPair>(RulesetSpec::triangular(), 12);
    const SumGame sum = solve_sum(graph, other);
    for (int k = 0; k < 200; ++k) {
      const HeapPair a = map.position(rng() % map.size());
      const HeapPair b = tri.position(rng() % tri.size());
      const Grundy g = sum.grundy[graph.node(a) * sum.width + other.node(b)];
      REQUIRE(g == (map.grundy(a) ^ tri.grundy(b)));
    }
  }
}

TEST_CASE("sum phases follow the product rule") {
  const auto yw = RulesetSpec::yama_wythoff(0);
  const auto both = sum_phase_check(yw, yw, 14);
  CHECK(both.consistent);
  CHECK(both.misere_ok);
  CHECK_FALSE(both.flagged);
  const auto a = ComponentGraph::from_ruleset(yw, 14);
  const auto with_nim = sum_phase_check(a, ComponentGraph::nim_heap(14));
  CHECK(with_nim.consistent);
  const auto dead = sum_phase_check(ComponentGraph::nim_heap(0), ComponentGraph::nim_heap(0));
  CHECK(dead.consistent);
  CHECK(solve_sum(ComponentGraph::nim_heap(0), ComponentGraph::nim_heap(0)).phases[0] ==
        Phase::Final);
}

TEST_CASE("csv and json export") {
  const auto map = grundy_table<HeapPair>(RulesetSpec::yama(), 5, full_layers());
  const std::string csv = export_csv(map);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
  CHECK(csv.rfind("x,y,grundy,outcome,phase,misere\n", 0) == 0);

  const auto doc = nlohmann::ordered_json::parse(export_json(map));
  CHECK(doc["spec"] == "yama");
  CHECK(doc["T"] == 5);
  REQUIRE(doc["entries"].size() == 21);
  for (const auto& e : doc["entries"]) {
    const HeapPair p{e["pos"][0].get<Count>(), e["pos"][1].get<Count>()};
    CHECK(e["grundy"].get<Grundy>() == map.grundy(p));
    CHECK(e["misere"] == std::string(to_string(map.misere_outcome(p))));
  }
  CHECK(parse_table_format("csv") == TableFormat::Csv);
  CHECK_THROWS_AS(parse_table_format("xml"), UsageError);
}

TEST_CASE("capacity comes from the environment") {
  ::setenv("NIMFORGE_CAP", "1234", 1);
  CHECK(default_capacity() == 1234);
  ::unsetenv("NIMFORGE_CAP");
  CHECK(default_capacity() == kDefaultCapacity);
}
