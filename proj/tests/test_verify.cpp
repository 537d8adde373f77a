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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nimforge/formulas.hpp"
#include "nimforge/verify.hpp"

using namespace nimforge;

namespace {

std::string golden_table() {
  std::ifstream in(NIMFORGE_TEST_DATA "/triangular_table_16.txt", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("formula sweeps match") {
  const auto yama = compare_formula_vs_oracle(RulesetSpec::yama(), 60);
  CHECK(yama.status == VerifyStatus::Match);
  CHECK(yama.checked == 1891);
  CHECK(yama.p_count == 91);
  CHECK_FALSE(yama.first_mismatch.has_value());

  const auto tri = compare_formula_vs_oracle(RulesetSpec::triangular(), 60);
  CHECK(tri.status == VerifyStatus::Match);
  CHECK(render_ascii(grundy_table<HeapPair>(RulesetSpec::triangular(), 30), 15) ==
        golden_table());
}

TEST_CASE("an injected fault is caught with its witness") {
  const FormulaFn off_by_one = [](const Position& p) -> CheckValue {
    const auto& q = std::get<HeapPair>(p);
    const Grundy g = yama_grundy(q.x, q.y);
    return q.x == 4 && q.y == 9 ? g + 1 : g;
  };
  const auto report = compare_formula_vs_oracle(RulesetSpec::yama(), 20, {}, off_by_one);
  CHECK(report.status == VerifyStatus::Mismatch);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(report.first_mismatch->pos == Position{HeapPair{4, 9}});
  CHECK(report.first_mismatch->expected == CheckValue{Grundy{6}});
  CHECK(report.first_mismatch->actual == CheckValue{Grundy{5}});
}

TEST_CASE("first mismatch follows (total, x, y) order") {
  const FormulaFn never_p = [](const Position&) -> CheckValue { return false; };
  const auto report = compare_formula_vs_oracle(RulesetSpec::geometric(2), 10, {}, never_p);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(report.first_mismatch->pos == Position{HeapPair{0, 0}});
  CHECK(report.first_mismatch->expected == CheckValue{false});
  CHECK(report.first_mismatch->actual == CheckValue{true});
}

TEST_CASE("negative b ab-Yama is flagged") {
  const auto report = compare_formula_vs_oracle(RulesetSpec::ab_yama(3, -1), 30);
  CHECK(report.status == VerifyStatus::Flagged);
  CHECK_FALSE(report.note.empty());
}

TEST_CASE("partition certificates") {
  const auto yama = RulesetSpec::yama();
  const auto tri = RulesetSpec::triangular();
  CHECK(partition_check(yama, builtin_partition(yama), 40).status == VerifyStatus::Match);
  CHECK(partition_check(tri, builtin_partition(tri), 40).status == VerifyStatus::Match);

  // The certified partition and the oracle name the same P-set.
  const auto cls = builtin_partition(yama);
  const auto map = grundy_table<HeapPair>(yama, 40);
  for (std::size_t i = 0; i < map.size(); ++i) {
    REQUIRE((cls(Position{map.position(i)}) == 0) == (map.values[i] == 0));
  }

  const PartitionFn moved = [cls](const Position& p) -> Grundy {
    return std::get<HeapPair>(p) == HeapPair{2, 6} ? 0 : cls(p);
  };
  const auto bad = partition_check(yama, moved, 40);
  CHECK(bad.status == VerifyStatus::Mismatch);
  CHECK(bad.first_mismatch.has_value());
  CHECK_THROWS_AS(builtin_partition(RulesetSpec::geometric(2)), UsageError);
}

TEST_CASE("misere cross checks") {
  CHECK(misere_cross_check(RulesetSpec::triangular(), 40).status == VerifyStatus::Match);
  CHECK(misere_cross_check(RulesetSpec::yama(), 40).status == VerifyStatus::Match);
  CHECK(misere_cross_check(RulesetSpec::yama_wythoff(3), 40).status == VerifyStatus::Match);
}

TEST_CASE("conjecture scans") {
  const auto g4 = conjecture_scan(1, 4, 80);
  CHECK(g4.status == VerifyStatus::Mismatch);
  REQUIRE(g4.first_mismatch.has_value());
  CHECK(g4.first_mismatch->pos == Position{HeapPair{5, 8}});
  CHECK(g4.first_mismatch->actual == CheckValue{Grundy{4}});

  const auto c2 = conjecture_scan(2, 26, 80);
  REQUIRE(c2.first_mismatch.has_value());
  CHECK(c2.first_mismatch->pos == Position{HeapPair{27, 37}});
  CHECK(c2.first_mismatch->actual == CheckValue{Grundy{26}});

  CHECK(conjecture_scan(1, 2, 80).status == VerifyStatus::Match);
}

TEST_CASE("reports are reproducible and serialize in a fixed order") {
  const auto a = compare_formula_vs_oracle(RulesetSpec::sub_geometric(3), 50);
  SolveOptions one;
  one.threads = 1;
  const auto b = compare_formula_vs_oracle(RulesetSpec::sub_geometric(3), 50, one);
  CHECK(to_json(a) == to_json(b));

  const auto doc = nlohmann::ordered_json::parse(to_json(conjecture_scan(1, 4, 80), true));
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"spec", "T", "status", "first_mismatch", "checked",
                                         "p_count", "note", "elapsed_seconds"});
  CHECK(doc["first_mismatch"]["pos"] == nlohmann::ordered_json::array({5, 8}));
}
