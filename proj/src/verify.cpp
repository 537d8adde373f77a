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

#include "nimforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "nimforge/formulas.hpp"

namespace nimforge {

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Match: return "Match";
    case VerifyStatus::Mismatch: return "Mismatch";
    case VerifyStatus::Flagged: return "Flagged";
  }
  return "?";
}

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json value_json(const CheckValue& v) {
  return std::visit([](auto x) { return Json(x); }, v);
}

Json pos_json(const Position& p) {
  return std::visit(
      [](const auto& v) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, HeapPair>) {
          return Json::array({v.x, v.y});
        } else {
          return Json::array({v[0], v[1], v[2]});
        }
      },
      p);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void record(VerifyReport& report, const Position& pos, CheckValue expected,
            CheckValue actual) {
  if (!report.first_mismatch) {
    report.first_mismatch = MismatchWitness{pos, expected, actual};
  }
}

void finish(VerifyReport& report, Clock::time_point start) {
  if (report.first_mismatch) report.status = VerifyStatus::Mismatch;
  report.elapsed_seconds = seconds_since(start);
}

FormulaFn default_formula(const RulesetSpec& spec) {
  switch (spec.family) {
    case Family::Yama:
    case Family::Triangular:
      return [spec](const Position& p) -> CheckValue {
        return *formula_grundy(spec, std::get<HeapPair>(p));
      };
    case Family::AbYama:
      return [spec](const Position& p) -> CheckValue {
        const auto& q = std::get<HeapPair>(p);
        return ab_p_position(spec.a, spec.b, q.x, q.y);
      };
    default:
      return [spec](const Position& p) -> CheckValue { return formula_p(spec, p); };
  }
}

template <class Pos>
void sweep(const GrundyMap<Pos>& map, const FormulaFn& formula, VerifyReport& report) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Pos p = map.position(i);
    const Grundy g = map.values[i];
    const CheckValue expected = formula(Position{p});
    const CheckValue actual = std::holds_alternative<Grundy>(expected)
                                  ? CheckValue{g}
                                  : CheckValue{g == 0};
    ++report.checked;
    if (g == 0) ++report.p_count;
    if (expected != actual) record(report, Position{p}, expected, actual);
  }
}

}  // namespace

std::string to_json(const VerifyReport& report, bool with_elapsed) {
  Json doc;
  doc["spec"] = report.spec;
  doc["T"] = report.bound;
  doc["status"] = std::string(to_string(report.status));
  if (report.first_mismatch) {
    doc["first_mismatch"] = {{"pos", pos_json(report.first_mismatch->pos)},
                             {"expected", value_json(report.first_mismatch->expected)},
                             {"actual", value_json(report.first_mismatch->actual)}};
  } else {
    doc["first_mismatch"] = nullptr;
  }
  doc["checked"] = report.checked;
  doc["p_count"] = report.p_count;
  if (!report.note.empty()) doc["note"] = report.note;
  if (with_elapsed) doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc.dump();
}

VerifyReport compare_formula_vs_oracle(const RulesetSpec& spec, Count bound,
                                       const SolveOptions& options,
                                       const FormulaFn& formula_in) {
  const auto start = Clock::now();
  validate(spec);
  VerifyReport report;
  report.spec = to_string(spec);
  report.bound = bound;
  const FormulaFn formula = formula_in ? formula_in : default_formula(spec);
  if (dimension(spec) == 2) {
    sweep(grundy_table<HeapPair>(spec, bound, options), formula, report);
  } else {
    sweep(grundy_table<HeapTriple>(spec, bound, options), formula, report);
  }
  finish(report, start);
  if (!has_closed_form(spec)) {
    report.status = VerifyStatus::Flagged;
    report.note = "no closed form is claimed for b < 0; compared against the window union " +
                  std::string(report.first_mismatch ? "with disagreement" : "without disagreement");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

Count gap(Count x, Count y) { return x > y ? x - y : y - x; }

Grundy yama_class(const Position& pos) {
  const auto& p = std::get<HeapPair>(pos);
  if (gap(p.x, p.y) <= 1) return 0;
  return p.min() + 1;
}

// Class 0 for |x - y| <= 1, then the quadratic band where the value is
// x + y - 1, then the arithmetic progressions with step d.
Grundy triangular_class(const Position& pos) {
  const auto& p = std::get<HeapPair>(pos);
  const Count d = gap(p.x, p.y);
  if (d <= 1) return 0;
  if (p.total() <= d * d + 1) return p.total() - 1;
  const Count lo = p.min();
  for (Count g = d * (d - 1) / 2; g < d * (d + 1) / 2; ++g) {
    if (lo >= 1 + g && (lo - 1 - g) % d == 0) return g;
  }
  throw std::logic_error("position " + to_string(p) + " is in no class");
}

}  // namespace

PartitionFn builtin_partition(const RulesetSpec& spec) {
  if (spec.family == Family::Yama) return yama_class;
  if (spec.family == Family::Triangular) return triangular_class;
  throw UsageError("no built-in partition for " + to_string(spec));
}

VerifyReport partition_check(const RulesetSpec& spec, const PartitionFn& partition,
                             Count bound) {
  const auto start = Clock::now();
  validate(spec);
  if (dimension(spec) != 2) throw UsageError("partition checks take 2-heap rulesets");
  VerifyReport report;
  report.spec = to_string(spec);
  report.bound = bound;
  const Simplex region(2, bound);
  std::vector<HeapPair> opts;
  std::vector<char> reached;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const HeapPair p = region.pair_at(i);
    const Grundy cls = partition(p);
    ++report.checked;
    if (cls == 0) ++report.p_count;
    opts.clear();
    append_options(spec, p, opts);
    reached.assign(cls, 0);
    std::optional<HeapPair> same;
    for (const HeapPair& q : opts) {
      const Grundy qc = partition(q);
      if (qc == cls && !same) same = q;
      if (qc < cls) reached[qc] = 1;
    }
    if (same) {
      if (!report.first_mismatch) {
        report.note = "option " + to_string(*same) + " stays in class " + std::to_string(cls);
      }
      record(report, p, cls, cls);
      continue;
    }
    auto missing = std::find(reached.begin(), reached.end(), 0);
    if (missing != reached.end()) {
      const auto lost = static_cast<Grundy>(missing - reached.begin());
      if (!report.first_mismatch) {
        report.note = "class " + std::to_string(lost) + " is unreachable";
      }
      record(report, p, cls, lost);
    }
  }
  finish(report, start);
  return report;
}

// ---------------------------------------------------------------------------
// Misere

namespace {

std::optional<std::function<bool(const HeapPair&)>> misere_closed_form(const RulesetSpec& spec) {
  switch (spec.family) {
    case Family::Yama:
      return [](const HeapPair& p) { return yama_misere_p(p.x, p.y); };
    case Family::Triangular:
      return [](const HeapPair& p) { return triangular_misere_p(p.x, p.y); };
    case Family::YamaWythoff:
      return [c = static_cast<Count>(spec.c)](const HeapPair& p) {
        return yama_wythoff_misere_p(c, p.x, p.y);
      };
    default:
      return std::nullopt;
  }
}

template <class Pos>
VerifyReport misere_sweep(const RulesetSpec& spec, Count bound, SolveOptions options) {
  options.with_phases = true;
  options.with_misere = true;
  const auto map = grundy_table<Pos>(spec, bound, options);
  const auto via = misere_p_via_phase(map);
  const std::set<Pos> via_set(via.p_positions.begin(), via.p_positions.end());

  VerifyReport report;
  report.spec = to_string(spec);
  report.bound = bound;
  std::optional<std::function<bool(const HeapPair&)>> closed;
  if constexpr (std::is_same_v<Pos, HeapPair>) closed = misere_closed_form(spec);

  for (std::size_t i = 0; i < map.size(); ++i) {
    const Pos p = map.position(i);
    const bool direct = map.misere[i] == Outcome::P;
    ++report.checked;
    if (direct) ++report.p_count;
    const bool by_phase = via_set.count(p) > 0;
    if (by_phase != direct) {
      record(report, Position{p}, by_phase, direct);
      if (report.note.empty()) report.note = "phase method disagrees with direct induction";
    }
    if constexpr (std::is_same_v<Pos, HeapPair>) {
      if (closed && (*closed)(p) != direct) {
        record(report, Position{p}, (*closed)(p), direct);
        if (report.note.empty()) report.note = "closed-form misere set disagrees";
      }
    }
  }
  if (via.flagged) {
    report.status = VerifyStatus::Flagged;
    report.note = via.note;
  }
  return report;
}

}  // namespace

VerifyReport misere_cross_check(const RulesetSpec& spec, Count bound,
                                const SolveOptions& options) {
  const auto start = Clock::now();
  validate(spec);
  VerifyReport report = dimension(spec) == 2
                            ? misere_sweep<HeapPair>(spec, bound, options)
                            : misere_sweep<HeapTriple>(spec, bound, options);
  if (report.status == VerifyStatus::Flagged) {
    report.elapsed_seconds = seconds_since(start);
    return report;
  }
  finish(report, start);
  return report;
}

// ---------------------------------------------------------------------------
// Conjecture scan

VerifyReport conjecture_scan(Count c, Grundy g, Count bound, const SolveOptions& options) {
  const auto start = Clock::now();
  const RulesetSpec spec = RulesetSpec::triangular_wythoff(static_cast<std::int64_t>(c));
  const auto map = grundy_table<HeapPair>(spec, bound, options);

  auto order = [](const HeapPair& a, const HeapPair& b) {
    return std::make_pair(a.total(), a.x) < std::make_pair(b.total(), b.x);
  };
  auto on_band = [g](const HeapPair& p) { return p.total() == g + 1; };

  std::set<HeapPair, decltype(order)> oracle(order), predicted(order);
  VerifyReport report;
  report.spec = to_string(spec) + ",g=" + std::to_string(g);
  report.bound = bound;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const HeapPair p = map.position(i);
    if (map.values[i] == 0) ++report.p_count;
    if (p.x > p.y || map.values[i] != g) continue;
    report.details.push_back(to_string(p));
    if (!on_band(p)) oracle.insert(p);
  }
  for (Count k = 0;; ++k) {
    const HeapPair p{conjectured_wythoff_grundy_seq(c, g, k),
                     conjectured_wythoff_grundy_seq(c, g, k + 1)};
    if (p.total() > bound) break;
    if (!on_band(p)) predicted.insert(p);
  }
  report.checked = map.size();

  std::vector<HeapPair> diff;
  std::set_symmetric_difference(oracle.begin(), oracle.end(), predicted.begin(),
                                predicted.end(), std::back_inserter(diff), order);
  if (!diff.empty()) {
    const HeapPair p = diff.front();
    record(report, p, predicted.count(p) > 0, map.grundy(p));
    report.note = predicted.count(p) ? "predicted pair has a different Grundy value"
                                     : "oracle position missing from the predicted pairs";
  }
  finish(report, start);
  return report;
}

}  // namespace nimforge
