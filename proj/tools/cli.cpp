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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nimforge/core.hpp"
#include "nimforge/formulas.hpp"
#include "nimforge/rulesets.hpp"
#include "nimforge/solver.hpp"
#include "nimforge/transfinite.hpp"
#include "nimforge/verify.hpp"

namespace nimforge::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string spec;
  std::string position;
  std::string family;
  Count max = 0;
  std::string format = "ascii";
  std::string source = "oracle";
  bool formula = false;
  unsigned threads = 0;
  std::string out_path;
  std::string exponents = "0,1,2";
  Count coeff_cap = 6;
  Count margin = 2;
  Count c = 0;
  Count g = 0;
};

// Command output plus the exit code it implies.
struct Result {
  std::string text;
  int code = kExitOk;
};

SolveOptions solve_options(const Config& cfg) {
  SolveOptions opts;
  opts.threads = cfg.threads;
  return opts;
}

int status_code(VerifyStatus s) { return s == VerifyStatus::Match ? kExitOk : kExitMismatch; }

template <class Pos>
std::string position_lines(const std::vector<Pos>& list) {
  std::string text;
  for (const Pos& p : list) text += to_string(p) + '\n';
  return text;
}

template <class Pos>
Json position_array(const std::vector<Pos>& list) {
  Json arr = Json::array();
  for (const Pos& p : list) {
    Json item = Json::array();
    if constexpr (std::is_same_v<Pos, HeapPair>) {
      item = {p.x, p.y};
    } else {
      item = {p[0], p[1], p[2]};
    }
    arr.push_back(item);
  }
  return arr;
}

// ---------------------------------------------------------------------------
// table

template <class Pos>
GrundyMap<Pos> full_table(const RulesetSpec& spec, Count bound, const Config& cfg) {
  SolveOptions opts = solve_options(cfg);
  opts.with_phases = true;
  opts.with_misere = true;
  return grundy_table<Pos>(spec, bound, opts);
}

Result cmd_table(const Config& cfg) {
  const RulesetSpec spec = parse_spec(cfg.spec);
  const TableFormat format = parse_table_format(cfg.format);
  if (format == TableFormat::Ascii) {
    if (dimension(spec) != 2) throw UsageError("ascii tables need a 2-heap ruleset; use csv or json");
    if (cfg.max > kMaxAsciiSide) {
      throw UsageError("ascii tables stop at --max " + std::to_string(kMaxAsciiSide) +
                       "; use csv or json");
    }
    SolveOptions opts = solve_options(cfg);
    return {render_ascii(grundy_table<HeapPair>(spec, 2 * cfg.max, opts), cfg.max)};
  }
  if (dimension(spec) == 2) {
    const auto map = full_table<HeapPair>(spec, cfg.max, cfg);
    return {format == TableFormat::Csv ? export_csv(map) : export_json(map) + '\n'};
  }
  const auto map = full_table<HeapTriple>(spec, cfg.max, cfg);
  return {format == TableFormat::Csv ? export_csv(map) : export_json(map) + '\n'};
}

// ---------------------------------------------------------------------------
// pps

template <class Pos>
std::vector<Pos> formula_list(const RulesetSpec& spec, Count bound) {
  if (!has_p_formula(spec)) {
    throw UsageError(to_string(spec) + " has no proven P-position formula");
  }
  const std::size_t n = Simplex::count(dimension(spec), bound);
  if (n > default_capacity()) {
    throw CapacityError("region of " + std::to_string(n) + " positions exceeds the capacity of " +
                        std::to_string(default_capacity()));
  }
  const Simplex region(dimension(spec), bound);
  std::vector<Pos> list;
  for (std::size_t i = 0; i < region.size(); ++i) {
    Pos p;
    if constexpr (std::is_same_v<Pos, HeapPair>) {
      p = region.pair_at(i);
    } else {
      p = region.triple_at(i);
    }
    if (formula_p(spec, Position{p})) list.push_back(p);
  }
  return list;
}

template <class Pos>
Result pps_for(const RulesetSpec& spec, const Config& cfg, std::ostream& err) {
  const std::string source = cfg.formula ? "formula" : cfg.source;
  if (source != "oracle" && source != "formula" && source != "both") {
    throw UsageError("unknown source '" + source + "' (oracle, formula, both)");
  }
  const TableFormat format = parse_table_format(cfg.format);
  std::vector<Pos> list;
  int code = kExitOk;
  if (source == "formula") {
    list = formula_list<Pos>(spec, cfg.max);
  } else {
    list = p_positions<Pos>(spec, cfg.max, solve_options(cfg));
    if (source == "both") {
      const std::vector<Pos> predicted = formula_list<Pos>(spec, cfg.max);
      if (predicted != list) {
        std::vector<Pos> diff;
        std::set_symmetric_difference(list.begin(), list.end(), predicted.begin(),
                                      predicted.end(), std::back_inserter(diff),
                                      [](const Pos& a, const Pos& b) {
                                        return std::make_pair(a.total(), a) <
                                               std::make_pair(b.total(), b);
                                      });
        const Pos& first = diff.front();
        const bool in_oracle = std::binary_search(list.begin(), list.end(), first,
                                                  [](const Pos& a, const Pos& b) {
                                                    return std::make_pair(a.total(), a) <
                                                           std::make_pair(b.total(), b);
                                                  });
        err << "formula and oracle disagree at " << to_string(first) << " ("
            << (in_oracle ? "oracle P, formula N" : "formula P, oracle N") << "), "
            << diff.size() << " differences\n";
        code = kExitMismatch;
      }
    }
  }
  if (format == TableFormat::Json) {
    Json doc;
    doc["spec"] = to_string(spec);
    doc["T"] = cfg.max;
    doc["source"] = source;
    doc["p_positions"] = position_array(list);
    return {doc.dump() + '\n', code};
  }
  return {position_lines(list), code};
}

Result cmd_pps(const Config& cfg, std::ostream& err) {
  const RulesetSpec spec = parse_spec(cfg.spec);
  return dimension(spec) == 2 ? pps_for<HeapPair>(spec, cfg, err)
                              : pps_for<HeapTriple>(spec, cfg, err);
}

// ---------------------------------------------------------------------------
// reports

Result report_result(const VerifyReport& report) {
  return {to_json(report) + '\n', status_code(report.status)};
}

Result cmd_verify(const Config& cfg) {
  return report_result(compare_formula_vs_oracle(parse_spec(cfg.spec), cfg.max, solve_options(cfg)));
}

Result cmd_misere(const Config& cfg) {
  return report_result(misere_cross_check(parse_spec(cfg.spec), cfg.max, solve_options(cfg)));
}

Result cmd_conjecture(const Config& cfg) {
  return report_result(conjecture_scan(cfg.c, cfg.g, cfg.max, solve_options(cfg)));
}

std::vector<Ordinal> parse_exponents(const std::string& text) {
  std::vector<Ordinal> list;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) list.push_back(Ordinal::parse(item));
  if (list.empty()) throw UsageError("empty exponent list");
  return list;
}

Result cmd_transfinite(const Config& cfg) {
  const TransfiniteFamily family = parse_transfinite_family(cfg.family);
  const OrdinalUniverse universe(parse_exponents(cfg.exponents), cfg.coeff_cap, cfg.margin);
  const ClosureReport r = closure_check(family, universe, {}, cfg.threads);
  Json doc;
  doc["family"] = std::string(to_string(family));
  doc["universe"] = r.universe;
  doc["status"] = r.passed() ? "Match" : "Mismatch";
  doc["pairs"] = r.pairs;
  doc["p_count"] = r.p_count;
  doc["condition1_failures"] = r.condition1_failures;
  doc["interior_failures"] = r.interior_failures;
  doc["interior_checked"] = r.interior_checked;
  doc["extended_resolved"] = r.extended_resolved;
  doc["unchecked"] = r.unchecked;
  if (r.first_failure) {
    doc["first_failure"] = {{"pair", {r.first_failure->first.to_string(),
                                      r.first_failure->second.to_string()}},
                            {"kind", r.first_failure_kind}};
  } else {
    doc["first_failure"] = nullptr;
  }
  return {doc.dump() + '\n', r.passed() ? kExitOk : kExitMismatch};
}

// ---------------------------------------------------------------------------
// best-move

Result cmd_best_move(const Config& cfg) {
  const RulesetSpec spec = parse_spec(cfg.spec);
  const Position pos = parse_position(cfg.position);
  if (nimforge::dimension(pos) != dimension(spec)) {
    throw UsageError(to_string(spec) + " takes " + std::to_string(dimension(spec)) + " heaps");
  }
  const auto move = winning_move(spec, pos);
  return {(move ? to_string(*move) : std::string("P-position")) + '\n'};
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--threads", cfg.threads, "Worker cap (0 = available parallelism)");
  cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_max(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--max", cfg.max, "Largest heap total in the region")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"nimforge: Grundy tables, P-positions and formula checks for Nim variants",
               "nimforge"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Grundy table of a ruleset");
  table->add_option("spec", cfg.spec, "Ruleset, e.g. triangular or geo:d=2")->required();
  add_max(table, cfg);
  table->add_option("--format", cfg.format, "ascii (square 0..max), csv or json (triangle)");
  add_common(table, cfg);

  auto* pps = app.add_subcommand("pps", "List P-positions");
  pps->add_option("spec", cfg.spec, "Ruleset")->required();
  add_max(pps, cfg);
  pps->add_option("--source", cfg.source, "oracle, formula or both");
  pps->add_flag("--formula", cfg.formula, "Same as --source formula");
  pps->add_option("--format", cfg.format, "ascii (one position per line) or json");
  add_common(pps, cfg);

  auto* verify = app.add_subcommand("verify", "Closed form against brute force");
  verify->add_option("spec", cfg.spec, "Ruleset")->required();
  add_max(verify, cfg);
  add_common(verify, cfg);

  auto* misere = app.add_subcommand("misere", "Misere phase method against direct induction");
  misere->add_option("spec", cfg.spec, "Ruleset")->required();
  add_max(misere, cfg);
  add_common(misere, cfg);

  auto* conjecture = app.add_subcommand("conjecture", "Scan a conjectured Grundy-value sequence");
  conjecture->add_option("--c", cfg.c, "Twist parameter")->required();
  conjecture->add_option("--g", cfg.g, "Grundy value")->required();
  add_max(conjecture, cfg);
  add_common(conjecture, cfg);

  auto* transfinite = app.add_subcommand("transfinite", "Closure check on an ordinal universe");
  transfinite->add_option("family", cfg.family, "wythoff, yama or triangular")->required();
  transfinite->add_option("--exponents", cfg.exponents, "Comma-separated exponents, must include 0");
  transfinite->add_option("--coeff-cap", cfg.coeff_cap, "Largest coefficient");
  transfinite->add_option("--margin", cfg.margin, "Interior margin");
  add_common(transfinite, cfg);

  auto* best = app.add_subcommand("best-move", "A winning move, or P-position");
  best->add_option("spec", cfg.spec, "Ruleset")->required();
  best->add_option("position", cfg.position, "Heaps, e.g. 3,5 or 1,1,1")->required();
  add_common(best, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Result result;
    if (*table) result = cmd_table(cfg);
    else if (*pps) result = cmd_pps(cfg, err);
    else if (*verify) result = cmd_verify(cfg);
    else if (*misere) result = cmd_misere(cfg);
    else if (*conjecture) result = cmd_conjecture(cfg);
    else if (*transfinite) result = cmd_transfinite(cfg);
    else result = cmd_best_move(cfg);

    if (cfg.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + cfg.out_path);
      file << result.text;
    }
    return result.code;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace nimforge::cli
