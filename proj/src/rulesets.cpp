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

#include "nimforge/rulesets.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace nimforge {

using I64 = std::int64_t;

RulesetSpec RulesetSpec::ab_yama(I64 a, I64 b) {
  RulesetSpec s{Family::AbYama};
  s.a = a;
  s.b = b;
  return s;
}

RulesetSpec RulesetSpec::ab_triangular(I64 a, I64 b) {
  RulesetSpec s{Family::AbTriangular};
  s.a = a;
  s.b = b;
  return s;
}

RulesetSpec RulesetSpec::yama_wythoff(I64 c) {
  RulesetSpec s{Family::YamaWythoff};
  s.c = c;
  return s;
}

RulesetSpec RulesetSpec::triangular_wythoff(I64 c) {
  RulesetSpec s{Family::TriangularWythoff};
  s.c = c;
  return s;
}

RulesetSpec RulesetSpec::geometric(I64 d) {
  RulesetSpec s{Family::GeometricTwist};
  s.d = d;
  return s;
}

RulesetSpec RulesetSpec::sub_geometric(I64 d) {
  RulesetSpec s{Family::SubGeometricTwist};
  s.d = d;
  return s;
}

RulesetSpec RulesetSpec::three_heap(int variant) {
  RulesetSpec s{Family::ThreeHeap};
  s.variant = variant;
  return s;
}

void validate(const RulesetSpec& spec) {
  switch (spec.family) {
    case Family::AbYama:
    case Family::AbTriangular:
      if (spec.a < 1 || spec.b >= spec.a) {
        throw UsageError("ab-rulesets need a >= 1 and b < a (got a=" +
                         std::to_string(spec.a) + ", b=" +
                         std::to_string(spec.b) + ")");
      }
      break;
    case Family::YamaWythoff:
    case Family::TriangularWythoff:
      if (spec.c < 0) throw UsageError("Wythoff twist needs c >= 0");
      break;
    case Family::GeometricTwist:
    case Family::SubGeometricTwist:
      if (spec.d < 2) throw UsageError("geometric twist needs d >= 2");
      break;
    case Family::ThreeHeap:
      if (spec.variant < 1 || spec.variant > 6) {
        throw UsageError("3-heap variant must be in 1..6");
      }
      break;
    default:
      break;
  }
}

int dimension(const RulesetSpec& spec) {
  return spec.family == Family::ThreeHeap ? 3 : 2;
}

bool has_closed_form(const RulesetSpec& spec) {
  return !(spec.family == Family::AbYama && spec.b < 0);
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Yama, "yama"},
    {Family::Triangular, "triangular"},
    {Family::AbYama, "ab-yama"},
    {Family::AbTriangular, "ab-tri"},
    {Family::YamaWythoff, "yama-wythoff"},
    {Family::TriangularWythoff, "tri-wythoff"},
    {Family::GeometricTwist, "geo"},
    {Family::SubGeometricTwist, "subgeo"},
    {Family::ThreeHeap, "three"},
    {Family::ClassicWythoff, "wythoff"},
};

I64 parse_int(std::string_view key, std::string_view value) {
  I64 out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError("parameter '" + std::string(key) +
                     "' is not an integer: '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

RulesetSpec parse_spec(std::string_view text) {
  std::string_view head = text.substr(0, text.find(':'));
  std::string_view rest = head.size() < text.size() ? text.substr(head.size() + 1)
                                                    : std::string_view{};
  const FamilyName* found = nullptr;
  for (const auto& f : kFamilyNames) {
    if (f.name == head) found = &f;
  }
  if (found == nullptr) {
    throw UsageError("unknown ruleset '" + std::string(text) + "'");
  }

  std::map<std::string, I64, std::less<>> params;
  while (!rest.empty()) {
    std::string_view item = rest.substr(0, rest.find(','));
    rest.remove_prefix(std::min(rest.size(), item.size() + 1));
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("malformed parameter '" + std::string(item) + "'");
    }
    std::string key(item.substr(0, eq));
    params[key] = parse_int(key, item.substr(eq + 1));
  }

  std::vector<std::string_view> required;
  switch (found->family) {
    case Family::AbYama:
    case Family::AbTriangular:
      required = {"a", "b"};
      break;
    case Family::YamaWythoff:
    case Family::TriangularWythoff:
      required = {"c"};
      break;
    case Family::GeometricTwist:
    case Family::SubGeometricTwist:
      required = {"d"};
      break;
    case Family::ThreeHeap:
      required = {"variant"};
      break;
    default:
      break;
  }
  for (const auto& [key, value] : params) {
    if (std::find(required.begin(), required.end(), key) == required.end()) {
      throw UsageError("ruleset '" + std::string(head) +
                       "' takes no parameter '" + key + "'");
    }
  }
  for (std::string_view key : required) {
    if (params.find(key) == params.end()) {
      throw UsageError("ruleset '" + std::string(head) + "' needs parameter '" +
                       std::string(key) + "'");
    }
  }

  RulesetSpec spec{found->family};
  if (auto it = params.find("a"); it != params.end()) spec.a = it->second;
  if (auto it = params.find("b"); it != params.end()) spec.b = it->second;
  if (auto it = params.find("c"); it != params.end()) spec.c = it->second;
  if (auto it = params.find("d"); it != params.end()) spec.d = it->second;
  if (auto it = params.find("variant"); it != params.end()) {
    spec.variant = static_cast<int>(it->second);
  }
  validate(spec);
  return spec;
}

std::string to_string(const RulesetSpec& spec) {
  std::string name;
  for (const auto& f : kFamilyNames) {
    if (f.family == spec.family) name = f.name;
  }
  switch (spec.family) {
    case Family::AbYama:
    case Family::AbTriangular:
      return name + ":a=" + std::to_string(spec.a) + ",b=" + std::to_string(spec.b);
    case Family::YamaWythoff:
    case Family::TriangularWythoff:
      return name + ":c=" + std::to_string(spec.c);
    case Family::GeometricTwist:
    case Family::SubGeometricTwist:
      return name + ":d=" + std::to_string(spec.d);
    case Family::ThreeHeap:
      return name + ":variant=" + std::to_string(spec.variant);
    default:
      return name;
  }
}

// ---------------------------------------------------------------------------
// 2-heap options

namespace {

// Take `take` from heap x and add `give` (possibly negative) to heap y.
// Callers guarantee y + give >= 0.
inline void push_xy(std::vector<HeapPair>& out, bool from_x, const HeapPair& p,
                    Count take, I64 give) {
  if (from_x) {
    out.push_back({p.x - take, static_cast<Count>(static_cast<I64>(p.y) + give)});
  } else {
    out.push_back({static_cast<Count>(static_cast<I64>(p.x) + give), p.y - take});
  }
}

// One-heap-down, other-heap-up moves: take i in [min_take, source] and give
// j in [min_give, i) to the other heap (or exactly `min_give` when
// `single_give`). Covers Yama, Triangular and both ab-families.
void append_transfer(const HeapPair& p, I64 min_take, I64 min_give,
                     bool single_give, std::vector<HeapPair>& out) {
  for (int side = 0; side < 2; ++side) {
    const bool from_x = side == 0;
    const I64 source = static_cast<I64>(from_x ? p.x : p.y);
    const I64 target = static_cast<I64>(from_x ? p.y : p.x);
    for (I64 i = std::max<I64>(min_take, 1); i <= source; ++i) {
      const I64 lo = std::max(min_give, -target);
      const I64 hi = single_give ? min_give : i - 1;
      for (I64 j = lo; j <= hi; ++j) {
        push_xy(out, from_x, p, static_cast<Count>(i), j);
      }
    }
  }
}

// Both-heaps-down moves (x - i, y - j) with i, j >= 1 filtered by `allowed`.
template <class Allowed>
void append_double_take(const HeapPair& p, Allowed allowed,
                        std::vector<HeapPair>& out) {
  for (Count i = 1; i <= p.x; ++i) {
    for (Count j = 1; j <= p.y; ++j) {
      if (allowed(static_cast<I64>(i), static_cast<I64>(j))) {
        out.push_back({p.x - i, p.y - j});
      }
    }
  }
}

bool wythoff_twist_allows(I64 c, I64 i, I64 j) { return std::abs(i - j) <= c; }

bool geometric_allows(I64 d, I64 slack, I64 i, I64 j) {
  return i <= d * j - slack && j <= d * i - slack;
}

}  // namespace

void append_options(const RulesetSpec& spec, const HeapPair& p,
                    std::vector<HeapPair>& out) {
  switch (spec.family) {
    case Family::Yama:
      append_transfer(p, 2, 1, true, out);
      break;
    case Family::Triangular:
      append_transfer(p, 2, 1, false, out);
      break;
    case Family::AbYama:
      append_transfer(p, spec.a, spec.b, true, out);
      break;
    case Family::AbTriangular:
      append_transfer(p, spec.a, spec.b, false, out);
      break;
    case Family::YamaWythoff:
      append_transfer(p, 2, 1, true, out);
      append_double_take(
          p, [c = spec.c](I64 i, I64 j) { return wythoff_twist_allows(c, i, j); },
          out);
      break;
    case Family::TriangularWythoff:
      append_transfer(p, 2, 1, false, out);
      append_double_take(
          p, [c = spec.c](I64 i, I64 j) { return wythoff_twist_allows(c, i, j); },
          out);
      break;
    case Family::GeometricTwist:
      append_transfer(p, 2, 1, false, out);
      append_double_take(
          p, [d = spec.d](I64 i, I64 j) { return geometric_allows(d, 2, i, j); },
          out);
      break;
    case Family::SubGeometricTwist:
      append_transfer(p, 2, 1, false, out);
      append_double_take(
          p, [d = spec.d](I64 i, I64 j) { return geometric_allows(d, 1, i, j); },
          out);
      break;
    case Family::ClassicWythoff:
      for (Count i = 1; i <= p.x; ++i) out.push_back({p.x - i, p.y});
      for (Count j = 1; j <= p.y; ++j) out.push_back({p.x, p.y - j});
      for (Count i = 1; i <= std::min(p.x, p.y); ++i) out.push_back({p.x - i, p.y - i});
      break;
    case Family::ThreeHeap:
      throw UsageError("ruleset " + to_string(spec) +
                       " is played on 3 heaps, got a 2-heap position");
  }
}

// ---------------------------------------------------------------------------
// 3-heap options
//
// Variants 1-4 treat empty heaps as ordinary heaps. Variants 5 and 6 treat
// empty heaps as removed: they can never receive tokens.
//   5: take i >= 2 from a heap, return 1..i-1 to one other live heap.
//   6: three live heaps -> take i >= 2, return >= 1 to each other heap with
//      the two returns summing below i. Two live heaps -> the share owed to
//      the removed heap is lost, so take i >= 3 and return 1..i-2 to the
//      other live heap. One live heap -> no moves.

namespace {

using Triple = std::array<Count, 3>;

void append_single_target(const Triple& h, bool live_targets_only,
                          std::vector<HeapTriple>& out) {
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) {
      if (s == t || (live_targets_only && h[t] == 0)) continue;
      for (Count i = 2; i <= h[s]; ++i) {
        for (Count j = 1; j < i; ++j) {
          Triple q = h;
          q[s] -= i;
          q[t] += j;
          out.push_back({q});
        }
      }
    }
  }
}

// Take i >= 2 from one heap, return j1, j2 >= min_each to the other two with
// 1 <= j1 + j2 < i.
void append_split_return(const Triple& h, Count min_each,
                         std::vector<HeapTriple>& out) {
  for (int s = 0; s < 3; ++s) {
    const int t1 = (s + 1) % 3;
    const int t2 = (s + 2) % 3;
    for (Count i = 2; i <= h[s]; ++i) {
      for (Count j1 = min_each; j1 < i; ++j1) {
        for (Count j2 = min_each; j1 + j2 < i; ++j2) {
          if (j1 + j2 == 0) continue;
          Triple q = h;
          q[s] -= i;
          q[t1] += j1;
          q[t2] += j2;
          out.push_back({q});
        }
      }
    }
  }
}

void append_two_sources(const Triple& h, std::vector<HeapTriple>& out) {
  for (int t = 0; t < 3; ++t) {
    const int s1 = (t + 1) % 3;
    const int s2 = (t + 2) % 3;
    for (Count i1 = 1; i1 <= h[s1]; ++i1) {
      for (Count i2 = 1; i2 <= h[s2]; ++i2) {
        for (Count j = 1; j < i1 + i2; ++j) {
          Triple q = h;
          q[s1] -= i1;
          q[s2] -= i2;
          q[t] += j;
          out.push_back({q});
        }
      }
    }
  }
}

int live_count(const Triple& h) {
  return (h[0] > 0) + (h[1] > 0) + (h[2] > 0);
}

}  // namespace

void append_options(const RulesetSpec& spec, const HeapTriple& p,
                    std::vector<HeapTriple>& out) {
  if (spec.family != Family::ThreeHeap) {
    throw UsageError("ruleset " + to_string(spec) +
                     " is played on 2 heaps, got a 3-heap position");
  }
  const Triple& h = p.h;
  switch (spec.variant) {
    case 1:
      append_single_target(h, false, out);
      break;
    case 2:
      append_split_return(h, 1, out);
      break;
    case 3:
      append_split_return(h, 0, out);
      break;
    case 4:
      append_two_sources(h, out);
      break;
    case 5:
      append_single_target(h, true, out);
      break;
    case 6: {
      const int live = live_count(h);
      if (live == 3) {
        append_split_return(h, 1, out);
      } else if (live == 2) {
        for (int s = 0; s < 3; ++s) {
          for (int t = 0; t < 3; ++t) {
            if (s == t || h[s] == 0 || h[t] == 0) continue;
            for (Count i = 3; i <= h[s]; ++i) {
              for (Count j = 1; j + 2 <= i; ++j) {
                Triple q = h;
                q[s] -= i;
                q[t] += j;
                out.push_back({q});
              }
            }
          }
        }
      }
      break;
    }
    default:
      throw UsageError("3-heap variant must be in 1..6");
  }
}

std::vector<HeapPair> options(const RulesetSpec& spec, const HeapPair& pos) {
  std::vector<HeapPair> out;
  append_options(spec, pos, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HeapTriple> options(const RulesetSpec& spec, const HeapTriple& pos) {
  std::vector<HeapTriple> out;
  append_options(spec, pos, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Position> options(const RulesetSpec& spec, const Position& pos) {
  std::vector<Position> out;
  std::visit(
      [&](const auto& p) {
        for (const auto& q : options(spec, p)) out.emplace_back(q);
      },
      pos);
  return out;
}

// ---------------------------------------------------------------------------
// Legality by inequalities

namespace {

// (x, y) -> (x - i, y + j): x strictly decreases by i and y moves by j.
bool transfer_legal(I64 x, I64 y, I64 x2, I64 y2, I64 min_take, I64 min_give,
                    bool single_give) {
  const I64 i = x - x2;
  const I64 j = y2 - y;
  if (i < std::max<I64>(min_take, 1)) return false;
  if (single_give) return j == min_give;
  return j >= min_give && j < i;
}

bool transfer_either(const HeapPair& f, const HeapPair& t, I64 min_take,
                     I64 min_give, bool single_give) {
  const I64 x = static_cast<I64>(f.x), y = static_cast<I64>(f.y);
  const I64 x2 = static_cast<I64>(t.x), y2 = static_cast<I64>(t.y);
  return transfer_legal(x, y, x2, y2, min_take, min_give, single_give) ||
         transfer_legal(y, x, y2, x2, min_take, min_give, single_give);
}

template <class Allowed>
bool double_take_legal(const HeapPair& f, const HeapPair& t, Allowed allowed) {
  if (t.x >= f.x || t.y >= f.y) return false;
  return allowed(static_cast<I64>(f.x - t.x), static_cast<I64>(f.y - t.y));
}

}  // namespace

bool is_legal_move(const RulesetSpec& spec, const HeapPair& f, const HeapPair& t) {
  if (t.total() >= f.total()) return false;
  switch (spec.family) {
    case Family::Yama:
      return transfer_either(f, t, 2, 1, true);
    case Family::Triangular:
      return transfer_either(f, t, 2, 1, false);
    case Family::AbYama:
      return transfer_either(f, t, spec.a, spec.b, true);
    case Family::AbTriangular:
      return transfer_either(f, t, spec.a, spec.b, false);
    case Family::YamaWythoff:
      return transfer_either(f, t, 2, 1, true) ||
             double_take_legal(f, t, [c = spec.c](I64 i, I64 j) {
               return wythoff_twist_allows(c, i, j);
             });
    case Family::TriangularWythoff:
      return transfer_either(f, t, 2, 1, false) ||
             double_take_legal(f, t, [c = spec.c](I64 i, I64 j) {
               return wythoff_twist_allows(c, i, j);
             });
    case Family::GeometricTwist:
      return transfer_either(f, t, 2, 1, false) ||
             double_take_legal(f, t, [d = spec.d](I64 i, I64 j) {
               return geometric_allows(d, 2, i, j);
             });
    case Family::SubGeometricTwist:
      return transfer_either(f, t, 2, 1, false) ||
             double_take_legal(f, t, [d = spec.d](I64 i, I64 j) {
               return geometric_allows(d, 1, i, j);
             });
    case Family::ClassicWythoff:
      if (t.x == f.x) return t.y < f.y;
      if (t.y == f.y) return t.x < f.x;
      return t.x < f.x && f.x - t.x == f.y - t.y;
    case Family::ThreeHeap:
      throw UsageError("ruleset " + to_string(spec) +
                       " is played on 3 heaps, got a 2-heap position");
  }
  return false;
}

bool is_legal_move(const RulesetSpec& spec, const HeapTriple& f,
                   const HeapTriple& t) {
  if (spec.family != Family::ThreeHeap) {
    throw UsageError("ruleset " + to_string(spec) +
                     " is played on 2 heaps, got a 3-heap position");
  }
  if (t.total() >= f.total()) return false;

  std::array<I64, 3> delta{};
  int down = 0, up = 0;
  for (int k = 0; k < 3; ++k) {
    delta[k] = static_cast<I64>(t[k]) - static_cast<I64>(f[k]);
    down += delta[k] < 0;
    up += delta[k] > 0;
  }
  const int flat = 3 - down - up;
  auto index_of = [&](auto pred) {
    for (int k = 0; k < 3; ++k) {
      if (pred(delta[k])) return k;
    }
    return -1;
  };
  const I64 removed = static_cast<I64>(f.total() - t.total());

  switch (spec.variant) {
    case 1:
    case 5: {
      if (down != 1 || up != 1) return false;
      const int s = index_of([](I64 v) { return v < 0; });
      const int tgt = index_of([](I64 v) { return v > 0; });
      if (-delta[s] < 2) return false;
      if (spec.variant == 5 && f[tgt] == 0) return false;
      return true;  // total decrease gives j < i
    }
    case 2:
    case 3: {
      if (down != 1) return false;
      const int s = index_of([](I64 v) { return v < 0; });
      const I64 i = -delta[s];
      if (i < 2) return false;
      if (spec.variant == 2 && up != 2) return false;
      return up >= 1 && removed >= 1;
    }
    case 4: {
      if (down != 2 || up != 1) return false;
      return true;  // j >= 1 and total decrease gives j < i1 + i2
    }
    case 6: {
      const int live = (f[0] > 0) + (f[1] > 0) + (f[2] > 0);
      if (live == 3) {
        if (down != 1 || up != 2) return false;
        const int s = index_of([](I64 v) { return v < 0; });
        return -delta[s] >= 2;
      }
      if (live == 2) {
        if (down != 1 || up != 1 || flat != 1) return false;
        const int tgt = index_of([](I64 v) { return v > 0; });
        if (f[tgt] == 0) return false;
        return removed >= 2;  // i >= j + 2
      }
      return false;
    }
    default:
      return false;
  }
}

bool is_legal_move(const RulesetSpec& spec, const Position& from,
                   const Position& to) {
  if (from.index() != to.index()) {
    throw UsageError("positions have different numbers of heaps");
  }
  return std::visit(
      [&](const auto& f) {
        using P = std::decay_t<decltype(f)>;
        return is_legal_move(spec, f, std::get<P>(to));
      },
      from);
}

}  // namespace nimforge
