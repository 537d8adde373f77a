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

#ifndef NIMFORGE_CORE_HPP_
#define NIMFORGE_CORE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace nimforge {

using Count = std::uint64_t;
using Grundy = std::uint64_t;

// Closed-form entry points square their inputs; anything at or above this
// bound is rejected with RangeError.
inline constexpr Count kFormulaLimit = Count{1} << 31;

// Malformed input: bad position/spec text, wrong dimensionality, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric input outside the range a formula is defined for.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A brute-force region larger than the configured position cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HeapPair {
  Count x = 0;
  Count y = 0;

  constexpr Count total() const { return x + y; }
  constexpr Count min() const { return std::min(x, y); }
  constexpr Count max() const { return std::max(x, y); }
  constexpr HeapPair swapped() const { return {y, x}; }

  friend constexpr auto operator<=>(const HeapPair&, const HeapPair&) = default;
};

// Stored order is preserved; every 3-heap ruleset is symmetric, so callers
// compare via sorted() when order should not matter.
struct HeapTriple {
  std::array<Count, 3> h{};

  constexpr Count total() const { return h[0] + h[1] + h[2]; }
  constexpr Count operator[](std::size_t i) const { return h[i]; }
  constexpr HeapTriple sorted() const {
    HeapTriple s = *this;
    std::sort(s.h.begin(), s.h.end());
    return s;
  }

  friend constexpr auto operator<=>(const HeapTriple&,
                                    const HeapTriple&) = default;
};

using Position = std::variant<HeapPair, HeapTriple>;

inline int dimension(const Position& p) {
  return std::holds_alternative<HeapPair>(p) ? 2 : 3;
}

inline Count total(const Position& p) {
  return std::visit([](const auto& v) { return v.total(); }, p);
}

enum class Outcome { P, N };
enum class Phase { Final, Normal };

std::string_view to_string(Outcome o);
std::string_view to_string(Phase p);

// Least non-negative integer absent from `values`. Duplicates and any order
// are fine.
Grundy mex(std::span<const Grundy> values);

// "x,y" or "x,y,z"; decimal non-negative integers, surrounding spaces
// tolerated.
Position parse_position(std::string_view text);
HeapPair parse_pair(std::string_view text);
HeapTriple parse_triple(std::string_view text);

std::string to_string(const HeapPair& p);
std::string to_string(const HeapTriple& p);
std::string to_string(const Position& p);

std::ostream& operator<<(std::ostream& os, const HeapPair& p);
std::ostream& operator<<(std::ostream& os, const HeapTriple& p);

// Throws RangeError unless every value is below kFormulaLimit.
void require_formula_range(std::initializer_list<Count> values);

}  // namespace nimforge

#endif  // NIMFORGE_CORE_HPP_
