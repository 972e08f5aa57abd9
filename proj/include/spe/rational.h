// Copyright 2026 The spegame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPE_RATIONAL_H_
#define SPE_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "-3", "7/4", "0.125" and "1.5e2". Throws GameError(kSyntaxError)
// on anything else; the caller attaches a position.
Rational ParseRational(std::string_view text);

// Lowest terms: "p/q" with q > 1, or a plain integer.
std::string FormatRational(const Rational& value);

// One exact payoff per player.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(std::vector<Rational> values) : values_(std::move(values)) {}
  PayoffVector(std::initializer_list<Rational> values) : values_(values) {}

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int player) const { return values_[player]; }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const PayoffVector& other) const { return values_ == other.values_; }
  // Lexicographic, used for the canonical order of outcome sets.
  std::strong_ordering operator<=>(const PayoffVector& other) const;

  // "(1,1/2,-3)"
  std::string ToString() const;

 private:
  std::vector<Rational> values_;
};

}  // namespace spe

#endif  // SPE_RATIONAL_H_
