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

#include "spe/rational.h"

#include <cctype>

#include "spe/errors.h"

namespace spe {
namespace {

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// BigInt's string constructor reads a leading 0 as an octal prefix.
BigInt FromDigits(std::string_view digits) {
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt{std::string(digits.substr(first))};
}

BigInt PowerOfTen(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void Reject(std::string_view text) {
  throw GameError(ErrorCode::kSyntaxError,
                  "malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Reject(original);
    const BigInt denominator = FromDigits(den);
    if (denominator == 0) Reject(original);
    value = Rational(FromDigits(num), denominator);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!AllDigits(exp_text) || exp_text.size() > 6) Reject(original);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view whole = text;
    std::string_view fraction;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      whole = text.substr(0, dot);
      fraction = text.substr(dot + 1);
      if (!fraction.empty() && !AllDigits(fraction)) Reject(original);
      if (whole.empty() && fraction.empty()) Reject(original);
      if (!whole.empty() && !AllDigits(whole)) Reject(original);
    } else if (!AllDigits(whole)) {
      Reject(original);
    }
    std::string digits = std::string(whole) + std::string(fraction);
    exponent -= static_cast<long>(fraction.size());
    const BigInt mantissa = FromDigits(digits);
    if (exponent >= 0) {
      value = Rational(mantissa * PowerOfTen(static_cast<unsigned>(exponent)));
    } else {
      value = Rational(mantissa, PowerOfTen(static_cast<unsigned>(-exponent)));
    }
  }
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::strong_ordering PayoffVector::operator<=>(const PayoffVector& other) const {
  const std::size_t common = std::min(values_.size(), other.values_.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (values_[k] < other.values_[k]) return std::strong_ordering::less;
    if (other.values_[k] < values_[k]) return std::strong_ordering::greater;
  }
  return values_.size() <=> other.values_.size();
}

std::string PayoffVector::ToString() const {
  std::string out = "(";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k > 0) out += ",";
    out += FormatRational(values_[k]);
  }
  return out + ")";
}

}  // namespace spe
