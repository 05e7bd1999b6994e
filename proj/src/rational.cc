// Copyright 2026 The nomiss Authors
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

#include "nomiss/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "nomiss/errors.h"

namespace nomiss {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw UsageError("ratio must be a non-negative fraction with positive "
                     "denominator");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

bool Ratio::exceeded_by(std::int64_t missing, std::int64_t total) const {
  if (total <= 0) return false;
  return static_cast<__int128>(missing) * den_ >
         static_cast<__int128>(num_) * total;
}

std::string Ratio::to_string() const {
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d == 1) return format_decimal(num_, den_, 18);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_digits(std::string_view s, std::string_view full) {
  std::int64_t value = 0;
  if (s.empty()) return 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not a number: '" + std::string(full) + "'");
  }
  return value;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  const std::string_view full = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw UsageError("empty number");
  if (text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '-') {
    throw UsageError("expected a non-negative number, got '" +
                     std::string(full) + "'");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_digits(text.substr(0, slash), full);
    const std::int64_t den = parse_digits(text.substr(slash + 1), full);
    if (slash == 0 || slash + 1 == text.size() || den == 0) {
      throw UsageError("bad fraction '" + std::string(full) + "'");
    }
    return Ratio(num, den);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw UsageError("not a number: '" + std::string(full) + "'");
  }
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (frac.size() > 17) {
    throw UsageError("too many decimal places in '" + std::string(full) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  const std::int64_t w = parse_digits(whole, full);
  const std::int64_t f = parse_digits(frac, full);
  if (w > (INT64_MAX - f) / den) {
    throw UsageError("number out of range: '" + std::string(full) + "'");
  }
  return Ratio(w * den + f, den);
}

Ratio parse_fraction_below_one(std::string_view text, std::string_view what) {
  const Ratio r = parse_ratio(text);
  if (r.num() >= r.den()) {
    throw UsageError(std::string(what) + " must lie in [0, 1), got '" +
                     std::string(text) + "'");
  }
  return r;
}

std::string format_decimal(std::int64_t num, std::int64_t den,
                           int significant) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  bool negative = (num < 0) != (den < 0);
  unsigned __int128 n = num < 0 ? -static_cast<__int128>(num) : num;
  const unsigned __int128 d = den < 0 ? -static_cast<__int128>(den) : den;
  if (n == 0) return "0";

  // Integer part digits, then fractional digits by long division.
  std::string int_digits;
  {
    unsigned __int128 q = n / d;
    if (q == 0) int_digits = "0";
    while (q > 0) {
      int_digits.insert(int_digits.begin(), static_cast<char>('0' + q % 10));
      q /= 10;
    }
  }
  unsigned __int128 rem = n % d;
  std::string frac_digits;
  int sig = int_digits == "0" ? 0 : static_cast<int>(int_digits.size());
  // Leading fractional zeros do not count as significant.
  while (sig < significant && rem != 0) {
    rem *= 10;
    frac_digits.push_back(static_cast<char>('0' + rem / d));
    rem %= d;
    if (sig > 0 || frac_digits.back() != '0') ++sig;
  }
  // Round half up on the next digit.
  bool round_up = false;
  if (rem != 0) {
    round_up = (rem * 10) / d >= 5;
  }
  std::string digits = int_digits + frac_digits;
  const std::size_t int_len = int_digits.size();
  if (sig > significant) {
    // Integer part alone exceeds the significant digit budget; keep it exact.
    round_up = false;
  }
  if (round_up) {
    int pos = static_cast<int>(digits.size()) - 1;
    while (pos >= 0) {
      if (digits[pos] == '9') {
        digits[pos] = '0';
        --pos;
      } else {
        ++digits[pos];
        break;
      }
    }
    if (pos < 0) digits.insert(digits.begin(), '1');
  }
  const std::size_t new_int_len = int_len + (digits.size() - int_digits.size() -
                                             frac_digits.size());
  std::string ip = digits.substr(0, new_int_len);
  std::string fp = digits.substr(new_int_len);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  while (ip.size() > 1 && ip.front() == '0') ip.erase(ip.begin());
  std::string out = negative ? "-" : "";
  out += ip;
  if (!fp.empty()) out += "." + fp;
  if (out == "-0") out = "0";
  return out;
}

}  // namespace nomiss
