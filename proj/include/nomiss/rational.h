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

#ifndef NOMISS_RATIONAL_H_
#define NOMISS_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace nomiss {

// Non-negative fraction num/den kept in lowest terms. Used for every
// missingness threshold so that boundary comparisons are exact.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);

  static Ratio zero() { return Ratio(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // True iff missing / total > *this. A zero total never exceeds.
  bool exceeded_by(std::int64_t missing, std::int64_t total) const;

  // "num/den" or the shortest exact decimal when one exists.
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Accepts "0", "0.05", ".1", "1/20". Throws UsageError on malformed input.
Ratio parse_ratio(std::string_view text);

// Same as parse_ratio but also requires the value to lie in [0, 1).
Ratio parse_fraction_below_one(std::string_view text, std::string_view what);

// Decimal rendering of the signed fraction num/den, rounded half away from
// zero to `significant` significant digits, trailing zeros removed.
std::string format_decimal(std::int64_t num, std::int64_t den,
                           int significant = 15);

}  // namespace nomiss

#endif  // NOMISS_RATIONAL_H_
