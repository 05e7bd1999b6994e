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

#include "nomiss/synth.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "nomiss/errors.h"

namespace nomiss {

namespace {

constexpr std::uint64_t kMissingStream = 0x9E3779B97F4A7C15ULL;

// Uniform in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Mechanism parse_mechanism(std::string_view name) {
  if (name == "mcar" || name == "MCAR") return Mechanism::kMcar;
  if (name == "mar" || name == "MAR") return Mechanism::kMar;
  if (name == "mnar" || name == "MNAR") return Mechanism::kMnar;
  throw UsageError("unknown missingness mechanism '" + std::string(name) +
                   "' (expected mcar, mar or mnar)");
}

std::string mechanism_name(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::kMcar:
      return "mcar";
    case Mechanism::kMar:
      return "mar";
    case Mechanism::kMnar:
      return "mnar";
  }
  return "?";
}

void MaskSpec::validate() const {
  if (rate.num() >= rate.den()) {
    throw UsageError("missing rate must lie in [0, 1), got " + rate.to_string());
  }
  if (rows < 1 || cols < 1) throw UsageError("shape must be at least 1 x 1");
}

SyntheticData generate(const MaskSpec& spec) {
  spec.validate();
  SyntheticData data;
  data.rows = spec.rows;
  data.cols = spec.cols;
  const std::size_t cells = static_cast<std::size_t>(spec.rows) * spec.cols;
  data.values.resize(cells);
  data.missing.assign(cells, false);

  std::mt19937_64 value_rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& v : data.values) v = normal(value_rng);

  std::mt19937_64 miss_rng(spec.seed ^ kMissingStream);
  const double rate = spec.rate.to_double();
  switch (spec.mechanism) {
    case Mechanism::kMcar:
      for (std::size_t c = 0; c < cells; ++c) {
        data.missing[c] = unit(miss_rng) < rate;
      }
      break;
    case Mechanism::kMar: {
      const int m = spec.rows;
      const int n = spec.cols;
      std::vector<int> by_covariate(m);
      std::iota(by_covariate.begin(), by_covariate.end(), 0);
      std::stable_sort(by_covariate.begin(), by_covariate.end(),
                       [&](int a, int b) {
                         return data.values[static_cast<std::size_t>(a) * n] <
                                data.values[static_cast<std::size_t>(b) * n];
                       });
      std::vector<double> row_rate(m, rate);
      if (m > 1) {
        for (int rank = 0; rank < m; ++rank) {
          row_rate[by_covariate[rank]] =
              std::min(1.0, 2.0 * rate * rank / (m - 1));
        }
      }
      for (int i = 0; i < m; ++i) {
        for (int j = 1; j < n; ++j) {
          data.missing[static_cast<std::size_t>(i) * n + j] =
              unit(miss_rng) < row_rate[i];
        }
      }
      break;
    }
    case Mechanism::kMnar: {
      const auto target = static_cast<std::size_t>(
          static_cast<__int128>(spec.rate.num()) * cells / spec.rate.den());
      std::vector<std::size_t> order(cells);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return data.values[a] < data.values[b];
                       });
      for (std::size_t k = 0; k < target; ++k) data.missing[order[k]] = true;
      break;
    }
  }
  return data;
}

ValidityMask SyntheticData::mask() const {
  MaskBuilder builder(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (!missing[static_cast<std::size_t>(i) * cols + j]) {
        builder.set_valid(i, j);
      }
    }
  }
  return std::move(builder).build();
}

void SyntheticData::write(std::ostream& out, char delimiter,
                          std::string_view token) const {
  char buf[32];
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j > 0) out << delimiter;
      const std::size_t c = static_cast<std::size_t>(i) * cols + j;
      if (missing[c]) {
        out << token;
      } else {
        std::snprintf(buf, sizeof(buf), "%.6f", values[c]);
        out << buf;
      }
    }
    out << '\n';
  }
}

ValidityMask generate_mask(const MaskSpec& spec) {
  if (spec.mechanism != Mechanism::kMcar) return generate(spec).mask();
  spec.validate();
  std::mt19937_64 miss_rng(spec.seed ^ kMissingStream);
  const double rate = spec.rate.to_double();
  MaskBuilder builder(spec.rows, spec.cols);
  for (int i = 0; i < spec.rows; ++i) {
    for (int j = 0; j < spec.cols; ++j) {
      if (!(unit(miss_rng) < rate)) builder.set_valid(i, j);
    }
  }
  return std::move(builder).build();
}

}  // namespace nomiss
