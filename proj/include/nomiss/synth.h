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

#ifndef NOMISS_SYNTH_H_
#define NOMISS_SYNTH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nomiss/rational.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

enum class Mechanism { kMcar, kMar, kMnar };

Mechanism parse_mechanism(std::string_view name);  // "mcar", "mar", "mnar"
std::string mechanism_name(Mechanism mechanism);

struct MaskSpec {
  Mechanism mechanism = Mechanism::kMcar;
  Ratio rate;
  std::uint64_t seed = 1;
  int rows = 0;
  int cols = 0;

  // Throws UsageError for rate >= 1 or a non-positive shape.
  void validate() const;
};

// Standard-normal values with a missingness pattern drawn per mechanism:
//   MCAR  every cell is missing independently with probability `rate`;
//   MAR   column 0 is an always-observed covariate; the other cells of row i
//         go missing with probability min(1, 2 * rate * rank_i / (m - 1)),
//         rank_i being the covariate's ascending rank (rate when m == 1);
//   MNAR  exactly floor(rate * m * n) cells go missing: those holding the
//         smallest values (lowest index first on ties).
// Values and missingness use separate seeded streams, so the same spec
// always yields the same data.
struct SyntheticData {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major
  std::vector<bool> missing;   // row-major

  ValidityMask mask() const;
  void write(std::ostream& out, char delimiter = ',',
             std::string_view token = "NA") const;
};

SyntheticData generate(const MaskSpec& spec);

// generate(spec).mask(), without materializing values for MCAR.
ValidityMask generate_mask(const MaskSpec& spec);

}  // namespace nomiss

#endif  // NOMISS_SYNTH_H_
