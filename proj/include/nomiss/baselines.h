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

#ifndef NOMISS_BASELINES_H_
#define NOMISS_BASELINES_H_

#include "nomiss/rational.h"
#include "nomiss/selection.h"
#include "nomiss/validity_mask.h"

namespace nomiss {

// Keeps every column and only the rows without missing cells.
Selection listwise(const ValidityMask& mask);

// Keeps every row and only the columns without missing cells.
Selection featurewise(const ValidityMask& mask);

// One pass over the original matrix: drops each row and each column whose
// own missing fraction exceeds gamma. The kept cross-section is not
// re-checked and may still violate gamma.
Selection naive(const ValidityMask& mask, const Ratio& gamma);

// Auto-miss-style global threshold: while the kept cross-section's missing
// fraction exceeds tau, drop the kept line with the largest missing fraction
// (rows before columns, then lowest index). Fractions are recomputed on the
// live cross-section after every removal.
Selection automiss(const ValidityMask& mask, const Ratio& tau);

}  // namespace nomiss

#endif  // NOMISS_BASELINES_H_
