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

#ifndef NOMISS_MAX_FLOW_H_
#define NOMISS_MAX_FLOW_H_

#include <cstdint>
#include <vector>

namespace nomiss {

// Dinic's blocking-flow algorithm on integer capacities. Augmenting paths are
// found with an explicit stack, so path length is not bounded by the call
// stack.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(int nodes);

  int nodes() const { return static_cast<int>(adjacency_.size()); }
  // Returns the arc id of the forward arc.
  int add_arc(int from, int to, Capacity capacity);

  Capacity solve(int source, int sink);

  // Nodes reachable from the source in the residual graph after solve(),
  // i.e. the source side of the minimum cut closest to the source.
  std::vector<bool> source_side(int source) const;

  Capacity flow_on(int arc) const { return original_[arc] - residual_[arc]; }

 private:
  bool build_levels(int source, int sink);
  Capacity blocking_flow(int source, int sink);

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> head_;  // arc -> target node
  std::vector<Capacity> residual_;
  std::vector<Capacity> original_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
};

}  // namespace nomiss

#endif  // NOMISS_MAX_FLOW_H_
