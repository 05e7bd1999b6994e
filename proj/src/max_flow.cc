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

#include "nomiss/max_flow.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace nomiss {

MaxFlow::MaxFlow(int nodes) : adjacency_(nodes) {
  if (nodes < 0) throw std::invalid_argument("negative node count");
}

int MaxFlow::add_arc(int from, int to, Capacity capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(head_.size());
  // Arc id ^ 1 is always the reverse arc.
  head_.push_back(to);
  residual_.push_back(capacity);
  original_.push_back(capacity);
  adjacency_[from].push_back(id);
  head_.push_back(from);
  residual_.push_back(0);
  original_.push_back(0);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const int arc : adjacency_[u]) {
      const int v = head_[arc];
      if (residual_[arc] > 0 && level_[v] < 0) {
        level_[v] = level_[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::blocking_flow(int source, int sink) {
  next_arc_.assign(adjacency_.size(), 0);
  Capacity total = 0;
  std::vector<int> path;  // arcs from source
  int u = source;
  while (true) {
    if (u == sink) {
      Capacity pushed = std::numeric_limits<Capacity>::max();
      for (const int arc : path) pushed = std::min(pushed, residual_[arc]);
      std::size_t cut = path.size();
      for (std::size_t k = 0; k < path.size(); ++k) {
        residual_[path[k]] -= pushed;
        residual_[path[k] ^ 1] += pushed;
        if (residual_[path[k]] == 0 && cut == path.size()) cut = k;
      }
      total += pushed;
      // Resume from the tail of the first saturated arc.
      path.resize(cut);
      u = path.empty() ? source : head_[path.back()];
      continue;
    }
    auto& it = next_arc_[u];
    const auto& arcs = adjacency_[u];
    while (it < arcs.size()) {
      const int arc = arcs[it];
      if (residual_[arc] > 0 && level_[head_[arc]] == level_[u] + 1) break;
      ++it;
    }
    if (it < arcs.size()) {
      path.push_back(arcs[it]);
      u = head_[arcs[it]];
      continue;
    }
    // Dead end: retreat.
    if (u == source) break;
    level_[u] = -1;
    path.pop_back();
    u = path.empty() ? source : head_[path.back()];
    ++next_arc_[u];
  }
  return total;
}

MaxFlow::Capacity MaxFlow::solve(int source, int sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  Capacity total = 0;
  while (build_levels(source, sink)) total += blocking_flow(source, sink);
  return total;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const int arc : adjacency_[u]) {
      const int v = head_[arc];
      if (residual_[arc] > 0 && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace nomiss
