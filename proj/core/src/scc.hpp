#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace bankit::detail {

struct SccResult {
  /// Component id per node. Ids follow completion order, so every component
  /// reachable from component c has an id <= c.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

// Iterative Tarjan. Successors of u are neighbour(u, k) for every set bit k
// of successor_mask(u).
template <class MaskFn, class NeighbourFn>
SccResult tarjan(std::size_t n, MaskFn successor_mask, NeighbourFn neighbour) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  SccResult result;
  result.component.assign(n, kUnvisited);
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;

  struct Frame {
    std::uint32_t node;
    std::uint64_t remaining;
  };
  std::vector<Frame> frames;
  std::uint32_t next_index = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    auto open = [&](std::uint32_t u) {
      index[u] = low[u] = next_index++;
      stack.push_back(u);
      on_stack[u] = true;
      frames.push_back({u, successor_mask(u)});
    };
    open(static_cast<std::uint32_t>(root));
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.remaining != 0) {
        const int k = std::countr_zero(f.remaining);
        f.remaining &= f.remaining - 1;
        const auto v = static_cast<std::uint32_t>(neighbour(f.node, k));
        if (index[v] == kUnvisited) {
          open(v);
        } else if (on_stack[v]) {
          low[f.node] = std::min(low[f.node], index[v]);
        }
        continue;
      }
      const std::uint32_t u = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        std::uint32_t& parent_low = low[frames.back().node];
        parent_low = std::min(parent_low, low[u]);
      }
      if (low[u] == index[u]) {
        std::uint32_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != u);
        ++result.count;
      }
    }
  }
  return result;
}

}  // namespace bankit::detail
