#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwvote/election.hpp"

namespace mwvote {

/// Calls fn(indices) for every k-subset of {0..n-1}, indices increasing,
/// subsets in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Every k-subset of candidates 0..m-1 as a committee, lexicographic order.
inline std::vector<Committee> all_committees(int m, int k) {
  std::vector<Committee> out;
  for_each_subset(m, k, [&](std::span<const int> idx) {
    std::uint64_t mask = 0;
    for (int c : idx) mask |= std::uint64_t{1} << c;
    out.push_back(Committee::from_mask(mask));
  });
  return out;
}

}  // namespace mwvote
