#pragma once

#include <optional>

namespace rdiag {

template <typename T>
T alternating_partition_sum(std::span<const Symbol> symbols, std::span<const std::size_t> labels,
                            const std::function<T(std::size_t, std::size_t)>& weight) {
  const std::size_t len = symbols.size();
  // full[l][r]: sum over admissible partitions of positions [l, r).
  std::vector<std::vector<std::optional<T>>> full(len + 1, std::vector<std::optional<T>>(len + 1));
  // open[j][r][c]: a block whose latest element is j and which holds c
  // elements; completions of that block plus everything in (j, r).
  std::vector<std::vector<std::vector<std::optional<T>>>> open(
      len, std::vector<std::vector<std::optional<T>>>(len + 1,
                                                      std::vector<std::optional<T>>(len + 1)));

  std::function<const T&(std::size_t, std::size_t)> full_sum;
  std::function<const T&(std::size_t, std::size_t, std::size_t)> open_sum;

  full_sum = [&](std::size_t l, std::size_t r) -> const T& {
    auto& slot = full[l][r];
    if (!slot) {
      slot = (l == r) ? T(1) : open_sum(l, r, 1);
    }
    return *slot;
  };

  open_sum = [&](std::size_t j, std::size_t r, std::size_t count) -> const T& {
    auto& slot = open[j][r][count];
    if (!slot) {
      T total(0);
      if (count % 2 == 0) {
        const T w = weight(labels[j], count / 2);
        if (w != 0) total += w * full_sum(j + 1, r);
      }
      for (std::size_t k = j + 1; k < r; ++k) {
        if (symbols[k] == symbols[j] || labels[k] != labels[j]) continue;
        // The gap (j, k) must itself be fully partitioned; odd gaps never are.
        if ((k - j - 1) % 2 != 0) continue;
        const T& inside = full_sum(j + 1, k);
        if (inside == 0) continue;
        total += inside * open_sum(k, r, count + 1);
      }
      slot = std::move(total);
    }
    return *slot;
  };

  return T(full_sum(0, len));
}

}  // namespace rdiag
