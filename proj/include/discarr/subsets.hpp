#pragma once

// Small helpers for subsets of tiny ground sets, represented as bitmasks.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace discarr {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Indices of the set bits, ascending.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Calls f(subset) for every `size`-element subset of {0..n-1}, given as an
/// ascending index vector, in lexicographic order.
template <typename F>
void for_each_combination(int n, int size, F&& f) {
  if (size < 0 || size > n) return;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<int>&>(idx));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f(sub) for every submask of `m` (including 0 and m itself).
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) return;
    s = (s - 1) & m;
  }
}

inline void require_small_ground_set(int n) {
  if (n < 0 || n > 63) throw std::invalid_argument("ground set too large for bitmask representation (max 63)");
}

}  // namespace discarr
