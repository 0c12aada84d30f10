#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

namespace seqdist {

// A bijection on {0..n-1}. As produced by the relabeling step, mapping[i] is
// the position in the second sequence that position i of the first sequence
// corresponds to.
using IndexPermutation = std::vector<std::size_t>;

namespace detail {

// Merge [first, mid) and [mid, last) through scratch, counting cross pairs
// that are out of order. Equal elements are taken from the left half first,
// so ties are never counted.
template <typename V, typename Less>
std::uint64_t merge_counting(V* first, V* mid, V* last, V* scratch,
                             const Less& less) {
  std::uint64_t inversions = 0;
  V* left = first;
  V* right = mid;
  V* out = scratch;
  while (left != mid && right != last) {
    if (less(*right, *left)) {
      // *right precedes everything remaining in the left half
      inversions += static_cast<std::uint64_t>(mid - left);
      *out++ = std::move(*right++);
    } else {
      *out++ = std::move(*left++);
    }
  }
  out = std::move(left, mid, out);
  std::move(right, last, out);
  std::move(scratch, scratch + (last - first), first);
  return inversions;
}

template <typename V, typename Less>
std::uint64_t sort_counting(V* first, V* last, V* scratch, const Less& less) {
  const auto n = last - first;
  if (n < 2) return 0;
  V* mid = first + n / 2;
  std::uint64_t inversions = sort_counting(first, mid, scratch, less);
  inversions += sort_counting(mid, last, scratch, less);
  inversions += merge_counting(first, mid, last, scratch, less);
  return inversions;
}

}  // namespace detail

// Sorts `values` in place and returns the number of pairs i < j with
// values[j] strictly less than values[i], i.e. the number of adjacent swaps
// a stable sort needs.
template <typename V, typename Less = std::less<V>>
std::uint64_t sort_counting_inversions(std::span<V> values,
                                       const Less& less = {}) {
  if (values.size() < 2) return 0;
  std::vector<V> scratch(values.size());
  return detail::sort_counting(values.data(), values.data() + values.size(),
                               scratch.data(), less);
}

// Number of inversions of an index permutation: pairs i < j with p[i] > p[j].
// The caller's permutation is left untouched.
inline std::uint64_t count_inversions(std::span<const std::size_t> p) {
  std::vector<std::size_t> work(p.begin(), p.end());
  return sort_counting_inversions(std::span<std::size_t>(work));
}

inline std::uint64_t count_inversions(const IndexPermutation& p) {
  return count_inversions(std::span<const std::size_t>(p));
}

// True when `p` is a permutation of {0..n-1}.
inline bool is_index_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace seqdist
