#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "element_ops.hpp"
#include "inversions.hpp"
#include "relabel.hpp"

namespace seqdist {

// Relabeling strategy behind the sequence distance. Both produce the same
// occurrence mapping; they differ only in cost characteristics.
enum class Algorithm {
  sort,  // sorted copy + binary search; needs ordered elements
  hash,  // hash table; needs hashable elements
};

constexpr std::string_view to_string(Algorithm alg) {
  return alg == Algorithm::sort ? "sort" : "hash";
}

// Kendall tau sequence distance: the minimum number of adjacent swaps that
// transforms s1 into s2. Defined for equal-length sequences containing the
// same elements with the same multiplicities; anything else throws the
// corresponding DistanceError. Runs in O(n log n).
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2> &&
           OrderingOps<Ops, std::ranges::range_value_t<R1>>
std::uint64_t tau_seq_sort(const R1& s1, const R2& s2, const Ops& ops = {}) {
  IndexPermutation p = relabel_by_sort(s1, s2, ops);
  return sort_counting_inversions(std::span<std::size_t>(p));
}

// Same distance via hash relabeling. For primitive element types the only
// O(n log n) step left is the inversion count, so this is usually the faster
// of the two.
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2> &&
           HashingOps<Ops, std::ranges::range_value_t<R1>>
std::uint64_t tau_seq_hash(const R1& s1, const R2& s2, const Ops& ops = {}) {
  IndexPermutation p = relabel_by_hash(s1, s2, ops);
  return sort_counting_inversions(std::span<std::size_t>(p));
}

// Dispatch on a runtime algorithm choice. Defaults to hashing.
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2>
std::uint64_t tau_seq(const R1& s1, const R2& s2,
                      Algorithm alg = Algorithm::hash, const Ops& ops = {}) {
  return alg == Algorithm::sort ? tau_seq_sort(s1, s2, ops)
                                : tau_seq_hash(s1, s2, ops);
}

}  // namespace seqdist
