#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "element_ops.hpp"
#include "errors.hpp"
#include "rank_metrics.hpp"

// Reference implementations that evaluate the definitions literally. They
// exist to validate the fast paths and are deliberately slow.
namespace seqdist::oracle {

// State space of the swap search grows factorially; above this length a
// validation run stops being a fixture and starts being a job.
inline constexpr std::size_t kBfsMaxLength = 10;

namespace detail {

// Pack a short label sequence into one word, 4 bits per position. With at
// most kBfsMaxLength positions there are at most 10 distinct labels, so
// every label fits a nibble.
inline std::uint64_t pack_labels(std::span<const std::size_t> labels) {
  std::uint64_t state = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    state |= static_cast<std::uint64_t>(labels[i]) << (4 * i);
  }
  return state;
}

}  // namespace detail

// Minimum adjacent swaps from s1 to s2, found by breadth-first search over
// the graph whose nodes are sequences and whose edges are single adjacent
// swaps. Requires the same multiset on both sides (checked up front, since
// the target would otherwise be unreachable) and length <= kBfsMaxLength.
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2> &&
           OrderingOps<Ops, std::ranges::range_value_t<R1>>
std::uint64_t bfs_min_swaps(const R1& s1_range, const R2& s2_range,
                            const Ops& ops = {}) {
  using T = std::ranges::range_value_t<R1>;
  const auto s1 = seqdist::detail::as_span(s1_range);
  const auto s2 = seqdist::detail::as_span(s2_range);

  if (s1.size() != s2.size()) {
    throw LengthMismatchError(s1.size(), s2.size());
  }
  const std::size_t n = s1.size();
  if (n > kBfsMaxLength) {
    throw SizeLimitExceededError(n, kBfsMaxLength);
  }

  const auto less = [&ops](const T& a, const T& b) { return ops.less(a, b); };
  std::vector<T> sorted1(s1.begin(), s1.end());
  std::vector<T> sorted2(s2.begin(), s2.end());
  std::sort(sorted1.begin(), sorted1.end(), less);
  std::sort(sorted2.begin(), sorted2.end(), less);
  for (std::size_t i = 0; i < n; ++i) {
    if (!ops.equal(sorted1[i], sorted2[i])) {
      // First disagreement between the sorted copies: the smaller element is
      // the one whose copies ran out on the other side.
      const T& e = ops.less(sorted1[i], sorted2[i]) ? sorted1[i] : sorted2[i];
      const auto count_in = [&](std::span<const T> s) {
        return static_cast<std::uint64_t>(std::count_if(
            s.begin(), s.end(),
            [&](const T& x) { return ops.equal(x, e); }));
      };
      throw CountMismatchError(seqdist::detail::element_repr(e), count_in(s1),
                               count_in(s2));
    }
  }

  const bool already_equal =
      std::equal(s1.begin(), s1.end(), s2.begin(),
                 [&ops](const T& a, const T& b) { return ops.equal(a, b); });
  if (already_equal) return 0;

  // Relabel both sequences with dense labels so states pack into a word.
  std::vector<T> uniq;
  for (const T& x : sorted1) {
    if (uniq.empty() || !ops.equal(uniq.back(), x)) uniq.push_back(x);
  }
  const auto label_of = [&](const T& x) {
    return static_cast<std::size_t>(
        std::lower_bound(uniq.begin(), uniq.end(), x, less) - uniq.begin());
  };
  std::vector<std::size_t> l1(n), l2(n);
  for (std::size_t i = 0; i < n; ++i) {
    l1[i] = label_of(s1[i]);
    l2[i] = label_of(s2[i]);
  }
  const std::uint64_t start = detail::pack_labels(l1);
  const std::uint64_t target = detail::pack_labels(l2);

  std::unordered_set<std::uint64_t> visited{start};
  std::vector<std::uint64_t> frontier{start};
  std::vector<std::uint64_t> next;
  for (std::uint64_t depth = 1;; ++depth) {
    next.clear();
    for (const std::uint64_t state : frontier) {
      for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        const std::uint64_t a = (state >> (4 * pos)) & 0xF;
        const std::uint64_t b = (state >> (4 * (pos + 1))) & 0xF;
        if (a == b) continue;  // swapping equal copies changes nothing
        const std::uint64_t diff = (a ^ b);
        const std::uint64_t swapped =
            state ^ (diff << (4 * pos)) ^ (diff << (4 * (pos + 1)));
        if (swapped == target) return depth;
        if (visited.insert(swapped).second) next.push_back(swapped);
      }
    }
    if (next.empty()) {
      throw std::logic_error("bfs_min_swaps: target unreachable");
    }
    frontier.swap(next);
  }
}

// Pair classification by the literal set definitions, one O(n^2) double
// loop over all index pairs.
template <RankingSequence R1, RankingSequence R2>
PairCounts quadratic_pair_counts(const R1& r1_range, const R2& r2_range) {
  const auto r1 = seqdist::detail::to_ranks(r1_range);
  const auto r2 = seqdist::detail::to_ranks(r2_range);
  if (r1.size() != r2.size()) {
    throw LengthMismatchError(r1.size(), r2.size());
  }
  PairCounts counts;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    for (std::size_t j = i + 1; j < r1.size(); ++j) {
      const bool tied1 = r1[i] == r1[j];
      const bool tied2 = r2[i] == r2[j];
      if (tied1 && tied2) {
        ++counts.tied_both;
      } else if (tied1 || tied2) {
        ++counts.tied_one;
      } else if ((r1[i] < r1[j]) == (r2[i] < r2[j])) {
        ++counts.concordant;
      } else {
        ++counts.discordant;
      }
    }
  }
  return counts;
}

// Inversion count by scanning every pair.
inline std::uint64_t quadratic_inversions(std::span<const std::size_t> p) {
  std::uint64_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions;
}

}  // namespace seqdist::oracle
