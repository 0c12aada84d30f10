#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "element_ops.hpp"
#include "errors.hpp"
#include "inversions.hpp"

namespace seqdist {

// Classification of all n(n-1)/2 index pairs of two equal-length rankings.
// Rank values only matter through order and equality; they need not be
// contiguous or start at 1.
struct PairCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
  std::uint64_t tied_one = 0;   // tied in exactly one ranking
  std::uint64_t tied_both = 0;  // tied in both rankings

  std::uint64_t total() const {
    return concordant + discordant + tied_one + tied_both;
  }

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

using Rank = std::int64_t;

template <typename R>
concept RankingSequence = ElementSequence<R> &&
                          std::integral<std::ranges::range_value_t<R>> &&
                          std::convertible_to<std::ranges::range_value_t<R>, Rank>;

namespace detail {

// Number of intra-run pairs, summed over maximal runs of equal values under
// `proj`, in a sorted sequence.
template <typename It, typename Proj>
std::uint64_t tied_pairs(It first, It last, Proj proj) {
  std::uint64_t pairs = 0;
  for (It run = first; run != last;) {
    It next = run;
    std::uint64_t g = 0;
    while (next != last && proj(*next) == proj(*run)) {
      ++next;
      ++g;
    }
    pairs += g * (g - 1) / 2;
    run = next;
  }
  return pairs;
}

inline PairCounts pair_counts_impl(std::span<const Rank> r1,
                                   std::span<const Rank> r2) {
  if (r1.size() != r2.size()) {
    throw LengthMismatchError(r1.size(), r2.size());
  }
  const std::size_t n = r1.size();
  PairCounts counts;
  if (n < 2) return counts;

  // Sort-and-count: pair up the rankings, order by first rank with the
  // second rank as tie-break, then every strict descent of second ranks is
  // exactly one discordant pair.
  std::vector<std::pair<Rank, Rank>> tuples(n);
  for (std::size_t i = 0; i < n; ++i) tuples[i] = {r1[i], r2[i]};
  std::sort(tuples.begin(), tuples.end());

  const std::uint64_t total =
      static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t t1 = tied_pairs(
      tuples.begin(), tuples.end(),
      [](const std::pair<Rank, Rank>& t) { return t.first; });
  const std::uint64_t both = tied_pairs(
      tuples.begin(), tuples.end(),
      [](const std::pair<Rank, Rank>& t) { return t; });

  std::vector<Rank> seconds(n);
  for (std::size_t i = 0; i < n; ++i) seconds[i] = tuples[i].second;
  counts.discordant = sort_counting_inversions(std::span<Rank>(seconds));

  // seconds is now sorted, which is all tied_pairs needs for t2.
  const std::uint64_t t2 =
      tied_pairs(seconds.begin(), seconds.end(), [](Rank r) { return r; });

  counts.tied_both = both;
  counts.tied_one = t1 + t2 - 2 * both;
  counts.concordant = total - counts.discordant - counts.tied_one - both;
  return counts;
}

template <RankingSequence R>
std::vector<Rank> to_ranks(const R& r) {
  auto s = as_span(r);
  return std::vector<Rank>(s.begin(), s.end());
}

inline void require_untied(const PairCounts& counts) {
  if (counts.tied_one != 0 || counts.tied_both != 0) {
    throw TiesNotAllowedError();
  }
}

inline void require_comparable_length(std::size_t n) {
  if (n < 2) {
    throw DistanceError(ErrorKind::undefined_for_length,
                        "rankings of length " + std::to_string(n) +
                            " have no element pairs to compare");
  }
}

}  // namespace detail

// Counts concordant, discordant and tied pairs of two rankings in
// O(n log n). Ties are permitted in either ranking.
template <RankingSequence R1, RankingSequence R2>
PairCounts pair_counts(const R1& r1, const R2& r2) {
  const auto v1 = detail::to_ranks(r1);
  const auto v2 = detail::to_ranks(r2);
  return detail::pair_counts_impl(v1, v2);
}

// Kendall tau rank correlation, 2(|C| - |D|) / (n(n-1)), in [-1, 1].
// Requires total rankings (no ties) of length >= 2.
template <RankingSequence R1, RankingSequence R2>
double kendall_tau_correlation(const R1& r1, const R2& r2) {
  const PairCounts counts = pair_counts(r1, r2);
  detail::require_comparable_length(std::ranges::size(r1));
  detail::require_untied(counts);
  const double pairs = static_cast<double>(counts.total());
  return (static_cast<double>(counts.concordant) -
          static_cast<double>(counts.discordant)) /
         pairs;
}

// Kendall tau distance between total rankings: the number of discordant
// pairs, which equals the minimum number of adjacent swaps needed to
// transform one ranked order of elements into the other.
template <RankingSequence R1, RankingSequence R2>
std::uint64_t kendall_tau_distance(const R1& r1, const R2& r2) {
  const PairCounts counts = pair_counts(r1, r2);
  detail::require_untied(counts);
  return counts.discordant;
}

// Kendall tau distance scaled by the pair count, in [0, 1].
template <RankingSequence R1, RankingSequence R2>
double kendall_tau_distance_normalized(const R1& r1, const R2& r2) {
  const PairCounts counts = pair_counts(r1, r2);
  detail::require_comparable_length(std::ranges::size(r1));
  detail::require_untied(counts);
  return static_cast<double>(counts.discordant) /
         static_cast<double>(counts.total());
}

// Kendall distance with penalty parameter for partial rankings:
// |D| + p * |E|, where E is the set of pairs tied in exactly one ranking.
// Computable for any p in [0, 1]; it is a metric for 0.5 <= p <= 1.
template <RankingSequence R1, RankingSequence R2>
double kendall_distance_penalty(const R1& r1, const R2& r2, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PenaltyOutOfRangeError(p);
  }
  const PairCounts counts = pair_counts(r1, r2);
  return static_cast<double>(counts.discordant) +
         p * static_cast<double>(counts.tied_one);
}

}  // namespace seqdist
