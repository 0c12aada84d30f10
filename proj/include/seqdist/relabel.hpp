#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_ops.hpp"
#include "errors.hpp"
#include "inversions.hpp"

namespace seqdist {
namespace detail {

template <typename T, typename Ops>
struct OpsHash {
  const Ops* ops;
  std::size_t operator()(const T& x) const { return ops->hash(x); }
};

template <typename T, typename Ops>
struct OpsEqual {
  const Ops* ops;
  bool operator()(const T& a, const T& b) const { return ops->equal(a, b); }
};

// Positions of each sequence, bucketed by element label. FIFO order inside a
// bucket preserves the order duplicate copies appear in the sequence, which
// is what makes the k-th occurrence in s1 line up with the k-th occurrence
// in s2 when the buckets are drained.
using PositionBuckets = std::vector<std::vector<std::size_t>>;

// Drain paired buckets into the permutation. A bucket size mismatch means
// the sequences hold different numbers of copies of that element.
template <typename ElementForLabel>
void drain_buckets(const PositionBuckets& buckets1,
                   const PositionBuckets& buckets2, IndexPermutation& p,
                   const ElementForLabel& element_for_label) {
  for (std::size_t label = 0; label < buckets1.size(); ++label) {
    const auto& q1 = buckets1[label];
    const auto& q2 = buckets2[label];
    if (q1.size() != q2.size()) {
      throw CountMismatchError(element_for_label(label), q1.size(), q2.size());
    }
    for (std::size_t k = 0; k < q1.size(); ++k) {
      p[q1[k]] = q2[k];
    }
  }
}

template <typename T, typename Ops>
IndexPermutation relabel_by_sort_impl(std::span<const T> s1,
                                      std::span<const T> s2, const Ops& ops) {
  if (s1.size() != s2.size()) {
    throw LengthMismatchError(s1.size(), s2.size());
  }
  const std::size_t n = s1.size();
  IndexPermutation p(n);
  if (n == 0) return p;

  const auto less = [&ops](const T& a, const T& b) { return ops.less(a, b); };

  std::vector<T> sorted(s1.begin(), s1.end());
  std::sort(sorted.begin(), sorted.end(), less);

  // Compress runs of equal elements into dense labels 0..k-1. label_start
  // remembers one representative position per label for error reporting.
  std::vector<std::size_t> labels(n);
  std::vector<std::size_t> label_start;
  labels[0] = 0;
  label_start.push_back(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (ops.equal(sorted[i], sorted[i - 1])) {
      labels[i] = labels[i - 1];
    } else {
      labels[i] = labels[i - 1] + 1;
      label_start.push_back(i);
    }
  }
  const std::size_t num_labels = labels[n - 1] + 1;

  // Label lookup is a binary search of the sorted copy; any position inside
  // the run of equal elements yields the same label.
  const auto label_of = [&](const T& x) -> std::size_t {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), x, less);
    if (it == sorted.end() || !ops.equal(*it, x)) {
      throw ElementNotSharedError(element_repr(x));
    }
    return labels[static_cast<std::size_t>(it - sorted.begin())];
  };

  PositionBuckets buckets1(num_labels);
  PositionBuckets buckets2(num_labels);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = labels[static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), s1[i], less) -
        sorted.begin())];
    const std::size_t k = label_of(s2[i]);
    buckets1[j].push_back(i);
    buckets2[k].push_back(i);
  }

  drain_buckets(buckets1, buckets2, p, [&](std::size_t label) {
    return element_repr(sorted[label_start[label]]);
  });
  return p;
}

template <typename T, typename Ops>
IndexPermutation relabel_by_hash_impl(std::span<const T> s1,
                                      std::span<const T> s2, const Ops& ops) {
  if (s1.size() != s2.size()) {
    throw LengthMismatchError(s1.size(), s2.size());
  }
  const std::size_t n = s1.size();
  IndexPermutation p(n);
  if (n == 0) return p;

  // Labels are assigned in first-occurrence order of s1. The table is sized
  // up front so no rehash happens even when every element is unique.
  std::unordered_map<T, std::size_t, OpsHash<T, Ops>, OpsEqual<T, Ops>> table(
      0, OpsHash<T, Ops>{&ops}, OpsEqual<T, Ops>{&ops});
  table.max_load_factor(0.75f);
  table.reserve(n);

  std::vector<T> label_element;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [it, inserted] = table.try_emplace(s1[i], table.size());
    if (inserted) label_element.push_back(s1[i]);
    (void)it;
  }
  const std::size_t num_labels = table.size();

  PositionBuckets buckets1(num_labels);
  PositionBuckets buckets2(num_labels);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = table.find(s1[i])->second;
    const auto k_it = table.find(s2[i]);
    if (k_it == table.end()) {
      throw ElementNotSharedError(element_repr(s2[i]));
    }
    buckets1[j].push_back(i);
    buckets2[k_it->second].push_back(i);
  }

  drain_buckets(buckets1, buckets2, p, [&](std::size_t label) {
    return element_repr(label_element[label]);
  });
  return p;
}

}  // namespace detail

// Occurrence mapping between two same-multiset sequences: the k-th occurrence
// of each element in s1 is mapped to the k-th occurrence of that element in
// s2. Any other pairing of duplicates would force two equal elements to pass
// each other, costing swaps without changing the sequence. Labels come from a
// sorted copy of s1 plus binary search.
//
// Throws LengthMismatchError, ElementNotSharedError or CountMismatchError
// when the sequences are not permutations of the same multiset.
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2> &&
           OrderingOps<Ops, std::ranges::range_value_t<R1>>
IndexPermutation relabel_by_sort(const R1& s1, const R2& s2,
                                 const Ops& ops = {}) {
  return detail::relabel_by_sort_impl(detail::as_span(s1), detail::as_span(s2),
                                      ops);
}

// Same mapping as relabel_by_sort, with labels drawn from a hash table
// instead of a sorted copy. Label numbering differs but the permutation is
// identical because each bucket pair is drained per element.
template <ElementSequence R1, ElementSequence R2,
          typename Ops = ElementOps<std::ranges::range_value_t<R1>>>
  requires SharedElementSequences<R1, R2> &&
           HashingOps<Ops, std::ranges::range_value_t<R1>>
IndexPermutation relabel_by_hash(const R1& s1, const R2& s2,
                                 const Ops& ops = {}) {
  return detail::relabel_by_hash_impl(detail::as_span(s1), detail::as_span(s2),
                                      ops);
}

}  // namespace seqdist
