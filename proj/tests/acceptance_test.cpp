// Acceptance gate for the library: each test covers one release criterion
// and prints a single PASS/FAIL line so a full run reads as a checklist.
// Numeric tolerances are pinned next to the checks they govern.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "seqdist/seqdist.hpp"
#include "test_util.hpp"

namespace {

using seqdist::Algorithm;
using seqdist::count_inversions;
using seqdist::kendall_distance_penalty;
using seqdist::kendall_tau_distance;
using seqdist::pair_counts;
using seqdist::tau_seq_hash;
using seqdist::tau_seq_sort;

void Report(const char* criterion) {
  std::printf("[%s] %s\n",
              ::testing::Test::HasFailure() ? "FAIL" : "PASS", criterion);
  std::fflush(stdout);
}

// All distance and penalty checks below are exact. The only floating-point
// quantity, K^(p) with p in {0.5, 1.0}, is a sum of halves of integers far
// below 2^52, so equality holds bit for bit.
constexpr double kExact = 0.0;

TEST(Acceptance, GoldenExamples) {
  const std::vector<int> sigma1{2, 4, 1, 3};
  const std::vector<int> sigma2{4, 1, 3, 2};
  EXPECT_EQ(kendall_tau_distance(sigma1, sigma2), 5u);
  EXPECT_EQ(pair_counts(sigma1, sigma2).discordant, 5u);
  EXPECT_EQ(seqdist::oracle::quadratic_pair_counts(sigma1, sigma2).discordant,
            5u);

  const std::vector<int> partial1{1, 2, 3, 1, 1, 2, 2};
  const std::vector<int> partial2{3, 2, 1, 2, 1, 2, 1};
  const auto counts = pair_counts(partial1, partial2);
  EXPECT_EQ(counts.discordant, 8u);
  EXPECT_EQ(counts.tied_one, 10u);
  EXPECT_LE(std::abs(kendall_distance_penalty(partial1, partial2, 0.5) - 13.0),
            kExact);

  // The same integers read as sequences cost fewer adjacent swaps than the
  // ranking distance: the two notions genuinely differ.
  EXPECT_EQ(tau_seq_sort(partial1, partial2), 6u);
  EXPECT_EQ(tau_seq_hash(partial1, partial2), 6u);
  EXPECT_LT(tau_seq_sort(partial1, partial2), counts.discordant);

  const std::vector<std::string> words1{"hello", "world", "hello", "blue",
                                        "sky"};
  const std::vector<std::string> words2{"hello", "blue", "sky", "hello",
                                        "world"};
  EXPECT_EQ(tau_seq_sort(words1, words2), 5u);
  EXPECT_EQ(tau_seq_hash(words1, words2), 5u);

  EXPECT_EQ(count_inversions(std::vector<std::size_t>{3, 4, 2, 1}), 5u);

  Report("golden examples reproduced exactly");
}

TEST(Acceptance, OracleEquivalenceExhaustive) {
  // Every ordered pair of same-multiset sequences, n <= 6, alphabet {0,1,2}.
  constexpr std::size_t kMaxLength = 6;
  constexpr int kAlphabet = 3;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string first;

  for (std::size_t n = 1; n <= kMaxLength; ++n) {
    std::vector<int> multiset(n, 0);
    for (bool more = true; more;) {
      std::vector<int> s1(multiset);
      do {
        std::vector<int> s2(multiset);
        do {
          const std::uint64_t expected =
              seqdist::oracle::bfs_min_swaps(s1, s2);
          const std::uint64_t by_sort = tau_seq_sort(s1, s2);
          const std::uint64_t by_hash = tau_seq_hash(s1, s2);
          ++checked;
          if (by_sort != expected || by_hash != expected) {
            ++mismatches;
            if (first.empty()) {
              first = "sort=" + std::to_string(by_sort) +
                      " hash=" + std::to_string(by_hash) +
                      " bfs=" + std::to_string(expected);
            }
          }
        } while (std::next_permutation(s2.begin(), s2.end()));
      } while (std::next_permutation(s1.begin(), s1.end()));

      std::size_t i = n;
      while (i > 0 && multiset[i - 1] == kAlphabet - 1) --i;
      if (i == 0) {
        more = false;
      } else {
        const int v = multiset[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) multiset[j] = v;
      }
    }
  }

  EXPECT_GT(checked, 40000u);
  EXPECT_EQ(mismatches, 0u) << "first mismatch: " << first;
  Report("exhaustive oracle equivalence, n <= 6 over {0,1,2}");
}

TEST(Acceptance, MetricPropertySuite) {
  constexpr int kTriples = 10000;
  std::mt19937_64 rng(0xACCE01);
  std::uint64_t violations = 0;
  std::string first;
  const auto note = [&](const char* what) {
    ++violations;
    if (first.empty()) first = what;
  };

  for (int round = 0; round < kTriples; ++round) {
    const std::size_t n = testutil::below(rng, 65);
    const int alphabet = 1 + static_cast<int>(testutil::below(rng, 8));
    const auto base = testutil::random_sequence(rng, n, alphabet);
    const auto s1 = testutil::shuffled_copy(rng, base);
    const auto s2 = testutil::shuffled_copy(rng, base);
    const auto s3 = testutil::shuffled_copy(rng, base);

    const std::uint64_t d12 = tau_seq_hash(s1, s2);
    const std::uint64_t d21 = tau_seq_hash(s2, s1);
    const std::uint64_t d13 = tau_seq_hash(s1, s3);
    const std::uint64_t d32 = tau_seq_hash(s3, s2);

    if (tau_seq_hash(s1, s1) != 0) note("self distance nonzero");
    if (d12 == 0 && s1 != s2) note("zero distance between unequal sequences");
    if (s1 == s2 && d12 != 0) note("nonzero distance between equal sequences");
    if (d12 != d21) note("asymmetric");
    if (d12 > d13 + d32) note("triangle inequality violated");
    if (n > 0 && d12 > std::uint64_t{n} * (n - 1) / 2) {
      note("distance above the pair count");
    }
  }
  EXPECT_EQ(violations, 0u) << "first: " << first;

  // Same axioms for the penalty distance on random partial rankings.
  for (int round = 0; round < kTriples; ++round) {
    const std::size_t n = 2 + testutil::below(rng, 63);
    const std::size_t rank_space = 1 + testutil::below(rng, n);
    std::vector<int> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<int>(testutil::below(rng, rank_space));
      b[i] = static_cast<int>(testutil::below(rng, rank_space));
      c[i] = static_cast<int>(testutil::below(rng, rank_space));
    }
    for (const double p : {0.5, 1.0}) {
      const double ab = kendall_distance_penalty(a, b, p);
      const double ba = kendall_distance_penalty(b, a, p);
      const double ac = kendall_distance_penalty(a, c, p);
      const double cb = kendall_distance_penalty(c, b, p);
      if (ab < 0.0) note("penalty distance negative");
      if (std::abs(ab - ba) > kExact) note("penalty distance asymmetric");
      if (ab > ac + cb + kExact) note("penalty triangle violated");
      if (std::abs(kendall_distance_penalty(a, a, p)) > kExact) {
        note("penalty self distance nonzero");
      }
      if (ab <= kExact) {
        // Zero distance must mean the same induced ordering: identical
        // dense ranks.
        const auto dense = [](const std::vector<int>& r) {
          std::vector<int> sorted(r);
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()),
                       sorted.end());
          std::vector<std::size_t> d(r.size());
          for (std::size_t i = 0; i < r.size(); ++i) {
            d[i] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), r[i]) -
                sorted.begin());
          }
          return d;
        };
        if (dense(a) != dense(b)) {
          note("penalty distance zero between different orderings");
        }
      }
    }
  }

  EXPECT_EQ(violations, 0u) << "first: " << first;
  Report("metric axioms on 10,000 sequence triples and 10,000 ranking "
         "triples, p in {0.5, 1.0}");
}

TEST(Acceptance, ReductionCheck) {
  std::mt19937_64 rng(0xACCE02);
  std::uint64_t mismatches = 0;

  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + testutil::below(rng, 512);
    const auto sigma1 = testutil::random_permutation(rng, n);
    const auto sigma2 = testutil::random_permutation(rng, n);

    // p-representation: sigma(i) = r exactly when p(r) = i.
    std::vector<std::int64_t> s1(n), s2(n);
    for (std::size_t i = 0; i < n; ++i) {
      s1[sigma1[i]] = static_cast<std::int64_t>(i);
      s2[sigma2[i]] = static_cast<std::int64_t>(i);
    }
    if (tau_seq_sort(s1, s2) != kendall_tau_distance(sigma1, sigma2)) {
      ++mismatches;
    }
  }
  EXPECT_EQ(mismatches, 0u);

  for (const std::size_t n : {std::size_t{1}, std::size_t{10},
                              std::size_t{100}, std::size_t{10000}}) {
    std::vector<std::int64_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::int64_t>(i);
    std::vector<std::int64_t> reversed(s.rbegin(), s.rend());
    const std::uint64_t full = std::uint64_t{n} * (n - 1) / 2;
    EXPECT_EQ(tau_seq_sort(s, reversed), full) << "n=" << n;
    EXPECT_EQ(tau_seq_hash(s, reversed), full) << "n=" << n;
  }

  Report("permutation reduction: tau_S equals the ranking distance on 1,000 "
         "distinct-element pairs, and reversal reaches n(n-1)/2");
}

TEST(Acceptance, CrossAlgorithmAndKernelEquality) {
  std::uint64_t mismatches = 0;
  for (const std::size_t alphabet : {std::size_t{256}, std::size_t{65536}}) {
    const auto symbols = seqdist::bench::int64_alphabet(alphabet);
    for (std::size_t length = 256; length <= 16384; length *= 2) {
      std::mt19937_64 rng(0xACCE03 ^ (length * 131) ^ alphabet);
      for (int pair = 0; pair < 100; ++pair) {
        const auto [s1, s2] = seqdist::bench::gen_pair<std::int64_t>(
            symbols, length, rng);
        if (tau_seq_sort(s1, s2) != tau_seq_hash(s1, s2)) ++mismatches;
      }
    }
  }
  EXPECT_EQ(mismatches, 0u);

  std::mt19937_64 rng(0xACCE04);
  for (const std::size_t n :
       {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{10},
        std::size_t{100}, std::size_t{1000}, std::size_t{10000}}) {
    const auto p = testutil::random_permutation(rng, n);
    EXPECT_EQ(count_inversions(p), seqdist::oracle::quadratic_inversions(p))
        << "n=" << n;
  }

  Report("cross-algorithm equality on 100 pairs per cell, L in {2^8..2^14}, "
         "|Sigma| in {256, 65536}; inversion kernel matches the quadratic "
         "scan up to n = 10^4");
}

TEST(Acceptance, Count64Bit) {
  const std::size_t n = 1 << 17;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>(i);
  std::vector<int> reversed(s.rbegin(), s.rend());
  const std::uint64_t expected = 8589869056ULL;  // n(n-1)/2 at n = 2^17
  EXPECT_EQ(tau_seq_sort(s, reversed), expected);
  EXPECT_EQ(tau_seq_hash(s, reversed), expected);
  Report("64-bit counts: reversal distance at n = 2^17 is 8,589,869,056");
}

TEST(Acceptance, ScalingEnvelope) {
  // An O(n^2) implementation would show a 64x median between these lengths;
  // O(n lg n) predicts about 9.8x. The gate is pinned at 16x.
  constexpr double kEnvelope = 16.0;
  seqdist::bench::BenchConfig config;
  config.lengths = {8192, 65536};  // 2^13 and 2^16
  config.alphabet_sizes = {256};
  config.pairs_per_cell = 15;
  config.mode = seqdist::bench::ElementMode::int64;
  config.seed = 0xACCE05;
  const auto records = seqdist::bench::run_suite(config);
  ASSERT_EQ(records.size(), 4u);

  for (const Algorithm alg : {Algorithm::sort, Algorithm::hash}) {
    std::uint64_t small = 0;
    std::uint64_t large = 0;
    for (const auto& r : records) {
      if (r.algorithm != alg) continue;
      (r.length == 8192 ? small : large) = r.median_time_ns;
    }
    ASSERT_GT(small, 0u);
    const double ratio =
        static_cast<double>(large) / static_cast<double>(small);
    EXPECT_LT(ratio, kEnvelope) << to_string(alg) << " ratio " << ratio;
  }
  Report("scaling envelope: median(2^16) / median(2^13) below 16 for both "
         "algorithms");
}

TEST(Acceptance, QualitativePerformanceReport) {
  // Machine-dependent orderings, reported for inspection but never failed:
  // absolute timings move with hardware, and so can close calls.
  {
    seqdist::bench::BenchConfig config;
    config.lengths = {4096, 8192, 16384, 32768, 65536};
    config.alphabet_sizes = {256};
    config.pairs_per_cell = 11;
    config.mode = seqdist::bench::ElementMode::int64;
    config.seed = 0xACCE06;
    const auto records = seqdist::bench::run_suite(config);
    for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
      const auto& sort_rec = records[i];
      const auto& hash_rec = records[i + 1];
      std::printf("[REPORT] int64 L=%zu: sort median %lluns, hash median "
                  "%lluns -> hash %s\n",
                  sort_rec.length,
                  static_cast<unsigned long long>(sort_rec.median_time_ns),
                  static_cast<unsigned long long>(hash_rec.median_time_ns),
                  hash_rec.median_time_ns <= sort_rec.median_time_ns
                      ? "faster or equal (expected)"
                      : "slower (unexpected on most machines)");
    }
  }
  {
    seqdist::bench::BenchConfig config;
    config.lengths = {256, 512};
    config.alphabet_sizes = {256};
    config.pairs_per_cell = 5;
    config.mode = seqdist::bench::ElementMode::object_lcc;
    config.object_size = 2048;
    config.seed = 0xACCE07;
    const auto records = seqdist::bench::run_suite(config);
    for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
      const auto& sort_rec = records[i];
      const auto& hash_rec = records[i + 1];
      std::printf("[REPORT] lcc m=2048 L=%zu: sort median %lluns, hash "
                  "median %lluns -> sort %s\n",
                  sort_rec.length,
                  static_cast<unsigned long long>(sort_rec.median_time_ns),
                  static_cast<unsigned long long>(hash_rec.median_time_ns),
                  sort_rec.median_time_ns <= hash_rec.median_time_ns
                      ? "faster or equal (expected)"
                      : "slower (unexpected on most machines)");
    }
  }
  Report("qualitative performance orderings reported (non-gating)");
}

}  // namespace
