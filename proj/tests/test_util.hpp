#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Small generators shared by the test binaries. Expected values are always
// recomputed from an oracle in the same run, so cross-platform stream
// stability of the distributions does not matter here.
namespace testutil {

inline std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[below(rng, i)]);
  }
}

// Random sequence over {0..alphabet-1}; duplicates likely once n > alphabet.
inline std::vector<int> random_sequence(std::mt19937_64& rng, std::size_t n,
                                        int alphabet) {
  std::vector<int> s(n);
  for (auto& x : s) x = static_cast<int>(below(rng, alphabet));
  return s;
}

template <typename T>
std::vector<T> shuffled_copy(std::mt19937_64& rng, std::vector<T> s) {
  shuffle(rng, s);
  return s;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng,
                                                   std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  shuffle(rng, p);
  return p;
}

}  // namespace testutil
