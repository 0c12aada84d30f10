#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tau_sequence.hpp"

// Timing harness: seeded random sequence pairs over configurable alphabets,
// one timed distance call per pair per algorithm, plot-ready CSV out.
namespace seqdist::bench {

enum class ElementMode { codepoint, int64, float64, object_hcc, object_lcc };

// Object alphabets with deliberately skewed comparison costs. hcc tokens
// share a long prefix and differ in the last character, so every comparison
// walks the whole token; lcc tokens differ in the first character, so
// unequal comparisons short-circuit immediately. Hashing walks the whole
// token either way.
enum class TokenCase { hcc, lcc };

constexpr std::string_view to_string(ElementMode mode) {
  switch (mode) {
    case ElementMode::codepoint: return "codepoint";
    case ElementMode::int64: return "int64";
    case ElementMode::float64: return "float64";
    case ElementMode::object_hcc: return "object_hcc";
    case ElementMode::object_lcc: return "object_lcc";
  }
  return "unknown";
}

inline ElementMode element_mode_from_string(std::string_view name) {
  if (name == "codepoint") return ElementMode::codepoint;
  if (name == "int64") return ElementMode::int64;
  if (name == "float64") return ElementMode::float64;
  if (name == "object_hcc") return ElementMode::object_hcc;
  if (name == "object_lcc") return ElementMode::object_lcc;
  throw std::runtime_error("unknown element mode: " + std::string(name));
}

constexpr bool is_object_mode(ElementMode mode) {
  return mode == ElementMode::object_hcc || mode == ElementMode::object_lcc;
}

struct BenchConfig {
  std::vector<std::size_t> lengths;
  std::vector<std::size_t> alphabet_sizes;
  std::size_t pairs_per_cell = 100;
  ElementMode mode = ElementMode::int64;
  std::size_t object_size = 32;  // token length, object modes only
  std::uint64_t seed = 0x5eedULL;
  std::vector<Algorithm> algorithms = {Algorithm::sort, Algorithm::hash};
};

struct BenchRecord {
  ElementMode mode = ElementMode::int64;
  std::size_t length = 0;
  std::size_t alphabet_size = 0;
  std::size_t object_size = 0;  // 0 for primitive modes
  Algorithm algorithm = Algorithm::sort;
  std::uint64_t mean_time_ns = 0;
  std::uint64_t median_time_ns = 0;
  std::size_t pairs_measured = 0;
  std::uint64_t distance_checksum = 0;  // sum of distances over the cell

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic per-cell seed, independent of the order cells run in.
inline std::uint64_t cell_seed(std::uint64_t seed, ElementMode mode,
                               std::size_t length, std::size_t alphabet_size,
                               std::size_t object_size) {
  std::uint64_t h = detail::splitmix64(seed);
  h = detail::splitmix64(h ^ static_cast<std::uint64_t>(mode));
  h = detail::splitmix64(h ^ length);
  h = detail::splitmix64(h ^ alphabet_size);
  h = detail::splitmix64(h ^ object_size);
  return h;
}

// Uniform draw from [0, bound) by rejection, so results depend only on the
// mt19937_64 bit stream and not on a library's distribution internals.
inline std::uint64_t next_bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t residue = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= residue) return r % bound;
  }
}

// A random sequence drawn i.i.d. uniform from the alphabet, paired with a
// uniform (Fisher-Yates) shuffle of it. The pair shares its multiset by
// construction, so a distance is always defined.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> gen_pair(std::span<const T> alphabet,
                                                   std::size_t length,
                                                   std::mt19937_64& rng) {
  std::vector<T> first(length);
  for (std::size_t i = 0; i < length; ++i) {
    first[i] = alphabet[next_bounded(rng, alphabet.size())];
  }
  std::vector<T> second = first;
  for (std::size_t i = length; i > 1; --i) {
    const std::size_t j = next_bounded(rng, i);
    std::swap(second[i - 1], second[j]);
  }
  return {std::move(first), std::move(second)};
}

// Token alphabet of `count` distinct strings of `object_size` characters.
inline std::vector<std::string> gen_object_alphabet(TokenCase variant,
                                                    std::size_t object_size,
                                                    std::size_t count = 256) {
  if (object_size < 1) {
    throw std::invalid_argument("object size must be at least 1");
  }
  if (count > 256) {
    throw std::invalid_argument(
        "object alphabets support at most 256 distinct tokens");
  }
  std::vector<std::string> alphabet;
  alphabet.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const char c = static_cast<char>(i);
    std::string token;
    if (variant == TokenCase::hcc) {
      token.assign(object_size - 1, '\0');
      token.push_back(c);
    } else {
      token.assign(object_size, c);
    }
    alphabet.push_back(std::move(token));
  }
  return alphabet;
}

inline std::vector<char32_t> codepoint_alphabet(std::size_t size) {
  std::vector<char32_t> alphabet(size);
  for (std::size_t i = 0; i < size; ++i) alphabet[i] = static_cast<char32_t>(i);
  return alphabet;
}

inline std::vector<std::int64_t> int64_alphabet(std::size_t size) {
  std::vector<std::int64_t> alphabet(size);
  for (std::size_t i = 0; i < size; ++i)
    alphabet[i] = static_cast<std::int64_t>(i);
  return alphabet;
}

inline std::vector<double> float64_alphabet(std::size_t size) {
  std::vector<double> alphabet(size);
  for (std::size_t i = 0; i < size; ++i)
    alphabet[i] = 1.0 * static_cast<double>(i);
  return alphabet;
}

namespace detail {

inline std::uint64_t rounded_mean(const std::vector<std::uint64_t>& xs) {
  std::uint64_t sum = 0;
  for (std::uint64_t x : xs) sum += x;
  return (sum + xs.size() / 2) / xs.size();
}

inline std::uint64_t median(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return (xs[mid - 1] + xs[mid] + 1) / 2;
}

// Runs every requested algorithm over one (length, alphabet) cell. The RNG
// is re-seeded per algorithm so each one sees the identical pair stream;
// disagreement between algorithms on any pair is an internal failure.
template <typename T>
void run_cell(const BenchConfig& config, std::span<const T> alphabet,
              std::size_t length, std::size_t alphabet_size,
              std::uint64_t seed, std::vector<BenchRecord>& records) {
  using clock = std::chrono::steady_clock;
  std::vector<std::vector<std::uint64_t>> distances_by_alg;

  for (const Algorithm alg : config.algorithms) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> times;
    std::vector<std::uint64_t> distances;
    times.reserve(config.pairs_per_cell);
    std::uint64_t checksum = 0;

    for (std::size_t k = 0; k < config.pairs_per_cell; ++k) {
      const auto [s1, s2] = gen_pair(alphabet, length, rng);
      if (k == 0) {
        (void)tau_seq(s1, s2, alg);  // warm-up pass, not measured
      }
      const auto t0 = clock::now();
      const std::uint64_t d = tau_seq(s1, s2, alg);
      const auto t1 = clock::now();
      times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count()));
      distances.push_back(d);
      checksum += d;
    }

    BenchRecord record;
    record.mode = config.mode;
    record.length = length;
    record.alphabet_size = alphabet_size;
    record.object_size = is_object_mode(config.mode) ? config.object_size : 0;
    record.algorithm = alg;
    record.mean_time_ns = rounded_mean(times);
    record.median_time_ns = median(times);
    record.pairs_measured = config.pairs_per_cell;
    record.distance_checksum = checksum;
    records.push_back(record);
    distances_by_alg.push_back(std::move(distances));
  }

  for (std::size_t a = 1; a < distances_by_alg.size(); ++a) {
    if (distances_by_alg[a] != distances_by_alg[0]) {
      throw std::logic_error(
          "benchmark suite failure: algorithms disagree on a generated pair "
          "(length " +
          std::to_string(length) + ", alphabet " +
          std::to_string(alphabet_size) + ")");
    }
  }
}

}  // namespace detail

inline void validate(const BenchConfig& config) {
  if (config.lengths.empty()) {
    throw std::invalid_argument("benchmark config needs at least one length");
  }
  if (config.alphabet_sizes.empty()) {
    throw std::invalid_argument(
        "benchmark config needs at least one alphabet size");
  }
  if (config.pairs_per_cell < 1) {
    throw std::invalid_argument("pairs per cell must be at least 1");
  }
  if (config.algorithms.empty()) {
    throw std::invalid_argument(
        "benchmark config needs at least one algorithm");
  }
  if (is_object_mode(config.mode) && config.object_size < 1) {
    throw std::invalid_argument("object size must be at least 1");
  }
  for (std::size_t size : config.alphabet_sizes) {
    if (size < 1) throw std::invalid_argument("alphabet size must be >= 1");
    if (is_object_mode(config.mode) && size > 256) {
      throw std::invalid_argument(
          "object alphabets support at most 256 distinct tokens");
    }
  }
}

// One record per (length, alphabet size, algorithm). Timing loops are
// single-threaded; generation happens outside the timed region.
inline std::vector<BenchRecord> run_suite(const BenchConfig& config) {
  validate(config);
  std::vector<BenchRecord> records;
  records.reserve(config.lengths.size() * config.alphabet_sizes.size() *
                  config.algorithms.size());

  for (const std::size_t length : config.lengths) {
    for (const std::size_t alphabet_size : config.alphabet_sizes) {
      const std::size_t object_size =
          is_object_mode(config.mode) ? config.object_size : 0;
      const std::uint64_t seed = cell_seed(config.seed, config.mode, length,
                                           alphabet_size, object_size);
      switch (config.mode) {
        case ElementMode::codepoint: {
          const auto alphabet = codepoint_alphabet(alphabet_size);
          detail::run_cell<char32_t>(config, alphabet, length, alphabet_size,
                                     seed, records);
          break;
        }
        case ElementMode::int64: {
          const auto alphabet = int64_alphabet(alphabet_size);
          detail::run_cell<std::int64_t>(config, alphabet, length,
                                         alphabet_size, seed, records);
          break;
        }
        case ElementMode::float64: {
          const auto alphabet = float64_alphabet(alphabet_size);
          detail::run_cell<double>(config, alphabet, length, alphabet_size,
                                   seed, records);
          break;
        }
        case ElementMode::object_hcc:
        case ElementMode::object_lcc: {
          const auto variant = config.mode == ElementMode::object_hcc
                                   ? TokenCase::hcc
                                   : TokenCase::lcc;
          const auto alphabet = gen_object_alphabet(
              variant, config.object_size, alphabet_size);
          detail::run_cell<std::string>(config, alphabet, length,
                                        alphabet_size, seed, records);
          break;
        }
      }
    }
  }
  return records;
}

inline constexpr std::string_view kCsvHeader =
    "element_mode,length,alphabet_size,object_size,algorithm,mean_time_ns,"
    "median_time_ns,pairs_measured,distance_checksum";

inline void write_csv(std::span<const BenchRecord> records,
                      std::ostream& sink) {
  sink << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    sink << to_string(r.mode) << ',' << r.length << ',' << r.alphabet_size
         << ',' << r.object_size << ',' << to_string(r.algorithm) << ','
         << r.mean_time_ns << ',' << r.median_time_ns << ','
         << r.pairs_measured << ',' << r.distance_checksum << '\n';
  }
  if (!sink) {
    throw std::runtime_error("failed to write benchmark CSV");
  }
}

namespace detail {

inline std::uint64_t parse_u64(std::string_view field) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("malformed CSV integer field: " +
                             std::string(field));
  }
  return value;
}

}  // namespace detail

inline std::vector<BenchRecord> read_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || line != kCsvHeader) {
    throw std::runtime_error("missing or unexpected CSV header");
  }
  std::vector<BenchRecord> records;
  while (std::getline(source, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const std::size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 9) {
      throw std::runtime_error("expected 9 CSV fields, got " +
                               std::to_string(fields.size()));
    }
    BenchRecord r;
    r.mode = element_mode_from_string(fields[0]);
    r.length = detail::parse_u64(fields[1]);
    r.alphabet_size = detail::parse_u64(fields[2]);
    r.object_size = detail::parse_u64(fields[3]);
    if (fields[4] == "sort") {
      r.algorithm = Algorithm::sort;
    } else if (fields[4] == "hash") {
      r.algorithm = Algorithm::hash;
    } else {
      throw std::runtime_error("unknown algorithm: " + std::string(fields[4]));
    }
    r.mean_time_ns = detail::parse_u64(fields[5]);
    r.median_time_ns = detail::parse_u64(fields[6]);
    r.pairs_measured = detail::parse_u64(fields[7]);
    r.distance_checksum = detail::parse_u64(fields[8]);
    records.push_back(r);
  }
  return records;
}

}  // namespace seqdist::bench
