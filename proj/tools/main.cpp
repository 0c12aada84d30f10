#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqdist/seqdist.hpp"
#include "text_input.hpp"

namespace {

using seqdist::Algorithm;
using seqdist::cli::decode_utf8;
using seqdist::cli::parse_floats;
using seqdist::cli::parse_ints;
using seqdist::cli::parse_tokens;
using seqdist::cli::read_file;
using seqdist::cli::strip_trailing_newline;

enum class AlgChoice { sort, hash, both };

AlgChoice alg_from_flag(const std::string& name) {
  if (name == "sort") return AlgChoice::sort;
  if (name == "hash") return AlgChoice::hash;
  return AlgChoice::both;
}

// Integral values print without a fractional part looking like integers is
// confusing for a real-valued metric, so keep one decimal.
std::string format_real(double v) {
  char buf[64];
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.1f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.10g", v);
  }
  return buf;
}

void write_line(const std::string& line, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << line << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << line << '\n';
  if (!out) {
    throw std::runtime_error("failed writing output file: " + out_path);
  }
}

template <typename T>
std::uint64_t dist_of(const std::vector<T>& s1, const std::vector<T>& s2,
                      AlgChoice alg) {
  switch (alg) {
    case AlgChoice::sort:
      return seqdist::tau_seq_sort(s1, s2);
    case AlgChoice::hash:
      return seqdist::tau_seq_hash(s1, s2);
    case AlgChoice::both:
      break;
  }
  const std::uint64_t by_sort = seqdist::tau_seq_sort(s1, s2);
  const std::uint64_t by_hash = seqdist::tau_seq_hash(s1, s2);
  if (by_sort != by_hash) {
    throw std::logic_error("algorithms disagree: sort says " +
                           std::to_string(by_sort) + ", hash says " +
                           std::to_string(by_hash));
  }
  return by_sort;
}

struct DistOptions {
  std::string input1;
  std::string input2;
  std::string mode = "chars";
  std::string alg = "both";
  std::string out_path;
  bool inline_literals = false;
};

void run_dist(const DistOptions& opt) {
  std::string text1 = opt.inline_literals ? opt.input1 : read_file(opt.input1);
  std::string text2 = opt.inline_literals ? opt.input2 : read_file(opt.input2);
  const AlgChoice alg = alg_from_flag(opt.alg);

  std::uint64_t distance = 0;
  if (opt.mode == "chars") {
    std::string_view v1 = text1;
    std::string_view v2 = text2;
    if (!opt.inline_literals) {
      v1 = strip_trailing_newline(v1);
      v2 = strip_trailing_newline(v2);
    }
    distance = dist_of(decode_utf8(v1), decode_utf8(v2), alg);
  } else if (opt.mode == "ints") {
    distance = dist_of(parse_ints(text1), parse_ints(text2), alg);
  } else if (opt.mode == "floats") {
    distance = dist_of(parse_floats(text1), parse_floats(text2), alg);
  } else {
    distance = dist_of(parse_tokens(text1), parse_tokens(text2), alg);
  }
  write_line(std::to_string(distance), opt.out_path);
}

struct RankOptions {
  std::string input1;
  std::string input2;
  std::string metric;
  double p = 0.0;
  bool p_given = false;
  std::string out_path;
  bool inline_literals = false;
};

void run_rank(const RankOptions& opt) {
  const std::string text1 =
      opt.inline_literals ? opt.input1 : read_file(opt.input1);
  const std::string text2 =
      opt.inline_literals ? opt.input2 : read_file(opt.input2);
  const std::vector<std::int64_t> r1 = parse_ints(text1);
  const std::vector<std::int64_t> r2 = parse_ints(text2);

  std::string value;
  if (opt.metric == "tau") {
    value = format_real(seqdist::kendall_tau_correlation(r1, r2));
  } else if (opt.metric == "kendall") {
    value = std::to_string(seqdist::kendall_tau_distance(r1, r2));
  } else if (opt.metric == "kendall-norm") {
    value = format_real(seqdist::kendall_tau_distance_normalized(r1, r2));
  } else {
    value = format_real(seqdist::kendall_distance_penalty(r1, r2, opt.p));
  }
  write_line(value, opt.out_path);
}

struct BenchOptions {
  seqdist::bench::BenchConfig config;
  std::string mode = "ints";
  std::string alg = "both";
  std::string out_path;
};

seqdist::bench::ElementMode bench_mode_from_flag(const std::string& name) {
  using seqdist::bench::ElementMode;
  if (name == "ints" || name == "int64") return ElementMode::int64;
  if (name == "chars" || name == "codepoint") return ElementMode::codepoint;
  if (name == "floats" || name == "float64") return ElementMode::float64;
  if (name == "hcc" || name == "object_hcc") return ElementMode::object_hcc;
  return ElementMode::object_lcc;
}

void run_bench(BenchOptions& opt) {
  opt.config.mode = bench_mode_from_flag(opt.mode);
  switch (alg_from_flag(opt.alg)) {
    case AlgChoice::sort:
      opt.config.algorithms = {Algorithm::sort};
      break;
    case AlgChoice::hash:
      opt.config.algorithms = {Algorithm::hash};
      break;
    case AlgChoice::both:
      opt.config.algorithms = {Algorithm::sort, Algorithm::hash};
      break;
  }

  const auto records = seqdist::bench::run_suite(opt.config);
  if (opt.out_path.empty()) {
    seqdist::bench::write_csv(records, std::cout);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + opt.out_path);
    }
    seqdist::bench::write_csv(records, out);
  }

  const std::size_t cells =
      opt.config.lengths.size() * opt.config.alphabet_sizes.size();
  std::cerr << "benchmarked " << cells << " cells x "
            << opt.config.algorithms.size() << " algorithms, "
            << opt.config.pairs_per_cell << " pairs each; " << records.size()
            << " records written to "
            << (opt.out_path.empty() ? std::string("stdout") : opt.out_path)
            << '\n';
}

struct VerifyOptions {
  std::size_t max_n = 6;
  std::size_t alphabet = 3;
  std::uint64_t budget = 0;  // 0 means exhaustive
};

// Walks every ordered pair of same-multiset sequences up to max_n and
// cross-checks both fast algorithms against the swap-graph search.
int run_verify(const VerifyOptions& opt) {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string counterexample;
  const auto out_of_budget = [&] {
    return opt.budget != 0 && checked >= opt.budget;
  };

  for (std::size_t n = 1; n <= opt.max_n && !out_of_budget(); ++n) {
    // Multisets of size n enumerated as non-decreasing sequences.
    std::vector<int> multiset(n, 0);
    const int top = static_cast<int>(opt.alphabet) - 1;
    for (bool more = true; more && !out_of_budget();) {
      std::vector<int> s1(multiset);
      do {
        std::vector<int> s2(multiset);
        do {
          const std::uint64_t by_sort = seqdist::tau_seq_sort(s1, s2);
          const std::uint64_t by_hash = seqdist::tau_seq_hash(s1, s2);
          const std::uint64_t by_bfs = seqdist::oracle::bfs_min_swaps(s1, s2);
          ++checked;
          if (by_sort != by_hash || by_sort != by_bfs) {
            ++failed;
            if (counterexample.empty()) {
              std::string text = "mismatch: s1=";
              for (int x : s1) text += std::to_string(x) + " ";
              text += "s2=";
              for (int x : s2) text += std::to_string(x) + " ";
              text += "sort=" + std::to_string(by_sort) +
                      " hash=" + std::to_string(by_hash) +
                      " bfs=" + std::to_string(by_bfs);
              counterexample = text;
            }
          }
        } while (std::next_permutation(s2.begin(), s2.end()) &&
                 !out_of_budget());
      } while (std::next_permutation(s1.begin(), s1.end()) &&
               !out_of_budget());

      // Advance to the next non-decreasing sequence.
      std::size_t i = n;
      while (i > 0 && multiset[i - 1] == top) --i;
      if (i == 0) {
        more = false;
      } else {
        const int v = multiset[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) multiset[j] = v;
      }
    }
  }

  std::cout << "checked " << checked << " same-multiset pairs (length <= "
            << opt.max_n << ", alphabet " << opt.alphabet << ")\n"
            << "pass " << (checked - failed) << " fail " << failed << '\n';
  if (failed != 0) {
    std::cerr << counterexample << '\n';
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kendall tau sequence distance toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand(
      "dist", "Minimum adjacent-swap distance between two sequences");
  dist_cmd->add_option("input1", dist.input1, "First input (file path)")
      ->required();
  dist_cmd->add_option("input2", dist.input2, "Second input (file path)")
      ->required();
  dist_cmd->add_flag("--inline", dist.inline_literals,
                     "Treat the inputs as literal text, not file paths");
  dist_cmd
      ->add_option("--mode", dist.mode,
                   "Element type: chars (one element per codepoint) or "
                   "whitespace-separated ints/floats/tokens")
      ->check(CLI::IsMember({"chars", "ints", "floats", "tokens"}))
      ->capture_default_str();
  dist_cmd->add_option("--alg", dist.alg, "Algorithm to run")
      ->check(CLI::IsMember({"sort", "hash", "both"}))
      ->capture_default_str();
  dist_cmd->add_option("--out", dist.out_path,
                       "Write the distance here instead of stdout");
  dist_cmd->callback([&dist] { run_dist(dist); });

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand(
      "rank", "Kendall tau metrics between two integer rankings");
  rank_cmd->add_option("input1", rank.input1, "First ranking (file path)")
      ->required();
  rank_cmd->add_option("input2", rank.input2, "Second ranking (file path)")
      ->required();
  rank_cmd->add_flag("--inline", rank.inline_literals,
                     "Treat the inputs as literal text, not file paths");
  rank_cmd
      ->add_option("--metric", rank.metric,
                   "tau (correlation), kendall (discordant pairs), "
                   "kendall-norm, or kp (penalty-parameter distance)")
      ->check(CLI::IsMember({"tau", "kendall", "kendall-norm", "kp"}))
      ->required();
  auto* p_opt = rank_cmd->add_option(
      "--p", rank.p, "Penalty parameter in [0, 1] for the kp metric");
  rank_cmd->add_option("--out", rank.out_path,
                       "Write the value here instead of stdout");
  rank_cmd->callback([&rank, p_opt] {
    if (rank.metric == "kp" && p_opt->count() == 0) {
      throw CLI::RequiredError("--p (the kp metric needs a penalty value)");
    }
    run_rank(rank);
  });

  BenchOptions bench;
  bench.config.lengths = {256, 512, 1024, 2048, 4096};
  bench.config.alphabet_sizes = {1, 4, 16, 64, 256};
  bench.config.pairs_per_cell = 10;
  bench.config.object_size = 32;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time both algorithms over a grid of random sequence pairs");
  bench_cmd->add_option("--lengths", bench.config.lengths, "Sequence lengths")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--alphabets", bench.config.alphabet_sizes,
                   "Alphabet sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--pairs", bench.config.pairs_per_cell,
                   "Random pairs per grid cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd
      ->add_option("--mode", bench.mode,
                   "Element type: ints, chars, floats, hcc (high comparison "
                   "cost tokens) or lcc (low comparison cost tokens)")
      ->check(CLI::IsMember({"ints", "chars", "floats", "hcc", "lcc", "int64",
                             "codepoint", "float64", "object_hcc",
                             "object_lcc"}))
      ->capture_default_str();
  bench_cmd
      ->add_option("--m", bench.config.object_size,
                   "Token length for the object modes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.config.seed, "Generator seed")
      ->capture_default_str();
  bench_cmd->add_option("--alg", bench.alg, "Algorithms to time")
      ->check(CLI::IsMember({"sort", "hash", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out_path,
                        "CSV output path (default stdout)");
  bench_cmd->callback([&bench] { run_bench(bench); });

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check both algorithms against the swap-graph search");
  verify_cmd
      ->add_option("--max-n", verify.max_n, "Longest sequence length to check")
      ->check(CLI::Range(std::size_t{1}, seqdist::oracle::kBfsMaxLength))
      ->capture_default_str();
  verify_cmd->add_option("--alphabet", verify.alphabet, "Alphabet size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd
      ->add_option("--budget", verify.budget,
                   "Stop after this many pairs (0 = exhaustive)")
      ->capture_default_str();
  verify_cmd->callback([&verify, &exit_code] { exit_code = run_verify(verify); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const seqdist::DistanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const seqdist::cli::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
