#pragma once

// Throughput harness: every method evaluates p = 0.001, 0.002, ..., 0.999
// `reps` times. Repetitions are processed in blocks and the method order
// rotates from block to block so slow drifts in clock frequency are shared.

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ninv/methods.hpp"

namespace ninv::bench {

inline constexpr std::size_t kProtocolReps = 200000;
inline constexpr std::size_t kDefaultRuns = 5;
inline constexpr double kReliableCv = 0.15;

/// The 999 probabilities i / 1000, i = 1..999.
std::vector<double> protocol_grid();

struct BenchResult {
  MethodId method;
  std::string name;
  std::size_t total_evals = 0;
  std::chrono::nanoseconds elapsed{0};
  double ns_per_eval = 0.0;
  /// Sum of every output, so the optimiser cannot drop the work.
  double checksum = 0.0;
  /// Every grid pass produced the same sum.
  bool consistent = true;
};

/// One timed run of every method.
std::vector<BenchResult> run_benchmark(std::span<const MethodId> methods, std::size_t reps,
                                       std::size_t warmup_reps = 1);

struct BenchSummary {
  MethodId method;
  std::string name;
  std::vector<BenchResult> runs;
  double median_ns_per_eval = 0.0;
  /// Coefficient of variation of ns_per_eval across runs.
  double cv = 0.0;
  bool reliable = true;
};

/// `runs` independent calls of run_benchmark, summarised per method.
std::vector<BenchSummary> run_benchmark_series(std::span<const MethodId> methods,
                                               std::size_t reps, std::size_t warmup_reps = 1,
                                               std::size_t runs = kDefaultRuns);

/// method,total_evals,runs,median_ns_per_eval,cv,reliable,speedup_vs_as,checksum
void write_csv(std::span<const BenchSummary> summaries, std::ostream& out);
void write_table(std::span<const BenchSummary> summaries, std::ostream& out);

}  // namespace ninv::bench
