#include "ninv/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ninv/baselines.hpp"
#include "ninv/probability.hpp"
#include "ninv/quantile.hpp"

namespace ninv::bench {

namespace {

// Hides the grid pointer from the optimiser so passes cannot be merged or
// hoisted out of the repetition loop.
inline void opaque(const double*& ptr) { asm volatile("" : "+r"(ptr) : : "memory"); }

// Four partial sums keep the checksum's add chain off the critical path, so
// the loop measures the evaluator rather than accumulator latency.
template <class F>
inline double grid_pass(F f, const double* data, std::size_t n) {
  opaque(data);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += f(data[i]);
    s1 += f(data[i + 1]);
    s2 += f(data[i + 2]);
    s3 += f(data[i + 3]);
  }
  for (; i < n; ++i) s0 += f(data[i]);
  return (s0 + s1) + (s2 + s3);
}

struct MethodState {
  std::chrono::nanoseconds elapsed{0};
  double checksum = 0.0;
  double first_pass = std::numeric_limits<double>::quiet_NaN();
  bool consistent = true;
};

template <class F>
void timed_block(F f, std::span<const double> grid, std::size_t reps, MethodState& st) {
  using clock = std::chrono::steady_clock;
  double block_sum = 0.0;
  bool consistent = true;
  double first = st.first_pass;
  const auto start = clock::now();
  for (std::size_t r = 0; r < reps; ++r) {
    const double s = grid_pass(f, grid.data(), grid.size());
    if (std::isnan(first)) first = s;
    consistent = consistent && s == first;
    block_sum += s;
  }
  const auto stop = clock::now();
  st.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
  st.checksum += block_sum;
  st.first_pass = first;
  st.consistent = st.consistent && consistent;
}

void run_block(MethodId id, std::span<const double> grid, std::size_t reps, MethodState& st) {
  switch (id) {
    case MethodId::Rat22A:
      return timed_block([](double p) { return inv_cdf_rat22a(p); }, grid, reps, st);
    case MethodId::Rat22B:
      return timed_block([](double p) { return inv_cdf_rat22b(p); }, grid, reps, st);
    case MethodId::AsImproved:
      return timed_block([](double p) { return as_improved(p); }, grid, reps, st);
    case MethodId::AsOriginal:
      return timed_block([](double p) { return as_original(p); }, grid, reps, st);
    case MethodId::BeasleySpringer:
      return timed_block([](double p) { return beasley_springer(p); }, grid, reps, st);
    default:
      throw std::invalid_argument("method '" + std::string(method_info(id).name) +
                                  "' does not cover the benchmark grid");
  }
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

const BenchSummary* find_as(std::span<const BenchSummary> summaries) {
  for (const auto& s : summaries) {
    if (s.method == MethodId::AsOriginal) return &s;
  }
  return nullptr;
}

std::string speedup_field(std::span<const BenchSummary> summaries, const BenchSummary& s) {
  const BenchSummary* as = find_as(summaries);
  if (as == nullptr || !(s.median_ns_per_eval > 0.0)) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << as->median_ns_per_eval / s.median_ns_per_eval;
  return os.str();
}

}  // namespace

std::vector<double> protocol_grid() {
  std::vector<double> grid;
  grid.reserve(999);
  for (int i = 1; i <= 999; ++i) grid.push_back(i / 1000.0);
  return grid;
}

std::vector<BenchResult> run_benchmark(std::span<const MethodId> methods, std::size_t reps,
                                       std::size_t warmup_reps) {
  if (reps == 0) throw std::invalid_argument("reps must be at least 1");
  const std::vector<double> grid = protocol_grid();
  std::vector<MethodState> states(methods.size());

  for (std::size_t m = 0; m < methods.size(); ++m) {
    MethodState scratch;
    if (warmup_reps > 0) run_block(methods[m], grid, warmup_reps, scratch);
  }

  constexpr std::size_t kBlocks = 100;
  const std::size_t block = std::max<std::size_t>(1, reps / kBlocks);
  std::size_t done = 0;
  for (std::size_t b = 0; done < reps; ++b) {
    const std::size_t n = std::min(block, reps - done);
    for (std::size_t k = 0; k < methods.size(); ++k) {
      const std::size_t m = (b + k) % methods.size();
      run_block(methods[m], grid, n, states[m]);
    }
    done += n;
  }

  std::vector<BenchResult> results;
  results.reserve(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    BenchResult r;
    r.method = methods[m];
    r.name = std::string(method_info(methods[m]).name);
    r.total_evals = reps * grid.size();
    r.elapsed = states[m].elapsed;
    r.ns_per_eval = static_cast<double>(r.elapsed.count()) / static_cast<double>(r.total_evals);
    r.checksum = states[m].checksum;
    r.consistent = states[m].consistent;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<BenchSummary> run_benchmark_series(std::span<const MethodId> methods,
                                               std::size_t reps, std::size_t warmup_reps,
                                               std::size_t runs) {
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  std::vector<BenchSummary> out(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    out[m].method = methods[m];
    out[m].name = std::string(method_info(methods[m]).name);
  }
  for (std::size_t run = 0; run < runs; ++run) {
    auto results = run_benchmark(methods, reps, run == 0 ? warmup_reps : 0);
    for (std::size_t m = 0; m < methods.size(); ++m) {
      out[m].runs.push_back(std::move(results[m]));
    }
  }
  for (auto& s : out) {
    std::vector<double> ns;
    bool consistent = true;
    for (const auto& r : s.runs) {
      ns.push_back(r.ns_per_eval);
      consistent = consistent && r.consistent && r.checksum == s.runs.front().checksum;
    }
    s.median_ns_per_eval = median(ns);
    const double mean = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(ns.size());
    double var = 0.0;
    for (double x : ns) var += (x - mean) * (x - mean);
    var = ns.size() > 1 ? var / static_cast<double>(ns.size() - 1) : 0.0;
    s.cv = mean > 0.0 ? std::sqrt(var) / mean : 0.0;
    s.reliable = consistent && s.cv < kReliableCv;
  }
  return out;
}

void write_csv(std::span<const BenchSummary> summaries, std::ostream& out) {
  out << "method,total_evals,runs,median_ns_per_eval,cv,reliable,speedup_vs_as,checksum\n";
  for (const auto& s : summaries) {
    out << s.name << ',' << s.runs.front().total_evals << ',' << s.runs.size() << ','
        << format_roundtrip(s.median_ns_per_eval) << ',' << format_roundtrip(s.cv) << ','
        << (s.reliable ? "true" : "false") << ',' << speedup_field(summaries, s) << ','
        << format_roundtrip(s.runs.front().checksum) << '\n';
  }
}

void write_table(std::span<const BenchSummary> summaries, std::ostream& out) {
  out << std::left << std::setw(18) << "method" << std::right << std::setw(14) << "total_evals"
      << std::setw(12) << "ns/eval" << std::setw(9) << "cv" << std::setw(12) << "vs as"
      << std::setw(10) << "reliable" << '\n';
  for (const auto& s : summaries) {
    const std::string speed = speedup_field(summaries, s);
    std::ostringstream ns;
    ns << std::fixed << std::setprecision(3) << s.median_ns_per_eval;
    std::ostringstream cv;
    cv << std::fixed << std::setprecision(3) << s.cv;
    out << std::left << std::setw(18) << s.name << std::right << std::setw(14)
        << s.runs.front().total_evals << std::setw(12) << ns.str() << std::setw(9) << cv.str()
        << std::setw(12) << (speed.empty() ? "-" : speed + "x") << std::setw(10)
        << (s.reliable ? "yes" : "no") << '\n';
  }
}

}  // namespace ninv::bench
