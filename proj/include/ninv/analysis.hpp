#pragma once

// Error scanning of a method against the oracle: dense grid evaluation,
// location of the error extrema, and the equioscillation check.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ninv/methods.hpp"

namespace ninv::analysis {

/// A local maximum of |approx - oracle|. `err` keeps its sign.
struct Extremum {
  double p;
  double err;

  double abs_err() const noexcept;
};

struct Sample {
  double p;
  double approx;
  double oracle;
  double err;
};

struct GridSpec {
  enum class Kind { Linear, Log };

  Kind kind = Kind::Linear;
  double step = 1e-5;   // Linear
  int per_decade = 400; // Log

  static GridSpec linear(double step);
  static GridSpec log(int per_decade);
  std::string describe() const;
};

struct ScanOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool keep_samples = false;
};

/// Result of a scan. `extrema` holds one entry per constant-sign stretch of
/// the error (the alternation points), refined by golden-section search, in
/// increasing p.
struct ErrorReport {
  std::string method;
  Interval region{};
  std::string grid_spec;
  std::size_t points = 0;
  double max_abs_error = 0.0;
  double argmax_p = 0.0;
  std::vector<Extremum> extrema;
  std::vector<Sample> samples;

  double min_extremum() const noexcept;
};

/// Signed error of `method` at p against the oracle.
double error_at(MethodId method, double p);

std::vector<double> make_grid(Interval region, const GridSpec& grid);

/// Linear step 1e-5 on [1e-4, 1 - 1e-4], plus 400 log-spaced points per
/// decade from 1e-290 up to 1e-4 and their mirror images 1 - p (mirrors that
/// round to 1 are dropped). Sorted and deduplicated.
std::vector<double> acceptance_grid();

/// Linear grid for regions inside [1e-4, 1 - 1e-4], otherwise log-spaced.
GridSpec default_grid(Interval region);

/// Scans an arbitrary sorted point set inside the method's domain.
ErrorReport scan_points(MethodId method, std::span<const double> points,
                        std::string grid_description, const ScanOptions& options = {});

ErrorReport scan(MethodId method, Interval region, const GridSpec& grid,
                 const ScanOptions& options = {});

/// Linear-grid scan with the given step.
ErrorReport scan_max_abs_error(MethodId method, Interval region, double step,
                               const ScanOptions& options = {});

std::vector<Extremum> find_alternation_points(MethodId method, Interval region,
                                              const ScanOptions& options = {});

/// True iff consecutive extrema alternate in sign and
/// (max |err| - min |err|) / max |err| <= spread_tol.
bool verify_equioscillation(std::span<const Extremum> extrema, double spread_tol);
bool verify_equioscillation(const ErrorReport& report, double spread_tol);

/// Columns: p,approx,oracle,err. Requires a scan run with keep_samples.
void write_samples_csv(const ErrorReport& report, std::ostream& out);
/// Line-oriented key=value summary.
void write_summary(const ErrorReport& report, std::ostream& out);

}  // namespace ninv::analysis
