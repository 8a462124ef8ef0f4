#include "ninv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ninv/oracle.hpp"
#include "ninv/probability.hpp"

namespace ninv::analysis {

namespace {

// Runs whose peak is below this fraction of the global maximum are rounding
// noise around a zero crossing of the error.
constexpr double kNoiseFraction = 1e-6;

// Golden-section stopping width relative to min(p, 1 - p); never coarser
// than 1e-9 in absolute terms.
constexpr double kRefineRelTol = 1e-9;

void check_region(const MethodInfo& info, Interval region) {
  if (!(region.lo <= region.hi)) {
    throw std::invalid_argument("scan region must satisfy lo <= hi");
  }
  if (!info.domain.contains(region.lo)) {
    throw DomainError(info.name, region.lo, info.domain.lo, info.domain.hi, false, false);
  }
  if (!info.domain.contains(region.hi)) {
    throw DomainError(info.name, region.hi, info.domain.lo, info.domain.hi, false, false);
  }
}

std::vector<Sample> evaluate_samples(const MethodInfo& info, std::span<const double> points,
                                     unsigned threads) {
  std::vector<Sample> samples(points.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double p = points[i];
      const double approx = info.evaluate(p);
      const double exact = oracle::quantile(p);
      samples[i] = {p, approx, exact, approx - exact};
    }
  };

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const std::size_t n = points.size();
  const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 256));
  if (chunks <= 1) {
    work(0, n);
    return samples;
  }

  std::vector<std::exception_ptr> failures(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    pool.emplace_back([&, c, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        failures[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return samples;
}

struct Run {
  int sign;
  std::size_t argmax;
  double peak;
};

std::vector<Run> sign_runs(const std::vector<Sample>& samples, double global_max) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double e = samples[i].err;
    const int sign = e > 0.0 ? 1 : (e < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (runs.empty() || runs.back().sign != sign) {
      runs.push_back({sign, i, std::abs(e)});
    } else if (std::abs(e) > runs.back().peak) {
      runs.back().argmax = i;
      runs.back().peak = std::abs(e);
    }
  }

  std::vector<Run> kept;
  for (const Run& r : runs) {
    if (r.peak < kNoiseFraction * global_max) continue;
    if (!kept.empty() && kept.back().sign == r.sign) {
      if (r.peak > kept.back().peak) kept.back() = r;
    } else {
      kept.push_back(r);
    }
  }
  return kept;
}

// Golden-section maximisation of |err| on [a, b]; returns the best point
// among the search iterates and the supplied grid point.
Extremum refine(const MethodInfo& info, double a, double b, Extremum best) {
  const double tol = kRefineRelTol * std::min(1.0, std::min(best.p, 1.0 - best.p));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto eval = [&](double p) { return Extremum{p, error_at(info.id, p)}; };
  const auto consider = [&](const Extremum& e) {
    if (e.abs_err() > best.abs_err()) best = e;
  };

  if (a != best.p) consider(eval(a));
  if (b != best.p) consider(eval(b));

  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  Extremum f1 = eval(x1);
  Extremum f2 = eval(x2);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    if (f1.abs_err() >= f2.abs_err()) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      if (!(x1 > a && x1 < x2)) break;
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      if (!(x2 > x1 && x2 < b)) break;
      f2 = eval(x2);
    }
  }
  consider(f1);
  consider(f2);
  return best;
}

}  // namespace

double Extremum::abs_err() const noexcept { return std::abs(err); }

GridSpec GridSpec::linear(double step) {
  GridSpec g;
  g.kind = Kind::Linear;
  g.step = step;
  return g;
}

GridSpec GridSpec::log(int per_decade) {
  GridSpec g;
  g.kind = Kind::Log;
  g.per_decade = per_decade;
  return g;
}

std::string GridSpec::describe() const {
  if (kind == Kind::Linear) return "linear step=" + format_roundtrip(step);
  return "log per_decade=" + std::to_string(per_decade);
}

double ErrorReport::min_extremum() const noexcept {
  double m = max_abs_error;
  for (const auto& e : extrema) m = std::min(m, e.abs_err());
  return m;
}

double error_at(MethodId method, double p) {
  return method_info(method).evaluate(p) - oracle::quantile(p);
}

std::vector<double> make_grid(Interval region, const GridSpec& grid) {
  std::vector<double> pts;
  if (grid.kind == GridSpec::Kind::Linear) {
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    const double span = region.hi - region.lo;
    const auto n = static_cast<std::size_t>(std::floor(span / grid.step * (1.0 + 1e-12)));
    pts.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
      pts.push_back(std::min(region.hi, region.lo + static_cast<double>(i) * grid.step));
    }
  } else {
    if (grid.per_decade <= 0) throw std::invalid_argument("per_decade must be positive");
    if (!(region.lo > 0.0)) throw std::invalid_argument("log grid needs lo > 0");
    const double ppd = grid.per_decade;
    const auto k_lo = static_cast<long>(std::ceil(std::log10(region.lo) * ppd));
    const auto k_hi = static_cast<long>(std::floor(std::log10(region.hi) * ppd));
    pts.push_back(region.lo);
    for (long k = k_lo; k <= k_hi; ++k) {
      const double p = std::pow(10.0, static_cast<double>(k) / ppd);
      if (region.contains(p)) pts.push_back(p);
    }
  }
  pts.push_back(region.hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> acceptance_grid() {
  std::vector<double> pts = make_grid({1e-4, 1.0 - 1e-4}, GridSpec::linear(1e-5));
  const std::vector<double> tail = make_grid({1e-290, 1e-4}, GridSpec::log(400));
  for (double p : tail) {
    pts.push_back(p);
    const double mirror = 1.0 - p;
    if (mirror < 1.0) pts.push_back(mirror);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

GridSpec default_grid(Interval region) {
  if (region.lo >= 1e-4 && region.hi <= 1.0 - 1e-4) return GridSpec::linear(1e-5);
  return GridSpec::log(400);
}

ErrorReport scan_points(MethodId method, std::span<const double> points,
                        std::string grid_description, const ScanOptions& options) {
  const MethodInfo& info = method_info(method);
  if (points.empty()) throw std::invalid_argument("scan needs at least one point");
  if (!std::is_sorted(points.begin(), points.end())) {
    throw std::invalid_argument("scan points must be sorted");
  }
  check_region(info, {points.front(), points.back()});

  std::vector<Sample> samples = evaluate_samples(info, points, options.threads);

  ErrorReport report;
  report.method = std::string(info.name);
  report.region = {points.front(), points.back()};
  report.grid_spec = std::move(grid_description);
  report.points = points.size();

  std::size_t global = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (std::abs(samples[i].err) > std::abs(samples[global].err)) global = i;
  }
  const double global_max = std::abs(samples[global].err);

  std::vector<Run> runs = sign_runs(samples, global_max);
  if (runs.empty()) {
    runs.push_back({0, global, global_max});
  }

  for (const Run& run : runs) {
    const std::size_t i = run.argmax;
    const double a = points[i == 0 ? 0 : i - 1];
    const double b = points[i + 1 < points.size() ? i + 1 : i];
    const Extremum start{samples[i].p, samples[i].err};
    report.extrema.push_back(a == b ? start : refine(info, a, b, start));
  }
  std::sort(report.extrema.begin(), report.extrema.end(),
            [](const Extremum& x, const Extremum& y) { return x.p < y.p; });

  report.max_abs_error = 0.0;
  report.argmax_p = report.extrema.front().p;
  for (const auto& e : report.extrema) {
    if (e.abs_err() > report.max_abs_error) {
      report.max_abs_error = e.abs_err();
      report.argmax_p = e.p;
    }
  }
  if (options.keep_samples) report.samples = std::move(samples);
  return report;
}

ErrorReport scan(MethodId method, Interval region, const GridSpec& grid,
                 const ScanOptions& options) {
  check_region(method_info(method), region);
  const std::vector<double> pts = make_grid(region, grid);
  return scan_points(method, pts, grid.describe(), options);
}

ErrorReport scan_max_abs_error(MethodId method, Interval region, double step,
                               const ScanOptions& options) {
  return scan(method, region, GridSpec::linear(step), options);
}

std::vector<Extremum> find_alternation_points(MethodId method, Interval region,
                                              const ScanOptions& options) {
  return scan(method, region, default_grid(region), options).extrema;
}

bool verify_equioscillation(std::span<const Extremum> extrema, double spread_tol) {
  if (extrema.size() <= 1) return true;
  double lo = extrema.front().abs_err();
  double hi = lo;
  for (std::size_t i = 0; i < extrema.size(); ++i) {
    lo = std::min(lo, extrema[i].abs_err());
    hi = std::max(hi, extrema[i].abs_err());
    if (i > 0 && !(extrema[i].err * extrema[i - 1].err < 0.0)) return false;
  }
  return hi > 0.0 && (hi - lo) / hi <= spread_tol;
}

bool verify_equioscillation(const ErrorReport& report, double spread_tol) {
  return verify_equioscillation(report.extrema, spread_tol);
}

void write_samples_csv(const ErrorReport& report, std::ostream& out) {
  out << "p,approx,oracle,err\n";
  for (const auto& s : report.samples) {
    out << format_roundtrip(s.p) << ',' << format_roundtrip(s.approx) << ','
        << format_roundtrip(s.oracle) << ',' << format_roundtrip(s.err) << '\n';
  }
}

void write_summary(const ErrorReport& report, std::ostream& out) {
  out << "method=" << report.method << '\n'
      << "region=" << format_roundtrip(report.region.lo) << ','
      << format_roundtrip(report.region.hi) << '\n'
      << "grid=" << report.grid_spec << '\n'
      << "points=" << report.points << '\n'
      << "max_abs_error=" << format_roundtrip(report.max_abs_error) << '\n'
      << "argmax_p=" << format_roundtrip(report.argmax_p) << '\n'
      << "min_extremum=" << format_roundtrip(report.min_extremum()) << '\n'
      << "extrema=" << report.extrema.size() << '\n';
  for (std::size_t i = 0; i < report.extrema.size(); ++i) {
    out << "extremum." << i + 1 << '=' << format_roundtrip(report.extrema[i].p) << ','
        << format_roundtrip(report.extrema[i].err) << '\n';
  }
}

}  // namespace ninv::analysis
