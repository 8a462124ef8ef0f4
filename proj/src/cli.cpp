#include "ninv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "ninv/analysis.hpp"
#include "ninv/bench.hpp"
#include "ninv/methods.hpp"
#include "ninv/oracle.hpp"
#include "ninv/probability.hpp"

namespace ninv::cli {

namespace {

constexpr std::string_view kFooter = R"(Exit status: 0 ok, 1 usage, 2 domain error, 3 --assert-bound violated,
4 malformed input or I/O failure.

CSV layouts (header row always present, LF line endings):
  scan   --format csv   p,approx,oracle,err
  bench  --format csv   method,total_evals,runs,median_ns_per_eval,cv,reliable,speedup_vs_as,checksum
  report --format csv   source,kind,method,region_lo,region_hi,points,max_abs_error,argmax_p,median_ns_per_eval)";

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return v;
}

std::string method_list() {
  std::string names;
  for (const auto& m : all_methods()) {
    if (!names.empty()) names += ", ";
    names += m.name;
  }
  return names;
}

// Destination for a command's main output: the named file or `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw FormatError("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// ---------------------------------------------------------------------------
// CSV input for `report`

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw FormatError("unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

struct ReportRow {
  std::string source;
  std::string kind;
  std::string method;
  std::string region_lo;
  std::string region_hi;
  std::string points;
  std::string max_abs_error;
  std::string argmax_p;
  std::string median_ns;
};

double field_number(const std::vector<std::string>& fields, std::size_t i,
                    const std::string& where) {
  const auto v = parse_double(fields[i]);
  if (!v) throw FormatError(where + ": non-numeric field '" + fields[i] + "'");
  return *v;
}

std::vector<ReportRow> read_report_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::string header;
  if (!std::getline(in, header)) throw FormatError(path + ": empty file");
  if (!header.empty() && header.back() == '\r') header.pop_back();

  const std::string source = std::filesystem::path(path).stem().string();
  std::vector<ReportRow> rows;
  std::string line;
  std::size_t lineno = 1;

  if (header == "p,approx,oracle,err") {
    std::size_t n = 0;
    double lo = 0, hi = 0, max_err = -1, argmax = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto f = split_csv_line(line);
      const std::string where = path + ":" + std::to_string(lineno);
      if (f.size() != 4) throw FormatError(where + ": expected 4 fields");
      const double p = field_number(f, 0, where);
      field_number(f, 1, where);
      field_number(f, 2, where);
      const double err = std::abs(field_number(f, 3, where));
      if (n == 0 || p < lo) lo = p;
      if (n == 0 || p > hi) hi = p;
      if (err > max_err) {
        max_err = err;
        argmax = p;
      }
      ++n;
    }
    if (n == 0) throw FormatError(path + ": no data rows");
    rows.push_back({source, "scan", source, format_roundtrip(lo), format_roundtrip(hi),
                    std::to_string(n), format_roundtrip(max_err), format_roundtrip(argmax), ""});
    return rows;
  }

  const auto cols = split_csv_line(header);
  if (cols.size() == 8 && cols[0] == "method" && cols[1] == "total_evals" &&
      cols[3] == "median_ns_per_eval") {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto f = split_csv_line(line);
      const std::string where = path + ":" + std::to_string(lineno);
      if (f.size() != 8) throw FormatError(where + ": expected 8 fields");
      field_number(f, 1, where);
      const double ns = field_number(f, 3, where);
      rows.push_back({source, "bench", f[0], "", "", f[1], "", "", format_roundtrip(ns)});
    }
    if (rows.empty()) throw FormatError(path + ": no data rows");
    return rows;
  }
  throw FormatError(path + ": unrecognised header '" + header + "'");
}

void write_report(const std::vector<ReportRow>& rows, const std::string& format,
                  std::ostream& out) {
  const std::vector<std::string> head{"source", "kind", "method", "region_lo", "region_hi",
                                      "points", "max_abs_error", "argmax_p",
                                      "median_ns_per_eval"};
  const auto cells = [](const ReportRow& r) {
    return std::vector<std::string>{r.source,    r.kind,   r.method,
                                    r.region_lo, r.region_hi, r.points,
                                    r.max_abs_error, r.argmax_p, r.median_ns};
  };
  if (format == "csv") {
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
    out << '\n';
    for (const auto& r : rows) {
      const auto c = cells(r);
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
      out << '\n';
    }
    return;
  }
  const auto line = [&](const std::vector<std::string>& c) {
    out << '|';
    for (const auto& s : c) out << ' ' << (s.empty() ? "-" : s) << " |";
    out << '\n';
  };
  line(head);
  out << '|';
  for (std::size_t i = 0; i < head.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : rows) line(cells(r));
}

// ---------------------------------------------------------------------------

int do_eval(const std::string& method_name, const std::vector<std::string>& ps,
            std::ostream& out, std::ostream& err) {
  const auto id = parse_method(method_name);
  if (!id) {
    err << "unknown method '" << method_name << "' (known: " << method_list() << ")\n";
    return kUsage;
  }
  const MethodInfo& info = method_info(*id);
  for (const auto& s : ps) {
    const auto p = parse_double(s);
    if (!p) {
      err << "'" << s << "' is not a number\n";
      return kDomain;
    }
    try {
      out << format_roundtrip(*p) << ' ' << format_roundtrip(info.evaluate(*p)) << '\n';
    } catch (const DomainError& e) {
      err << e.what() << '\n';
      return kDomain;
    }
  }
  return kOk;
}

struct ScanArgs {
  std::string method;
  std::string region;
  double step = 0.0;
  int per_decade = 0;
  double assert_bound = 0.0;
  bool has_bound = false;
  std::string format = "text";
  std::string output;
  unsigned threads = 0;
};

int do_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const auto id = parse_method(a.method);
  if (!id) {
    err << "unknown method '" << a.method << "' (known: " << method_list() << ")\n";
    return kUsage;
  }
  const MethodInfo& info = method_info(*id);
  Interval region = info.domain;
  if (!a.region.empty()) {
    const auto comma = a.region.find(',');
    const auto lo = parse_double(std::string_view(a.region).substr(0, comma));
    const auto hi = comma == std::string::npos
                        ? std::nullopt
                        : parse_double(std::string_view(a.region).substr(comma + 1));
    if (!lo || !hi) {
      err << "--region expects 'lo,hi', got '" << a.region << "'\n";
      return kUsage;
    }
    region = {*lo, *hi};
  }

  analysis::ScanOptions opts;
  opts.threads = a.threads;
  opts.keep_samples = a.format == "csv";

  analysis::ErrorReport report;
  try {
    if (a.step > 0.0) {
      report = analysis::scan(*id, region, analysis::GridSpec::linear(a.step), opts);
    } else if (a.per_decade > 0) {
      report = analysis::scan(*id, region, analysis::GridSpec::log(a.per_decade), opts);
    } else if (region.lo >= 1e-4 && region.hi <= 1.0 - 1e-4) {
      report = analysis::scan(*id, region, analysis::GridSpec::linear(1e-5), opts);
    } else {
      std::vector<double> pts{region.lo, region.hi};
      for (double p : analysis::acceptance_grid()) {
        if (region.contains(p)) pts.push_back(p);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      report = analysis::scan_points(*id, pts, "acceptance", opts);
    }
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const oracle::ConvergenceError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  Sink sink(a.output, out);
  if (a.format == "csv") {
    analysis::write_samples_csv(report, sink.stream());
    analysis::write_summary(report, sink.to_file() ? out : err);
  } else {
    analysis::write_summary(report, sink.stream());
  }
  if (!sink.stream()) throw FormatError("write failed");

  if (a.has_bound && !(report.max_abs_error < a.assert_bound)) {
    err << "assertion failed: max_abs_error=" << format_roundtrip(report.max_abs_error)
        << " is not below " << format_roundtrip(a.assert_bound) << '\n';
    return kAssertion;
  }
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> methods;
  std::size_t reps = bench::kProtocolReps;
  std::size_t warmup = 1;
  std::size_t runs = bench::kDefaultRuns;
  std::string format = "text";
  std::string output;
};

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<MethodId> ids;
  for (const auto& name : a.methods) {
    if (name == "all") {
      for (MethodId id : benchmark_methods()) ids.push_back(id);
      continue;
    }
    const auto id = parse_method(name);
    if (!id) {
      err << "unknown method '" << name << "' (known: all, " << method_list() << ")\n";
      return kUsage;
    }
    ids.push_back(*id);
  }
  std::vector<bench::BenchSummary> summaries;
  try {
    summaries = bench::run_benchmark_series(ids, a.reps, a.warmup, a.runs);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  Sink sink(a.output, out);
  if (a.format == "csv") {
    bench::write_csv(summaries, sink.stream());
  } else {
    bench::write_table(summaries, sink.stream());
  }
  if (!sink.stream()) throw FormatError("write failed");
  return kOk;
}

int do_report(const std::vector<std::string>& inputs, const std::string& format,
              const std::string& output, std::ostream& out) {
  std::vector<ReportRow> rows;
  for (const auto& path : inputs) {
    auto r = read_report_input(path);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  Sink sink(output, out);
  write_report(rows, format, sink.stream());
  if (!sink.stream()) throw FormatError("write failed");
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast normal quantile approximations: evaluate, scan accuracy, benchmark",
               "ninv"};
  app.footer(std::string(kFooter));
  app.require_subcommand(1);

  std::string eval_method;
  std::vector<std::string> eval_ps;
  auto* eval = app.add_subcommand("eval", "Print 'p value' for each probability");
  eval->add_option("method", eval_method, "Method name")->required();
  eval->add_option("p", eval_ps, "Probabilities")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Measure |method - oracle| over a grid");
  scan->add_option("method", scan_args.method, "Method name")->required();
  scan->add_option("--region", scan_args.region, "Closed interval 'lo,hi' (default: domain)");
  scan->add_option("--step", scan_args.step, "Linear grid step");
  scan->add_option("--per-decade", scan_args.per_decade, "Log grid points per decade");
  auto* bound = scan->add_option("--assert-bound", scan_args.assert_bound,
                                 "Exit 3 unless max_abs_error is below this");
  scan->add_option("--format", scan_args.format, "text (summary) or csv (samples)")
      ->check(CLI::IsMember({"csv", "text"}));
  scan->add_option("--output", scan_args.output, "Write to this file instead of stdout");
  scan->add_option("--threads", scan_args.threads, "Worker threads (0: all cores)");

  BenchArgs bench_args;
  auto* benchc = app.add_subcommand("bench", "Time methods on p = 0.001..0.999");
  benchc->add_option("methods", bench_args.methods, "Method names or 'all'")->required();
  benchc->add_option("--reps", bench_args.reps, "Passes over the grid per run")
      ->check(CLI::PositiveNumber);
  benchc->add_option("--warmup", bench_args.warmup, "Untimed warm-up passes");
  benchc->add_option("--runs", bench_args.runs, "Independent runs (median reported)")
      ->check(CLI::PositiveNumber);
  benchc->add_option("--format", bench_args.format, "text or csv")
      ->check(CLI::IsMember({"csv", "text"}));
  benchc->add_option("--output", bench_args.output, "Write to this file instead of stdout");

  std::vector<std::string> report_inputs;
  std::string report_format = "text";
  std::string report_output;
  auto* report = app.add_subcommand("report", "Merge scan/bench CSV files into one table");
  report->add_option("inputs", report_inputs, "CSV files")->required();
  report->add_option("--format", report_format, "text (markdown) or csv")
      ->check(CLI::IsMember({"csv", "text", "markdown"}));
  report->add_option("--output", report_output, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) {
      err << app.help();
      return kUsage;
    }
    return kOk;
  }
  scan_args.has_bound = bound->count() > 0;

  try {
    if (*eval) return do_eval(eval_method, eval_ps, out, err);
    if (*scan) return do_scan(scan_args, out, err);
    if (*benchc) return do_bench(bench_args, out, err);
    if (*report) return do_report(report_inputs, report_format, report_output, out);
  } catch (const FormatError& e) {
    err << e.what() << '\n';
    return kFormat;
  }
  return kUsage;
}

}  // namespace ninv::cli
