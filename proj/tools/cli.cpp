// Copyright 2026 The cefseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cef/analysis.hpp"
#include "cef/domain.hpp"
#include "cef/errors.hpp"
#include "cef/format.hpp"
#include "cef/reference_table.hpp"
#include "cef/series.hpp"
#include "report_io.hpp"

namespace cef::cli {

namespace {

constexpr double kCheckTolerance = 1e-12;

void add_param_flags(CLI::App& cmd, ParamOverrides& flags) {
  cmd.add_option("--tau-m", flags.tau_m, "Half-period tau_m of the Fourier expansion");
  cmd.add_option("--n-terms", flags.n_terms, "Number of series terms N");
  cmd.add_option("--y-switch", flags.y_switch, "Im z below which the refining part is used");
}

CoefficientTable table_from(const ParamOverrides& flags) {
  return build_coefficients(resolve_params(flags, std::getenv("CEF_DEFAULT_PARAMS")));
}

// eval ---------------------------------------------------------------------

struct EvalArgs {
  double x = 0.0;
  double y = 0.0;
  std::string method = "adaptive";
};

int run_eval(const EvalArgs& args, const ParamOverrides& flags, std::ostream& out) {
  const auto coeffs = table_from(flags);
  const Complex z{args.x, args.y};
  EvaluationOutcome result{};
  if (args.method == "refined") {
    result = {w_refined(z, coeffs), EvaluationPath::refined};
  } else if (args.method == "cr") {
    result = {w_cr(z, coeffs), EvaluationPath::common_only};
  } else {
    result = w_full_plane(z, coeffs);
  }
  out << format_scientific(result.value.real()) << ' ' << format_scientific(result.value.imag())
      << ' ' << to_string(result.path) << '\n';
  return kExitOk;
}

// table --------------------------------------------------------------------

struct TableArgs {
  std::string method = "both";
  bool check = false;
};

bool close_enough(double computed, double expected) {
  return std::abs(computed - expected) <= kCheckTolerance * std::abs(expected);
}

int run_table(const TableArgs& args, const ParamOverrides& flags, std::ostream& out,
              std::ostream& err) {
  const auto coeffs = table_from(flags);
  const bool show_refined = args.method != "cr";
  const bool show_cr = args.method != "refined";

  out << "x y";
  if (show_refined) out << " re_refined";
  if (show_cr) out << " re_cr re_cr_quality";
  if (show_refined) out << " im_refined";
  if (show_cr) out << " im_cr im_cr_quality";
  out << '\n';

  int mismatches = 0;
  auto check = [&](const TableRow& row, const char* column, double computed, double expected) {
    if (args.check && !close_enough(computed, expected)) {
      ++mismatches;
      err << "mismatch at x=" << row.x << " y=" << row.y << " " << column << ": computed "
          << format_scientific(computed) << ", expected " << format_scientific(expected) << '\n';
    }
  };

  for (const auto& row : reference_table()) {
    const Complex z{row.x, row.y};
    const Complex refined = w_refined(z, coeffs);
    const Complex cr = w_cr(z, coeffs);
    out << row.x << ' ' << row.y;
    if (show_refined) out << ' ' << format_scientific(refined.real());
    if (show_cr) {
      out << ' ' << format_scientific(cr.real()) << ' ' << to_string(row.re_cr_quality);
    }
    if (show_refined) out << ' ' << format_scientific(refined.imag());
    if (show_cr) {
      out << ' ' << format_scientific(cr.imag()) << ' ' << to_string(row.im_cr_quality);
    }
    out << '\n';

    if (show_refined) {
      check(row, "re_refined", refined.real(), row.re_refined);
      check(row, "im_refined", refined.imag(), row.im_refined);
    }
    if (show_cr) {
      check(row, "re_cr", cr.real(), row.re_cr);
      check(row, "im_cr", cr.imag(), row.im_cr);
    }
  }
  if (args.check) {
    if (mismatches > 0) {
      err << mismatches << " cell(s) differ from the reference table by more than "
          << kCheckTolerance << " relative\n";
      return kExitCheckFailed;
    }
    err << "all cells match the reference table to " << kCheckTolerance << " relative\n";
  }
  return kExitOk;
}

// scan ---------------------------------------------------------------------

struct ScanArgs {
  GridSpec grid;
  bool linear = false;
  std::string method = "adaptive";
  std::string reference = "oracle";
  std::string format = "csv";
  std::string out_path;
  int jobs = 1;
  QuadratureSpec quadrature;
};

int run_scan(ScanArgs args, const ParamOverrides& flags, std::ostream& out, std::ostream& err) {
  const auto coeffs = table_from(flags);
  args.grid.spacing = args.linear ? Spacing::linear : Spacing::logarithmic;
  const auto report = error_scan(args.grid, *parse_scan_method(args.method),
                                 *parse_scan_reference(args.reference), coeffs, args.quadrature,
                                 ScanOptions{true, args.jobs});

  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out_path.empty()) {
    file.open(args.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << args.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (args.format == "json") {
    *sink << to_json(report).dump(2) << '\n';
  } else {
    write_csv(*sink, report);
  }
  err << "max_rel_error " << format_scientific(report.max_rel_error) << " at x="
      << format_scientific(report.argmax_x) << " y=" << format_scientific(report.argmax_y)
      << '\n';
  return kExitOk;
}

// bench --------------------------------------------------------------------

struct BenchArgs {
  std::string method = "cr";
  long n = 1'000'000;
  std::uint64_t seed = 42;
  std::string format = "text";
  bool compare = false;
};

void print_bench(std::ostream& out, const BenchReport& r) {
  out << "method=" << to_string(r.method) << " region=" << to_string(r.region)
      << " points=" << r.points_evaluated << " wall_time=" << format_scientific(r.wall_time)
      << " throughput=" << format_scientific(r.throughput)
      << " checksum=" << format_scientific(r.checksum) << '\n';
}

int run_bench(const BenchArgs& args, const ParamOverrides& flags, std::ostream& out) {
  const auto coeffs = table_from(flags);
  if (!args.compare) {
    const auto report = measure_throughput(*parse_bench_method(args.method), args.n, args.seed,
                                           coeffs);
    if (args.format == "json") {
      out << to_json(report).dump(2) << '\n';
    } else {
      print_bench(out, report);
    }
    return kExitOk;
  }

  const auto cr = measure_throughput(BenchMethod::cr, args.n, args.seed, coeffs, BenchRegion::full);
  const auto refined =
      measure_throughput(BenchMethod::refined, args.n, args.seed, coeffs, BenchRegion::full);
  const double speedup = cr.throughput / refined.throughput;
  if (args.format == "json") {
    nlohmann::json j{{"cr", to_json(cr)}, {"refined", to_json(refined)}, {"speedup", speedup}};
    out << j.dump(2) << '\n';
  } else {
    print_bench(out, cr);
    print_bench(out, refined);
    out << "speedup=" << format_scientific(speedup) << '\n';
  }
  return kExitOk;
}

}  // namespace

SeriesParams parse_params_text(const std::string& text) {
  const auto fail = [&text]() -> SeriesParams {
    throw ParameterError("expected \"tau_m,N,y_switch\", got \"" + text + "\"");
  };
  std::vector<std::string> fields;
  std::stringstream in(text);
  for (std::string field; std::getline(in, field, ',');) fields.push_back(field);
  if (fields.size() != 3) return fail();

  SeriesParams params;
  char* end = nullptr;
  params.tau_m = std::strtod(fields[0].c_str(), &end);
  if (end == fields[0].c_str() || *end != '\0') return fail();
  const long n = std::strtol(fields[1].c_str(), &end, 10);
  if (end == fields[1].c_str() || *end != '\0' || n > 1'000'000 || n < -1'000'000) return fail();
  params.n_terms = static_cast<int>(n);
  params.y_switch = std::strtod(fields[2].c_str(), &end);
  if (end == fields[2].c_str() || *end != '\0') return fail();
  return params;
}

SeriesParams resolve_params(const ParamOverrides& flags, const char* env_text) {
  SeriesParams params;
  if (env_text != nullptr && *env_text != '\0') {
    params = parse_params_text(env_text);
  }
  if (flags.tau_m) params.tau_m = *flags.tau_m;
  if (flags.n_terms) params.n_terms = *flags.n_terms;
  if (flags.y_switch) params.y_switch = *flags.y_switch;
  params.validate();
  return params;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex error function w(z) by exponential series approximation", "cef"};
  app.require_subcommand(1);

  ParamOverrides flags;

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate w(x + iy) at one point");
  eval->add_option("--x", eval_args.x, "Real part")->required();
  eval->add_option("--y", eval_args.y, "Imaginary part")->required();
  eval->add_option("--method", eval_args.method, "refined, cr or adaptive")
      ->check(CLI::IsMember({"refined", "cr", "adaptive"}));
  add_param_flags(*eval, flags);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print the benchmark table on the diagonal x = y");
  table->add_option("--method", table_args.method, "refined, cr or both")
      ->check(CLI::IsMember({"refined", "cr", "both"}));
  table->add_flag("--check", table_args.check, "Compare against the embedded reference values");
  add_param_flags(*table, flags);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Relative-error map of a kernel against a reference");
  scan->add_option("--x-min", scan_args.grid.x_min, "Smallest Re z node");
  scan->add_option("--x-max", scan_args.grid.x_max, "Largest Re z node");
  scan->add_option("--y-min", scan_args.grid.y_min, "Smallest Im z node (> 0)");
  scan->add_option("--y-max", scan_args.grid.y_max, "Largest Im z node");
  scan->add_option("--nx", scan_args.grid.nx, "Nodes along Re z");
  scan->add_option("--ny", scan_args.grid.ny, "Nodes along Im z");
  auto* log_flag = scan->add_flag("--log", "Logarithmic node spacing (default)");
  scan->add_flag("--linear", scan_args.linear, "Linear node spacing")->excludes(log_flag);
  scan->add_option("--method", scan_args.method, "Kernel under test")
      ->check(CLI::IsMember({"refined", "cr", "adaptive"}));
  scan->add_option("--reference", scan_args.reference, "Reference values")
      ->check(CLI::IsMember({"oracle", "refined"}));
  scan->add_option("--format", scan_args.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", scan_args.out_path, "Write the report here instead of stdout");
  scan->add_option("--jobs", scan_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--quad-tau-max", scan_args.quadrature.tau_max, "Oracle integration cutoff");
  scan->add_option("--quad-tol", scan_args.quadrature.abs_tol, "Oracle absolute tolerance");
  scan->add_option("--quad-max-subdivisions", scan_args.quadrature.max_subdivisions,
                   "Oracle bisection budget");
  add_param_flags(*scan, flags);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time one evaluation path");
  bench->add_option("--method", bench_args.method, "Evaluation path to time")
      ->check(CLI::IsMember({"refined", "cr", "adaptive_low_y", "adaptive_high_y"}));
  bench->add_option("--n", bench_args.n, "Number of points (>= 10000)");
  bench->add_option("--seed", bench_args.seed, "Generator seed");
  bench->add_option("--format", bench_args.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  bench->add_flag("--compare", bench_args.compare, "Compare cr against refined on the same points");
  add_param_flags(*bench, flags);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args, flags, out);
    if (*table) return run_table(table_args, flags, out, err);
    if (*scan) return run_scan(scan_args, flags, out, err);
    if (*bench) return run_bench(bench_args, flags, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace cef::cli
