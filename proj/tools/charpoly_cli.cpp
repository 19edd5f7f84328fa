// charpoly: characteristic-polynomial coefficients from the command line.
//
//   charpoly compute   [FILE] [--method M] [--kind PBar|P] [--precision b64|b32]
//   charpoly trace     [FILE] --degree A [--precision b64|b32]
//   charpoly gen       --n N [--ensemble uniform|spread|known] [--decades D] [--seed S] [--out F]
//   charpoly bench     --n-values 4,8 [--methods engine,naive] [--samples K] [--instrumented]
//   charpoly precision --n N [--ensemble uniform|spread] [--decades D] [--samples K] [--degree A]
//
// Exit codes: 0 success, 2 invalid input or configuration, 3 out-of-range request.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charpoly/charpoly.hpp"

namespace {

using namespace charpoly;

constexpr int kExitInvalid = 2;
constexpr int kExitOutOfRange = 3;

struct UsageError : std::runtime_error {
  int code;
  UsageError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

Matrix<double> load_matrix(const std::string& path) {
  if (path.empty() || path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in);
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError(kExitInvalid, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Method method_or_throw(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw UsageError(kExitInvalid, "unknown method '" + name + "'");
  return *m;
}

std::vector<Method> methods_or_throw(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) out.push_back(method_or_throw(n));
  if (out.empty()) throw UsageError(kExitInvalid, "no methods given");
  return out;
}

template <class T>
PolyCoeffs<T> compute_kind(Method method, const Matrix<T>& u, PolyKind kind) {
  auto pbar = compute_pbar(method, u);
  if (kind == PolyKind::PBar) return pbar;
  return pbar_to_p(pbar, u.size());
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string method = "engine";
  std::string kind = "PBar";
  std::string precision = "b64";
  std::string out;
};

int run_compute(const ComputeArgs& a) {
  const Method method = method_or_throw(a.method);
  const Matrix<double> u = load_matrix(a.input);
  if (method == Method::Leibniz && u.size() > kLeibnizMaxDimension) {
    throw UsageError(kExitOutOfRange, "leibniz supports n <= " + std::to_string(kLeibnizMaxDimension));
  }
  const PolyKind kind = a.kind == "P" ? PolyKind::P : PolyKind::PBar;

  std::vector<double> coeffs;
  if (a.precision == "b32") {
    for (float c : compute_kind(method, u.cast<float>(), kind).coeffs) coeffs.push_back(c);
  } else {
    coeffs = compute_kind(method, u, kind).coeffs;
  }

  Output out(a.out);
  auto& os = out.stream();
  os << "# kind=" << (kind == PolyKind::P ? "P" : "PBar") << " n=" << u.size()
     << " method=" << method_name(method) << '\n';
  for (double c : coeffs) os << format_double(c) << '\n';
  return 0;
}

struct TraceArgs {
  std::string input;
  std::int64_t degree = -1;
  std::string method = "engine";
  std::string precision = "b64";
};

int run_trace(const TraceArgs& a) {
  const Method method = method_or_throw(a.method);
  const Matrix<double> u = load_matrix(a.input);
  if (a.degree < 0 || static_cast<std::size_t>(a.degree) > u.size()) {
    throw UsageError(kExitOutOfRange, "degree " + std::to_string(a.degree) + " outside 0.." +
                                          std::to_string(u.size()));
  }
  if (method == Method::Leibniz && u.size() > kLeibnizMaxDimension) {
    throw UsageError(kExitOutOfRange, "leibniz supports n <= " + std::to_string(kLeibnizMaxDimension));
  }
  const auto deg = static_cast<std::size_t>(a.degree);
  const double c = a.precision == "b32" ? static_cast<double>(target_coefficient(method, u.cast<float>(), deg))
                                        : target_coefficient(method, u, deg);
  std::cout << format_double(c) << '\n';
  return 0;
}

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string ensemble = "uniform";
  double decades = 0.0;
  std::vector<double> eigs;
  std::vector<std::string> pairs;  // "re:im"
  std::string out;
  std::string spectrum_out;
};

SpectrumSpec parse_spectrum(const GenArgs& a) {
  SpectrumSpec spec;
  spec.real_eigs = a.eigs;
  for (const auto& p : a.pairs) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw UsageError(kExitInvalid, "pair must be re:im, got '" + p + "'");
    try {
      spec.complex_pairs.emplace_back(std::stod(p.substr(0, colon)), std::stod(p.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError(kExitInvalid, "pair must be re:im, got '" + p + "'");
    }
  }
  return spec;
}

int run_gen(const GenArgs& a) {
  if (a.n == 0 && a.ensemble != "known") throw UsageError(kExitInvalid, "--n must be at least 1");
  if (a.decades < 0) throw UsageError(kExitInvalid, "--decades must be >= 0");

  GeneratorConfig cfg;
  cfg.seed = a.seed;
  cfg.n = a.n;
  if (a.ensemble == "uniform") {
    cfg.ensemble = UniformScaled{};
  } else if (a.ensemble == "spread") {
    cfg.ensemble = SpreadSpectrum{a.decades};
  } else {
    SpectrumSpec spec = parse_spectrum(a);
    if (cfg.n == 0) cfg.n = spec.multiplicity();
    if (spec.multiplicity() != cfg.n || cfg.n == 0)
      throw UsageError(kExitInvalid, "spectrum multiplicity does not match --n");
    cfg.ensemble = KnownSpectrum{std::move(spec)};
  }

  GeneratedMatrix g = [&] {
    try {
      return generate(cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(kExitInvalid, e.what());
    }
  }();

  Output out(a.out);
  write_matrix(out.stream(), g.matrix);

  if (!a.spectrum_out.empty()) {
    if (!g.spectrum) throw UsageError(kExitInvalid, "the uniform ensemble has no known spectrum");
    std::ofstream side(a.spectrum_out);
    if (!side) throw UsageError(kExitInvalid, "cannot write '" + a.spectrum_out + "'");
    for (double e : g.spectrum->real_eigs) side << "real " << format_double(e) << '\n';
    for (const auto& [re, im] : g.spectrum->complex_pairs)
      side << "pair " << format_double(re) << ' ' << format_double(im) << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::vector<std::size_t> n_values;
  std::vector<std::string> methods{"engine"};
  std::size_t samples = 3;
  std::uint64_t seed = 1;
  bool instrumented = false;
  bool table = false;
  bool census = false;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  if (a.n_values.empty()) throw UsageError(kExitInvalid, "--n-values is required");
  for (std::size_t n : a.n_values)
    if (n == 0) throw UsageError(kExitInvalid, "n values must be at least 1");
  if (a.samples == 0) throw UsageError(kExitInvalid, "--samples must be at least 1");

  Output out(a.out);
  auto& os = out.stream();

  if (a.census) {
    const auto rows = run_flop_census(a.n_values, a.seed);
    os << "n,elimination_flops,closed_form,reference_formula,elimination_divisions,hessenberg_flops,"
          "pipeline_flops,pipeline_over_n3\n";
    for (const auto& r : rows) {
      const double n3 = static_cast<double>(r.n) * static_cast<double>(r.n) * static_cast<double>(r.n);
      os << r.n << ',' << r.elimination_flops << ',' << elimination_flops_closed_form(r.n) << ','
         << reference_flop_formula(r.n) << ',' << r.elimination_divisions << ',' << r.hessenberg_flops
         << ',' << r.pipeline_flops << ',' << format_double(static_cast<double>(r.pipeline_flops) / n3)
         << '\n';
    }
    return 0;
  }

  const auto methods = methods_or_throw(a.methods);
  for (Method m : methods) {
    if (m != Method::Leibniz) continue;
    for (std::size_t n : a.n_values)
      if (n > kLeibnizMaxDimension)
        throw UsageError(kExitOutOfRange, "leibniz supports n <= " + std::to_string(kLeibnizMaxDimension));
  }
  const auto records = run_scaling_bench(a.n_values, methods, a.samples, a.seed, a.instrumented);
  if (a.table)
    write_bench_table(os, records, methods);
  else
    write_bench_csv(os, records);
  return 0;
}

struct PrecisionArgs {
  std::size_t n = 16;
  std::string ensemble = "spread";
  double decades = 6.0;
  std::size_t samples = 200;
  std::vector<std::string> methods{"engine", "newton", "faddeev", "dft"};
  std::int64_t degree = -1;  // default n / 2
  std::uint64_t seed = 1;
  std::string out;
};

int run_precision(const PrecisionArgs& a) {
  if (a.samples < 2) throw UsageError(kExitInvalid, "--samples must be at least 2");
  if (a.n == 0) throw UsageError(kExitInvalid, "--n must be at least 1");
  if (a.decades < 0) throw UsageError(kExitInvalid, "--decades must be >= 0");
  const std::size_t degree = a.degree < 0 ? a.n / 2 : static_cast<std::size_t>(a.degree);
  if (degree > a.n) throw UsageError(kExitOutOfRange, "--degree exceeds --n");
  const auto methods = methods_or_throw(a.methods);
  for (Method m : methods)
    if (m == Method::Leibniz && a.n > kLeibnizMaxDimension)
      throw UsageError(kExitOutOfRange, "leibniz supports n <= " + std::to_string(kLeibnizMaxDimension));

  GeneratorConfig cfg;
  cfg.n = a.n;
  cfg.seed = a.seed;
  if (a.ensemble == "spread")
    cfg.ensemble = SpreadSpectrum{a.decades};
  else
    cfg.ensemble = UniformScaled{};

  const auto reports = run_precision_study(cfg, methods, degree, a.samples);
  Output out(a.out);
  auto& os = out.stream();
  os << "# b32 vs b64, coefficient x^" << degree << " of det(I+xU), n=" << a.n << " ensemble=" << a.ensemble;
  if (a.ensemble == "spread") os << " decades=" << format_double(a.decades);
  os << " samples=" << a.samples << "; baselines: newton, faddeev, dft (no diagonalization baseline)\n";
  write_precision_csv(os, reports);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomial coefficients by polynomial Gaussian elimination"};
  app.require_subcommand(1);

  const std::vector<std::string> method_names{"engine", "newton", "faddeev", "dft", "leibniz", "naive"};

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Print all coefficients, ascending degree");
  cmd_compute->add_option("input", compute.input, "Matrix file ('-' or omitted: stdin)");
  cmd_compute->add_option("--method", compute.method)->check(CLI::IsMember(method_names));
  cmd_compute->add_option("--kind", compute.kind, "PBar: det(I+xU), P: det(xI-U)")
      ->check(CLI::IsMember({"PBar", "P"}));
  cmd_compute->add_option("--precision", compute.precision)->check(CLI::IsMember({"b64", "b32"}));
  cmd_compute->add_option("--out", compute.out);

  TraceArgs trace;
  auto* cmd_trace = app.add_subcommand("trace", "Print the x^A coefficient of det(I+xU)");
  cmd_trace->add_option("input", trace.input, "Matrix file ('-' or omitted: stdin)");
  cmd_trace->add_option("--degree", trace.degree, "Coefficient index A")->required();
  cmd_trace->add_option("--method", trace.method)->check(CLI::IsMember(method_names));
  cmd_trace->add_option("--precision", trace.precision)->check(CLI::IsMember({"b64", "b32"}));

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Write a seeded test matrix");
  cmd_gen->add_option("--n", gen.n, "Dimension");
  cmd_gen->add_option("--seed", gen.seed);
  cmd_gen->add_option("--ensemble", gen.ensemble)->check(CLI::IsMember({"uniform", "spread", "known"}));
  cmd_gen->add_option("--decades", gen.decades, "Eigenvalue spread for the spread ensemble");
  cmd_gen->add_option("--eigs", gen.eigs, "Real eigenvalues (known ensemble)")->delimiter(',');
  cmd_gen->add_option("--pairs", gen.pairs, "Complex pairs re:im (known ensemble)")->delimiter(',');
  cmd_gen->add_option("--out", gen.out);
  cmd_gen->add_option("--spectrum-out", gen.spectrum_out, "Sidecar file listing the exact spectrum");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Wall-clock and operation-count benchmarks (CSV)");
  cmd_bench->add_option("--n-values", bench.n_values)->delimiter(',');
  cmd_bench->add_option("--methods", bench.methods)->delimiter(',');
  cmd_bench->add_option("--samples", bench.samples);
  cmd_bench->add_option("--seed", bench.seed);
  cmd_bench->add_flag("--instrumented", bench.instrumented, "Add instrumented operation counts");
  cmd_bench->add_flag("--table", bench.table, "One row per n with per-method columns and ratios");
  cmd_bench->add_flag("--census", bench.census, "Operation counts of the engine stages");
  cmd_bench->add_option("--out", bench.out);

  PrecisionArgs precision;
  auto* cmd_precision = app.add_subcommand("precision", "binary32 vs binary64 deviation study (CSV)");
  cmd_precision->add_option("--n", precision.n);
  cmd_precision->add_option("--ensemble", precision.ensemble)->check(CLI::IsMember({"uniform", "spread"}));
  cmd_precision->add_option("--decades", precision.decades);
  cmd_precision->add_option("--samples", precision.samples);
  cmd_precision->add_option("--methods", precision.methods)->delimiter(',');
  cmd_precision->add_option("--degree", precision.degree, "Target coefficient (default n/2)");
  cmd_precision->add_option("--seed", precision.seed);
  cmd_precision->add_option("--out", precision.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*cmd_compute) return run_compute(compute);
    if (*cmd_trace) return run_trace(trace);
    if (*cmd_gen) return run_gen(gen);
    if (*cmd_bench) return run_bench(bench);
    if (*cmd_precision) return run_precision(precision);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NumericalBreakdown& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitInvalid;
}
