// Command-line front end for the wavesig library.
//
// Subcommands:
//   generate  synthesize a corpus signal and write it as CSV or JSON
//   analyze   run the sign-signature pipeline over a signal file
//   operate   apply a spectral operator (fractional Laplacian / Hilbert,
//             translation, dilation) to a signal file
//   perturb   randomize orthogonal-wavelet detail signs (modulus-preserving)
//   report    check analysis tables against the reference-catalog expectations
//
// Exit codes: 0 success; 1 expectation failure (report / --verify-moduli);
// 2 usage or parse error; 3 numeric precondition failure (scale band coverage).

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavesig/wavesig.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// ---- file plumbing ---------------------------------------------------------

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

wavesig::Signal read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  if (has_json_extension(path)) {
    const json doc = json::parse(in);
    wavesig::Signal f;
    f.label = doc.value("name", std::string{});
    f.samples = doc.at("samples").get<std::vector<double>>();
    if (doc.contains("n") && doc.at("n").get<std::size_t>() != f.samples.size()) {
      throw std::runtime_error("signal JSON: 'n' does not match sample count");
    }
    wavesig::validate_signal(f);
    return f;
  }
  return wavesig::read_signal_csv<double>(in);
}

json signal_to_json(const wavesig::Signal& f) {
  return json{{"name", f.label}, {"n", f.size()}, {"samples", f.samples}};
}

void write_signal_file(const wavesig::Signal& f, const std::string& path,
                       const std::string& format) {
  std::ostringstream body;
  if (format == "json") {
    body << signal_to_json(f).dump(2) << "\n";
  } else {
    wavesig::write_signal_csv(body, f);
  }
  if (path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << body.str();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

json analysis_to_json(const wavesig::AnalysisTable& table) {
  const auto& c = table.config;
  json meta{{"label", c.signal_label},
            {"n", c.n},
            {"base_scale", c.base_scale},
            {"voices_per_octave", c.voices_per_octave},
            {"scale_count", c.scale_count},
            {"tau", c.tau},
            {"smoothness_order", c.smoothness_order},
            {"dilation", c.dilation},
            {"nms_window", c.nms_window}};
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json{{"b", row.b},
                        {"re_w", row.w.real()},
                        {"im_w", row.w.imag()},
                        {"abs_w", row.abs_w},
                        {"rho", row.rho},
                        {"sig_re", row.sigma.real()},
                        {"sig_im", row.sigma.imag()},
                        {"arg_sig", row.arg_sigma},
                        {"label", row.label}});
  }
  return json{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

void write_analysis_file(const wavesig::AnalysisTable& table, const std::string& path,
                         const std::string& format) {
  std::ostringstream body;
  if (format == "json") {
    body << analysis_to_json(table).dump(2) << "\n";
  } else {
    wavesig::write_analysis_csv(body, table);
  }
  if (path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << body.str();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

// ---- shared option blocks --------------------------------------------------

struct AnalysisOptions {
  double base_scale = 0.125;
  int voices_per_octave = 3;
  int scale_count = 16;
  double tau = wavesig::default_detection_threshold;
  int smoothness_order = 1;
  double dilation = 1.0;
  double floor_ratio = 1e-12;
  int nms_window = 0;
};

void add_analysis_options(CLI::App& cmd, AnalysisOptions& opts) {
  cmd.add_option("--a0", opts.base_scale, "Base (coarsest) scale")
      ->default_val(opts.base_scale)
      ->check(CLI::PositiveNumber);
  cmd.add_option("--voices", opts.voices_per_octave, "Voices per octave")
      ->default_val(opts.voices_per_octave)
      ->check(CLI::PositiveNumber);
  cmd.add_option("--scales", opts.scale_count, "Number of geometric scales")
      ->default_val(opts.scale_count)
      ->check(CLI::PositiveNumber);
  cmd.add_option("--tau", opts.tau, "Detection threshold on |mean sign| (in (0,1))")
      ->default_val(opts.tau);
  cmd.add_option("--order", opts.smoothness_order,
                 "Window transition smoothness order (1 = cubic, 3 = degree-7)")
      ->default_val(opts.smoothness_order)
      ->check(CLI::Range(1, 8));
  cmd.add_option("--dilation", opts.dilation, "Window dilation factor s")
      ->default_val(opts.dilation)
      ->check(CLI::PositiveNumber);
  cmd.add_option("--floor", opts.floor_ratio,
                 "Magnitude floor, as a fraction of the largest coefficient")
      ->default_val(opts.floor_ratio)
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--nms", opts.nms_window,
                 "Non-maximum suppression half-window in samples (0 = off)")
      ->default_val(opts.nms_window)
      ->check(CLI::NonNegativeNumber);
}

wavesig::AnalysisTable run_analysis(const wavesig::Signal& f, const AnalysisOptions& opts) {
  wavesig::WaveletSpec spec;
  spec.transition.smoothness_order = opts.smoothness_order;
  spec.dilation = opts.dilation;
  const auto spectrum = wavesig::make_wavelet_spectrum(spec);
  const auto grid =
      wavesig::make_scale_grid(opts.base_scale, opts.voices_per_octave, opts.scale_count);
  const auto field = wavesig::cwt(f, spectrum, grid);
  const auto w_mean = wavesig::mean_resultant(field, field.magnitude_floor(opts.floor_ratio));
  auto signature = wavesig::classify(w_mean, opts.tau);
  if (opts.nms_window > 0) wavesig::apply_nms(signature, opts.nms_window);

  wavesig::AnalysisConfig config;
  config.n = f.size();
  config.base_scale = opts.base_scale;
  config.voices_per_octave = opts.voices_per_octave;
  config.scale_count = opts.scale_count;
  config.tau = opts.tau;
  config.smoothness_order = opts.smoothness_order;
  config.dilation = opts.dilation;
  config.nms_window = opts.nms_window;
  config.signal_label = f.label;
  return wavesig::make_analysis_table(signature, config);
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 1024;
  double position = 0.5;
  double gamma = 0.5;
  int orientation = 1;
  std::vector<double> coefficients;
  double frequency = 5.0;
  double gaussian_std = 0.05;
  double ratio = 0.35;
  double base = 9.0;
  int terms = 32;
  std::string output;
  std::string format = "csv";
};

wavesig::SignalKind parse_kind(const std::string& kind) {
  using wavesig::SignalKind;
  if (kind == "step") return SignalKind::step;
  if (kind == "cusp") return SignalKind::cusp;
  if (kind == "polynomial") return SignalKind::polynomial;
  if (kind == "gaussian") return SignalKind::gaussian;
  if (kind == "cosine") return SignalKind::cosine;
  if (kind == "weierstrass") return SignalKind::weierstrass;
  if (kind == "piecewise_demo") return SignalKind::piecewise_demo;
  if (kind == "step_plus_cusp") return SignalKind::step_plus_cusp;
  if (kind == "linear_ramp") return SignalKind::linear_ramp;
  throw CLI::ValidationError("--kind", "unknown signal kind '" + kind + "'");
}

int cmd_generate(const GenerateArgs& args) {
  wavesig::GeneratorSpec spec;
  spec.kind = parse_kind(args.kind);
  spec.n = args.n;
  spec.position = args.position;
  spec.exponent = args.gamma;
  spec.orientation = args.orientation;
  if (!args.coefficients.empty()) spec.coefficients = args.coefficients;
  spec.frequency = std::lround(args.frequency);
  spec.gaussian_std = args.gaussian_std;
  spec.weierstrass_ratio = args.ratio;
  spec.weierstrass_base = args.base;
  spec.weierstrass_terms = args.terms;
  const auto f = wavesig::generate(spec);
  write_signal_file(f, args.output, args.format);
  return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& input, const std::string& output, const std::string& format,
                const AnalysisOptions& opts) {
  const auto f = read_signal_file(input);
  const auto table = run_analysis(f, opts);
  write_analysis_file(table, output, format);
  return kExitOk;
}

// ---- operate ---------------------------------------------------------------

struct OperateArgs {
  std::string input;
  std::string output;
  std::string format = "csv";
  std::optional<double> laplacian;
  std::optional<double> hilbert;
  std::optional<double> translate;
  std::optional<double> dilate;
};

int cmd_operate(const OperateArgs& args) {
  int chosen = int(args.laplacian.has_value()) + int(args.hilbert.has_value()) +
               int(args.translate.has_value()) + int(args.dilate.has_value());
  if (chosen != 1) {
    throw CLI::ValidationError(
        "operate", "exactly one of --laplacian, --hilbert, --translate, --dilate is required");
  }
  wavesig::OperatorSpec op;
  if (args.laplacian) {
    op.kind = wavesig::OperatorKind::fractional_laplacian;
    op.order = *args.laplacian;
  } else if (args.hilbert) {
    op.kind = wavesig::OperatorKind::fractional_hilbert;
    op.order = *args.hilbert;
  } else if (args.translate) {
    op.kind = wavesig::OperatorKind::translate;
    op.shift = *args.translate;
  } else {
    op.kind = wavesig::OperatorKind::dilate;
    op.factor = *args.dilate;
  }
  const auto f = read_signal_file(args.input);
  const auto g = wavesig::apply_operator(f, op);
  write_signal_file(g, args.output, args.format);
  return kExitOk;
}

// ---- perturb ---------------------------------------------------------------

struct PerturbArgs {
  std::string input;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 1;
  int levels = 0;
  int filter_order = 4;
  bool verify_moduli = false;
};

int cmd_perturb(const PerturbArgs& args) {
  const auto f = read_signal_file(args.input);
  wavesig::PerturbationSpec spec;
  spec.seed = args.seed;
  spec.dwt_levels = args.levels;
  spec.filter_order = args.filter_order;
  wavesig::PerturbationTrace trace;
  const auto g =
      wavesig::perturb_wavelet_signs(f, spec, args.verify_moduli ? &trace : nullptr);

  bool moduli_match = true;
  if (args.verify_moduli) {
    // Exact multiset comparison on the decomposition the flip acted on:
    // |+-1 * d| = |d| holds bitwise, so any difference is an implementation
    // fault, not rounding.
    moduli_match = trace.moduli_preserved();
    for (std::size_t level = 0; level < trace.moduli_before.size(); ++level) {
      double sum_before = 0, sum_after = 0;
      for (double v : trace.moduli_before[level]) sum_before += v;
      if (level < trace.moduli_after.size()) {
        for (double v : trace.moduli_after[level]) sum_after += v;
      }
      std::cerr << "level " << level << ": coefficients=" << trace.moduli_before[level].size()
                << " modulus_sum_before=" << wavesig::detail::format_real(sum_before)
                << " modulus_sum_after=" << wavesig::detail::format_real(sum_after) << "\n";
    }
    std::cerr << "moduli " << (moduli_match ? "match" : "MISMATCH") << "\n";
  }

  write_signal_file(g, args.output, args.format);
  return moduli_match ? kExitOk : kExitExpectation;
}

// ---- report ----------------------------------------------------------------

double circular_angle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

long circular_sample_distance(long a, long b, long n) {
  long d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

int cmd_report(const std::vector<std::string>& inputs) {
  const auto entries = wavesig::catalog<double>();
  bool all_pass = true;

  for (const auto& path : inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    const auto table = wavesig::read_analysis_csv<double>(in);
    const auto& label = table.config.signal_label;

    const wavesig::CatalogEntry* entry = nullptr;
    for (const auto& e : entries) {
      if (e.name == label) {
        entry = &e;
        break;
      }
    }
    if (entry == nullptr) {
      throw std::runtime_error("table '" + path + "' has label '" + label +
                               "' which is not a catalog signal");
    }

    const long n = long(table.config.n);
    const long feature_idx = std::lround(entry->feature_position * double(n)) % n;
    std::vector<long> extra_idx;
    for (double e : entry->documented_extras) {
      extra_idx.push_back(std::lround(std::fmod(e, 1.0) * double(n)) % n);
    }
    const bool expects_feature = entry->expected_at_feature != std::complex<double>(0, 0);
    const double expected_arg = std::arg(entry->expected_at_feature);

    bool feature_found = !expects_feature;
    double best_angle_dev = -1.0;
    long best_idx = -1;
    std::vector<long> strays;

    std::cout << label << ":\n";
    for (long b = 0; b < n; ++b) {
      const auto& row = table.rows[std::size_t(b)];
      if (row.sigma == std::complex<double>(0, 0)) continue;
      std::cout << "  detection b=" << wavesig::detail::format_real(row.b) << " index=" << b
                << " label=" << row.label
                << " arg=" << wavesig::detail::format_real(row.arg_sigma)
                << " abs_w=" << wavesig::detail::format_real(row.abs_w) << "\n";

      const long to_feature = circular_sample_distance(b, feature_idx, n);
      if (expects_feature && to_feature <= entry->detection_radius) {
        const double dev = circular_angle_distance(row.arg_sigma, expected_arg);
        if (dev <= entry->angle_tolerance && (best_angle_dev < 0 || dev < best_angle_dev)) {
          feature_found = true;
          best_angle_dev = dev;
          best_idx = b;
        }
        continue;
      }
      bool excused = false;
      for (long e : extra_idx) {
        if (circular_sample_distance(b, e, n) <= entry->detection_radius) {
          excused = true;
          break;
        }
      }
      if (!excused) strays.push_back(b);
    }

    bool pass = feature_found && strays.empty();
    if (!feature_found) {
      std::cout << "  MISS: no detection within " << entry->detection_radius
                << " samples of index " << feature_idx << " with angle within "
                << wavesig::detail::format_real(entry->angle_tolerance) << " of "
                << wavesig::detail::format_real(expected_arg) << "\n";
    }
    if (best_idx >= 0) {
      std::cout << "  feature match at index " << best_idx
                << " (angle deviation " << wavesig::detail::format_real(best_angle_dev) << ")\n";
    }
    for (long b : strays) {
      std::cout << "  STRAY detection at index " << b << "\n";
    }
    std::cout << "  " << (pass ? "PASS" : "FAIL") << "\n";
    all_pass = all_pass && pass;
  }

  return all_pass ? kExitOk : kExitExpectation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-wavelet sign-signature toolkit"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Synthesize a corpus signal");
  generate->add_option("--kind", gen.kind, "Signal kind")->required();
  generate->add_option("--n", gen.n, "Sample count")->default_val(gen.n);
  generate->add_option("--pos", gen.position, "Feature position in [0,1)")
      ->default_val(gen.position);
  generate->add_option("--gamma", gen.gamma, "Cusp exponent")->default_val(gen.gamma);
  generate->add_option("--orientation", gen.orientation, "+1 or -1")
      ->default_val(gen.orientation)
      ->check(CLI::IsMember({-1, 1}));
  generate
      ->add_option("--coefficients", gen.coefficients,
                   "Polynomial coefficients, ascending degree (comma separated)")
      ->delimiter(',');
  generate->add_option("--frequency", gen.frequency, "Cosine frequency (integer cycles)")
      ->default_val(gen.frequency);
  generate->add_option("--std", gen.gaussian_std, "Gaussian bump standard deviation")
      ->default_val(gen.gaussian_std);
  generate->add_option("--r", gen.ratio, "Amplitude ratio r in (0,1)")->default_val(gen.ratio);
  generate->add_option("--t", gen.base, "Frequency base t (with r*t >= 1)")
      ->default_val(gen.base);
  generate->add_option("--terms", gen.terms, "Series term count")->default_val(gen.terms);
  generate->add_option("-o,--output", gen.output, "Output path (default: stdout)");
  generate->add_option("--format", gen.format, "Output format")
      ->default_val(gen.format)
      ->check(CLI::IsMember({"csv", "json"}));

  // analyze
  std::string analyze_input, analyze_output, analyze_format = "csv";
  AnalysisOptions analysis_opts;
  auto* analyze = app.add_subcommand("analyze", "Run the sign-signature pipeline");
  analyze->add_option("-i,--input", analyze_input, "Signal file (CSV, or JSON by extension)")
      ->required();
  analyze->add_option("-o,--output", analyze_output, "Output path (default: stdout)");
  analyze->add_option("--format", analyze_format, "Output format")
      ->default_val(analyze_format)
      ->check(CLI::IsMember({"csv", "json"}));
  add_analysis_options(*analyze, analysis_opts);

  // operate
  OperateArgs op;
  auto* operate = app.add_subcommand("operate", "Apply a spectral operator to a signal");
  operate->add_option("-i,--input", op.input, "Signal file")->required();
  operate->add_option("-o,--output", op.output, "Output path (default: stdout)");
  operate->add_option("--format", op.format, "Output format")
      ->default_val(op.format)
      ->check(CLI::IsMember({"csv", "json"}));
  operate->add_option("--laplacian", op.laplacian, "Fractional Laplacian order r");
  operate->add_option("--hilbert", op.hilbert, "Fractional Hilbert order alpha");
  operate->add_option("--translate", op.translate, "Translation distance (domain units)");
  operate->add_option("--dilate", op.dilate, "Dilation factor (> 0)");

  // perturb
  PerturbArgs pert;
  auto* perturb = app.add_subcommand("perturb", "Randomize orthogonal-wavelet detail signs");
  perturb->add_option("-i,--input", pert.input, "Signal file (power-of-two length)")->required();
  perturb->add_option("-o,--output", pert.output, "Output path (default: stdout)");
  perturb->add_option("--format", pert.format, "Output format")
      ->default_val(pert.format)
      ->check(CLI::IsMember({"csv", "json"}));
  perturb->add_option("--seed", pert.seed, "Random seed")->default_val(pert.seed);
  perturb->add_option("--levels", pert.levels, "Decomposition depth (0 = all dyadic levels)")
      ->default_val(pert.levels)
      ->check(CLI::NonNegativeNumber);
  perturb->add_option("--filter-order", pert.filter_order, "Orthogonal filter order (1..4)")
      ->default_val(pert.filter_order)
      ->check(CLI::Range(1, 4));
  perturb->add_flag("--verify-moduli", pert.verify_moduli,
                    "Print per-level coefficient-modulus checksums before/after");

  // report
  std::vector<std::string> report_inputs;
  auto* report = app.add_subcommand("report", "Check analysis tables against the catalog");
  report->add_option("tables", report_inputs, "Analysis table files (CSV)")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error.
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (analyze->parsed()) return cmd_analyze(analyze_input, analyze_output, analyze_format,
                                              analysis_opts);
    if (operate->parsed()) return cmd_operate(op);
    if (perturb->parsed()) return cmd_perturb(pert);
    if (report->parsed()) return cmd_report(report_inputs);
  } catch (const wavesig::band_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
