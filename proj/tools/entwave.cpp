// entwave: command-line front end for the CCWT library.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "entwave/ccwt.hpp"
#include "entwave/error.hpp"
#include "entwave/fock.hpp"
#include "entwave/io.hpp"
#include "entwave/verify.hpp"
#include "entwave/wavelets.hpp"

using namespace entwave;

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitFormat = 2;
constexpr int kExitPrecondition = 3;

struct GridFlags {
  std::optional<int> n;
  std::optional<double> extent;
  std::optional<int> scales;
  std::optional<double> mu_min;
  std::optional<double> mu_max;
  std::string engine = "fft";
  std::string kind;
  std::string coeffs;
  std::string output;
  std::string format = "ewg";

  ComplexPlaneGrid grid(int n_default = kDefaultGridN, double extent_default = kDefaultGridExtent) const {
    return ComplexPlaneGrid::symmetric(n.value_or(n_default), extent.value_or(extent_default));
  }
  ScaleGrid scale_grid() const {
    return ScaleGrid::log_spaced(scales.value_or(kDefaultScaleCount), mu_min.value_or(kDefaultMuMin),
                                 mu_max.value_or(kDefaultMuMax));
  }
  Engine engine_kind() const {
    if (engine == "fft") return Engine::Fft;
    if (engine == "direct") return Engine::Direct;
    throw PreconditionError("--engine must be direct or fft");
  }
  FieldFormat field_format() const {
    if (format == "ewg") return FieldFormat::Ewg;
    if (format == "csv") return FieldFormat::Csv;
    throw PreconditionError("--format must be ewg or csv");
  }
  MotherWavelet wavelet() const {
    if (kind.empty()) {
      if (!coeffs.empty()) throw PreconditionError("--coeffs needs --kind");
      return MotherWavelet::emhw();
    }
    std::string text = "kind=" + kind;
    if (!coeffs.empty()) text += "\ncoeffs=" + coeffs;
    return parse_wavelet_descriptor(text);
  }
};

void add_grid_flags(CLI::App* app, GridFlags& f) {
  app->add_option("--grid-n", f.n, "Nodes per axis");
  app->add_option("--grid-extent", f.extent, "Half-width of the square grid");
}

void add_scale_flags(CLI::App* app, GridFlags& f) {
  app->add_option("--scales", f.scales, "Number of log-spaced scales");
  app->add_option("--mu-min", f.mu_min, "Smallest scale");
  app->add_option("--mu-max", f.mu_max, "Largest scale");
}

void add_wavelet_flags(CLI::App* app, GridFlags& f) {
  app->add_option("--kind", f.kind, "Wavelet kind: emhw, lg, mexhat1d");
  app->add_option("--coeffs", f.coeffs, "Comma-separated Laguerre coefficients");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

double relative_l2(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw PreconditionError("reference lives on a different grid");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t m = 0; m < a.grid().size(); ++m) {
    num += std::norm(a.values()[m] - b.values()[m]);
    den += std::norm(b.values()[m]);
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

int cmd_wavelet_info(const GridFlags& f) {
  const MotherWavelet w = f.wavelet();
  std::cout << w.descriptor();
  const cplx defect = admissibility_defect(w);
  std::cout << "admissibility_defect=" << std::setprecision(12) << std::abs(defect) << '\n';
  if (w.kind() == WaveletKind::MexicanHat1D) {
    const RadialProfile p = RadialProfile::sample([&](double r) { return fourier_1d(w, r); }, 1e-3, 1e-3, 20000);
    std::cout << "c_psi_1d=" << c_psi_1d(p) << '\n';
    return 0;
  }
  std::cout << "energy=" << wavelet_energy(w) << '\n';
  try {
    const double c = c_psi_prime(w);
    std::cout << "c_psi_prime=" << c << '\n';
  } catch (const NonAdmissibleError& e) {
    std::cout << "c_psi_prime=inf\n" << std::flush;
    std::cerr << "warning: wavelet is not admissible (defect " << e.defect() << ")\n";
  }
  return 0;
}

int cmd_ccwt_forward(const GridFlags& f, const std::string& input) {
  if (f.output.empty()) throw PreconditionError("--output is required");
  const Field g = load_field(input);
  const CcwtCoefficients c = forward_with(f.engine_kind(), g, f.wavelet(), f.scale_grid());
  save_coefficients(f.output, c);
  return 0;
}

int cmd_ccwt_inverse(const GridFlags& f, const std::string& input, const std::string& reference) {
  if (f.output.empty()) throw PreconditionError("--output is required");
  const CcwtCoefficients c = load_coefficients(input);
  const MotherWavelet w = f.wavelet();
  const ComplexPlaneGrid out = (f.n || f.extent) ? f.grid() : c.kappa_grid;
  const Field g = inverse(c, w, c_psi_prime(w), out);
  save_field(f.output, g, f.field_format());
  if (!reference.empty()) {
    const double err = relative_l2(g, load_field(reference));
    std::cout << "relative_l2_error=" << std::setprecision(6) << err << '\n';
  }
  return 0;
}

int cmd_verify(const GridFlags& f, const std::string& suite, const std::string& config_path, CLI::App* app) {
  if (!is_known_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'\n" << app->help();
    return kExitPrecondition;
  }
  SuiteConfig cfg;
  if (!config_path.empty()) cfg = parse_suite_config(read_file(config_path));
  if (f.n) cfg.grid_n = *f.n;
  if (f.extent) cfg.grid_extent = *f.extent;
  if (f.scales) cfg.scale_count = *f.scales;
  if (f.mu_min) cfg.mu_min = *f.mu_min;
  if (f.mu_max) cfg.mu_max = *f.mu_max;
  if (!f.kind.empty()) cfg.wavelet = f.wavelet();
  cfg.engine = f.engine_kind();
  cfg = parse_suite_config("", cfg);

  const std::vector<ReportRow> rows = run_suite(suite, cfg);
  std::ostringstream csv;
  write_report_csv(csv, rows);
  if (!f.output.empty()) save_text(f.output, csv.str());
  std::cout << format_report_table(rows);
  for (const ReportRow& r : rows)
    if (!r.pass) return kExitTolerance;
  return 0;
}

int cmd_fock_sample(const GridFlags& f, const std::string& state) {
  if (f.output.empty()) throw PreconditionError("--output is required");
  const Field g = sample_state(parse_state_descriptor(state), f.grid());
  save_field(f.output, g, f.field_format());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entwave: complex continuous wavelet transforms over the complex plane"};
  app.require_subcommand(1);
  GridFlags f;
  std::string input;
  std::string reference;
  std::string suite;
  std::string config;
  std::string state;

  CLI::App* wavelet = app.add_subcommand("wavelet", "Inspect mother wavelets");
  wavelet->require_subcommand(1);
  CLI::App* info = wavelet->add_subcommand("info", "Print coefficients, admissibility defect and C'");
  add_wavelet_flags(info, f);

  CLI::App* ccwt = app.add_subcommand("ccwt", "Forward and inverse transforms");
  ccwt->require_subcommand(1);
  CLI::App* fwd = ccwt->add_subcommand("forward", "EWG1/CSV field to EWC1 coefficients");
  fwd->add_option("input", input, "Input field")->required();
  add_scale_flags(fwd, f);
  add_wavelet_flags(fwd, f);
  fwd->add_option("--engine", f.engine, "direct or fft");
  fwd->add_option("--output,-o", f.output, "Output EWC1 file");
  CLI::App* inv = ccwt->add_subcommand("inverse", "EWC1 coefficients to a field");
  inv->add_option("input", input, "Input coefficients")->required();
  add_grid_flags(inv, f);
  add_wavelet_flags(inv, f);
  inv->add_option("--output,-o", f.output, "Output field");
  inv->add_option("--format", f.format, "ewg or csv");
  inv->add_option("--reference", reference, "Field to compare the reconstruction against");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "parseval, kernel, constants, oracles or all")->required();
  verify->add_option("--config", config, "key=value settings file");
  add_grid_flags(verify, f);
  add_scale_flags(verify, f);
  add_wavelet_flags(verify, f);
  verify->add_option("--engine", f.engine, "direct or fft");
  verify->add_option("--output,-o", f.output, "CSV report path");

  CLI::App* fock = app.add_subcommand("fock", "Two-mode Fock states");
  fock->require_subcommand(1);
  CLI::App* fs = fock->add_subcommand("sample", "Sample a state's eta-representation");
  fs->add_option("state", state, "number:m,n or coherent:re1,im1,re2,im2")->required();
  add_grid_flags(fs, f);
  fs->add_option("--output,-o", f.output, "Output field");
  fs->add_option("--format", f.format, "ewg or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*info) return cmd_wavelet_info(f);
    if (*fwd) return cmd_ccwt_forward(f, input);
    if (*inv) return cmd_ccwt_inverse(f, input, reference);
    if (*verify) return cmd_verify(f, suite, config, verify);
    if (*fs) return cmd_fock_sample(f, state);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitPrecondition;
}
