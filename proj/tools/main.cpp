// Command-line front end: simulate, compare, sweep, criterion, fcf.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vsckin/config.hpp"
#include "vsckin/displacement.hpp"
#include "vsckin/error.hpp"
#include "vsckin/export.hpp"
#include "vsckin/propagator.hpp"
#include "vsckin/scenario.hpp"
#include "vsckin/simd/kernels.hpp"

namespace {

using namespace vsckin;

struct OutputOptions {
  std::string out;
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void emit(const std::vector<ScenarioResult>& results, const OutputOptions& o) {
  const std::string bytes = render(results, parse_export_format(o.format));
  if (o.out.empty() || o.out == "-") {
    std::cout << bytes;
  } else {
    write_file(o.out, bytes);
  }
}

std::vector<RegimeKind> parse_regimes(const std::vector<std::string>& names) {
  std::vector<RegimeKind> out;
  for (const auto& n : names) out.push_back(parse_regime(n));
  return out;
}

void print_row(const char* key, double value) {
  std::cout << key << " = " << format_double(value) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Kinetics of chemical reactions under vibrational strong coupling"};
  app.require_subcommand(1);
  std::string simd = "auto";
  app.add_option("--simd", simd, "Kernel variant: auto, scalar, avx2, neon");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Propagate one scenario");
  std::string sim_config;
  std::string sim_regime;
  std::string sim_method;
  OutputOptions sim_out;
  simulate->add_option("--config", sim_config, "Scenario JSON")->required();
  simulate->add_option("--regime", sim_regime, "Override regime: bare, weak, vsc");
  simulate->add_option("--method", sim_method, "Override propagator: pade, uniformized");
  add_output_options(simulate, sim_out);

  // compare
  auto* compare = app.add_subcommand("compare", "Propagate one scenario under several regimes");
  std::string cmp_config;
  std::vector<std::string> cmp_regimes{"bare", "weak", "vsc"};
  OutputOptions cmp_out;
  compare->add_option("--config", cmp_config, "Scenario JSON")->required();
  compare->add_option("--regimes", cmp_regimes, "Comma-separated regimes")->delimiter(',');
  add_output_options(compare, cmp_out);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Vary one parameter over a list of values");
  std::string sw_config;
  std::string sw_param;
  std::vector<double> sw_values;
  unsigned sw_threads = 0;
  OutputOptions sw_out;
  sweep->add_option("--config", sw_config, "Scenario JSON")->required();
  sweep->add_option("--param", sw_param, "kappa, eta, gamma (ps^-1 / dimensionless) or g (cm^-1)")
      ->required();
  sweep->add_option("--values", sw_values, "Comma-separated values")->required()->delimiter(',');
  sweep->add_option("--threads", sw_threads, "Worker threads (0 = all cores)");
  add_output_options(sweep, sw_out);

  // criterion
  auto* criterion = app.add_subcommand("criterion", "Large-N modification test");
  double epsilon = 0.0;
  double n_molecules = 0.0;
  double k_r = 0.0;
  double k_d = 0.0;
  std::optional<double> k_f;
  criterion->add_option("--epsilon", epsilon, "Relative rate modification")->required();
  criterion->add_option("--N", n_molecules, "Number of coupled molecules")->required();
  criterion->add_option("--kr", k_r, "Back-reaction rate of the hot product, ps^-1")->required();
  criterion->add_option("--kd", k_d, "Thermalization rate of the hot product, ps^-1")->required();
  criterion->add_option("--kf", k_f, "Forward rate, ps^-1 (prints the steady-state rate)");

  // fcf
  auto* fcf = app.add_subcommand("fcf", "Print displacement matrix elements");
  double lambda = 0.0;
  int max_level = 2;
  fcf->add_option("--lambda", lambda, "Dimensionless displacement")->required();
  fcf->add_option("--max-level", max_level, "Largest occupation printed")
      ->check(CLI::Range(0, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (simd != "auto") {
    const auto isa = simd::parse_isa(simd);
    if (!isa) throw ValidationError("--simd: unknown variant '" + simd + "'");
    simd::set_active_isa(*isa);
  }

  if (simulate->parsed()) {
    ScenarioConfig c = load_config(sim_config);
    if (!sim_regime.empty()) c.regime = parse_regime(sim_regime);
    if (!sim_method.empty()) c.method = parse_method(sim_method);
    emit({run_scenario(c)}, sim_out);
  } else if (compare->parsed()) {
    const ScenarioConfig c = load_config(cmp_config);
    emit(run_comparison(c, parse_regimes(cmp_regimes)), cmp_out);
  } else if (sweep->parsed()) {
    SweepSpec spec{parse_sweep_parameter(sw_param), sw_values, load_config(sw_config)};
    emit(run_sweep(spec, sw_threads), sw_out);
  } else if (criterion->parsed()) {
    const CriterionResult r = vsc_scaling_criterion(epsilon, n_molecules, k_r, k_d);
    std::cout << "modifiable = " << (r.modifiable ? "true" : "false") << '\n';
    print_row("lhs", r.lhs);
    print_row("rhs", r.rhs);
    if (k_f) print_row("k_ssa", ssa_bare_rate(*k_f, k_r, k_d));
  } else if (fcf->parsed()) {
    std::cout << "m_out,m_in,element,franck_condon\n";
    for (int mo = 0; mo <= max_level; ++mo) {
      for (int mi = 0; mi <= max_level; ++mi) {
        const double d = displacement_matrix_element(mo, mi, lambda);
        std::cout << mo << ',' << mi << ',' << format_double(d) << ',' << format_double(d * d)
                  << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vsckin::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const vsckin::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const vsckin::IoError& e) {
    std::cerr << "i/o failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
