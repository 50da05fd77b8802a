#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadlr/checks.hpp"
#include "quadlr/commands.hpp"
#include "quadlr/quadlr.hpp"
#include "quadlr/report.hpp"

namespace {

constexpr int exit_check_failed = 1;
constexpr int exit_bad_species = 2;
constexpr int exit_bad_input = 3;

struct CommonOptions {
  std::string species = "cs";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--species", opts.species, "Built-in name (cs, li) or species file; also searched in $QUADLR_SPECIES_DIR")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void emit(const quadlr::report::OutputRecord& rec, const std::string& format) {
  std::cout << (format == "json" ? quadlr::report::render_json(rec) : quadlr::report::render_csv(rec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-range quadrupole-quadrupole C5 coefficients for dimer + excited atom pairs"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* table = app.add_subcommand("table", "C5 coefficients and symmetry labels for the given rotational levels");
  add_common(table, common);
  std::vector<int> js;
  bool distinct = false;
  table->add_option("--j", js, "Dimer rotational level (repeatable)")->required();
  table->add_flag("--distinct", distinct, "Drop the -m_J partners (one row per distinct curve)");

  auto* curves = app.add_subcommand("curves", "Sample B0 j(j+1) + C5/R^5 on a logarithmic R grid");
  add_common(curves, common);
  quadlr::commands::CurveRequest curve_req;
  std::optional<double> curve_rmin;
  curves->add_option("--jmax", curve_req.j_max, "Highest rotational level")->capture_default_str();
  curves->add_option("--rmin", curve_rmin, "Smallest R in bohr (default: Le Roy radius)");
  curves->add_option("--rmax", curve_req.r_hi, "Largest R in bohr")->capture_default_str();
  curves->add_option("--points", curve_req.points, "Number of grid points")->capture_default_str();
  curves->add_flag("--allow-below-leroy", curve_req.allow_below_leroy, "Permit rmin below the Le Roy radius");

  auto* cross = app.add_subcommand("crossings", "Analytic crossings between curves of different j");
  add_common(cross, common);
  int cross_jmax = 4;
  std::optional<double> cross_rmin;
  double cross_rmax = 500.0;
  cross->add_option("--jmax", cross_jmax, "Highest rotational level")->capture_default_str();
  cross->add_option("--rmin", cross_rmin, "Window start in bohr (default: Le Roy radius)");
  cross->add_option("--rmax", cross_rmax, "Window end in bohr")->capture_default_str();

  auto* derived = app.add_subcommand("derived", "Le Roy radius, R_m, barrier heights and partial-wave count");
  add_common(derived, common);
  double temperature_uK = 100.0;
  int n_max = 10;
  std::string mass;
  derived->add_option("--temperature-uK", temperature_uK, "Collision temperature in microkelvin")->capture_default_str();
  derived->add_option("--nmax", n_max, "Report barriers for N = 1..nmax")->capture_default_str();
  derived->add_option("--mass", mass, "Override the species mass convention")->check(CLI::IsMember({"bare", "reduced"}));

  auto* check = app.add_subcommand("check", "Run the built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_bad_input;
  }

  if (check->parsed()) {
    bool ok = true;
    for (const auto& r : quadlr::checks::run_all()) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      ok = ok && r.passed;
    }
    return ok ? 0 : exit_check_failed;
  }

  quadlr::SpeciesPair species;
  try {
    species = quadlr::resolve_species(common.species);
  } catch (const std::exception& e) {
    std::cerr << "quadlr: " << e.what() << "\n";
    return exit_bad_species;
  }

  try {
    if (table->parsed()) {
      emit(quadlr::commands::cmd_table(species, js, distinct), common.format);
    } else if (curves->parsed()) {
      curve_req.r_lo = curve_rmin;
      emit(quadlr::commands::cmd_curves(species, curve_req), common.format);
    } else if (cross->parsed()) {
      emit(quadlr::commands::cmd_crossings(species, cross_jmax, cross_rmin, cross_rmax), common.format);
    } else if (derived->parsed()) {
      if (!mass.empty()) species.mass_convention = *quadlr::parse_mass_convention(mass);
      emit(quadlr::commands::cmd_derived(species, temperature_uK, n_max), common.format);
    }
  } catch (const quadlr::commands::InputError& e) {
    std::cerr << "quadlr: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "quadlr: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::domain_error& e) {
    std::cerr << "quadlr: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::exception& e) {
    std::cerr << "quadlr: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
