#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "landscape.hpp"
#include "report.hpp"
#include "spectra.hpp"
#include "species.hpp"
#include "units.hpp"

namespace quadlr::commands {

/// Bad j, window or grid request. The CLI maps it to exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

inline constexpr int max_j = 60;

inline void require_j(int j, const char* what) {
  if (j < 0 || j > max_j)
    throw InputError(std::string(what) + " must lie in [0, " + std::to_string(max_j) + "], got " + std::to_string(j));
}

using report::Cell;
using report::Column;
using report::OutputRecord;
using report::Section;

inline Cell text(std::string s) { return Cell{std::move(s)}; }
inline Cell integer(long long v) { return Cell{v}; }
inline Cell real(double v) { return Cell{v}; }

/// C5 table: one row per eigenstate (or per distinct curve with
/// `distinct`, which drops the -m_J partners).
inline OutputRecord cmd_table(const SpeciesPair& species, const std::vector<int>& js, bool distinct = false) {
  if (js.empty()) throw InputError("table: at least one j is required");
  for (int j : js) require_j(j, "j");

  Section sec{"c5",
              {{"j", "1"},
               {"m_J", "1"},
               {"label", ""},
               {"c5_reduced", "q2_0*r2"},
               {"c5_exact", "q2_0*r2"},
               {"c5_au", "Eh*a0^5"}},
              {}};
  for (int j : js)
    for (const auto& e : c5_spectrum(j, species)) {
      if (distinct && e.m_J < 0) continue;
      std::string exact;
      if (e.exact_reduced) exact = e.exact_reduced->str();
      sec.rows.push_back({integer(e.j), integer(e.m_J), text(e.label.name()), real(e.c5_reduced),
                          exact.empty() ? Cell{} : text(exact), integer(std::llround(e.c5_au))});
    }

  std::string echo = "table --species " + species.name;
  for (int j : js) echo += " --j " + std::to_string(j);
  if (distinct) echo += " --distinct";
  return {echo, species.name, {std::move(sec)}};
}

struct CurveRequest {
  int j_max = 4;
  std::optional<double> r_lo;  // defaults to the Le Roy radius
  double r_hi = 500.0;
  int points = 200;
  bool allow_below_leroy = false;
};

namespace detail {

inline bool label_order(const C5Entry& a, const C5Entry& b) {
  return std::make_tuple(a.abs_m_J(), -a.label.reflection.value_or(0), a.j, a.m_J, a.c5_reduced) <
         std::make_tuple(b.abs_m_J(), -b.label.reflection.value_or(0), b.j, b.m_J, b.c5_reduced);
}

}  // namespace detail

/// Sampled potential curves for every eigenstate with j <= j_max, grouped by
/// symmetry label.
inline OutputRecord cmd_curves(const SpeciesPair& species, const CurveRequest& req) {
  require_j(req.j_max, "jmax");
  const double r_leroy = le_roy_radius(species);
  const double r_lo = req.r_lo.value_or(r_leroy);
  if (req.points < 2) throw InputError("curves: --points must be at least 2");
  if (!(r_lo > 0.0) || !(req.r_hi > r_lo)) throw InputError("curves: need 0 < rmin < rmax");
  if (!req.allow_below_leroy && r_lo < r_leroy)
    throw InputError("curves: rmin = " + report::format_number(r_lo) + " bohr is below the Le Roy radius " +
                     report::format_number(r_leroy) + " bohr (use --allow-below-leroy)");

  std::vector<C5Entry> entries;
  for (int j = 0; j <= req.j_max; ++j) {
    auto part = c5_spectrum(j, species);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  std::stable_sort(entries.begin(), entries.end(), detail::label_order);

  const auto grid = log_grid(r_lo, req.r_hi, req.points);
  Section sec{"curves",
              {{"curve", "1"},
               {"j", "1"},
               {"m_J", "1"},
               {"label", ""},
               {"c5_au", "Eh*a0^5"},
               {"R", "bohr"},
               {"E", "Eh"},
               {"E", "cm-1"}},
              {}};
  long long id = 0;
  for (const auto& e : entries) {
    const PotentialCurve c = curve(e, species, grid, req.allow_below_leroy ? 0.0 : r_leroy);
    for (const auto& s : c.samples)
      sec.rows.push_back({integer(id), integer(e.j), integer(e.m_J), text(e.label.name()), real(e.c5_au), real(s.R),
                          real(s.E), real(units::hartree_to_wavenumber(s.E))});
    ++id;
  }

  std::string echo = "curves --species " + species.name + " --jmax " + std::to_string(req.j_max) +
                     " --rmin " + report::format_number(r_lo) + " --rmax " + report::format_number(req.r_hi) +
                     " --points " + std::to_string(req.points);
  if (req.allow_below_leroy) echo += " --allow-below-leroy";
  return {echo, species.name, {std::move(sec)}};
}

/// Pairwise analytic crossings of the distinct curves with j <= j_max.
inline OutputRecord cmd_crossings(const SpeciesPair& species, int j_max, std::optional<double> r_lo_opt, double r_hi) {
  require_j(j_max, "jmax");
  const double r_lo = r_lo_opt.value_or(le_roy_radius(species));
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw InputError("crossings: need 0 <= rmin < rmax");

  const auto family = curve_family(j_max, species);
  const auto found = crossings(family, species, r_lo, r_hi);

  Section sec{"crossings",
              {{"R", "bohr"},
               {"E", "Eh"},
               {"E", "cm-1"},
               {"j_a", "1"},
               {"m_J_a", "1"},
               {"label_a", ""},
               {"c5_a", "Eh*a0^5"},
               {"j_b", "1"},
               {"m_J_b", "1"},
               {"label_b", ""},
               {"c5_b", "Eh*a0^5"}},
              {}};
  for (const auto& x : found) {
    const auto& a = family[x.curve_a];
    const auto& b = family[x.curve_b];
    sec.rows.push_back({real(x.R), real(x.E), real(units::hartree_to_wavenumber(x.E)), integer(a.j), integer(a.m_J),
                        text(a.label.name()), real(a.c5_au), integer(b.j), integer(b.m_J), text(b.label.name()),
                        real(b.c5_au)});
  }

  std::string echo = "crossings --species " + species.name + " --jmax " + std::to_string(j_max) + " --rmin " +
                     report::format_number(r_lo) + " --rmax " + report::format_number(r_hi);
  return {echo, species.name, {std::move(sec)}};
}

/// Le Roy radius, <r0^2>, R_m, barrier heights for N = 1..n_max and the
/// highest open partial wave at the given temperature.
inline OutputRecord cmd_derived(const SpeciesPair& species, double temperature_uK, int n_max) {
  if (!(temperature_uK > 0.0)) throw InputError("derived: temperature must be positive");
  if (n_max < 1 || n_max > 1000) throw InputError("derived: --nmax must lie in [1, 1000]");

  Section summary{"summary",
                  {{"R_LR", "bohr"},
                   {"r0_squared", "bohr^2"},
                   {"R_m", "bohr"},
                   {"B0", "Eh"},
                   {"B0", "cm-1"},
                   {"mass", "me"},
                   {"mass_convention", ""},
                   {"temperature", "uK"},
                   {"max_partial_wave", "1"}},
                  {}};
  summary.rows.push_back({real(le_roy_radius(species)), real(r0_squared(species)), real(r_m_estimate(species)),
                          real(species.B0_hartree()), real(species.B0_cm1), real(collision_mass(species)),
                          text(std::string(to_string(species.mass_convention))), real(temperature_uK),
                          integer(max_partial_wave(temperature_uK * 1e-6, species))});

  Section barriers{"barriers", {{"N", "1"}, {"E_max", "Eh"}, {"E_max", "cm-1"}, {"E_max", "uK"}}, {}};
  for (int N = 1; N <= n_max; ++N) {
    const double e = barrier_height(N, species);
    barriers.rows.push_back(
        {integer(N), real(e), real(units::hartree_to_wavenumber(e)), real(units::hartree_to_microkelvin(e))});
  }

  std::string echo = "derived --species " + species.name + " --temperature-uK " + report::format_number(temperature_uK) +
                     " --nmax " + std::to_string(n_max) + " --mass " + std::string(to_string(species.mass_convention));
  return {echo, species.name, {std::move(summary), std::move(barriers)}};
}

}  // namespace quadlr::commands
