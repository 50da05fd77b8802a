#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spectra.hpp"
#include "species.hpp"
#include "units.hpp"

namespace quadlr {

struct CurveSample {
  double R = 0.0;  // bohr
  double E = 0.0;  // hartree
};

/// Long-range curve B0 j(j+1) + C5 / R^5 for one eigenstate.
struct PotentialCurve {
  C5Entry entry;
  double asymptote = 0.0;  // hartree
  std::vector<CurveSample> samples;

  int j() const noexcept { return entry.j; }
  double energy(double R) const { return asymptote + entry.c5_au / std::pow(R, 5); }
};

inline double rotational_energy(int j, const SpeciesPair& species) {
  return species.B0_hartree() * j * (j + 1);
}

/// <r0^2> of the dimer electron cloud from the quadrupole tensor in the
/// rigid-rotor picture: r_e^2 / 2 - Q_ZZ - 2 Q_XX. An explicit override wins.
inline double r0_squared(const SpeciesPair& species) {
  if (species.r0_squared_override) return *species.r0_squared_override;
  if (!species.Q_XX || !species.Q_ZZ)
    throw ValidationError("species '" + species.name + "': <r0^2> needs Q_XX and Q_ZZ or an override");
  return species.r_e * species.r_e / 2.0 - *species.Q_ZZ - 2.0 * *species.Q_XX;
}

/// 2 (sqrt<r0^2> + sqrt<r^2>), bohr.
inline double le_roy_radius(const SpeciesPair& species) {
  return 2.0 * (std::sqrt(r0_squared(species)) + std::sqrt(species.r2_atom));
}

/// Radius where the most attractive j = 1 curve, -36/25 q_2^0 <r^2> / R^5,
/// meets the j = 0 asymptote: (18 q_2^0 <r^2> / (25 B0))^{1/5}.
inline double r_m_estimate(const SpeciesPair& species) {
  const double b0 = species.B0_hartree();
  if (!(b0 > 0.0)) throw std::domain_error("r_m_estimate: B0 must be positive");
  return std::pow(18.0 * species.c5_scale() / (25.0 * b0), 0.2);
}

/// Mass (electron masses) used in the barrier estimate.
inline double collision_mass(const SpeciesPair& species) {
  const double m = species.atom_mass_me();
  return species.mass_convention == MassConvention::bare ? m : 2.0 * m / 3.0;
}

/// Top of the centrifugal barrier for partial wave N on the most attractive
/// curve: 9/20 (5/24)^{2/3} (N(N+1)/m)^{5/3} (q_2^0 <r^2>)^{-2/3}, hartree.
inline double barrier_height(int N, const SpeciesPair& species) {
  if (N < 0) throw std::domain_error("barrier_height: N must be non-negative");
  if (N == 0) return 0.0;
  static const double prefactor = 9.0 / 20.0 * std::pow(5.0 / 24.0, 2.0 / 3.0);
  const double l2 = static_cast<double>(N) * (N + 1);
  return prefactor * std::pow(l2 / collision_mass(species), 5.0 / 3.0) * std::pow(species.c5_scale(), -2.0 / 3.0);
}

/// Largest N whose barrier lies at or below k_B T.
inline int max_partial_wave(double temperature_K, const SpeciesPair& species) {
  if (!(temperature_K > 0.0)) throw std::domain_error("max_partial_wave: temperature must be positive");
  const double kT = units::kelvin_to_hartree(temperature_K);
  int N = 0;
  while (barrier_height(N + 1, species) <= kT) ++N;
  return N;
}

/// `points` radii spaced evenly in log R over [r_lo, r_hi].
inline std::vector<double> log_grid(double r_lo, double r_hi, int points) {
  if (points < 2) throw std::invalid_argument("log_grid: need at least two points");
  if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw std::invalid_argument("log_grid: need 0 < r_lo < r_hi");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(r_lo), b = std::log(r_hi);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (points - 1));
  grid.front() = r_lo;
  grid.back() = r_hi;
  return grid;
}

/// Samples one curve on `grid`. Radii below `r_floor` (pass le_roy_radius
/// for the physical default, 0 to disable) are refused.
inline PotentialCurve curve(const C5Entry& entry, const SpeciesPair& species, const std::vector<double>& grid, double r_floor) {
  if (grid.empty()) throw std::invalid_argument("curve: empty R grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("curve: R grid is not strictly increasing");
  if (!(grid.front() > 0.0)) throw std::invalid_argument("curve: R must be positive");
  if (grid.front() < r_floor)
    throw std::domain_error("curve: R = " + std::to_string(grid.front()) + " lies below the floor " + std::to_string(r_floor));

  PotentialCurve c{entry, rotational_energy(entry.j, species), {}};
  c.samples.reserve(grid.size());
  for (double R : grid) c.samples.push_back({R, c.energy(R)});
  return c;
}

inline PotentialCurve curve(const C5Entry& entry, const SpeciesPair& species, const std::vector<double>& grid) {
  return curve(entry, species, grid, le_roy_radius(species));
}

/// Analytic intersection of two curves.
struct Crossing {
  std::size_t curve_a = 0;  // indices into the entry list passed to crossings()
  std::size_t curve_b = 0;
  double R = 0.0;  // bohr
  double E = 0.0;  // hartree
};

/// Intersection radius of A_a + C_a/R^5 and A_b + C_b/R^5, if any.
inline std::optional<double> crossing_radius(double asym_a, double c5_a, double asym_b, double c5_b) {
  const double d_asym = asym_b - asym_a;
  const double d_c5 = c5_a - c5_b;
  if (!(d_asym * d_c5 > 0.0)) return std::nullopt;
  return std::pow(d_c5 / d_asym, 0.2);
}

/// Every pairwise crossing of the given curves with R in [r_lo, r_hi],
/// sorted by R. Closed form; no sampling involved.
inline std::vector<Crossing> crossings(const std::vector<C5Entry>& entries, const SpeciesPair& species, double r_lo, double r_hi) {
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw std::invalid_argument("crossings: need 0 <= r_lo < r_hi");
  std::vector<Crossing> out;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      const double asym_a = rotational_energy(entries[a].j, species);
      const double asym_b = rotational_energy(entries[b].j, species);
      const auto R = crossing_radius(asym_a, entries[a].c5_au, asym_b, entries[b].c5_au);
      if (!R || *R < r_lo || *R > r_hi) continue;
      out.push_back({a, b, *R, asym_a + entries[a].c5_au / std::pow(*R, 5)});
    }
  std::stable_sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.R < y.R; });
  return out;
}

/// Distinct curves for j = 0..j_max: the -m_J partners duplicate their +m_J
/// curves and are dropped.
inline std::vector<C5Entry> curve_family(int j_max, const SpeciesPair& species) {
  if (j_max < 0) throw std::domain_error("curve_family: j_max must be non-negative");
  std::vector<C5Entry> out;
  for (int j = 0; j <= j_max; ++j)
    for (auto& e : c5_spectrum(j, species))
      if (e.m_J >= 0) out.push_back(std::move(e));
  return out;
}

}  // namespace quadlr
