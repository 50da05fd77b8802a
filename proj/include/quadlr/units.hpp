#pragma once

// Atomic-unit conversion factors. Energies are carried in hartree, lengths
// in bohr, masses in electron masses.
namespace quadlr::units {

inline constexpr double hartree_to_cm1 = 219474.63137;
inline constexpr double hartree_to_kelvin = 315775.02;
inline constexpr double amu_to_me = 1822.888486;

inline constexpr double cm1_to_hartree(double cm1) { return cm1 / hartree_to_cm1; }
inline constexpr double hartree_to_wavenumber(double eh) { return eh * hartree_to_cm1; }
inline constexpr double kelvin_to_hartree(double k) { return k / hartree_to_kelvin; }
inline constexpr double hartree_to_microkelvin(double eh) { return eh * hartree_to_kelvin * 1e6; }
inline constexpr double microkelvin_to_hartree(double uk) { return uk * 1e-6 / hartree_to_kelvin; }

}  // namespace quadlr::units
