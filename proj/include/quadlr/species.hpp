#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "errors.hpp"
#include "units.hpp"

namespace quadlr {

/// Which mass enters the centrifugal barrier estimate.
enum class MassConvention {
  bare,     // mass of the atom
  reduced,  // atom-dimer reduced mass, 2/3 of the atomic mass for a homonuclear trimer
};

inline std::string_view to_string(MassConvention c) { return c == MassConvention::bare ? "bare" : "reduced"; }

inline std::optional<MassConvention> parse_mass_convention(std::string_view s) {
  if (s == "bare") return MassConvention::bare;
  if (s == "reduced") return MassConvention::reduced;
  return std::nullopt;
}

/// Physical inputs for a homonuclear dimer + excited atom pair. All values in
/// atomic units except B0 (cm^-1) and the atomic mass (amu).
struct SpeciesPair {
  std::string name;
  double q2_0 = 0.0;     // dimer quadrupole moment, e a0^2
  double r2_atom = 0.0;  // <r^2> of the excited valence orbital, a0^2
  int ell = 1;
  double B0_cm1 = 0.0;
  double r_e = 0.0;  // a0
  double atom_mass_amu = 0.0;
  std::optional<double> Q_XX;
  std::optional<double> Q_ZZ;
  std::optional<double> r0_squared_override;
  MassConvention mass_convention = MassConvention::bare;

  double B0_hartree() const { return units::cm1_to_hartree(B0_cm1); }
  double atom_mass_me() const { return atom_mass_amu * units::amu_to_me; }
  /// q_2^0 <r^2>, the scale converting reduced C5 values to atomic units.
  double c5_scale() const { return q2_0 * r2_atom; }

  friend bool operator==(const SpeciesPair&, const SpeciesPair&) = default;
};

inline void validate(const SpeciesPair& s) {
  auto positive = [&](double v, const char* key) {
    if (!(v > 0.0)) throw ValidationError("species '" + s.name + "': " + key + " must be positive");
  };
  positive(s.q2_0, "q2_0");
  positive(s.r2_atom, "r2_atom");
  positive(s.B0_cm1, "B0_cm1");
  positive(s.r_e, "r_e");
  positive(s.atom_mass_amu, "atom_mass_amu");
  if (s.ell < 1) throw ValidationError("species '" + s.name + "': ell must be at least 1");
  if (s.Q_XX.has_value() != s.Q_ZZ.has_value())
    throw ValidationError("species '" + s.name + "': Q_XX and Q_ZZ must be given together");
  if (!s.Q_XX && !s.r0_squared_override)
    throw ValidationError("species '" + s.name + "': need Q_XX and Q_ZZ or r0_squared");
  if (s.r0_squared_override && *s.r0_squared_override < 0.0)
    throw ValidationError("species '" + s.name + "': r0_squared must be non-negative");
}

/// Cs2(X, v=0) + Cs(6P).
inline SpeciesPair builtin_cs() {
  SpeciesPair s;
  s.name = "Cs2+Cs(6P)";
  s.q2_0 = 18.56;
  s.r2_atom = 62.65;
  s.ell = 1;
  s.B0_cm1 = 1.17314e-2;
  s.r_e = 8.7;
  s.atom_mass_amu = 132.905451933;
  s.Q_XX = -69.0;
  s.Q_ZZ = -41.0;
  return s;
}

/// 6Li2 + 6Li(2P). B0 from the rigid rotor; <r0^2> fixed to reproduce the
/// quoted Le Roy radius of 26 bohr since no tensor components are known.
inline SpeciesPair builtin_li() {
  SpeciesPair s;
  s.name = "Li2+Li(2P)";
  s.q2_0 = 10.7;
  s.r2_atom = 32.5;
  s.ell = 1;
  s.r_e = 5.05;
  s.atom_mass_amu = 6.0151228874;
  const double mu = s.atom_mass_me() / 2.0;
  s.B0_cm1 = units::hartree_to_wavenumber(1.0 / (2.0 * mu * s.r_e * s.r_e));
  s.r0_squared_override = 53.3;
  return s;
}

inline std::optional<SpeciesPair> builtin(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "cs") return builtin_cs();
  if (lower == "li") return builtin_li();
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Parses the flat `key = value` species format. `#` starts a comment.
/// Unknown or repeated keys are parse errors; the result is validated.
inline SpeciesPair parse_species(std::string_view text, const std::string& source = "<species>") {
  SpeciesPair s;
  s.ell = 0;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(source, line_no, "missing key");
    if (value.empty()) throw ParseError(source, line_no, "missing value for '" + key + "'");
    if (auto [it, fresh] = seen.emplace(key, line_no); !fresh)
      throw ParseError(source, line_no, "duplicate key '" + key + "' (first on line " + std::to_string(it->second) + ")");

    auto number = [&]() -> double {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError(source, line_no, "'" + key + "' is not a number: " + std::string(value));
      return v;
    };

    if (key == "name") {
      s.name = std::string(value);
    } else if (key == "q2_0") {
      s.q2_0 = number();
    } else if (key == "r2_atom") {
      s.r2_atom = number();
    } else if (key == "ell") {
      int v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError(source, line_no, "'ell' is not an integer: " + std::string(value));
      s.ell = v;
    } else if (key == "B0_cm1") {
      s.B0_cm1 = number();
    } else if (key == "r_e") {
      s.r_e = number();
    } else if (key == "atom_mass_amu") {
      s.atom_mass_amu = number();
    } else if (key == "Q_XX") {
      s.Q_XX = number();
    } else if (key == "Q_ZZ") {
      s.Q_ZZ = number();
    } else if (key == "r0_squared") {
      s.r0_squared_override = number();
    } else if (key == "mass_convention") {
      auto mc = parse_mass_convention(value);
      if (!mc) throw ParseError(source, line_no, "mass_convention must be 'bare' or 'reduced'");
      s.mass_convention = *mc;
    } else {
      throw ParseError(source, line_no, "unknown key '" + key + "'");
    }
  }

  for (const char* required : {"name", "q2_0", "r2_atom", "ell", "B0_cm1", "r_e", "atom_mass_amu"})
    if (!seen.contains(required)) throw ValidationError(source + ": missing required key '" + required + "'");
  validate(s);
  return s;
}

inline SpeciesPair load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open species file " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_species(buf.str(), path.string());
}

/// Writes every field so that parse_species reproduces the pair exactly.
inline std::string serialize(const SpeciesPair& s) {
  std::ostringstream os;
  os << "name = " << s.name << '\n'
     << "q2_0 = " << detail::format_double(s.q2_0) << '\n'
     << "r2_atom = " << detail::format_double(s.r2_atom) << '\n'
     << "ell = " << s.ell << '\n'
     << "B0_cm1 = " << detail::format_double(s.B0_cm1) << '\n'
     << "r_e = " << detail::format_double(s.r_e) << '\n'
     << "atom_mass_amu = " << detail::format_double(s.atom_mass_amu) << '\n';
  if (s.Q_XX) os << "Q_XX = " << detail::format_double(*s.Q_XX) << '\n';
  if (s.Q_ZZ) os << "Q_ZZ = " << detail::format_double(*s.Q_ZZ) << '\n';
  if (s.r0_squared_override) os << "r0_squared = " << detail::format_double(*s.r0_squared_override) << '\n';
  os << "mass_convention = " << to_string(s.mass_convention) << '\n';
  return os.str();
}

/// Built-in name ("cs", "li"), then a filesystem path, then `<name>` or
/// `<name>.species` inside $QUADLR_SPECIES_DIR.
inline SpeciesPair resolve_species(std::string_view name_or_path) {
  if (auto b = builtin(name_or_path)) return *b;
  namespace fs = std::filesystem;
  const fs::path direct{std::string(name_or_path)};
  if (fs::is_regular_file(direct)) return load(direct);
  if (const char* dir = std::getenv("QUADLR_SPECIES_DIR"); dir && *dir) {
    for (const fs::path& candidate : {fs::path(dir) / direct, fs::path(dir) / (std::string(name_or_path) + ".species")})
      if (fs::is_regular_file(candidate)) return load(candidate);
  }
  throw Error("unknown species '" + std::string(name_or_path) + "' (not built in, not a file)");
}

}  // namespace quadlr
