#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "interaction.hpp"
#include "linalg.hpp"
#include "species.hpp"
#include "wigner.hpp"

namespace quadlr {

/// Molecular-style symmetry label: |m_J| plus the reflection character for
/// Sigma states.
struct SymmetryLabel {
  int abs_m_J = 0;
  std::optional<int> reflection;  // +1 / -1, Sigma only

  /// ASCII name: "Sigma+", "Pi", "Delta", ... Values past H continue the
  /// spectroscopic letter sequence (I, K, L, ...).
  std::string name() const {
    static constexpr std::array<const char*, 6> greek = {"Sigma", "Pi", "Delta", "Phi", "Gamma", "H"};
    static constexpr std::string_view tail = "IKLMNOQRTUVWXYZ";
    std::string s;
    if (abs_m_J < static_cast<int>(greek.size()))
      s = greek[static_cast<std::size_t>(abs_m_J)];
    else if (abs_m_J - 6 < static_cast<int>(tail.size()))
      s = std::string(1, tail[static_cast<std::size_t>(abs_m_J - 6)]);
    else
      s = "|m_J|=" + std::to_string(abs_m_J);
    if (reflection) s += *reflection > 0 ? "+" : "-";
    return s;
  }

  friend bool operator==(const SymmetryLabel&, const SymmetryLabel&) = default;
};

/// Reflection through the trimer plane acting on a product-basis vector:
/// |m_j, lambda> -> (-1)^{m_j} (-1)^{lambda} |-m_j, -lambda>.
inline std::vector<double> reflect(std::span<const double> vec, std::span<const BasisState> basis, int j, int ell) {
  std::vector<double> out(vec.size(), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisState mirrored{-basis[i].m_j, -basis[i].lambda};
    const auto it = std::find(basis.begin(), basis.end(), mirrored);
    if (it == basis.end()) throw ClassificationError("reflect: basis is not closed under reflection");
    const int phase = reflection_phase(j, basis[i].m_j) * reflection_phase(ell, basis[i].lambda);
    out[static_cast<std::size_t>(it - basis.begin())] += phase * vec[i];
  }
  return out;
}

namespace detail {

inline int max_projection(std::span<const BasisState> basis, int BasisState::*field) {
  int m = 0;
  for (const auto& b : basis) m = std::max(m, std::abs(b.*field));
  return m;
}

}  // namespace detail

/// Symmetry label of a unit eigenvector in the m_J block spanned by `basis`.
/// For m_J = 0 the vector must be an eigenvector of the reflection.
inline SymmetryLabel classify(std::span<const double> eigvec, int m_J, std::span<const BasisState> basis, double tol = 1e-8) {
  SymmetryLabel label{std::abs(m_J), std::nullopt};
  if (m_J != 0) return label;
  const int j = detail::max_projection(basis, &BasisState::m_j);
  const int ell = detail::max_projection(basis, &BasisState::lambda);
  const double expectation = dot(eigvec, reflect(eigvec, basis, j, ell));
  if (std::abs(std::abs(expectation) - 1.0) > tol)
    throw ClassificationError("classify: reflection expectation " + std::to_string(expectation) + " is not +-1");
  label.reflection = expectation > 0 ? 1 : -1;
  return label;
}

/// One eigenpair of the interaction.
struct C5Entry {
  int j = 0;
  int m_J = 0;
  SymmetryLabel label;
  double c5_reduced = 0.0;  // units of q_2^0 <r^2>
  double c5_au = 0.0;       // hartree bohr^5
  std::vector<double> eigvec;
  std::vector<BasisState> basis;
  std::optional<Rational> exact_reduced;  // set for 1x1 blocks

  int abs_m_J() const noexcept { return std::abs(m_J); }
};

namespace detail {

// Fix the arbitrary sign: first component above noise is positive.
inline void canonical_sign(std::vector<double>& v) {
  for (double x : v)
    if (std::abs(x) > 1e-9) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
}

}  // namespace detail

/// Diagonalizes one m_J block. Degenerate eigenspaces of the m_J = 0 block
/// are rotated into reflection eigenvectors before labelling.
inline std::vector<C5Entry> block_spectrum(const MatrixBlock& block, int j, int ell) {
  const std::size_t d = block.dimension();
  EigenResult eig = symmetric_eigen(block.values);

  if (block.m_J == 0 && d > 1) {
    const double cluster_tol = 1e-9 * std::max(1.0, block.values.frobenius_norm());
    std::size_t start = 0;
    while (start < d) {
      std::size_t stop = start + 1;
      while (stop < d && eig.values[stop] - eig.values[stop - 1] < cluster_tol) ++stop;
      const std::size_t g = stop - start;
      if (g > 1) {
        DenseMatrix sigma(g, g);
        std::vector<std::vector<double>> vecs, images;
        for (std::size_t a = 0; a < g; ++a) {
          vecs.push_back(eig.vector(start + a));
          images.push_back(reflect(vecs.back(), block.basis, j, ell));
        }
        for (std::size_t a = 0; a < g; ++a)
          for (std::size_t b = 0; b < g; ++b) sigma(a, b) = 0.5 * (dot(vecs[a], images[b]) + dot(vecs[b], images[a]));
        const EigenResult mix = symmetric_eigen(sigma, 1e-13);
        // Reflection-odd states first within a degenerate group.
        for (std::size_t c = 0; c < g; ++c)
          for (std::size_t i = 0; i < d; ++i) {
            double x = 0.0;
            for (std::size_t a = 0; a < g; ++a) x += vecs[a][i] * mix.vectors(a, c);
            eig.vectors(i, start + c) = x;
          }
      }
      start = stop;
    }
  }

  // Eigenvalues that are zero up to rounding come back as +-1e-17 noise.
  const double zero_tol = 64 * std::numeric_limits<double>::epsilon() * block.values.frobenius_norm();

  std::vector<C5Entry> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    C5Entry e;
    e.j = j;
    e.m_J = block.m_J;
    e.c5_reduced = std::abs(eig.values[k]) <= zero_tol ? 0.0 : eig.values[k];
    e.eigvec = eig.vector(k);
    detail::canonical_sign(e.eigvec);
    e.basis = block.basis;
    e.label = classify(e.eigvec, block.m_J, block.basis);
    if (d == 1) {
      e.exact_reduced = block.exact.front().to_rational();
      e.eigvec = {1.0};
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace detail {

inline bool entry_order(const C5Entry& a, const C5Entry& b) {
  const int ra = a.label.reflection.value_or(0), rb = b.label.reflection.value_or(0);
  return std::make_tuple(a.j, a.abs_m_J(), -ra, a.m_J, a.c5_reduced) <
         std::make_tuple(b.j, b.abs_m_J(), -rb, b.m_J, b.c5_reduced);
}

}  // namespace detail

/// All (2j+1)(2l+1) eigenpairs in reduced units, ordered by |m_J|, then
/// Sigma+ before Sigma-, then m_J, then ascending C5.
inline std::vector<C5Entry> reduced_spectrum(int j, int ell) {
  const BlockedMatrix blocked = block_decompose(build_qq_matrix(j, ell));
  std::vector<C5Entry> all;
  for (const auto& [mJ, blk] : blocked.blocks()) {
    auto part = block_spectrum(blk, j, ell);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end(), detail::entry_order);
  return all;
}

/// C5 spectrum for a species: reduced values scaled by q_2^0 <r^2>.
inline std::vector<C5Entry> c5_spectrum(int j, const SpeciesPair& species) {
  auto entries = reduced_spectrum(j, species.ell);
  for (auto& e : entries) e.c5_au = e.c5_reduced * species.c5_scale();
  return entries;
}

}  // namespace quadlr
