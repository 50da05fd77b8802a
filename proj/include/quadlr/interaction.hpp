#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "wigner.hpp"

namespace quadlr {

/// Product state |m_j, lambda> of dimer rotation and atomic orbital, both
/// projected on the trimer Z axis.
struct BasisState {
  int m_j = 0;
  int lambda = 0;

  constexpr int m_J() const noexcept { return m_j + lambda; }

  friend constexpr auto operator<=>(const BasisState&, const BasisState&) = default;
};

/// f_{L_A L_B M} of the multipole expansion, exact.
inline ExactRadical multipole_prefactor(int L_A, int L_B, int M) {
  if (L_A < 0 || L_B < 0) throw std::domain_error("multipole_prefactor: negative multipole rank");
  if (std::abs(M) > std::min(L_A, L_B)) throw std::domain_error("multipole_prefactor: |M| exceeds min(L_A, L_B)");
  using detail::big_factorial;
  const BigInt top = big_factorial(L_A + L_B);
  const BigInt bottom = big_factorial(L_A + M) * big_factorial(L_A - M) * big_factorial(L_B + M) * big_factorial(L_B - M);
  return ExactRadical::from_square(L_B % 2 == 0 ? 1 : -1, Rational(top * top, bottom));
}

/// <j m'| Q_2^M |j m> of the rotating dimer in units of q_2^0:
/// C^{j0}_{20 j0} C^{jm'}_{2M jm}.
inline ExactRadical dimer_quadrupole_element(int j, int mj_out, int M, int mj_in) {
  detail::require_projection(j, mj_out, "dimer_quadrupole_element");
  detail::require_projection(j, mj_in, "dimer_quadrupole_element");
  detail::require_projection(2, M, "dimer_quadrupole_element");
  if (mj_out != mj_in + M) return {};
  return clebsch_gordan(2, 0, j, 0, j, 0) * clebsch_gordan(2, M, j, mj_in, j, mj_out);
}

/// <l lambda'| Q_2^M |l lambda> of the atomic valence electron in units of
/// <r^2>. The electron charge flips the sign relative to the dimer.
inline ExactRadical atom_quadrupole_element(int ell, int lambda_out, int M, int lambda_in) {
  detail::require_projection(ell, lambda_out, "atom_quadrupole_element");
  detail::require_projection(ell, lambda_in, "atom_quadrupole_element");
  detail::require_projection(2, M, "atom_quadrupole_element");
  if (lambda_out != lambda_in + M) return {};
  return -(clebsch_gordan(2, 0, ell, 0, ell, 0) * clebsch_gordan(2, M, ell, lambda_in, ell, lambda_out));
}

/// Product basis for (j, ell), lexicographic in (m_j, lambda), ascending.
inline std::vector<BasisState> product_basis(int j, int ell) {
  if (j < 0 || ell < 0) throw std::domain_error("product_basis: negative angular momentum");
  std::vector<BasisState> basis;
  basis.reserve(static_cast<std::size_t>((2 * j + 1) * (2 * ell + 1)));
  for (int mj = -j; mj <= j; ++mj)
    for (int lam = -ell; lam <= ell; ++lam) basis.push_back({mj, lam});
  return basis;
}

/// Quadrupole-quadrupole interaction matrix in units of q_2^0 <r^2> / R^5.
///
/// Every entry is a single product of exact radicals (the projection change
/// on the dimer fixes M), so the matrix is stored exactly alongside its
/// floating-point image.
class ReducedMatrix {
 public:
  ReducedMatrix(int j, int ell, std::vector<BasisState> basis, std::vector<ExactRadical> exact)
      : j_(j), ell_(ell), basis_(std::move(basis)), exact_(std::move(exact)), values_(basis_.size(), basis_.size()) {
    const std::size_t n = basis_.size();
    if (exact_.size() != n * n) throw std::invalid_argument("ReducedMatrix: entry count mismatch");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) values_(a, b) = exact_[a * n + b].to_double();
  }

  int j() const noexcept { return j_; }
  int ell() const noexcept { return ell_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisState>& basis() const noexcept { return basis_; }
  const DenseMatrix& values() const noexcept { return values_; }

  double operator()(std::size_t a, std::size_t b) const { return values_(a, b); }
  const ExactRadical& exact(std::size_t a, std::size_t b) const { return exact_[a * basis_.size() + b]; }

  /// Exact trace when every diagonal entry is rational.
  std::optional<Rational> exact_trace() const {
    Rational t = 0;
    for (std::size_t a = 0; a < dimension(); ++a) {
      auto q = exact(a, a).to_rational();
      if (!q) return std::nullopt;
      t += *q;
    }
    return t;
  }

  std::optional<std::size_t> index_of(BasisState s) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == s) return i;
    return std::nullopt;
  }

 private:
  int j_;
  int ell_;
  std::vector<BasisState> basis_;
  std::vector<ExactRadical> exact_;
  DenseMatrix values_;
};

/// <m_j' lambda'| V_qq |m_j lambda> in reduced units.
inline ExactRadical qq_matrix_element(int j, int ell, BasisState out, BasisState in) {
  const int M = out.m_j - in.m_j;
  if (std::abs(M) > 2 || out.lambda != in.lambda - M) return {};
  return multipole_prefactor(2, 2, M) * dimer_quadrupole_element(j, out.m_j, M, in.m_j) *
         atom_quadrupole_element(ell, out.lambda, -M, in.lambda);
}

inline ReducedMatrix build_qq_matrix(int j, int ell) {
  if (j < 0) throw std::domain_error("build_qq_matrix: j must be non-negative");
  if (ell < 0) throw std::domain_error("build_qq_matrix: ell must be non-negative");
  auto basis = product_basis(j, ell);
  const std::size_t n = basis.size();
  std::vector<ExactRadical> entries(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      entries[a * n + b] = qq_matrix_element(j, ell, basis[a], basis[b]);
      entries[b * n + a] = entries[a * n + b];
    }
  return ReducedMatrix(j, ell, std::move(basis), std::move(entries));
}

/// One conserved-m_J sub-block of the interaction.
struct MatrixBlock {
  int m_J = 0;
  std::vector<BasisState> basis;
  std::vector<std::size_t> indices;  // positions in the parent basis
  DenseMatrix values;
  std::vector<ExactRadical> exact;

  std::size_t dimension() const noexcept { return basis.size(); }
};

class BlockedMatrix {
 public:
  BlockedMatrix(int j, int ell, std::size_t dimension, std::map<int, MatrixBlock> blocks)
      : j_(j), ell_(ell), dimension_(dimension), blocks_(std::move(blocks)) {}

  int j() const noexcept { return j_; }
  int ell() const noexcept { return ell_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::map<int, MatrixBlock>& blocks() const noexcept { return blocks_; }

  const MatrixBlock& block(int m_J) const {
    auto it = blocks_.find(m_J);
    if (it == blocks_.end()) throw std::out_of_range("BlockedMatrix: no block with m_J = " + std::to_string(m_J));
    return it->second;
  }

  DenseMatrix reassemble() const {
    DenseMatrix full(dimension_, dimension_);
    for (const auto& [mJ, blk] : blocks_)
      for (std::size_t a = 0; a < blk.dimension(); ++a)
        for (std::size_t b = 0; b < blk.dimension(); ++b) full(blk.indices[a], blk.indices[b]) = blk.values(a, b);
    return full;
  }

 private:
  int j_;
  int ell_;
  std::size_t dimension_;
  std::map<int, MatrixBlock> blocks_;
};

/// Splits the matrix by m_J. Throws ConsistencyError if anything couples
/// different m_J beyond `tol`.
inline BlockedMatrix block_decompose(const ReducedMatrix& matrix, double tol = 1e-14) {
  const auto& basis = matrix.basis();
  const std::size_t n = basis.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (basis[a].m_J() != basis[b].m_J() && std::abs(matrix(a, b)) > tol)
        throw ConsistencyError("block_decompose: entry couples m_J = " + std::to_string(basis[a].m_J()) + " and " +
                               std::to_string(basis[b].m_J()));

  std::map<int, MatrixBlock> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    auto& blk = blocks[basis[i].m_J()];
    blk.m_J = basis[i].m_J();
    blk.basis.push_back(basis[i]);
    blk.indices.push_back(i);
  }
  for (auto& [mJ, blk] : blocks) {
    const std::size_t d = blk.dimension();
    blk.values = DenseMatrix(d, d);
    blk.exact.resize(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        blk.values(a, b) = matrix(blk.indices[a], blk.indices[b]);
        blk.exact[a * d + b] = matrix.exact(blk.indices[a], blk.indices[b]);
      }
  }
  return BlockedMatrix(matrix.j(), matrix.ell(), n, std::move(blocks));
}

}  // namespace quadlr
