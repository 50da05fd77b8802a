#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "interaction.hpp"
#include "linalg.hpp"
#include "spectra.hpp"
#include "species.hpp"
#include "wigner.hpp"

// Self-test battery behind `quadlr check`.
namespace quadlr::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// j = l = 1: reduced multiset {-6/25 x2, 24/25 x2, -36/25, 0 x4}, exact on
/// the 1x1 blocks, and the Cs values rounded to whole atomic units.
inline CheckResult table_one_exactness() {
  CheckResult r{"exact spectrum (j = l = 1)", true, ""};
  std::ostringstream why;
  const auto spec = c5_spectrum(1, builtin_cs());

  std::vector<double> reduced;
  std::vector<long long> rounded;
  for (const auto& e : spec) {
    reduced.push_back(e.c5_reduced);
    rounded.push_back(std::llround(e.c5_au));
    if (e.basis.size() == 1) {
      if (!e.exact_reduced || *e.exact_reduced != Rational(-6, 25)) {
        r.passed = false;
        why << "1x1 block at m_J=" << e.m_J << " is not exactly -6/25; ";
      }
    }
  }
  std::sort(reduced.begin(), reduced.end());
  const std::vector<double> expected = {-36.0 / 25, -6.0 / 25, -6.0 / 25, 0, 0, 0, 0, 24.0 / 25, 24.0 / 25};
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (std::abs(reduced[i] - expected[i]) > 1e-12) {
      r.passed = false;
      why << "reduced eigenvalue " << reduced[i] << " != " << expected[i] << "; ";
    }
  std::sort(rounded.begin(), rounded.end());
  const std::vector<long long> au = {-1674, -279, -279, 0, 0, 0, 0, 1116, 1116};
  if (rounded != au) {
    r.passed = false;
    why << "rounded a.u. values differ from {-1674, -279 x2, 0 x4, 1116 x2}; ";
  }
  r.detail = r.passed ? "9 eigenvalues match" : why.str();
  return r;
}

/// Symmetry, block zeros, zero trace, +-m_J degeneracy and block-vs-full
/// spectra for every j <= j_max, l <= l_max.
inline CheckResult structural_invariants(int j_max = 6, int l_max = 2) {
  CheckResult r{"structural invariants (j <= " + std::to_string(j_max) + ", l <= " + std::to_string(l_max) + ")", true, ""};
  std::ostringstream why;
  double worst_sym = 0, worst_trace = 0, worst_pm = 0, worst_union = 0;

  for (int j = 0; j <= j_max; ++j)
    for (int ell = 0; ell <= l_max; ++ell) {
      const ReducedMatrix m = build_qq_matrix(j, ell);
      const auto& basis = m.basis();
      worst_sym = std::max(worst_sym, m.values().asymmetry());
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (basis[a].m_J() != basis[b].m_J() && !m.exact(a, b).is_zero()) {
            r.passed = false;
            why << "nonzero off-block entry at j=" << j << " l=" << ell << "; ";
          }
      worst_trace = std::max(worst_trace, std::abs(m.values().trace()));
      if (auto t = m.exact_trace(); !t || *t != 0) {
        r.passed = false;
        why << "exact trace nonzero at j=" << j << " l=" << ell << "; ";
      }

      const BlockedMatrix blocked = block_decompose(m);
      std::vector<double> from_blocks;
      for (const auto& [mJ, blk] : blocked.blocks()) {
        const auto ev = symmetric_eigen(blk.values).values;
        from_blocks.insert(from_blocks.end(), ev.begin(), ev.end());
        if (mJ > 0) {
          const auto partner = symmetric_eigen(blocked.block(-mJ).values).values;
          for (std::size_t k = 0; k < ev.size(); ++k) worst_pm = std::max(worst_pm, std::abs(ev[k] - partner[k]));
        }
      }
      std::sort(from_blocks.begin(), from_blocks.end());
      const auto full = symmetric_eigen(m.values()).values;
      for (std::size_t k = 0; k < full.size(); ++k) worst_union = std::max(worst_union, std::abs(full[k] - from_blocks[k]));
    }

  if (worst_sym > 1e-14) r.passed = false, why << "asymmetry " << worst_sym << "; ";
  if (worst_trace > 1e-12) r.passed = false, why << "trace " << worst_trace << "; ";
  if (worst_pm > 1e-12) r.passed = false, why << "+-m_J mismatch " << worst_pm << "; ";
  if (worst_union > 1e-10) r.passed = false, why << "block/full mismatch " << worst_union << "; ";
  std::ostringstream ok;
  ok << "max asymmetry " << worst_sym << ", max |trace| " << worst_trace << ", max +-m_J gap " << worst_pm
     << ", max block/full gap " << worst_union;
  r.detail = r.passed ? ok.str() : why.str();
  return r;
}

/// Quadrature of the triple-d integral against the exact coupling product,
/// and exact CG orthogonality.
inline CheckResult angular_oracle(int j_max = 4) {
  CheckResult r{"angular algebra oracle (j <= " + std::to_string(j_max) + ")", true, ""};
  std::ostringstream why;
  double worst = 0;
  for (int j = 0; j <= j_max; ++j)
    for (int mo = -j; mo <= j; ++mo)
      for (int M = -2; M <= 2; ++M)
        for (int mi = -j; mi <= j; ++mi)
          worst = std::max(worst, std::abs(triple_d_integral(j, mo, M, mi) - dimer_quadrupole_element(j, mo, M, mi).to_double()));
  if (worst > 1e-10) r.passed = false, why << "quadrature gap " << worst << "; ";

  int sums = 0;
  for (int j1 = 0; j1 <= j_max; ++j1)
    for (int j2 = 0; j2 <= j_max; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; ++J)
        for (int M = -J; M <= J; ++M) {
          Rational s = 0;
          for (int m1 = -j1; m1 <= j1; ++m1) {
            const int m2 = M - m1;
            if (std::abs(m2) > j2) continue;
            s += clebsch_gordan(j1, m1, j2, m2, J, M).radicand();
          }
          ++sums;
          if (s != 1) {
            r.passed = false;
            why << "orthogonality fails for (" << j1 << "," << j2 << "," << J << "," << M << "); ";
          }
        }
  std::ostringstream ok;
  ok << "max quadrature gap " << worst << ", " << sums << " exact normalization sums";
  r.detail = r.passed ? ok.str() : why.str();
  return r;
}

inline std::vector<CheckResult> run_all() { return {table_one_exactness(), structural_invariants(), angular_oracle()}; }

}  // namespace quadlr::checks
