#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quadlr/interaction.hpp"
#include "quadlr/wigner.hpp"

using Catch::Approx;
using quadlr::clebsch_gordan;
using quadlr::ExactRadical;
using quadlr::Rational;

TEST_CASE("ExactRadical arithmetic stays exact", "[wigner][radical]") {
  const auto a = ExactRadical::from_square(-1, Rational(2, 5));
  const auto b = ExactRadical::from_square(1, Rational(1, 10));

  CHECK((a * a) == ExactRadical::from_rational(Rational(2, 5)));
  CHECK((a * b).signed_square() == Rational(-1, 25));
  CHECK((a * b).to_rational() == Rational(-1, 5));
  CHECK_FALSE(a.to_rational().has_value());
  CHECK(a.to_double() == Approx(-std::sqrt(0.4)).epsilon(1e-15));
  CHECK(a.str() == "-sqrt(2/5)");
  CHECK(ExactRadical::from_rational(Rational(-6, 25)).str() == "-6/25");

  SECTION("zero is canonical") {
    const ExactRadical zero;
    CHECK(zero.sign() == 0);
    CHECK((zero * a).is_zero());
    CHECK(ExactRadical::from_square(1, Rational(0)) == zero);
    CHECK(ExactRadical::from_square(0, Rational(3)) == zero);
  }

  SECTION("radicand is kept in lowest terms") {
    const auto r = ExactRadical::from_square(1, Rational(6, 4));
    CHECK(boost::multiprecision::numerator(r.radicand()) == 3);
    CHECK(boost::multiprecision::denominator(r.radicand()) == 2);
  }

  CHECK_THROWS_AS(ExactRadical::from_square(1, Rational(-1)), std::domain_error);
}

TEST_CASE("Clebsch-Gordan reference values", "[wigner][cg]") {
  CHECK(clebsch_gordan(2, 0, 1, 0, 1, 0) == ExactRadical::from_square(-1, Rational(2, 5)));
  CHECK(clebsch_gordan(2, 0, 1, 1, 1, 1) == ExactRadical::from_square(1, Rational(1, 10)));
  CHECK(clebsch_gordan(1, 1, 1, 1, 1, 0).is_zero());
  for (int j = 0; j <= 5; ++j)
    for (int m = -j; m <= j; ++m) CHECK(clebsch_gordan(j, m, 0, 0, j, m) == ExactRadical::one());

  // triangle rule
  CHECK(clebsch_gordan(1, 0, 1, 0, 3, 0).is_zero());
  // <1 0 1 0|1 0> vanishes by parity
  CHECK(clebsch_gordan(1, 0, 1, 0, 1, 0).is_zero());
}

TEST_CASE("Clebsch-Gordan agrees with highest-weight construction", "[wigner][cg][oracle]") {
  double worst = 0;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; ++J)
        for (int m1 = -j1; m1 <= j1; ++m1)
          for (int m2 = -j2; m2 <= j2; ++m2) {
            const int M = m1 + m2;
            if (std::abs(M) > J) continue;
            const double exact = clebsch_gordan(j1, m1, j2, m2, J, M).to_double();
            worst = std::max(worst, std::abs(exact - oracle::clebsch_gordan_highest_weight(j1, m1, j2, m2, J, M)));
          }
  CHECK(worst < 1e-12);
}

TEST_CASE("Clebsch-Gordan normalization is exact", "[wigner][cg][property]") {
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; ++J)
        for (int M = -J; M <= J; ++M) {
          Rational sum = 0;
          for (int m1 = -j1; m1 <= j1; ++m1)
            if (std::abs(M - m1) <= j2) sum += clebsch_gordan(j1, m1, j2, M - m1, J, M).radicand();
          INFO("j1=" << j1 << " j2=" << j2 << " J=" << J << " M=" << M);
          CHECK(sum == 1);
        }
}

TEST_CASE("Clebsch-Gordan rows are orthogonal across J", "[wigner][cg][property]") {
  for (int j1 = 0; j1 <= 3; ++j1)
    for (int j2 = 0; j2 <= 3; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; ++J)
        for (int Jp = J + 1; Jp <= j1 + j2; ++Jp)
          for (int M = -J; M <= J; ++M) {
            double s = 0;
            for (int m1 = -j1; m1 <= j1; ++m1)
              if (std::abs(M - m1) <= j2)
                s += clebsch_gordan(j1, m1, j2, M - m1, J, M).to_double() *
                     clebsch_gordan(j1, m1, j2, M - m1, Jp, M).to_double();
            CHECK(std::abs(s) < 1e-14);
          }
}

TEST_CASE("Half-integer and invalid momenta are rejected", "[wigner][cg]") {
  using quadlr::AngularMomentum;
  const AngularMomentum half{1, 1};
  CHECK_THROWS_AS(clebsch_gordan(half, half, AngularMomentum{2, 2}), std::domain_error);
  CHECK_THROWS_AS(AngularMomentum::integral(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(clebsch_gordan(1, 2, 1, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("Wigner small-d reference values", "[wigner][d]") {
  using quadlr::wigner_small_d;
  constexpr double pi = std::numbers::pi;
  CHECK(wigner_small_d(2, 0, 0, 0.0) == Approx(1.0).margin(1e-15));
  CHECK(wigner_small_d(1, 0, 0, pi / 2) == Approx(0.0).margin(1e-15));
  CHECK(wigner_small_d(2, 2, 0, pi / 2) == Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));
  CHECK(wigner_small_d(1, 1, 0, 0.7) == Approx(-std::sin(0.7) / std::sqrt(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(wigner_small_d(1, 2, 0, 0.1), std::domain_error);
  CHECK_THROWS_AS(wigner_small_d(1, 0, -2, 0.1), std::domain_error);
  CHECK_THROWS_AS(wigner_small_d(1, 0, 0, 4.0), std::domain_error);
}

TEST_CASE("Wigner small-d matches exponentiated J_y", "[wigner][d][oracle]") {
  constexpr double pi = std::numbers::pi;
  for (int L = 0; L <= 4; ++L)
    for (double beta : {0.0, pi / 6, pi / 3, 1.0, pi / 2, 2.5, pi}) {
      const auto ref = oracle::wigner_d_by_exponentiation(L, beta);
      for (int M = -L; M <= L; ++M)
        for (int Mp = -L; Mp <= L; ++Mp) {
          INFO("L=" << L << " M=" << M << " Mp=" << Mp << " beta=" << beta);
          CHECK(std::abs(quadlr::wigner_small_d(L, M, Mp, beta) - ref[M + L][Mp + L]) < 1e-12);
        }
    }
}

TEST_CASE("Wigner small-d is orthogonal and the identity at zero", "[wigner][d][property]") {
  constexpr double pi = std::numbers::pi;
  for (int L = 0; L <= 4; ++L) {
    for (double beta : {0.0, pi / 6, pi / 3, pi / 2, pi})
      for (int M = -L; M <= L; ++M) {
        double s = 0;
        for (int Mp = -L; Mp <= L; ++Mp) s += std::pow(quadlr::wigner_small_d(L, M, Mp, beta), 2);
        CHECK(std::abs(s - 1.0) < 1e-12);
      }
    for (int M = -L; M <= L; ++M)
      for (int Mp = -L; Mp <= L; ++Mp)
        CHECK(std::abs(quadlr::wigner_small_d(L, M, Mp, 0.0) - (M == Mp ? 1.0 : 0.0)) < 1e-14);
  }
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly", "[wigner][quadrature]") {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto rule = quadlr::gauss_legendre(n);
    for (int p = 0; p < 2 * n; ++p) {
      double s = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  CHECK_THROWS_AS(quadlr::gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("Triple-d integral reference values", "[wigner][triple]") {
  using quadlr::triple_d_integral;
  CHECK(triple_d_integral(1, 0, 0, 0) == Approx(0.4).epsilon(1e-13));
  CHECK(triple_d_integral(1, 1, 0, 1) == Approx(-0.2).epsilon(1e-13));
  CHECK(std::abs(triple_d_integral(0, 0, 0, 0)) < 1e-14);
  CHECK(triple_d_integral(2, 2, 0, 0) == 0.0);  // m' != m + M
}

TEST_CASE("Triple-d quadrature equals the Clebsch-Gordan product", "[wigner][triple][oracle]") {
  double worst = 0, drift = 0;
  for (int j = 0; j <= 4; ++j)
    for (int mo = -j; mo <= j; ++mo)
      for (int M = -2; M <= 2; ++M)
        for (int mi = -j; mi <= j; ++mi) {
          const double q64 = quadlr::triple_d_integral(j, mo, M, mi, 64);
          const double exact = (clebsch_gordan(2, 0, j, 0, j, 0) *
                                (mo == mi + M ? clebsch_gordan(2, M, j, mi, j, mo) : ExactRadical{}))
                                   .to_double();
          worst = std::max(worst, std::abs(q64 - exact));
          drift = std::max(drift, std::abs(q64 - quadlr::triple_d_integral(j, mo, M, mi, 128)));
        }
  CHECK(worst < 1e-10);
  CHECK(drift < 1e-12);
}

TEST_CASE("Reflection phase", "[wigner]") {
  CHECK(quadlr::reflection_phase(1, 0) == 1);
  CHECK(quadlr::reflection_phase(1, 1) == -1);
  CHECK(quadlr::reflection_phase(2, -2) == 1);
  CHECK(quadlr::reflection_phase(3, -1) == -1);
  CHECK_THROWS_AS(quadlr::reflection_phase(1, 2), std::domain_error);
}
