#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadlr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A real number of the form sign * sqrt(p/q) with p/q >= 0 held exactly.
///
/// Clebsch-Gordan coefficients and their products all live in this set, so
/// the coupling algebra can be carried out without rounding. Sums are not
/// closed in general and are left to the caller.
class ExactRadical {
 public:
  ExactRadical() = default;

  /// sign * sqrt(radicand). A zero radicand forces sign 0.
  static ExactRadical from_square(int sign, Rational radicand) {
    if (radicand < 0) throw std::domain_error("ExactRadical: negative radicand");
    ExactRadical r;
    if (radicand == 0 || sign == 0) return r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.radicand_ = std::move(radicand);
    return r;
  }

  static ExactRadical from_rational(const Rational& value) {
    if (value == 0) return {};
    return from_square(value > 0 ? 1 : -1, value * value);
  }

  static ExactRadical one() { return from_square(1, Rational(1)); }

  int sign() const noexcept { return sign_; }
  const Rational& radicand() const noexcept { return radicand_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// Signed square: sign * p/q.
  Rational signed_square() const { return sign_ * radicand_; }

  /// The exact rational value, when the radicand is a perfect square.
  std::optional<Rational> to_rational() const {
    if (sign_ == 0) return Rational(0);
    const BigInt num = boost::multiprecision::numerator(radicand_);
    const BigInt den = boost::multiprecision::denominator(radicand_);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(sign_ * rn, rd);
  }

  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::sqrt(radicand_.convert_to<double>());
  }

  ExactRadical operator-() const {
    ExactRadical r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return from_square(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
  }

  friend ExactRadical operator*(const ExactRadical& a, const Rational& b) {
    return a * from_rational(b);
  }

  ExactRadical& operator*=(const ExactRadical& other) { return *this = *this * other; }

  friend bool operator==(const ExactRadical& a, const ExactRadical& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  /// "-6/25" for rationals, "-sqrt(2/5)" otherwise.
  std::string str() const {
    std::ostringstream os;
    if (sign_ == 0) return "0";
    if (auto q = to_rational()) {
      os << *q;
      return os.str();
    }
    os << (sign_ < 0 ? "-" : "") << "sqrt(" << radicand_ << ")";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRadical& r) { return os << r.str(); }

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

/// Angular momentum quantum number with projection, both stored doubled so
/// that half-integer values are representable. Operations in this library
/// accept integer values only.
struct AngularMomentum {
  int two_j = 0;
  int two_m = 0;

  static AngularMomentum integral(int j, int m) {
    AngularMomentum a{2 * j, 2 * m};
    a.validate();
    return a;
  }

  void validate() const {
    if (two_j < 0) throw std::invalid_argument("angular momentum must be non-negative");
    if (std::abs(two_m) > two_j) throw std::invalid_argument("|m| exceeds j");
    if ((two_j - two_m) % 2 != 0) throw std::invalid_argument("j and m must differ by an integer");
  }

  bool is_integral() const noexcept { return two_j % 2 == 0; }

  int j() const {
    require_integral();
    return two_j / 2;
  }
  int m() const {
    require_integral();
    return two_m / 2;
  }

 private:
  void require_integral() const {
    if (!is_integral()) throw std::domain_error("half-integer angular momentum is not supported");
  }
};

namespace detail {

inline BigInt big_factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline double factorial(int n) {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) throw std::domain_error("factorial argument out of range");
  return table[static_cast<std::size_t>(n)];
}

inline void require_projection(int j, int m, const char* what) {
  if (j < 0 || std::abs(m) > j) throw std::domain_error(std::string(what) + ": projection exceeds angular momentum");
}

}  // namespace detail

/// <j1 m1 j2 m2 | J M> in the Condon-Shortley convention, exact.
///
/// Racah's closed form. Returns zero whenever M != m1 + m2 or the triangle
/// condition fails.
inline ExactRadical clebsch_gordan(const AngularMomentum& a, const AngularMomentum& b, const AngularMomentum& c) {
  a.validate();
  b.validate();
  c.validate();
  const int j1 = a.j(), m1 = a.m(), j2 = b.j(), m2 = b.m(), J = c.j(), M = c.m();

  if (m1 + m2 != M) return {};
  if (J < std::abs(j1 - j2) || J > j1 + j2) return {};

  using detail::big_factorial;
  const Rational prefactor =
      Rational(BigInt(2 * J + 1) * big_factorial(J + j1 - j2) * big_factorial(J - j1 + j2) *
                   big_factorial(j1 + j2 - J) * big_factorial(J + M) * big_factorial(J - M) *
                   big_factorial(j1 - m1) * big_factorial(j1 + m1) * big_factorial(j2 - m2) *
                   big_factorial(j2 + m2),
               big_factorial(j1 + j2 + J + 1));

  const int k_lo = std::max({0, j2 - J - m1, j1 - J + m2});
  const int k_hi = std::min({j1 + j2 - J, j1 - m1, j2 + m2});
  Rational sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const BigInt den = big_factorial(k) * big_factorial(j1 + j2 - J - k) * big_factorial(j1 - m1 - k) *
                       big_factorial(j2 + m2 - k) * big_factorial(J - j2 + m1 + k) *
                       big_factorial(J - j1 - m2 + k);
    sum += Rational(k % 2 == 0 ? 1 : -1, den);
  }
  if (sum == 0) return {};
  return ExactRadical::from_square(sum > 0 ? 1 : -1, prefactor * sum * sum);
}

inline ExactRadical clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M) {
  return clebsch_gordan(AngularMomentum::integral(j1, m1), AngularMomentum::integral(j2, m2),
                        AngularMomentum::integral(J, M));
}

/// Reduced Wigner rotation matrix element d^L_{M,Mp}(beta) from Wigner's
/// explicit sum.
inline double wigner_small_d(int L, int M, int Mp, double beta) {
  detail::require_projection(L, M, "wigner_small_d");
  detail::require_projection(L, Mp, "wigner_small_d");
  if (!(beta >= -1e-12 && beta <= std::numbers::pi + 1e-12)) throw std::domain_error("wigner_small_d: beta outside [0, pi]");

  using detail::factorial;
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  const double norm = std::sqrt(factorial(L + M) * factorial(L - M) * factorial(L + Mp) * factorial(L - Mp));

  const int k_lo = std::max(0, Mp - M);
  const int k_hi = std::min(L + Mp, L - M);
  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const int sign = (k + M - Mp) % 2 == 0 ? 1 : -1;
    const double den = factorial(L + Mp - k) * factorial(k) * factorial(L - k - M) * factorial(k + M - Mp);
    sum += sign / den * std::pow(c, 2 * L + Mp - M - 2 * k) * std::pow(s, 2 * k + M - Mp);
  }
  return norm * sum;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

/// (2j+1)/2 * integral over the internal angle of d^j_{m'0} d^2_{M0} d^j_{m0},
/// with the sin(delta) measure. The azimuthal integration contributes the
/// factor delta(m', m + M). Numerical counterpart of the exact coupling route
/// in dimer_quadrupole_element; used as an oracle.
inline double triple_d_integral(int j, int mj_out, int M, int mj_in, int nodes = 64) {
  detail::require_projection(j, mj_out, "triple_d_integral");
  detail::require_projection(j, mj_in, "triple_d_integral");
  detail::require_projection(2, M, "triple_d_integral");
  if (mj_out != mj_in + M) return 0.0;

  const QuadratureRule rule = gauss_legendre(nodes);
  const double half = std::numbers::pi / 2.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double delta = half * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] * std::sin(delta) * wigner_small_d(j, mj_out, 0, delta) *
           wigner_small_d(2, M, 0, delta) * wigner_small_d(j, mj_in, 0, delta);
  }
  return (2.0 * j + 1.0) / 2.0 * half * sum;
}

/// Phase of the reflection through the trimer plane: |j, m> -> (-1)^m |j, -m>.
inline int reflection_phase(int j, int m) {
  detail::require_projection(j, m, "reflection_phase");
  return m % 2 == 0 ? 1 : -1;
}

}  // namespace quadlr
