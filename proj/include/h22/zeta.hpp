#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace h22 {

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for integer s >= 2 and a > 0.
///
/// Sums K terms (smallest first) and adds the midpoint of the integral
/// bracket [int_{a+K}^inf, int_{a+K-1}^inf] x^{-s} dx for the rest; the
/// truncation error is at most half the bracket width, which is kept below tol.
inline double hurwitz_zeta(int s, double a, double tol = 1e-15) {
  if (s < 2) {
    throw std::domain_error("hurwitz_zeta: s must be >= 2");
  }
  if (!(a > 0.0)) {
    throw std::domain_error("hurwitz_zeta: a must be > 0");
  }
  const double sm1 = static_cast<double>(s - 1);
  auto tail_from = [&](double x) { return std::pow(x, -sm1) / sm1; };
  // Half-width of the bracket after K terms is below (a+K-1)^{-s}/2.
  const double need = std::pow(2.0 * tol, -1.0 / static_cast<double>(s));
  const auto K = static_cast<std::size_t>(std::max(1.0, std::ceil(need - a + 2.0)));
  double sum = 0.0;
  for (std::size_t n = K; n-- > 0;) {
    sum += std::pow(static_cast<double>(n) + a, -static_cast<double>(s));
  }
  const double lo = tail_from(a + static_cast<double>(K));
  const double hi = tail_from(a + static_cast<double>(K) - 1.0);
  return sum + 0.5 * (lo + hi);
}

inline double zeta(int s, double tol = 1e-15) { return hurwitz_zeta(s, 1.0, tol); }

/// psi^{(m)}(x) = (-1)^{m+1} m! sum_{n>=0} (n+x)^{-(m+1)}.
inline double polygamma(int m, double x, double tol = 1e-15) {
  if (m < 1) {
    throw std::domain_error("polygamma: order must be >= 1");
  }
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) {
    fact *= i;
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * fact * hurwitz_zeta(m + 1, x, tol / fact);
}

struct Constants {
  double zeta4;
  double zeta5;
  /// zeta(4) - zeta(5) = sum_{n>=0} (n+1)/(n+2)^5.
  double gap;
  /// sqrt(gap): sharp constant in ||f||_inf <= sharp ||f||.
  double sharp;
  /// 2 sqrt(2) sharp: product-inequality constant.
  double product_const;
};

inline const Constants& constants() {
  static const Constants c = [] {
    Constants k{};
    k.zeta4 = zeta(4, 1e-16);
    k.zeta5 = zeta(5, 1e-16);
    k.gap = k.zeta4 - k.zeta5;
    k.sharp = std::sqrt(k.gap);
    k.product_const = 2.0 * std::sqrt(2.0) * k.sharp;
    return k;
  }();
  return c;
}

struct TailBound {
  /// sum_{n>N} (n+1)/(n+2)^5, summed directly.
  double direct;
  /// (1/24)(4 psi^{(3)}(N+3) + psi^{(4)}(N+3)) from the polygamma series.
  double polygamma_form;
};

/// Tail of the H22 kernel-coefficient sum beyond index N, by two routes.
inline TailBound tail_bound(std::size_t N, double tol = 1e-18) {
  // kappa(x) = (x+2)^{-4} - (x+2)^{-5} decreases for x >= 0; antiderivative tail:
  auto integral_from = [](double x) {
    const double y = x + 2.0;
    return 1.0 / (3.0 * y * y * y) - 1.0 / (4.0 * y * y * y * y);
  };
  const double start = static_cast<double>(N) + 1.0;
  // Half-width of the bracket after K terms is about kappa(N+K)/2 ~ (N+K)^{-4}/2.
  const double need = std::pow(2.0 * tol, -0.25);
  const auto K = static_cast<std::size_t>(std::max(1.0, std::ceil(need - start + 2.0)));
  double sum = 0.0;
  for (std::size_t i = K; i-- > 0;) {
    const double y = start + static_cast<double>(i) + 2.0;
    const double y4 = y * y * y * y;
    sum += 1.0 / y4 - 1.0 / (y4 * y);
  }
  const double last = start + static_cast<double>(K);
  const double direct = sum + 0.5 * (integral_from(last) + integral_from(last - 1.0));

  const double a = static_cast<double>(N) + 3.0;
  const double poly = (4.0 * polygamma(3, a, tol) + polygamma(4, a, tol)) / 24.0;
  return {direct, poly};
}

}  // namespace h22
