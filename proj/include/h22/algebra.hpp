#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "h22/series.hpp"

namespace h22 {

struct SeriesOpConfig {
  std::size_t truncation_order = 128;
  std::size_t circle_samples = 4096;
  double radius = 1.0;

  void validate() const {
    if (circle_samples < 16) {
      throw std::invalid_argument("SeriesOpConfig: circle_samples must be at least 16");
    }
    if (!(radius > 0.0 && radius <= 1.0)) {
      throw std::invalid_argument("SeriesOpConfig: radius must lie in (0, 1]");
    }
  }
};

/// alpha*f + beta*g with order max(orders).
inline Series linear_combine(complex alpha, const Series& f, complex beta, const Series& g) {
  const std::size_t N = std::max(f.order(), g.order());
  std::vector<complex> out(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    out[n] = alpha * f[n] + beta * g[n];
  }
  return Series(std::move(out));
}

/// Cauchy product truncated at order N.
inline Series cauchy_product(const Series& f, const Series& g, std::size_t N) {
  std::vector<complex> out(N + 1);
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  const std::size_t da = std::min(f.degree(), N);
  const std::size_t db = std::min(g.degree(), N);
  for (std::size_t i = 0; i <= da; ++i) {
    if (a[i] == complex{}) {
      continue;
    }
    const std::size_t jmax = std::min(db, N - i);
    for (std::size_t j = 0; j <= jmax; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(out));
}

/// Untruncated product of two polynomials.
inline Series cauchy_product(const Series& f, const Series& g) {
  return cauchy_product(f, g, f.degree() + g.degree());
}

/// k-th derivative, k in {1, 2}. The order drops by k (floored at 0).
inline Series differentiate(const Series& f, int k) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("differentiate: order must be 1 or 2");
  }
  const auto uk = static_cast<std::size_t>(k);
  if (f.order() < uk) {
    return Series::zero(0);
  }
  std::vector<complex> out(f.order() - uk + 1);
  for (std::size_t n = uk; n <= f.order(); ++n) {
    double factor = static_cast<double>(n);
    if (k == 2) {
      factor *= static_cast<double>(n - 1);
    }
    out[n - uk] = factor * f[n];
  }
  return Series(std::move(out));
}

/// phi^n truncated at N. Iterated products up to n = 8, square-and-multiply above.
inline Series power(const Series& phi, std::size_t n, std::size_t N) {
  if (n == 0) {
    return Series::constant(1.0).truncated(N);
  }
  if (n <= 8) {
    Series acc = phi.truncated(N);
    for (std::size_t i = 1; i < n; ++i) {
      acc = cauchy_product(acc, phi, N);
    }
    return acc;
  }
  Series result = Series::constant(1.0).truncated(N);
  Series base = phi.truncated(N);
  for (std::size_t e = n;;) {
    if (e & 1U) {
      result = cauchy_product(result, base, N);
    }
    e >>= 1U;
    if (e == 0) {
      break;
    }
    base = cauchy_product(base, base, N);
  }
  return result;
}

struct ComposeOptions {
  /// Highest power of phi to include. Defaults to the order of f (or N when phi(0) = 0).
  std::optional<std::size_t> max_terms;
  /// Largest tail bound accepted before the composition is rejected.
  double tolerance = 1e-12;
};

struct Composition {
  Series series;
  /// Bound on sum_{k>K} |a_k| * s^k with s = sum |phi_n| >= sup|phi|.
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

/// f o phi truncated at N, evaluated by Horner's scheme in series arithmetic.
///
/// Coefficients 0..N are exact for the terms that are used. When phi(0) = 0,
/// powers above N cannot reach those coefficients so no tail is incurred.
inline Composition compose(const Series& f, const Series& phi, std::size_t N, ComposeOptions opts = {}) {
  const bool origin_fixed = phi[0] == complex{};
  std::size_t K = opts.max_terms.value_or(f.order());
  K = std::min(K, f.order());
  if (origin_fixed) {
    K = std::min(K, N);
  }

  double tail = 0.0;
  if (!origin_fixed) {
    const double s = coefficient_abs_sum(phi);
    double sk = std::pow(s, static_cast<double>(K));
    for (std::size_t k = K + 1; k <= f.order(); ++k) {
      sk *= s;
      tail += std::abs(f[k]) * sk;
    }
  }
  if (tail > opts.tolerance) {
    throw std::domain_error("compose: tail bound " + std::to_string(tail) + " exceeds tolerance");
  }

  Series acc = Series::constant(f[K]).truncated(N);
  for (std::size_t k = K; k-- > 0;) {
    acc = cauchy_product(acc, phi, N);
    std::vector<complex> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += f[k];
    acc = Series(std::move(v));
  }
  return {std::move(acc), tail, K};
}

/// h with h * p = q through order N.
inline Series divide(const Series& q, const Series& p, std::size_t N) {
  const complex p0 = p[0];
  if (p0 == complex{}) {
    throw std::domain_error("divide: p(0) = 0");
  }
  std::vector<complex> h(N + 1);
  const std::size_t dp = p.degree();
  for (std::size_t k = 0; k <= N; ++k) {
    complex acc = q[k];
    const std::size_t jmin = k > dp ? k - dp : 0;
    for (std::size_t j = jmin; j < k; ++j) {
      acc -= h[j] * p[k - j];
    }
    h[k] = acc / p0;
  }
  return Series(std::move(h));
}

struct SupNormEstimate {
  /// max |f| over the sample points; a lower bound for the sup norm.
  double sampled = 0.0;
  /// sum |a_n|; an upper bound.
  double coefficient_sum = 0.0;
};

/// Samples |f(r e^{i theta_j})| at M equispaced angles starting at theta = 0.
inline SupNormEstimate sup_norm_estimate(const Series& f, const SeriesOpConfig& cfg = {}) {
  cfg.validate();
  const Series g = f.trimmed();
  double best = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.circle_samples);
  for (std::size_t j = 0; j < cfg.circle_samples; ++j) {
    const complex z = std::polar(cfg.radius, step * static_cast<double>(j));
    best = std::max(best, std::abs(evaluate(g, z)));
  }
  return {best, coefficient_abs_sum(g)};
}

inline double sup_norm(const Series& f, const SeriesOpConfig& cfg = {}) { return sup_norm_estimate(f, cfg).sampled; }

}  // namespace h22
