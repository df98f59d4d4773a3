#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "h22/algebra.hpp"
#include "h22/series.hpp"

namespace h22 {

using Rng = std::mt19937_64;

/// Degree uniform in [min_degree, max_degree]; coefficients uniform in the
/// box [-1, 1] x [-1, 1].
inline Series random_polynomial(Rng& rng, std::size_t max_degree, std::size_t min_degree = 0) {
  std::uniform_int_distribution<std::size_t> deg(min_degree, max_degree);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t d = deg(rng);
  std::vector<complex> c(d + 1);
  for (auto& x : c) {
    const double re = u(rng);
    x = complex(re, u(rng));
  }
  return Series(std::move(c));
}

/// Uniform point in the closed disk of the given radius.
inline complex random_disk_point(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

/// Random polynomial rescaled so its sampled sup-norm is max_sup * t with t
/// uniform in [0.25, 1). A 1e-3 safety factor covers the sampling error.
inline Series random_self_map(Rng& rng, std::size_t max_degree, double max_sup) {
  std::uniform_real_distribution<double> u(0.25, 1.0);
  for (;;) {
    const Series p = random_polynomial(rng, max_degree);
    const double s = sup_norm(p);
    if (s == 0.0) {
      continue;
    }
    const double target = max_sup * (1.0 - 1e-3) * u(rng);
    std::vector<complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) {
      x *= target / s;
    }
    return Series(std::move(c));
  }
}

}  // namespace h22
