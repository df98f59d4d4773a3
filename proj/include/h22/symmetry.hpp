#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "h22/algebra.hpp"
#include "h22/operators.hpp"
#include "h22/series.hpp"
#include "h22/space.hpp"

namespace h22 {

/// The conjugation J(sum a_n z^n) = sum conj(a_n) z^n. It fixes every e_n and
/// maps K_w to K_{conj(w)}.
inline Series apply_J(const Series& f) {
  std::vector<complex> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) {
    x = std::conj(x);
  }
  return Series(std::move(c));
}

inline OperatorMatrix transposed(const OperatorMatrix& T) {
  OperatorMatrix R = T;
  R.entries = T.entries.transpose();
  return R;
}

/// max_{m,n <= M} |T(m,n) - T(n,m)|.
///
/// Since J fixes the basis, T is J-symmetric exactly when its matrix is
/// symmetric (plain transpose, not conjugate transpose).
inline double symmetry_residual(const OperatorMatrix& T, std::size_t inner_block) {
  if (inner_block > T.safe_block()) {
    throw std::out_of_range("symmetry_residual: block " + std::to_string(inner_block) + " exceeds safe block " +
                            std::to_string(T.safe_block()));
  }
  double worst = 0.0;
  for (std::size_t m = 0; m <= inner_block; ++m) {
    for (std::size_t n = m + 1; n <= inner_block; ++n) {
      worst = std::max(worst, std::abs(T(m, n) - T(n, m)));
    }
  }
  return worst;
}

using PointPair = std::pair<complex, complex>;

/// Pairs (z, w) drawn from a polar grid: `radii` radii evenly spaced in
/// (0, r_max] times `angles` angles from 0, every ordered pair of grid points.
inline std::vector<PointPair> tensor_grid(std::size_t radii, std::size_t angles, double r_max) {
  std::vector<complex> pts;
  pts.reserve(radii * angles);
  for (std::size_t i = 1; i <= radii; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(radii);
    for (std::size_t j = 0; j < angles; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles)));
    }
  }
  std::vector<PointPair> pairs;
  pairs.reserve(pts.size() * pts.size());
  for (const auto& z : pts) {
    for (const auto& w : pts) {
      pairs.emplace_back(z, w);
    }
  }
  return pairs;
}

/// Default kernel-test grid: 12 radii in [0.1, 0.7] x 12 angles (all ordered
/// pairs) plus 50 seeded random pairs with |z|, |w| <= 0.7.
inline std::vector<PointPair> default_grid(std::uint64_t seed = 7) {
  std::vector<complex> pts;
  for (std::size_t i = 0; i < 12; ++i) {
    const double r = 0.1 + 0.6 * static_cast<double>(i) / 11.0;
    for (std::size_t j = 0; j < 12; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / 12.0));
    }
  }
  std::vector<PointPair> pairs;
  pairs.reserve(pts.size() * pts.size() + 50);
  for (const auto& z : pts) {
    for (const auto& w : pts) {
      pairs.emplace_back(z, w);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto point = [&] { return std::polar(0.7 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)); };
  for (int k = 0; k < 50; ++k) {
    const complex z = point();
    pairs.emplace_back(z, point());
  }
  return pairs;
}

struct KernelResidual {
  double residual = 0.0;
  /// Bound on the part of either side dropped by truncating the kernel sums.
  double tail_bound = 0.0;
  std::size_t pairs = 0;
};

namespace detail {
/// sum_{n<=N} kappa(n) x^n and the bound on the dropped tail.
inline std::pair<complex, double> kernel_sum(complex x, std::size_t N, SpaceWeights space) {
  complex acc{};
  for (std::size_t n = N + 1; n-- > 0;) {
    acc = acc * x + space.kappa_value(n);
  }
  const double r = std::abs(x);
  const double tail = space.kappa_value(N + 1) * std::pow(r, static_cast<double>(N + 1)) / (1.0 - r);
  return {acc, tail};
}
}  // namespace detail

/// max over the grid of |Psi(z) K_{conj w}(phi(z)) - Psi(w) K_{conj phi(w)}(z)|,
/// i.e. |Psi(z) sum kappa(n) (phi(z) w)^n - Psi(w) sum kappa(n) (z phi(w))^n|.
inline KernelResidual kernel_identity_residual(const Series& psi, const Series& phi, std::span<const PointPair> grid,
                                               std::size_t kernel_trunc, SpaceWeights space = h22_space) {
  KernelResidual out;
  out.pairs = grid.size();
  for (const auto& [z, w] : grid) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
      throw std::domain_error("kernel_identity_residual: grid point outside the disk");
    }
    const complex phz = evaluate(phi, z);
    const complex phw = evaluate(phi, w);
    if (!(std::abs(phz) < 1.0) || !(std::abs(phw) < 1.0)) {
      throw std::domain_error("kernel_identity_residual: |phi| >= 1 at a grid point");
    }
    const complex psz = evaluate(psi, z);
    const complex psw = evaluate(psi, w);
    const auto [kl, tl] = detail::kernel_sum(phz * w, kernel_trunc, space);
    const auto [kr, tr] = detail::kernel_sum(z * phw, kernel_trunc, space);
    out.residual = std::max(out.residual, std::abs(psz * kl - psw * kr));
    out.tail_bound = std::max(out.tail_bound, std::abs(psz) * tl + std::abs(psw) * tr);
  }
  return out;
}

/// Coefficient of z^j w^k on each side of the kernel identity:
/// left = kappa(k) [z^j](Psi phi^k), right = kappa(j) [z^k](Psi phi^j).
inline std::pair<complex, complex> kernel_identity_coefficients(const Series& psi, const Series& phi, std::size_t j,
                                                                std::size_t k, SpaceWeights space = h22_space) {
  const std::size_t N = std::max(j, k);
  const complex left = space.kappa_value(k) * cauchy_product(psi, power(phi, k, N), N)[j];
  const complex right = space.kappa_value(j) * cauchy_product(psi, power(phi, j, N), N)[k];
  return {left, right};
}

struct PQ {
  Series p;
  Series q;
};

/// p(z) = (2/243) sum kappa(n) a0^n z^n,  q(z) = (1/32) sum_{n>=1} n kappa(n) a0^{n-1} z^n.
inline PQ build_p_q(complex a0, std::size_t N) {
  if (!(std::abs(a0) < 1.0)) {
    throw std::domain_error("build_p_q: |a0| must be < 1");
  }
  std::vector<complex> p(N + 1);
  std::vector<complex> q(N + 1);
  complex pw = 1.0;  // a0^n
  complex prev = 0.0;  // a0^{n-1}
  for (std::size_t n = 0; n <= N; ++n) {
    const double k = h22_space.kappa_value(n);
    p[n] = (2.0 / 243.0) * k * pw;
    if (n >= 1) {
      q[n] = (1.0 / 32.0) * static_cast<double>(n) * k * prev;
    }
    prev = pw;
    pw *= a0;
  }
  return {Series(std::move(p)), Series(std::move(q))};
}

/// c_1..c_N from q/p = sum c_i a0^{i-1} z^i. Element i-1 holds c_i.
inline std::vector<double> c_expansion(complex a0, std::size_t N) {
  if (N == 0) {
    return {};
  }
  if (a0 == complex{} && N >= 2) {
    throw std::domain_error("c_expansion: c_i for i >= 2 is undefined at a0 = 0");
  }
  const auto [p, q] = build_p_q(a0, N);
  const Series h = divide(q, p, N);
  std::vector<double> c;
  c.reserve(N);
  complex scale = 1.0;  // a0^{i-1}
  for (std::size_t i = 1; i <= N; ++i) {
    const complex ci = h[i] / scale;
    if (std::abs(ci.imag()) > 1e-12 * std::max(1.0, std::abs(ci))) {
      throw std::runtime_error("c_expansion: c_" + std::to_string(i) + " has imaginary part " +
                               std::to_string(ci.imag()));
    }
    c.push_back(ci.real());
    scale *= a0;
  }
  return c;
}

struct SymbolParams {
  complex a0;  // phi(0)
  complex a1;  // phi'(0)
  complex a2;  // 3888 Psi(0)
};

struct Symbols {
  Series phi;
  Series psi;
};

/// phi = a0 + a1 q/p,  Psi = a2 p, both truncated at N.
inline Symbols symbols_from_params(const SymbolParams& params, std::size_t N) {
  const auto [p, q] = build_p_q(params.a0, N);
  const Series ratio = divide(q, p, N);
  std::vector<complex> phi(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    phi[n] = params.a1 * ratio[n];
  }
  phi[0] += params.a0;
  std::vector<complex> psi(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    psi[n] = params.a2 * p[n];
  }
  return {Series(std::move(phi)), Series(std::move(psi))};
}

struct Z3wComparison {
  complex lhs;
  complex rhs;
};

/// The z^3 w coefficient of each side of the kernel identity for the symbols
/// built from (a0, a1), normalized as in the expansion with leading factor
/// sum kappa(n) a0^n z^n.
inline Z3wComparison z3w_coefficient_check(complex a0, complex a1) {
  if (!(std::abs(a0) < 1.0)) {
    throw std::domain_error("z3w_coefficient_check: |a0| must be < 1");
  }
  if (a0 == complex{}) {
    // Every term carries a0^2 or a0^4.
    return {complex{}, complex{}};
  }
  const auto c = c_expansion(a0, 3);
  const complex a02 = a0 * a0;
  const complex a04 = a02 * a02;
  const double k0 = 1.0 / 32.0;      // 1/2^5
  const double k1 = 2.0 / 243.0;     // 2/3^5
  const double k2 = 3.0 / 1024.0;    // 3/4^5
  const double k3 = 4.0 / 3125.0;    // 4/5^5
  const complex lhs = k1 * (k3 * a04 + k2 * a02 * a1 * c[0] + k1 * a02 * a1 * c[1] + k0 * a02 * a1 * c[2]);
  const complex rhs = k3 * (k1 * a04 + (3.0 / 32.0) * a02 * a1 * c[0]);
  return {lhs, rhs};
}

}  // namespace h22
