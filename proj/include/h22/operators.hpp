#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "h22/algebra.hpp"
#include "h22/series.hpp"
#include "h22/space.hpp"

namespace h22 {

enum class OperatorKind { multiplication, composition, weighted_composition };

struct OperatorDescriptor {
  OperatorKind kind = OperatorKind::multiplication;
  /// f for M_f, phi for C_phi and W_{Psi,phi}.
  Series symbol;
  /// Psi for W_{Psi,phi}; unused otherwise.
  Series weight;
  /// Set when the matrix is the formal adjoint of the described operator.
  bool adjoint = false;

  std::string describe() const {
    std::string s;
    switch (kind) {
      case OperatorKind::multiplication:
        s = "M_f";
        break;
      case OperatorKind::composition:
        s = "C_phi";
        break;
      case OperatorKind::weighted_composition:
        s = "W_{Psi,phi}";
        break;
    }
    return adjoint ? "adjoint(" + s + ")" : s;
  }
};

/// Truncated matrix T(m, n) = <T e_n, e_m> over 0 <= m, n <= N.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  SpaceWeights space;
  OperatorDescriptor descriptor;
  std::size_t truncation_order = 0;
  /// Rows/columns within `margin` of N are not used in comparisons.
  std::size_t margin = 0;
  /// First column whose image runs past degree N (multiplication only).
  std::optional<std::size_t> first_truncated_column;
  std::vector<std::string> warnings;

  std::size_t safe_block() const { return truncation_order - margin; }
  complex operator()(std::size_t m, std::size_t n) const {
    return entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }
};

namespace detail {

/// Symbols that fill their whole order are truncations of infinite series.
inline std::size_t symbol_margin(std::size_t symbol_degree, std::size_t N) { return std::min(symbol_degree, N / 2); }

inline void check_self_map(const Series& phi, OperatorMatrix& T) {
  const double s = sup_norm(phi);
  if (s > 1.0 + 1e-9) {
    T.warnings.push_back("symbol sup-norm estimate " + std::to_string(s) + " exceeds 1; not a self-map of the disk");
  }
}

/// Fills column n from the coefficients of T(z^n) (unnormalized), applying
/// sqrt(kappa(n)) for e_n and sqrt(w(m)) for the row.
inline void fill_column(OperatorMatrix& T, std::size_t n, const Series& image_of_monomial) {
  const std::size_t N = T.truncation_order;
  const double kn = T.space.kappa_value(n);
  for (std::size_t m = 0; m <= N; ++m) {
    // One rounding in the product keeps diagonal scale factors at 1.
    T.entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
        image_of_monomial[m] * std::sqrt(kn * T.space.weight_value(m));
  }
}

inline OperatorMatrix blank(std::size_t N, SpaceWeights space, OperatorDescriptor d) {
  OperatorMatrix T;
  const auto dim = static_cast<Eigen::Index>(N + 1);
  T.entries = Eigen::MatrixXcd::Zero(dim, dim);
  T.space = space;
  T.descriptor = std::move(d);
  T.truncation_order = N;
  return T;
}

}  // namespace detail

inline OperatorMatrix multiplication_matrix(const Series& f, std::size_t N, SpaceWeights space = h22_space) {
  auto T = detail::blank(N, space, {OperatorKind::multiplication, f, Series{}, false});
  const std::size_t d = f.degree();
  T.margin = detail::symbol_margin(d, N);
  if (d > 0 && d <= N) {
    T.first_truncated_column = N - d + 1;
  } else if (d > N) {
    T.first_truncated_column = 0;
  }
  for (std::size_t n = 0; n <= N; ++n) {
    // f * z^n
    std::vector<complex> c(N + 1);
    for (std::size_t k = 0; k + n <= N && k <= d; ++k) {
      c[k + n] = f[k];
    }
    detail::fill_column(T, n, Series(std::move(c)));
  }
  return T;
}

inline OperatorMatrix composition_matrix(const Series& phi, std::size_t N, SpaceWeights space = h22_space) {
  auto T = detail::blank(N, space, {OperatorKind::composition, phi, Series{}, false});
  T.margin = detail::symbol_margin(phi.degree(), N);
  detail::check_self_map(phi, T);
  Series pw = Series::constant(1.0).truncated(N);
  for (std::size_t n = 0; n <= N; ++n) {
    detail::fill_column(T, n, pw);
    if (n < N) {
      pw = cauchy_product(pw, phi, N);
    }
  }
  return T;
}

inline OperatorMatrix weighted_composition_matrix(const Series& psi, const Series& phi, std::size_t N,
                                                  SpaceWeights space = h22_space) {
  auto T = detail::blank(N, space, {OperatorKind::weighted_composition, phi, psi, false});
  T.margin = detail::symbol_margin(std::max(phi.degree(), psi.degree()), N);
  detail::check_self_map(phi, T);
  Series pw = psi.truncated(N);
  for (std::size_t n = 0; n <= N; ++n) {
    detail::fill_column(T, n, pw);
    if (n < N) {
      pw = cauchy_product(pw, phi, N);
    }
  }
  return T;
}

inline OperatorMatrix adjoint(const OperatorMatrix& T) {
  OperatorMatrix A = T;
  A.entries = T.entries.adjoint();
  A.descriptor.adjoint = !T.descriptor.adjoint;
  A.first_truncated_column.reset();
  return A;
}

/// Largest singular value of the truncated matrix by power iteration on T*T.
///
/// Deterministic start (seed 42); stops when the Rayleigh quotient changes by
/// less than 1e-12 relative. The result is a lower bound for the operator norm.
inline double operator_norm_estimate(const OperatorMatrix& T, int iters = 300) {
  if (iters < 1) {
    throw std::invalid_argument("operator_norm_estimate: iters must be >= 1");
  }
  const Eigen::Index dim = T.entries.cols();
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    x(i) = complex(gauss(rng), gauss(rng));
  }
  x.normalize();
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXcd y = T.entries.adjoint() * (T.entries * x);
    const double next = y.norm();
    if (next == 0.0) {
      return 0.0;
    }
    x = y / next;
    const bool converged = it > 0 && std::abs(next - lambda) <= 1e-12 * next;
    lambda = next;
    if (converged) {
      break;
    }
  }
  return (T.entries * x).norm();
}

struct HsPartialSum {
  /// 1 + sum_{n=1}^{N} kappa(n) ||phi^n||^2.
  double partial = 0.0;
  std::size_t n_terms = 0;
  /// running[k] is the partial sum through n = k.
  std::vector<double> running;
  /// 1 + 2 ||phi||^2 / (1 - ||phi||_inf^2); only for H22.
  std::optional<double> closed_form_bound;
  double phi_sup = 0.0;
};

/// Hilbert-Schmidt partial sum of C_phi over the first N+1 basis vectors.
/// Powers of phi are formed exactly (no truncation).
inline HsPartialSum hs_partial_sum(const Series& phi, std::size_t N, SpaceWeights space = h22_space) {
  const Series p = phi.trimmed();
  HsPartialSum out;
  out.phi_sup = sup_norm(p);
  if (!(out.phi_sup < 1.0)) {
    throw std::domain_error("hs_partial_sum: sup-norm estimate of phi is >= 1");
  }
  out.n_terms = N + 1;
  out.running.reserve(N + 1);
  double acc = 1.0;
  out.running.push_back(acc);
  Series pw = Series::constant(1.0);
  for (std::size_t n = 1; n <= N; ++n) {
    pw = cauchy_product(pw, p);
    acc += space.kappa_value(n) * norm_sq(pw, space);
    out.running.push_back(acc);
  }
  out.partial = acc;
  if (space == h22_space) {
    out.closed_form_bound = 1.0 + 2.0 * norm_sq(p, space) / (1.0 - out.phi_sup * out.phi_sup);
  }
  return out;
}

}  // namespace h22
