#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "h22/algebra.hpp"
#include "h22/series.hpp"

namespace h22 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SpaceKind { hardy, bergman, h21, h22 };

/// A weighted Hardy-type space: ||f||^2 = sum w(n) |a_n|^2 with kernel
/// coefficients kappa(n) = 1/w(n).
class SpaceWeights {
public:
  constexpr SpaceWeights() = default;
  constexpr explicit SpaceWeights(SpaceKind kind) : kind_(kind) {}

  constexpr SpaceKind kind() const noexcept { return kind_; }

  constexpr std::string_view name() const noexcept {
    switch (kind_) {
      case SpaceKind::hardy:
        return "hardy";
      case SpaceKind::bergman:
        return "bergman";
      case SpaceKind::h21:
        return "h21";
      case SpaceKind::h22:
        return "h22";
    }
    return "h22";
  }

  static SpaceWeights parse(std::string_view name) {
    for (auto k : {SpaceKind::hardy, SpaceKind::bergman, SpaceKind::h21, SpaceKind::h22}) {
      if (SpaceWeights(k).name() == name) {
        return SpaceWeights(k);
      }
    }
    throw std::invalid_argument("unknown space '" + std::string(name) + "'");
  }

  /// Exact weight w(n).
  Rational weight(std::size_t n) const {
    const Integer m(n);
    switch (kind_) {
      case SpaceKind::hardy:
        return Rational(1);
      case SpaceKind::bergman:
        return Rational(Integer(1), m + 1);
      case SpaceKind::h21:
        return Rational(boost::multiprecision::pow(m + 2, 3), m + 1);
      case SpaceKind::h22:
        return Rational(boost::multiprecision::pow(m + 2, 5), m + 1);
    }
    return Rational(1);
  }

  Rational kappa(std::size_t n) const { return 1 / weight(n); }

  double weight_value(std::size_t n) const {
    const auto& t = table();
    return n < t.size() ? t[n] : weight(n).convert_to<double>();
  }

  double kappa_value(std::size_t n) const { return 1.0 / weight_value(n); }

  friend constexpr bool operator==(SpaceWeights, SpaceWeights) = default;

private:
  static constexpr std::size_t kTableSize = 1 << 14;

  const std::vector<double>& table() const;

  SpaceKind kind_ = SpaceKind::h22;
};

namespace detail {
inline std::vector<double> build_weight_table(SpaceKind kind, std::size_t size) {
  std::vector<double> t(size);
  const SpaceWeights s(kind);
  for (std::size_t n = 0; n < size; ++n) {
    t[n] = s.weight(n).convert_to<double>();
  }
  return t;
}
}  // namespace detail

inline const std::vector<double>& SpaceWeights::table() const {
  static const std::array<std::vector<double>, 4> tables = {
      detail::build_weight_table(SpaceKind::hardy, kTableSize),
      detail::build_weight_table(SpaceKind::bergman, kTableSize),
      detail::build_weight_table(SpaceKind::h21, kTableSize),
      detail::build_weight_table(SpaceKind::h22, kTableSize),
  };
  return tables[static_cast<std::size_t>(kind_)];
}

inline constexpr SpaceWeights hardy_space{SpaceKind::hardy};
inline constexpr SpaceWeights bergman_space{SpaceKind::bergman};
inline constexpr SpaceWeights h21_space{SpaceKind::h21};
inline constexpr SpaceWeights h22_space{SpaceKind::h22};

inline Rational weight(SpaceWeights space, std::size_t n) { return space.weight(n); }

/// sum w(n) a_n conj(b_n), zero-extending the shorter series.
inline complex inner_product(const Series& f, const Series& g, SpaceWeights space = h22_space) {
  const std::size_t N = std::min(f.order(), g.order());
  complex acc{};
  for (std::size_t n = 0; n <= N; ++n) {
    acc += space.weight_value(n) * f[n] * std::conj(g[n]);
  }
  return acc;
}

inline double norm_sq(const Series& f, SpaceWeights space = h22_space) {
  double acc = 0.0;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    acc += space.weight_value(n) * std::norm(f[n]);
  }
  return acc;
}

inline double norm(const Series& f, SpaceWeights space = h22_space) { return std::sqrt(norm_sq(f, space)); }

/// e_n = sqrt(kappa(n)) z^n.
inline Series basis_vector(std::size_t n, SpaceWeights space = h22_space) {
  return Series::monomial(n, std::sqrt(space.kappa_value(n)));
}

/// The H22 squared norm split into its Hardy/Bergman derivative terms.
struct NormComponents {
  double hardy_f = 0.0;      // 31 ||f||^2_{H^2}
  double hardy_df = 0.0;     // 41 ||f'||^2_{H^2}
  double hardy_d2f = 0.0;    //    ||f''||^2_{H^2}
  double bergman_f = 0.0;    //    ||f||^2_{A^2}
  double bergman_df = 0.0;   // 49 ||f'||^2_{A^2}
  double bergman_d2f = 0.0;  // 11 ||f''||^2_{A^2}

  std::array<double, 6> terms() const { return {hardy_f, hardy_df, hardy_d2f, bergman_f, bergman_df, bergman_d2f}; }

  double total() const {
    return hardy_f + hardy_df + hardy_d2f + bergman_f + bergman_df + bergman_d2f;
  }
};

inline NormComponents norm_sq_components(const Series& f) {
  const Series df = differentiate(f, 1);
  const Series d2f = differentiate(f, 2);
  NormComponents c;
  c.hardy_f = 31.0 * norm_sq(f, hardy_space);
  c.hardy_df = 41.0 * norm_sq(df, hardy_space);
  c.hardy_d2f = norm_sq(d2f, hardy_space);
  c.bergman_f = norm_sq(f, bergman_space);
  c.bergman_df = 49.0 * norm_sq(df, bergman_space);
  c.bergman_d2f = 11.0 * norm_sq(d2f, bergman_space);
  return c;
}

/// Smallest N with sum_{n>N} kappa(n) |w|^{2n} below tol, from a geometric
/// bound on the tail.
inline std::size_t default_kernel_order(complex w_point, SpaceWeights space = h22_space, double tol = 1e-15) {
  const double r2 = std::norm(w_point);
  if (!(r2 < 1.0)) {
    throw std::domain_error("kernel: |w| must be < 1");
  }
  if (r2 == 0.0) {
    return 0;
  }
  double rpow = r2;  // r^{2(N+1)}
  for (std::size_t N = 0;; ++N) {
    const double k1 = space.kappa_value(N + 1);
    const double ratio = std::max(1.0, space.kappa_value(N + 2) / k1);
    const double q = r2 * ratio;
    if (q < 1.0) {
      const double bound = k1 * rpow / (1.0 - q);
      if (bound < tol) {
        return N;
      }
    }
    rpow *= r2;
    if (rpow == 0.0) {
      return N + 1;
    }
  }
}

/// K_w truncated at N: coefficient n is kappa(n) conj(w)^n.
inline Series kernel_series(complex w_point, std::size_t N, SpaceWeights space = h22_space) {
  if (!(std::norm(w_point) < 1.0)) {
    throw std::domain_error("kernel: |w| must be < 1");
  }
  std::vector<complex> c(N + 1);
  const complex wb = std::conj(w_point);
  complex pw = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    c[n] = space.kappa_value(n) * pw;
    pw *= wb;
  }
  return Series(std::move(c));
}

inline Series kernel_series(complex w_point, SpaceWeights space = h22_space) {
  return kernel_series(w_point, default_kernel_order(w_point, space), space);
}

}  // namespace h22
