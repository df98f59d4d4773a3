#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace h22 {

using complex = std::complex<double>;

/// A truncated power series a_0 + a_1 z + ... + a_N z^N.
///
/// The coefficients are taken as exact; anything past the order is treated as
/// discarded. Reads past the order return zero so binary operations can zero
/// extend the shorter operand.
class Series {
public:
  Series() : coeffs_(1, complex{}) {}

  explicit Series(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      coeffs_.push_back(complex{});
    }
    for (const auto& c : coeffs_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw std::invalid_argument("Series: non-finite coefficient");
      }
    }
  }

  Series(std::initializer_list<complex> coeffs) : Series(std::vector<complex>(coeffs)) {}

  static Series zero(std::size_t order) { return Series(std::vector<complex>(order + 1)); }

  static Series constant(complex c) { return Series(std::vector<complex>{c}); }

  static Series monomial(std::size_t n, complex c = 1.0) {
    std::vector<complex> v(n + 1);
    v[n] = c;
    return Series(std::move(v));
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  /// Index of the last non-zero coefficient (0 for the zero series).
  std::size_t degree() const noexcept {
    for (std::size_t n = coeffs_.size(); n-- > 0;) {
      if (coeffs_[n] != complex{}) {
        return n;
      }
    }
    return 0;
  }

  bool is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const complex& c) { return c == complex{}; });
  }

  complex operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : complex{}; }

  std::span<const complex> coeffs() const noexcept { return coeffs_; }

  /// Copy with order exactly N (drops or zero-extends).
  Series truncated(std::size_t N) const {
    std::vector<complex> v(N + 1);
    std::copy_n(coeffs_.begin(), std::min(N + 1, coeffs_.size()), v.begin());
    return Series(std::move(v));
  }

  /// Copy with trailing zero coefficients removed.
  Series trimmed() const { return truncated(degree()); }

  friend bool operator==(const Series&, const Series&) = default;

private:
  std::vector<complex> coeffs_;
};

/// Horner evaluation of the partial sum at z.
inline complex evaluate(const Series& f, complex z) {
  const auto c = f.coeffs();
  complex acc{};
  for (std::size_t n = c.size(); n-- > 0;) {
    acc = acc * z + c[n];
  }
  return acc;
}

/// Sum of |a_n|; an upper bound for the sup norm on the closed disk.
inline double coefficient_abs_sum(const Series& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) {
    s += std::abs(c);
  }
  return s;
}

}  // namespace h22
