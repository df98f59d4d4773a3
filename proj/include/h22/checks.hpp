#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "h22/algebra.hpp"
#include "h22/operators.hpp"
#include "h22/random.hpp"
#include "h22/report.hpp"
#include "h22/series.hpp"
#include "h22/space.hpp"
#include "h22/symmetry.hpp"
#include "h22/zeta.hpp"

namespace h22 {

// Relation strings recorded in inputs["relation"].
inline constexpr const char* kLe = "lhs <= rhs + tolerance";
inline constexpr const char* kEq = "|lhs - rhs| <= tolerance";
inline constexpr const char* kGt = "lhs > rhs + tolerance";
inline constexpr const char* kBetween = "rhs[0] - tolerance <= lhs <= rhs[1] + tolerance";

namespace detail {

template <class F>
CheckReport timed(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r = body();
  const auto t1 = std::chrono::steady_clock::now();
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

/// Each check draws from its own stream so suites stay reproducible when
/// checks are added or reordered.
inline Rng stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return Rng(seq);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Space structure

/// (n+2)^5 - 1 == (n+1)(31 + 49n + 41n^2 + 11n^2(n-1) + n^2(n-1)^2) for 0 <= n <= n_max,
/// in exact integers.
inline CheckReport check_weight_identity(std::size_t n_max = 10000) {
  return detail::timed([&] {
    std::size_t violations = 0;
    for (std::size_t k = 0; k <= n_max; ++k) {
      const Integer n(k);
      const Integer lhs = boost::multiprecision::pow(n + 2, 5) - 1;
      const Integer poly = 31 + 49 * n + 41 * n * n + 11 * n * n * (n - 1) + n * n * (n - 1) * (n - 1);
      violations += (lhs != (n + 1) * poly) ? 1 : 0;
      violations += (h22_space.weight(k) * h22_space.kappa(k) != 1) ? 1 : 0;
    }
    CheckReport r;
    r.check_id = "basis.weight_identity";
    r.inputs = {{"n_max", n_max}, {"relation", kEq}, {"arithmetic", "exact integer"}};
    r.lhs = violations;
    r.rhs = 0;
    r.tolerance = 0.0;
    r.verdict = detail::verdict_of(violations == 0);
    return r;
  });
}

inline CheckReport check_gram(std::size_t N = 128) {
  return detail::timed([&] {
    std::vector<Series> e;
    e.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      e.push_back(basis_vector(n));
    }
    double worst = 0.0;
    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t n = 0; n <= N; ++n) {
        const complex g = inner_product(e[n], e[m]);
        worst = std::max(worst, std::abs(g - (m == n ? 1.0 : 0.0)));
      }
    }
    CheckReport r;
    r.check_id = "basis.gram_orthonormality";
    r.inputs = {{"N", N}, {"relation", kLe}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(worst <= 1e-12);
    return r;
  });
}

/// Six-term derivative decomposition against the closed-form weight.
inline CheckReport check_norm_decomposition(std::uint64_t seed, std::size_t count = 200, std::size_t max_degree = 64) {
  return detail::timed([&] {
    auto rng = detail::stream(seed, 11);
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Series f = random_polynomial(rng, max_degree);
      const double total = norm_sq_components(f).total();
      const double direct = inner_product(f, f).real();
      worst = std::max(worst, std::abs(total - direct) / (1.0 + std::abs(total)));
    }
    CheckReport r;
    r.check_id = "basis.norm_decomposition";
    r.inputs = {{"seed", seed}, {"count", count}, {"max_degree", max_degree}, {"relation", kLe},
                {"lhs_meaning", "max |six-term total - weighted sum| / (1 + |total|)"}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(worst <= 1e-12);
    return r;
  });
}

/// a_n = sqrt(kappa(n)): in H^2 with norm^2 -> zeta(4) - zeta(5), not in H22
/// since every H22 term equals 1.
inline CheckReport check_inclusion_example(std::size_t N = 1000) {
  return detail::timed([&] {
    if (N < 10) {
      throw std::invalid_argument("check_inclusion_example: N must be >= 10");
    }
    std::vector<complex> a(N + 1);
    Rational exact_h22 = 0;
    for (std::size_t n = 0; n <= N; ++n) {
      a[n] = std::sqrt(h22_space.kappa_value(n));
      exact_h22 += h22_space.weight(n) * h22_space.kappa(n);
    }
    const Series f(std::move(a));
    const double h2 = norm_sq(f, hardy_space);
    const double h22 = norm_sq(f, h22_space);
    const double expected_h2 = constants().gap - tail_bound(N).direct;
    const bool exact_ok = exact_h22 == Rational(N + 1);
    const bool h2_ok = std::abs(h2 - expected_h2) <= 1e-9;
    const bool h22_ok = std::abs(h22 - static_cast<double>(N + 1)) <= 1e-9 * static_cast<double>(N + 1);
    CheckReport r;
    r.check_id = "basis.inclusion_example";
    r.inputs = {{"N", N},
                {"relation", kEq},
                {"lhs_meaning", "partial H^2 norm^2"},
                {"rhs_meaning", "zeta(4) - zeta(5) - tail(N)"},
                {"h22_partial_exact", exact_h22.str()},
                {"h22_partial_expected", N + 1},
                {"h22_partial_double", h22}};
    r.lhs = h2;
    r.rhs = expected_h2;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(exact_ok && h2_ok && h22_ok);
    return r;
  });
}

/// 0.04539 agrees with the gap to 5 decimals by truncation (it is
/// also 1.08232 - 1.03693); rounding gives 0.04540.
inline CheckReport gap_digits(const Constants& c) {
  const double truncated = std::floor(c.gap * 1e5) / 1e5;
  CheckReport r;
  r.check_id = "constants.gap";
  r.inputs = {{"relation", kEq},
              {"lhs_meaning", "zeta(4) - zeta(5) truncated to 5 decimals"},
              {"gap", c.gap},
              {"gap_rounded_5", std::round(c.gap * 1e5) / 1e5},
              {"difference_of_rounded_zetas", std::round(c.zeta4 * 1e5) / 1e5 - std::round(c.zeta5 * 1e5) / 1e5}};
  r.lhs = truncated;
  r.rhs = 0.04539;
  r.tolerance = 1e-12;
  r.verdict = detail::verdict_of(std::abs(truncated - 0.04539) <= 1e-12);
  r.runtime_ms = 0;
  return r;
}

inline std::vector<CheckReport> check_constants() {
  const auto& c = constants();
  auto make = [](std::string id, double lhs, double rhs, double tol, std::string meaning) {
    CheckReport r;
    r.check_id = std::move(id);
    r.inputs = {{"relation", kEq}, {"lhs_meaning", std::move(meaning)}};
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.verdict = detail::verdict_of(std::abs(lhs - rhs) <= tol);
    r.runtime_ms = 0;
    return r;
  };
  // Rounding to 5 decimals means agreeing to within half a unit in the 5th place.
  return {
      make("constants.zeta4", c.zeta4, 1.08232, 5e-6, "zeta(4) by summation with integral tail"),
      make("constants.zeta5", c.zeta5, 1.03693, 5e-6, "zeta(5) by summation with integral tail"),
      make("constants.zeta4_closed_form", c.zeta4, std::pow(std::numbers::pi, 4) / 90.0, 1e-14,
           "zeta(4) by summation against pi^4/90"),
      gap_digits(c),
      make("constants.sharp_identity", c.sharp * c.sharp + c.zeta5, c.zeta4, 1e-12, "sharp^2 + zeta(5)"),
  };
}

inline std::vector<CheckReport> check_tail_bound() {
  std::vector<CheckReport> out;
  out.push_back(detail::timed([] {
    const auto t = tail_bound(50);
    CheckReport r;
    r.check_id = "basis.tail_bound.tail_two_routes";
    r.inputs = {{"N", 50}, {"relation", kEq}, {"lhs_meaning", "direct tail sum"},
                {"rhs_meaning", "(4 psi3(N+3) + psi4(N+3)) / 24"}};
    r.lhs = t.direct;
    r.rhs = t.polygamma_form;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(std::abs(t.direct - t.polygamma_form) <= 1e-12);
    return r;
  }));
  out.push_back(detail::timed([] {
    const auto t = tail_bound(0);
    const double expected = constants().gap - 1.0 / 32.0;
    CheckReport r;
    r.check_id = "basis.tail_bound.tail_at_zero";
    r.inputs = {{"N", 0}, {"relation", kEq}, {"rhs_meaning", "zeta(4) - zeta(5) - 1/32"}};
    r.lhs = t.direct;
    r.rhs = expected;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(std::abs(t.direct - expected) <= 1e-12);
    return r;
  }));
  out.push_back(detail::timed([] {
    const double t1 = tail_bound(1).direct;
    const double t10 = tail_bound(10).direct;
    const double t100 = tail_bound(100).direct;
    CheckReport r;
    r.check_id = "basis.tail_bound.tail_decreasing";
    r.inputs = {{"relation", "lhs[2] < lhs[1] < lhs[0]"}, {"N", json::array({1, 10, 100})}};
    r.lhs = json::array({t1, t10, t100});
    r.rhs = nullptr;
    r.tolerance = 0.0;
    r.verdict = detail::verdict_of(t100 < t10 && t10 < t1 && t100 > 0.0);
    return r;
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Kernels

inline CheckReport check_reproducing(std::uint64_t seed, std::size_t count = 100, std::size_t kernel_trunc = 400) {
  return detail::timed([&] {
    auto rng = detail::stream(seed, 21);
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Series f = random_polynomial(rng, 32);
      const complex w = random_disk_point(rng, 0.9);
      const Series K = kernel_series(w, kernel_trunc);
      worst = std::max(worst, std::abs(inner_product(f, K) - evaluate(f, w)));
    }
    CheckReport r;
    r.check_id = "kernels.reproducing";
    r.inputs = {{"seed", seed}, {"count", count}, {"kernel_trunc", kernel_trunc}, {"max_degree", 32},
                {"w_radius", 0.9}, {"relation", kLe}, {"lhs_meaning", "max |<f, K_w> - f(w)|"}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(worst <= 1e-9);
    return r;
  });
}

inline CheckReport check_kernel_self(complex w = 0.3, std::size_t N = 200) {
  return detail::timed([&] {
    const Series K = kernel_series(w, N);
    const double norm2 = inner_product(K, K).real();
    const complex at_w = evaluate(K, w);
    CheckReport r;
    r.check_id = "kernels.self_value";
    r.inputs = {{"w", to_json_value(w)}, {"N", N}, {"relation", kEq}, {"lhs_meaning", "K_w(w)"},
                {"rhs_meaning", "||K_w||^2"}};
    r.lhs = to_json_value(at_w);
    r.rhs = norm2;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(std::abs(at_w - norm2) <= 1e-12);
    return r;
  });
}

inline CheckReport check_conjugation_kernel(complex w = complex(0.0, 0.3), std::size_t N = 200) {
  return detail::timed([&] {
    const Series lhs = apply_J(kernel_series(w, N));
    const Series rhs = kernel_series(std::conj(w), N);
    double worst = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
      worst = std::max(worst, std::abs(lhs[n] - rhs[n]));
    }
    CheckReport r;
    r.check_id = "kernels.conjugation";
    r.inputs = {{"w", to_json_value(w)}, {"N", N}, {"relation", kLe},
                {"lhs_meaning", "max_n |(J K_w)_n - (K_conj(w))_n|"}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-15;
    r.verdict = detail::verdict_of(worst <= 1e-15);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Sup-norm and product inequalities

inline CheckReport check_supnorm_bound(const Series& f, const std::string& label) {
  return detail::timed([&] {
    const double sup = sup_norm(f);
    const double bound = constants().sharp * norm(f);
    CheckReport r;
    r.check_id = "thm31.supnorm_bound." + label;
    r.inputs = {{"f", label}, {"relation", kLe}, {"lhs_meaning", "sampled ||f||_inf"},
                {"rhs_meaning", "sqrt(zeta(4)-zeta(5)) ||f||"}};
    r.lhs = sup;
    r.rhs = bound;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(sup <= bound + 1e-9);
    return r;
  });
}

inline CheckReport check_supnorm_sweep(std::uint64_t seed, std::size_t count = 1000, std::size_t max_degree = 32) {
  return detail::timed([&] {
    auto rng = detail::stream(seed, 31);
    double worst = -std::numeric_limits<double>::infinity();
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Series f = random_polynomial(rng, max_degree);
      const double sup = sup_norm(f);
      const double nf = norm(f);
      worst = std::max(worst, sup - constants().sharp * nf);
      worst_ratio = std::max(worst_ratio, sup / nf);
    }
    CheckReport r;
    r.check_id = "thm31.supnorm_bound.random";
    r.inputs = {{"seed", seed}, {"count", count}, {"max_degree", max_degree}, {"relation", kLe},
                {"lhs_meaning", "max_i (||f_i||_inf - sharp ||f_i||)"}, {"max_ratio", worst_ratio}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(worst <= 1e-9);
    return r;
  });
}

/// f = sum_{n<=N} kappa(n) z^n attains ||f||_inf = f(1) and ||f|| = sqrt(f(1)),
/// so the ratio approaches the sharp constant.
inline CheckReport check_sharpness_witness(std::size_t N = 1000) {
  return detail::timed([&] {
    std::vector<complex> c(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      c[n] = h22_space.kappa_value(n);
    }
    const Series f(std::move(c));
    const double ratio = sup_norm(f) / norm(f);
    CheckReport r;
    r.check_id = "thm31.sharpness_witness";
    r.inputs = {{"N", N}, {"relation", kEq}, {"lhs_meaning", "||f||_inf / ||f||"},
                {"rhs_meaning", "sqrt(zeta(4)-zeta(5))"}, {"near_equality", true}};
    r.lhs = ratio;
    r.rhs = constants().sharp;
    r.tolerance = 1e-4;
    r.verdict = detail::verdict_of(std::abs(ratio - constants().sharp) <= 1e-4 && ratio <= constants().sharp + 1e-9);
    return r;
  });
}

inline CheckReport check_product_inequality(const Series& f, const Series& g, const std::string& label) {
  return detail::timed([&] {
    const double lhs = norm(cauchy_product(f, g));
    const double rhs = constants().product_const * norm(f) * norm(g);
    CheckReport r;
    r.check_id = "thm32.product." + label;
    r.inputs = {{"pair", label}, {"relation", kLe}, {"lhs_meaning", "||fg||"},
                {"rhs_meaning", "2 sqrt(2) sqrt(zeta(4)-zeta(5)) ||f|| ||g||"}};
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(lhs <= rhs + 1e-9);
    return r;
  });
}

inline CheckReport check_product_sweep(std::uint64_t seed, std::size_t count = 1000, std::size_t max_degree = 24) {
  return detail::timed([&] {
    auto rng = detail::stream(seed, 41);
    double worst = -std::numeric_limits<double>::infinity();
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Series f = random_polynomial(rng, max_degree);
      const Series g = random_polynomial(rng, max_degree);
      const double nf = norm(f);
      const double ng = norm(g);
      const double lhs = norm(cauchy_product(f, g));
      worst = std::max(worst, lhs - constants().product_const * nf * ng);
      worst_ratio = std::max(worst_ratio, lhs / (nf * ng));
    }
    CheckReport r;
    r.check_id = "thm32.product.random";
    r.inputs = {{"seed", seed}, {"count", count}, {"max_degree", max_degree}, {"relation", kLe},
                {"lhs_meaning", "max_i (||f_i g_i|| - C ||f_i|| ||g_i||)"}, {"max_ratio", worst_ratio}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(worst <= 1e-9);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Multiplication operators

/// max(||f||_inf, ||f||/sqrt(32)) <= sigma_max(M_f truncated) <= C ||f||.
///
/// ||M_f 1|| / ||1|| = ||f|| / sqrt(32) is the lower bound obtainable from the
/// constant function; the unnormalized ||f|| is recorded alongside.
inline CheckReport check_multiplier_bounds(const Series& f, std::size_t N, const std::string& label) {
  return detail::timed([&] {
    const double sigma = operator_norm_estimate(multiplication_matrix(f, N));
    const double nf = norm(f);
    const double lower = std::max(sup_norm(f), nf / std::sqrt(32.0));
    const double upper = constants().product_const * nf;
    CheckReport r;
    r.check_id = "thm33.multiplier_bounds." + label;
    r.inputs = {{"f", label},
                {"N", N},
                {"relation", kBetween},
                {"lhs_meaning", "sigma_max of truncated M_f"},
                {"rhs_meaning", "[max(||f||_inf, ||f||/sqrt(32)), C ||f||]"},
                {"unnormalized_lower_bound", nf},
                {"unnormalized_lower_bound_holds", nf <= sigma + 1e-6}};
    r.lhs = sigma;
    r.rhs = json::array({lower, upper});
    r.tolerance = 1e-6;
    r.verdict = detail::verdict_of(lower - 1e-6 <= sigma && sigma <= upper + 1e-6);
    return r;
  });
}

/// The unnormalized lower bound ||f|| <= ||M_f||. Reported as a finding when it
/// fails: ||M_f 1|| = ||f|| but ||1|| = sqrt(32), so it overstates the bound.
inline CheckReport check_multiplier_unnormalized_bound(const Series& f, std::size_t N, const std::string& label) {
  return detail::timed([&] {
    const double sigma = operator_norm_estimate(multiplication_matrix(f, N));
    const double nf = norm(f);
    CheckReport r;
    r.check_id = "thm33.unnormalized_lower_bound." + label;
    r.inputs = {{"f", label}, {"N", N}, {"relation", kLe}, {"lhs_meaning", "||f||"},
                {"rhs_meaning", "sigma_max of truncated M_f"},
                {"note", "omits the normalization ||1|| = sqrt(32)"}};
    r.lhs = nf;
    r.rhs = sigma;
    r.tolerance = 1e-6;
    r.verdict = nf <= sigma + 1e-6 ? Verdict::pass : Verdict::finding;
    return r;
  });
}

/// sigma_max(M_z) against max_n sqrt(w(n+1)/w(n)), the weighted-shift norm.
inline CheckReport check_shift_norm(std::size_t N = 256) {
  return detail::timed([&] {
    const double sigma = operator_norm_estimate(multiplication_matrix(Series{0.0, 1.0}, N));
    double oracle = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      oracle = std::max(oracle, std::sqrt(h22_space.weight_value(n + 1) / h22_space.weight_value(n)));
    }
    CheckReport r;
    r.check_id = "thm33.shift_norm";
    r.inputs = {{"N", N}, {"relation", kEq}, {"lhs_meaning", "sigma_max of truncated M_z"},
                {"rhs_meaning", "max_n sqrt(w(n+1)/w(n))"}};
    r.lhs = sigma;
    r.rhs = oracle;
    r.tolerance = 1e-4;
    r.verdict = detail::verdict_of(std::abs(sigma - oracle) <= 1e-4);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Hilbert-Schmidt

inline CheckReport check_hs(const Series& phi, std::size_t N, const std::string& label) {
  return detail::timed([&] {
    const auto hs = hs_partial_sum(phi, N);
    const double increment = hs.running[N] - hs.running[N / 2];
    const bool cauchy_required = hs.phi_sup <= 0.8;
    bool monotone = true;
    for (std::size_t k = 1; k < hs.running.size(); ++k) {
      monotone = monotone && hs.running[k] >= hs.running[k - 1];
    }
    const double bound = hs.closed_form_bound.value_or(std::numeric_limits<double>::infinity());
    CheckReport r;
    r.check_id = "thm41.hs." + label;
    r.inputs = {{"phi", label},
                {"N", N},
                {"relation", "lhs <= rhs + tolerance and cauchy_increment < 1e-8"},
                {"lhs_meaning", "1 + sum_{n=1}^N kappa(n) ||phi^n||^2"},
                {"rhs_meaning", "1 + 2 ||phi||^2 / (1 - ||phi||_inf^2)"},
                {"phi_sup", hs.phi_sup},
                {"cauchy_increment", increment},
                {"cauchy_required", cauchy_required},
                {"monotone", monotone}};
    r.lhs = hs.partial;
    r.rhs = bound;
    r.tolerance = 1e-9;
    const bool ok = hs.partial <= bound + 1e-9 && monotone && (!cauchy_required || increment < 1e-8);
    r.verdict = detail::verdict_of(ok);
    return r;
  });
}

/// phi = z/2: every term kappa(n) w(n) 4^{-n} = 4^{-n}, so the sum is 4/3.
inline CheckReport check_hs_geometric(std::size_t N = 64) {
  return detail::timed([&] {
    const auto hs = hs_partial_sum(Series{0.0, 0.5}, N);
    const double expected = (4.0 - std::pow(0.25, static_cast<double>(N))) / 3.0;
    CheckReport r;
    r.check_id = "thm41.hs_value.half_z";
    r.inputs = {{"phi", "z/2"}, {"N", N}, {"relation", kEq}, {"rhs_meaning", "sum_{n<=N} 4^{-n}"}};
    r.lhs = hs.partial;
    r.rhs = expected;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(std::abs(hs.partial - expected) <= 1e-12);
    return r;
  });
}

inline CheckReport check_hs_sweep(std::uint64_t seed, std::size_t count = 50, std::size_t N = 192,
                                  std::size_t max_degree = 32) {
  return detail::timed([&] {
    auto rng = detail::stream(seed, 51);
    double worst = -std::numeric_limits<double>::infinity();
    double worst_increment = 0.0;
    bool monotone = true;
    for (std::size_t i = 0; i < count; ++i) {
      const Series phi = random_self_map(rng, max_degree, 0.8);
      const auto hs = hs_partial_sum(phi, N);
      worst = std::max(worst, hs.partial - *hs.closed_form_bound);
      worst_increment = std::max(worst_increment, hs.running[N] - hs.running[N / 2]);
      for (std::size_t k = 1; k < hs.running.size(); ++k) {
        monotone = monotone && hs.running[k] >= hs.running[k - 1];
      }
    }
    CheckReport r;
    r.check_id = "thm41.hs.random";
    r.inputs = {{"seed", seed},
                {"count", count},
                {"N", N},
                {"max_degree", max_degree},
                {"max_sup", 0.8},
                {"relation", "lhs <= rhs + tolerance and max_cauchy_increment < 1e-8"},
                {"lhs_meaning", "max_i (partial_i - bound_i)"},
                {"max_cauchy_increment", worst_increment},
                {"monotone", monotone}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-9;
    r.verdict = detail::verdict_of(worst <= 1e-9 && worst_increment < 1e-8 && monotone);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Complex symmetry

struct SymmetryProbe {
  double matrix_residual;
  double kernel_residual;
  double kernel_tail;
};

inline SymmetryProbe probe_symmetry(const Series& psi, const Series& phi, std::size_t N = 128,
                                    std::size_t block = 32, std::size_t kernel_trunc = 400,
                                    std::uint64_t grid_seed = 7) {
  const auto T = weighted_composition_matrix(psi, phi, N);
  const auto grid = default_grid(grid_seed);
  const auto k = kernel_identity_residual(psi, phi, grid, kernel_trunc);
  return {symmetry_residual(T, std::min(block, T.safe_block())), k.residual, k.tail_bound};
}

/// Both symmetry tests for W_{Psi,phi}: expected symmetric means both
/// residuals <= 1e-10, otherwise both > 1e-6.
inline CheckReport check_symmetry_case(const std::string& id, const Series& psi, const Series& phi,
                                       const std::string& label, bool expect_symmetric) {
  return detail::timed([&] {
    const auto p = probe_symmetry(psi, phi);
    CheckReport r;
    r.check_id = id;
    r.inputs = {{"symbols", label},
                {"N", 128},
                {"block", 32},
                {"kernel_trunc", 400},
                {"grid", "12 radii in [0.1,0.7] x 12 angles, all ordered pairs, + 50 random pairs (seed 7)"},
                {"lhs_meaning", "[matrix transpose residual, kernel identity residual]"},
                {"kernel_tail_bound", p.kernel_tail}};
    r.lhs = json::array({p.matrix_residual, p.kernel_residual});
    if (expect_symmetric) {
      r.inputs["relation"] = "max(lhs) <= rhs + tolerance";
      r.rhs = 0.0;
      r.tolerance = 1e-10;
      r.verdict = detail::verdict_of(std::max(p.matrix_residual, p.kernel_residual) <= 1e-10);
    } else {
      r.inputs["relation"] = "min(lhs) > rhs";
      r.rhs = 1e-6;
      r.tolerance = 0.0;
      r.verdict = detail::verdict_of(std::min(p.matrix_residual, p.kernel_residual) > 1e-6);
    }
    return r;
  });
}

/// For phi = az, K_{conj w}(phi(z)) written without the (a z w)^n factor is the
/// constant sum kappa(n). Compared with the kernel value at one point.
inline CheckReport check_converse_constant_sum() {
  return detail::timed([] {
    const complex a = 0.5;
    const complex z = 0.5;
    const complex w = 0.4;
    const double constant_sum = constants().gap;
    const Series K = kernel_series(std::conj(w), 400);
    const complex actual = evaluate(K, a * z);
    CheckReport r;
    r.check_id = "thm42.converse_constant_sum";
    r.inputs = {{"a", 0.5}, {"z", 0.5}, {"w", 0.4}, {"relation", kEq},
                {"lhs_meaning", "sum kappa(n) without the (a z w)^n factor"},
                {"rhs_meaning", "sum kappa(n) (a z w)^n"},
                {"note", "the identity with the (a z w)^n factor is checked by thm42.symmetric.*"}};
    r.lhs = constant_sum;
    r.rhs = to_json_value(actual);
    r.tolerance = 1e-12;
    r.verdict = std::abs(constant_sum - actual) <= 1e-12 ? Verdict::pass : Verdict::finding;
    return r;
  });
}

// ---------------------------------------------------------------------------
// Weighted composition symbols

inline CheckReport check_c1(complex a0 = 0.3) {
  return detail::timed([&] {
    const auto c = c_expansion(a0, 16);
    CheckReport r;
    r.check_id = "thm34.c1";
    r.inputs = {{"a0", to_json_value(a0)}, {"relation", kEq}};
    r.lhs = c[0];
    r.rhs = 1.0;
    r.tolerance = 1e-12;
    r.verdict = detail::verdict_of(std::abs(c[0] - 1.0) <= 1e-12);
    return r;
  });
}

/// c_i in (0, 1) for 2 <= i <= 16; a value outside is reported as a finding.
inline CheckReport check_c_range() {
  return detail::timed([] {
    bool ok = true;
    double lo = 1.0;
    double hi = 0.0;
    for (double a0 : {0.2, 0.3, 0.5}) {
      const auto c = c_expansion(a0, 16);
      for (std::size_t i = 1; i < c.size(); ++i) {
        ok = ok && c[i] > 0.0 && c[i] < 1.0;
        lo = std::min(lo, c[i]);
        hi = std::max(hi, c[i]);
      }
    }
    CheckReport r;
    r.check_id = "thm34.c_range";
    r.inputs = {{"a0", json::array({0.2, 0.3, 0.5})}, {"i", "2..16"}, {"relation", "0 < lhs[0] and lhs[1] < 1"}};
    r.lhs = json::array({lo, hi});
    r.rhs = json::array({0.0, 1.0});
    r.tolerance = 0.0;
    r.verdict = ok ? Verdict::pass : Verdict::finding;
    return r;
  });
}

inline CheckReport check_c_independence() {
  return detail::timed([] {
    const auto c2 = c_expansion(0.2, 16);
    const auto c5 = c_expansion(0.5, 16);
    double worst = 0.0;
    for (std::size_t i = 0; i < c2.size(); ++i) {
      worst = std::max(worst, std::abs(c2[i] - c5[i]));
    }
    CheckReport r;
    r.check_id = "thm34.c_a0_independence";
    r.inputs = {{"a0", json::array({0.2, 0.5})}, {"i", "1..16"}, {"relation", kLe},
                {"lhs_meaning", "max_i |c_i(0.2) - c_i(0.5)|"}};
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = 1e-10;
    r.verdict = detail::verdict_of(worst <= 1e-10);
    return r;
  });
}

inline std::string params_label(const SymbolParams& p) {
  auto g = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  auto f = [&](complex c) {
    if (c.imag() == 0.0) {
      return g(c.real());
    }
    if (c.real() == 0.0) {
      return g(c.imag()) + "i";
    }
    return g(c.real()) + (c.imag() < 0 ? "-" : "+") + g(std::abs(c.imag())) + "i";
  };
  return "a0=" + f(p.a0) + ",a1=" + f(p.a1) + ",a2=" + f(p.a2);
}

/// z^3 w coefficients: expected equal when a0 = 0 or a1 = 0 and unequal otherwise.
/// Equality in the remaining cases is reported as a finding.
inline CheckReport check_z3w_grid() {
  return detail::timed([] {
    const std::vector<double> values = {0.0, 0.1, 0.3, 0.5};
    bool degenerate_equal = true;
    double max_gap_nondegenerate = 0.0;
    json cases = json::array();
    for (double a0 : values) {
      for (double a1 : values) {
        const auto cmp = z3w_coefficient_check(a0, a1);
        const double scale = std::max({std::abs(cmp.lhs), std::abs(cmp.rhs), 1e-300});
        const double rel = std::abs(cmp.lhs - cmp.rhs) / scale;
        const bool equal = cmp.lhs == cmp.rhs || rel <= 1e-12;
        if (a0 == 0.0 || a1 == 0.0) {
          degenerate_equal = degenerate_equal && equal;
        } else {
          max_gap_nondegenerate = std::max(max_gap_nondegenerate, rel);
        }
        cases.push_back({{"a0", a0}, {"a1", a1}, {"lhs", cmp.lhs.real()}, {"rhs", cmp.rhs.real()}, {"equal", equal}});
      }
    }
    CheckReport r;
    r.check_id = "thm34.z3w_iff";
    r.inputs = {{"grid", cases},
                {"relation", "lhs > tolerance (unequal whenever a0 != 0 and a1 != 0)"},
                {"lhs_meaning", "max relative |lhs - rhs| over a0 != 0, a1 != 0"},
                {"degenerate_cases_equal", degenerate_equal}};
    r.lhs = max_gap_nondegenerate;
    r.rhs = 0.0;
    r.tolerance = 1e-12;
    if (!degenerate_equal) {
      r.verdict = Verdict::fail;
    } else {
      r.verdict = max_gap_nondegenerate > 1e-12 ? Verdict::pass : Verdict::finding;
    }
    return r;
  });
}

/// The closed-form z^3 w coefficients against the double-series expansion of
/// the generated symbols.
inline CheckReport check_z3w_expansion(complex a0 = 0.3, complex a1 = 0.2) {
  return detail::timed([&] {
    const auto cmp = z3w_coefficient_check(a0, a1);
    const auto sym = symbols_from_params({a0, a1, 1.0}, 16);
    // The closed form uses sum kappa(n) a0^n z^n = (243/2) p as leading factor.
    const auto [left, right] = kernel_identity_coefficients(sym.psi, sym.phi, 3, 1);
    const complex left_n = (243.0 / 2.0) * left;
    const complex right_n = (243.0 / 2.0) * right;
    const double err = std::max(std::abs(left_n - cmp.lhs), std::abs(right_n - cmp.rhs));
    CheckReport r;
    r.check_id = "thm34.z3w_expansion";
    r.inputs = {{"a0", to_json_value(a0)}, {"a1", to_json_value(a1)}, {"relation", kLe},
                {"lhs_meaning", "max deviation of closed-form coefficients from series expansion"},
                {"closed_form", json::array({to_json_value(cmp.lhs), to_json_value(cmp.rhs)})},
                {"expansion", json::array({to_json_value(left_n), to_json_value(right_n)})}};
    r.lhs = err;
    r.rhs = 0.0;
    r.tolerance = 1e-18;
    r.verdict = detail::verdict_of(err <= 1e-18);
    return r;
  });
}

/// The lowest-order coefficient that separates the two sides of the kernel
/// identity for generic (a0, a1) is z^3 w^2.
inline CheckReport check_z3w2_obstruction(complex a0 = 0.3, complex a1 = 0.2) {
  return detail::timed([&] {
    const auto sym = symbols_from_params({a0, a1, 3888.0}, 16);
    const auto [left, right] = kernel_identity_coefficients(sym.psi, sym.phi, 3, 2);
    const double gap = std::abs(left - right);
    CheckReport r;
    r.check_id = "thm34.z3w2_obstruction";
    r.inputs = {{"a0", to_json_value(a0)}, {"a1", to_json_value(a1)}, {"a2", 3888.0}, {"relation", kGt},
                {"lhs_meaning", "|[z^3 w^2] left - [z^3 w^2] right|"}};
    r.lhs = gap;
    r.rhs = 0.0;
    r.tolerance = 1e-12 * std::max(std::abs(left), std::abs(right));
    r.verdict = detail::verdict_of(gap > r.tolerance);
    return r;
  });
}

/// Generated symbols with a0 = 0 or a1 = 0 yield a J-symmetric operator.
inline CheckReport check_generated_degenerate(const SymbolParams& params) {
  return detail::timed([&] {
    const auto sym = symbols_from_params(params, 128);
    const auto p = probe_symmetry(sym.psi, sym.phi);
    CheckReport r;
    r.check_id = "thm34.generated_symmetric." + params_label(params);
    r.inputs = {{"a0", to_json_value(params.a0)}, {"a1", to_json_value(params.a1)}, {"a2", to_json_value(params.a2)},
                {"N", 128}, {"block", 32}, {"kernel_trunc", 400}, {"relation", "max(lhs) <= rhs + tolerance"},
                {"lhs_meaning", "[matrix transpose residual, kernel identity residual]"}};
    r.lhs = json::array({p.matrix_residual, p.kernel_residual});
    r.rhs = 0.0;
    r.tolerance = 1e-10;
    r.verdict = detail::verdict_of(std::max(p.matrix_residual, p.kernel_residual) <= 1e-10);
    return r;
  });
}

/// Generated symbols with a0 a1 != 0 are not J-symmetric: both residuals
/// stay clear of their numerical floors.
inline CheckReport check_generated_generic(const SymbolParams& params) {
  return detail::timed([&] {
    const auto sym = symbols_from_params(params, 128);
    const auto p = probe_symmetry(sym.psi, sym.phi);
    const double kernel_floor = std::max(1e-12, 10.0 * p.kernel_tail);
    CheckReport r;
    r.check_id = "thm34.generated_nonsymmetric." + params_label(params);
    r.inputs = {{"a0", to_json_value(params.a0)}, {"a1", to_json_value(params.a1)}, {"a2", to_json_value(params.a2)},
                {"N", 128}, {"block", 32}, {"kernel_trunc", 400},
                {"relation", "lhs[0] > rhs[0] and lhs[1] > rhs[1]"},
                {"lhs_meaning", "[matrix transpose residual, kernel identity residual]"},
                {"rhs_meaning", "[1e-6, max(1e-12, 10 x kernel tail bound)]"}};
    r.lhs = json::array({p.matrix_residual, p.kernel_residual});
    r.rhs = json::array({1e-6, kernel_floor});
    r.tolerance = 0.0;
    r.verdict = detail::verdict_of(p.matrix_residual > 1e-6 && p.kernel_residual > kernel_floor);
    return r;
  });
}

/// The two symmetry tests agree: kernel residual <= 1e-10 exactly when the
/// matrix residual <= 1e-8, over a fixed panel of symbol pairs.
inline CheckReport check_symmetry_consistency() {
  return detail::timed([] {
    struct Case {
      std::string label;
      Series psi;
      Series phi;
    };
    std::vector<Case> cases = {
        {"psi=1,phi=0.3z", Series{1.0}, Series{0.0, 0.3}},
        {"psi=1,phi=0.5z+0.3z^2", Series{1.0}, Series{0.0, 0.5, 0.3}},
        {"psi=1+z,phi=0.5z", Series{1.0, 1.0}, Series{0.0, 0.5}},
        {"psi=1,phi=0.2+0.5z", Series{1.0}, Series{0.2, 0.5}},
    };
    for (const auto& params : {SymbolParams{0.0, 0.5, 3888.0}, SymbolParams{0.3, 0.0, 3888.0},
                               SymbolParams{0.3, 0.2, 3888.0}}) {
      const auto sym = symbols_from_params(params, 128);
      cases.push_back({params_label(params), sym.psi, sym.phi});
    }
    std::size_t disagreements = 0;
    json rows = json::array();
    for (const auto& c : cases) {
      const auto p = probe_symmetry(c.psi, c.phi);
      const bool kernel_sym = p.kernel_residual <= 1e-10;
      const bool matrix_sym = p.matrix_residual <= 1e-8;
      disagreements += kernel_sym != matrix_sym ? 1 : 0;
      rows.push_back({{"symbols", c.label}, {"matrix", p.matrix_residual}, {"kernel", p.kernel_residual}});
    }
    CheckReport r;
    r.check_id = "thm34.symmetry_tests_agree";
    r.inputs = {{"cases", rows}, {"relation", kEq}, {"lhs_meaning", "number of cases where the two tests disagree"}};
    r.lhs = disagreements;
    r.rhs = 0;
    r.tolerance = 0.0;
    r.verdict = detail::verdict_of(disagreements == 0);
    return r;
  });
}

}  // namespace h22
