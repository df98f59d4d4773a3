#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "h22/checks.hpp"

namespace h22 {

enum class SuiteId { basis, kernels, thm31, thm32, thm33, thm41, thm42, thm34, all };

inline constexpr std::array<std::string_view, 9> kSuiteNames = {"basis", "kernels", "thm31", "thm32", "thm33",
                                                                "thm41", "thm42",   "thm34", "all"};

inline SuiteId parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
    if (kSuiteNames[i] == name) {
      return static_cast<SuiteId>(i);
    }
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

namespace suites {

inline void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

inline std::vector<CheckReport> basis(std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.push_back(check_weight_identity(10000));
  out.push_back(check_gram(128));
  out.push_back(check_norm_decomposition(seed));
  out.push_back(check_inclusion_example(1000));
  out.push_back(check_inclusion_example(10));
  out.back().check_id += ".N10";
  append(out, check_constants());
  append(out, check_tail_bound());
  return out;
}

inline std::vector<CheckReport> kernels(std::uint64_t seed) {
  return {check_reproducing(seed, 100, 400), check_kernel_self(0.3, 200), check_conjugation_kernel()};
}

inline std::vector<CheckReport> thm31(std::uint64_t seed) {
  return {
      check_supnorm_bound(Series{1.0}, "one"),
      check_supnorm_bound(Series{0.0, 1.0}, "z"),
      check_supnorm_bound(Series{1.0, 1.0}, "one_plus_z"),
      check_supnorm_sweep(seed, 1000, 32),
      check_sharpness_witness(1000),
  };
}

inline std::vector<CheckReport> thm32(std::uint64_t seed) {
  return {
      check_product_inequality(Series{1.0}, Series{1.0}, "one_one"),
      check_product_inequality(Series{0.0, 1.0}, Series{0.0, 1.0}, "z_z"),
      check_product_sweep(seed, 1000, 24),
  };
}

inline std::vector<CheckReport> thm33(std::uint64_t seed) {
  std::vector<CheckReport> out = {
      check_multiplier_bounds(Series{1.0}, 256, "one"),
      check_multiplier_bounds(Series{0.0, 1.0}, 256, "z"),
      check_multiplier_bounds(Series{1.0, 1.0}, 256, "one_plus_z"),
      check_multiplier_bounds(Series{0.0, 0.0, 1.0}, 256, "z2"),
      check_multiplier_unnormalized_bound(Series{0.0, 1.0}, 256, "z"),
      check_shift_norm(256),
  };
  auto rng = detail::stream(seed, 61);
  for (int i = 0; i < 20; ++i) {
    const Series f = random_polynomial(rng, 8);
    out.push_back(check_multiplier_bounds(f, 256, "random_" + std::string(i < 10 ? "0" : "") + std::to_string(i)));
  }
  return out;
}

inline std::vector<CheckReport> thm41(std::uint64_t seed) {
  return {
      check_hs(Series{0.0}, 64, "zero"),
      check_hs(Series{0.0, 0.5}, 64, "half_z"),
      check_hs(Series{0.0, 0.5, 0.3}, 96, "0.5z+0.3z^2"),
      check_hs_geometric(64),
      check_hs_sweep(seed, 50, 192),
  };
}

inline std::vector<CheckReport> thm42(std::uint64_t /*seed*/) {
  std::vector<CheckReport> out;
  const std::vector<std::pair<std::string, complex>> affine = {
      {"0", 0.0}, {"0.3", 0.3}, {"0.5", 0.5}, {"0.9i", complex(0.0, 0.9)}};
  for (const auto& [label, a] : affine) {
    out.push_back(check_symmetry_case("thm42.symmetric.az.a=" + label, Series{1.0}, Series{0.0, a}, "psi=1,phi=" + label + "z",
                                      true));
  }
  out.push_back(check_symmetry_case("thm42.nonsymmetric.0.5z+0.3z^2", Series{1.0}, Series{0.0, 0.5, 0.3},
                                    "psi=1,phi=0.5z+0.3z^2", false));
  out.push_back(check_symmetry_case("thm42.nonsymmetric.0.4z+0.2z^3", Series{1.0}, Series{0.0, 0.4, 0.0, 0.2},
                                    "psi=1,phi=0.4z+0.2z^3", false));
  out.push_back(check_symmetry_case("thm42.nonsymmetric.(z+0.2)/1.5", Series{1.0}, Series{0.2 / 1.5, 1.0 / 1.5},
                                    "psi=1,phi=(z+0.2)/1.5", false));
  out.push_back(check_converse_constant_sum());
  return out;
}

inline std::vector<CheckReport> thm34(std::uint64_t /*seed*/) {
  std::vector<CheckReport> out = {
      check_c1(0.3),
      check_c_range(),
      check_c_independence(),
      check_z3w_grid(),
      check_z3w_expansion(0.3, 0.2),
      check_z3w2_obstruction(0.3, 0.2),
      check_symmetry_case("thm34.necessity.psi=1+z", Series{1.0, 1.0}, Series{0.0, 0.5}, "psi=1+z,phi=0.5z", false),
      check_generated_generic({0.3, 0.2, 3888.0}),
      check_symmetry_consistency(),
  };
  for (const auto& params : {SymbolParams{0.0, 0.5, 3888.0}, SymbolParams{0.0, complex(0.0, 0.3), 3888.0},
                             SymbolParams{0.0, 0.9, 1.0}, SymbolParams{0.3, 0.0, 3888.0},
                             SymbolParams{0.5, 0.0, 3888.0}}) {
    out.push_back(check_generated_degenerate(params));
  }
  return out;
}

}  // namespace suites

/// Runs a suite and returns its reports sorted by check_id.
inline std::vector<CheckReport> run_suite(SuiteId id, std::uint64_t seed) {
  std::vector<CheckReport> out;
  auto add = [&](std::vector<CheckReport> more) { suites::append(out, std::move(more)); };
  const bool all = id == SuiteId::all;
  if (all || id == SuiteId::basis) add(suites::basis(seed));
  if (all || id == SuiteId::kernels) add(suites::kernels(seed));
  if (all || id == SuiteId::thm31) add(suites::thm31(seed));
  if (all || id == SuiteId::thm32) add(suites::thm32(seed));
  if (all || id == SuiteId::thm33) add(suites::thm33(seed));
  if (all || id == SuiteId::thm41) add(suites::thm41(seed));
  if (all || id == SuiteId::thm42) add(suites::thm42(seed));
  if (all || id == SuiteId::thm34) add(suites::thm34(seed));
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

inline std::vector<CheckReport> run_suite(std::string_view name, std::uint64_t seed) {
  return run_suite(parse_suite(name), seed);
}

}  // namespace h22
