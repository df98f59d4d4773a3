#include <cmath>

#include <gtest/gtest.h>

#include "h22/operators.hpp"
#include "h22/random.hpp"
#include "h22/zeta.hpp"
#include "test_util.hpp"

using namespace h22;

namespace {
// Direct inner-product oracle for <T e_n, e_m>.
complex entry_oracle(const Series& image_of_en, std::size_t m) {
  return inner_product(image_of_en, basis_vector(m));
}
}  // namespace

TEST(Operators, MultiplicationByOneIsIdentity) {
  const auto T = multiplication_matrix(Series{1.0}, 20);
  EXPECT_TRUE(T.entries.isApprox(Eigen::MatrixXcd::Identity(21, 21), 1e-15));
  EXPECT_NEAR(operator_norm_estimate(T), 1.0, 1e-12);
}

TEST(Operators, ShiftEntries) {
  const auto T = multiplication_matrix(Series{0.0, 1.0}, 40);
  EXPECT_CNEAR(T(1, 0), std::sqrt(243.0 / 64.0), 1e-14);
  for (std::size_t n = 0; n < 40; ++n) {
    const double expected = std::sqrt(h22_space.weight_value(n + 1) / h22_space.weight_value(n));
    EXPECT_CNEAR(T(n + 1, n), expected, 1e-13);
    EXPECT_CNEAR(entry_oracle(cauchy_product(Series{0.0, 1.0}, basis_vector(n)), n + 1), expected, 1e-12);
  }
  EXPECT_EQ(T.first_truncated_column, std::optional<std::size_t>(40));
  const auto T2 = multiplication_matrix(Series::monomial(2), 10);
  EXPECT_CNEAR(T2(2, 0), std::sqrt(32.0 / 3.0), 1e-14);
}

TEST(Operators, ShiftNorm) {
  const auto T = multiplication_matrix(Series{0.0, 1.0}, 256);
  EXPECT_NEAR(operator_norm_estimate(T), 1.9485571585149868, 1e-4);
}

TEST(Operators, CompositionDiagonal) {
  const auto T = composition_matrix(Series{0.0, 0.5}, 30);
  for (std::size_t m = 0; m <= 30; ++m) {
    for (std::size_t n = 0; n <= 30; ++n) {
      EXPECT_CNEAR(T(m, n), m == n ? std::pow(0.5, n) : 0.0, 1e-15);
    }
  }
  EXPECT_NEAR(operator_norm_estimate(T), 1.0, 1e-12);
  const auto I = composition_matrix(Series{0.0, 1.0}, 30);
  EXPECT_TRUE(I.entries.isApprox(Eigen::MatrixXcd::Identity(31, 31), 1e-15));
}

TEST(Operators, CompositionEntryFormula) {
  const Series phi{0.0, 0.5, 0.3};
  const auto T = composition_matrix(phi, 128);
  const double expected = 0.3 * std::sqrt(2048.0 / 729.0);
  EXPECT_NEAR(expected, 0.50283148884376713, 1e-15);
  EXPECT_CNEAR(T(2, 1), expected, 1e-14);
  EXPECT_CNEAR(T(1, 1), 0.5, 1e-15);
  EXPECT_CNEAR(T(3, 1), 0.0, 0.0);
  // Brute-force column via direct inner products.
  for (std::size_t n = 0; n <= 6; ++n) {
    const Series img = compose(basis_vector(n), phi, 128).series;
    for (std::size_t m = 0; m <= 12; ++m) {
      EXPECT_CNEAR(T(m, n), entry_oracle(img, m), 1e-12 * (1 + std::abs(T(m, n))));
    }
  }
}

TEST(Operators, NonSelfMapWarns) {
  const auto T = composition_matrix(Series{0.0, 1.2}, 10);
  EXPECT_FALSE(T.warnings.empty());
  EXPECT_TRUE(composition_matrix(Series{0.0, 0.9}, 10).warnings.empty());
}

TEST(Operators, WeightedComposition) {
  const Series phi{0.0, 0.4};
  const auto W1 = weighted_composition_matrix(Series{1.0}, phi, 30);
  EXPECT_TRUE(W1.entries.isApprox(composition_matrix(phi, 30).entries, 1e-15));
  const complex c(2.0, -1.0);
  const auto Wc = weighted_composition_matrix(Series{c}, phi, 30);
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_CNEAR(Wc(n, n), c * std::pow(0.4, n), 1e-14);
}

TEST(Operators, FactorizationOnInnerBlock) {
  Rng rng(301);
  for (int i = 0; i < 10; ++i) {
    const Series psi = random_polynomial(rng, 6);
    const Series phi = random_self_map(rng, 6, 0.9);
    const std::size_t N = 64;
    const auto W = weighted_composition_matrix(psi, phi, N);
    const Eigen::MatrixXcd MC = multiplication_matrix(psi, N).entries * composition_matrix(phi, N).entries;
    const Eigen::Index b = N / 2 + 1;
    const double scale = 1.0 + W.entries.topLeftCorner(b, b).cwiseAbs().maxCoeff();
    EXPECT_LE((W.entries - MC).topLeftCorner(b, b).cwiseAbs().maxCoeff(), 1e-10 * scale);
  }
}

TEST(Operators, Adjoint) {
  const auto T = composition_matrix(Series{complex(0.1, 0.2), 0.5, complex(0, 0.2)}, 20);
  const auto A = adjoint(T);
  EXPECT_TRUE(A.descriptor.adjoint);
  for (std::size_t m = 0; m <= 20; ++m)
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(T(m, n), std::conj(A(n, m)));
  EXPECT_EQ(adjoint(A).entries, T.entries);
  EXPECT_FALSE(adjoint(A).descriptor.adjoint);
  const auto D = composition_matrix(Series{0.0, 0.5}, 20);
  EXPECT_EQ(adjoint(D).entries, D.entries);
}

TEST(Operators, NormEstimateAgainstSvd) {
  Rng rng(302);
  for (int i = 0; i < 5; ++i) {
    const auto T = multiplication_matrix(random_polynomial(rng, 6), 80);
    const double svd = Eigen::JacobiSVD<Eigen::MatrixXcd>(T.entries).singularValues()(0);
    EXPECT_NEAR(operator_norm_estimate(T), svd, 1e-8 * svd);
  }
  EXPECT_THROW(operator_norm_estimate(multiplication_matrix(Series{1.0}, 8), 0), std::invalid_argument);
}

TEST(Operators, NormEstimateMonotoneInN) {
  const Series f{1.0, complex(0.0, 0.5), -0.3};
  double prev = 0.0;
  for (std::size_t N : {16u, 32u, 64u, 128u}) {
    const double s = operator_norm_estimate(multiplication_matrix(f, N));
    EXPECT_GE(s, prev - 1e-12);
    prev = s;
  }
}

TEST(Operators, MultiplierBoundsProperty) {
  Rng rng(303);
  const double C = constants().product_const;
  for (int i = 0; i < 20; ++i) {
    const Series f = random_polynomial(rng, 8);
    const double sigma = operator_norm_estimate(multiplication_matrix(f, 256));
    const double nf = norm(f);
    EXPECT_GE(sigma, std::max(sup_norm(f), nf / std::sqrt(32.0)) - 1e-6);
    EXPECT_LE(sigma, C * nf + 1e-6);
  }
}

TEST(Operators, HsPartialSums) {
  const auto half = hs_partial_sum(Series{0.0, 0.5}, 64);
  EXPECT_NEAR(half.partial, 4.0 / 3.0, 1e-12);
  ASSERT_TRUE(half.closed_form_bound.has_value());
  EXPECT_NEAR(*half.closed_form_bound, 82.0, 1e-9);
  EXPECT_EQ(hs_partial_sum(Series{0.0}, 10).partial, 1.0);
  const auto p = hs_partial_sum(Series{0.0, 0.5, 0.3}, 96);
  EXPECT_NEAR(p.phi_sup, 0.8, 1e-12);
  EXPECT_LE(p.partial, *p.closed_form_bound + 1e-9);
  EXPECT_THROW(hs_partial_sum(Series{0.0, 1.0}, 10), std::domain_error);
  EXPECT_FALSE(hs_partial_sum(Series{0.0, 0.5}, 10, hardy_space).closed_form_bound.has_value());
}

TEST(Operators, HsMonotoneAndBounded) {
  Rng rng(304);
  for (int i = 0; i < 50; ++i) {
    const Series phi = random_self_map(rng, 32, 0.8);
    const auto hs = hs_partial_sum(phi, 192);
    for (std::size_t k = 1; k < hs.running.size(); ++k) ASSERT_GE(hs.running[k], hs.running[k - 1]);
    EXPECT_LE(hs.partial, *hs.closed_form_bound + 1e-9);
    EXPECT_LT(hs.running[192] - hs.running[96], 1e-8);
  }
}
