#include <cmath>

#include <gtest/gtest.h>

#include "h22/random.hpp"
#include "h22/space.hpp"
#include "test_util.hpp"

using namespace h22;

TEST(Space, Weights) {
  EXPECT_EQ(weight(h22_space, 0), Rational(32));
  EXPECT_EQ(weight(h22_space, 1), Rational(243, 2));
  EXPECT_EQ(weight(h21_space, 0), Rational(8));
  EXPECT_EQ(weight(hardy_space, 7), Rational(1));
  EXPECT_EQ(weight(bergman_space, 3), Rational(1, 4));
  EXPECT_DOUBLE_EQ(h22_space.kappa_value(0), 1.0 / 32.0);
  EXPECT_DOUBLE_EQ(h22_space.weight_value(2), 1024.0 / 3.0);
}

TEST(Space, WeightTimesKappaIsOneExactly) {
  for (auto space : {hardy_space, bergman_space, h21_space, h22_space}) {
    for (std::size_t n = 0; n <= 500; ++n) {
      ASSERT_EQ(space.weight(n) * space.kappa(n), Rational(1)) << space.name() << " n=" << n;
      ASSERT_GT(space.weight(n), 0);
    }
  }
}

TEST(Space, IntegerIdentity) {
  for (std::size_t k = 0; k <= 10000; ++k) {
    const Integer n(k);
    const Integer lhs = boost::multiprecision::pow(n + 2, 5);
    const Integer rhs = (n + 1) * (31 + 49 * n + 41 * n * n + 11 * n * n * (n - 1) + n * n * (n - 1) * (n - 1)) + 1;
    ASSERT_EQ(lhs, rhs) << "n=" << k;
  }
}

TEST(Space, ValueTableMatchesExactBeyondTable) {
  // Table lookups and on-demand conversion agree.
  for (std::size_t n : {0u, 1u, 100u, 16383u, 16384u, 20000u}) {
    const double exact = static_cast<double>(h22_space.kappa(n));
    EXPECT_DOUBLE_EQ(h22_space.kappa_value(n), exact) << n;
  }
}

TEST(Space, ParseNames) {
  EXPECT_EQ(SpaceWeights::parse("h22"), h22_space);
  EXPECT_EQ(SpaceWeights::parse("hardy"), hardy_space);
  EXPECT_THROW(SpaceWeights::parse("sobolev"), std::invalid_argument);
}

TEST(Space, InnerProductExamples) {
  EXPECT_CNEAR(inner_product(Series{1.0}, Series{1.0}), 32.0, 0.0);
  EXPECT_CNEAR(inner_product(Series{0.0, 1.0}, Series{0.0, 1.0}), 121.5, 0.0);
  EXPECT_CNEAR(inner_product(Series{1.0}, Series{0.0, 1.0}), 0.0, 0.0);
  // Linear in the first slot, conjugate-linear in the second.
  EXPECT_CNEAR(inner_product(Series{complex(0, 1)}, Series{1.0}), complex(0, 32), 0.0);
  EXPECT_CNEAR(inner_product(Series{1.0}, Series{complex(0, 1)}), complex(0, -32), 0.0);
}

TEST(Space, InnerProductSymmetryAndPositivity) {
  Rng rng(201);
  for (int i = 0; i < 50; ++i) {
    const Series f = random_polynomial(rng, 40);
    const Series g = random_polynomial(rng, 40);
    EXPECT_CNEAR(inner_product(f, g), std::conj(inner_product(g, f)), 1e-9);
    const complex ff = inner_product(f, f);
    EXPECT_GT(ff.real(), 0.0);
    EXPECT_LE(std::abs(ff.imag()), 1e-14 * ff.real());
  }
}

TEST(Space, NormComponents) {
  const auto one = norm_sq_components(Series{1.0}).terms();
  const std::array<double, 6> e1{31, 0, 0, 1, 0, 0};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(one[i], e1[i], 1e-15);
  const auto z = norm_sq_components(Series{0.0, 1.0});
  const std::array<double, 6> ez{31, 41, 0, 0.5, 49, 0};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(z.terms()[i], ez[i], 1e-13);
  EXPECT_NEAR(z.total(), 121.5, 1e-12);
  EXPECT_NEAR(norm_sq_components(Series::monomial(2)).total(), 1024.0 / 3.0, 1e-12);
}

TEST(Space, NormDecompositionProperty) {
  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const Series f = random_polynomial(rng, 64);
    const double total = norm_sq_components(f).total();
    EXPECT_LE(std::abs(total - inner_product(f, f).real()), 1e-12 * (1.0 + std::abs(total)));
  }
}

TEST(Space, Gram) {
  for (std::size_t m = 0; m <= 128; ++m) {
    for (std::size_t n = 0; n <= 128; ++n) {
      ASSERT_LE(std::abs(inner_product(basis_vector(n), basis_vector(m)) - (m == n ? 1.0 : 0.0)), 1e-12);
    }
  }
}

TEST(Space, KernelBasics) {
  const Series K0 = kernel_series(0.0, 50);
  EXPECT_CNEAR(K0[0], 1.0 / 32.0, 0.0);
  for (std::size_t n = 1; n <= 50; ++n) EXPECT_EQ(K0[n], complex{});
  // Coefficient 1 is kappa(1) conj(w); at the formal point w = 1 it is 2/243.
  EXPECT_CNEAR(kernel_series(0.5, 5)[1] / 0.5, 2.0 / 243.0, 1e-17);
  EXPECT_THROW(kernel_series(1.0, 10), std::domain_error);
  EXPECT_THROW(kernel_series(complex(0.8, 0.7)), std::domain_error);
}

TEST(Space, KernelReproduces) {
  const Series f{3.0, 0.0, 2.0};
  EXPECT_CNEAR(inner_product(f, kernel_series(0.4, 400)), 3.0 + 2.0 * 0.16, 1e-12);
  Rng rng(203);
  for (int i = 0; i < 100; ++i) {
    const Series g = random_polynomial(rng, 32);
    const complex w = random_disk_point(rng, 0.9);
    EXPECT_LE(std::abs(inner_product(g, kernel_series(w, 400)) - evaluate(g, w)), 1e-9);
  }
}

TEST(Space, KernelSelfValue) {
  const Series K = kernel_series(0.3, 200);
  double direct = 0.0;
  for (std::size_t n = 0; n <= 200; ++n) direct += h22_space.kappa_value(n) * std::pow(0.09, n);
  EXPECT_CNEAR(evaluate(K, 0.3), direct, 1e-15);
  EXPECT_NEAR(norm_sq(K), direct, 1e-12);
}

TEST(Space, DefaultKernelOrderMeetsTolerance) {
  for (double r : {0.0, 0.3, 0.7, 0.95}) {
    const std::size_t N = default_kernel_order(r);
    double tail = 0.0;
    for (std::size_t n = N + 1; n < N + 20000; ++n) tail += h22_space.kappa_value(n) * std::pow(r * r, n);
    EXPECT_LT(tail, 1e-15) << "r=" << r;
    EXPECT_EQ(kernel_series(r).order(), N);
  }
}
