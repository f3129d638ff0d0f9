#include "squig/constants.hpp"
#include "squig/derivpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace squig;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(DerivPoly, RowExtraction) {
  const CoeffTriangle tri = build_triangle(cosquine_params(4), 6);
  EXPECT_EQ(q_polynomial(tri, 3).coeffs, ints({0, 6, 9}));
  EXPECT_EQ(q_polynomial(tri, 0).coeffs, ints({1}));
  EXPECT_EQ(q_polynomial(tri, 6).coeffs, ints({0, 0, 1134, 6867, 2394}));
  EXPECT_THROW(q_polynomial(tri, 7), std::out_of_range);
}

TEST(DerivPoly, StepExamples) {
  const DerivPolynomial q3{3, cosquine_params(4), ints({0, 6, 9})};
  EXPECT_EQ(polynomial_step(q3).coeffs, ints({0, 6, 81, 18}));
  EXPECT_EQ(polynomial_step(q3).k, 4);

  const DerivPolynomial q0{0, cosquine_params(4), ints({1})};
  EXPECT_EQ(polynomial_step(q0).coeffs, ints({0, 1}));

  const DerivPolynomial s1{1, squine_params(2), ints({1})};
  EXPECT_EQ(polynomial_step(s1).coeffs, ints({0, 1}));
}

TEST(DerivPoly, StepMatchesTriangle) {
  for (int p = 2; p <= 7; ++p) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const CoeffTriangle tri = build_triangle({p, m, n}, 25);
        for (int k = 0; k < 25; ++k) {
          ASSERT_EQ(polynomial_step(q_polynomial(tri, k)), q_polynomial(tri, k + 1));
        }
      }
    }
  }
}

TEST(DerivPoly, DegreeAndZeroMultiplicity) {
  for (int p = 3; p <= 6; ++p) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        if (m + n == 0) continue;
        const SquigParams s{p, m, n};
        const CoeffTriangle tri = build_triangle(s, 24);
        for (int k = 0; k <= 24; ++k) {
          const DerivPolynomial q = q_polynomial(tri, k);
          const long long deg = k - std::max<long long>(0, ceil_div(k - m, p));
          EXPECT_EQ(q.degree(), deg);
          int z = 0;
          while (q.coeffs[static_cast<std::size_t>(z)] == 0) ++z;
          EXPECT_EQ(z, std::max<long long>(0, ceil_div(k - n, p)));
        }
      }
    }
  }
}

TEST(DerivPoly, Palindromic) {
  for (int p = 2; p <= 6; ++p) {
    for (int m = 0; m <= 3; ++m) {
      const CoeffTriangle tri = build_triangle({p, m, m}, 20);
      for (int k = 0; k <= 20; ++k) {
        for (int j = 0; j <= k; ++j) ASSERT_EQ(tri.coefficient(k, j), tri.coefficient(k, k - j));
      }
    }
  }
}

TEST(DerivPoly, KthDerivativeExamples) {
  const EvalContext ctx = make_context(4);
  const CoeffTriangle tri = build_triangle(cosquine_params(4), 6);
  for (double t : {0.2, 0.9, 1.5}) EXPECT_NEAR(kth_derivative_value(ctx, tri, 0, t), cq(ctx, t), 1e-15);

  const double quarter = ctx.pi_p() / 4.0;
  EXPECT_NEAR(kth_derivative_value(ctx, tri, 1, quarter), -std::pow(2.0, -0.75), 1e-14);

  // tq^4 = 2/3, i.e. u = -2/3: cq^4 = 3/5 and sq = tq cq.
  const double c = std::pow(0.6, 0.25);
  const double s = std::pow(2.0 / 3.0, 0.25) * c;
  const double t = arcsq_oracle(s, 4);
  EXPECT_NEAR(kth_derivative_value(ctx, tri, 3, t), 0.0, 1e-11);

  EXPECT_THROW(kth_derivative_value(ctx, tri, 1, 0.0), std::domain_error);
  EXPECT_THROW(kth_derivative_value(ctx, tri, 1, ctx.pi_p() / 2.0), std::domain_error);
}

TEST(DerivPoly, DerivativeChainFiniteDifference) {
  const double h = 1e-5;
  std::mt19937_64 rng(20240613);
  for (int p : {3, 4}) {
    const EvalContext ctx = make_context(p);
    std::uniform_real_distribution<double> dist(0.1, ctx.pi_p() / 4.0);
    for (const SquigParams s : {cosquine_params(p), squine_params(p), SquigParams{p, 2, 1}}) {
      const CoeffTriangle tri = build_triangle(s, 7);
      for (int trial = 0; trial < 20; ++trial) {
        const double t = dist(rng);
        for (int k = 0; k <= 6; ++k) {
          const double fd = (kth_derivative_value(ctx, tri, k, t + h) - kth_derivative_value(ctx, tri, k, t - h)) /
                            (2.0 * h);
          const double exact = kth_derivative_value(ctx, tri, k + 1, t);
          EXPECT_LE(std::abs(fd - exact), 1e-5 * std::max(1.0, std::abs(exact)))
              << to_string(s) << " k=" << k << " t=" << t;
        }
      }
    }
  }
}

TEST(DerivPoly, RootsOfQ3) {
  const CoeffTriangle tri = build_triangle(cosquine_params(4), 3);
  const RootSet r = real_roots(q_polynomial(tri, 3));
  EXPECT_EQ(r.zero_multiplicity, 1);
  ASSERT_EQ(r.negative_roots.size(), 1u);
  EXPECT_NEAR(r.negative_roots[0], -2.0 / 3.0, 1e-13);
}

TEST(DerivPoly, RootsOfQ0) {
  const RootSet r = real_roots({0, cosquine_params(4), ints({1})});
  EXPECT_EQ(r.zero_multiplicity, 0);
  EXPECT_TRUE(r.negative_roots.empty());
}

TEST(DerivPoly, RootsOfSixSquineQ4) {
  const CoeffTriangle tri = build_triangle(squine_params(6), 4);
  const DerivPolynomial q = q_polynomial(tri, 4);
  EXPECT_EQ(q.coeffs, ints({0, 100, 425, 60}));
  const RootSet r = real_roots(q);
  EXPECT_EQ(r.zero_multiplicity, 1);
  ASSERT_EQ(r.negative_roots.size(), 2u);
  EXPECT_NEAR(r.negative_roots[0], (-85.0 - std::sqrt(6265.0)) / 24.0, 1e-13);
  EXPECT_NEAR(r.negative_roots[1], (-85.0 + std::sqrt(6265.0)) / 24.0, 1e-13);
}

TEST(DerivPoly, RootCountsAndInterlacingSweep) {
  for (int p : {3, 4, 6}) {
    for (const SquigParams s : {cosquine_params(p), squine_params(p), SquigParams{p, 2, 3}}) {
      const auto chain = root_chain(s, 30);
      for (int k = 0; k <= 30; ++k) {
        const RootSet& r = chain[static_cast<std::size_t>(k)];
        ASSERT_EQ(static_cast<int>(r.negative_roots.size()),
                  k - std::max<long long>(0, ceil_div(k - s.m, p)) - std::max<long long>(0, ceil_div(k - s.n, p)));
        for (std::size_t i = 0; i < r.negative_roots.size(); ++i) {
          EXPECT_LT(r.negative_roots[i], 0.0);
          if (i > 0) EXPECT_LT(r.negative_roots[i - 1], r.negative_roots[i]);
        }
        if (k >= std::max(s.m, s.n)) {
          EXPECT_EQ(static_cast<long long>(r.negative_roots.size()) + r.zero_multiplicity + ceil_div(k - s.m, p), k);
        }
        if (k > 0) EXPECT_TRUE(interlacing_check(chain[static_cast<std::size_t>(k - 1)], r)) << to_string(s) << k;
      }
    }
  }
}

TEST(DerivPoly, RealRootsAgreesWithChain) {
  const CoeffTriangle tri = build_triangle(cosquine_params(4), 20);
  const auto chain = root_chain(cosquine_params(4), 20);
  for (int k : {5, 12, 20}) {
    EXPECT_EQ(real_roots(q_polynomial(tri, k)).negative_roots, chain[static_cast<std::size_t>(k)].negative_roots);
  }
}

TEST(DerivPoly, RootsAreRoots) {
  // Exact sign changes at the neighbouring doubles of each reported root.
  const CoeffTriangle tri = build_triangle(cosquine_params(4), 30);
  const auto chain = root_chain(cosquine_params(4), 30);
  for (int k : {10, 20, 30}) {
    const DerivPolynomial q = q_polynomial(tri, k);
    std::span<const BigInt> c(q.coeffs.data() + chain[static_cast<std::size_t>(k)].zero_multiplicity,
                              q.coeffs.size() - static_cast<std::size_t>(chain[static_cast<std::size_t>(k)].zero_multiplicity));
    for (double u : chain[static_cast<std::size_t>(k)].negative_roots) {
      const double below = u - 1e-13 * std::max(1.0, std::abs(u));
      const double above = u + 1e-13 * std::max(1.0, std::abs(u));
      EXPECT_NE(exact_sign(c, below), exact_sign(c, above)) << k << " " << u;
    }
  }
}

TEST(DerivPoly, RootCountMismatchIsAnError) {
  // A polynomial with complex roots (u^2 + u + 1) cannot be fully isolated.
  const DerivPolynomial fake{2, cosquine_params(4), ints({1, 1, 1})};
  EXPECT_THROW(detail::roots_from_predecessor(fake, {}), root_count_error);
}

TEST(DerivPoly, InterlacingCheckRejectsSharedRoot) {
  RootSet a{3, 1, {-2.0, -0.5}};
  RootSet b{4, 1, {-3.0, -2.0, -0.1}};
  EXPECT_FALSE(interlacing_check(a, b));
  RootSet c{4, 1, {-3.0, -1.0, -0.1}};
  EXPECT_TRUE(interlacing_check(a, c));
  RootSet d{4, 1, {-3.0, -1.0, -0.3, -0.1}};
  EXPECT_FALSE(interlacing_check(a, d));
  RootSet e{4, 1, {-3.0, -2.0 + 1e-12, -0.1}};
  EXPECT_FALSE(interlacing_check(a, e));
}

TEST(DerivPoly, InterlacingCosquineQ3Q4) {
  const auto chain = root_chain(cosquine_params(4), 4);
  EXPECT_TRUE(interlacing_check(chain[3], chain[4]));
}

TEST(DerivPoly, AlgebraicValues) {
  const AlgebraicValues v = algebraic_values(-2.0 / 3.0, 4);
  EXPECT_NEAR(v.cq, std::pow(0.6, 0.25), 1e-15);
  EXPECT_NEAR(v.cq, 0.880111736793393, 1e-12);

  const AlgebraicValues z = algebraic_values(0.0, 5);
  EXPECT_EQ(z.cq, 1.0);
  EXPECT_EQ(z.sq, 0.0);

  const double u = (-85.0 - std::sqrt(6265.0)) / 24.0;
  const AlgebraicValues w = algebraic_values(u, 6);
  EXPECT_NEAR(w.sq, std::pow((125.0 + std::sqrt(6265.0)) / 234.0, 1.0 / 6.0), 1e-14);

  for (int p : {3, 4, 6, 9}) {
    for (double x : {-0.01, -0.5, -1.0, -7.0, -100.0}) {
      const AlgebraicValues a = algebraic_values(x, p);
      EXPECT_NEAR(std::pow(a.cq, p) + std::pow(a.sq, p), 1.0, 1e-15);
    }
  }
  EXPECT_THROW(algebraic_values(0.1, 4), std::domain_error);
}

TEST(DerivPoly, CriticalValue) {
  EXPECT_NEAR(critical_value(1, 1, 2), 0.5, 1e-15);
  EXPECT_NEAR(critical_value(1, 1, 4), std::pow(0.25, 0.25), 1e-15);
  EXPECT_NEAR(critical_value(2, 1, 4), std::pow(4.0 / 27.0, 0.25), 1e-15);
  EXPECT_THROW(critical_value(0, 1, 4), invalid_params);

  // It is the maximum of cq^m sq^n on the first quadrant.
  const EvalContext ctx = make_context(4);
  double best = 0.0;
  for (int i = 0; i <= 20000; ++i) best = std::max(best, pow_general(ctx, 2, 1, ctx.pi_p() / 2.0 * i / 20000.0));
  EXPECT_NEAR(best, critical_value(2, 1, 4), 1e-7);
}

TEST(DerivPoly, InteriorZeroCountGrows) {
  // Interior zeros of the k-th derivative of cq on (0, pi_p/2) are the negative
  // roots of Q_k; their count never decreases for p > 2.
  for (int p : {3, 4, 5, 6}) {
    const auto chain = root_chain(cosquine_params(p), 30);
    for (int k = 1; k <= 30; ++k) {
      EXPECT_GE(chain[static_cast<std::size_t>(k)].negative_roots.size(),
                chain[static_cast<std::size_t>(k - 1)].negative_roots.size());
    }
    EXPECT_GT(chain[30].negative_roots.size(), chain[5].negative_roots.size());
  }
}
