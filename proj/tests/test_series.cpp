#include "squig/constants.hpp"
#include "squig/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace squig;

namespace {

constexpr double eps53 = 0x1p-53;

double exact_magnitude(const MacLaurinTable& t, int j) {
  const int k = t.power(j);
  return ratio_to_double(t.numerators[static_cast<std::size_t>(j)], falling_factorial(k, k));
}

}  // namespace

TEST(Series, EstimateTermsReference) {
  EXPECT_EQ(estimate_terms(4, 3.708149354602744, eps53), 34);
  EXPECT_EQ(estimate_terms(3, 3.533277500570900, eps53), 22);
  EXPECT_EQ(estimate_terms(10, 3.942927897810032, eps53), 103);
}

TEST(Series, EstimateTermsEdgeCases) {
  EXPECT_EQ(estimate_terms(2, 3.141592653589793, eps53), 0);
  EXPECT_THROW(estimate_terms(4, 3.7, 0.0), std::invalid_argument);
  EXPECT_THROW(estimate_terms(4, 3.7, -1.0), std::invalid_argument);
  EXPECT_THROW(estimate_terms(4, 3.7, 1.0), std::invalid_argument);
  EXPECT_LT(estimate_terms(4, 3.708149354602744, 1e-8), 34);
  // For p = 2 the fallback still reaches the tolerance on [0, 1].
  const int J = required_terms(2, std::numbers::pi, eps53);
  const MacLaurinTable c = maclaurin(cosquine_params(2), J);
  EXPECT_LT(c.floats.back(), eps53);
}

TEST(Series, MaclaurinExamples) {
  const MacLaurinTable c = maclaurin(cosquine_params(4), 3);
  EXPECT_EQ(c.floats[0], 1.0);
  EXPECT_EQ(c.floats[1], 0.25);
  EXPECT_NEAR(c.floats[2], 0.05625, 1e-17);
  EXPECT_EQ(c.coefficient(1), -0.25);

  const MacLaurinTable s = maclaurin(squine_params(4), 1);
  EXPECT_EQ(s.floats[0], 1.0);
  EXPECT_EQ(s.coefficient(1), -0.15);

  const MacLaurinTable cos2 = maclaurin(cosquine_params(2), 5);
  double fact = 1.0;
  for (int j = 0; j <= 5; ++j) {
    if (j > 0) fact *= (2.0 * j) * (2.0 * j - 1.0);
    EXPECT_NEAR(cos2.floats[static_cast<std::size_t>(j)], 1.0 / fact, 4.5e-16 / fact);
  }
}

TEST(Series, IntegerMaclaurinExamples) {
  EXPECT_EQ(integer_maclaurin(squine_params(4), 3), (std::vector<BigInt>{1, 18, 14364, 70203672}));
  EXPECT_EQ(integer_maclaurin(cosquine_params(4), 3), (std::vector<BigInt>{1, 6, 2268, 7434504}));
  for (const BigInt& f : integer_maclaurin(cosquine_params(2), 20)) EXPECT_EQ(f, 1);
  for (const BigInt& f : integer_maclaurin(squine_params(2), 20)) EXPECT_EQ(f, 1);
}

TEST(Series, IntegerMaclaurinFromTriangle) {
  for (const SquigParams s : {cosquine_params(4), squine_params(5), SquigParams{3, 2, 3}}) {
    const int J = 8;
    const CoeffTriangle tri = build_triangle(s, s.n + s.p * J);
    EXPECT_EQ(integer_maclaurin(tri, J), integer_maclaurin(s, J));
  }
}

TEST(Series, AlgorithmOneMatchesExact) {
  for (int p = 2; p <= 10; ++p) {
    for (auto [m, n] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 3}}) {
      const MacLaurinTable t = maclaurin({p, m, n}, 40, true);
      for (int j = 0; j <= 40; ++j) {
        const double want = exact_magnitude(t, j);
        const double got = t.floats[static_cast<std::size_t>(j)];
        ASSERT_GT(got, 0.0);
        ASSERT_TRUE(std::isfinite(got));
        EXPECT_LE(std::abs(got - want), 1e-13 * want) << "p=" << p << " m=" << m << " n=" << n << " j=" << j;
      }
    }
  }
}

TEST(Series, LeadingTermIsOne) {
  for (int p = 2; p <= 9; ++p) {
    EXPECT_EQ(maclaurin(cosquine_params(p), 4).floats[0], 1.0);
    EXPECT_EQ(maclaurin(squine_params(p), 4).floats[0], 1.0);
  }
}

TEST(Series, SparsityOfPowers) {
  // Coefficient of t^k in cq^m sq^n is q(k, j) / k! up to sign when k = n + p j,
  // and row k of the triangle sums to zero in the alternating sense otherwise.
  for (const SquigParams s : {cosquine_params(4), squine_params(3), SquigParams{5, 2, 1}}) {
    const CoeffTriangle tri = build_triangle(s, 30);
    for (int k = 0; k <= 30; ++k) {
      // f^(k)(0) = q(k, j*) with j* the only column whose sq power vanishes.
      BigInt value = 0;
      for (const auto& [j, q] : tri.row(k)) {
        if (s.n - k + static_cast<long long>(s.p) * j == 0) value += (j % 2 == 0) ? q : BigInt(-q);
      }
      const bool on_lattice = k >= s.n && (k - s.n) % s.p == 0;
      EXPECT_EQ(value != 0, on_lattice) << to_string(s) << " k=" << k;
    }
  }
}

TEST(Series, CrossSymmetryOfSquineNumerators) {
  for (int p = 3; p <= 6; ++p) {
    const int J = 6;
    const auto S = integer_maclaurin(squine_params(p), J);
    const CoeffTriangle tri = build_triangle(cosquine_params(p), p * J + 1);
    for (int j = 0; j <= J; ++j) EXPECT_EQ(S[static_cast<std::size_t>(j)], tri.coefficient(p * j + 1, 1 + (p - 1) * j));
  }
}

TEST(Series, RatioConvergesToRadius) {
  const double pi4 = compute_pi(4).value;
  const MacLaurinTable t = maclaurin(cosquine_params(4), 34);
  const double ratio = t.floats[34] / t.floats[33];
  const double limit = std::pow(radius(4, pi4), -4.0);
  EXPECT_LE(std::abs(ratio / limit - 1.0), 0.02);
}

TEST(Series, Radius) {
  EXPECT_EQ(radius(2, std::numbers::pi), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(radius(4, 3.708149354602744), 1.311, 1e-3);
  double prev = std::numeric_limits<double>::infinity();
  for (int p = 3; p <= 50; ++p) {
    const double r = radius(p, compute_pi(p).value);
    EXPECT_GT(r, 1.0);
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Series, TaylorQuarterExamples) {
  const double pi4 = compute_pi(4).value;
  const TaylorTable t = taylor_quarter(cosquine_params(4), 60, pi4);
  EXPECT_NEAR(t.coeffs[0], std::pow(2.0, -0.25), 1e-15);
  EXPECT_NEAR(t.coeffs[1], -std::pow(2.0, -0.75), 1e-15);
  EXPECT_EQ(t.center, pi4 / 4.0);

  const EvalContext ctx = make_context(4);
  const double x = pi4 / 4.0 + 0.1;
  EXPECT_NEAR(t.evaluate(x), cq(ctx, x), 1e-10);
}

TEST(Series, TaylorQuarterValueAtCenter) {
  for (int p = 3; p <= 6; ++p) {
    const double pi_p = compute_pi(p).value;
    for (auto [m, n] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 3}}) {
      const TaylorTable t = taylor_quarter({p, m, n}, 3, pi_p);
      EXPECT_NEAR(t.coeffs[0], std::exp2(-static_cast<double>(m + n) / p), 1e-15);
    }
  }
}

TEST(Series, TaylorQuarterMatchesFunctionsNearCenter) {
  const EvalContext ctx = make_context(3);
  const TaylorTable ts = taylor_quarter(squine_params(3), 40, ctx.pi_p());
  for (double d : {-0.2, -0.05, 0.05, 0.2}) {
    const double x = ctx.pi_p() / 4.0 + d;
    EXPECT_NEAR(ts.evaluate(x), sq(ctx, x), 1e-12) << d;
  }
}

TEST(Series, RejectsBadInput) {
  EXPECT_THROW(maclaurin({4, -1, 1}, 4), invalid_params);
  EXPECT_THROW(maclaurin({4, 1, 0}, -1), std::invalid_argument);
  EXPECT_THROW(integer_maclaurin(SquigParams{1, 1, 0}, 4), invalid_params);
  EXPECT_THROW(taylor_quarter({4, 1, 0}, -1, 3.7), std::invalid_argument);
}
