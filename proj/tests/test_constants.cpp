#include "squig/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace squig;

namespace {

const double reference_pi[] = {3.533277500570900, 3.708149354602744, 3.800600555953747, 3.855242593319996,
                         3.890174737625689, 3.913843287813181, 3.930614378886605, 3.942927897810032};

double ulps_apart(double a, double b) {
  return std::abs(a - b) / (std::nextafter(b, HUGE_VAL) - b);
}

}  // namespace

TEST(Constants, PiExamples) {
  EXPECT_LE(ulps_apart(compute_pi(3).value, 3.533277500570900), 5.0);
  EXPECT_LE(ulps_apart(compute_pi(7).value, 3.890174737625689), 5.0);
  EXPECT_NEAR(compute_pi(2).value, std::numbers::pi, 1e-14);
}

TEST(Constants, Reference) {
  for (int p = 3; p <= 10; ++p) {
    const PiRecord r = compute_pi(p);
    EXPECT_EQ(r.p, p);
    EXPECT_LE(ulps_apart(r.value, reference_pi[p - 3]), 5.0) << "p=" << p;
    EXPECT_LE(r.iterations, 6) << "p=" << p;
  }
}

TEST(Constants, NewtonIterationsTypical) {
  // The reference run needs 4 steps from the factor-sequence guess.
  for (int p = 4; p <= 10; ++p) EXPECT_LE(compute_pi(p).iterations, 4) << p;
}

TEST(Constants, TermCountsMatchReference) {
  const int nnz[] = {22, 34, 46, 58, 69, 81, 92, 103};
  for (int p = 3; p <= 10; ++p) {
    EXPECT_EQ(compute_pi(p).J_used, nnz[p - 3]);
    EXPECT_EQ(estimate_terms(p, reference_pi[p - 3], default_epsilon), nnz[p - 3]);
  }
}

TEST(Constants, MonotoneAndBounded) {
  double prev = 0.0;
  for (int p = 2; p <= 10; ++p) {
    const double v = compute_pi(p).value;
    EXPECT_GT(v, prev);
    EXPECT_LT(v, 4.0);
    prev = v;
  }
}

TEST(Constants, AgreesWithQuadrature) {
  for (int p = 3; p <= 10; ++p) EXPECT_NEAR(compute_pi(p).value, 2.0 * arcsq_oracle(1.0, p), 1e-11) << p;
}

TEST(Constants, AgreesWithGammaClosedForm) {
  for (int p = 3; p <= 10; ++p) {
    const double a = 1.0 / p;
    const double closed = 2.0 * std::tgamma(a) * std::tgamma(a) / (p * std::tgamma(2.0 * a));
    EXPECT_NEAR(compute_pi(p).value, closed, 1e-13) << p;
  }
}

TEST(Constants, MemoizedAndUncachedAgree) {
  const PiRecord a = compute_pi(6);
  const PiRecord b = compute_pi_uncached(6);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.J_used, b.J_used);
}

TEST(Constants, RejectsBadP) {
  EXPECT_THROW(compute_pi(1), invalid_params);
  EXPECT_THROW(beta_rational(4, -1, 0), invalid_params);
}

TEST(Constants, BetaExamples) {
  EXPECT_NEAR(beta_rational(2, 0, 0), std::numbers::pi, 1e-12);
  EXPECT_NEAR(beta_rational(4, 0, 0), 7.416298709205488, 1e-11);
  for (const auto& [p, m, n] : {std::tuple{4, 2, 1}, std::tuple{3, 1, 0}, std::tuple{5, 3, 1}}) {
    EXPECT_NEAR(beta_rational(p, m, n), beta_rational(p, n, m), 1e-13);
  }
}

TEST(Constants, BetaAgainstGamma) {
  for (int p = 2; p <= 6; ++p) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const double a = (m + 1.0) / p, b = (n + 1.0) / p;
        const double want = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
        EXPECT_NEAR(beta_rational(p, m, n), want, 1e-13 * std::max(1.0, want)) << p << m << n;
      }
    }
  }
}

TEST(Constants, BetaAgainstQuadrature) {
  for (const auto& [p, m, n] : {std::tuple{4, 0, 0}, std::tuple{4, 2, 1}, std::tuple{3, 1, 1}}) {
    const EvalContext ctx = make_context(p);
    EXPECT_NEAR(beta_rational(p, m, n), beta_quadrature(ctx, m, n), 1e-8);
  }
}
