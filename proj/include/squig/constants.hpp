#pragma once

/**
 * @file constants.hpp
 * @brief pi_p by Newton's method on the cosquine series, and Beta-function
 *        values B((m+1)/p, (n+1)/p) from term-wise integrated series.
 */

#include "squig/errors.hpp"
#include "squig/evalcore.hpp"
#include "squig/factors.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace squig {

inline constexpr double default_epsilon = 0x1p-53;

struct PiRecord {
  int p = 0;
  double value = 0.0;
  int iterations = 0;
  int J_used = 0;
  double initial_guess = 0.0;
};

namespace detail {

/// Closed form 2 Gamma(1/p)^2 / (p Gamma(2/p)); only used to size the series
/// before pi_p itself is known.
inline double pi_p_sizing_estimate(int p) {
  const double a = 1.0 / p;
  return 2.0 * std::tgamma(a) * std::tgamma(a) / (p * std::tgamma(2.0 * a));
}

inline PiRecord newton_pi(int p, int J) {
  const MacLaurinTable cqt = maclaurin(cosquine_params(p), J);
  const MacLaurinTable sqt = maclaurin(squine_params(p), J);

  PiRecord rec{p, 0.0, 0, J, 1.0};
  if (p > 2 && J >= 1) {
    // Consecutive magnitudes F_J/(pJ)! over F_{J-1}/(pJ-p)! are exactly the
    // factor a_J.
    const double ratio = cqt.floats[static_cast<std::size_t>(J)] /
                         cqt.floats[static_cast<std::size_t>(J - 1)];
    if (ratio > 0.0 && std::isfinite(ratio)) rec.initial_guess = pi_from_factors(ratio, p) / 4.0;
  }

  const double target = std::exp2(-1.0 / p);
  double t = rec.initial_guess;
  for (int it = 1; it <= 20; ++it) {
    const double g = horner_sparse(cqt, t) - target;
    const double dg = -std::pow(horner_sparse(sqt, t), p - 1);
    const double step = g / dg;
    t -= step;
    rec.iterations = it;
    const double ulp = std::nextafter(t, HUGE_VAL) - t;
    if (std::abs(step) < 4.0 * ulp) {
      rec.value = 4.0 * t;
      rec.initial_guess *= 4.0;
      return rec;
    }
  }
  throw convergence_error("compute_pi: Newton did not converge for p=" + std::to_string(p));
}

}  // namespace detail

/// pi_p = 4 t*, t* the root of cq(t) - 2^(-1/p), found by Newton with
/// derivative -sq^(p-1). The series length is re-derived from the computed
/// pi_p and the solve repeated if it changes.
inline PiRecord compute_pi_uncached(int p, double epsilon = default_epsilon) {
  if (p < 2) throw invalid_params("compute_pi: p must be >= 2");
  double sizing = detail::pi_p_sizing_estimate(p);
  int J = required_terms(p, sizing, epsilon);
  for (int round = 0; round < 4; ++round) {
    PiRecord rec = detail::newton_pi(p, J);
    const int J_check = required_terms(p, rec.value, epsilon);
    if (J_check == J) return rec;
    J = J_check;
  }
  throw convergence_error("compute_pi: series length did not settle for p=" + std::to_string(p));
}

/// Memoized compute_pi_uncached(), keyed by (p, epsilon).
inline PiRecord compute_pi(int p, double epsilon = default_epsilon) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, PiRecord> cache;
  const std::pair<int, double> key{p, epsilon};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  PiRecord rec = compute_pi_uncached(p, epsilon);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, rec).first->second;
}

/// Evaluation context with pi_p from compute_pi().
inline EvalContext make_context(int p, double epsilon = default_epsilon) {
  return EvalContext(p, compute_pi(p, epsilon).value, epsilon);
}

/// B((m+1)/p, (n+1)/p) = p * integral_0^(pi_p/4) (cq^m sq^n + cq^n sq^m) dt,
/// with both series integrated term by term. The series is lengthened until
/// its last integrated term drops below epsilon relative to the total, since
/// higher powers have larger coefficients than cq and sq themselves.
inline double beta_rational(int p, int m, int n, double epsilon = default_epsilon) {
  validate({p, m, n}, true);
  const double pi_p = compute_pi(p, epsilon).value;
  const double x = pi_p / 4.0;

  auto integrated = [&](SquigParams s) {
    for (int J = std::max(required_terms(p, pi_p, epsilon), 4);; J += J / 2) {
      const MacLaurinTable table = maclaurin(s, J);
      double total = 0.0;
      double last = 0.0;
      for (int j = J; j >= 0; --j) {
        const int power = table.power(j) + 1;
        const double term = table.coefficient(j) / power * std::pow(x, power);
        if (j == J) last = term;
        total += term;
      }
      if (std::abs(last) <= epsilon * std::abs(total)) return total;
      if (J > 20000) throw convergence_error("beta_rational: series did not converge");
    }
  };
  return p * (integrated({p, m, n}) + integrated({p, n, m}));
}

/// p * integral_0^(pi_p/2) cq^m sq^n dt by composite Simpson on evaluated
/// functions, with the step shrunk to the nearest even panel count.
inline double beta_quadrature(const EvalContext& ctx, int m, int n, double step = 1e-4) {
  validate({ctx.p(), m, n}, true);
  if (!(step > 0.0)) throw std::invalid_argument("beta_quadrature: step must be > 0");
  const double b = ctx.pi_p() / 2.0;
  auto panels = static_cast<long long>(std::ceil(b / step));
  if (panels % 2 != 0) ++panels;
  const double h = b / static_cast<double>(panels);
  double total = pow_general(ctx, m, n, 0.0) + pow_general(ctx, m, n, b);
  for (long long i = 1; i < panels; ++i) {
    total += (i % 2 == 0 ? 2.0 : 4.0) * pow_general(ctx, m, n, static_cast<double>(i) * h);
  }
  return ctx.p() * total * h / 3.0;
}

}  // namespace squig
