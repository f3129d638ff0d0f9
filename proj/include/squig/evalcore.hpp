#pragma once

/**
 * @file evalcore.hpp
 * @brief Evaluation of squine, cosquine and tanquent on all of R.
 *
 * Arguments are folded into [0, pi_p / 4] with the trig-style identities
 *
 *   sq(-t) = -sq t            cq(-t) = cq t
 *   sq(t + pi_p) = -sq t      cq(t + pi_p) = -cq t
 *   sq(pi_p - t) = sq t       cq(pi_p - t) = -cq t
 *   sq(pi_p/2 - t) = cq t
 *
 * and the reduced value is a sparse Horner evaluation of a truncated
 * MacLaurin series. Since pi_p / 4 < 1 < R_p the series is well inside its
 * disc of convergence there.
 *
 * arcsq_oracle() is an independent route to the same functions: a
 * double-exponential quadrature of the arcsquine integral.
 */

#include "squig/errors.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace squig {

/// t^n * sum_j (-1)^j a[j] (t^p)^j, nested as b_{j-1} = a[j-1] - b_j t^p.
inline double horner_sparse(const MacLaurinTable& table, double t) {
  const double tp = std::pow(t, table.params.p);
  double b = 0.0;
  for (auto it = table.floats.rbegin(); it != table.floats.rend(); ++it) {
    b = *it - b * tp;
  }
  const int n = table.params.n;
  return n == 0 ? b : std::pow(t, n) * b;
}

class EvalContext {
 public:
  /// Builds both MacLaurin tables with J = required_terms(p, pi_p, epsilon).
  EvalContext(int p, double pi_p, double epsilon)
      : p_(p), pi_p_(pi_p), epsilon_(epsilon) {
    check_basics();
    const int J = required_terms(p, pi_p, epsilon);
    sq_ = maclaurin(squine_params(p), J);
    cq_ = maclaurin(cosquine_params(p), J);
  }

  /// Adopts precomputed tables (e.g. from a cache file).
  EvalContext(int p, double pi_p, double epsilon, MacLaurinTable sq_table,
              MacLaurinTable cq_table)
      : p_(p), pi_p_(pi_p), epsilon_(epsilon),
        sq_(std::move(sq_table)), cq_(std::move(cq_table)) {
    check_basics();
    if (sq_.params != squine_params(p) || cq_.params != cosquine_params(p)) {
      throw invalid_params("EvalContext: tables do not match p");
    }
    const int need = required_terms(p, pi_p, epsilon);
    if (sq_.J < need || cq_.J < need ||
        sq_.floats.size() != static_cast<std::size_t>(sq_.J) + 1 ||
        cq_.floats.size() != static_cast<std::size_t>(cq_.J) + 1) {
      throw invalid_params("EvalContext: tables too short for epsilon");
    }
  }

  int p() const noexcept { return p_; }
  double pi_p() const noexcept { return pi_p_; }
  double epsilon() const noexcept { return epsilon_; }
  const MacLaurinTable& sq_table() const noexcept { return sq_; }
  const MacLaurinTable& cq_table() const noexcept { return cq_; }

 private:
  void check_basics() const {
    if (p_ < 2) throw invalid_params("EvalContext: p must be >= 2");
    if (!(pi_p_ > 0.0 && pi_p_ / 4.0 < 1.0)) {
      throw invalid_params("EvalContext: need 0 < pi_p/4 < 1");
    }
    if (!(epsilon_ > 0.0 && epsilon_ < 1.0)) {
      throw std::invalid_argument("EvalContext: epsilon must be in (0,1)");
    }
  }

  int p_;
  double pi_p_;
  double epsilon_;
  MacLaurinTable sq_;
  MacLaurinTable cq_;
};

struct QuadrantReduction {
  double t_reduced = 0.0;  // in [0, pi_p / 4]
  bool use_co = false;     // evaluate the co-function at t_reduced
  int sign_sq = 1;
  int sign_cq = 1;
};

inline QuadrantReduction range_reduce(double t, double pi_p) {
  if (!std::isfinite(t)) throw std::domain_error("range_reduce: non-finite argument");
  QuadrantReduction r;
  double a = t;
  if (a < 0.0) {
    a = -a;
    r.sign_sq = -1;
  }
  a = std::fmod(a, 2.0 * pi_p);
  if (a >= pi_p) {
    a -= pi_p;
    r.sign_sq = -r.sign_sq;
    r.sign_cq = -r.sign_cq;
  }
  if (a > pi_p / 2.0) {
    a = pi_p - a;
    r.sign_cq = -r.sign_cq;
  }
  if (a > pi_p / 4.0) {
    a = pi_p / 2.0 - a;
    r.use_co = true;
  }
  r.t_reduced = a;
  return r;
}

/// (sq t, cq t) with a single reduction.
inline std::pair<double, double> sq_cq(const EvalContext& ctx, double t) {
  const QuadrantReduction r = range_reduce(t, ctx.pi_p());
  const double s = horner_sparse(ctx.sq_table(), r.t_reduced);
  const double c = horner_sparse(ctx.cq_table(), r.t_reduced);
  if (r.use_co) return {r.sign_sq * c, r.sign_cq * s};
  return {r.sign_sq * s, r.sign_cq * c};
}

inline double sq(const EvalContext& ctx, double t) { return sq_cq(ctx, t).first; }
inline double cq(const EvalContext& ctx, double t) { return sq_cq(ctx, t).second; }

inline double tq(const EvalContext& ctx, double t) {
  const QuadrantReduction r = range_reduce(t, ctx.pi_p());
  if (r.use_co && r.t_reduced == 0.0) {
    throw pole_error("tq: pole at t=" + std::to_string(t));
  }
  const auto [s, c] = sq_cq(ctx, t);
  return s / c;
}

/// cq(t)^m * sq(t)^n.
///
/// Negative powers, and any power when p is odd, are only accepted on the
/// closed first quadrant [0, pi_p/2]; a negative power of a zero value is a
/// domain error.
inline double pow_general(const EvalContext& ctx, int m, int n, double t) {
  if (!std::isfinite(t)) throw std::domain_error("pow_general: non-finite argument");
  const bool restricted = m < 0 || n < 0 || ctx.p() % 2 != 0;
  if (restricted && (t < 0.0 || t > ctx.pi_p() / 2.0)) {
    throw std::domain_error("pow_general: t outside the first quadrant");
  }
  const auto [s, c] = sq_cq(ctx, t);
  if ((m < 0 && c == 0.0) || (n < 0 && s == 0.0)) {
    throw std::domain_error("pow_general: negative power of zero");
  }
  const double cm = m == 0 ? 1.0 : std::pow(c, m);
  const double sn = n == 0 ? 1.0 : std::pow(s, n);
  return cm * sn;
}

/// arcsq(x) = integral_0^x (1 - u^p)^(1/p - 1) du by tanh-sinh quadrature.
///
/// The integrand has an integrable singularity at u = 1. Abscissae carry their
/// exact distance to the right end of the interval, so 1 - u is never formed
/// by cancellation, and 1 - u^p is evaluated as (1 - u)(1 + u + ... + u^(p-1)).
inline double arcsq_oracle(double x, int p, double tol = 1e-12) {
  if (p < 2) throw invalid_params("arcsq_oracle: p must be >= 2");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("arcsq_oracle: x outside [0,1]");
  if (!(tol > 0.0)) throw std::invalid_argument("arcsq_oracle: tol must be > 0");
  if (x == 0.0) return 0.0;

  const double expo = 1.0 / p - 1.0;
  const double gap = 1.0 - x;  // exact for x in [0.5, 1]
  auto integrand = [&](double u, double to_right) {
    const double one_minus_u = (to_right < 0.25) ? gap + to_right : 1.0 - u;
    double geometric = 0.0, power = 1.0;
    for (int i = 0; i < p; ++i) {
      geometric += power;
      power *= u;
    }
    return std::pow(one_minus_u * geometric, expo);
  };

  // u = (x/2)(1 + tanh(s)), s = (pi/2) sinh(tau).
  const double half = 0.5 * x;
  auto node = [&](double tau, double& weight) {
    const double s = 0.5 * std::numbers::pi * std::sinh(tau);
    const double ds = 0.5 * std::numbers::pi * std::cosh(tau);
    const double e = std::exp(-2.0 * std::abs(s));
    // Distances to the two ends, each computed without cancellation.
    const double near = x * e / (1.0 + e);
    const double far = x - near;
    const double u = s >= 0.0 ? far : near;
    const double to_right = s >= 0.0 ? near : far;
    const double sech = 2.0 * std::sqrt(e) / (1.0 + e);
    weight = half * ds * sech * sech;
    if (to_right <= 0.0 || u <= 0.0) {
      weight = 0.0;
      return 0.0;
    }
    return integrand(u, to_right);
  };

  // Neumaier-compensated running sums; deep levels add ~1e5 terms.
  struct Compensated {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
      const double t = sum + v;
      carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    double value() const { return sum + carry; }
  };

  Compensated sum;
  auto add_level = [&](double h, bool odd_only) {
    const int stride = odd_only ? 2 : 1;
    for (int side = -1; side <= 1; side += 2) {
      for (int i = odd_only ? 1 : (side < 0 ? 1 : 0);; i += stride) {
        const double tau = side * i * h;
        double w = 0.0;
        const double fx = node(tau, w);
        const double term = w * fx;
        sum.add(term);
        if (w == 0.0 || (std::abs(tau) > 3.0 && std::abs(term) < 1e-20 * std::abs(sum.value()))) break;
        if (std::abs(tau) > 8.0) break;
      }
    }
  };

  double h = 0.5;
  add_level(h, false);
  double estimate = h * sum.value();
  double last_delta = HUGE_VAL;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    add_level(h, true);
    const double next = h * sum.value();
    const double delta = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && delta <= 0.1 * tol) break;
    // Quadratic convergence stalls once the deltas reach rounding noise.
    if (level >= 4 && delta >= 0.5 * last_delta && delta <= 64.0 * tol) break;
    last_delta = delta;
  }
  return estimate;
}

}  // namespace squig
