#pragma once

/**
 * @file series.hpp
 * @brief MacLaurin and Taylor coefficients of cq^m(t) * sq^n(t).
 *
 * Only the powers t^(n + p j) carry nonzero MacLaurin coefficients, and the
 * signs alternate:
 *
 *   cq^m(t) sq^n(t) = sum_j (-1)^j a_j t^(n + p j),   a_j = F_j / (n + p j)!
 *
 * where F_j = q(n + p j, j) is an entry of the coefficient triangle.
 * maclaurin() produces a_j in binary64 with a single in-place working array
 * over the scaled coefficients q(k, j) / k!; integer_maclaurin() produces the
 * exact F_j.
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"
#include "squig/triangle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace squig {

/// Radius of convergence of the MacLaurin series, (pi_p / 4) sec(pi / p).
/// Infinite for p = 2.
inline double radius(int p, double pi_p) {
  if (p < 2) throw invalid_params("radius: p must be >= 2");
  if (p == 2) return std::numeric_limits<double>::infinity();
  return (pi_p / 4.0) / std::cos(std::numbers::pi / p);
}

/// Number of nonzero terms beyond the leading one needed for tolerance
/// epsilon on [0, 1]: ceil(-ln(eps) / (p ln R_p)).
///
/// For p = 2 the radius is infinite and the estimate is meaningless; the
/// sentinel 0 is returned and callers must pick J themselves (see
/// required_terms()).
inline int estimate_terms(int p, double pi_p, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("estimate_terms: epsilon must be > 0");
  if (!(epsilon < 1.0)) throw std::invalid_argument("estimate_terms: epsilon must be < 1");
  if (p < 2) throw invalid_params("estimate_terms: p must be >= 2");
  if (p == 2) return 0;
  const double r = radius(p, pi_p);
  return static_cast<int>(std::ceil(-std::log(epsilon) / (p * std::log(r))));
}

/// estimate_terms() for p >= 3; for p = 2 the smallest J whose first omitted
/// term on [0, 1] is below epsilon (the cosine/sine tails are bounded by 1/k!).
inline int required_terms(int p, double pi_p, double epsilon) {
  if (p != 2) return estimate_terms(p, pi_p, epsilon);
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("required_terms: epsilon must be in (0,1)");
  }
  int J = 0;
  double term = 1.0;  // 1/(2J)!
  while (term >= epsilon) {
    ++J;
    term /= (2.0 * J) * (2.0 * J - 1.0);
  }
  return J + 1;
}

struct MacLaurinTable {
  SquigParams params;
  int J = 0;
  /// a[j] >= 0 with coefficient of t^(n + p j) equal to (-1)^j a[j].
  std::vector<double> floats;
  /// Optional exact F_j with coefficient (-1)^j F_j / (n + p j)!.
  std::vector<BigInt> numerators;

  /// Signed coefficient of t^(n + p j).
  double coefficient(int j) const {
    const double a = floats.at(static_cast<std::size_t>(j));
    return (j % 2 == 0) ? a : -a;
  }

  int power(int j) const { return params.n + params.p * j; }
};

/// Exact F_0..F_J, F_j = q(n + p j, j), with one rolling row of the triangle.
inline std::vector<BigInt> integer_maclaurin(SquigParams params, int J) {
  validate(params, true);
  if (J < 0) throw std::invalid_argument("integer_maclaurin: J must be >= 0");
  const long long p = params.p, m = params.m, n = params.n;
  const long long K = n + p * J;

  // Entries with j > J never feed back into columns <= J.
  std::vector<BigInt> row(static_cast<std::size_t>(J) + 1, BigInt(0));
  std::vector<BigInt> F(static_cast<std::size_t>(J) + 1, BigInt(0));
  row[0] = 1;
  if (n == 0) F[0] = 1;
  for (long long k = 0; k < K; ++k) {
    for (long long j = std::min<long long>(J, k + 1); j >= 0; --j) {
      auto& cur = row[static_cast<std::size_t>(j)];
      cur *= (n - k + p * j);
      if (j > 0) cur += (m + k * (p - 1) - p * (j - 1)) * row[static_cast<std::size_t>(j - 1)];
    }
    const long long next = k + 1;
    if (next >= n && (next - n) % p == 0) {
      const long long j = (next - n) / p;
      if (j <= J) F[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)];
    }
  }
  return F;
}

/// F_j read straight off an existing triangle (rows n + p j must be present).
inline std::vector<BigInt> integer_maclaurin(const CoeffTriangle& tri, int J) {
  const SquigParams& s = tri.params();
  std::vector<BigInt> F;
  F.reserve(static_cast<std::size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) F.push_back(tri.coefficient(s.n + s.p * j, j));
  return F;
}

/// In-place computation of the MacLaurin magnitudes a[0..J].
///
/// f holds the scaled coefficients alpha(k, j) = q(k, j) / k! of the current
/// row; it is swept right to left from row k to row k+1, with one division by
/// k+1 per entry. Column j is frozen once k passes n + p j, at which point
/// f[j] is the final MacLaurin value.
inline MacLaurinTable maclaurin(SquigParams params, int J, bool with_numerators = false) {
  validate(params, true);
  if (J < 0) throw std::invalid_argument("maclaurin: J must be >= 0");
  const long long p = params.p, m = params.m, n = params.n;

  // f[j] * 2^e[j] is the working value. The intermediate columns grow far
  // beyond the final coefficients (past 1e289 at p = 10), so columns are
  // renormalized by exact powers of two instead of overflowing.
  std::vector<double> f(static_cast<std::size_t>(J) + 1, 0.0);
  std::vector<int> e(static_cast<std::size_t>(J) + 1, 0);
  f[0] = 1.0;
  const auto update = [&](long long j, double c_self, double c_left, bool with_left, double d) {
    const auto uj = static_cast<std::size_t>(j);
    if (!with_left) {
      f[uj] = c_self * f[uj] / d;
    } else {
      const auto ul = uj - 1;
      const int E = std::max(e[uj], e[ul]);
      const double self = e[uj] == E ? f[uj] : std::ldexp(f[uj], e[uj] - E);
      const double left = e[ul] == E ? f[ul] : std::ldexp(f[ul], e[ul] - E);
      f[uj] = (c_self * self + c_left * left) / d;
      e[uj] = E;
    }
    if (e[uj] != 0 || std::abs(f[uj]) > 0x1p512) {
      int shift = 0;
      f[uj] = std::frexp(f[uj], &shift);
      e[uj] += shift;
    }
  };

  const long long K = n + p * J;
  for (long long k = 0; k < K; ++k) {
    const long long lo = std::max<long long>(ceil_div(k + 1 - n, p), 0);
    const long long hi = std::min<long long>(k + 1 - ceil_div(k + 1 - m, p), J);
    const double d = static_cast<double>(k + 1);
    for (long long j = hi; j >= lo + 1; --j) {
      update(j, static_cast<double>(n - k + p * j), static_cast<double>(m + k * (p - 1) - p * (j - 1)), true, d);
    }
    if (lo > J) continue;
    // The left neighbour only belongs to row k when row k ended a column,
    // i.e. k = n + p(lo - 1).
    const bool with_left = (k - n) % p == 0 && lo != 0;
    update(lo, static_cast<double>(n - k + p * lo), static_cast<double>(m + k * (p - 1) - p * (lo - 1)), with_left,
           d);
  }
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::ldexp(f[j], e[j]);

  MacLaurinTable table{params, J, std::move(f), {}};
  if (with_numerators) table.numerators = integer_maclaurin(params, J);
  return table;
}

/// Coefficients of the Taylor series about pi_p / 4.
struct TaylorTable {
  SquigParams params;
  double center = 0.0;
  std::vector<double> coeffs;  // f_k, k = 0..K

  double evaluate(double t) const {
    const double x = t - center;
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

/// f_k = 2^(-h_k / p) * sum_j (-1)^j alpha(k, j), h_k = n + m + k(p - 2),
/// using the binary64 scaled recursion over full triangle rows.
inline TaylorTable taylor_quarter(SquigParams params, int K, double pi_p) {
  validate(params, true);
  if (K < 0) throw std::invalid_argument("taylor_quarter: K must be >= 0");
  const long long p = params.p, m = params.m, n = params.n;

  TaylorTable table{params, pi_p / 4.0, {}};
  table.coeffs.reserve(static_cast<std::size_t>(K) + 1);
  std::vector<double> alpha(static_cast<std::size_t>(K) + 2, 0.0);
  alpha[0] = 1.0;
  for (long long k = 0;; ++k) {
    double sum = 0.0;
    for (long long j = k; j >= 0; --j) {
      const double a = alpha[static_cast<std::size_t>(j)];
      sum += (j % 2 == 0) ? a : -a;
    }
    const double h = static_cast<double>(n + m + k * (p - 2));
    table.coeffs.push_back(std::exp2(-h / static_cast<double>(p)) * sum);
    if (k == K) break;

    const double inv = 1.0 / static_cast<double>(k + 1);
    for (long long j = k + 1; j >= 0; --j) {
      double v = static_cast<double>(n - k + p * j) * inv * alpha[static_cast<std::size_t>(j)];
      if (j > 0) {
        v += static_cast<double>(m + k * (p - 1) - p * (j - 1)) * inv *
             alpha[static_cast<std::size_t>(j - 1)];
      }
      alpha[static_cast<std::size_t>(j)] = v;
    }
  }
  return table;
}

}  // namespace squig
