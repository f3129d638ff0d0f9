#pragma once

/**
 * @file factors.hpp
 * @brief Factor sequences a_j with F_j / (n + p j)! = a_0 a_1 ... a_j.
 *
 * a_j = F_j / (F_{j-1} (n + p j)^(p falling)) tends to R_p^(-p), so the
 * expansion
 *
 *   f(t) = t^n sum_k prod_{j<=k} (-a_j t^p)
 *
 * has terms of comparable size, and Euler's identity turns it into the
 * continued fraction
 *
 *   f(t) = t^n / (1 + a_1 x / (1 - a_1 x + a_2 x / (1 - a_2 x + ...))),  x = t^p.
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace squig {

struct FactorSequence {
  SquigParams params;
  std::vector<BigRational> exact;  // a_0..a_J, lowest terms
  std::vector<double> values;      // binary64 shadows

  int J() const { return static_cast<int>(values.size()) - 1; }
};

/// a_0 = F_0 / n!, a_j = F_j / (F_{j-1} (n + p j)^(p falling)).
inline FactorSequence factor_sequence(const std::vector<BigInt>& F, SquigParams params) {
  validate(params, true);
  if (F.empty()) throw std::invalid_argument("factor_sequence: need F_0");
  FactorSequence fs{params, {}, {}};
  fs.exact.reserve(F.size());
  fs.values.reserve(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) {
    BigRational a;
    if (j == 0) {
      a = BigRational(F[0], falling_factorial(params.n, params.n));
    } else {
      const long long top = params.n + static_cast<long long>(params.p) * static_cast<long long>(j);
      const BigInt den = F[j - 1] * falling_factorial(top, params.p);
      if (den == 0) throw std::domain_error("factor_sequence: zero F_{j-1}");
      a = BigRational(F[j], den);
    }
    fs.values.push_back(to_double(a));
    fs.exact.push_back(std::move(a));
  }
  return fs;
}

inline FactorSequence factor_sequence(SquigParams params, int J) {
  return factor_sequence(integer_maclaurin(params, J), params);
}

struct ExpansionResult {
  double value = 0.0;
  int terms_used = 0;
};

/// t^n * sum_{k <= terms-1} prod_{j=1..k} (-a_j t^p), a fixed number of terms.
inline double partial_sum(const FactorSequence& fs, double t, int terms) {
  if (terms < 1 || terms > fs.J() + 1) {
    throw std::out_of_range("partial_sum: terms must be in 1..J+1");
  }
  const double x = std::pow(t, fs.params.p);
  double b = std::pow(t, fs.params.n) * fs.values[0];
  double sum = b;
  for (int j = 1; j < terms; ++j) {
    b *= -fs.values[static_cast<std::size_t>(j)] * x;
    sum += b;
  }
  return sum;
}

/// Sums b_0 = t^n, b_j = -a_j t^p b_{j-1} until |b_j| < epsilon (that term
/// is not added). Throws convergence_error if the factors run out first.
inline ExpansionResult eval_factor_expansion(const FactorSequence& fs, double t, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("eval_factor_expansion: epsilon must be > 0");
  const double x = std::pow(t, fs.params.p);
  double b = std::pow(t, fs.params.n) * fs.values[0];
  ExpansionResult r{b, 1};
  for (int j = 1; j <= fs.J(); ++j) {
    b *= -fs.values[static_cast<std::size_t>(j)] * x;
    if (std::abs(b) < epsilon) return r;
    r.value += b;
    ++r.terms_used;
  }
  throw convergence_error("eval_factor_expansion: update still above epsilon after " +
                          std::to_string(fs.J()) + " factors at t=" + std::to_string(t));
}

/// Euler continued fraction truncated after a_depth, evaluated bottom-up.
/// Equal (as a finite identity) to partial_sum(fs, t, depth + 1).
inline double continued_fraction(const FactorSequence& fs, double t, int depth) {
  if (depth < 0 || depth > fs.J()) {
    throw std::out_of_range("continued_fraction: depth must be in 0..J");
  }
  const double x = std::pow(t, fs.params.p);
  const double lead = std::pow(t, fs.params.n) * fs.values[0];
  if (depth == 0) return lead;

  // E_j = 1 - a_j x + a_{j+1} x / E_{j+1},  E_depth = 1 - a_depth x.
  auto r = [&](int j) { return -fs.values[static_cast<std::size_t>(j)] * x; };
  double e = 1.0 + r(depth);
  for (int j = depth - 1; j >= 1; --j) {
    if (e == 0.0) throw zero_denominator_error(t, j + 1);
    e = 1.0 + r(j) - r(j + 1) / e;
  }
  if (e == 0.0) throw zero_denominator_error(t, 1);
  const double top = 1.0 - r(1) / e;
  if (top == 0.0) throw zero_denominator_error(t, 0);
  return lead / top;
}

/// One level of the integer-coefficient form of the continued fraction,
/// obtained from the Euler form by the equivalence transformation that
/// scales level j by F_{j-1} (n + p j)^(p falling):
///
///   F_0 t^n / (n! + N_1 x / (D_1 - F_1 x + N_2 x / (D_2 - F_2 x + ...)))
///
/// Level 0 carries only the constant denominator n!.
struct IntegerCfLevel {
  BigInt numerator;        // N_j, multiplies x (unused at level 0)
  BigInt denominator;      // D_j (n! at level 0)
  BigInt denominator_x;    // F_j, subtracted times x (zero at level 0)
};

inline std::vector<IntegerCfLevel> integer_continued_fraction(const std::vector<BigInt>& F,
                                                              SquigParams params, int depth) {
  validate(params, true);
  if (depth < 0 || static_cast<std::size_t>(depth) >= F.size()) {
    throw std::out_of_range("integer_continued_fraction: depth must be < F.size()");
  }
  const long long p = params.p, n = params.n;
  auto pfall = [&](long long j) { return falling_factorial(n + p * j, params.p); };
  const BigInt nfact = falling_factorial(n, params.n);

  std::vector<IntegerCfLevel> levels;
  levels.push_back({BigInt(0), nfact, BigInt(0)});
  for (long long j = 1; j <= depth; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    BigInt num = (j == 1) ? BigInt(nfact * F[1]) : BigInt(F[ju - 2] * F[ju] * pfall(j - 1));
    levels.push_back({std::move(num), F[ju - 1] * pfall(j), F[ju]});
  }
  return levels;
}

/// Bottom-up binary64 evaluation of integer_continued_fraction().
inline double evaluate_integer_cf(const std::vector<IntegerCfLevel>& levels,
                                  const std::vector<BigInt>& F, SquigParams params, double t) {
  const double x = std::pow(t, params.p);
  double tail = 0.0;  // N_{j+1} x / (...) below level j
  for (std::size_t j = levels.size(); j-- > 1;) {
    const double d = to_double(levels[j].denominator) - to_double(levels[j].denominator_x) * x + tail;
    if (d == 0.0) throw zero_denominator_error(t, static_cast<int>(j));
    tail = to_double(levels[j].numerator) * x / d;
  }
  const double top = to_double(levels[0].denominator) + tail;
  if (top == 0.0) throw zero_denominator_error(t, 0);
  return to_double(F.at(0)) * std::pow(t, params.n) / top;
}

/// Starting value for pi_p from the limit pi_p = lim 4 cos(pi/p) a_j^(-1/p).
inline double pi_from_factors(double a_J, int p) {
  if (!(a_J > 0.0)) throw std::domain_error("pi_from_factors: a_J must be > 0");
  return 4.0 * std::cos(std::numbers::pi / p) * std::pow(a_J, -1.0 / p);
}

}  // namespace squig
