#pragma once

/**
 * @file derivpoly.hpp
 * @brief Derivative polynomials Q_k(u) and their roots.
 *
 * With u = -tq^p(t),
 *
 *   d^k/dt^k cq^m sq^n = cq^(m-k) sq^(n-k) Q_k(u) / (1 - u)^k,
 *   Q_{k+1}(u) = (n - k + (m + k(p-1)) u) Q_k(u) + p u (1 - u) Q_k'(u).
 *
 * For m, n >= 0 every Q_k is real-rooted: u = 0 with multiplicity
 * ceil((k-n)/p), plus simple negative roots that interlace those of Q_{k+1}.
 * real_roots() uses that interlacing to bracket each root and decides every
 * bisection sign exactly.
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"
#include "squig/evalcore.hpp"
#include "squig/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace squig {

struct DerivPolynomial {
  int k = 0;
  SquigParams params;
  std::vector<BigInt> coeffs;  // coeffs[j] = q(k, j), no trailing zeros

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const DerivPolynomial&, const DerivPolynomial&) = default;
};

namespace detail {

inline void trim(std::vector<BigInt>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(0);
}

}  // namespace detail

inline DerivPolynomial q_polynomial(const CoeffTriangle& tri, int k) {
  const auto& row = tri.row(k);  // throws out_of_range
  DerivPolynomial q{k, tri.params(), {}};
  const int top = row.empty() ? 0 : row.rbegin()->first;
  q.coeffs.assign(static_cast<std::size_t>(top) + 1, BigInt(0));
  for (const auto& [j, v] : row) q.coeffs[static_cast<std::size_t>(j)] = v;
  detail::trim(q.coeffs);
  return q;
}

/// Q_{k+1} from Q_k via the polynomial recursion.
inline DerivPolynomial polynomial_step(const DerivPolynomial& q) {
  const long long p = q.params.p, m = q.params.m, n = q.params.n, k = q.k;
  const std::size_t d = q.coeffs.size();
  std::vector<BigInt> out(d + 1, BigInt(0));
  for (std::size_t jj = 0; jj < d; ++jj) {
    const BigInt& c = q.coeffs[jj];
    if (c == 0) continue;
    const long long j = static_cast<long long>(jj);
    // (n - k) c u^j + (m + k(p-1)) c u^(j+1) + p j c (u^j - u^(j+1))
    out[jj] += (n - k + p * j) * c;
    out[jj + 1] += (m + k * (p - 1) - p * j) * c;
  }
  detail::trim(out);
  return {q.k + 1, q.params, std::move(out)};
}

/// k-th derivative of cq^m sq^n at t in (0, pi_p/2), via
/// sum_j (-1)^j q(k, j) cq^(m + k(p-1) - p j) sq^(n - k + p j).
inline double kth_derivative_value(const EvalContext& ctx, const CoeffTriangle& tri, int k,
                                   double t) {
  const SquigParams& s = tri.params();
  if (s.p != ctx.p()) throw invalid_params("kth_derivative_value: p mismatch");
  if (!(t > 0.0 && t < ctx.pi_p() / 2.0)) {
    throw std::domain_error("kth_derivative_value: t must lie in (0, pi_p/2)");
  }
  const auto [sv, cv] = sq_cq(ctx, t);
  double total = 0.0;
  for (const auto& [j, q] : tri.row(k)) {
    const long long ce = s.m + static_cast<long long>(k) * (s.p - 1) -
                         static_cast<long long>(s.p) * j;
    const long long se = s.n - k + static_cast<long long>(s.p) * j;
    const double term = to_double(q) * std::pow(cv, static_cast<double>(ce)) *
                        std::pow(sv, static_cast<double>(se));
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

struct RootSet {
  int k = 0;
  int zero_multiplicity = 0;
  std::vector<double> negative_roots;  // strictly increasing, all < 0
};

/// Number of negative roots the theorem predicts for Q_k.
inline int expected_negative_roots(const SquigParams& s, int k) {
  const BandLimits b = band_limits(s, k);
  return std::max(0, b.hi - b.lo);
}

namespace detail {

/// Roots of the polynomial with u^z divided out (coefficients `reduced`,
/// constant term positive), one per bracket that shows an exact sign change.
inline std::vector<double> isolate_roots(std::span<const BigInt> reduced,
                                         const std::vector<double>& previous_roots) {
  std::vector<double> roots;
  if (reduced.size() < 2) return roots;

  // Cauchy bound 1 + max|c_i| / |c_lead|.
  BigInt biggest = 0;
  for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
    biggest = std::max(biggest, BigInt(boost::multiprecision::abs(reduced[i])));
  }
  const double bound =
      1.0 + ratio_to_double(biggest, boost::multiprecision::abs(reduced.back()));

  std::vector<double> edges;
  edges.reserve(previous_roots.size() + 2);
  edges.push_back(-std::nextafter(bound, HUGE_VAL) * 1.0000001);
  for (double v : previous_roots) {
    if (v > edges.back() && v < 0.0) edges.push_back(v);
  }
  edges.push_back(0.0);

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double a = edges[i], b = edges[i + 1];
    int sa = exact_sign(reduced, a);
    const int sb = exact_sign(reduced, b);
    if (sa == 0) {
      roots.push_back(a);
      continue;
    }
    if (sb == 0 || sa == sb) continue;
    // Bisect to full binary64 resolution.
    for (;;) {
      const double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;
      const int sm = exact_sign(reduced, mid);
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
    roots.push_back(a + 0.5 * (b - a));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Roots of `q`, given the negative roots of its predecessor in the chain.
inline RootSet roots_from_predecessor(const DerivPolynomial& q,
                                      const std::vector<double>& previous_roots) {
  RootSet out;
  out.k = q.k;
  std::size_t z = 0;
  while (z + 1 < q.coeffs.size() && q.coeffs[z] == 0) ++z;
  if (q.coeffs[z] == 0) throw root_count_error("real_roots: zero polynomial");
  out.zero_multiplicity = static_cast<int>(z);
  std::span<const BigInt> reduced(q.coeffs.data() + z, q.coeffs.size() - z);
  if (reduced.front() < 0) {
    throw root_count_error("real_roots: negative constant term after removing u = 0");
  }
  out.negative_roots = isolate_roots(reduced, previous_roots);

  const int want = static_cast<int>(reduced.size()) - 1;
  if (static_cast<int>(out.negative_roots.size()) != want) {
    throw root_count_error("real_roots: found " + std::to_string(out.negative_roots.size()) +
                           " negative roots of Q_" + std::to_string(q.k) + ", expected " +
                           std::to_string(want));
  }
  return out;
}

}  // namespace detail

/// Root sets of Q_0..Q_K for one parameter set (m, n >= 0).
inline std::vector<RootSet> root_chain(SquigParams params, int K) {
  validate(params, true);
  std::vector<RootSet> chain;
  chain.reserve(static_cast<std::size_t>(K) + 1);
  DerivPolynomial q{0, params, {BigInt(1)}};
  std::vector<double> previous;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) q = polynomial_step(q);
    chain.push_back(detail::roots_from_predecessor(q, previous));
    previous = chain.back().negative_roots;
  }
  return chain;
}

/// Zero multiplicity and negative roots of Q_k. The brackets come from the
/// roots of Q_{k-1}, which are rebuilt from Q_0 for the same parameters.
inline RootSet real_roots(const DerivPolynomial& q) {
  validate(q.params, true);
  std::vector<double> previous;
  if (q.k > 0) previous = root_chain(q.params, q.k - 1).back().negative_roots;
  RootSet out = detail::roots_from_predecessor(q, previous);

  const int zeros = static_cast<int>(std::max<long long>(0, ceil_div(q.k - q.params.n, q.params.p)));
  if (out.zero_multiplicity != zeros ||
      static_cast<int>(out.negative_roots.size()) != expected_negative_roots(q.params, q.k)) {
    throw root_count_error("real_roots: root bookkeeping of Q_" + std::to_string(q.k) +
                           " disagrees with the band of " + to_string(q.params));
  }
  return out;
}

/// Strict interlacing of the negative roots of consecutive orders: merged in
/// increasing order the two lists alternate, neighbours are separated by more
/// than `separation`, the counts differ by at most one and all roots are
/// negative.
inline bool interlacing_check(const RootSet& lower, const RootSet& upper,
                              double separation = 1e-10) {
  const auto& v = lower.negative_roots;
  const auto& u = upper.negative_roots;
  const auto rk = static_cast<long long>(v.size());
  const auto rk1 = static_cast<long long>(u.size());
  if (std::abs(rk1 - rk) > 1) return false;

  std::vector<std::pair<double, int>> merged;
  merged.reserve(v.size() + u.size());
  for (double x : v) merged.emplace_back(x, 0);
  for (double x : u) merged.emplace_back(x, 1);
  std::sort(merged.begin(), merged.end());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (!(merged[i].first < 0.0)) return false;
    if (i == 0) continue;
    if (merged[i].second == merged[i - 1].second) return false;
    if (!(merged[i].first - merged[i - 1].first > separation)) return false;
  }
  return true;
}

struct AlgebraicValues {
  double cq;
  double sq;
};

/// First-quadrant (cq, sq) where -tq^p takes the value u <= 0:
/// cq = (1 - u)^(-1/p), sq = (u / (u - 1))^(1/p).
inline AlgebraicValues algebraic_values(double u, int p) {
  if (p < 2) throw invalid_params("algebraic_values: p must be >= 2");
  if (!(u <= 0.0)) throw std::domain_error("algebraic_values: u must be <= 0");
  const double inv_p = 1.0 / p;
  const double c = std::pow(1.0 - u, -inv_p);
  const double s = u == 0.0 ? 0.0 : std::pow(u / (u - 1.0), inv_p);
  return {c, s};
}

/// Value of cq^m sq^n at the zero of its first derivative:
/// (m^m n^n / (m+n)^(m+n))^(1/p).
inline double critical_value(int m, int n, int p) {
  if (m <= 0 || n <= 0) throw invalid_params("critical_value: m and n must be positive");
  if (p < 2) throw invalid_params("critical_value: p must be >= 2");
  const double dm = m, dn = n;
  const double log_value = dm * std::log(dm) + dn * std::log(dn) - (dm + dn) * std::log(dm + dn);
  return std::exp(log_value / p);
}

}  // namespace squig
