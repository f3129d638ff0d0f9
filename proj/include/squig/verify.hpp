#pragma once

/**
 * @file verify.hpp
 * @brief Oracle sweeps: every pipeline stage checked against an independent
 *        route to the same numbers.
 */

#include "squig/constants.hpp"
#include "squig/derivpoly.hpp"
#include "squig/evalcore.hpp"
#include "squig/explicit.hpp"
#include "squig/factors.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace squig {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline const std::vector<SquigParams>& oracle_params() {
  static const std::vector<SquigParams> sweep = [] {
    std::vector<SquigParams> v;
    for (int p : {2, 3, 4}) {
      for (auto [m, n] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 1}}) v.push_back({p, m, n});
    }
    return v;
  }();
  return sweep;
}

inline CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace detail

/// explicit_coefficient equals the triangle for k <= K_max.
inline CheckResult check_explicit_vs_triangle(int K_max = 12) {
  return detail::run_check("explicit formula = triangle", [&]() -> std::string {
    for (const auto& s : detail::oracle_params()) {
      const CoeffTriangle tri = build_triangle(s, K_max);
      for (int k = 0; k <= K_max; ++k) {
        for (int j = 0; j <= k; ++j) {
          if (explicit_coefficient(s, k, j) != tri.coefficient(k, j)) {
            return to_string(s) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
          }
        }
      }
    }
    return {};
  });
}

/// matrix_factorial_row equals the triangle for k <= K_max.
inline CheckResult check_matrix_vs_triangle(int K_max = 15) {
  return detail::run_check("matrix product = triangle", [&]() -> std::string {
    for (const auto& s : detail::oracle_params()) {
      const CoeffTriangle tri = build_triangle(s, K_max);
      for (int k = 0; k <= K_max; ++k) {
        const auto row = matrix_factorial_row(s, k, K_max + 1);
        for (int j = 0; j <= K_max; ++j) {
          if (row[static_cast<std::size_t>(j)] != tri.coefficient(k, j)) {
            return to_string(s) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
          }
        }
      }
    }
    return {};
  });
}

/// polynomial_step reproduces the next triangle row.
inline CheckResult check_polynomial_step(int K_max = 30) {
  return detail::run_check("polynomial step = triangle", [&]() -> std::string {
    for (const auto& s : detail::oracle_params()) {
      const CoeffTriangle tri = build_triangle(s, K_max);
      for (int k = 0; k < K_max; ++k) {
        if (polynomial_step(q_polynomial(tri, k)) != q_polynomial(tri, k + 1)) {
          return to_string(s) + " k=" + std::to_string(k);
        }
      }
    }
    return {};
  });
}

/// Characterized nonzero sequences equal the brute-force filter (4-cosquine).
inline CheckResult check_characterization(int j_max = 5) {
  return detail::run_check("nonzero-sequence characterization", [&]() -> std::string {
    const SquigParams s = cosquine_params(4);
    for (int j = 0; j <= j_max; ++j) {
      const int k = s.n + s.p * j;
      auto a = enumerate_nonzero(s, k, j);
      auto b = brute_force_nonzero(s, k, j);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return "j=" + std::to_string(j);
    }
    return {};
  });
}

/// Algorithm 1 against F_j / (n + p j)! from exact integers.
inline CheckResult check_algorithm1(double rel_tol = 1e-13) {
  return detail::run_check("Algorithm 1 = exact F_j/(n+pj)!", [&]() -> std::string {
    for (int p = 2; p <= 10; ++p) {
      for (auto [m, n] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 3}}) {
        const SquigParams s{p, m, n};
        const int J = 30;
        const MacLaurinTable t = maclaurin(s, J, true);
        for (int j = 0; j <= J; ++j) {
          const double exact =
              ratio_to_double(t.numerators[static_cast<std::size_t>(j)], falling_factorial(t.power(j), t.power(j)));
          const double got = t.floats[static_cast<std::size_t>(j)];
          if (!(std::abs(got - exact) <= rel_tol * std::abs(exact))) {
            return to_string(s) + " j=" + std::to_string(j);
          }
        }
      }
    }
    return {};
  });
}

/// Factorial-form corollary against Algorithm 1.
inline CheckResult check_corollary(double rel_tol = 1e-12) {
  return detail::run_check("corollary = Algorithm 1", [&]() -> std::string {
    for (int p : {3, 4}) {
      for (auto [m, n] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 1}}) {
        const SquigParams s{p, m, n};
        const MacLaurinTable t = maclaurin(s, 4);
        for (int j = 0; j <= 4; ++j) {
          const double want = t.coefficient(j);
          const double got = corollary_coefficient(s, j);
          if (!(std::abs(got - want) <= rel_tol * std::abs(want))) {
            return to_string(s) + " j=" + std::to_string(j);
          }
        }
      }
    }
    return {};
  });
}

/// Root counts and interlacing for k <= K_max.
inline CheckResult check_roots(int K_max = 30) {
  return detail::run_check("real roots and interlacing", [&]() -> std::string {
    for (int p : {3, 4, 6}) {
      for (const SquigParams s : {cosquine_params(p), squine_params(p)}) {
        const auto chain = root_chain(s, K_max);
        for (int k = 0; k <= K_max; ++k) {
          const auto& r = chain[static_cast<std::size_t>(k)];
          const long long zeros = std::max<long long>(0, ceil_div(k - s.n, p));
          if (r.zero_multiplicity != zeros ||
              static_cast<int>(r.negative_roots.size()) != expected_negative_roots(s, k)) {
            return to_string(s) + " count k=" + std::to_string(k);
          }
          if (k > 0 && !interlacing_check(chain[static_cast<std::size_t>(k - 1)], r)) {
            return to_string(s) + " interlacing k=" + std::to_string(k);
          }
        }
      }
    }
    return {};
  });
}

/// pi_p from Newton against twice the arcsquine quadrature.
inline CheckResult check_pi_quadrature(double tol = 1e-11) {
  return detail::run_check("pi_p = 2 arcsq(1)", [&]() -> std::string {
    for (int p = 3; p <= 10; ++p) {
      const double a = compute_pi(p).value;
      const double b = 2.0 * arcsq_oracle(1.0, p);
      if (!(std::abs(a - b) <= tol)) return "p=" + std::to_string(p);
    }
    return {};
  });
}

/// Continued fraction against the partial sums it is equivalent to.
inline CheckResult check_continued_fraction(double rel_tol = 1e-12) {
  return detail::run_check("continued fraction = partial sums", [&]() -> std::string {
    for (const SquigParams s : {cosquine_params(4), squine_params(4)}) {
      const FactorSequence fs = factor_sequence(s, 34);
      for (double t : {0.3, 0.7, 1.0}) {
        for (int depth = 0; depth <= fs.J(); ++depth) {
          const double a = continued_fraction(fs, t, depth);
          const double b = partial_sum(fs, t, depth + 1);
          if (!(std::abs(a - b) <= rel_tol * std::abs(b))) {
            return to_string(s) + " t=" + std::to_string(t) + " depth=" + std::to_string(depth);
          }
        }
      }
    }
    return {};
  });
}

/// Horner evaluation against the quadrature-inverted arcsquine.
inline CheckResult check_evaluation_round_trip(double tol = 1e-10) {
  return detail::run_check("sq(arcsq(x)) = x", [&]() -> std::string {
    for (int p : {3, 4, 6}) {
      const EvalContext ctx = make_context(p);
      for (int i = 1; i <= 99; ++i) {
        const double x = i / 100.0;
        if (!(std::abs(sq(ctx, arcsq_oracle(x, p)) - x) <= tol)) {
          return "p=" + std::to_string(p) + " x=" + std::to_string(x);
        }
      }
    }
    return {};
  });
}

inline std::vector<CheckResult> run_all_checks() {
  return {check_explicit_vs_triangle(), check_matrix_vs_triangle(), check_polynomial_step(),
          check_characterization(),     check_algorithm1(),         check_corollary(),
          check_roots(),                check_pi_quadrature(),      check_continued_fraction(),
          check_evaluation_round_trip()};
}

}  // namespace squig
