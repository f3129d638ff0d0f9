#pragma once

/**
 * @file triangle.hpp
 * @brief Integer coefficient triangles of the derivative polynomials of
 *        cq^m(t) * sq^n(t).
 *
 * Row k of the triangle holds the coefficients q(k, j) of Q_k(u), generated
 * from Q_0 = 1 by
 *
 *   q(k+1, j) = (n - k + p j) q(k, j) + (m + k(p-1) - p(j-1)) q(k, j-1).
 *
 * For m, n >= 0 every row is a contiguous band of strictly positive entries:
 * q(k, j) != 0 exactly when k <= n + p j and p j <= m + k(p-1). The edges are
 * falling factorials, q(k, 0) = n(n-1)...(n-k+1) and q(k, k) = m(m-1)...(m-k+1).
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace squig {

/// Selects f(t) = cq^m(t) * sq^n(t) for the p-circle.
struct SquigParams {
  int p = 4;
  int m = 1;
  int n = 0;

  friend bool operator==(const SquigParams&, const SquigParams&) = default;
};

inline constexpr SquigParams cosquine_params(int p) { return {p, 1, 0}; }
inline constexpr SquigParams squine_params(int p) { return {p, 0, 1}; }

/// The same p with the two powers exchanged.
inline constexpr SquigParams swapped(SquigParams s) { return {s.p, s.n, s.m}; }

inline std::string to_string(const SquigParams& s) {
  return "(p=" + std::to_string(s.p) + ", m=" + std::to_string(s.m) +
         ", n=" + std::to_string(s.n) + ")";
}

/// Throws invalid_params unless p >= 2 (and, if requested, m, n >= 0).
inline void validate(const SquigParams& s, bool require_nonnegative) {
  if (s.p < 2) throw invalid_params("p must be >= 2, got " + std::to_string(s.p));
  if (require_nonnegative && (s.m < 0 || s.n < 0)) {
    throw invalid_params("m and n must be nonnegative here, got " + to_string(s));
  }
}

/// ceil(a / b) for b > 0.
inline constexpr long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// x (x-1) ... (x-k+1); the empty product (k = 0) is 1.
inline BigInt falling_factorial(long long x, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= x - i;
    if (result == 0) break;
  }
  return result;
}

/// Column bounds [lo, hi] of the nonzero band of row k (m, n >= 0). The band
/// is empty when lo > hi.
struct BandLimits {
  int lo;
  int hi;

  bool contains(int j) const { return lo <= j && j <= hi; }
};

inline BandLimits band_limits(const SquigParams& s, int k) {
  // sq^0 cq^0 is constant, so every derivative row is empty.
  if (s.m == 0 && s.n == 0 && k > 0) return {1, 0};
  const long long lo = std::max<long long>(0, ceil_div(k - s.n, s.p));
  const long long hi = k - std::max<long long>(0, ceil_div(k - s.m, s.p));
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

class CoeffTriangle {
 public:
  using Row = std::map<int, BigInt>;

  /// Wraps rows as given. No structural checks happen here; use
  /// build_triangle() for a triangle that satisfies the recursion and
  /// verify_structure() to audit one from elsewhere (e.g. deserialized).
  CoeffTriangle(SquigParams params, std::vector<Row> rows)
      : params_(params), rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("CoeffTriangle needs row 0");
  }

  const SquigParams& params() const noexcept { return params_; }

  /// Highest row index K.
  int max_row() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  const Row& row(int k) const {
    check_row(k);
    return rows_[static_cast<std::size_t>(k)];
  }

  /// Stored value, or zero anywhere outside the stored entries.
  BigInt coefficient(int k, int j) const {
    const Row& r = row(k);
    auto it = r.find(j);
    return it == r.end() ? BigInt(0) : it->second;
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }

 private:
  void check_row(int k) const {
    if (k < 0 || k > max_row()) {
      throw std::out_of_range("triangle row " + std::to_string(k) +
                              " outside 0.." + std::to_string(max_row()));
    }
  }

  SquigParams params_;
  std::vector<Row> rows_;
};

/// Rows 0..K of the triangle for cq^m sq^n, in exact arithmetic.
inline CoeffTriangle build_triangle(SquigParams params, int K) {
  validate(params, true);
  if (K < 0) throw std::invalid_argument("build_triangle: K must be >= 0");
  const long long p = params.p, m = params.m, n = params.n;

  std::vector<CoeffTriangle::Row> rows;
  rows.reserve(static_cast<std::size_t>(K) + 1);
  rows.push_back({{0, BigInt(1)}});
  for (long long k = 0; k < K; ++k) {
    const auto& prev = rows.back();
    CoeffTriangle::Row next;
    if (!prev.empty()) {
      const int first = prev.begin()->first;
      const int last = prev.rbegin()->first;
      for (int j = first; j <= last + 1; ++j) {
        BigInt v = 0;
        if (auto it = prev.find(j); it != prev.end()) v += (n - k + p * j) * it->second;
        if (auto it = prev.find(j - 1); it != prev.end()) {
          v += (m + k * (p - 1) - p * (j - 1)) * it->second;
        }
        if (v != 0) next.emplace(j, std::move(v));
      }
    }
    rows.push_back(std::move(next));
  }
  return CoeffTriangle(params, std::move(rows));
}

struct StructureViolation {
  int k;
  int j;
  std::string what;
};

/// Audits band sparsity, positivity and both falling-factorial edges on
/// every row. At most one violation is reported per (k, j) cell.
inline std::vector<StructureViolation> verify_structure(const CoeffTriangle& tri) {
  const SquigParams& s = tri.params();
  validate(s, true);
  std::vector<StructureViolation> out;

  for (int k = 0; k <= tri.max_row(); ++k) {
    const auto& row = tri.row(k);
    const BandLimits band = band_limits(s, k);
    const BigInt left_edge = falling_factorial(s.n, k);
    const BigInt right_edge = falling_factorial(s.m, k);

    for (const auto& [j, v] : row) {
      if (j < 0 || j > k) out.push_back({k, j, "entry outside 0..k"});
    }
    for (int j = 0; j <= k; ++j) {
      auto it = row.find(j);
      const BigInt v = it == row.end() ? BigInt(0) : it->second;
      std::string problems;
      if (band.contains(j)) {
        if (v <= 0) problems += "non-positive entry inside band; ";
      } else if (v != 0) {
        problems += "nonzero entry outside band; ";
      }
      if (j == 0 && v != left_edge) problems += "q(k,0) != n falling k; ";
      if (j == k && v != right_edge) problems += "q(k,k) != m falling k; ";
      if (!problems.empty()) {
        problems.resize(problems.size() - 2);
        out.push_back({k, j, std::move(problems)});
      }
    }
  }
  return out;
}

}  // namespace squig
