#pragma once

/**
 * @file explicit.hpp
 * @brief Closed-form routes to the triangle entries, independent of the
 *        two-term recursion.
 *
 * Expanding T_{k-1} ... T_0 e_0 with T_l split into its diagonal and
 * subdiagonal writes q(k, j) as a sum over binary sequences i of length k with
 * j ones:
 *
 *   q(k, j) = sum_i prod_l ( n - l + i_l (m - n + p l) + p (1 - 2 i_l) sum_{r<l} i_r ).
 *
 * Sequences are represented by the positions l_0 < ... < l_{j-1} of their
 * ones (OnePositions).
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"
#include "squig/triangle.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace squig {

using OnePositions = std::vector<int>;

inline constexpr int explicit_max_k = 22;
inline constexpr int enumerate_max_k = 26;

/// Factor l of the product for a sequence whose ones so far number `ones_before`.
inline long long sequence_factor(const SquigParams& s, int l, bool one, int ones_before) {
  const long long i = one ? 1 : 0;
  return static_cast<long long>(s.n) - l + i * (static_cast<long long>(s.m) - s.n + static_cast<long long>(s.p) * l) +
         static_cast<long long>(s.p) * (1 - 2 * i) * ones_before;
}

/// q(k, j) as the binary-sequence sum. Any integers m, n; k <= 22.
inline BigInt explicit_coefficient(const SquigParams& params, int k, int j) {
  validate(params, false);
  if (k < 0) throw std::invalid_argument("explicit_coefficient: k must be >= 0");
  if (k > explicit_max_k) {
    throw cost_guard_error("explicit_coefficient: k=" + std::to_string(k) + " exceeds " +
                           std::to_string(explicit_max_k));
  }
  if (j < 0 || j > k) return 0;

  BigInt total = 0;
  // Depth-first over positions; a zero factor kills the whole branch.
  std::function<void(int, int, const BigInt&)> walk = [&](int l, int ones, const BigInt& prod) {
    if (l == k) {
      total += prod;
      return;
    }
    const int remaining = k - l;
    if (ones < j) {
      const long long f = sequence_factor(params, l, true, ones);
      if (f != 0) walk(l + 1, ones + 1, prod * f);
    }
    if (j - ones < remaining) {
      const long long f = sequence_factor(params, l, false, ones);
      if (f != 0) walk(l + 1, ones, prod * f);
    }
  };
  walk(0, 0, BigInt(1));
  return total;
}

/// All sequences with j ones in length k whose every factor is nonzero,
/// found by testing each factor directly. Reference for enumerate_nonzero().
inline std::vector<OnePositions> brute_force_nonzero(const SquigParams& params, int k, int j) {
  if (k > enumerate_max_k) throw cost_guard_error("brute_force_nonzero: k too large");
  std::vector<OnePositions> out;
  OnePositions pos;
  std::function<void(int)> walk = [&](int l) {
    if (static_cast<int>(pos.size()) == j) {
      // Remaining factors are all zeros-of-sequence positions.
      for (int r = l; r < k; ++r) {
        if (sequence_factor(params, r, false, j) == 0) return;
      }
      out.push_back(pos);
      return;
    }
    if (k - l < j - static_cast<int>(pos.size())) return;
    const int ones = static_cast<int>(pos.size());
    if (sequence_factor(params, l, true, ones) != 0) {
      pos.push_back(l);
      walk(l + 1);
      pos.pop_back();
    }
    if (sequence_factor(params, l, false, ones) != 0) walk(l + 1);
  };
  walk(0);
  return out;
}

/// Sequences with nonzero products for k = n + p j, from the closed-form
/// conditions:
///   m + l_r (p-1) != p r                        for every r,
///   l_r <= n + p r  or  l_{r-1} >= n + p r      for r >= 1,
///   l_0 <= n                                    when m >= 0.
inline std::vector<OnePositions> enumerate_nonzero(const SquigParams& params, int k, int j) {
  validate(params, false);
  if (j < 0) throw std::invalid_argument("enumerate_nonzero: j must be >= 0");
  if (k != params.n + params.p * j) {
    throw std::invalid_argument("enumerate_nonzero: requires k = n + p j");
  }
  if (k > enumerate_max_k) {
    throw cost_guard_error("enumerate_nonzero: k=" + std::to_string(k) + " exceeds " +
                           std::to_string(enumerate_max_k));
  }
  const long long p = params.p, m = params.m, n = params.n;
  std::vector<OnePositions> out;
  OnePositions pos;
  std::function<void(int)> place = [&](int r) {
    if (r == j) {
      out.push_back(pos);
      return;
    }
    const int start = r == 0 ? 0 : pos.back() + 1;
    for (int l = start; l <= k - (j - r); ++l) {
      if (m + l * (p - 1) == p * r) continue;
      if (r == 0 && m >= 0 && l > n) break;
      if (r >= 1 && !(l <= n + p * r || pos.back() >= n + p * r)) continue;
      pos.push_back(l);
      place(r + 1);
      pos.pop_back();
    }
  };
  place(0);
  return out;
}

/// (n + 1)(p - 1)^(j - 1).
inline BigInt count_lower_bound(int n, int p, int j) {
  if (j < 1) throw std::invalid_argument("count_lower_bound: j must be >= 1");
  BigInt b = n + 1;
  for (int i = 1; i < j; ++i) b *= (p - 1);
  return b;
}

/// Signed MacLaurin coefficient of t^(n + p j) of cq^m sq^n, summed over
/// position sets in the factorial form
///
///   f_k = (-1)^j sum_L n^(l_0 falling) / k^((l_{j-1}+1) falling)
///         * prod_r (m + l_r(p-1) - p r) prod_{l_{r-1} < l < l_r, r >= 1} (n + p r - l),
///
/// with k = n + p j. Any integers m, n (negative powers included). Exact
/// rational accumulation, rounded once.
inline double corollary_coefficient(const SquigParams& params, int j) {
  validate(params, false);
  if (j < 0) throw std::invalid_argument("corollary_coefficient: j must be >= 0");
  const long long p = params.p, m = params.m, n = params.n;
  const long long k = n + p * j;
  if (k < 0) return 0.0;
  if (k > enumerate_max_k) {
    throw cost_guard_error("corollary_coefficient: k=" + std::to_string(k) + " exceeds " +
                           std::to_string(enumerate_max_k));
  }
  if (j == 0) {
    // Only the all-zeros sequence: n^(k falling) / k! = 1.
    return 1.0;
  }

  BigRational total = 0;
  OnePositions pos;
  std::function<void(int, const BigInt&)> place = [&](int r, const BigInt& prod) {
    if (r == j) {
      const int last = pos.back();
      total += BigRational(prod * falling_factorial(n, pos.front()),
                           falling_factorial(k, last + 1));
      return;
    }
    const int start = r == 0 ? 0 : pos.back() + 1;
    for (long long l = start; l <= k - (j - r); ++l) {
      BigInt next = prod * (m + l * (p - 1) - p * r);
      if (next == 0) continue;
      if (r >= 1) {
        for (long long g = pos.back() + 1; g < l && next != 0; ++g) next *= (n + p * r - g);
        if (next == 0) continue;
      }
      pos.push_back(static_cast<int>(l));
      place(r + 1, next);
      pos.pop_back();
    }
  };
  place(0, BigInt(1));
  const double magnitude = to_double(total);
  return (j % 2 == 0) ? magnitude : -magnitude;
}

/// Dense exact square matrix, row-major; just enough for the product below.
class IntMatrix {
 public:
  explicit IntMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}

  static IntMatrix identity(int size) {
    IntMatrix I(size);
    for (int i = 0; i < size; ++i) I(i, i) = 1;
    return I;
  }

  int size() const { return size_; }
  BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size_);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend IntMatrix operator*(long long s, const IntMatrix& a) {
    IntMatrix out(a.size_);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size_);
    for (int r = 0; r < a.size_; ++r) {
      for (int t = 0; t < a.size_; ++t) {
        const BigInt& x = a(r, t);
        if (x == 0) continue;
        for (int c = 0; c < a.size_; ++c) {
          if (b(t, c) != 0) out(r, c) += x * b(t, c);
        }
      }
    }
    return out;
  }

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
    std::vector<BigInt> out(static_cast<std::size_t>(size_), BigInt(0));
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) {
        if ((*this)(r, c) != 0) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
      }
    }
    return out;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(c);
  }

  int size_;
  std::vector<BigInt> data_;
};

/// A = I - (p-1) S and B = n I + p D (I - S) + (m + p) S, with S the down
/// shift and D = diag(0, 1, 2, ...), so that T_l = B - l A advances one row.
struct RecursionMatrices {
  IntMatrix A;
  IntMatrix B;
};

inline RecursionMatrices recursion_matrices(const SquigParams& s, int size) {
  IntMatrix I = IntMatrix::identity(size);
  IntMatrix S(size), D(size);
  for (int i = 0; i + 1 < size; ++i) S(i + 1, i) = 1;
  for (int i = 0; i < size; ++i) D(i, i) = i;
  IntMatrix A = I - static_cast<long long>(s.p - 1) * S;
  IntMatrix B = static_cast<long long>(s.n) * I;
  IntMatrix DIS = D * (I - S);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      B(r, c) += static_cast<long long>(s.p) * DIS(r, c) + static_cast<long long>(s.m + s.p) * S(r, c);
    }
  }
  return {std::move(A), std::move(B)};
}

/// Row k of the triangle as (B - (k-1)A) ... (B - A) B e_0, truncated to
/// `size` entries. size must be at least k + 1 so that the band survives.
inline std::vector<BigInt> matrix_factorial_row(const SquigParams& params, int k, int size) {
  validate(params, false);
  if (k < 0) throw std::invalid_argument("matrix_factorial_row: k must be >= 0");
  if (size < k + 1) {
    throw std::invalid_argument("matrix_factorial_row: size " + std::to_string(size) +
                                " too small for row " + std::to_string(k));
  }
  const RecursionMatrices mats = recursion_matrices(params, size);
  std::vector<BigInt> v(static_cast<std::size_t>(size), BigInt(0));
  v[0] = 1;
  for (int l = 0; l < k; ++l) {
    const IntMatrix T = mats.B - static_cast<long long>(l) * mats.A;
    v = T.apply(v);
  }
  return v;
}

}  // namespace squig
