#pragma once

// Exact integer/rational aliases and the few conversions the library needs
// between them and binary64.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace squig {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Correctly rounded num/den as binary64 (den != 0). Handles operands far
/// outside the binary64 range as long as the quotient is representable.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  const BigInt a = boost::multiprecision::abs(num);
  const BigInt b = boost::multiprecision::abs(den);

  // Scale so that the integer quotient lands in [2^62, 2^64).
  const long long shift =
      63 - (static_cast<long long>(boost::multiprecision::msb(a)) -
            static_cast<long long>(boost::multiprecision::msb(b)));
  BigInt q, r;
  if (shift >= 0) {
    boost::multiprecision::divide_qr(BigInt(a << shift), b, q, r);
  } else {
    boost::multiprecision::divide_qr(a, BigInt(b << -shift), q, r);
  }
  // Sticky bit: q carries > 53 significant bits, so or-ing a remainder flag
  // into its lowest bit makes the hardware uint64 -> double rounding exact.
  auto bits = q.convert_to<std::uint64_t>();
  if (r != 0) bits |= 1u;
  double value = std::ldexp(static_cast<double>(bits),
                            static_cast<int>(-shift));
  return negative ? -value : value;
}

inline double to_double(const BigInt& x) { return ratio_to_double(x, 1); }

inline double to_double(const BigRational& q) {
  return ratio_to_double(boost::multiprecision::numerator(q),
                         boost::multiprecision::denominator(q));
}

/// A finite binary64 value written exactly as mantissa * 2^exponent.
struct Dyadic {
  BigInt mantissa;
  int exponent = 0;
};

inline Dyadic to_dyadic(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_dyadic: non-finite value");
  if (x == 0.0) return {BigInt(0), 0};
  int e = 0;
  const double frac = std::frexp(x, &e);  // x = frac * 2^e, |frac| in [0.5,1)
  const auto m = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return {BigInt(m), e - 53};
}

inline BigRational to_rational(double x) {
  const Dyadic d = to_dyadic(x);
  if (d.exponent >= 0) return BigRational(BigInt(d.mantissa << d.exponent));
  return BigRational(d.mantissa, BigInt(1) << -d.exponent);
}

/// Sign (-1, 0, +1) of sum_j coeffs[j] * x^j, evaluated exactly at the
/// binary64 point x.
inline int exact_sign(std::span<const BigInt> coeffs, double x) {
  if (coeffs.empty()) return 0;
  const Dyadic d = to_dyadic(x);
  const std::size_t degree = coeffs.size() - 1;
  // With x = M * 2^E and E < 0, scale by 2^(-E*degree) so the homogeneous
  // Horner recurrence acc = acc*M + c_j * 2^(-E*(degree-j)) stays integral.
  if (d.exponent >= 0) {
    const BigInt xv = d.mantissa << d.exponent;
    BigInt acc = coeffs[degree];
    for (std::size_t j = degree; j-- > 0;) acc = acc * xv + coeffs[j];
    return acc.sign();
  }
  const unsigned step = static_cast<unsigned>(-d.exponent);
  BigInt acc = coeffs[degree];
  for (std::size_t j = degree; j-- > 0;) {
    acc = acc * d.mantissa + (coeffs[j] << (step * (degree - j)));
  }
  return acc.sign();
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad decimal string");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("bad decimal string: " + std::string(text));
    }
  }
  return BigInt(std::string(text));
}

}  // namespace squig
