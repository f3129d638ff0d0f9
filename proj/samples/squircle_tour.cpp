// A short walk through the library for p = 4: the constant, a few function
// values, one derivative polynomial with its roots, and a Beta value.

#include "squig/squig.hpp"

#include <cstdio>

int main() {
  using namespace squig;
  const int p = 4;

  const PiRecord rec = compute_pi(p);
  std::printf("pi_%d = %.16g  (%d Newton steps, %d series terms)\n", p, rec.value, rec.iterations,
              rec.J_used);

  const EvalContext ctx = make_context(p);
  for (double t : {0.0, 0.5, rec.value / 4.0, 1.5, 3.0}) {
    const auto [s, c] = sq_cq(ctx, t);
    std::printf("t = %-8.5g sq = %-22.17g cq = %-22.17g |sq|^4+|cq|^4-1 = %.2g\n", t, s, c,
                s * s * s * s + c * c * c * c - 1.0);
  }

  const CoeffTriangle tri = build_triangle(cosquine_params(p), 3);
  const DerivPolynomial q3 = q_polynomial(tri, 3);
  const RootSet r = real_roots(q3);
  std::printf("Q_3(u) = %s u + %s u^2, roots: 0 (x%d)", to_decimal(q3.coeffs[1]).c_str(),
              to_decimal(q3.coeffs[2]).c_str(), r.zero_multiplicity);
  for (double u : r.negative_roots) {
    const AlgebraicValues av = algebraic_values(u, p);
    std::printf(", %.17g where cq = %.17g", u, av.cq);
  }
  std::printf("\n");

  std::printf("B(1/4, 1/4) = %.16g\n", beta_rational(p, 0, 0));
  return 0;
}
