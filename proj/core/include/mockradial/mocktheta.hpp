/*
   Copyright 2026 The mockradial Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef MOCKRADIAL_MOCKTHETA_HPP
#define MOCKRADIAL_MOCKTHETA_HPP

#include <utility>

#include "mockradial/bigfloat.hpp"
#include "mockradial/exact.hpp"
#include "mockradial/qseries.hpp"

namespace mockradial {

/// g3(x,q) = sum_{n>=1} q^{n(n-1)} / (x, q/x; q)_n, summed until ten
/// consecutive terms are negligible and repeated at doubled precision until
/// two runs agree to `digits` digits.
BigComplex g3_eval(const BigComplex& x, const BigComplex& q, int digits);

/// g~(x,q) = -x sum_{n>=0} q^{n^2} / ((x)_{n+1} (q/x)_n).
BigComplex g_tilde_eval(const BigComplex& x, const BigComplex& q, int digits);

/// First `terms` summands of g~_t(x,q) = sum_{n>=1} (q/x)_{n-1} (x)_n q^n.
template <class Scalar>
Scalar g_tilde_tail_partial(const Scalar& x, const Scalar& q, long terms) {
  const Scalar one = unit_like(x);
  const Scalar xinv = one / x;
  Scalar sum = one - one;
  Scalar term = (one - x) * q;  // n = 1
  Scalar qn = q;                // q^n
  for (long n = 1; n <= terms; ++n) {
    sum += term;
    if (n == terms) break;
    term *= (one - qn * xinv) * (one - x * qn) * q;
    qn *= q;
  }
  return sum;
}

/// g~_t(x,q) summed adaptively inside the disc.
BigComplex g_tilde_tail(const BigComplex& x, const BigComplex& q, int digits);

/// The statement target = scale * source + offset.
template <class Scalar>
struct AffineRelation {
  Scalar scale;
  Scalar offset;

  static AffineRelation identity(const Scalar& like) { return {unit_like(like), unit_like(like) - unit_like(like)}; }

  Scalar apply(const Scalar& v) const { return scale * v + offset; }

  /// Relation for outer(inner(v)).
  friend AffineRelation compose(const AffineRelation& outer, const AffineRelation& inner) {
    return {outer.scale * inner.scale, outer.scale * inner.offset + outer.offset};
  }

  /// source = (target - offset) / scale.
  AffineRelation inverse() const {
    const Scalar inv = unit_like(scale) / scale;
    return {inv, -(offset * inv)};
  }
};

enum class TransportKind { ShiftFeq, Invert };

/// One reduction step for g3(x,q).
///
/// ShiftFeq: g3(x) = -x^{-3} g3(xq) - x^{-1} - x^{-2}, moving to xq.
/// Invert:   g3(x) = -x^{-3} g3(1/x) - x^{-1} - x^{-2}, moving to 1/x.
/// The two share coefficients because g3(1/x,q) = g3(xq,q).
template <class Scalar>
std::pair<AffineRelation<Scalar>, Scalar> affine_transport(const Scalar& x, const Scalar& q, TransportKind kind) {
  if (scalar_is_zero(x)) throw DivisionByZero("affine_transport: x = 0");
  const Scalar xinv = unit_like(x) / x;
  const Scalar xinv2 = xinv * xinv;
  AffineRelation<Scalar> rel{-(xinv2 * xinv), -(xinv + xinv2)};
  Scalar next = kind == TransportKind::ShiftFeq ? x * q : xinv;
  return {std::move(rel), std::move(next)};
}

/// Right side of Kang's identity,
/// g3(x) + g3(z3 x) + g3(z3^2 x) = 3 (q^3;q^3)^3 / ((q)_inf j(x^3,q^3)).
BigComplex kang_rhs(const BigComplex& x, const BigComplex& q, int digits);

/// The four-term expression for g3(x,q) through an Appell-Lerch sum with
/// free parameter z.
BigComplex tailid_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& z, int digits);

/// tailid_rhs at z = x sqrt(q), written with the theta quotient
/// (q)^2 j(sqrt q,q)^2 / (x j(x sqrt q,q)^2 j(x,q)). `sqrt_q` picks the branch.
BigComplex tailid2_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& sqrt_q, int digits);
BigComplex tailid2_rhs(const BigComplex& x, const BigComplex& q, int digits);

/// -(j(x,q) / (x (q)_inf)) m(x^{-2}, q, x), which equals g~ + g~_t.
BigComplex p1_rhs(const BigComplex& x, const BigComplex& q, int digits);

struct IdentitySides {
  BigComplex lhs;
  BigComplex rhs;
};

/// Both sides of the two-parameter bilateral identity in a, b.
IdentitySides lost_notebook_sides(const BigComplex& a, const BigComplex& b, const BigComplex& q, int digits);

/// (x^2;x^2)^4 / (2x (x;x)^2 (x^6;x^6)).
BigComplex eta_quotient(const BigComplex& x, int digits);
/// The same quotient as (-x;x)^4 (x;x) (x,x^2,x^3,x^4,x^5;x^6) / (2x).
BigComplex eta_quotient_product(const BigComplex& x, int digits);
/// The product form truncated after `terms` factors in each Pochhammer.
/// At a root of unity of order dividing `terms` it contains a zero factor.
CyclotomicNumber eta_quotient_product_truncated(const CyclotomicNumber& x, long terms);

/// -1/(2x) + (x/2) g3(x^3,x^6) + eta_quotient(x), equal to g3(x,x^6).
BigComplex mtc73_rhs(const BigComplex& x, int digits);
/// Exact counterpart at x = zeta_{6k'}: the g3(x^3,x^6) term is its Abel
/// limit and the eta quotient term is the truncated product.
CyclotomicNumber mtc73_rhs(const CyclotomicNumber& x, int kprime);

/// Abel limit of g3(x,q) at roots of unity with q of order `period`:
///   [1/(1 - 1/D)] sum_{j=1}^{period} q^{j(j-1)} / (x, q/x; q)_j,
/// with D = (1 - x^period)(1 - x^-period). Needs D != 0 and D != 1.
CyclotomicNumber g3_abel_limit(const CyclotomicNumber& x, const CyclotomicNumber& q, int period);

/// j(x,Q) / ((Q)_inf j(x sqrt Q, Q)) * sum_n (-1)^n x^n Q^{n^2/2} / (1 - x^-1 Q^{n-1/2}),
/// the Appell-Lerch part of tailid2 that dies at pole cusps.
BigComplex lim0_quotient(const BigComplex& x, const BigComplex& Q, const BigComplex& sqrt_Q, int digits);

}  // namespace mockradial

#endif  // MOCKRADIAL_MOCKTHETA_HPP
