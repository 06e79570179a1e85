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


#include <doctest.h>

#include "mockradial/errors.hpp"
#include "mockradial/mocktheta.hpp"

using namespace mockradial;

namespace {

const Precision P = Precision::digits(70);
constexpr int D = 40;

BigComplex c(double re, double im = 0.0) { return BigComplex(re, im, P); }
BigComplex one() { return BigComplex(mpq_class(1), P); }

double gap(const BigComplex& a, const BigComplex& b) { return (a - b).log10_abs(); }

CyclotomicNumber z(long h, int k) { return root_of_unity(h, k); }

// Plain partial sum of g3 with `terms` summands.
BigComplex g3_direct(const BigComplex& x, const BigComplex& q, int terms) {
  BigComplex sum(P), den = one(), qn = one();
  for (int n = 1; n <= terms; ++n) {
    den *= (one() - x * qn) * (one() - q * qn / x);
    sum += q.pow(static_cast<long>(n) * (n - 1)) / den;
    qn *= q;
  }
  return sum;
}

}  // namespace

TEST_CASE("g3 against a direct partial sum") {
  CHECK(gap(g3_eval(c(-1.0), c(0.5), D), g3_direct(c(-1.0), c(0.5), 100)) < -(D - 5));
  const BigComplex x = c(0.3, 0.9), q = c(-0.2, 0.6);
  CHECK(gap(g3_eval(x, q, D), g3_direct(x, q, 200)) < -(D - 5));
}

TEST_CASE("functional equation and inversion") {
  const BigComplex x = c(0.4, 0.2), q = c(0.3);
  const BigComplex lhs = g3_eval(x * q, q, D) + x.pow(3) * g3_eval(x, q, D) + x * x + x;
  CHECK(lhs.log10_abs() < -(D - 6));
  CHECK(gap(g3_eval(one() / x, q, D), g3_eval(x * q, q, D)) < -(D - 6));
}

TEST_CASE("g tilde tail") {
  const CyclotomicNumber m1(-1);
  CHECK(g_tilde_tail_partial(m1, m1, 2) == CyclotomicNumber(-2));
  const CyclotomicNumber q(Rational(2, 7));
  CHECK(g_tilde_tail_partial(q, q, 1) == (1 - q) * q);

  // Sixty terms at q = 0.4 are only good to about 0.4^60 ~ 1e-24.
  const BigComplex x = c(0.6), qq = c(0.4);
  CHECK(gap(g_tilde_tail(x, qq, 25), g_tilde_tail_partial(x, qq, 60)) < -(25 - 6));
  CHECK(gap(g_tilde_tail(x, qq, D), g_tilde_tail_partial(x, qq, 200)) < -(D - 6));
}

TEST_CASE("relation between g3 and g tilde") {
  const BigComplex x = c(0.7, -0.3), q = c(0.1, 0.45);
  const BigComplex rhs = -(one() + g_tilde_eval(x, q, D) / x) / x;
  CHECK(gap(g3_eval(x, q, D), rhs) < -(D - 8));
}

TEST_CASE("affine transport") {
  const BigComplex x = c(0.5, 0.5), q = c(0.2, 0.1);
  for (TransportKind kind : {TransportKind::ShiftFeq, TransportKind::Invert}) {
    const auto [rel, next] = affine_transport(x, q, kind);
    CHECK(gap(rel.apply(g3_eval(next, q, D)), g3_eval(x, q, D)) < -(D - 8));
    const auto round_trip = compose(rel.inverse(), rel);
    CHECK(gap(round_trip.scale, one()) < -(D - 2));
    CHECK(round_trip.offset.log10_abs() < -(D - 2));
  }
  CHECK_THROWS_AS(affine_transport(CyclotomicNumber(0), CyclotomicNumber(1), TransportKind::Invert),
                  DivisionByZero);
}

TEST_CASE("Kang identity") {
  const BigComplex z3 = BigComplex::unit(Rational(1, 3), P);
  for (auto [x, q] : {std::pair{c(0.55), c(0.35)}, std::pair{c(0.2, 0.4), c(0.0, 0.5)}}) {
    const BigComplex lhs = g3_eval(x, q, D) + g3_eval(z3 * x, q, D) + g3_eval(z3 * z3 * x, q, D);
    CHECK(gap(lhs, kang_rhs(x, q, D)) < -(D - 8));
  }
}

TEST_CASE("Appell-Lerch forms of g3") {
  const BigComplex x = c(0.6), q = c(0.3);
  CHECK(gap(tailid_rhs(x, q, c(1.1), D), g3_eval(x, q, D)) < -(D - 8));
  CHECK(gap(tailid_rhs(x, q, c(-0.4, 0.9), D), g3_eval(x, q, D)) < -(D - 8));
  CHECK(gap(tailid2_rhs(x, q, D), g3_eval(x, q, D)) < -(D - 8));
  const BigComplex y = c(0.3, -0.8), q2 = c(-0.25, 0.2);
  CHECK(gap(tailid2_rhs(y, q2, D), g3_eval(y, q2, D)) < -(D - 8));
  CHECK(gap(g_tilde_eval(y, q2, D) + g_tilde_tail(y, q2, D), p1_rhs(y, q2, D)) < -(D - 8));
}

TEST_CASE("lost notebook identity") {
  const BigComplex x = c(0.7);
  const BigComplex cases[3][3] = {{-(one() / x), -x, c(0.3)}, {c(1.3), c(0.8), c(0.25)}, {c(1.0), c(1.0), c(0.5)}};
  for (const auto& s : cases) {
    const IdentitySides sides = lost_notebook_sides(s[0], s[1], s[2], D);
    CHECK(gap(sides.lhs, sides.rhs) < -(D - 8));
  }
}

TEST_CASE("eta quotient and the sixth-order relation") {
  const BigComplex x = c(0.5);
  CHECK(gap(eta_quotient(x, D), eta_quotient_product(x, D)) < -(D - 8));
  CHECK(gap(g3_eval(x, x.pow(6), D), mtc73_rhs(x, D)) < -(D - 8));
  const BigComplex y = c(0.3, 0.6);
  CHECK(gap(g3_eval(y, y.pow(6), D), mtc73_rhs(y, D)) < -(D - 8));

  // The truncated product has a zero factor at zeta_6 and the full
  // product vanishes there.
  CHECK(eta_quotient_product_truncated(z(1, 6), 6).is_zero());
}

TEST_CASE("Abel limits in the exact field") {
  // lim_{q -> 1} g3(-1, q) = sum 4^{-n} = 1/3
  CHECK(g3_abel_limit(CyclotomicNumber(-1), CyclotomicNumber(1), 1) == CyclotomicNumber(Rational(1, 3)));
  // x = zeta_6: the closed edge value
  const CyclotomicNumber x = z(1, 6);
  CHECK(mtc73_rhs(x, 1) == Rational(1, 6) + Rational(2, 3) * z(1, 3));
  CHECK_THROWS(g3_abel_limit(CyclotomicNumber(1), CyclotomicNumber(1), 1));
}
