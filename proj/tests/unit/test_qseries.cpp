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

#include <cmath>

#include "mockradial/errors.hpp"
#include "mockradial/qseries.hpp"

using namespace mockradial;

namespace {

const Precision P = Precision::digits(60);

BigComplex c(double re, double im = 0.0) { return BigComplex(re, im, P); }

double gap(const BigComplex& a, const BigComplex& b) { return (a - b).log10_abs(); }

CyclotomicNumber z(long h, int k) { return root_of_unity(h, k); }

}  // namespace

TEST_CASE("finite pochhammer") {
  const BigComplex q = c(0.3, 0.2);
  CHECK(gap(pochhammer(c(0.7), q, 0), c(1.0)) == -HUGE_VAL);
  CHECK(pochhammer(c(1.0), q, 3).is_zero());
  CHECK(pochhammer(z(1, 2), z(1, 2), 2).is_zero());
  CHECK(pochhammer(z(1, 2), z(1, 2), 1) == CyclotomicNumber(2));
}

TEST_CASE("negative pochhammer") {
  const CyclotomicNumber a(Rational(3, 7)), q(Rational(2, 5));
  CHECK(pochhammer_negative(a, q, 1) == -(q / (a * (1 - q / a))));
  CHECK(pochhammer_negative(CyclotomicNumber(-1), q, 1) == q / (1 + q));

  // (a;q)_{-n} extends the recurrence (a;q)_{m+1} = (a;q)_m (1 - a q^m) backwards.
  const CyclotomicNumber a2(2), q2(Rational(1, 2));
  CyclotomicNumber back(1);  // (a;q)_0
  for (int m = -1; m >= -2; --m) back /= 1 - a2 * q2.pow(m);
  CHECK(pochhammer_negative(a2, q2, 2) == back);
  CHECK_THROWS_AS(pochhammer_negative(CyclotomicNumber(0), q2, 1), DivisionByZero);
}

TEST_CASE("infinite pochhammer") {
  CHECK(gap(qinf(c(0.0), c(0.5), 30), c(1.0)) < -29);
  CHECK(qinf(c(1.0), c(0.3), 30).is_zero());

  // 200-term direct product for (q;q) at q = 1/2.
  BigComplex direct(mpq_class(1), P);
  const BigComplex q = c(0.5);
  BigComplex qj = q;
  for (int j = 0; j < 200; ++j, qj *= q) direct *= unit_like(q) - qj;
  CHECK(gap(qinf(q, q, 30), direct) < -29);

  // Close to the circle the log-series tail is used; compare with the direct product.
  const BigComplex q2 = c(0.0, 0.97);
  BigComplex direct2(mpq_class(1), P);
  BigComplex a = c(0.4, 0.1);
  for (int j = 0; j < 4000; ++j, a *= q2) direct2 *= unit_like(q2) - a;
  CHECK(gap(qinf(c(0.4, 0.1), q2, 30), direct2) < -28);

  const auto [value, report] = pochhammer_infinite(c(0.2), c(0.6), 40);
  CHECK(report.terms_used > 0);
  CHECK(report.tail_bound < 1e-40);
  (void)value;
  CHECK_THROWS_AS(qinf(c(0.1), c(1.0), 30), DomainError);
}

TEST_CASE("jacobi triple product") {
  const BigComplex q = c(0.4);
  CHECK(jacobi_triple(q, q, 30).is_zero());
  const BigComplex x = c(0.7, 0.1);
  CHECK(gap(jacobi_triple(x, q, 30), theta_series(x, q, 30)) < -25);
  const BigComplex y = c(-0.3, 0.8), q2 = c(0.2, -0.5);
  CHECK(gap(jacobi_triple(y, q2, 30), jacobi_triple(q2 / y, q2, 30)) < -25);
  CHECK_THROWS_AS(jacobi_triple(c(0.0), q, 30), DomainError);
}

TEST_CASE("appell-lerch sum") {
  const BigComplex q = c(0.3, 0.1), x = q, zz = c(0.8, 0.35);
  // 60-term bilateral partial sum.
  BigComplex sum(P);
  const BigComplex w = x * zz;
  for (long n = -60; n <= 60; ++n) {
    const BigComplex term = (-zz).pow(n) * q.pow(n * (n - 1) / 2) / (unit_like(q) - w * q.pow(n - 1));
    sum += term;
  }
  CHECK(gap(appell_lerch(x, q, zz, 40), sum / jacobi_triple(zz, q, 40)) < -32);

  const BigComplex x2 = c(0.6, -0.2), z1 = c(0.9, 0.1), z2 = c(-0.5, 0.7);
  const BigComplex lhs = appell_lerch(x2, q, z1, 40) - appell_lerch(x2, q, z2, 40);
  CHECK(gap(lhs, appell_lerch_shift_rhs(x2, q, z1, z2, 40)) < -32);
  CHECK_THROWS_AS(appell_lerch(x2, q, q, 40), DomainError);
}

TEST_CASE("periodic pochhammer closed form") {
  CHECK(periodic_pochhammer_closed_form(z(1, 2), 1) == CyclotomicNumber(4));
  CHECK(periodic_pochhammer_closed_form(z(1, 6), 1) == CyclotomicNumber(1));
  const CyclotomicNumber x = z(1, 7);
  CHECK(periodic_pochhammer_closed_form(x, 1) == 2 - x - x.inverse());
  CHECK(periodic_pochhammer_closed_form(x, 1) == pochhammer(x, CyclotomicNumber(1), 1) *
                                                    pochhammer(x.inverse(), CyclotomicNumber(1), 1));
  // k' = 3 at q = zeta_3 against the direct product (x, q/x; q)_3
  const CyclotomicNumber q = promote(z(1, 3), 21), y = promote(x, 21);
  CHECK(periodic_pochhammer_closed_form(y, 3) == pochhammer(y, q, 3) * pochhammer(q / y, q, 3));
}
