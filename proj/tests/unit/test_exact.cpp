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
#include <random>
#include <vector>

#include "mockradial/errors.hpp"
#include "mockradial/exact.hpp"

using namespace mockradial;

namespace {

// Independent oracle: rational long division, highest degree first.
std::vector<Rational> divide(std::vector<Rational> num, const std::vector<Rational>& den) {
  std::vector<Rational> quo(num.size() - den.size() + 1);
  for (std::size_t i = 0; i < quo.size(); ++i) {
    quo[i] = num[i] / den[0];
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= quo[i] * den[j];
  }
  for (const Rational& r : num) REQUIRE(r == 0);
  return quo;
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

CyclotomicNumber z(long h, int k) { return root_of_unity(h, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).coefficients == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(6).coefficients == std::vector<Integer>{1, -1, 1});

  // x^12 - 1 over Phi_1 Phi_2 Phi_3 Phi_4 Phi_6, highest degree first.
  std::vector<Rational> x12(13);
  x12[0] = 1;
  x12[12] = -1;
  std::vector<Rational> den{1};
  for (const auto& f : std::vector<std::vector<Rational>>{{1, -1}, {1, 1}, {1, 1, 1}, {1, 0, 1}, {1, -1, 1}}) {
    den = multiply(den, f);
  }
  const auto quo = divide(x12, den);
  std::vector<Integer> expected;
  for (auto it = quo.rbegin(); it != quo.rend(); ++it) expected.push_back(it->get_num());
  CHECK(cyclotomic_polynomial(12).coefficients == expected);
  CHECK(expected == std::vector<Integer>{1, 0, -1, 0, 1});

  for (int n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("roots of unity") {
  CHECK(z(0, 5) == CyclotomicNumber(1));
  CHECK(z(2, 4) == CyclotomicNumber(-1));
  CHECK(z(3, 5).inverse() == z(2, 5));
  CHECK(z(-1, 7) == z(6, 7));
  CHECK(z(5, 10) == CyclotomicNumber(-1));
}

TEST_CASE("field operations") {
  const CyclotomicNumber w = z(1, 6);
  CHECK((w * w - w + 1).is_zero());
  for (int k = 2; k <= 15; ++k) {
    for (int h = 1; h < k; ++h) CHECK(CyclotomicNumber(1) / z(h, k) == z(k - h, k));
  }
  const CyclotomicNumber m1 = z(1, 2);
  CHECK((1 - m1) * (1 - m1.inverse()) == CyclotomicNumber(4));
  CHECK_THROWS_AS(CyclotomicNumber::zero(7).inverse(), DivisionByZero);

  // 1 + zeta_5 + ... + zeta_5^4 = 0
  CyclotomicNumber s;
  for (int j = 0; j < 5; ++j) s += z(j, 5);
  CHECK(s.is_zero());
}

TEST_CASE("promotion and subfields") {
  CHECK(promote(CyclotomicNumber(-1), 4) == z(2, 4));
  CHECK(promote(CyclotomicNumber(1), 6).order() == 6);
  CHECK(promote(CyclotomicNumber(1), 6) == CyclotomicNumber(1));
  CHECK(promote(z(1, 3), 12) == z(4, 12));
  CHECK_THROWS_AS(promote(z(1, 5), 12), OrderMismatch);

  // zeta_8 + zeta_8^{-1} = sqrt 2 is real but not rational; its square is.
  const CyclotomicNumber r2 = z(1, 8) + z(-1, 8);
  CHECK_FALSE(r2.is_rational());
  CHECK((r2 * r2).minimal() == CyclotomicNumber(2));
  CHECK((r2 * r2).minimal().order() == 1);
  CHECK(z(4, 12).minimal().order() == 3);
  CHECK(z(4, 12).in_subfield(4) == std::nullopt);
}

TEST_CASE("galois action and conjugation") {
  const CyclotomicNumber x = Rational(1, 3) + 2 * z(1, 9) - z(4, 9);
  CHECK(x.galois(2) == Rational(1, 3) + 2 * z(2, 9) - z(8, 9));
  CHECK(x.conj().conj() == x);
  CHECK_THROWS(x.galois(3));
  // x * conj(x) is fixed by conjugation
  CHECK((x * x.conj()).conj() == x * x.conj());
}

TEST_CASE("embedding") {
  const BigComplex i = embed_complex(z(1, 4), 30);
  CHECK(std::abs(i.real().to_double()) < 1e-29);
  CHECK(std::abs(i.imag().to_double() - 1.0) < 1e-29);

  const Precision p = Precision::digits(60);
  const BigComplex w = embed_complex(z(1, 6), 30);
  const BigComplex half_root3(BigFloat(Rational(1, 2), p), sqrt(BigFloat(3L, p)) / 2);
  CHECK((w - half_root3).log10_abs() < -29);

  const BigComplex lhs = embed_complex(1 - z(1, 5), 40);
  const BigComplex rhs = BigComplex(Rational(1), p) - exp(BigComplex(BigFloat(p), BigFloat::pi(p) * 2 / 5));
  CHECK((lhs - rhs).log10_abs() < -39);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_element = [&](int n) {
    std::vector<Rational> c(euler_phi(n));
    for (auto& v : c) v = Rational(coef(gen), 1 + std::abs(coef(gen)));
    return CyclotomicNumber::from_coefficients(n, c);
  };
  for (int n : {5, 12, 21, 30, 60}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_element(n), b = random_element(n), c = random_element(n);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicNumber(1));
    }
  }
}

TEST_CASE("order cap") {
  const int old = order_cap();
  set_order_cap(30);
  CHECK_THROWS_AS(z(1, 31), OrderLimitExceeded);
  set_order_cap(old);
  CHECK_NOTHROW(z(1, 31));
}

TEST_CASE("string form") {
  CHECK(CyclotomicNumber(Rational(1, 3)).to_string() == "1/3");
  CHECK((Rational(1, 6) + Rational(2, 3) * z(1, 3)).to_string() == "1/6 + 2/3*z");
}
