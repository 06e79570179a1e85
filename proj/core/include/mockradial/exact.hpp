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

#ifndef MOCKRADIAL_EXACT_HPP
#define MOCKRADIAL_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mockradial/bigfloat.hpp"

namespace mockradial {

using Integer = mpz_class;
using Rational = mpq_class;

/// Rational with canonical representation, from numerator and denominator.
Rational make_rational(long num, long den = 1);
/// Fractional part {r} in [0, 1).
Rational fractional_part(const Rational& r);

/// Dense integer polynomial, lowest degree first.
struct IntPolynomial {
  std::vector<Integer> coefficients;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_zero() const { return coefficients.empty(); }
  /// Drops trailing zero coefficients.
  void normalize();

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

long euler_phi(long n);

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for
/// every proper divisor d of n. Results are cached.
const IntPolynomial& cyclotomic_polynomial(int n);

/// Upper bound on cyclotomic orders accepted by the exact layer (default 600).
int order_cap();
void set_order_cap(int cap);

namespace detail {
struct FieldData;
}

/// Exact element of Q(zeta_n), stored in the power basis
/// 1, zeta_n, ..., zeta_n^{phi(n)-1} reduced modulo Phi_n.
///
/// Internally the coefficients are kept as integer numerators over one
/// positive common denominator whose gcd with the numerators is 1. This
/// form is canonical, so equality at a common order is vector equality.
/// Values of different orders are promoted to the lcm before combining.
class CyclotomicNumber {
 public:
  /// Zero in Q (order 1).
  CyclotomicNumber();
  CyclotomicNumber(long v);  // NOLINT: integers embed implicitly
  CyclotomicNumber(const Rational& v, int order = 1);

  static CyclotomicNumber zero(int order = 1);
  static CyclotomicNumber one(int order = 1);
  /// Reduces sum_i coeffs[i] zeta_n^i modulo Phi_n; any length is accepted.
  static CyclotomicNumber from_coefficients(int order, const std::vector<Rational>& coeffs);

  int order() const;
  /// phi(order) rational coefficients in the reduced power basis.
  std::vector<Rational> coefficients() const;
  Rational coefficient(std::size_t i) const;
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::logic_error unless is_rational().
  Rational rational_value() const;

  /// Throws DivisionByZero on zero.
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;
  /// The automorphism zeta_n -> zeta_n^a, gcd(a, n) = 1.
  CyclotomicNumber galois(long a) const;
  /// Complex conjugation.
  CyclotomicNumber conj() const { return galois(-1); }

  /// Smallest m | order() with the value in Q(zeta_m), represented there.
  CyclotomicNumber minimal() const;
  /// Representation inside Q(zeta_m) when the value lies in that subfield.
  std::optional<CyclotomicNumber> in_subfield(int m) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber operator-() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2 - 3*z + z^2" with z = zeta_order.
  std::string to_string() const;

 private:
  friend CyclotomicNumber promote(const CyclotomicNumber& x, int n);
  friend CyclotomicNumber root_of_unity(long h, int k);

  CyclotomicNumber(const detail::FieldData* field, std::vector<Integer> num, Integer den);
  void canonicalize();

  const detail::FieldData* field_;
  std::vector<Integer> num_;
  Integer den_;
};

/// zeta_k^{h mod k} in Q(zeta_k).
CyclotomicNumber root_of_unity(long h, int k);

/// Same value in Q(zeta_n); requires order(x) | n (OrderMismatch otherwise).
CyclotomicNumber promote(const CyclotomicNumber& x, int n);

/// Complex value of x, accurate to at least `digits` significant digits.
BigComplex embed_complex(const CyclotomicNumber& x, int digits);

/// Unit value in the same domain as x (order 1 for the exact domain).
inline CyclotomicNumber unit_like(const CyclotomicNumber&) { return CyclotomicNumber::one(); }

}  // namespace mockradial

#endif  // MOCKRADIAL_EXACT_HPP
