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

#ifndef MOCKRADIAL_BIGFLOAT_HPP
#define MOCKRADIAL_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mockradial {

/// Working precision. Stored in bits; constructed from decimal digits in
/// most call sites.
class Precision {
 public:
  constexpr Precision() = default;
  static Precision bits(mpfr_prec_t b);
  static Precision digits(int d);

  mpfr_prec_t bits() const { return bits_; }
  /// Decimal digits guaranteed by this many bits (rounded down).
  int decimal_digits() const;

  friend bool operator==(Precision, Precision) = default;
  friend auto operator<=>(Precision a, Precision b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit Precision(mpfr_prec_t b) : bits_(b) {}
  mpfr_prec_t bits_ = 64;
};

inline Precision min(Precision a, Precision b) { return a < b ? a : b; }
inline Precision max(Precision a, Precision b) { return a < b ? b : a; }

/// RAII wrapper around an MPFR float. Binary operations produce a result
/// at the smaller of the two operand precisions.
class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(Precision p);
  BigFloat(double v, Precision p);
  BigFloat(long v, Precision p);
  BigFloat(const mpz_class& v, Precision p);
  BigFloat(const mpq_class& v, Precision p);
  BigFloat(std::string_view decimal, Precision p);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return Precision::bits(mpfr_get_prec(v_)); }
  /// Same value, rounded (or zero-extended) to precision p.
  BigFloat with_precision(Precision p) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log10 |x| as a double; -inf for zero. Safe for magnitudes far outside
  /// the double range.
  double log10_abs() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int significant) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }
  friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

  static BigFloat pi(Precision p);
  /// 10^e at precision p.
  static BigFloat pow10(long e, Precision p);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

/// Arbitrary-precision complex number. Working precision is carried by the
/// value; arithmetic results take the smaller of the operand precisions.
class BigComplex {
 public:
  BigComplex();
  explicit BigComplex(Precision p);
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(double re, double im, Precision p);
  BigComplex(const mpq_class& re, Precision p);

  /// e^{2 pi i turns}, computed exactly-rounded from the rational turn.
  static BigComplex unit(const mpq_class& turns, Precision p);
  static BigComplex polar(const BigFloat& r, const BigFloat& theta);

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  Precision precision() const { return re_.precision(); }
  int digits() const { return precision().decimal_digits(); }
  BigComplex with_precision(Precision p) const;
  BigComplex with_digits(int d) const { return with_precision(Precision::digits(d)); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  BigFloat abs() const;
  BigFloat norm() const;  // |z|^2
  BigFloat arg() const;
  double log10_abs() const;
  BigComplex conj() const { return BigComplex(re_, -im_); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s);
  friend BigComplex operator*(const BigComplex& a, long s);
  friend BigComplex operator/(const BigComplex& a, long s);
  /// 1 - z, the ubiquitous Pochhammer factor.
  friend BigComplex one_minus(const BigComplex& z);

  BigComplex pow(long n) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// Principal branch.
BigComplex sqrt(const BigComplex& z);
BigFloat abs(const BigComplex& z);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace mockradial

#endif  // MOCKRADIAL_BIGFLOAT_HPP
