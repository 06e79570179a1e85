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

#include "mockradial/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mockradial {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;
constexpr mpfr_prec_t kSlackBits = 4;

mpfr_prec_t min_prec(mpfr_srcptr a, mpfr_srcptr b) {
  return std::min(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

Precision Precision::bits(mpfr_prec_t b) {
  if (b < MPFR_PREC_MIN) b = MPFR_PREC_MIN;
  return Precision(b);
}

Precision Precision::digits(int d) {
  if (d < 1) d = 1;
  return Precision(static_cast<mpfr_prec_t>(std::ceil(d * kLog2Of10)) + kSlackBits);
}

int Precision::decimal_digits() const {
  return static_cast<int>(std::floor(static_cast<double>(bits_ - kSlackBits) / kLog2Of10 + 1e-9));
}

// BigFloat ----------------------------------------------------------------

BigFloat::BigFloat() : BigFloat(Precision()) {}

BigFloat::BigFloat(Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, Precision p) {
  mpfr_init2(v_, p.bits());
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(Precision p) const {
  BigFloat r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double BigFloat::log10_abs() const {
  if (mpfr_zero_p(v_)) return -HUGE_VAL;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string BigFloat::to_string(int significant) const {
  if (significant < 1) significant = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) < mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) < mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) < mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) < mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision::bits(min_prec(a.v_, b.v_)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision::bits(min_prec(a.v_, b.v_)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision::bits(min_prec(a.v_, b.v_)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision::bits(min_prec(a.v_, b.v_)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(Precision p) {
  BigFloat r(p);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, Precision p) {
  BigFloat r(p);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

#define MOCKRADIAL_UNARY(name, fn)                 \
  BigFloat name(const BigFloat& x) {               \
    BigFloat r(x.precision());                     \
    fn(r.raw(), x.raw(), MPFR_RNDN);               \
    return r;                                      \
  }

MOCKRADIAL_UNARY(abs, mpfr_abs)
MOCKRADIAL_UNARY(sqrt, mpfr_sqrt)
MOCKRADIAL_UNARY(exp, mpfr_exp)
MOCKRADIAL_UNARY(log, mpfr_log)
MOCKRADIAL_UNARY(cos, mpfr_cos)
MOCKRADIAL_UNARY(sin, mpfr_sin)

#undef MOCKRADIAL_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(min(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(min(x.precision(), y.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(x.precision().decimal_digits());
}

// BigComplex --------------------------------------------------------------

BigComplex::BigComplex() : BigComplex(Precision::digits(10)) {}

BigComplex::BigComplex(Precision p) : re_(p), im_(p) {}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    const Precision p = min(re_.precision(), im_.precision());
    re_ = re_.with_precision(p);
    im_ = im_.with_precision(p);
  }
}

BigComplex::BigComplex(double re, double im, Precision p) : re_(re, p), im_(im, p) {}

BigComplex::BigComplex(const mpq_class& re, Precision p) : re_(re, p), im_(p) {}

BigComplex BigComplex::unit(const mpq_class& turns, Precision p) {
  // Reduce to [0, 1) so that quarter turns come out exact.
  mpq_class t = turns;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= fl;
  mpq_class four_t = t * 4;
  four_t.canonicalize();
  if (four_t.get_den() == 1) {
    switch (four_t.get_num().get_si()) {
      case 0: return BigComplex(1.0, 0.0, p);
      case 1: return BigComplex(0.0, 1.0, p);
      case 2: return BigComplex(-1.0, 0.0, p);
      default: return BigComplex(0.0, -1.0, p);
    }
  }
  const Precision wp = Precision::bits(p.bits() + 32);
  BigFloat theta = BigFloat::pi(wp) * BigFloat(t, wp) * 2L;
  return BigComplex(cos(theta).with_precision(p), sin(theta).with_precision(p));
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) {
  return BigComplex(r * cos(theta), r * sin(theta));
}

BigComplex BigComplex::with_precision(Precision p) const {
  return BigComplex(re_.with_precision(p), im_.with_precision(p));
}

BigFloat BigComplex::abs() const { return hypot(re_, im_); }

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigComplex::arg() const { return atan2(im_, re_); }

double BigComplex::log10_abs() const {
  const double a = re_.log10_abs();
  const double b = im_.log10_abs();
  const double hi = std::max(a, b);
  if (std::isinf(hi)) return hi;
  const double lo = std::min(a, b);
  return hi + 0.5 * std::log10(1.0 + std::pow(10.0, 2.0 * (lo - hi)));
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat ac = re_ * o.re_;
  BigFloat bd = im_ * o.im_;
  BigFloat ad = re_ * o.im_;
  BigFloat bc = im_ * o.re_;
  re_ = ac - bd;
  im_ = ad + bc;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw std::domain_error("complex division by zero");
  BigFloat den = o.norm();
  BigFloat nr = re_ * o.re_ + im_ * o.im_;
  BigFloat ni = im_ * o.re_ - re_ * o.im_;
  re_ = nr / den;
  im_ = ni / den;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigFloat& s) {
  return BigComplex(a.re_ * s, a.im_ * s);
}

BigComplex operator*(const BigComplex& a, long s) { return BigComplex(a.re_ * s, a.im_ * s); }

BigComplex operator/(const BigComplex& a, long s) { return BigComplex(a.re_ / s, a.im_ / s); }

BigComplex one_minus(const BigComplex& z) {
  BigFloat re(z.precision());
  mpfr_ui_sub(re.raw(), 1, z.re_.raw(), MPFR_RNDN);
  return BigComplex(std::move(re), -z.im_);
}

BigComplex BigComplex::pow(long n) const {
  const bool invert = n < 0;
  unsigned long e = static_cast<unsigned long>(invert ? -n : n);
  BigComplex result(1.0, 0.0, precision());
  BigComplex base = *this;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (invert) return BigComplex(1.0, 0.0, precision()) / result;
  return result;
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.real());
  return BigComplex(m * cos(z.imag()), m * sin(z.imag()));
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  return BigComplex(log(z.abs()), z.arg());
}

BigComplex sqrt(const BigComplex& z) {
  const Precision p = z.precision();
  if (z.is_zero()) return BigComplex(p);
  BigFloat r = z.abs();
  BigFloat t = sqrt((r + abs(z.real())) / 2L);
  if (z.real().sign() >= 0) return BigComplex(t, z.imag() / (t * 2L));
  BigFloat re = abs(z.imag()) / (t * 2L);
  return BigComplex(re, z.imag().sign() < 0 ? -t : t);
}

BigFloat abs(const BigComplex& z) { return z.abs(); }

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  const int d = z.digits();
  return os << "(" << z.real().to_string(d) << ", " << z.imag().to_string(d) << ")";
}

}  // namespace mockradial
