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

#include "mockradial/qseries.hpp"

#include <cmath>
#include <string>

namespace mockradial {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr long kTermCap = 50'000'000;

void check_disc(const BigComplex& q, const char* who) {
  if (!q.is_finite()) throw DomainError(std::string(who) + ": q is not finite");
  if (q.abs().to_double() > 1.0 - 1e-8) throw DomainError(std::string(who) + ": need |q| <= 1 - 1e-8");
}

// Decimal digits lost to the size of 1/(1-|q|) in the tail sums.
int closeness_digits(double rq) {
  return static_cast<int>(std::ceil(std::max(0.0, std::log10(1.0 / (1.0 - rq))))) + 2;
}

}  // namespace

std::pair<BigComplex, TruncationReport> pochhammer_infinite(const BigComplex& a, const BigComplex& q, int digits) {
  check_disc(q, "pochhammer_infinite");
  const int g = guard_digits(digits);
  const Precision out = Precision::digits(digits);
  TruncationReport rep;
  if (a.is_zero()) return {BigComplex(mpq_class(1), out), rep};
  const double rq = q.abs().to_double();
  const int work = digits + g + closeness_digits(rq);
  const Precision wp = Precision::digits(work);
  const BigComplex qw = q.with_precision(wp);
  BigComplex u = a.with_precision(wp);
  BigComplex result(mpq_class(1), wp);
  const double log_eps = -(digits + g) * kLn10;

  // Large factors first; these carry no truncation error.
  while (u.log10_abs() > -0.30102999566398120) {
    const BigComplex f = one_minus(u);
    if (f.is_zero()) {
      rep.terms_used += 1;
      return {BigComplex(out), rep};
    }
    if (f.log10_abs() < -digits) throw NearSingular("pochhammer_infinite: factor below 10^-digits");
    result *= f;
    u *= qw;
    if (++rep.terms_used > kTermCap) throw PrecisionExhausted("pochhammer_infinite: term cap reached");
  }
  if (u.is_zero() || qw.is_zero()) {
    if (!u.is_zero()) {
      result *= one_minus(u);
      rep.terms_used += 1;
    }
    return {result.with_precision(out), rep};
  }

  const double ru = std::pow(10.0, u.log10_abs());
  const double lnq = std::log(rq);
  // Direct truncation: |log tail| <= 2 |u| |q|^n / (1-|q|).
  const double direct =
      std::max(0.0, std::ceil((log_eps + std::log(1.0 - rq) - std::log(2.0 * ru)) / lnq));
  // Log series: remainder <= |u|^{M+1} / ((M+1)(1-|q|)(1-|u|)).
  const double series =
      std::max(1.0, std::ceil((log_eps + std::log(1.0 - rq) + std::log(1.0 - ru)) / std::log(ru)));

  if (direct <= 4.0 * series) {
    const long n = static_cast<long>(direct);
    for (long j = 0; j < n; ++j) {
      result *= one_minus(u);
      u *= qw;
    }
    rep.terms_used += n;
    rep.tail_bound = 2.0 * std::pow(10.0, u.log10_abs()) / (1.0 - rq);
  } else {
    // log prod_{j>=0} (1 - u q^j) = -sum_{m>=1} u^m / (m (1 - q^m))
    const long m_max = static_cast<long>(series);
    BigComplex um = u;
    BigComplex qm = qw;
    BigComplex s(wp);
    for (long m = 1; m <= m_max; ++m) {
      s += um / (one_minus(qm) * m);
      um *= u;
      qm *= qw;
    }
    result *= exp(-s);
    rep.terms_used += m_max;
    rep.tail_bound = std::pow(ru, static_cast<double>(m_max + 1)) /
                     (static_cast<double>(m_max + 1) * (1.0 - rq) * (1.0 - ru));
  }
  return {result.with_precision(out), rep};
}

BigComplex qinf(const BigComplex& a, const BigComplex& q, int digits) {
  return pochhammer_infinite(a, q, digits).first;
}

BigComplex jacobi_triple(const BigComplex& x, const BigComplex& q, int digits) {
  if (x.is_zero()) throw DomainError("jacobi_triple: x = 0");
  check_disc(q, "jacobi_triple");
  const Precision wp = Precision::digits(digits + guard_digits(digits));
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  return (qinf(xw, qw, digits) * qinf(qw / xw, qw, digits) * qinf(qw, qw, digits))
      .with_precision(Precision::digits(digits));
}

BigComplex lerch_series(const BigComplex& w, const BigComplex& q, const BigComplex& z, int digits) {
  check_disc(q, "lerch_series");
  if (q.is_zero() || z.is_zero()) throw DomainError("lerch_series: q and z must be nonzero");
  const int g = guard_digits(digits);
  const double rq = q.abs().to_double();
  const Precision wp = Precision::digits(digits + g + closeness_digits(rq));
  const BigComplex qw = q.with_precision(wp);
  const BigComplex zw = z.with_precision(wp);
  const BigComplex ww = w.with_precision(wp);
  const BigComplex minus_z = -zw;
  const BigComplex inv_minus_z = BigComplex(mpq_class(1), wp) / minus_z;
  const double log_eps = -(digits + g);
  BigComplex sum(wp);

  auto add_term = [&](const BigComplex& p, const BigComplex& wqn) {
    const BigComplex den = one_minus(wqn);
    if (den.is_zero() || den.log10_abs() < -digits / 2.0) {
      throw NearSingular("lerch_series: denominator 1 - w q^(n-1) below threshold");
    }
    const BigComplex term = p / den;
    sum += term;
    return term.log10_abs() < log_eps + std::max(0.0, sum.log10_abs());
  };

  // n >= 0: p_n = (-z)^n q^{n(n-1)/2}, p_{n+1} = p_n (-z) q^n.
  {
    BigComplex p(mpq_class(1), wp);
    BigComplex qn(mpq_class(1), wp);
    BigComplex wqn = ww / qw;
    int small = 0;
    for (long n = 0;; ++n) {
      const bool negligible = add_term(p, wqn);
      small = negligible ? small + 1 : 0;
      if (small >= 3 && (zw * qn).log10_abs() < -0.3) break;
      if (n > kTermCap) throw PrecisionExhausted("lerch_series: term cap reached");
      p *= minus_z * qn;
      qn *= qw;
      wqn *= qw;
    }
  }
  // n <= -1: p_{n-1} = p_n q^{1-n} / (-z).
  {
    BigComplex p = qw * inv_minus_z;
    BigComplex q1n = qw * qw;  // q^{1-n} at n = -1
    BigComplex wqn = ww / (qw * qw);
    int small = 0;
    for (long n = -1;; --n) {
      const bool negligible = add_term(p, wqn);
      small = negligible ? small + 1 : 0;
      if (small >= 3 && (q1n * inv_minus_z).log10_abs() < -0.3) break;
      if (-n > kTermCap) throw PrecisionExhausted("lerch_series: term cap reached");
      p *= q1n * inv_minus_z;
      q1n *= qw;
      wqn /= qw;
    }
  }
  return sum.with_precision(Precision::digits(digits));
}

BigComplex appell_lerch(const BigComplex& x, const BigComplex& q, const BigComplex& z, int digits) {
  check_disc(q, "appell_lerch");
  const int g = guard_digits(digits);
  const BigComplex jz = jacobi_triple(z, q, digits + g);
  if (jz.is_zero() || jz.log10_abs() < -digits / 2.0) throw DomainError("appell_lerch: j(z,q) vanishes");
  const Precision wp = Precision::digits(digits + g);
  const BigComplex xz = x.with_precision(wp) * z.with_precision(wp);
  return (lerch_series(xz, q, z, digits + g) / jz).with_precision(Precision::digits(digits));
}

BigComplex appell_lerch_shift_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& z,
                                  const BigComplex& w, int digits) {
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex zw = z.with_precision(wp);
  const BigComplex ww = w.with_precision(wp);
  const BigComplex eq = qinf(qw, qw, d);
  const BigComplex num = ww * eq * eq * eq * jacobi_triple(zw / ww, qw, d) * jacobi_triple(xw * zw * ww, qw, d);
  const BigComplex den = jacobi_triple(zw, qw, d) * jacobi_triple(ww, qw, d) * jacobi_triple(xw * zw, qw, d) *
                         jacobi_triple(xw * ww, qw, d);
  if (den.is_zero()) throw NearSingular("appell_lerch_shift_rhs: vanishing theta factor");
  return (num / den).with_precision(Precision::digits(digits));
}

BigComplex theta_series(const BigComplex& x, const BigComplex& q, int digits) {
  check_disc(q, "theta_series");
  if (x.is_zero()) throw DomainError("theta_series: x = 0");
  const int g = guard_digits(digits);
  const Precision wp = Precision::digits(digits + g + closeness_digits(q.abs().to_double()));
  const BigComplex qw = q.with_precision(wp);
  const BigComplex xw = x.with_precision(wp);
  const double log_eps = -(digits + g);
  BigComplex sum(mpq_class(1), wp);
  // Each side: t_{n+1} = t_n (-x) q^n for n >= 0 and t_{n-1} = t_n q^{1-n} / (-x) for n <= 0.
  for (int side = 0; side < 2; ++side) {
    const BigComplex step = side == 0 ? -xw : BigComplex(mpq_class(1), wp) / -xw;
    BigComplex t(mpq_class(1), wp);
    BigComplex qn = side == 0 ? BigComplex(mpq_class(1), wp) : qw;
    int small = 0;
    for (long n = 0; small < 3; ++n) {
      t *= step * qn;
      qn *= qw;
      sum += t;
      const bool negligible = t.log10_abs() < log_eps + std::max(0.0, sum.log10_abs());
      small = negligible && (step * qn).log10_abs() < -0.3 ? small + 1 : 0;
      if (n > kTermCap) throw PrecisionExhausted("theta_series: term cap reached");
    }
  }
  return sum.with_precision(Precision::digits(digits));
}

CyclotomicNumber periodic_pochhammer_closed_form(const CyclotomicNumber& x, int kprime) {
  if (x.is_zero()) throw DivisionByZero("periodic_pochhammer_closed_form: x = 0");
  const CyclotomicNumber xk = x.pow(kprime);
  return (CyclotomicNumber(1) - xk) * (CyclotomicNumber(1) - xk.inverse());
}

}  // namespace mockradial
