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

#include "mockradial/mocktheta.hpp"

#include <cmath>
#include <string>

#include "mockradial/errors.hpp"

namespace mockradial {

namespace {

constexpr long kTermCap = 20'000'000;

void check_args(const BigComplex& x, const BigComplex& q, const char* who) {
  if (x.is_zero()) throw DomainError(std::string(who) + ": x = 0");
  if (q.is_zero()) throw DomainError(std::string(who) + ": q = 0");
  if (!(q.abs() < 1.0)) throw DomainError(std::string(who) + ": need |q| < 1");
}

void check_factor(const BigComplex& f, int digits, const char* who) {
  if (f.is_zero() || f.log10_abs() < -digits / 2.0) {
    throw NearSingular(std::string(who) + ": denominator factor below 10^(-digits/2)");
  }
}

// Sums terms produced by `step(n)` until ten in a row are negligible
// against the running sum. `peak` receives log10 of the largest term.
template <class Step>
BigComplex sum_until_negligible(Step&& step, Precision wp, int stop_digits, const char* who,
                                double* peak = nullptr) {
  BigComplex sum(wp);
  int small = 0;
  double top = -HUGE_VAL;
  for (long n = 0; small < 10; ++n) {
    if (n > kTermCap) throw PrecisionExhausted(std::string(who) + ": term cap reached");
    const BigComplex term = step(n);
    sum += term;
    const double lt = term.is_zero() ? -HUGE_VAL : term.log10_abs();
    top = std::max(top, lt);
    const bool negligible = lt < std::max(0.0, sum.log10_abs()) - stop_digits;
    small = negligible ? small + 1 : 0;
  }
  if (peak != nullptr) *peak = top;
  return sum;
}

// Reruns `eval(work_digits, &peak)` at doubled precision until two results
// agree to `digits` digits relative to max(1, |value|). The first rerun is
// sized from the cancellation seen in the first pass (peak term vs. sum).
template <class Eval>
BigComplex stable(Eval&& eval, int digits, const char* who) {
  int work = digits + guard_digits(digits);
  double peak = 0.0;
  BigComplex prev = eval(work, &peak);
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double loss = std::max(0.0, peak - std::max(0.0, prev.log10_abs()));
    work = std::max(2 * work, digits + guard_digits(digits) + static_cast<int>(std::ceil(loss)) + 10);
    BigComplex cur = eval(work, &peak);
    const double scale = std::max(0.0, cur.log10_abs());
    const BigComplex diff = cur - prev;
    if (diff.is_zero() || diff.log10_abs() <= scale - digits) return cur.with_precision(Precision::digits(digits));
    prev = std::move(cur);
  }
  throw PrecisionExhausted(std::string(who) + ": successive precisions disagree");
}

// Theta products are checked factor by factor inside pochhammer_infinite;
// a whole product can be tiny and still accurate, so only zero is rejected.
void check_product(const BigComplex& f, const char* who) {
  if (f.is_zero()) throw NearSingular(std::string(who) + ": vanishing theta product");
}

BigComplex one_at(Precision p) { return BigComplex(mpq_class(1), p); }

}  // namespace

BigComplex g3_eval(const BigComplex& x, const BigComplex& q, int digits) {
  check_args(x, q, "g3_eval");
  auto eval = [&](int work, double* peak) {
    const Precision wp = Precision::digits(work);
    const BigComplex xw = x.with_precision(wp);
    const BigComplex qw = q.with_precision(wp);
    const BigComplex xinv = one_at(wp) / xw;
    // term_n = q^{n(n-1)} / (x, q/x; q)_n; the step to n+1 multiplies by
    // q^{2n} / ((1 - x q^n)(1 - q^{n+1}/x)).
    BigComplex term = one_at(wp);
    BigComplex qn = one_at(wp);  // q^{n-1} before the update
    return sum_until_negligible(
        [&](long n) {
          if (n > 0) term *= qn * qn;  // q^{2n} from q^{n(n-1)} to q^{n(n+1)}
          const BigComplex f1 = one_minus(xw * qn);
          qn *= qw;
          const BigComplex f2 = one_minus(qn * xinv);
          check_factor(f1, digits, "g3_eval");
          check_factor(f2, digits, "g3_eval");
          term /= f1 * f2;
          return term;
        },
        wp, work, "g3_eval", peak);
  };
  return stable(eval, digits, "g3_eval");
}

BigComplex g_tilde_eval(const BigComplex& x, const BigComplex& q, int digits) {
  check_args(x, q, "g_tilde_eval");
  auto eval = [&](int work, double* peak) {
    const Precision wp = Precision::digits(work);
    const BigComplex xw = x.with_precision(wp);
    const BigComplex qw = q.with_precision(wp);
    const BigComplex xinv = one_at(wp) / xw;
    BigComplex term = one_at(wp);
    BigComplex qn = one_at(wp);  // q^n
    const BigComplex s = sum_until_negligible(
        [&](long n) {
          // term_n = q^{n^2} / ((x)_{n+1} (q/x)_n)
          if (n > 0) {
            const BigComplex f2 = one_minus(qn * xinv);
            check_factor(f2, digits, "g_tilde_eval");
            term *= qn * qn / qw / f2;  // q^{2n-1}
          }
          const BigComplex f1 = one_minus(xw * qn);
          check_factor(f1, digits, "g_tilde_eval");
          term /= f1;
          qn *= qw;
          return term;
        },
        wp, work, "g_tilde_eval", peak);
    return -(xw * s);
  };
  return stable(eval, digits, "g_tilde_eval");
}

BigComplex g_tilde_tail(const BigComplex& x, const BigComplex& q, int digits) {
  check_args(x, q, "g_tilde_tail");
  const int work = digits + guard_digits(digits);
  const Precision wp = Precision::digits(work);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex xinv = one_at(wp) / xw;
  BigComplex term = one_minus(xw) * qw;
  BigComplex qn = qw;
  const BigComplex s = sum_until_negligible(
      [&](long n) {
        if (n > 0) {
          term *= one_minus(qn * xinv) * one_minus(xw * qn) * qw;
          qn *= qw;
        }
        return term;
      },
      wp, work, "g_tilde_tail");
  return s.with_precision(Precision::digits(digits));
}

BigComplex kang_rhs(const BigComplex& x, const BigComplex& q, int digits) {
  check_args(x, q, "kang_rhs");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex q3 = qw * qw * qw;
  const BigComplex x3 = x.with_precision(wp).pow(3);
  const BigComplex e3 = qinf(q3, q3, d);
  const BigComplex den = qinf(qw, qw, d) * jacobi_triple(x3, q3, d);
  check_product(den, "kang_rhs");
  return (e3 * e3 * e3 * 3 / den).with_precision(Precision::digits(digits));
}

BigComplex tailid_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& z, int digits) {
  check_args(x, q, "tailid_rhs");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex zw = z.with_precision(wp);
  const BigComplex xinv = one_at(wp) / xw;
  const BigComplex x3inv = xinv * xinv * xinv;
  const BigComplex eq = qinf(qw, qw, d);
  const BigComplex jz = jacobi_triple(zw, qw, d);
  check_product(jz, "tailid_rhs");
  const BigComplex lerch = lerch_series(xinv * xinv * zw, qw, zw, d);
  const BigComplex theta_den = jz * jacobi_triple(xinv, qw, d) * jacobi_triple(zw * xinv * xinv, qw, d);
  check_product(theta_den, "tailid_rhs");
  const BigComplex r = -xinv + xinv * xinv * g_tilde_tail(xw, qw, d) +
                       jacobi_triple(xw, qw, d) * x3inv / (eq * jz) * lerch +
                       zw * eq * eq * jacobi_triple(xw / zw, qw, d) * jacobi_triple(zw * xinv, qw, d) * x3inv /
                           theta_den;
  return r.with_precision(Precision::digits(digits));
}

BigComplex tailid2_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& sqrt_q, int digits) {
  check_args(x, q, "tailid2_rhs");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex sq = sqrt_q.with_precision(wp);
  const BigComplex xinv = one_at(wp) / xw;
  const BigComplex eq = qinf(qw, qw, d);
  const BigComplex jx = jacobi_triple(xw, qw, d);
  const BigComplex jxs = jacobi_triple(xw * sq, qw, d);
  check_product(jx, "tailid2_rhs");
  check_product(jxs, "tailid2_rhs");
  const BigComplex js = jacobi_triple(sq, qw, d);
  const BigComplex lerch = lerch_series(xinv * sq, qw, xw * sq, d);
  const BigComplex r = -xinv + xinv * xinv * g_tilde_tail(xw, qw, d) + jx * xinv.pow(3) / (eq * jxs) * lerch +
                       eq * eq * js * js * xinv / (jxs * jxs * jx);
  return r.with_precision(Precision::digits(digits));
}

BigComplex tailid2_rhs(const BigComplex& x, const BigComplex& q, int digits) {
  const Precision wp = Precision::digits(digits + guard_digits(digits));
  return tailid2_rhs(x, q, sqrt(q.with_precision(wp)), digits);
}

BigComplex p1_rhs(const BigComplex& x, const BigComplex& q, int digits) {
  check_args(x, q, "p1_rhs");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex xinv = one_at(wp) / xw;
  const BigComplex r = -(jacobi_triple(xw, qw, d) / (xw * qinf(qw, qw, d)) * appell_lerch(xinv * xinv, qw, xw, d));
  return r.with_precision(Precision::digits(digits));
}

IdentitySides lost_notebook_sides(const BigComplex& a, const BigComplex& b, const BigComplex& q, int digits) {
  if (a.is_zero() || b.is_zero()) throw DomainError("lost_notebook_sides: a and b must be nonzero");
  check_args(a, q, "lost_notebook_sides");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex aw = a.with_precision(wp);
  const BigComplex bw = b.with_precision(wp);
  const BigComplex qw = q.with_precision(wp);
  const BigComplex ainv = one_at(wp) / aw;
  const BigComplex binv = one_at(wp) / bw;

  // u_n = a^{-n-1} b^{-n} q^{n^2} / ((-1/a)_{n+1} (-q/b)_n)
  BigComplex u = ainv;
  BigComplex qn = one_at(wp);
  const BigComplex s1 = sum_until_negligible(
      [&](long n) {
        if (n > 0) {
          const BigComplex f = (one_at(wp) + qn * binv);
          check_factor(f, digits, "lost_notebook_sides");
          u *= ainv * binv * qn * qn / qw / f;
        }
        const BigComplex f = one_at(wp) + qn * ainv;
        check_factor(f, digits, "lost_notebook_sides");
        u /= f;
        qn *= qw;
        return u;
      },
      wp, d, "lost_notebook_sides");
  // v_n = (-aq)_{n-1} (-b)_n q^n for n >= 1
  BigComplex v = (one_at(wp) + bw) * qw;
  BigComplex qm = qw;
  const BigComplex s2 = sum_until_negligible(
      [&](long n) {
        if (n > 0) {
          v *= (one_at(wp) + aw * qm) * (one_at(wp) + bw * qm) * qw;
          qm *= qw;
        }
        return v;
      },
      wp, d, "lost_notebook_sides");

  const BigComplex den = bw * qinf(qw, qw, d) * qinf(-(qw * binv), qw, d);
  check_product(den, "lost_notebook_sides");
  const BigComplex rhs = qinf(-(aw * qw), qw, d) * jacobi_triple(-bw, qw, d) / den * appell_lerch(aw * binv, qw, -bw, d);
  const Precision out = Precision::digits(digits);
  return {(s1 + s2).with_precision(out), rhs.with_precision(out)};
}

BigComplex eta_quotient(const BigComplex& x, int digits) {
  check_args(x, x, "eta_quotient");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex x2 = xw * xw;
  const BigComplex x6 = x2 * x2 * x2;
  const BigComplex e2 = qinf(x2, x2, d);
  const BigComplex e1 = qinf(xw, xw, d);
  const BigComplex r = e2 * e2 * e2 * e2 / (xw * e1 * e1 * qinf(x6, x6, d) * 2);
  return r.with_precision(Precision::digits(digits));
}

BigComplex eta_quotient_product(const BigComplex& x, int digits) {
  check_args(x, x, "eta_quotient_product");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex x6 = xw.pow(6);
  const BigComplex m = qinf(-xw, xw, d);
  BigComplex r = m * m * m * m * qinf(xw, xw, d);
  BigComplex xi = xw;
  for (int i = 1; i <= 5; ++i) {
    r *= qinf(xi, x6, d);
    xi *= xw;
  }
  return (r / (xw * 2)).with_precision(Precision::digits(digits));
}

CyclotomicNumber eta_quotient_product_truncated(const CyclotomicNumber& x, long terms) {
  if (x.is_zero()) throw DivisionByZero("eta_quotient_product_truncated: x = 0");
  const CyclotomicNumber m = pochhammer(-x, x, terms);
  CyclotomicNumber r = m.pow(4) * pochhammer(x, x, terms);
  const CyclotomicNumber x6 = x.pow(6);
  for (int i = 1; i <= 5; ++i) r *= pochhammer(x.pow(i), x6, terms);
  return r / (x * CyclotomicNumber(2));
}

BigComplex mtc73_rhs(const BigComplex& x, int digits) {
  check_args(x, x, "mtc73_rhs");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex x3 = xw.pow(3);
  const BigComplex r = -(one_at(wp) / (xw * 2)) + xw * g3_eval(x3, x3 * x3, d) / 2 + eta_quotient_product(xw, d);
  return r.with_precision(Precision::digits(digits));
}

CyclotomicNumber mtc73_rhs(const CyclotomicNumber& x, int kprime) {
  if (x.is_zero()) throw DivisionByZero("mtc73_rhs: x = 0");
  const CyclotomicNumber x3 = x.pow(3);
  return -(CyclotomicNumber(1) / (x * CyclotomicNumber(2))) +
         x * g3_abel_limit(x3, x3 * x3, kprime) / CyclotomicNumber(2) +
         eta_quotient_product_truncated(x, 6L * kprime);
}

CyclotomicNumber g3_abel_limit(const CyclotomicNumber& x, const CyclotomicNumber& q, int period) {
  if (x.is_zero()) throw DivisionByZero("g3_abel_limit: x = 0");
  if (period < 1) throw std::invalid_argument("g3_abel_limit: period must be positive");
  const CyclotomicNumber one(1);
  const CyclotomicNumber xinv = x.inverse();
  // Factors f_j = (1 - x q^{j-1})(1 - q^j / x) for j = 1..period.
  std::vector<CyclotomicNumber> f;
  f.reserve(static_cast<std::size_t>(period));
  CyclotomicNumber qj = one;  // q^{j-1}
  for (int j = 1; j <= period; ++j) {
    const CyclotomicNumber a = one - x * qj;
    qj *= q;
    f.push_back(a * (one - qj * xinv));
  }
  // With P_j = f_1 ... f_j and D = P_period, 1/P_j = (f_{j+1} ... f_period) / D,
  // and [1/(1 - 1/D)] / D = 1 / (D - 1).
  CyclotomicNumber sum;
  CyclotomicNumber suffix = one;
  CyclotomicNumber D = one;
  for (int j = period; j >= 1; --j) {
    const long e = static_cast<long>(j) * (j - 1);
    sum += q.pow(e) * suffix;
    suffix *= f[static_cast<std::size_t>(j - 1)];
  }
  D = suffix;
  if (D.is_zero()) throw DivisionByZero("g3_abel_limit: (x, q/x; q)_period vanishes");
  if (D == one) throw DivisionByZero("g3_abel_limit: geometric ratio is 1");
  return sum / (D - one);
}

BigComplex lim0_quotient(const BigComplex& x, const BigComplex& Q, const BigComplex& sqrt_Q, int digits) {
  check_args(x, Q, "lim0_quotient");
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const BigComplex xw = x.with_precision(wp);
  const BigComplex qw = Q.with_precision(wp);
  const BigComplex sq = sqrt_Q.with_precision(wp);
  const BigComplex jxs = jacobi_triple(xw * sq, qw, d);
  check_product(jxs, "lim0_quotient");
  const BigComplex pre = jacobi_triple(xw, qw, d) / (qinf(qw, qw, d) * jxs);
  if (pre.is_zero()) return BigComplex(Precision::digits(digits));
  const BigComplex r = pre * lerch_series(sq / xw, qw, xw * sq, d);
  return r.with_precision(Precision::digits(digits));
}

}  // namespace mockradial
