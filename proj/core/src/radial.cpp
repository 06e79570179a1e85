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

#include "mockradial/radial.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <stdexcept>

#include "mockradial/errors.hpp"
#include "mockradial/qseries.hpp"

namespace mockradial {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Inverse of a modulo m for gcd(a, m) = 1.
long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    const long quo = r / new_r;
    t = std::exchange(new_t, t - quo * new_t);
    r = std::exchange(new_r, r - quo * new_r);
  }
  if (r != 1) throw std::logic_error("inverse_mod: not invertible");
  return mod(t, m);
}

bool closed_edge(const CuspData& c) { return mod(c.h * c.Bprime, c.kprime) == mod(1, c.kprime); }

}  // namespace

void SpecializationParams::validate() const {
  if (b < 1) throw InvalidParams("b must be positive");
  if (B < 1) throw InvalidParams("B must be positive");
  if (A < 0) throw InvalidParams("A must be nonnegative");
  if (a < 0 || a >= b) throw InvalidParams("need 0 <= a < b");
  if (std::gcd(a, b) != 1) throw InvalidParams("need gcd(a, b) = 1");
  if (b == 1 && A % B == 0) throw InvalidParams("B must not divide A when b = 1");
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Pole: return "Pole";
    case CaseLabel::Convergent: return "Convergent";
    case CaseLabel::KangShift: return "KangShift";
    case CaseLabel::EdgeSixthClosed: return "EdgeSixthClosed";
    case CaseLabel::EdgeSixthUnsupported: return "EdgeSixthUnsupported";
    case CaseLabel::DivergentThreeUnsupported: return "DivergentThreeUnsupported";
  }
  return "?";
}

bool is_supported(CaseLabel label) {
  return label != CaseLabel::EdgeSixthUnsupported && label != CaseLabel::DivergentThreeUnsupported;
}

std::string to_string(CompanionForm form) {
  switch (form) {
    case CompanionForm::Zero: return "Zero";
    case CompanionForm::PoleForm: return "PoleForm";
    case CompanionForm::KangForm: return "KangForm";
    case CompanionForm::EtaQuotientForm: return "EtaQuotientForm";
  }
  return "?";
}

CuspData cusp_data(const SpecializationParams& params, long h, long k) {
  params.validate();
  if (k < 1) throw InvalidParams("k must be positive");
  if (std::gcd(mod(h, k), k) != 1) throw InvalidParams("need gcd(h, k) = 1");
  CuspData c;
  c.k = k;
  c.h = mod(h, k) == 0 ? k : mod(h, k);
  const long g = std::gcd(k, params.B);
  c.kprime = k / g;
  c.Bprime = params.B / g;
  c.mu = fractional_part(Rational(c.kprime) * (Rational(params.a, params.b) + Rational(params.A * c.h, k)));
  c.in_Q = k % params.b == 0 && (params.a * (k / params.b) + params.A * c.h) % g == 0;
  if (c.in_Q != (c.mu == 0)) throw std::logic_error("pole criteria disagree");
  c.label = classify(params, c);
  return c;
}

int pole_sqrt_sign(const CuspData& c) { return (c.h * c.Bprime) % 2 != 0 ? 1 : -1; }

CaseLabel classify(const SpecializationParams&, const CuspData& c) {
  static const Rational sixth(1, 6);
  static const Rational five_sixths(5, 6);
  if (c.mu == 0) return CaseLabel::Pole;
  if (c.mu > sixth && c.mu < five_sixths) return CaseLabel::Convergent;
  if (c.mu == sixth || c.mu == five_sixths) {
    return closed_edge(c) ? CaseLabel::EdgeSixthClosed : CaseLabel::EdgeSixthUnsupported;
  }
  if (c.kprime % 3 != 0) return CaseLabel::KangShift;
  return CaseLabel::DivergentThreeUnsupported;
}

int field_order(const SpecializationParams& params, const CuspData& c) {
  const long n = lcm_long(lcm_long(6, params.b), lcm_long(c.k, 6 * c.kprime));
  if (n > order_cap()) {
    throw OrderLimitExceeded("field order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap()));
  }
  return static_cast<int>(n);
}

namespace {

long x_exponent(const SpecializationParams& p, const CuspData& c, long n) {
  return mod(p.a * (n / p.b) + c.h * p.A * (n / c.k), n);
}

long q_exponent(const SpecializationParams& p, const CuspData& c, long n) { return mod(c.h * p.B * (n / c.k), n); }

void expect(const CuspData& c, CaseLabel label, const char* who) {
  if (c.label != label) {
    throw CaseMismatch(std::string(who) + " called for a " + to_string(c.label) + " cusp");
  }
}

}  // namespace

CyclotomicNumber cusp_x(const SpecializationParams& params, const CuspData& cusp) {
  const int n = field_order(params, cusp);
  return root_of_unity(x_exponent(params, cusp, n), n);
}

CyclotomicNumber cusp_q(const SpecializationParams& params, const CuspData& cusp) {
  const int n = field_order(params, cusp);
  return root_of_unity(q_exponent(params, cusp, n), n);
}

CyclotomicNumber limit_pole(const SpecializationParams& params, const CuspData& cusp) {
  expect(cusp, CaseLabel::Pole, "limit_pole");
  const CyclotomicNumber x = cusp_x(params, cusp);
  const CyclotomicNumber q = cusp_q(params, cusp);
  const CyclotomicNumber xinv = x.inverse();
  return -xinv + xinv * xinv * g_tilde_tail_partial(x, q, cusp.kprime);
}

CyclotomicNumber limit_convergent(const SpecializationParams& params, const CuspData& cusp) {
  expect(cusp, CaseLabel::Convergent, "limit_convergent");
  return g3_abel_limit(cusp_x(params, cusp), cusp_q(params, cusp), static_cast<int>(cusp.kprime));
}

CyclotomicNumber limit_kang(const SpecializationParams& params, const CuspData& cusp) {
  expect(cusp, CaseLabel::KangShift, "limit_kang");
  const int n = field_order(params, cusp);
  const CyclotomicNumber x = cusp_x(params, cusp);
  const CyclotomicNumber q = cusp_q(params, cusp);
  CyclotomicNumber sum;
  for (int ell = 1; ell <= 2; ++ell) {
    sum += g3_abel_limit(root_of_unity(ell * n / 3, n) * x, q, static_cast<int>(cusp.kprime));
  }
  return -sum;
}

RadialLimitResult limit_edge(const SpecializationParams& params, const CuspData& cusp, int digits) {
  if (cusp.label != CaseLabel::EdgeSixthClosed && cusp.label != CaseLabel::EdgeSixthUnsupported) {
    throw CaseMismatch("limit_edge called for a " + to_string(cusp.label) + " cusp");
  }
  const long n = field_order(params, cusp);
  const long kp = cusp.kprime;
  const long step6 = n / (6 * kp);  // exponent of zeta_{6k'} in Q(zeta_n)
  const long stepk = n / kp;        // exponent of zeta_{k'}
  const CyclotomicNumber q = cusp_q(params, cusp);
  const CyclotomicNumber x0 = root_of_unity(step6, static_cast<int>(n));

  EdgeTrace tr;
  tr.sigma = cusp.mu == Rational(1, 6) ? 1 : -1;
  tr.inverted = tr.sigma == -1;
  const long ex = x_exponent(params, cusp, n);
  const long rest = mod(ex - tr.sigma * step6, n);
  if (rest % stepk != 0) throw std::logic_error("edge point is not zeta_{6k'}^sigma times a k'-th root");
  tr.ell = rest / stepk;
  const long ell_after = tr.inverted ? mod(-tr.ell, kp) : tr.ell;
  const long hb = mod(cusp.h * cusp.Bprime, kp);
  const long n0 = mod(-ell_after * inverse_mod(hb, kp), kp);

  // A shift count that keeps the reduced point on y(t) with y^6 = q^B.
  const long s = tr.inverted ? -params.A : params.A;
  const long num = params.B - 6 * s;
  const long den = 6 * params.B;
  tr.shifts = n0;
  if (num % den == 0 && (6 * params.a) % params.b == 0 && mod(num / den - n0, kp) == 0) {
    tr.shifts = num / den;
    tr.path_matched = true;
  }
  tr.closed_before_reduction = closed_edge(cusp);
  tr.closed_after_reduction = closed_edge(cusp);  // shifts and inversion leave q unchanged

  CyclotomicNumber cur = cusp_x(params, cusp);
  auto chain = AffineRelation<CyclotomicNumber>::identity(cur);
  auto push = [&](TransportKind kind, const AffineRelation<CyclotomicNumber>& rel, const CyclotomicNumber& next) {
    tr.steps.push_back({kind, cur, next, rel});
    chain = compose(chain, rel);
    cur = next;
  };
  if (tr.inverted) {
    auto [rel, next] = affine_transport(cur, q, TransportKind::Invert);
    push(TransportKind::Invert, rel, next);
  }
  for (long i = 0; i < tr.shifts; ++i) {
    auto [rel, next] = affine_transport(cur, q, TransportKind::ShiftFeq);
    push(TransportKind::ShiftFeq, rel, next);
  }
  for (long i = 0; i > tr.shifts; --i) {
    // g3(cur) = g3(p q) = -p^3 g3(p) - p^2 - p with p = cur / q.
    const CyclotomicNumber p = cur / q;
    push(TransportKind::ShiftFeq, AffineRelation<CyclotomicNumber>{-(p * p * p), -(p * p + p)}, p);
  }
  if (cur != x0) throw std::logic_error("edge reduction did not reach zeta_{6k'}");
  tr.chain = chain;

  RadialLimitResult r;
  r.label = cusp.label;
  r.cusp = cusp;
  r.companion.params = params;
  r.companion.h = cusp.h;
  r.companion.k = cusp.k;
  r.companion.kprime = kp;
  if (cusp.label == CaseLabel::EdgeSixthClosed) {
    const CyclotomicNumber reduced = mtc73_rhs(x0, static_cast<int>(kp));
    r.exact = chain.apply(reduced);
    r.numeric = embed_complex(*r.exact, digits);
    r.companion.form = CompanionForm::EtaQuotientForm;
    r.companion.inverted = tr.inverted;
    r.companion.shifts = tr.shifts;
  }
  r.reduction_trace = std::move(tr);
  return r;
}

BigComplex RadialPoint::power(const Rational& beta) const {
  return exp(L * BigFloat(beta, L.precision()));
}

RadialPoint radial_point(const SpecializationParams& params, long h, long k, const BigFloat& t, int digits) {
  const Precision p = Precision::digits(digits);
  RadialPoint pt;
  pt.L = BigComplex(-t.with_precision(p), BigFloat::pi(p) * (2 * h) / k);
  pt.x = BigComplex::unit(Rational(params.a, params.b), p) * pt.power(Rational(params.A));
  pt.Q = pt.power(Rational(params.B));
  return pt;
}

BigComplex specialized_g3(const SpecializationParams& params, long h, long k, const BigFloat& t, int digits) {
  const RadialPoint pt = radial_point(params, h, k, t, digits + guard_digits(digits));
  return g3_eval(pt.x, pt.Q, digits);
}

BigComplex companion_value(const ModularCompanion& c, const BigFloat& t, int digits, bool other_branch) {
  const int d = digits + guard_digits(digits);
  const Precision wp = Precision::digits(d);
  const Precision out = Precision::digits(digits);
  if (c.form == CompanionForm::Zero) return BigComplex(out);
  const SpecializationParams& p = c.params;
  const RadialPoint pt = radial_point(p, c.h, c.k, t, d);
  switch (c.form) {
    case CompanionForm::PoleForm: {
      BigComplex sq = pt.power(Rational(p.B, 2));
      if ((c.sqrt_sign < 0) != other_branch) sq = -sq;
      const BigComplex e = qinf(pt.Q, pt.Q, d);
      const BigComplex js = jacobi_triple(sq, pt.Q, d);
      const BigComplex jxs = jacobi_triple(pt.x * sq, pt.Q, d);
      const BigComplex den = pt.x * jxs * jxs * jacobi_triple(pt.x, pt.Q, d);
      if (den.is_zero()) throw NearSingular("companion_value: vanishing theta denominator");
      return (e * e * js * js / den).with_precision(out);
    }
    case CompanionForm::KangForm:
      return kang_rhs(pt.x, pt.Q, digits);
    case CompanionForm::EtaQuotientForm: {
      BigComplex cur = pt.x;
      BigComplex scale(mpq_class(1), wp);
      const BigComplex one(mpq_class(1), wp);
      if (c.inverted) {
        scale *= -(one / cur.pow(3));
        cur = one / cur;
      }
      for (long i = 0; i < c.shifts; ++i) {
        scale *= -(one / cur.pow(3));
        cur *= pt.Q;
      }
      for (long i = 0; i > c.shifts; --i) {
        cur /= pt.Q;
        scale *= -cur.pow(3);
      }
      // y(t) = zeta_{6k'} exp(-B t / 6)
      const BigFloat decay = exp(-(t.with_precision(wp) * p.B) / 6);
      const BigComplex y = BigComplex::unit(Rational(1, 6 * c.kprime), wp) * decay;
      return (scale * eta_quotient(y, d)).with_precision(out);
    }
    case CompanionForm::Zero:
      break;
  }
  return BigComplex(out);
}

RadialLimitResult radial_limit(const SpecializationParams& params, long h, long k, int digits) {
  const CuspData cusp = cusp_data(params, h, k);
  if (cusp.label == CaseLabel::EdgeSixthClosed || cusp.label == CaseLabel::EdgeSixthUnsupported) {
    return limit_edge(params, cusp, digits);
  }
  RadialLimitResult r;
  r.label = cusp.label;
  r.cusp = cusp;
  r.companion.params = params;
  r.companion.h = cusp.h;
  r.companion.k = cusp.k;
  r.companion.kprime = cusp.kprime;
  switch (cusp.label) {
    case CaseLabel::Pole:
      r.exact = limit_pole(params, cusp);
      r.companion.form = CompanionForm::PoleForm;
      r.companion.sqrt_sign = pole_sqrt_sign(cusp);
      break;
    case CaseLabel::Convergent:
      r.exact = limit_convergent(params, cusp);
      break;
    case CaseLabel::KangShift:
      r.exact = limit_kang(params, cusp);
      r.companion.form = CompanionForm::KangForm;
      break;
    default:
      break;
  }
  if (r.exact) r.numeric = embed_complex(*r.exact, digits);
  return r;
}

}  // namespace mockradial
