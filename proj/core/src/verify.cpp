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

#include "mockradial/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>
#include <numeric>
#include <random>

#include "mockradial/errors.hpp"
#include "mockradial/mocktheta.hpp"
#include "mockradial/parallel.hpp"
#include "mockradial/qseries.hpp"

namespace mockradial {

RadialSchedule RadialSchedule::standard(const Rational& t_start, int steps, int digits) {
  RadialSchedule s;
  s.digits = digits;
  Rational t = t_start;
  for (int i = 0; i < steps; ++i) {
    s.t_values.push_back(t);
    t /= 2;
  }
  s.validate();
  return s;
}

void RadialSchedule::validate() const {
  if (t_values.empty()) throw InvalidParams("schedule is empty");
  if (digits < 10) throw InvalidParams("schedule precision must be at least 10 digits");
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    if (t_values[i] <= 0) throw InvalidParams("schedule values must be positive");
    if (i > 0 && !(t_values[i] < t_values[i - 1])) throw InvalidParams("schedule must be strictly decreasing");
  }
}

namespace {

bool last_four_decreasing(const std::vector<ResidualPoint>& pts) {
  if (pts.size() < 4) return false;
  for (std::size_t i = pts.size() - 3; i < pts.size(); ++i) {
    if (!(pts[i].log10_residual < pts[i - 1].log10_residual)) return false;
  }
  return true;
}

ResidualPoint make_point(const Rational& t, const BigComplex& v, int digits) {
  ResidualPoint p;
  p.t = t;
  p.log10_residual = v.log10_abs();
  p.residual = std::pow(10.0, p.log10_residual);
  p.digits_used = digits;
  return p;
}

}  // namespace

ConvergenceReport radial_check(const SpecializationParams& params, long h, long k, const RadialSchedule& schedule,
                               double tolerance, const RadialCheckOptions& options) {
  schedule.validate();
  ConvergenceReport rep;
  rep.tolerance = tolerance;
  rep.limit = radial_limit(params, h, k, schedule.digits);
  if (!is_supported(rep.limit.label) || !rep.limit.exact) {
    throw UnsupportedCase("radial_check: no limit value for label " + to_string(rep.limit.label));
  }
  ModularCompanion comp = rep.limit.companion;
  if (options.zero_companion) comp.form = CompanionForm::Zero;
  const long hn = rep.limit.cusp.h;
  int d = schedule.digits;
  for (const Rational& t : schedule.t_values) {
    BigComplex F, M;
    for (;;) {
      if (d > options.max_digits) throw PrecisionExhausted("radial_check: precision cap reached");
      try {
        const BigFloat tb(t, Precision::digits(d + guard_digits(d)));
        F = specialized_g3(params, hn, k, tb, d);
        M = companion_value(comp, tb, d, options.other_branch);
      } catch (const NearSingular&) {
        d *= 2;
        continue;
      } catch (const PrecisionExhausted&) {
        d *= 2;
        continue;
      }
      const double mag = std::max({0.0, F.log10_abs(), M.log10_abs()});
      const int need = static_cast<int>(std::ceil(mag)) + options.target_digits + 5;
      if (d < need) {
        d = need;
        continue;
      }
      break;
    }
    const BigComplex q = embed_complex(*rep.limit.exact, d);
    rep.residuals.push_back(make_point(t, F - M - q, d));
  }
  rep.final_residual = rep.residuals.back().residual;
  rep.monotone_tail = last_four_decreasing(rep.residuals);
  rep.passed = rep.monotone_tail && rep.final_residual < tolerance;
  return rep;
}

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::kang: return "kang";
    case IdentityId::shift: return "shift";
    case IdentityId::p1: return "p1";
    case IdentityId::tailid: return "tailid";
    case IdentityId::tailid2: return "tailid2";
    case IdentityId::lost_notebook: return "lost_notebook";
    case IdentityId::jtp_series: return "jtp_series";
    case IdentityId::l2: return "l2";
    case IdentityId::feq: return "feq";
    case IdentityId::inv: return "inv";
    case IdentityId::mtc73: return "mtc73";
    case IdentityId::lim0: return "lim0";
  }
  return "?";
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::kang, IdentityId::shift,      IdentityId::p1, IdentityId::tailid, IdentityId::tailid2, IdentityId::lost_notebook,
      IdentityId::jtp_series, IdentityId::l2, IdentityId::feq, IdentityId::inv, IdentityId::mtc73, IdentityId::lim0};
  return ids;
}

std::optional<IdentityId> parse_identity(const std::string& name) {
  for (IdentityId id : all_identities()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

double relative_residual(const BigComplex& lhs, const BigComplex& rhs) {
  const BigComplex diff = lhs - rhs;
  if (!diff.is_finite()) return std::numeric_limits<double>::infinity();
  if (diff.is_zero()) return 0.0;
  const double scale = std::max({0.0, lhs.log10_abs(), rhs.log10_abs()});
  return std::pow(10.0, diff.log10_abs() - scale);
}

namespace {

using cd = std::complex<double>;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t index) : gen_(splitmix(seed ^ splitmix(index))) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  cd polar(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), uniform(0.0, 2.0 * M_PI)); }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// |1 - v q^j| >= 1e-3 for |j| <= 80, which keeps v away from the zeros of
// j(v, q) and from the poles of the series built on v.
bool away(cd v, cd q) {
  cd qj = 1.0;
  for (int j = 0; j <= 80; ++j, qj *= q) {
    if (std::abs(1.0 - v * qj) < 1e-3) return false;
  }
  qj = 1.0 / q;
  for (int j = 1; j <= 80; ++j, qj /= q) {
    if (std::abs(1.0 - v * qj) < 1e-3) return false;
  }
  return true;
}

bool all_away(std::initializer_list<cd> vs, cd q) {
  return std::all_of(vs.begin(), vs.end(), [&](cd v) { return away(v, q); });
}

BigComplex big(cd v, Precision p) { return BigComplex(v.real(), v.imag(), p); }

// Draws an admissible point and returns the residual for one sample.
double sample_residual(IdentityId id, std::uint64_t seed, std::uint64_t index, int digits) {
  const Precision p = Precision::digits(digits + guard_digits(digits));
  const cd w3 = std::polar(1.0, 2.0 * M_PI / 3.0);
  Sampler s(seed, index);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const cd q = s.polar(0.1, 0.8);
    switch (id) {
      case IdentityId::kang: {
        const cd x = s.polar(0.3, 1.5);
        if (!all_away({x, w3 * x, w3 * w3 * x}, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p), z3 = BigComplex::unit(Rational(1, 3), p);
        const BigComplex lhs = g3_eval(X, Q, digits) + g3_eval(z3 * X, Q, digits) + g3_eval(z3 * z3 * X, Q, digits);
        return relative_residual(lhs, kang_rhs(X, Q, digits));
      }
      case IdentityId::shift: {
        const cd x = s.polar(0.3, 1.5), z = s.polar(0.3, 1.5), w = s.polar(0.3, 1.5);
        if (!all_away({z / w, x * z * w, z, w, x * z, x * w}, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p), Z = big(z, p), W = big(w, p);
        const BigComplex lhs = appell_lerch(X, Q, Z, digits) - appell_lerch(X, Q, W, digits);
        return relative_residual(lhs, appell_lerch_shift_rhs(X, Q, Z, W, digits));
      }
      case IdentityId::p1: {
        const cd x = s.polar(0.3, 1.5);
        if (!away(x, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p);
        return relative_residual(g_tilde_eval(X, Q, digits) + g_tilde_tail(X, Q, digits), p1_rhs(X, Q, digits));
      }
      case IdentityId::tailid: {
        const cd x = s.polar(0.3, 1.5);
        const cd zs[3] = {s.polar(0.5, 1.5), s.polar(0.5, 1.5), s.polar(0.5, 1.5)};
        bool ok = away(x, q);
        for (cd z : zs) ok = ok && all_away({z, z / (x * x), x / z}, q);
        if (!ok) continue;
        const BigComplex X = big(x, p), Q = big(q, p);
        const BigComplex g = g3_eval(X, Q, digits);
        double worst = 0.0;
        for (cd z : zs) worst = std::max(worst, relative_residual(tailid_rhs(X, Q, big(z, p), digits), g));
        return worst;
      }
      case IdentityId::tailid2: {
        const cd x = s.polar(0.3, 1.5);
        const cd sq = std::sqrt(q);
        if (!all_away({x, x * sq, sq / x}, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p);
        return relative_residual(tailid2_rhs(X, Q, digits), g3_eval(X, Q, digits));
      }
      case IdentityId::lost_notebook: {
        const cd a = s.polar(0.3, 1.5), b = s.polar(0.3, 1.5);
        if (!all_away({-a, -b, -1.0 / a, -1.0 / b}, q)) continue;
        const IdentitySides sides = lost_notebook_sides(big(a, p), big(b, p), big(q, p), digits);
        return relative_residual(sides.lhs, sides.rhs);
      }
      case IdentityId::jtp_series: {
        const BigComplex Q = big(q, p);
        if (index == 0) {
          // Degenerate sample: both sides vanish at x = q.
          return relative_residual(jacobi_triple(Q, Q, digits), theta_series(Q, Q, digits));
        }
        const cd x = s.polar(0.1, 3.0);
        if (!away(x, q)) continue;
        const BigComplex X = big(x, p);
        return relative_residual(jacobi_triple(X, Q, digits), theta_series(X, Q, digits));
      }
      case IdentityId::l2: {
        const cd x = s.polar(0.3, 1.5);
        if (!away(x, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p), one(mpq_class(1), p);
        const BigComplex rhs = -(one + g_tilde_eval(X, Q, digits) / X) / X;
        return relative_residual(g3_eval(X, Q, digits), rhs);
      }
      case IdentityId::feq: {
        const cd x = s.polar(0.3, 1.5);
        if (!away(x, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p);
        const BigComplex rhs = -(X.pow(3) * g3_eval(X, Q, digits)) - X * X - X;
        return relative_residual(g3_eval(X * Q, Q, digits), rhs);
      }
      case IdentityId::inv: {
        const cd x = s.polar(0.3, 1.5);
        if (!away(x, q)) continue;
        const BigComplex X = big(x, p), Q = big(q, p), one(mpq_class(1), p);
        return relative_residual(g3_eval(one / X, Q, digits), g3_eval(X * Q, Q, digits));
      }
      case IdentityId::mtc73: {
        const cd x = s.polar(0.3, 0.96);
        if (!all_away({x, x * x * x}, std::pow(x, 6))) continue;
        const BigComplex X = big(x, p);
        return relative_residual(g3_eval(X, X.pow(6), digits), mtc73_rhs(X, digits));
      }
      case IdentityId::lim0:
        break;
    }
    break;
  }
  throw PrecisionExhausted("identity_check: no admissible sample point found");
}

}  // namespace

IdentityReport identity_check(IdentityId id, int samples, std::uint64_t seed, int digits,
                              std::optional<double> tolerance) {
  if (samples < 1) throw InvalidParams("identity_check: samples must be positive");
  IdentityReport rep;
  rep.id = id;
  rep.samples = samples;
  rep.digits = digits;
  if (id == IdentityId::lim0) {
    rep.tolerance = tolerance.value_or(1e-2);
    std::vector<Tuple> poles;
    for (const Tuple& t : enumerate_tuples(6, 3, 4, 12)) {
      if (cusp_data(t.params, t.h, t.k).label == CaseLabel::Pole) poles.push_back(t);
    }
    const auto reports = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t i) {
      const Tuple& t = poles[splitmix(seed ^ splitmix(i)) % poles.size()];
      return lim0_check(t.params, t.h, t.k, RadialSchedule::standard(Rational(1, 5), 9, digits));
    });
    rep.passed = true;
    for (const Lim0Report& r : reports) {
      rep.max_residual = std::max(rep.max_residual, r.final_value);
      rep.passed = rep.passed && r.decreasing;
    }
    rep.passed = rep.passed && rep.max_residual < rep.tolerance;
    return rep;
  }
  rep.tolerance = tolerance.value_or(std::pow(10.0, -(digits - 12)));
  const auto res = parallel_map(static_cast<std::size_t>(samples),
                                [&](std::size_t i) { return sample_residual(id, seed, i, digits); });
  rep.max_residual = *std::max_element(res.begin(), res.end());
  rep.passed = rep.max_residual < rep.tolerance;
  return rep;
}

Lim0Report lim0_check(const SpecializationParams& params, long h, long k, const RadialSchedule& schedule) {
  schedule.validate();
  const CuspData cusp = cusp_data(params, h, k);
  if (cusp.label != CaseLabel::Pole) throw CaseMismatch("lim0_check needs a pole cusp");
  const int sign = pole_sqrt_sign(cusp);
  Lim0Report rep;
  int d = schedule.digits;
  for (const Rational& t : schedule.t_values) {
    for (;;) {
      if (d > 4000) throw PrecisionExhausted("lim0_check: precision cap reached");
      try {
        const int wd = d + guard_digits(d);
        const RadialPoint pt = radial_point(params, cusp.h, k, BigFloat(t, Precision::digits(wd)), wd);
        BigComplex sq = pt.power(Rational(params.B, 2));
        if (sign < 0) sq = -sq;
        const BigComplex v = lim0_quotient(pt.x, pt.Q, sq, d);
        rep.values.push_back(make_point(t, v, d));
        break;
      } catch (const NearSingular&) {
        d *= 2;
      }
    }
  }
  rep.final_value = rep.values.back().residual;
  rep.decreasing = last_four_decreasing(rep.values);
  rep.passed = rep.decreasing && rep.final_value < 1e-2;
  return rep;
}

std::vector<Tuple> enumerate_tuples(long b_max, long A_max, long B_max, long k_max) {
  std::vector<Tuple> out;
  for (long k = 1; k <= k_max; ++k) {
    for (long h = 1; h <= k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (long b = 1; b <= b_max; ++b) {
        for (long a = 0; a < b; ++a) {
          if (std::gcd(a, b) != 1) continue;
          for (long A = 0; A <= A_max; ++A) {
            for (long B = 1; B <= B_max; ++B) {
              if (b == 1 && A % B == 0) continue;
              out.push_back({{a, b, A, B}, h, k});
            }
          }
        }
      }
    }
  }
  return out;
}

BigComplex convergent_direct_sum(const SpecializationParams& params, long h, long k, int digits) {
  const CuspData cusp = cusp_data(params, h, k);
  const Precision p = Precision::digits(digits + guard_digits(digits));
  const BigComplex x = BigComplex::unit(Rational(params.a, params.b) + Rational(cusp.h * params.A, k), p);
  const BigComplex q = BigComplex::unit(Rational(cusp.h * params.B, k), p);
  const BigComplex one(mpq_class(1), p);
  const BigComplex xinv = one / x;
  BigComplex sum(p), block(p);
  BigComplex pn = one;   // (x, q/x; q)_n
  BigComplex qn1 = one;  // q^{n-1}
  BigComplex num = one;  // q^{n(n-1)}
  int quiet_blocks = 0;
  for (long n = 1; n <= 50'000'000; ++n) {
    pn *= one_minus(x * qn1) * one_minus(qn1 * q * xinv);
    if (n > 1) num *= qn1 * qn1;  // q^{2(n-1)}
    if (pn.is_zero()) throw DivisionByZero("convergent_direct_sum: vanishing denominator");
    block += num / pn;
    qn1 *= q;
    if (n % cusp.kprime == 0) {
      sum += block;
      const bool quiet = block.log10_abs() < std::max(0.0, sum.log10_abs()) - digits;
      quiet_blocks = quiet ? quiet_blocks + 1 : 0;
      block = BigComplex(p);
      if (quiet_blocks >= 3) return sum.with_precision(Precision::digits(digits));
    }
  }
  throw PrecisionExhausted("convergent_direct_sum: series did not settle");
}

std::vector<CorollaryItem> corollary_check(long k_max) {
  std::vector<std::pair<long, long>> jobs;
  for (long k = 2; k <= k_max; ++k) {
    if (std::gcd(k, 10L) != 2) continue;
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) == 1) jobs.emplace_back(k, h);
    }
  }
  return parallel_map(jobs.size(), [&](std::size_t i) {
    const auto [k, h] = jobs[i];
    const int n = static_cast<int>(k);
    auto z = [&](long e) { return root_of_unity(h * e, n); };
    const CyclotomicNumber one(1);
    CyclotomicNumber s;
    for (long m = 1; m <= k / 2; ++m) s += pochhammer(z(8), z(10), m - 1) * pochhammer(z(2), z(10), m) * z(10 * m);
    const CyclotomicNumber lhs = CyclotomicNumber(2) - CyclotomicNumber(2) * z(-2) * s;
    CyclotomicNumber r;
    for (long m = 0; m < k; ++m) r += z((m + 1) * (m + 2) / 2) * pochhammer(-z(1), z(1), m);
    const CyclotomicNumber rhs = CyclotomicNumber(-2) * r;
    return CorollaryItem{k, h, lhs == rhs};
  });
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Admissible: return "admissible";
    case HypothesisStatus::ProductNonvanishing: return "product_nonvanishing";
    case HypothesisStatus::SixthRoot: return "sixth_root";
  }
  return "?";
}

namespace {

void evaluate_conjecture(ConjectureItem& item) {
  const long k = item.k;
  const int n = static_cast<int>(3 * k);
  const CyclotomicNumber q = root_of_unity(item.h, n);
  const CyclotomicNumber& x = item.x;
  const CyclotomicNumber one(1);
  // Hypothesis: x is a power of q (zero of the infinite product) and x^{3k}
  // is not a primitive sixth root of unity.
  bool in_group = false;
  CyclotomicNumber qm = one;
  for (long m = 0; m < n && !in_group; ++m, qm *= q) in_group = qm == x;
  const CyclotomicNumber x3k = x.pow(3 * k);
  const CyclotomicNumber x6k = x3k * x3k;
  const bool sixth = x6k.pow(3) == one && x6k != one && x3k.pow(3) != one;
  if (!in_group) {
    item.hypothesis = HypothesisStatus::ProductNonvanishing;
    return;
  }
  if (sixth) {
    item.hypothesis = HypothesisStatus::SixthRoot;
    return;
  }
  const CyclotomicNumber qk = q.pow(k);
  const CyclotomicNumber q2k = qk * qk;
  const CyclotomicNumber inner_a = q * (one + x3k * qk);
  const CyclotomicNumber inner_b = x * (one + x3k * q2k);
  CyclotomicNumber s;
  for (long j = 1; j <= k; ++j) {
    const CyclotomicNumber sign = j % 2 == 0 ? one : -one;
    s += sign * x.pow(3 * j - 2) * root_of_unity(-item.h * ((3 * j + 1) * j / 2), n) * (inner_a + inner_b);
  }
  const CyclotomicNumber lhs = s / (one - x3k + x6k);
  const CyclotomicNumber xinv = x.inverse();
  const CyclotomicNumber rhs = -xinv + xinv * xinv * g_tilde_tail_partial(x, q, 3 * k);
  item.lhs = lhs;
  item.rhs = rhs;
  item.passed = lhs == rhs;
}

}  // namespace

std::vector<ConjectureItem> conjecture_check(long k_max, const std::vector<CyclotomicNumber>& extra_x) {
  std::vector<ConjectureItem> jobs;
  for (long k = 1; k <= k_max; ++k) {
    const long n = 3 * k;
    for (long h = 1; h < n; ++h) {
      if (std::gcd(h, n) != 1) continue;
      for (long m = 0; m < n; ++m) {
        ConjectureItem it;
        it.k = k;
        it.h = h;
        it.m = m;
        it.x = root_of_unity(h * m, static_cast<int>(n));
        jobs.push_back(std::move(it));
      }
      for (const CyclotomicNumber& x : extra_x) {
        ConjectureItem it;
        it.k = k;
        it.h = h;
        it.x = x;
        jobs.push_back(std::move(it));
      }
    }
  }
  return parallel_map(jobs.size(), [&](std::size_t i) {
    ConjectureItem it = jobs[i];
    evaluate_conjecture(it);
    return it;
  });
}

}  // namespace mockradial
