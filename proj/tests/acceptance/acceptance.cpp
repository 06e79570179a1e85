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


// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// notes. Tuple sets are fixed in advance as the first N tuples of the
// required label in enumeration order (k, h, b, a, A, B), so no tuple is
// chosen by looking at its residual.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mockradial/errors.hpp"
#include "mockradial/exact.hpp"
#include "mockradial/parallel.hpp"
#include "mockradial/qseries.hpp"
#include "mockradial/radial.hpp"
#include "mockradial/verify.hpp"

using namespace mockradial;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
  std::vector<std::string> notes;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string tuple_name(const SpecializationParams& p, long h, long k) {
  std::ostringstream os;
  os << "(" << p.a << "," << p.b << "," << p.A << "," << p.B << ")@" << h << "/" << k;
  return os.str();
}

std::vector<Tuple> first_with_label(long bmax, long Amax, long Bmax, long kmax, CaseLabel label, std::size_t n) {
  std::vector<Tuple> out;
  for (const Tuple& t : enumerate_tuples(bmax, Amax, Bmax, kmax)) {
    if (out.size() == n) break;
    if (cusp_data(t.params, t.h, t.k).label == label) out.push_back(t);
  }
  return out;
}

// 1. Convergent limits against the Abel-side termwise sum.
Outcome convergent_oracle() {
  Outcome o;
  std::vector<Tuple> conv;
  for (const Tuple& t : enumerate_tuples(8, 3, 6, 10)) {
    if (cusp_data(t.params, t.h, t.k).label == CaseLabel::Convergent) conv.push_back(t);
  }
  const auto gaps = parallel_map(conv.size(), [&](std::size_t i) {
    const Tuple& t = conv[i];
    const RadialLimitResult r = radial_limit(t.params, t.h, t.k, 30);
    return (*r.numeric - convergent_direct_sum(t.params, t.h, t.k, 30)).abs().to_double();
  });
  const double worst = conv.empty() ? 0.0 : *std::max_element(gaps.begin(), gaps.end());
  const auto spot = radial_limit({1, 2, 0, 1}, 1, 1, 30).exact;
  // Oracle for the spot value: sum_{n>=1} 4^{-n} = 1/3.
  const bool spot_ok = spot && *spot == CyclotomicNumber(Rational(1, 3));
  o.passed = !conv.empty() && worst < 1e-8 && spot_ok;
  o.summary = std::to_string(conv.size()) + " tuples, max |exact - direct| = " + sci(worst) +
              ", g3(-1,q) -> " + (spot ? spot->to_string() : "none");
  return o;
}

Outcome radial_family(const std::vector<Tuple>& tuples, std::size_t needed, bool final_only) {
  Outcome o;
  std::size_t ok = 0;
  const auto reports = parallel_map(tuples.size(), [&](std::size_t i) {
    const Tuple& t = tuples[i];
    return radial_check(t.params, t.h, t.k, RadialSchedule::standard(), 1e-3);
  });
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const ConvergenceReport& r = reports[i];
    const bool pass = final_only ? r.final_residual < r.tolerance : r.passed;
    ok += pass;
    std::ostringstream os;
    os << (pass ? "ok   " : "FAIL ") << tuple_name(tuples[i].params, r.limit.cusp.h, tuples[i].k)
       << " k'=" << r.limit.cusp.kprime << " final=" << sci(r.final_residual)
       << " monotone=" << (r.monotone_tail ? "yes" : "no") << " max digits=" << r.residuals.back().digits_used;
    if (r.residuals.size() >= 2) {
      const auto& a = r.residuals[r.residuals.size() - 2];
      const auto& b = r.residuals.back();
      os << " last-halving slope=" << sci(a.log10_residual - b.log10_residual);
    }
    if (r.limit.reduction_trace) os << " path_matched=" << (r.limit.reduction_trace->path_matched ? "yes" : "no");
    o.notes.push_back(os.str());
  }
  o.passed = tuples.size() >= needed && ok == tuples.size();
  o.summary = std::to_string(ok) + "/" + std::to_string(tuples.size()) + " tuples meet the bound";
  return o;
}

// 2.-4. Radial convergence.
Outcome pole_radial() {
  return radial_family(first_with_label(6, 3, 4, 12, CaseLabel::Pole, 20), 20, false);
}

Outcome kang_radial() {
  return radial_family(first_with_label(8, 3, 4, 10, CaseLabel::KangShift, 10), 10, false);
}

Outcome edge_radial() {
  auto tuples = first_with_label(12, 3, 6, 12, CaseLabel::EdgeSixthClosed, 5);
  const SpecializationParams must{1, 6, 0, 1};
  const bool present = std::any_of(tuples.begin(), tuples.end(),
                                   [&](const Tuple& t) { return t.params == must && t.k == 1; });
  if (!present) tuples.back() = Tuple{must, 1, 1};
  return radial_family(tuples, 5, true);
}

// 5. Identity suites.
Outcome identities() {
  Outcome o;
  bool ok = true;
  for (IdentityId id : all_identities()) {
    if (id == IdentityId::lim0) continue;
    const bool strict = id == IdentityId::feq || id == IdentityId::inv || id == IdentityId::l2;
    const IdentityReport r = identity_check(id, 25, 20260101, 40, strict ? 1e-28 : 1e-25);
    ok = ok && r.passed;
    o.notes.push_back((r.passed ? "ok   " : "FAIL ") + to_string(id) + " max residual " + sci(r.max_residual) +
                      " (bound " + sci(r.tolerance) + ")");
  }
  o.passed = ok;
  o.summary = "11 identities x 25 samples at 40 digits";
  return o;
}

// 6. Appell-Lerch quotient decay at pole cusps.
Outcome lim0_decay() {
  Outcome o;
  const auto tuples = first_with_label(6, 3, 4, 12, CaseLabel::Pole, 10);
  const auto reports = parallel_map(tuples.size(), [&](std::size_t i) {
    const Tuple& t = tuples[i];
    return lim0_check(t.params, t.h, t.k, RadialSchedule::standard());
  });
  std::size_t ok = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    ok += reports[i].passed;
    const CuspData c = cusp_data(tuples[i].params, tuples[i].h, tuples[i].k);
    o.notes.push_back((reports[i].passed ? "ok   " : "FAIL ") + tuple_name(tuples[i].params, c.h, c.k) +
                      " sqrt branch " + (pole_sqrt_sign(c) > 0 ? "+" : "-") + " final " +
                      sci(reports[i].final_value));
  }
  o.passed = tuples.size() == 10 && ok == 10;
  o.summary = std::to_string(ok) + "/10 pole tuples decay below 1e-2";
  return o;
}

// 7. Fifth-order corollary.
Outcome corollary() {
  Outcome o;
  const auto items = corollary_check(30);
  const auto ok = std::count_if(items.begin(), items.end(), [](const CorollaryItem& i) { return i.passed; });
  o.passed = !items.empty() && static_cast<std::size_t>(ok) == items.size();
  o.summary = std::to_string(ok) + "/" + std::to_string(items.size()) + " primitive roots with k <= 30, (k,10) = 2";
  return o;
}

// 8. Conjecture.
Outcome conjecture() {
  Outcome o;
  const auto items = conjecture_check(8);
  std::size_t admissible = 0, ok = 0;
  std::ofstream records("conjecture_counterexamples.txt");
  for (const ConjectureItem& it : items) {
    if (it.hypothesis != HypothesisStatus::Admissible) continue;
    ++admissible;
    if (it.passed) {
      ++ok;
      continue;
    }
    records << "k=" << it.k << " q=zeta_" << 3 * it.k << "^" << it.h << " x=q^" << it.m.value_or(-1)
            << " x=[" << it.x.minimal().to_string() << "] lhs=[" << it.lhs->minimal().to_string() << "] rhs=["
            << it.rhs->minimal().to_string() << "]\n";
  }
  std::vector<long> pass_by_k(9, 0), all_by_k(9, 0);
  for (const ConjectureItem& it : items) {
    if (it.hypothesis != HypothesisStatus::Admissible) continue;
    ++all_by_k[it.k];
    pass_by_k[it.k] += it.passed;
  }
  std::ostringstream os;
  for (long k = 1; k <= 8; ++k) os << " k=" << k << ":" << pass_by_k[k] << "/" << all_by_k[k];
  o.notes.push_back("equalities per k:" + os.str());
  o.notes.push_back("counterexamples with exact data written to conjecture_counterexamples.txt");
  o.passed = admissible > 0 && ok == admissible;
  o.summary = std::to_string(ok) + "/" + std::to_string(admissible) + " admissible items hold exactly, " +
              std::to_string(admissible - ok) + " counterexamples";
  return o;
}

// 9. Field axioms and the embedding homomorphism.
Outcome field_soundness() {
  Outcome o;
  constexpr int kDigits = 30;
  const double tol = std::pow(10.0, 2 - kDigits);
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<int> order(1, 60), num(-9, 9), den(1, 6);
  auto element = [&](int n) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
    for (auto& v : c) v = Rational(num(gen), den(gen));
    return CyclotomicNumber::from_coefficients(n, c);
  };
  auto rel = [](const BigComplex& a, const BigComplex& b) { return relative_residual(a, b); };
  int exact_fail = 0;
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const int n = order(gen);
    int m = order(gen);  // a second order exercises promotion to the lcm
    while (std::lcm(n, m) > 60) m = order(gen);
    const CyclotomicNumber a = element(n), b = element(n), c = element(m);
    bool ok = a + b == b + a && a * b == b * a;
    ok = ok && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c);
    ok = ok && a * (b + c) == a * b + a * c;
    ok = ok && (a - a).is_zero() && a * CyclotomicNumber(1) == a && a + CyclotomicNumber(0) == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == CyclotomicNumber(1) && (b / a) * a == b;
    ok = ok && a.conj().conj() == a;
    exact_fail += !ok;

    const BigComplex ea = embed_complex(a, kDigits), ec = embed_complex(c, kDigits);
    worst = std::max(worst, rel(embed_complex(a * c, kDigits), ea * ec));
    worst = std::max(worst, rel(embed_complex(a + c, kDigits), ea + ec));
    worst = std::max(worst, rel(embed_complex(a.conj(), kDigits), ea.conj()));
    if (!a.is_zero()) {
      worst = std::max(worst, rel(embed_complex(a.inverse(), kDigits) * ea, BigComplex(Rational(1), ea.precision())));
    }
  }
  o.passed = exact_fail == 0 && worst < tol;
  o.summary = "1000 samples, orders <= 60: " + std::to_string(exact_fail) + " exact failures, embedding residual " +
              sci(worst) + " (bound " + sci(tol) + ")";
  return o;
}

// 10. Classification consistency and pole truncation.
Outcome classification() {
  Outcome o;
  const auto tuples = enumerate_tuples(10, 4, 8, 30);
  long disagreements = 0, poles = 0, truncation_fail = 0, field_checked = 0, field_fail = 0;
  for (const Tuple& t : tuples) {
    CuspData c;
    try {
      c = cusp_data(t.params, t.h, t.k);
    } catch (const std::logic_error&) {
      ++disagreements;  // raised when mu = 0 and membership in Q disagree
      continue;
    }
    if ((c.mu == 0) != c.in_Q) ++disagreements;
    if (!c.in_Q) continue;
    ++poles;
    // x q^n = zeta_L^{e(n)} with L = lcm(b, k); the factor 1 - x q^n is zero
    // exactly when L | e(n). Exactly one n in 1..k' may qualify.
    const auto& p = t.params;
    const long L = std::lcm(p.b, t.k);
    long hits = 0, n0 = 0;
    for (long n = 1; n <= c.kprime; ++n) {
      const long e = p.a * (L / p.b) + c.h * (p.A + p.B * n) % L * (L / t.k);
      if (e % L == 0) {
        ++hits;
        n0 = n;
      }
    }
    if (hits != 1) {
      ++truncation_fail;
      continue;
    }
    if (t.k <= 12) {
      // Exact-field confirmation. Since q^{k'} = 1 the vanishing factor of
      // (x)_n sits at j = n0 mod k', so every summand with n > k' is zero and
      // the tail sum is frozen after k' terms.
      ++field_checked;
      const CyclotomicNumber x = cusp_x(p, c), q = cusp_q(p, c);
      const bool vanishes = (x * q.pow(n0 % c.kprime) - CyclotomicNumber(1)).is_zero();
      const bool stable = g_tilde_tail_partial(x, q, c.kprime) == g_tilde_tail_partial(x, q, 3 * c.kprime + 1);
      field_fail += !(vanishes && stable);
    }
  }
  o.passed = disagreements == 0 && truncation_fail == 0 && field_fail == 0;
  o.summary = std::to_string(tuples.size()) + " tuples, " + std::to_string(disagreements) + " disagreements; " +
              std::to_string(poles) + " pole tuples, " + std::to_string(truncation_fail) + " truncation failures";
  o.notes.push_back("exact-field truncation check on " + std::to_string(field_checked) + " pole tuples with k <= 12: " +
                    std::to_string(field_fail) + " failures");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "convergent-case oracle equivalence", 120, convergent_oracle},
      {2, "radial convergence, pole case", 600, pole_radial},
      {3, "radial convergence, Kang case", 600, kang_radial},
      {4, "radial convergence, edge closed case", 300, edge_radial},
      {5, "identity suite", 300, identities},
      {6, "Appell-Lerch quotient decay", 600, lim0_decay},
      {7, "corollary exactness", 120, corollary},
      {8, "conjecture evidence", 300, conjecture},
      {9, "exact-arithmetic soundness", 60, field_soundness},
      {10, "classification consistency", 120, classification},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.passed && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.budget_s);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.summary
              << " [" << timing << (in_time ? "" : ", over budget") << "]\n";
    for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
