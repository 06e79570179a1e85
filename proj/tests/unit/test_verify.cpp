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

#include <algorithm>
#include <cmath>
#include <tuple>

#include "mockradial/errors.hpp"
#include "mockradial/verify.hpp"

using namespace mockradial;

TEST_CASE("radial schedule") {
  const RadialSchedule s = RadialSchedule::standard();
  REQUIRE(s.t_values.size() == 9);
  CHECK(s.t_values.front() == Rational(1, 5));
  CHECK(s.t_values.back() == Rational(1, 1280));
  CHECK_NOTHROW(s.validate());
  RadialSchedule bad = s;
  std::swap(bad.t_values[0], bad.t_values[1]);
  CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("relative residual") {
  const Precision p = Precision::digits(30);
  const BigComplex a(1.0, 0.0, p), b(1.0, 1e-20, p), big(1e10, 0.0, p);
  CHECK(relative_residual(a, a) == 0.0);
  CHECK(relative_residual(a, b) == doctest::Approx(1e-20).epsilon(1e-6));
  CHECK(relative_residual(big, big + b) == doctest::Approx(1e-10).epsilon(1e-6));
}

TEST_CASE("identity ids round-trip") {
  CHECK(all_identities().size() == 12);
  for (IdentityId id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
  CHECK_FALSE(parse_identity("nope").has_value());
}

TEST_CASE("identity suites at 40 digits") {
  CHECK(identity_check(IdentityId::kang, 25, 1, 40).max_residual < 1e-25);
  CHECK(identity_check(IdentityId::feq, 25, 1, 40).max_residual < 1e-30);
  const IdentityReport r = identity_check(IdentityId::jtp_series, 5, 3, 40);
  CHECK(r.passed);
  CHECK(r.tolerance == doctest::Approx(1e-28));
  // Same seed, same report.
  CHECK(identity_check(IdentityId::shift, 4, 9, 30).max_residual ==
        identity_check(IdentityId::shift, 4, 9, 30).max_residual);
  CHECK_THROWS_AS(identity_check(IdentityId::kang, 0, 1, 40), InvalidParams);
}

TEST_CASE("radial harness, convergent case") {
  const ConvergenceReport r = radial_check({1, 2, 0, 1}, 1, 1, RadialSchedule::standard(), 1e-3);
  CHECK(r.limit.exact == CyclotomicNumber(Rational(1, 3)));
  CHECK(r.monotone_tail);
  CHECK(r.passed);
  // The residual is O(t): ~0.074 t here, so the last point sits near 6e-5.
  CHECK(r.final_residual < 1e-4);
  CHECK(r.final_residual > 1e-5);
}

TEST_CASE("radial harness, pole case") {
  const ConvergenceReport r = radial_check({1, 2, 0, 1}, 1, 2, RadialSchedule::standard(), 1e-3);
  CHECK(r.limit.exact == CyclotomicNumber(-1));
  CHECK(r.monotone_tail);
  // Linear decay: each halving of t roughly halves the residual.
  const auto& pts = r.residuals;
  const double slope = pts[pts.size() - 2].log10_residual - pts.back().log10_residual;
  CHECK(slope == doctest::Approx(std::log10(2.0)).epsilon(0.05));

  // The vanishing square-root branch does not converge.
  RadialCheckOptions o;
  o.other_branch = true;
  const RadialSchedule short_run = RadialSchedule::standard(Rational(1, 5), 4, 30);
  const ConvergenceReport bad = radial_check({0, 1, 1, 4}, 1, 1, short_run, 1e-3, o);
  CHECK(bad.residuals.back().log10_residual > bad.residuals.front().log10_residual);
  CHECK_FALSE(bad.passed);

  CHECK_THROWS_AS(radial_check({1, 20, 0, 1}, 1, 3, short_run, 1e-3), UnsupportedCase);
}

TEST_CASE("lim0 decay") {
  const Lim0Report r = lim0_check({1, 2, 0, 1}, 1, 2, RadialSchedule::standard(Rational(1, 5), 9, 30));
  CHECK(r.decreasing);
  CHECK(r.passed);
  CHECK(r.final_value < 1e-100);
  CHECK_THROWS_AS(lim0_check({1, 2, 0, 1}, 1, 1, RadialSchedule::standard()), CaseMismatch);
}

TEST_CASE("tuple enumeration") {
  const auto tuples = enumerate_tuples(3, 1, 2, 4);
  CHECK_FALSE(tuples.empty());
  for (const Tuple& t : tuples) CHECK_NOTHROW(t.params.validate());
  auto key = [](const Tuple& t) { return std::tuple(t.k, t.h, t.params.b, t.params.a, t.params.A, t.params.B); };
  CHECK(std::is_sorted(tuples.begin(), tuples.end(), [&](const Tuple& x, const Tuple& y) { return key(x) < key(y); }));
}

TEST_CASE("Abel side of the convergent case") {
  const BigComplex s = convergent_direct_sum({1, 2, 0, 1}, 1, 1, 30);
  CHECK(std::abs(s.real().to_double() - 1.0 / 3.0) < 1e-15);
  const auto r = radial_limit({1, 5, 1, 3}, 1, 4, 30);
  REQUIRE(r.label == CaseLabel::Convergent);  // mu = {4 (1/5 + 1/4)} = 4/5
  CHECK((convergent_direct_sum({1, 5, 1, 3}, 1, 4, 30) - *r.numeric).log10_abs() < -20);
}

TEST_CASE("fifth-order corollary") {
  const auto items = corollary_check(12);
  CHECK(items.size() == 13);  // phi(2) + phi(4) + phi(6) + phi(8) + phi(12)
  for (const auto& it : items) CHECK(it.passed);
}

TEST_CASE("conjecture checker") {
  const auto items = conjecture_check(2, {root_of_unity(1, 7)});
  long k1 = 0, k1_pass = 0, k2_pass = 0, guarded = 0;
  for (const auto& it : items) {
    if (it.hypothesis == HypothesisStatus::ProductNonvanishing) {
      ++guarded;
      CHECK_FALSE(it.passed);
      CHECK_FALSE(it.lhs.has_value());
      continue;
    }
    if (it.k == 1) {
      ++k1;
      k1_pass += it.passed;
    } else {
      k2_pass += it.passed;
    }
  }
  CHECK(k1 == 6);
  CHECK(k1_pass == 6);
  // The printed statement already fails at k = 2, e.g. q = zeta_6, x = q.
  CHECK(k2_pass == 0);
  CHECK(guarded == 4);
}
