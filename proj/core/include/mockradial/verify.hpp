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


#ifndef MOCKRADIAL_VERIFY_HPP
#define MOCKRADIAL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mockradial/exact.hpp"
#include "mockradial/radial.hpp"

namespace mockradial {

/// Decreasing sequence of radial parameters t and the starting precision.
struct RadialSchedule {
  std::vector<Rational> t_values;
  int digits = 50;

  /// t_i = t_start 2^{-i}, i = 0 .. steps-1.
  static RadialSchedule standard(const Rational& t_start = Rational(1, 5), int steps = 9, int digits = 50);
  /// Throws InvalidParams unless strictly decreasing and positive.
  void validate() const;
};

struct ResidualPoint {
  Rational t;
  double residual = 0.0;
  double log10_residual = 0.0;  // stays finite when `residual` underflows
  int digits_used = 0;
};

struct ConvergenceReport {
  RadialLimitResult limit;
  std::vector<ResidualPoint> residuals;
  bool monotone_tail = false;  // last four residuals strictly decreasing
  double final_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct RadialCheckOptions {
  bool zero_companion = false;  // force M = 0
  bool other_branch = false;    // use the vanishing branch of q^{B/2} in the pole companion
  int max_digits = 4000;
  int target_digits = 25;  // absolute digits wanted in F - M
};

/// |F - M - Q| along the schedule, raising precision whenever F or M is
/// large or an evaluation reports NearSingular. Throws UnsupportedCase for
/// labels without a limit value.
ConvergenceReport radial_check(const SpecializationParams& params, long h, long k, const RadialSchedule& schedule,
                               double tolerance, const RadialCheckOptions& options = {});

enum class IdentityId { kang, shift, p1, tailid, tailid2, lost_notebook, jtp_series, l2, feq, inv, mtc73, lim0 };

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);
const std::vector<IdentityId>& all_identities();

struct IdentityReport {
  IdentityId id = IdentityId::kang;
  int samples = 0;
  int digits = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Relative residual |lhs - rhs| / max(1, |lhs|, |rhs|).
double relative_residual(const BigComplex& lhs, const BigComplex& rhs);

/// Evaluates both sides of an identity at `samples` seeded random points.
/// The default tolerance is 10^{-(digits-12)}. For lim0 the samples are
/// pole-case tuples and the residual is the quotient at the last t.
IdentityReport identity_check(IdentityId id, int samples, std::uint64_t seed, int digits,
                              std::optional<double> tolerance = std::nullopt);

/// Radial decay of the Appell-Lerch quotient at a pole cusp, with q^{B/2}
/// on the branch chosen by pole_sqrt_sign.
struct Lim0Report {
  std::vector<ResidualPoint> values;
  bool decreasing = false;  // last four strictly decreasing
  double final_value = 0.0;
  bool passed = false;  // decreasing and final value below 1e-2
};

Lim0Report lim0_check(const SpecializationParams& params, long h, long k, const RadialSchedule& schedule);

/// Pole-case tuples in the fixed enumeration order used by lim0 sampling.
struct Tuple {
  SpecializationParams params;
  long h = 1;
  long k = 1;
};

/// All valid tuples with a < b <= b_max, A <= A_max, 1 <= B <= B_max and
/// cusps k <= k_max, sorted by (k, h, b, a, A, B).
std::vector<Tuple> enumerate_tuples(long b_max, long A_max, long B_max, long k_max);

/// The Abel-side numeric value: the g3 series at the root of unity summed
/// term by term until the geometric blocks are negligible.
BigComplex convergent_direct_sum(const SpecializationParams& params, long h, long k, int digits);

struct CorollaryItem {
  long k = 0;
  long h = 0;
  bool passed = false;
};

/// Exact check of the fifth-order corollary for every k <= k_max with
/// gcd(k, 10) = 2 and every primitive k-th root zeta_k^h.
std::vector<CorollaryItem> corollary_check(long k_max);

enum class HypothesisStatus { Admissible, ProductNonvanishing, SixthRoot };

std::string to_string(HypothesisStatus s);

struct ConjectureItem {
  long k = 0;
  long h = 0;               // q = zeta_{3k}^h
  std::optional<long> m;    // x = q^m when enumerated
  CyclotomicNumber x;
  HypothesisStatus hypothesis = HypothesisStatus::Admissible;
  bool passed = false;
  std::optional<CyclotomicNumber> lhs;
  std::optional<CyclotomicNumber> rhs;
};

/// Both finite sums of the conjecture for q primitive of order 3k, k <= k_max,
/// and x running over the powers of q plus any `extra_x`.
std::vector<ConjectureItem> conjecture_check(long k_max, const std::vector<CyclotomicNumber>& extra_x = {});

}  // namespace mockradial

#endif  // MOCKRADIAL_VERIFY_HPP
