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


#ifndef MOCKRADIAL_RADIAL_HPP
#define MOCKRADIAL_RADIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mockradial/bigfloat.hpp"
#include "mockradial/exact.hpp"
#include "mockradial/mocktheta.hpp"

namespace mockradial {

/// Selects the specialization g3(zeta_b^a q^A, q^B).
struct SpecializationParams {
  long a = 0;
  long b = 1;
  long A = 0;
  long B = 1;

  /// Throws InvalidParams unless 0 <= a < b, gcd(a,b) = 1, A >= 0, B >= 1
  /// and B does not divide A when b = 1.
  void validate() const;

  friend bool operator==(const SpecializationParams&, const SpecializationParams&) = default;
};

enum class CaseLabel { Pole, Convergent, KangShift, EdgeSixthClosed, EdgeSixthUnsupported, DivergentThreeUnsupported };

std::string to_string(CaseLabel label);
bool is_supported(CaseLabel label);

struct CuspData {
  long h = 1;  // normalized to 0 < h <= k
  long k = 1;
  long kprime = 1;
  long Bprime = 1;
  Rational mu;  // {k'(a/b + Ah/k)}
  bool in_Q = false;  // b | k and (k,B) | (ak/b + Ah)
  CaseLabel label = CaseLabel::Pole;
};

/// Derives k', B', mu and the pole membership; throws InvalidParams on bad
/// input and std::logic_error if the two pole criteria ever disagree.
CuspData cusp_data(const SpecializationParams& params, long h, long k);

/// Sign of q^{B/2} that keeps j(zeta_b^a q^{A+B/2}, q^B) away from zero at a
/// pole cusp. There zeta_b^a zeta_k^{hA} lies in <zeta_k^{hB}>, so the
/// principal cusp value w satisfies w^{k'} = (-1)^{hB'} and the theta factor
/// vanishes exactly when hB' is even. The flipped branch then works, since
/// k' and hB' are never both even.
int pole_sqrt_sign(const CuspData& cusp);

/// Case label from the exact invariants.
CaseLabel classify(const SpecializationParams& params, const CuspData& cusp);

/// The single exact field Q(zeta_N), N = lcm(6, b, k, 6k').
int field_order(const SpecializationParams& params, const CuspData& cusp);

/// x = zeta_b^a zeta_k^{hA} and q = zeta_k^{hB} at the cusp, in Q(zeta_N).
CyclotomicNumber cusp_x(const SpecializationParams& params, const CuspData& cusp);
CyclotomicNumber cusp_q(const SpecializationParams& params, const CuspData& cusp);

CyclotomicNumber limit_pole(const SpecializationParams& params, const CuspData& cusp);
CyclotomicNumber limit_convergent(const SpecializationParams& params, const CuspData& cusp);
CyclotomicNumber limit_kang(const SpecializationParams& params, const CuspData& cusp);

/// One step of the edge reduction: g3(from) = rel.scale * g3(to) + rel.offset.
struct ReductionStep {
  TransportKind kind;
  CyclotomicNumber from;
  CyclotomicNumber to;
  AffineRelation<CyclotomicNumber> rel;
};

/// How an edge input was brought to x0 = zeta_{6k'}.
struct EdgeTrace {
  int sigma = 1;          // x^{k'} = zeta_6^sigma
  long ell = 0;           // x = zeta_{6k'}^sigma zeta_{k'}^ell
  long shifts = 0;        // signed number of shift steps after the optional inversion
  bool inverted = false;  // sigma = -1 goes through g3(x) -> g3(1/x)
  /// The reduced point follows y(t) with y^6 = q^B along the ray, so the
  /// eta quotient companion is exact rather than approximate.
  bool path_matched = false;
  /// h B' = 1 (mod k') read at the input point and at the reduced point.
  bool closed_before_reduction = false;
  bool closed_after_reduction = false;
  std::vector<ReductionStep> steps;
  /// g3(input) = chain.scale * g3(x0) + chain.offset at the cusp.
  std::optional<AffineRelation<CyclotomicNumber>> chain;
};

enum class CompanionForm { Zero, PoleForm, KangForm, EtaQuotientForm };

std::string to_string(CompanionForm form);

/// The modular function subtracted before taking the radial limit.
struct ModularCompanion {
  CompanionForm form = CompanionForm::Zero;
  SpecializationParams params;
  long h = 1;
  long k = 1;
  /// Branch of q^{B/2} for PoleForm, relative to the principal ray branch.
  int sqrt_sign = 1;
  // Edge data for EtaQuotientForm.
  long kprime = 1;
  bool inverted = false;
  long shifts = 0;
};

struct RadialLimitResult {
  CaseLabel label = CaseLabel::Pole;
  CuspData cusp;
  std::optional<CyclotomicNumber> exact;
  std::optional<BigComplex> numeric;
  ModularCompanion companion;
  std::optional<EdgeTrace> reduction_trace;
};

/// Reduction and, when h B' = 1 (mod k') holds at the reduced point, the
/// closed sixth-root value transported back to the input point.
RadialLimitResult limit_edge(const SpecializationParams& params, const CuspData& cusp, int digits = 50);

/// Values along the ray q = exp(2 pi i h/k - t).
struct RadialPoint {
  BigComplex L;  // 2 pi i h/k - t
  BigComplex x;  // zeta_b^a q^A
  BigComplex Q;  // q^B
  /// exp(beta L) for rational beta.
  BigComplex power(const Rational& beta) const;
};

RadialPoint radial_point(const SpecializationParams& params, long h, long k, const BigFloat& t, int digits);

/// g3(zeta_b^a q^A, q^B) on the ray.
BigComplex specialized_g3(const SpecializationParams& params, long h, long k, const BigFloat& t, int digits);

/// The companion on the ray; fractional powers of q use the principal ray
/// branch exp(beta L) unless `other_branch` flips the sign of q^{B/2}.
BigComplex companion_value(const ModularCompanion& companion, const BigFloat& t, int digits,
                           bool other_branch = false);

/// Classifies and dispatches to the matching limit formula.
RadialLimitResult radial_limit(const SpecializationParams& params, long h, long k, int digits = 50);

}  // namespace mockradial

#endif  // MOCKRADIAL_RADIAL_HPP
