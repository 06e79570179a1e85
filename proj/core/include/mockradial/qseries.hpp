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


#ifndef MOCKRADIAL_QSERIES_HPP
#define MOCKRADIAL_QSERIES_HPP

#include <algorithm>
#include <utility>

#include "mockradial/bigfloat.hpp"
#include "mockradial/errors.hpp"
#include "mockradial/exact.hpp"

namespace mockradial {

/// Unit value carrying the precision of z.
inline BigComplex unit_like(const BigComplex& z) { return BigComplex(mpq_class(1), z.precision()); }

inline bool scalar_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline bool scalar_is_zero(const BigComplex& x) { return x.is_zero(); }

/// Extra decimal digits carried by every infinite object: max(10, digits/5).
inline int guard_digits(int digits) { return std::max(10, digits / 5); }

/// (a;q)_n = prod_{j<n} (1 - a q^j). The empty product is 1.
template <class Scalar>
Scalar pochhammer(const Scalar& a, const Scalar& q, long n) {
  Scalar result = unit_like(a);
  Scalar aq = a;
  for (long j = 0; j < n; ++j) {
    result *= unit_like(a) - aq;
    if (j + 1 < n) aq *= q;
  }
  return result;
}

/// (a;q)_{-n} = (-1)^n q^{n(n+1)/2} / (a^n (q/a;q)_n), the value forced by
/// running (a;q)_{m+1} = (a;q)_m (1 - a q^m) backwards from (a;q)_0 = 1.
/// The sign alternates; a constant minus sign is only right for odd n.
template <class Scalar>
Scalar pochhammer_negative(const Scalar& a, const Scalar& q, long n) {
  if (scalar_is_zero(a)) throw DivisionByZero("pochhammer_negative: a = 0");
  const Scalar den = a.pow(n) * pochhammer(q / a, q, n);
  if (scalar_is_zero(den)) throw DivisionByZero("pochhammer_negative: (q/a;q)_n = 0");
  const Scalar v = q.pow(n * (n + 1) / 2) / den;
  return n % 2 != 0 ? -v : v;
}

/// How an infinite product or series was cut off.
struct TruncationReport {
  long terms_used = 0;
  /// Absolute bound on the log of the discarded tail (products) or on the
  /// discarded terms (series).
  double tail_bound = 0.0;
};

/// (a;q)_inf with a certified truncation bound. Factors with |a q^j| > 1/2
/// are multiplied out; the remaining tail is either truncated directly or
/// summed through its logarithm, whichever needs fewer operations.
std::pair<BigComplex, TruncationReport> pochhammer_infinite(const BigComplex& a, const BigComplex& q, int digits);

/// Convenience overload without the report.
BigComplex qinf(const BigComplex& a, const BigComplex& q, int digits);

/// j(x,q) = (x, q/x, q; q)_inf.
BigComplex jacobi_triple(const BigComplex& x, const BigComplex& q, int digits);

/// Sum over n in Z of (-z)^n q^{n(n-1)/2} / (1 - w q^{n-1}), the bilateral
/// series behind the Appell-Lerch sum (w = x z there).
BigComplex lerch_series(const BigComplex& w, const BigComplex& q, const BigComplex& z, int digits);

/// m(x,q,z) = lerch_series(x z, q, z) / j(z,q).
BigComplex appell_lerch(const BigComplex& x, const BigComplex& q, const BigComplex& z, int digits);

/// Right side of the shift property in the third argument:
/// m(x,q,z) - m(x,q,w) = w (q)^3 j(z/w) j(xzw) / (j(z) j(w) j(xz) j(xw)).
BigComplex appell_lerch_shift_rhs(const BigComplex& x, const BigComplex& q, const BigComplex& z,
                                  const BigComplex& w, int digits);

/// Bilateral theta series sum_{n in Z} (-1)^n q^{n(n-1)/2} x^n.
BigComplex theta_series(const BigComplex& x, const BigComplex& q, int digits);

/// (x, q/x; q)_{k'} at a primitive k'-th root q, which collapses to
/// (1 - x^{k'})(1 - x^{-k'}).
CyclotomicNumber periodic_pochhammer_closed_form(const CyclotomicNumber& x, int kprime);

}  // namespace mockradial

#endif  // MOCKRADIAL_QSERIES_HPP
