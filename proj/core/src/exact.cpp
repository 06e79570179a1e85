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

#include "mockradial/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mockradial/errors.hpp"

namespace mockradial {

namespace detail {

struct FieldData {
  int n = 1;
  int phi = 1;
  // Phi_n without its leading term, as (index, coefficient) pairs.
  std::vector<std::pair<int, long>> tail;
};

}  // namespace detail

namespace {

std::atomic<int> g_order_cap{600};

struct Registry {
  std::mutex mu;
  std::map<int, std::unique_ptr<IntPolynomial>> polys;
  std::map<int, std::unique_ptr<detail::FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division by a monic polynomial; the remainder must vanish.
IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
  std::vector<Integer> r = num.coefficients;
  const int dd = den.degree();
  const int nd = num.degree();
  IntPolynomial q;
  q.coefficients.assign(static_cast<std::size_t>(nd - dd + 1), 0);
  for (int i = nd; i >= dd; --i) {
    const Integer c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q.coefficients[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= c * den.coefficients[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r) {
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  q.normalize();
  return q;
}

IntPolynomial compute_cyclotomic(int n);

const IntPolynomial& cyclotomic_locked(Registry& reg, int n) {
  auto it = reg.polys.find(n);
  if (it != reg.polys.end()) return *it->second;
  IntPolynomial p = compute_cyclotomic(n);
  auto [pos, _] = reg.polys.emplace(n, std::make_unique<IntPolynomial>(std::move(p)));
  return *pos->second;
}

IntPolynomial compute_cyclotomic(int n) {
  IntPolynomial p;
  p.coefficients.assign(static_cast<std::size_t>(n + 1), 0);
  p.coefficients.front() = -1;
  p.coefficients.back() = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    p = exact_divide(p, cyclotomic_locked(registry(), static_cast<int>(d)));
  }
  return p;
}

void check_order(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (n > order_cap()) {
    throw OrderLimitExceeded("cyclotomic order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(order_cap()));
  }
}

const detail::FieldData* field_for(int n) {
  check_order(n);
  Registry& reg = registry();
  std::lock_guard lock(reg.mu);
  auto it = reg.fields.find(n);
  if (it != reg.fields.end()) return it->second.get();
  const IntPolynomial& phi = cyclotomic_locked(reg, n);
  auto f = std::make_unique<detail::FieldData>();
  f->n = n;
  f->phi = phi.degree();
  for (int j = 0; j < f->phi; ++j) {
    const Integer& c = phi.coefficients[static_cast<std::size_t>(j)];
    if (c != 0) f->tail.emplace_back(j, c.get_si());
  }
  auto [pos, _] = reg.fields.emplace(n, std::move(f));
  return pos->second.get();
}

// In place reduction modulo the monic Phi_n; leaves exactly phi entries.
void reduce_mod_phi(std::vector<Integer>& p, const detail::FieldData& f) {
  const int phi = f.phi;
  for (int i = static_cast<int>(p.size()) - 1; i >= phi; --i) {
    Integer& top = p[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    for (const auto& [j, c] : f.tail) {
      mpz_ptr dst = p[static_cast<std::size_t>(i - phi + j)].get_mpz_t();
      if (c > 0) {
        mpz_submul_ui(dst, top.get_mpz_t(), static_cast<unsigned long>(c));
      } else {
        mpz_addmul_ui(dst, top.get_mpz_t(), static_cast<unsigned long>(-c));
      }
    }
    top = 0;
  }
  p.resize(static_cast<std::size_t>(phi), 0);
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Integer polynomial helpers for the inversion routine.
using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

void poly_scale(Poly& p, const Integer& s) {
  for (auto& c : p) c *= s;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void remove_joint_content(Poly& a, Poly& b) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational fractional_part(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  out.canonicalize();
  return out;
}

void IntPolynomial::normalize() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  Registry& reg = registry();
  std::lock_guard lock(reg.mu);
  return cyclotomic_locked(reg, n);
}

int order_cap() { return g_order_cap.load(std::memory_order_relaxed); }

void set_order_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  g_order_cap.store(cap, std::memory_order_relaxed);
}

// CyclotomicNumber -----------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(Rational(0), 1) {}

CyclotomicNumber::CyclotomicNumber(long v) : CyclotomicNumber(Rational(v), 1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& v, int order) : field_(field_for(order)) {
  num_.assign(static_cast<std::size_t>(field_->phi), 0);
  num_[0] = v.get_num();
  den_ = v.get_den();
  canonicalize();
}

CyclotomicNumber::CyclotomicNumber(const detail::FieldData* field, std::vector<Integer> num, Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  reduce_mod_phi(num_, *field_);
  canonicalize();
}

CyclotomicNumber CyclotomicNumber::zero(int order) { return CyclotomicNumber(Rational(0), order); }

CyclotomicNumber CyclotomicNumber::one(int order) { return CyclotomicNumber(Rational(1), order); }

CyclotomicNumber CyclotomicNumber::from_coefficients(int order, const std::vector<Rational>& coeffs) {
  const detail::FieldData* f = field_for(order);
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num(std::max<std::size_t>(coeffs.size(), static_cast<std::size_t>(f->phi)), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  }
  return CyclotomicNumber(f, std::move(num), den);
}

void CyclotomicNumber::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

int CyclotomicNumber::order() const { return field_->n; }

std::vector<Rational> CyclotomicNumber::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coefficient(i));
  return out;
}

Rational CyclotomicNumber::coefficient(std::size_t i) const {
  if (i >= num_.size()) return Rational(0);
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
  return coefficient(0);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Primitive pseudo-remainder sequence on (Phi_n, num) tracking the
  // cofactor of num: s * num == r (mod Phi_n) throughout.
  const IntPolynomial& phi_poly = cyclotomic_polynomial(order());
  Poly r0 = phi_poly.coefficients;
  Poly s0;
  Poly r1 = num_;
  trim(r1);
  Poly s1{Integer(1)};
  while (deg(r1) > 0) {
    const Integer lead = r1.back();
    const int d1 = deg(r1);
    Poly rem = r0;
    Poly quo(static_cast<std::size_t>(std::max(0, deg(r0) - d1 + 1)), 0);
    Integer scale = 1;
    for (int top = deg(r0); top >= d1; --top) {
      const Integer t = rem[static_cast<std::size_t>(top)];
      if (t == 0) continue;
      poly_scale(rem, lead);
      poly_scale(quo, lead);
      scale *= lead;
      quo[static_cast<std::size_t>(top - d1)] += t;
      for (int j = 0; j <= d1; ++j) {
        mpz_submul(rem[static_cast<std::size_t>(top - d1 + j)].get_mpz_t(), t.get_mpz_t(),
                   r1[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
    trim(rem);
    trim(quo);
    if (rem.empty()) throw std::logic_error("cyclotomic inversion hit a common factor");
    Poly s2 = s0;
    poly_scale(s2, scale);
    s2 = poly_sub(s2, poly_mul(quo, s1));
    remove_joint_content(rem, s2);
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(rem);
    s1 = std::move(s2);
  }
  // s1 * num == c (mod Phi_n), hence x^{-1} = den * s1 / c.
  const Integer c = r1[0];
  std::vector<Integer> num(std::max(s1.size(), num_.size()), 0);
  for (std::size_t i = 0; i < s1.size(); ++i) num[i] = s1[i] * den_;
  return CyclotomicNumber(field_, std::move(num), c);
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result = one(order());
  CyclotomicNumber base = *this;
  while (e != 0) {
    if (e & 1L) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::galois(long a) const {
  const long n = order();
  long am = ((a % n) + n) % n;
  if (std::gcd(am, n) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<Integer> num(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    num[static_cast<std::size_t>((static_cast<long>(i) * am) % n)] += num_[i];
  }
  return CyclotomicNumber(field_, std::move(num), den_);
}

std::optional<CyclotomicNumber> CyclotomicNumber::in_subfield(int m) const {
  const int n = order();
  if (m < 1 || n % m != 0) throw OrderMismatch("subfield order must divide the field order");
  if (m == n) return *this;
  const int rows = field_->phi;
  const int cols = static_cast<int>(euler_phi(m));
  // Columns: promoted basis zeta_m^i; last column: this value.
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                       std::vector<Rational>(static_cast<std::size_t>(cols + 1), 0));
  for (int i = 0; i < cols; ++i) {
    const CyclotomicNumber b = promote(root_of_unity(i, m), n);
    for (int r = 0; r < rows; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = b.coefficient(static_cast<std::size_t>(r));
  }
  for (int r = 0; r < rows; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] = coefficient(static_cast<std::size_t>(r));
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
    auto& pr = a[static_cast<std::size_t>(row)];
    const Rational inv = 1 / pr[static_cast<std::size_t>(c)];
    for (auto& v : pr) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      auto& rr = a[static_cast<std::size_t>(r)];
      const Rational f = rr[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = c; k <= cols; ++k) rr[static_cast<std::size_t>(k)] -= f * pr[static_cast<std::size_t>(k)];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r) {
    if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] != 0) return std::nullopt;
  }
  std::vector<Rational> sol(static_cast<std::size_t>(cols), 0);
  for (int r = 0; r < row; ++r) sol[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)];
  return from_coefficients(m, sol);
}

CyclotomicNumber CyclotomicNumber::minimal() const {
  if (is_rational()) return CyclotomicNumber(rational_value(), 1);
  for (long m : divisors(order())) {
    if (auto v = in_subfield(static_cast<int>(m))) return *v;
  }
  return *this;
}

namespace {

// Brings a and b to a common order.
void align(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.order() == b.order()) return;
  const long n = lcm_long(a.order(), b.order());
  check_order(n);
  if (a.order() != n) a = promote(a, static_cast<int>(n));
  if (b.order() != n) b = promote(b, static_cast<int>(n));
}

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  CyclotomicNumber rhs = o;
  align(*this, rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  CyclotomicNumber rhs = o;
  align(*this, rhs);
  const std::size_t n = num_.size();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  reduce_mod_phi(prod, *field_);
  num_ = std::move(prod);
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() == b.order()) return a.den_ == b.den_ && a.num_ == b.num_;
  return (a - b).is_zero();
}

std::string CyclotomicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Rational c = coefficient(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

CyclotomicNumber root_of_unity(long h, int k) {
  if (k < 1) throw std::invalid_argument("root_of_unity: k must be positive");
  const detail::FieldData* f = field_for(k);
  const long e = ((h % k) + k) % k;
  std::vector<Integer> num(static_cast<std::size_t>(std::max<long>(e + 1, f->phi)), 0);
  num[static_cast<std::size_t>(e)] = 1;
  return CyclotomicNumber(f, std::move(num), Integer(1));
}

CyclotomicNumber promote(const CyclotomicNumber& x, int n) {
  const int m = x.order();
  if (n < 1 || n % m != 0) {
    throw OrderMismatch("cannot promote order " + std::to_string(m) + " to " + std::to_string(n));
  }
  if (n == m) return x;
  const detail::FieldData* f = field_for(n);
  const std::size_t s = static_cast<std::size_t>(n / m);
  std::vector<Integer> num(std::max((x.num_.size() - 1) * s + 1, static_cast<std::size_t>(f->phi)), 0);
  for (std::size_t i = 0; i < x.num_.size(); ++i) num[i * s] = x.num_[i];
  return CyclotomicNumber(f, std::move(num), x.den_);
}

BigComplex embed_complex(const CyclotomicNumber& x, int digits) {
  if (digits < 1) throw std::invalid_argument("embed_complex: digits must be positive");
  if (x.is_zero()) return BigComplex(Precision::digits(digits));
  const int n = x.order();
  const std::vector<Rational> coeffs = x.coefficients();
  double log_scale = 0.0;  // log10 of sum |c_i|
  {
    BigFloat s(Precision::digits(20));
    for (const auto& c : coeffs) s += abs(BigFloat(c, Precision::digits(20)));
    log_scale = s.log10_abs();
  }
  const double terms = std::log10(static_cast<double>(coeffs.size()) + 1.0);
  int work = digits + 10 + static_cast<int>(std::ceil(std::max(0.0, log_scale)));
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Precision wp = Precision::digits(work);
    BigComplex v(wp);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      v += BigComplex::unit(Rational(static_cast<long>(i), n), wp) * BigFloat(coeffs[i], wp);
    }
    // Each term carries a relative error of a few ulps.
    const double log_err = log_scale + terms + 1.0 - work;
    const double log_val = v.log10_abs();
    if (log_val - log_err >= digits + 1) return v.with_digits(digits);
    work += std::max(digits, static_cast<int>(std::ceil(log_err - log_val)) + digits + 2);
  }
  throw PrecisionExhausted("embed_complex: value too close to zero for its coefficient size");
}

}  // namespace mockradial
