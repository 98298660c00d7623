#include "qpair/scalar.hpp"

#include <sstream>
#include <utility>

namespace qpair {

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  require(!c_.empty(), "min_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  require(!c_.empty(), "max_exp of zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::add_to(long e, const mpq_class& v) {
  auto it = c_.find(e);
  if (it == c_.end()) {
    if (v != 0) c_.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c_) r.add_to(e, v);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c_) r.add_to(e, mpq_class(-v));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add_to(e1 + e2, v1 * v2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : c_) r.c_.emplace(e, c * v);
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (const auto& [e1, v] : c_) r.c_.emplace(e1 + e, v);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_.emplace(-e, v);
  return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  require(x != 0, "evaluation point must be nonzero");
  mpq_class acc(0);
  for (const auto& [e, v] : c_) {
    mpq_class p(1);
    long n = e < 0 ? -e : e;
    for (long k = 0; k < n; ++k) p *= x;
    if (e < 0) p = 1 / p;
    acc += v * p;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponents gives the conventional reading order.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const long e = it->first;
    mpq_class v = it->second;
    const bool neg = v < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (v != 1 || e == 0) {
      out << v.get_str();
      if (e != 0) out << " ";
    }
    if (e != 0) out << "q[" << e << "]";
  }
  return out.str();
}

namespace {

// Ordinary-polynomial helpers: operands must have min_exp >= 0.

long poly_deg(const LaurentPoly& p) { return p.is_zero() ? -1 : p.max_exp(); }

// Division with remainder in Q[q].
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                const LaurentPoly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  LaurentPoly quo, rem = a;
  const long db = poly_deg(b);
  const mpq_class lb = b.coeff(db);
  while (!rem.is_zero() && poly_deg(rem) >= db) {
    const long dr = poly_deg(rem);
    mpq_class c = rem.coeff(dr) / lb;
    LaurentPoly t = LaurentPoly::monomial(c, dr - db);
    quo = quo + t;
    rem = rem - t * b;
  }
  return {quo, rem};
}

LaurentPoly poly_monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.coeff(poly_deg(p)));
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  a = poly_monic(a);
  b = poly_monic(b);
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = poly_monic(r);
  }
  return a;
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  require(r.is_zero(), "inexact polynomial division");
  return q;
}

}  // namespace

Scalar Scalar::from_fraction(const LaurentPoly& num, const LaurentPoly& den) {
  require(!den.is_zero(), "scalar division by zero");
  if (num.is_zero()) return Scalar();
  const long sn = num.min_exp();
  const long sd = den.min_exp();
  LaurentPoly n0 = num.shifted(-sn);
  LaurentPoly d0 = den.shifted(-sd);
  LaurentPoly g = poly_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = poly_div_exact(n0, g);
    d0 = poly_div_exact(d0, g);
  }
  const mpq_class lead = d0.coeff(poly_deg(d0));
  if (lead != 1) {
    n0 = n0.scaled(1 / lead);
    d0 = d0.scaled(1 / lead);
  }
  Scalar s;
  s.num_ = n0.shifted(sn - sd);
  s.den_ = d0;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  return from_fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require(!o.is_zero(), "scalar division by zero");
  return from_fraction(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  require(!is_zero(), "inverse of zero");
  return from_fraction(den_, num_);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar acc(1), base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Scalar Scalar::bar() const { return from_fraction(num_.bar(), den_.bar()); }

mpq_class Scalar::eval(const mpq_class& x) const {
  const mpq_class d = den_.eval(x);
  require(d != 0, "denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

std::string Scalar::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar q_int(long n, long d) {
  require(d != 0, "q_int needs d != 0");
  if (d < 0) d = -d;  // [n]_{q^{-d}} = [n]_{q^d}
  if (n == 0) return Scalar(0);
  if (n < 0) return -q_int(-n, d);
  // q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
  LaurentPoly p;
  for (long k = 0; k < n; ++k) p.add_to(d * (n - 1 - 2 * k), 1);
  return Scalar(p);
}

Scalar q_factorial(long n, long d) {
  require(n >= 0, "q_factorial needs n >= 0");
  Scalar r(1);
  for (long m = 2; m <= n; ++m) r *= q_int(m, d);
  return r;
}

Scalar q_binomial(long n, long k, long d) {
  require(0 <= k && k <= n, "q_binomial needs 0 <= k <= n");
  return q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d));
}

Scalar expq_coeff(long n, long d) {
  require(n >= 0, "expq_coeff needs n >= 0");
  require(d != 0, "expq_coeff needs d != 0");
  const long mag = d < 0 ? -d : d;
  return Scalar::q_power(d * (n * (n - 1) / 2)) / q_factorial(n, mag);
}

Scalar expq_coeff_inv(long n, long d) {
  require(n >= 0, "expq_coeff_inv needs n >= 0");
  Scalar s = expq_coeff(n, -d);
  return (n % 2 == 0) ? s : -s;
}

}  // namespace qpair
