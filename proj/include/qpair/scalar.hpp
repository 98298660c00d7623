#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "qpair/error.hpp"

namespace qpair {

// Laurent polynomial in one variable q with rational coefficients.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
public:
  using Coeffs = std::map<long, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long c) { set(0, mpq_class(c)); }
  LaurentPoly(const mpq_class& c) { set(0, c); }

  static LaurentPoly monomial(const mpq_class& c, long e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
  }
  static LaurentPoly q_power(long e) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;

  // Exponent range; both require a nonzero polynomial.
  long min_exp() const;
  long max_exp() const;

  mpq_class coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpq_class(0) : it->second;
  }
  const Coeffs& coeffs() const { return c_; }
  size_t term_count() const { return c_.size(); }

  void set(long e, const mpq_class& v) {
    if (v == 0)
      c_.erase(e);
    else
      c_[e] = v;
  }
  void add_to(long e, const mpq_class& v);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly shifted(long e) const;  // multiply by q^e
  LaurentPoly bar() const;            // q -> q^{-1}

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  // Evaluate at a nonzero rational point (negative exponents allowed).
  mpq_class eval(const mpq_class& x) const;

  // Terms in descending exponent order, e.g. "q[2] - 2 + q[-2]".
  std::string str() const;

private:
  Coeffs c_;
};

// Element of the rational function field Q(q), kept in a canonical
// num/den form so that operator== is exact representation equality:
//   den is an ordinary polynomial with nonzero constant term and
//   leading coefficient 1; gcd(num / q^s, den) = 1 where q^s is the
//   lowest power in num.  Zero is (0, 1).
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  Scalar(const mpq_class& n) : num_(n), den_(1) {}
  explicit Scalar(const LaurentPoly& p) : num_(p), den_(1) {}

  static Scalar from_fraction(const LaurentPoly& num, const LaurentPoly& den);
  static Scalar q_power(long e) { return Scalar(LaurentPoly::q_power(e)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long n) const;  // n may be negative
  Scalar bar() const;        // q -> q^{-1}

  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Evaluate at a nonzero rational point where den does not vanish.
  mpq_class eval(const mpq_class& x) const;

  std::string str() const;  // "(num)/(den)"

private:
  LaurentPoly num_, den_;
};

inline Scalar operator*(const mpq_class& c, const Scalar& s) {
  return Scalar(c) * s;
}

// q-integer [n] at q^d: (q^{dn} - q^{-dn}) / (q^d - q^{-d}); d != 0.
Scalar q_int(long n, long d = 1);
// [n]! at q^d, n >= 0.
Scalar q_factorial(long n, long d = 1);
// Gaussian binomial [n over k] at q^d, 0 <= k <= n.
Scalar q_binomial(long n, long k, long d = 1);

// Coefficient of y^n in exp_x(y) = sum x^{n(n-1)/2} y^n / [n]!_x at x = q^d.
// d may be negative, meaning x = q^{-|d|} (note [n]!_x = [n]!_{x^{-1}}).
Scalar expq_coeff(long n, long d = 1);
// Coefficient of y^n in exp_{q^d}(y)^{-1} = exp_{q^{-d}}(-y).
Scalar expq_coeff_inv(long n, long d = 1);

}  // namespace qpair
