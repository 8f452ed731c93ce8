#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

using BigInt = mpz_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Exact rational scalar. Always reduced with positive denominator (GMP keeps
// mpq_class canonical as long as fraction construction canonicalizes, which
// the constructors below do). No floating point anywhere.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw MathError("DivisionByZero", "rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational parse(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("DivisionByZero", "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(unsigned k) const {
    Rational r(1), base = *this;
    for (; k; k >>= 1) {
      if (k & 1) r *= base;
      if (k > 1) base *= base;
    }
    return r;
  }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

// Element of Q(omega) with omega a primitive cube root of unity, stored as
// a + b*omega; multiplication uses omega^2 = -1 - omega. Exact; used by the
// plane representation of the cyclic group so no floating-point sqrt(3)/2
// ever appears.
class CycOmega {
public:
  CycOmega() = default;
  CycOmega(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  CycOmega(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycOmega omega() { return CycOmega(0, 1); }
  static CycOmega omega_sq() { return CycOmega(-1, -1); }

  const Rational& re_part() const { return a_; }
  const Rational& omega_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  CycOmega operator-() const { return CycOmega(-a_, -b_); }
  friend CycOmega operator+(const CycOmega& x, const CycOmega& y) {
    return CycOmega(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend CycOmega operator-(const CycOmega& x, const CycOmega& y) {
    return CycOmega(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend CycOmega operator*(const CycOmega& x, const CycOmega& y) {
    // (a + b w)(c + d w) = ac + (ad + bc) w + bd (-1 - w)
    Rational bd = x.b_ * y.b_;
    return CycOmega(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
  }
  friend CycOmega operator*(const CycOmega& x, const Rational& r) {
    return CycOmega(x.a_ * r, x.b_ * r);
  }
  friend CycOmega operator*(const Rational& r, const CycOmega& x) { return x * r; }
  friend bool operator==(const CycOmega& x, const CycOmega& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string w = b_ == Rational(1)    ? "w"
                    : b_ == Rational(-1) ? "-w"
                                         : b_.str() + "*w";
    if (a_.is_zero()) return w;
    return a_.str() + (b_.sign() > 0 ? "+" : "") + w;
  }

private:
  Rational a_, b_;
};

}  // namespace hopfcalc
