#pragma once

#include <map>
#include <string>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

// Commutative variable: a base letter plus an optional integer subscript.
// Plain polynomial variables are (letter, 0) and print as "x"; subscripted
// families like L1..Ln, V1..Vn print as "L1", "V3".
struct Var {
  char base = 0;
  int sub = 0;

  friend bool operator==(const Var&, const Var&) = default;
  friend bool operator<(const Var& a, const Var& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.sub < b.sub;
  }

  std::string str() const {
    std::string s(1, base);
    if (sub > 0) s += std::to_string(sub);
    return s;
  }
};

// Commutative monomial: finitely-supported exponent vector with positive
// exponents only. Total order: total degree first, then the exponent map
// lexicographically (deterministic, degree-compatible).
struct Monomial {
  std::map<Var, int> exponents;

  static Monomial one() { return Monomial(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exponents) d += e;
    return d;
  }
  bool is_one() const { return exponents.empty(); }

  Monomial& mul_var(Var v, int e) {
    if (e < 0) throw IndexOutOfRangeError("negative exponent");
    if (e == 0) return *this;
    auto [it, inserted] = exponents.emplace(v, e);
    if (!inserted) it->second += e;
    return *this;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b.exponents) r.mul_var(v, e);
  return r;
}

}  // namespace hopfcalc
