#pragma once

#include <vector>

#include "hopfcalc/errors.hpp"
#include "hopfcalc/lincomb.hpp"
#include "hopfcalc/monomial.hpp"

namespace hopfcalc {

inline LinComb<Monomial> operator*(const LinComb<Monomial>& x,
                                   const LinComb<Monomial>& y) {
  LinComb<Monomial> r;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) r.add_term(mono_mul(bx, by), cx * cy);
  return r;
}

// Coefficient rings an EGF can live over: exact rationals, or polynomials in
// commuting variables (for symbolic identities in y, L1.., V1..).
template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational one() { return Rational(1); }
  static Rational scale(const Rational& c, const Rational& s) { return c * s; }
};

template <>
struct RingTraits<LinComb<Monomial>> {
  static LinComb<Monomial> one() { return LinComb<Monomial>(Monomial::one()); }
  static LinComb<Monomial> scale(const LinComb<Monomial>& c, const Rational& s) {
    return s * c;
  }
};

// Truncated exponential generating function: coefficients c_0..c_order with
// F(z) = sum c_n z^n / n!, all arithmetic exact at fixed truncation order.
template <class C>
class EGFSeries {
public:
  explicit EGFSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  EGFSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw OrderMismatchError("OrderMismatch: empty series");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  C& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  friend bool operator==(const EGFSeries& a, const EGFSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<C> coeffs_;
};

namespace egf_detail {
template <class C>
void require_same_order(const EGFSeries<C>& a, const EGFSeries<C>& b) {
  if (a.order() != b.order())
    throw OrderMismatchError("OrderMismatch: series orders differ");
}
}  // namespace egf_detail

// Product of EGFs: binomial convolution h_n = sum_j C(n,j) f_j g_{n-j}.
template <class C>
EGFSeries<C> egf_mul(const EGFSeries<C>& f, const EGFSeries<C>& g) {
  egf_detail::require_same_order(f, g);
  EGFSeries<C> h(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    C acc{};
    for (int j = 0; j <= n; ++j)
      acc = acc + RingTraits<C>::scale(
                      f.coeff(j) * g.coeff(n - j),
                      Rational(binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(j))));
    h.coeff(n) = acc;
  }
  return h;
}

// exp(F) for F with zero constant term, via G' = F' G:
//   g_{n+1} = sum_{j<=n} C(n,j) f_{j+1} g_{n-j},  g_0 = 1.
// Division-free, so it works over polynomial coefficient rings too.
template <class C>
EGFSeries<C> egf_exp(const EGFSeries<C>& f) {
  if (!(f.coeff(0) == C{}))
    throw NonzeroConstantTermError("NonzeroConstantTerm: exp needs f(0) = 0");
  EGFSeries<C> g(f.order());
  g.coeff(0) = RingTraits<C>::one();
  for (int n = 0; n + 1 <= f.order(); ++n) {
    C acc{};
    for (int j = 0; j <= n; ++j)
      acc = acc + RingTraits<C>::scale(
                      f.coeff(j + 1) * g.coeff(n - j),
                      Rational(binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(j))));
    g.coeff(n + 1) = acc;
  }
  return g;
}

// log(G) for G with constant term 1; inverse of egf_exp at the same order.
template <class C>
EGFSeries<C> egf_log(const EGFSeries<C>& g) {
  if (!(g.coeff(0) == RingTraits<C>::one()))
    throw NonzeroConstantTermError("NonzeroConstantTerm: log needs g(0) = 1");
  EGFSeries<C> f(g.order());
  for (int n = 0; n + 1 <= g.order(); ++n) {
    C acc = g.coeff(n + 1);
    for (int j = 0; j < n; ++j)
      acc = acc - RingTraits<C>::scale(
                      f.coeff(j + 1) * g.coeff(n - j),
                      Rational(binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(j))));
    f.coeff(n + 1) = acc;
  }
  return f;
}

// Hadamard product: coefficientwise c_n = a_n b_n.
template <class C>
EGFSeries<C> hadamard(const EGFSeries<C>& a, const EGFSeries<C>& b) {
  egf_detail::require_same_order(a, b);
  EGFSeries<C> h(a.order());
  for (int n = 0; n <= a.order(); ++n) h.coeff(n) = a.coeff(n) * b.coeff(n);
  return h;
}

}  // namespace hopfcalc
