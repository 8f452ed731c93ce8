#pragma once

#include <vector>

#include "hopfcalc/bialgebra.hpp"
#include "hopfcalc/errors.hpp"

namespace hopfcalc {

// Antipode as the convolution-series inverse of the identity,
//   S = sum_{k >= 0} (-I+)^{*k},  I+(x) = x - counit(x) unit,
// with (-I+)^{*0} = unit . counit. On an element of degree n the series is
// truncated after the first n+1 terms; when the coproduct is graded with the
// unit spanning degree 0 the tail vanishes and the partial sum is exact.
// Correctness is not assumed: antipode() re-checks the two-sided antipode
// identity on every basis element it touches and raises NoAntipode when the
// truncated sum fails it (free algebra with q-deformed coproduct, group-like
// free algebra, ...).
template <class B>
class AntipodeSeries {
public:
  explicit AntipodeSeries(BialgebraOps<B> alg)
      : alg_(std::move(alg)), eval_(make_eval()) {
    powers_.push_back(counit_unit_map(alg_));
  }
  AntipodeSeries(const AntipodeSeries&) = delete;  // eval_ captures this
  AntipodeSeries& operator=(const AntipodeSeries&) = delete;

  // Truncated series value on a basis element; unchecked.
  const LinComb<B>& partial_sum(const B& b) const { return eval_(b); }

  const LinMap<B>& as_map() const { return eval_; }

private:
  LinMap<B> make_eval() {
    return LinMap<B>([this](const B& b) {
      if (!alg_.degree)
        throw NoAntipodeError("NoAntipode: no grading to truncate the series");
      int n = alg_.degree(b);
      if (n < 0) throw NoAntipodeError("NoAntipode: negative degree");
      while (static_cast<int>(powers_.size()) <= n)
        powers_.push_back(convolve(powers_.back(), minus_iplus(), alg_));
      LinComb<B> s;
      for (int k = 0; k <= n; ++k) s.add_scaled(Rational(1), powers_[k](b));
      return s;
    });
  }

  LinMap<B> minus_iplus() const {
    auto alg = alg_;
    return LinMap<B>([alg](const B& b) {
      LinComb<B> r(alg.unit, alg.counit(b));
      r.add_term(b, Rational(-1));
      return r;
    });
  }

  BialgebraOps<B> alg_;
  mutable std::vector<LinMap<B>> powers_;  // powers_[k] = (-I+)^{*k}
  LinMap<B> eval_;
};

// Does S satisfy  mu(S (x) Id)Delta(b) = counit(b) unit = mu(Id (x) S)Delta(b)?
template <class B>
bool antipode_identity_holds(const BialgebraOps<B>& alg, const LinMap<B>& s,
                             const B& b) {
  LinComb<B> expected(alg.unit, alg.counit(b));
  LinComb<B> left, right;
  for (const auto& [t, c] : alg.coproduct(b).terms()) {
    left.add_scaled(c, alg_product(alg, s(t.left), LinComb<B>(t.right)));
    right.add_scaled(c, alg_product(alg, LinComb<B>(t.left), s(t.right)));
  }
  return left == expected && right == expected;
}

// Antipode of x, via the closed form when the instance carries one and via
// the checked truncated series otherwise.
template <class B>
LinComb<B> antipode(const BialgebraOps<B>& alg, const LinComb<B>& x) {
  if (alg.antipode_closed) {
    LinComb<B> r;
    for (const auto& [b, c] : x.terms()) r.add_term(alg.antipode_closed(b), c);
    return r;
  }
  AntipodeSeries<B> series(alg);
  LinComb<B> r;
  for (const auto& [b, c] : x.terms()) {
    if (!antipode_identity_holds(alg, series.as_map(), b))
      throw NoAntipodeError();
    r.add_scaled(c, series.partial_sum(b));
  }
  return r;
}

}  // namespace hopfcalc
