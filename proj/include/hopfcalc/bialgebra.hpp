#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "hopfcalc/lincomb.hpp"

namespace hopfcalc {

template <class B>
using Tensor2 = LinComb<TensorBasis<B, B>>;

// Structure descriptor for a bialgebra presented on a basis: everything is
// given on basis elements and extended linearly by the free functions below.
// `degree` is null for ungraded instances (group algebras); `antipode_closed`
// is set only where a closed form exists (group algebras: g -> g^{-1}).
template <class B>
struct BialgebraOps {
  std::string name;
  B unit{};
  std::function<LinComb<B>(const B&, const B&)> product;
  std::function<Tensor2<B>(const B&)> coproduct;
  std::function<Rational(const B&)> counit;
  std::function<int(const B&)> degree;
  std::function<B(const B&)> antipode_closed;
};

template <class B>
LinComb<B> alg_product(const BialgebraOps<B>& alg, const LinComb<B>& x,
                       const LinComb<B>& y) {
  LinComb<B> r;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      r.add_scaled(cx * cy, alg.product(bx, by));
  return r;
}

template <class B>
Tensor2<B> alg_coproduct(const BialgebraOps<B>& alg, const LinComb<B>& x) {
  Tensor2<B> r;
  for (const auto& [b, c] : x.terms()) r.add_scaled(c, alg.coproduct(b));
  return r;
}

template <class B>
Rational alg_counit(const BialgebraOps<B>& alg, const LinComb<B>& x) {
  Rational r(0);
  for (const auto& [b, c] : x.terms()) r += c * alg.counit(b);
  return r;
}

// Product on the tensor square, (a (x) b)(c (x) d) = ac (x) bd.
template <class B>
Tensor2<B> tensor_product(const BialgebraOps<B>& alg, const Tensor2<B>& x,
                          const Tensor2<B>& y) {
  Tensor2<B> r;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms())
      r.add_scaled(cx * cy,
                   lc_tensor(alg.product(tx.left, ty.left),
                             alg.product(tx.right, ty.right)));
  return r;
}

// Linear map on basis elements with a shared memo table; the same basis
// elements recur constantly inside convolution powers, so caching makes the
// antipode series cheap. Copies share the cache.
template <class B, class B2 = B>
class LinMap {
public:
  using Rule = std::function<LinComb<B2>(const B&)>;

  explicit LinMap(Rule rule)
      : rule_(std::move(rule)),
        cache_(std::make_shared<std::map<B, LinComb<B2>>>()) {}

  const LinComb<B2>& operator()(const B& b) const {
    auto it = cache_->find(b);
    if (it == cache_->end()) it = cache_->emplace(b, rule_(b)).first;
    return it->second;
  }

  LinComb<B2> apply(const LinComb<B>& x) const {
    LinComb<B2> r;
    for (const auto& [b, c] : x.terms()) r.add_scaled(c, (*this)(b));
    return r;
  }

private:
  Rule rule_;
  std::shared_ptr<std::map<B, LinComb<B2>>> cache_;
};

template <class B>
LinMap<B> identity_map() {
  return LinMap<B>([](const B& b) { return LinComb<B>(b); });
}

// unit . counit, the neutral element of the convolution algebra.
template <class B>
LinMap<B> counit_unit_map(const BialgebraOps<B>& alg) {
  return LinMap<B>([alg](const B& b) { return LinComb<B>(alg.unit, alg.counit(b)); });
}

// Convolution f * g = product . (f (x) g) . coproduct.
template <class B>
LinMap<B> convolve(const LinMap<B>& f, const LinMap<B>& g,
                   const BialgebraOps<B>& alg) {
  return LinMap<B>([f, g, alg](const B& b) {
    LinComb<B> r;
    for (const auto& [t, c] : alg.coproduct(b).terms())
      r.add_scaled(c, alg_product(alg, f(t.left), g(t.right)));
    return r;
  });
}

}  // namespace hopfcalc
