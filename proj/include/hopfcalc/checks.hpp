#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hopfcalc/bialgebra.hpp"

namespace hopfcalc {

struct SuiteOutcome {
  bool passed = true;
  std::string counterexample;  // empty when passed
};

// Results of the three bialgebra law suites over a finite corpus.
struct BialgebraReport {
  SuiteOutcome coassoc;
  SuiteOutcome counit_laws;
  SuiteOutcome morphism;
  bool all_passed() const {
    return coassoc.passed && counit_laws.passed && morphism.passed;
  }
};

template <class B>
using Triple = std::tuple<B, B, B>;

// (Delta (x) Id) Delta(b) flattened onto triples.
template <class B>
std::map<Triple<B>, Rational> coproduct_left_assoc(const BialgebraOps<B>& alg, const B& b) {
  std::map<Triple<B>, Rational> r;
  for (const auto& [t, c] : alg.coproduct(b).terms())
    for (const auto& [t2, c2] : alg.coproduct(t.left).terms()) {
      auto key = Triple<B>{t2.left, t2.right, t.right};
      auto [it, inserted] = r.emplace(key, c * c2);
      if (!inserted) {
        it->second += c * c2;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

// (Id (x) Delta) Delta(b) flattened onto triples.
template <class B>
std::map<Triple<B>, Rational> coproduct_right_assoc(const BialgebraOps<B>& alg, const B& b) {
  std::map<Triple<B>, Rational> r;
  for (const auto& [t, c] : alg.coproduct(b).terms())
    for (const auto& [t2, c2] : alg.coproduct(t.right).terms()) {
      auto key = Triple<B>{t.left, t2.left, t2.right};
      auto [it, inserted] = r.emplace(key, c * c2);
      if (!inserted) {
        it->second += c * c2;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

// Three law suites on a finite corpus: coassociativity, the two counit laws,
// and "coproduct and counit are algebra morphisms" (checked on all corpus
// pairs, plus the unit axioms Delta(1) = 1 (x) 1 and counit(1) = 1).
// `render` turns a basis element into text for counterexample reporting.
template <class B, class Render>
BialgebraReport check_bialgebra(const BialgebraOps<B>& alg,
                                const std::vector<B>& corpus, Render render) {
  BialgebraReport rep;

  for (const B& b : corpus) {
    if (coproduct_left_assoc(alg, b) != coproduct_right_assoc(alg, b)) {
      rep.coassoc = {false, render(b)};
      break;
    }
  }

  for (const B& b : corpus) {
    LinComb<B> left, right;
    for (const auto& [t, c] : alg.coproduct(b).terms()) {
      left.add_term(t.right, c * alg.counit(t.left));
      right.add_term(t.left, c * alg.counit(t.right));
    }
    LinComb<B> expected(b);
    if (left != expected || right != expected) {
      rep.counit_laws = {false, render(b)};
      break;
    }
  }

  {
    Tensor2<B> unit_tensor(TensorBasis<B, B>{alg.unit, alg.unit});
    if (alg.coproduct(alg.unit) != unit_tensor || alg.counit(alg.unit) != Rational(1))
      rep.morphism = {false, "unit"};
  }
  if (rep.morphism.passed) {
    for (const B& x : corpus) {
      for (const B& y : corpus) {
        LinComb<B> xy = alg.product(x, y);
        if (alg_coproduct(alg, xy) !=
                tensor_product(alg, alg.coproduct(x), alg.coproduct(y)) ||
            alg_counit(alg, xy) != alg.counit(x) * alg.counit(y)) {
          rep.morphism = {false, render(x) + " , " + render(y)};
          break;
        }
      }
      if (!rep.morphism.passed) break;
    }
  }
  return rep;
}

}  // namespace hopfcalc
