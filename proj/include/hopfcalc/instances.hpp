#pragma once

#include <tuple>

#include "hopfcalc/bialgebra.hpp"
#include "hopfcalc/diagram.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/monomial.hpp"
#include "hopfcalc/trace.hpp"
#include "hopfcalc/word.hpp"

namespace hopfcalc {

// q-deformed unshuffle coproduct on a word: sum over pairs (I,J) of position
// sets with I u J = {1..n}, weighted q^{|I n J|}; each position sits in I
// only, J only, or both, so 3^n assignments (2^n at q = 0, where only the
// disjoint splittings survive).
inline Tensor2<Word> coproduct_q(const Word& w, const Rational& q) {
  const int n = static_cast<int>(w.size());
  Tensor2<Word> r;
  std::string left, right;
  std::vector<int> choice(static_cast<std::size_t>(n), 0);
  const bool q_zero = q.is_zero();
  while (true) {
    left.clear();
    right.clear();
    int overlap = 0;
    for (int i = 0; i < n; ++i) {
      char c = w.letters[static_cast<std::size_t>(i)];
      switch (choice[static_cast<std::size_t>(i)]) {
        case 0: left.push_back(c); break;
        case 1: right.push_back(c); break;
        default:
          left.push_back(c);
          right.push_back(c);
          ++overlap;
      }
    }
    if (!(q_zero && overlap > 0))
      r.add_term(TensorBasis<Word, Word>{Word(left), Word(right)},
                 overlap == 0 ? Rational(1) : q.pow(static_cast<unsigned>(overlap)));
    int i = n - 1;
    const int arity = q_zero ? 2 : 3;
    while (i >= 0 && choice[static_cast<std::size_t>(i)] == arity - 1) {
      choice[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[static_cast<std::size_t>(i)];
  }
  return r;
}

// Deconcatenation coproduct: sum of prefix (x) suffix splittings.
inline Tensor2<Word> coproduct_cauchy(const Word& w) {
  Tensor2<Word> r;
  for (std::size_t i = 0; i <= w.size(); ++i)
    r.add_term(TensorBasis<Word, Word>{Word(w.letters.substr(0, i)),
                                       Word(w.letters.substr(i))},
               Rational(1));
  return r;
}

// q-infiltration product, the dual of coproduct_q:
//   au ^ bv = a(u ^ bv) + b(au ^ v) + q [a = b] a(u ^ v).
// The matching-letter term keeps the shared leading letter; dropping it (as
// a naive reading of the recursion suggests) breaks duality against
// coproduct_q, e.g. <Delta_q(a), a (x) a> = q forces a ^ a = 2aa + q a.
LinComb<Word> infiltration(const Word& u, const Word& v, const Rational& q);

// <Delta_q(w), u (x) v> == <w, u ^_q v>.
bool duality_check(const Word& u, const Word& v, const Word& w, const Rational& q);

// Free associative algebra with concatenation product and q-deformed
// unshuffle coproduct. Hopf only at q = 0.
BialgebraOps<Word> make_free_concat_unshuffle(const Alphabet& a, const Rational& q);

// Dual presentation: q-infiltration product, deconcatenation coproduct.
// Hopf for every q (the coproduct side is graded).
BialgebraOps<Word> make_shuffle_deconcat(const Alphabet& a, const Rational& q);

// Polynomial algebra with the binomial coproduct on monomials.
BialgebraOps<Monomial> make_poly_binomial(const Alphabet& a);

// Partially commutative polynomials: trace monoid product, unshuffle
// coproduct computed on a spelling and projected back to trace classes.
BialgebraOps<TraceWord> make_trace_unshuffle(const Alphabet& a,
                                             const CommutationGraph& theta);

// Group algebra k[G]: group-like coproduct, closed-form antipode g -> g^{-1}.
BialgebraOps<GroupElem> make_group_algebra(const FiniteGroup::Ptr& g);

// Free algebra with every letter group-like and the augmentation counit.
// A bialgebra with no antipode once the alphabet is non-empty.
BialgebraOps<Word> make_free_grouplike(const Alphabet& a);

// Labelled diagrams: superposition product, black-spot splitting coproduct.
BialgebraOps<LabelledDiagram> make_ldiag();

// Diagram classes: the LDIAG structure pushed through diag_canonical
// (lift a canonical representative, compute, project).
BialgebraOps<Diagram> make_diag();

// Deliberately broken structures for negative tests. The first pairs the
// deconcatenation coproduct with the concatenation product (coproduct is not
// an algebra morphism); the second is the two-letter coproduct
// Delta(a) = a (x) b, Delta(b) = b (x) a extended multiplicatively, which
// fails coassociativity on a single letter.
BialgebraOps<Word> make_cauchy_concat_mismatch(const Alphabet& a);
BialgebraOps<Word> make_example2_swap();

}  // namespace hopfcalc
