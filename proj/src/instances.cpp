#include "hopfcalc/instances.hpp"

#include <algorithm>

namespace hopfcalc {

namespace {

Rational counit_empty(const Word& w) { return Rational(w.is_empty() ? 1 : 0); }

LinComb<Word> prefix_letter(char c, const LinComb<Word>& x) {
  LinComb<Word> r;
  for (const auto& [w, coef] : x.terms()) r.add_term(Word(c + w.letters), coef);
  return r;
}

}  // namespace

LinComb<Word> infiltration(const Word& u, const Word& v, const Rational& q) {
  if (u.is_empty()) return LinComb<Word>(v);
  if (v.is_empty()) return LinComb<Word>(u);

  thread_local std::map<std::tuple<Word, Word, Rational>, LinComb<Word>> cache;
  auto key = std::make_tuple(u, v, q);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const char a = u.letters[0];
  const char b = v.letters[0];
  const Word du(u.letters.substr(1)), dv(v.letters.substr(1));

  LinComb<Word> r = prefix_letter(a, infiltration(du, v, q));
  r.add_scaled(Rational(1), prefix_letter(b, infiltration(u, dv, q)));
  if (a == b && !q.is_zero())
    r.add_scaled(q, prefix_letter(a, infiltration(du, dv, q)));

  cache.emplace(std::move(key), r);
  return r;
}

bool duality_check(const Word& u, const Word& v, const Word& w, const Rational& q) {
  Rational lhs = coproduct_q(w, q).coeff(TensorBasis<Word, Word>{u, v});
  Rational rhs = infiltration(u, v, q).coeff(w);
  return lhs == rhs;
}

BialgebraOps<Word> make_free_concat_unshuffle(const Alphabet& a, const Rational& q) {
  BialgebraOps<Word> alg;
  alg.name = "free-q(q=" + q.str() + ")";
  alg.unit = Word::empty();
  (void)a;
  alg.product = [](const Word& x, const Word& y) { return LinComb<Word>(concat(x, y)); };
  alg.coproduct = [q](const Word& w) { return coproduct_q(w, q); };
  alg.counit = counit_empty;
  alg.degree = [](const Word& w) { return static_cast<int>(w.size()); };
  return alg;
}

BialgebraOps<Word> make_shuffle_deconcat(const Alphabet& a, const Rational& q) {
  BialgebraOps<Word> alg;
  alg.name = "shuffle-q(q=" + q.str() + ")";
  alg.unit = Word::empty();
  (void)a;
  alg.product = [q](const Word& x, const Word& y) { return infiltration(x, y, q); };
  alg.coproduct = [](const Word& w) { return coproduct_cauchy(w); };
  alg.counit = counit_empty;
  alg.degree = [](const Word& w) { return static_cast<int>(w.size()); };
  return alg;
}

BialgebraOps<Monomial> make_poly_binomial(const Alphabet& a) {
  BialgebraOps<Monomial> alg;
  alg.name = "poly";
  alg.unit = Monomial::one();
  (void)a;
  alg.product = [](const Monomial& x, const Monomial& y) {
    return LinComb<Monomial>(mono_mul(x, y));
  };
  alg.coproduct = [](const Monomial& m) {
    // Multiplicative extension of x -> x (x) 1 + 1 (x) x: every sub-exponent
    // vector beta <= alpha appears with coefficient prod C(alpha_i, beta_i).
    Tensor2<Monomial> r;
    std::vector<std::pair<Var, int>> vars(m.exponents.begin(), m.exponents.end());
    std::vector<int> beta(vars.size(), 0);
    while (true) {
      Rational coef(1);
      Monomial left, right;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        coef *= Rational(binomial(static_cast<unsigned long>(vars[i].second),
                                  static_cast<unsigned long>(beta[i])));
        left.mul_var(vars[i].first, beta[i]);
        right.mul_var(vars[i].first, vars[i].second - beta[i]);
      }
      r.add_term(TensorBasis<Monomial, Monomial>{left, right}, coef);
      std::size_t i = 0;
      while (i < vars.size() && beta[i] == vars[i].second) beta[i++] = 0;
      if (i == vars.size()) break;
      ++beta[i];
    }
    return r;
  };
  alg.counit = [](const Monomial& m) { return Rational(m.is_one() ? 1 : 0); };
  alg.degree = [](const Monomial& m) { return m.degree(); };
  return alg;
}

BialgebraOps<TraceWord> make_trace_unshuffle(const Alphabet& a,
                                             const CommutationGraph& theta) {
  for (auto [x, y] : theta.pairs()) {
    a.require(x);
    a.require(y);
  }
  BialgebraOps<TraceWord> alg;
  alg.name = "trace";
  alg.unit = TraceWord{Word::empty()};
  alg.product = [theta](const TraceWord& x, const TraceWord& y) {
    return LinComb<TraceWord>(trace_normal_form(concat(x.normal_form, y.normal_form), theta));
  };
  alg.coproduct = [theta](const TraceWord& t) {
    // Unshuffle a spelling, then project both legs back to trace classes;
    // well-definedness across spellings is a tested invariant.
    Tensor2<TraceWord> r;
    for (const auto& [tb, c] : coproduct_q(t.normal_form, Rational(0)).terms())
      r.add_term(TensorBasis<TraceWord, TraceWord>{trace_normal_form(tb.left, theta),
                                                   trace_normal_form(tb.right, theta)},
                 c);
    return r;
  };
  alg.counit = [](const TraceWord& t) { return Rational(t.size() == 0 ? 1 : 0); };
  alg.degree = [](const TraceWord& t) { return static_cast<int>(t.size()); };
  return alg;
}

BialgebraOps<GroupElem> make_group_algebra(const FiniteGroup::Ptr& g) {
  BialgebraOps<GroupElem> alg;
  alg.name = "group(" + g->name() + ")";
  alg.unit = GroupElem{g, FiniteGroup::identity()};
  alg.product = [](const GroupElem& x, const GroupElem& y) {
    if (x.group->name() != y.group->name())
      throw UsageError("product of elements from different groups");
    return LinComb<GroupElem>(GroupElem{x.group, x.group->mul(x.index, y.index)});
  };
  alg.coproduct = [](const GroupElem& x) {
    return Tensor2<GroupElem>(TensorBasis<GroupElem, GroupElem>{x, x});
  };
  alg.counit = [](const GroupElem&) { return Rational(1); };
  alg.antipode_closed = [](const GroupElem& x) {
    return GroupElem{x.group, x.group->inverse(x.index)};
  };
  return alg;
}

BialgebraOps<Word> make_free_grouplike(const Alphabet& a) {
  BialgebraOps<Word> alg;
  alg.name = "free-grouplike";
  alg.unit = Word::empty();
  (void)a;
  alg.product = [](const Word& x, const Word& y) { return LinComb<Word>(concat(x, y)); };
  alg.coproduct = [](const Word& w) {
    return Tensor2<Word>(TensorBasis<Word, Word>{w, w});
  };
  alg.counit = [](const Word&) { return Rational(1); };
  alg.degree = [](const Word& w) { return static_cast<int>(w.size()); };
  return alg;
}

namespace {

Tensor2<LabelledDiagram> ldiag_coproduct(const LabelledDiagram& d) {
  Tensor2<LabelledDiagram> r;
  const int p = d.rows();
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> in, out;
    for (int i = 0; i < p; ++i)
      ((mask >> i) & 1u ? in : out).push_back(i + 1);
    r.add_term(TensorBasis<LabelledDiagram, LabelledDiagram>{ldiag_restrict(d, in),
                                                             ldiag_restrict(d, out)},
               Rational(1));
  }
  return r;
}

}  // namespace

BialgebraOps<LabelledDiagram> make_ldiag() {
  BialgebraOps<LabelledDiagram> alg;
  alg.name = "ldiag";
  alg.unit = LabelledDiagram::empty();
  alg.product = [](const LabelledDiagram& x, const LabelledDiagram& y) {
    return LinComb<LabelledDiagram>(ldiag_concat(x, y));
  };
  alg.coproduct = ldiag_coproduct;
  alg.counit = [](const LabelledDiagram& d) { return Rational(d.is_empty() ? 1 : 0); };
  alg.degree = [](const LabelledDiagram& d) { return d.degree(); };
  return alg;
}

BialgebraOps<Diagram> make_diag() {
  BialgebraOps<Diagram> alg;
  alg.name = "diag";
  alg.unit = Diagram{LabelledDiagram::empty()};
  alg.product = [](const Diagram& x, const Diagram& y) {
    return LinComb<Diagram>(diag_canonical(ldiag_concat(x.canon, y.canon)));
  };
  alg.coproduct = [](const Diagram& x) {
    Tensor2<Diagram> r;
    for (const auto& [tb, c] : ldiag_coproduct(x.canon).terms())
      r.add_term(TensorBasis<Diagram, Diagram>{diag_canonical(tb.left),
                                               diag_canonical(tb.right)},
                 c);
    return r;
  };
  alg.counit = [](const Diagram& d) { return Rational(d.canon.is_empty() ? 1 : 0); };
  alg.degree = [](const Diagram& d) { return d.degree(); };
  return alg;
}

BialgebraOps<Word> make_cauchy_concat_mismatch(const Alphabet& a) {
  BialgebraOps<Word> alg = make_free_concat_unshuffle(a, Rational(0));
  alg.name = "cauchy-concat-mismatch";
  alg.coproduct = [](const Word& w) { return coproduct_cauchy(w); };
  return alg;
}

BialgebraOps<Word> make_example2_swap() {
  BialgebraOps<Word> alg;
  alg.name = "two-letter-swap";
  alg.unit = Word::empty();
  alg.product = [](const Word& x, const Word& y) { return LinComb<Word>(concat(x, y)); };
  alg.coproduct = [](const Word& w) {
    std::string bar = w.letters;
    for (char& c : bar) c = c == 'a' ? 'b' : 'a';
    return Tensor2<Word>(TensorBasis<Word, Word>{w, Word(bar)});
  };
  alg.counit = counit_empty;
  alg.degree = [](const Word& w) { return static_cast<int>(w.size()); };
  return alg;
}

}  // namespace hopfcalc
