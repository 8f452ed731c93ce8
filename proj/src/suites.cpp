#include "hopfcalc/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

#include "hopfcalc/antipode.hpp"
#include "hopfcalc/checks.hpp"
#include "hopfcalc/corpus.hpp"
#include "hopfcalc/egf.hpp"
#include "hopfcalc/format.hpp"
#include "hopfcalc/hadamard_routes.hpp"
#include "hopfcalc/instances.hpp"
#include "hopfcalc/matrix.hpp"
#include "hopfcalc/partitions.hpp"

namespace hopfcalc {

namespace {

int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

std::string describe(const BialgebraReport& r) {
  std::string s;
  auto note = [&s](const char* law, const SuiteOutcome& o, bool expected) {
    if (o.passed == expected) return;
    if (!s.empty()) s += "; ";
    s += law;
    s += o.passed ? " unexpectedly held" : " failed";
    if (!o.counterexample.empty()) s += " on " + o.counterexample;
  };
  note("coassociativity", r.coassoc, true);
  note("counit laws", r.counit_laws, true);
  note("morphism laws", r.morphism, true);
  return s;
}

template <class B, class Render>
SuiteResult bialgebra_suite(const std::string& name, const BialgebraOps<B>& alg,
                            const std::vector<B>& corpus, Render render) {
  BialgebraReport r = check_bialgebra(alg, corpus, render);
  return {name, r.all_passed(), r.all_passed() ? "" : describe(r)};
}

// A suite that passes exactly when the laws break the documented way.
template <class B, class Render>
SuiteResult designed_failure_suite(const std::string& name,
                                   const BialgebraOps<B>& alg,
                                   const std::vector<B>& corpus, Render render,
                                   bool coassoc, bool counit, bool morphism) {
  BialgebraReport r = check_bialgebra(alg, corpus, render);
  bool as_designed = r.coassoc.passed == coassoc &&
                     r.counit_laws.passed == counit &&
                     r.morphism.passed == morphism;
  std::string why;
  if (!as_designed) {
    auto state = [](const char* law, bool got, bool want) {
      return got == want ? std::string()
                         : std::string(law) + (got ? " held" : " failed");
    };
    for (const auto& part : {state("coassociativity", r.coassoc.passed, coassoc),
                             state("counit laws", r.counit_laws.passed, counit),
                             state("morphism laws", r.morphism.passed, morphism)})
      if (!part.empty()) why += (why.empty() ? "" : "; ") + part;
  }
  return {name, as_designed, why};
}

template <class B, class Render>
SuiteResult grading_suite_one(SuiteResult acc, const BialgebraOps<B>& alg,
                              const std::vector<B>& corpus, Render render) {
  if (!acc.passed) return acc;
  auto fail = [&](std::string why) {
    acc.passed = false;
    acc.detail = alg.name + ": " + std::move(why);
    return acc;
  };
  for (const B& b : corpus)
    if (alg.degree(b) == 0 && !(b == alg.unit))
      return fail("degree-0 element " + render(b) + " besides the unit");
  for (const B& b : corpus)
    for (const auto& [t, c] : alg.coproduct(b).terms()) {
      (void)c;
      if (alg.degree(t.left) + alg.degree(t.right) != alg.degree(b))
        return fail("coproduct of " + render(b) + " has an off-degree term");
    }
  for (const B& x : corpus)
    for (const B& y : corpus) {
      int want = alg.degree(x) + alg.degree(y);
      for (const auto& [b, c] : alg.product(x, y).terms()) {
        (void)c;
        if (alg.degree(b) != want)
          return fail("product " + render(x) + " * " + render(y) +
                      " is not degree-additive");
      }
    }
  acc.passed = true;
  return acc;
}

template <class B>
SuiteResult expects_no_antipode(const std::string& name,
                                const BialgebraOps<B>& alg, const B& probe,
                                const std::string& shown) {
  try {
    antipode(alg, LinComb<B>(probe));
  } catch (const NoAntipodeError&) {
    return {name, true, ""};
  }
  return {name, false, "antipode of " + shown + " was produced"};
}

// All spellings of a trace class, by closing under adjacent commuting swaps.
std::vector<Word> class_members(const Word& w, const CommutationGraph& theta) {
  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::string cur = queue[i].letters;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!theta.commutes(cur[p], cur[p + 1])) continue;
      std::string next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(Word(next)).second) queue.push_back(Word(next));
    }
  }
  return queue;
}

SuiteResult antipode_series_vs_reversal(int len_cap) {
  SuiteResult r{"antipode: series matches signed reversal on concat words (q=0)",
                true, ""};
  Alphabet ab("ab");
  auto alg = make_free_concat_unshuffle(ab, Rational(0));
  AntipodeSeries<Word> series(alg);
  for (const Word& w : words_up_to(ab, len_cap)) {
    std::string rev(w.letters.rbegin(), w.letters.rend());
    LinComb<Word> want(Word(rev),
                       Rational(w.letters.size() % 2 == 0 ? 1 : -1));
    if (!(series.partial_sum(w) == want) ||
        !antipode_identity_holds(alg, series.as_map(), w)) {
      r.passed = false;
      r.detail = "mismatch at " + basis_str(w);
      break;
    }
  }
  return r;
}

SuiteResult antipode_two_sided_infiltration(int len_cap) {
  SuiteResult r{"antipode: two-sided identity for infiltration words (q=1/2)",
                true, ""};
  Alphabet ab("ab");
  auto alg = make_shuffle_deconcat(ab, Rational(1, 2));
  try {
    for (const Word& w : words_up_to(ab, len_cap))
      antipode(alg, LinComb<Word>(w));
  } catch (const NoAntipodeError&) {
    r.passed = false;
    r.detail = "identity failed on some word";
  }
  return r;
}

SuiteResult antipode_antimorphism(int len_cap) {
  SuiteResult r{"antipode: antimorphism S(xy) = S(y) S(x)", true, ""};
  Alphabet ab("ab");
  const std::vector<BialgebraOps<Word>> algs = {
      make_free_concat_unshuffle(ab, Rational(0)),
      make_shuffle_deconcat(ab, Rational(1, 2))};
  for (const auto& alg : algs) {
    for (const Word& x : words_up_to(ab, len_cap))
      for (const Word& y : words_up_to(ab, len_cap)) {
        LinComb<Word> lhs = antipode(alg, alg.product(x, y));
        LinComb<Word> rhs = alg_product(alg, antipode(alg, LinComb<Word>(y)),
                                        antipode(alg, LinComb<Word>(x)));
        if (!(lhs == rhs)) {
          r.passed = false;
          r.detail = alg.name + ": " + basis_str(x) + ", " + basis_str(y);
          return r;
        }
      }
  }
  return r;
}

SuiteResult antipode_group_inverse() {
  SuiteResult r{"antipode: group algebras use the inverse", true, ""};
  for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    auto alg = make_group_algebra(g);
    if (!alg.antipode_closed) {
      r.passed = false;
      r.detail = g->name() + ": no closed form installed";
      return r;
    }
    LinMap<GroupElem> s([&alg](const GroupElem& e) {
      return LinComb<GroupElem>(alg.antipode_closed(e));
    });
    for (const GroupElem& e : group_corpus(g))
      if (!antipode_identity_holds(alg, s, e)) {
        r.passed = false;
        r.detail = g->name() + ": identity failed on " + basis_str(e);
        return r;
      }
  }
  return r;
}

SuiteResult antipode_binomial_parity(int deg_cap) {
  SuiteResult r{"antipode: binomial polynomials get the parity sign", true, ""};
  Alphabet xy("xy");
  auto alg = make_poly_binomial(xy);
  try {
    for (const Monomial& m : monomials_up_to(xy, deg_cap)) {
      LinComb<Monomial> want(m, Rational(m.degree() % 2 == 0 ? 1 : -1));
      if (!(antipode(alg, LinComb<Monomial>(m)) == want)) {
        r.passed = false;
        r.detail = "S(" + basis_str(m) + ") is not (-1)^deg times it";
        return r;
      }
    }
  } catch (const NoAntipodeError&) {
    r.passed = false;
    r.detail = "series did not converge on a monomial";
  }
  return r;
}

SuiteResult duality_suite() {
  SuiteResult r{"duality: q-coproduct pairs with the infiltration product",
                true, ""};
  Alphabet ab("ab");
  const std::vector<Rational> qs = {Rational(0), Rational(1), Rational(1, 2)};
  for (const Rational& q : qs)
    for (const Word& u : words_up_to(ab, 4))
      for (const Word& v : words_up_to(ab, 4)) {
        if (u.letters.size() + v.letters.size() > 4) continue;
        for (const Word& w : words_up_to(ab, 4))
          if (!duality_check(u, v, w, q)) {
            r.passed = false;
            r.detail = "(" + basis_str(u) + ", " + basis_str(v) + ", " +
                       basis_str(w) + ") at q=" + q.str();
            return r;
          }
      }
  return r;
}

SuiteResult infiltration_degeneration() {
  SuiteResult r{"infiltration: q=0 keeps only full-length terms", true, ""};
  Alphabet ab("ab");
  for (const Word& u : words_up_to(ab, 3))
    for (const Word& v : words_up_to(ab, 3)) {
      std::size_t full = u.letters.size() + v.letters.size();
      for (const auto& [w, c] : infiltration(u, v, Rational(0)).terms()) {
        (void)c;
        if (w.letters.size() != full) {
          r.passed = false;
          r.detail = basis_str(u) + " with " + basis_str(v);
          return r;
        }
      }
    }
  return r;
}

SuiteResult trace_spelling_independence(int len_cap) {
  SuiteResult r{"trace coproduct is independent of the spelling", true, ""};
  Alphabet abc("abc");
  CommutationGraph theta = CommutationGraph::parse("ac");
  using TB = TensorBasis<TraceWord, TraceWord>;
  std::set<TraceWord> done;
  for (const Word& w : words_up_to(abc, len_cap)) {
    TraceWord cls = trace_normal_form(w, theta);
    if (!done.insert(cls).second) continue;
    std::optional<LinComb<TB>> base;
    for (const Word& m : class_members(cls.normal_form, theta)) {
      LinComb<TB> proj;
      for (const auto& [t, c] : coproduct_q(m, Rational(0)).terms())
        proj.add_term(TB{trace_normal_form(t.left, theta),
                         trace_normal_form(t.right, theta)},
                      c);
      if (!base) {
        base = std::move(proj);
      } else if (!(*base == proj)) {
        r.passed = false;
        r.detail = "class " + basis_str(cls) + ", spelling " + basis_str(m);
        return r;
      }
    }
  }
  return r;
}

SuiteResult diagram_quotient_morphism(int edge_cap) {
  SuiteResult r{"diagram quotient respects product and coproduct", true, ""};
  auto ldiag = make_ldiag();
  auto diag = make_diag();
  auto corpus = labelled_diagrams_up_to(edge_cap, 3);
  using TB = TensorBasis<Diagram, Diagram>;
  for (const LabelledDiagram& d : corpus) {
    Diagram cls = diag_canonical(d);
    LinComb<TB> projected;
    for (const auto& [t, c] : ldiag.coproduct(d).terms())
      projected.add_term(TB{diag_canonical(t.left), diag_canonical(t.right)}, c);
    if (!(projected == diag.coproduct(cls))) {
      r.passed = false;
      r.detail = "coproduct of " + basis_str(d);
      return r;
    }
  }
  for (const LabelledDiagram& a : corpus)
    for (const LabelledDiagram& b : corpus) {
      LinComb<Diagram> lifted;
      for (const auto& [d, c] : ldiag.product(a, b).terms())
        lifted.add_term(diag_canonical(d), c);
      if (!(lifted == diag.product(diag_canonical(a), diag_canonical(b)))) {
        r.passed = false;
        r.detail = basis_str(a) + " * " + basis_str(b);
        return r;
      }
    }
  return r;
}

SuiteResult grading_suite(int word_cap, int deg_cap, int edge_cap) {
  SuiteResult acc{"grading: degree additivity and compatibility", true, ""};
  Alphabet ab("ab");
  Alphabet abc("abc");
  Alphabet xy("xy");
  CommutationGraph theta = CommutationGraph::parse("ac");
  auto wr = [](const Word& w) { return basis_str(w); };
  acc = grading_suite_one(std::move(acc),
                          make_free_concat_unshuffle(ab, Rational(0)),
                          words_up_to(ab, word_cap), wr);
  acc = grading_suite_one(std::move(acc), make_shuffle_deconcat(ab, Rational(0)),
                          words_up_to(ab, word_cap), wr);
  acc = grading_suite_one(std::move(acc), make_poly_binomial(xy),
                          monomials_up_to(xy, deg_cap),
                          [](const Monomial& m) { return basis_str(m); });
  acc = grading_suite_one(std::move(acc), make_trace_unshuffle(abc, theta),
                          trace_classes_up_to(abc, theta, 3),
                          [](const TraceWord& t) { return basis_str(t); });
  acc = grading_suite_one(std::move(acc), make_ldiag(),
                          labelled_diagrams_up_to(edge_cap, 3),
                          [](const LabelledDiagram& d) { return basis_str(d); });
  acc = grading_suite_one(std::move(acc), make_diag(),
                          diagram_classes_up_to(edge_cap, 3),
                          [](const Diagram& d) { return basis_str(d); });
  return acc;
}

SuiteResult plane_model_rep() {
  SuiteResult r{"representations: plane model kills 1+c+c2, regular does not",
                true, ""};
  auto g = FiniteGroup::cyclic(3);
  auto plane = c3_plane_rep(g);
  LinComb<GroupElem> all;
  for (const GroupElem& e : group_corpus(g)) all.add_term(e, Rational(1));
  if (!rep_apply(plane, all).is_zero()) {
    r.passed = false;
    r.detail = "plane model of 1+c+c2 is nonzero";
    return r;
  }
  if (!(rep_apply(plane, LinComb<GroupElem>(GroupElem{g, 0})) ==
        Matrix<CycOmega>::identity(2))) {
    r.passed = false;
    r.detail = "plane model of the unit is not the identity";
    return r;
  }
  auto reg = regular_rep(g);
  Matrix<Rational> sum = rep_apply(reg, all);
  if (sum.is_zero()) {
    r.passed = false;
    r.detail = "regular model of 1+c+c2 vanished";
    return r;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(sum.at(i, j) == Rational(1))) {
        r.passed = false;
        r.detail = "regular model of 1+c+c2 is not all-ones";
        return r;
      }
  return r;
}

template <class T>
bool tensor_rep_multiplicative(const MatrixRep<GroupElem, T>& r1,
                               const MatrixRep<GroupElem, T>& r2,
                               const BialgebraOps<GroupElem>& alg,
                               const std::vector<GroupElem>& corpus) {
  auto t = rep_tensor(r1, r2, alg, corpus);
  return rep_is_morphism(t, alg, corpus);
}

SuiteResult tensor_rep_suite() {
  SuiteResult r{"representations: tensor action is multiplicative (C3, S3)",
                true, ""};
  auto c3 = FiniteGroup::cyclic(3);
  auto algC3 = make_group_algebra(c3);
  if (!tensor_rep_multiplicative<CycOmega>(c3_plane_rep(c3), c3_plane_rep(c3),
                                           algC3, group_corpus(c3))) {
    r.passed = false;
    r.detail = "plane (x) plane on C3";
    return r;
  }
  auto s3 = FiniteGroup::symmetric(3);
  auto algS3 = make_group_algebra(s3);
  if (!tensor_rep_multiplicative<Rational>(sign_rep(s3), regular_rep(s3), algS3,
                                           group_corpus(s3))) {
    r.passed = false;
    r.detail = "sign (x) regular on S3";
  }
  return r;
}

SuiteResult bell_numbers_suite() {
  SuiteResult r{"bell numbers: enumeration, recurrence, polynomial coefficients",
                true, ""};
  auto fail = [&r](std::string why) {
    r.passed = false;
    r.detail = std::move(why);
    return r;
  };
  for (int n = 0; n <= 8; ++n) {
    BigInt b = bell(n);
    if (BigInt(set_partitions(n).size()) != b)
      return fail("enumeration disagrees at n=" + std::to_string(n));
    BigInt row_sum = 0;
    for (int k = 0; k <= n; ++k) row_sum += stirling2(n, k);
    if (row_sum != b)
      return fail("column sums disagree at n=" + std::to_string(n));
    LinComb<Monomial> poly = bell_polynomial(n);
    Rational at_one;
    for (const auto& [m, c] : poly.terms()) {
      int k = m.degree();
      if (Rational(stirling2(n, k)) != c)
        return fail("polynomial coefficient off at n=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
      at_one = at_one + c;
    }
    if (at_one != Rational(b))
      return fail("polynomial at 1 disagrees at n=" + std::to_string(n));
  }
  if (bell(10) != BigInt(115975)) return fail("bell(10) is off");
  return r;
}

SuiteResult egf_suite(int order) {
  SuiteResult r{"exponential series: exp/log inverse, two-mode factorization",
                true, ""};
  std::vector<Rational> cs(order + 1);
  for (int n = 1; n <= order; ++n) cs[n] = Rational(1, n + 1);
  EGFSeries<Rational> f(cs);
  if (!(egf_log(egf_exp(f)) == f)) {
    r.passed = false;
    r.detail = "log(exp(f)) differed from f";
    return r;
  }
  auto pure_exp = [order](char base) {
    std::vector<LinComb<Monomial>> lin(order + 1);
    lin[1] = LinComb<Monomial>(Monomial().mul_var(Var{base, 0}, 1));
    return egf_exp(EGFSeries<LinComb<Monomial>>(lin));
  };
  SymbolicEGF el = pure_exp('l');
  SymbolicEGF ev = pure_exp('v');
  for (int n = 0; n <= order; ++n) {
    Monomial ln, vn, both;
    ln.mul_var(Var{'l', 0}, n);
    vn.mul_var(Var{'v', 0}, n);
    both.mul_var(Var{'l', 0}, n).mul_var(Var{'v', 0}, n);
    if (!(el.coeff(n) == LinComb<Monomial>(ln)) ||
        !(ev.coeff(n) == LinComb<Monomial>(vn))) {
      r.passed = false;
      r.detail = "exp of a one-mode series is off at order " + std::to_string(n);
      return r;
    }
    if (!(hadamard(el, ev).coeff(n) == LinComb<Monomial>(both))) {
      r.passed = false;
      r.detail = "two-mode factorization is off at order " + std::to_string(n);
      return r;
    }
  }
  return r;
}

SuiteResult hadamard_routes_suite(int order) {
  SuiteResult r{"hadamard product: three routes agree", true, ""};
  SymbolicEGF via_exp = hadamard_via_exp(order);
  if (!(via_exp == hadamard_via_partitions(order))) {
    r.passed = false;
    r.detail = "partition route disagrees with the exp route";
    return r;
  }
  if (!(via_exp == hadamard_via_diagrams(order))) {
    r.passed = false;
    r.detail = "diagram route disagrees with the exp route";
  }
  return r;
}

SuiteResult multiplicity_suite(int n_cap) {
  SuiteResult r{"diagram multiplicities sum to squared bell numbers", true, ""};
  for (int n = 0; n <= n_cap; ++n) {
    BigInt total = 0;
    for (const auto& [d, m] : diagram_multiplicities(n)) {
      (void)d;
      total += m;
    }
    if (total != bell(n) * bell(n)) {
      r.passed = false;
      r.detail = "n=" + std::to_string(n);
      return r;
    }
  }
  return r;
}

}  // namespace

int env_max_degree(int fallback) {
  const char* raw = std::getenv("HOPFCALC_MAX_DEGREE");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return clamp_int(static_cast<int>(v), 1, 12);
}

std::vector<SuiteResult> run_property_suites(int max_degree) {
  std::vector<SuiteResult> out;
  const int word_cap = clamp_int(max_degree, 1, 4);
  const int deg_cap = clamp_int(max_degree, 1, 4);
  const int edge_cap = clamp_int(max_degree, 1, 4);

  Alphabet ab("ab");
  Alphabet ac("ac");
  Alphabet abc("abc");
  Alphabet xy("xy");
  CommutationGraph theta = CommutationGraph::parse("ac");
  auto wr = [](const Word& w) { return basis_str(w); };

  for (const Rational& q : {Rational(0), Rational(1), Rational(1, 2)})
    out.push_back(bialgebra_suite(
        "bialgebra laws: concat with q-unshuffle coproduct, q=" + q.str(),
        make_free_concat_unshuffle(ab, q), words_up_to(ab, word_cap), wr));
  out.push_back(bialgebra_suite(
      "bialgebra laws: q-infiltration with deconcat coproduct, q=1",
      make_shuffle_deconcat(ab, Rational(1)), words_up_to(ab, word_cap), wr));
  out.push_back(bialgebra_suite(
      "bialgebra laws: polynomials with binomial coproduct",
      make_poly_binomial(xy), monomials_up_to(xy, deg_cap),
      [](const Monomial& m) { return basis_str(m); }));
  auto tr = [](const TraceWord& t) { return basis_str(t); };
  out.push_back(bialgebra_suite(
      "bialgebra laws: trace classes, fully commuting pair",
      make_trace_unshuffle(ac, theta), trace_classes_up_to(ac, theta, word_cap),
      tr));
  out.push_back(bialgebra_suite(
      "bialgebra laws: trace classes, partial commutation",
      make_trace_unshuffle(abc, theta),
      trace_classes_up_to(abc, theta, clamp_int(max_degree, 1, 3)), tr));
  auto ger = [](const GroupElem& e) { return basis_str(e); };
  out.push_back(bialgebra_suite("bialgebra laws: group algebra C3",
                                make_group_algebra(FiniteGroup::cyclic(3)),
                                group_corpus(FiniteGroup::cyclic(3)), ger));
  out.push_back(bialgebra_suite("bialgebra laws: group algebra S3",
                                make_group_algebra(FiniteGroup::symmetric(3)),
                                group_corpus(FiniteGroup::symmetric(3)), ger));
  out.push_back(bialgebra_suite(
      "bialgebra laws: labelled diagrams", make_ldiag(),
      labelled_diagrams_up_to(edge_cap, 3),
      [](const LabelledDiagram& d) { return basis_str(d); }));
  out.push_back(bialgebra_suite("bialgebra laws: diagram classes", make_diag(),
                                diagram_classes_up_to(edge_cap, 3),
                                [](const Diagram& d) { return basis_str(d); }));

  out.push_back(designed_failure_suite(
      "designed failure: deconcat coproduct is not a concat morphism",
      make_cauchy_concat_mismatch(ab), words_up_to(ab, 2), wr,
      /*coassoc=*/true, /*counit=*/true, /*morphism=*/false));
  out.push_back(designed_failure_suite(
      "designed failure: letter-swap coproduct is not coassociative",
      make_example2_swap(), words_up_to(ab, 2), wr,
      /*coassoc=*/false, /*counit=*/false, /*morphism=*/true));

  out.push_back(antipode_series_vs_reversal(clamp_int(max_degree + 2, 1, 6)));
  out.push_back(antipode_two_sided_infiltration(word_cap));
  out.push_back(antipode_antimorphism(2));
  out.push_back(antipode_group_inverse());
  out.push_back(antipode_binomial_parity(deg_cap));
  out.push_back(expects_no_antipode(
      "antipode: none for concat words at q=1",
      make_free_concat_unshuffle(ab, Rational(1)), Word("a"), "a"));
  out.push_back(expects_no_antipode("antipode: none for grouplike words",
                                    make_free_grouplike(ab), Word("a"), "a"));

  out.push_back(duality_suite());
  out.push_back(infiltration_degeneration());
  out.push_back(trace_spelling_independence(word_cap));
  out.push_back(diagram_quotient_morphism(clamp_int(max_degree, 1, 3)));
  out.push_back(grading_suite(word_cap, deg_cap, clamp_int(max_degree, 1, 3)));

  out.push_back(plane_model_rep());
  out.push_back(tensor_rep_suite());

  out.push_back(bell_numbers_suite());
  out.push_back(egf_suite(clamp_int(max_degree + 2, 2, 6)));
  out.push_back(hadamard_routes_suite(clamp_int(max_degree + 1, 2, 5)));
  out.push_back(multiplicity_suite(clamp_int(max_degree, 1, 4)));
  return out;
}

}  // namespace hopfcalc
