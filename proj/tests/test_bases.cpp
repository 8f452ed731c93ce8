#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hopfcalc/corpus.hpp"
#include "hopfcalc/diagram.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/monomial.hpp"
#include "hopfcalc/partitions.hpp"
#include "hopfcalc/trace.hpp"
#include "hopfcalc/word.hpp"
#include "oracles.hpp"

using namespace hopfcalc;

TEST_CASE("alphabet membership and validation") {
  Alphabet ab("ab");
  CHECK(ab.size() == 2);
  CHECK(ab.contains('a'));
  CHECK(ab.contains('b'));
  CHECK(!ab.contains('c'));
  CHECK_NOTHROW(ab.require('b'));
  CHECK_THROWS_AS(ab.require('z'), UnknownLetterError);
  try {
    ab.require('z');
  } catch (const UnknownLetterError& e) {
    CHECK(std::string(e.what()) == "UnknownLetter: 'z'");
  }
  CHECK_THROWS_AS(Alphabet("aba"), UsageError);
  CHECK(Alphabet::full().size() == 26);
  CHECK(Alphabet::full().contains('q'));
}

TEST_CASE("word order is length first, then lexicographic") {
  Word e = Word::empty();
  Word a("a"), b("b"), aa("aa"), ab("ab"), ba("ba");
  CHECK(e < a);
  CHECK(a < b);
  CHECK(b < aa);  // shorter words always precede longer ones
  CHECK(aa < ab);
  CHECK(ab < ba);
  CHECK(concat(ab, ba) == Word("abba"));
  CHECK(concat(e, ab) == ab);
  CHECK(concat(ab, e) == ab);
}

TEST_CASE("subword picks 1-based positions in the order given") {
  Word w("abcd");
  CHECK(subword(w, {1, 3}) == Word("ac"));
  CHECK(subword(w, {4, 1}) == Word("da"));
  CHECK(subword(w, {}) == Word::empty());
  CHECK_THROWS_AS(subword(w, {0}), IndexOutOfRangeError);
  CHECK_THROWS_AS(subword(w, {5}), IndexOutOfRangeError);
}

TEST_CASE("words_up_to enumerates every word once, sorted") {
  auto ws = words_up_to(Alphabet("ab"), 4);
  CHECK(ws.size() == 31);  // 1 + 2 + 4 + 8 + 16
  CHECK(ws.front() == Word::empty());
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  std::set<Word> distinct(ws.begin(), ws.end());
  CHECK(distinct.size() == ws.size());
  CHECK(distinct.count(Word("abba")) == 1);
  CHECK(words_up_to(Alphabet("abc"), 2).size() == 13);  // 1 + 3 + 9
}

TEST_CASE("monomials accumulate exponents and order by degree") {
  Var x{'x', 0}, y{'y', 0}, x1{'x', 1};
  Monomial m;
  m.mul_var(x, 2).mul_var(y, 1).mul_var(x, 1);
  CHECK(m.degree() == 4);
  CHECK(m.exponents.at(x) == 3);
  CHECK_THROWS_AS(Monomial().mul_var(x, -1), IndexOutOfRangeError);

  Monomial one = Monomial::one();
  CHECK(one.is_one());
  CHECK(Monomial().mul_var(x, 0) == one);
  CHECK(mono_mul(m, one) == m);

  Monomial y3 = Monomial().mul_var(y, 3);
  CHECK(!(m < y3));  // deg 4 vs deg 3
  CHECK(y3 < m);
  // Same degree: exponent maps compare lexicographically, and subscripted
  // variables are distinct from the bare letter.
  CHECK(Monomial().mul_var(x, 2) < Monomial().mul_var(x1, 2));
  CHECK(monomials_up_to(Alphabet("xy"), 2).size() == 6);  // 1, x, y, x2, xy, y2
}

TEST_CASE("commutation graph parsing and symmetry") {
  auto theta = CommutationGraph::parse("ac,bd");
  CHECK(theta.commutes('a', 'c'));
  CHECK(theta.commutes('c', 'a'));
  CHECK(theta.commutes('d', 'b'));
  CHECK(!theta.commutes('a', 'b'));
  CHECK(!theta.commutes('a', 'a'));
  CHECK_THROWS_AS(CommutationGraph::parse("abc"), UsageError);
  CHECK_THROWS_AS(CommutationGraph::parse("aa"), UsageError);
  auto all = CommutationGraph::complete(Alphabet("abc"));
  CHECK(all.commutes('a', 'c'));
  CHECK(all.pairs().size() == 3);
  CHECK(CommutationGraph().pairs().empty());
}

TEST_CASE("three spellings of one partially commutative word coincide") {
  auto theta = CommutationGraph::parse("ac");
  TraceWord t1 = trace_normal_form(Word("acbcccbaac"), theta);
  TraceWord t2 = trace_normal_form(Word("cabcccbaca"), theta);
  TraceWord t3 = trace_normal_form(Word("cabcccbcaa"), theta);
  CHECK(t1 == t2);
  CHECK(t2 == t3);
  CHECK(t1.size() == 10);
}

TEST_CASE("trace normal form matches exhaustive class minimum") {
  Alphabet abc("abc");
  auto theta = CommutationGraph::parse("ac");
  for (const Word& w : words_up_to(abc, 6)) {
    TraceWord nf = trace_normal_form(w, theta);
    CHECK(nf.normal_form.letters == oracle::trace_min_spelling(w.letters, theta.pairs()));
    // Idempotent: the normal form is its own normal form.
    CHECK(trace_normal_form(nf.normal_form, theta) == nf);
  }
}

TEST_CASE("chained commutations need more than adjacent swaps of minima") {
  // With theta = {(a,b),(b,c)} the word cab admits c.ab -> c.ba -> bca via a
  // swap that first moves b left past a; any pass that only bubbles the
  // current minimum letter leftward stalls at cab.
  auto theta = CommutationGraph::parse("ab,bc");
  CHECK(trace_normal_form(Word("cab"), theta).normal_form == Word("bca"));
  CHECK(trace_normal_form(Word("cba"), theta).normal_form == Word("bca"));
  CHECK(trace_normal_form(Word("acb"), theta).normal_form == Word("abc"));
}

TEST_CASE("trace corpus counts classes, not spellings") {
  Alphabet abc("abc");
  auto theta = CommutationGraph::parse("ac");
  auto classes = trace_classes_up_to(abc, theta, 2);
  // Length 2 words: 9 spellings, but ac == ca, so 8 classes; plus 3 letters
  // and the empty class.
  CHECK(classes.size() == 12);
  CHECK(std::is_sorted(classes.begin(), classes.end()));
}

TEST_CASE("cyclic group table") {
  auto c4 = FiniteGroup::cyclic(4);
  CHECK(c4->size() == 4);
  CHECK(c4->name_of(0) == "1");
  CHECK(c4->name_of(3) == "c3");
  CHECK(c4->index_of("c2") == 2);
  CHECK(c4->index_of("nope") == -1);
  CHECK(c4->mul(3, 2) == 1);      // c3 * c2 = c5 = c
  CHECK(c4->inverse(1) == 3);
  CHECK(c4->inverse(0) == 0);
  CHECK(c4->mul(c4->inverse(2), 2) == FiniteGroup::identity());
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), UsageError);
}

TEST_CASE("symmetric group composition and inverses") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3->size() == 6);
  CHECK(s3->name_of(0) == "1");
  int p213 = s3->index_of("p213");
  int p231 = s3->index_of("p231");
  int p321 = s3->index_of("p321");
  int p312 = s3->index_of("p312");
  REQUIRE(p213 > 0);
  REQUIRE(p231 > 0);
  CHECK(s3->mul(p213, p213) == FiniteGroup::identity());
  // (s*t)(x) = s(t(x)): p231 after p213 sends 1->3, 2->2, 3->1.
  CHECK(s3->mul(p231, p213) == p321);
  CHECK(s3->inverse(p231) == p312);
  for (int i = 0; i < s3->size(); ++i) {
    CHECK(s3->mul(i, s3->inverse(i)) == 0);
    CHECK(s3->mul(s3->inverse(i), i) == 0);
    CHECK(s3->mul(0, i) == i);
    CHECK(s3->mul(i, 0) == i);
  }
  CHECK(FiniteGroup::symmetric(4)->size() == 24);
  CHECK_THROWS_AS(FiniteGroup::symmetric(7), UsageError);
}

TEST_CASE("group table validation rejects broken tables") {
  using T = std::vector<std::vector<int>>;
  CHECK_THROWS_AS(FiniteGroup::from_table("g", T{{0, 1}}, {"1", "g"}), UsageError);
  CHECK_THROWS_AS(FiniteGroup::from_table("g", T{{0, 1}, {1, 2}}, {"1", "g"}),
                  UsageError);  // entry out of range
  CHECK_THROWS_AS(FiniteGroup::from_table("g", T{{1, 0}, {0, 1}}, {"1", "g"}),
                  UsageError);  // index 0 not an identity
  CHECK_THROWS_AS(FiniteGroup::from_table("g", T{{0, 1}, {1, 1}}, {"1", "g"}),
                  UsageError);  // g*g = g kills the inverse
  // Klein four-group passes every check.
  auto v4 = FiniteGroup::from_table(
      "V4", T{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
      {"1", "x", "y", "xy"});
  CHECK(v4->mul(1, 2) == 3);
  CHECK(v4->inverse(3) == 3);
}

TEST_CASE("labelled diagrams reject non-packed matrices") {
  using M = std::vector<std::vector<int>>;
  CHECK_THROWS_AS(LabelledDiagram::from_rows(M{{}}), MalformedMatrixError);
  CHECK_THROWS_AS(LabelledDiagram::from_rows(M{{1, 0}, {1}}), MalformedMatrixError);
  CHECK_THROWS_AS(LabelledDiagram::from_rows(M{{1, -1}}), MalformedMatrixError);
  CHECK_THROWS_AS(LabelledDiagram::from_rows(M{{1, 1}, {0, 0}}), MalformedMatrixError);
  CHECK_THROWS_AS(LabelledDiagram::from_rows(M{{1, 0}, {1, 0}}), MalformedMatrixError);

  auto d = LabelledDiagram::from_rows(M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}});
  CHECK(d.rows() == 3);
  CHECK(d.cols() == 4);
  CHECK(d.degree() == 11);
  CHECK(d.row_vectors() == (M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}}));
  CHECK(LabelledDiagram::empty().degree() == 0);
  CHECK(LabelledDiagram::empty().rows() == 0);
}

TEST_CASE("superposition stacks block-diagonally") {
  using M = std::vector<std::vector<int>>;
  auto a = LabelledDiagram::from_rows(M{{1}});
  auto b = LabelledDiagram::from_rows(M{{2}, {1}});
  auto ab = ldiag_concat(a, b);
  CHECK(ab.row_vectors() == (M{{1, 0}, {0, 2}, {0, 1}}));
  auto ba = ldiag_concat(b, a);
  CHECK(ba.row_vectors() == (M{{2, 0}, {1, 0}, {0, 1}}));
  CHECK(ab.degree() == a.degree() + b.degree());
  CHECK(ldiag_concat(a, LabelledDiagram::empty()) == a);
  CHECK(ldiag_concat(LabelledDiagram::empty(), b) == b);
}

TEST_CASE("row restriction keeps chosen rows and repacks columns") {
  using M = std::vector<std::vector<int>>;
  auto d = LabelledDiagram::from_rows(M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}});
  CHECK(ldiag_restrict(d, {1, 3}).row_vectors() == (M{{2, 1, 0}, {0, 1, 2}}));
  CHECK(ldiag_restrict(d, {2}).row_vectors() == (M{{1, 1, 3}}));
  CHECK(ldiag_restrict(d, {1, 2, 3}) == d);
  CHECK(ldiag_restrict(d, {}) == LabelledDiagram::empty());
  CHECK_THROWS_AS(ldiag_restrict(d, {4}), IndexOutOfRangeError);
  CHECK_THROWS_AS(ldiag_restrict(d, {0}), IndexOutOfRangeError);
}

TEST_CASE("spot types read row and column sums as multisets") {
  using M = std::vector<std::vector<int>>;
  auto d = LabelledDiagram::from_rows(M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}});
  auto [alpha, beta] = spot_types(d);
  // Columns have degrees 1, 3, 5, 2; rows have degrees 3, 5, 3.
  CHECK(alpha == (MultiIndex{{1, 1}, {2, 1}, {3, 1}, {5, 1}}));
  CHECK(beta == (MultiIndex{{3, 2}, {5, 1}}));
}

TEST_CASE("canonical form equals brute-force minimum over all relabellings") {
  for (const auto& d : labelled_diagrams_up_to(4, 3)) {
    Diagram c = diag_canonical(d);
    CHECK(c.canon.row_vectors() == oracle::brute_canonical(d.row_vectors()));
    CHECK(diag_canonical(c.canon) == c);  // projection is idempotent
  }
}

TEST_CASE("row and column relabellings land in one class") {
  using M = std::vector<std::vector<int>>;
  auto d1 = LabelledDiagram::from_rows(M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}});
  auto d2 = LabelledDiagram::from_rows(M{{0, 0, 1, 2}, {0, 2, 1, 0}, {1, 0, 3, 1}});
  CHECK(diag_canonical(d1) == diag_canonical(d2));
  auto wide = std::vector<std::vector<int>>(1, std::vector<int>(9, 1));
  CHECK_THROWS_AS(diag_canonical(LabelledDiagram::from_rows(wide)), SizeLimitError);
}

TEST_CASE("diagram corpora are duplicate-free and graded") {
  auto labelled = labelled_diagrams_up_to(3, 3);
  std::set<LabelledDiagram> dl(labelled.begin(), labelled.end());
  CHECK(dl.size() == labelled.size());
  for (const auto& d : labelled) CHECK(d.degree() <= 3);
  CHECK(dl.count(LabelledDiagram::empty()) == 1);

  auto classes = diagram_classes_up_to(3, 3);
  std::set<Diagram> dc(classes.begin(), classes.end());
  CHECK(dc.size() == classes.size());
  for (const auto& c : classes)
    CHECK(c.canon.row_vectors() == oracle::brute_canonical(c.canon.row_vectors()));
  CHECK(classes.size() < labelled.size());
}

TEST_CASE("set partitions enumerate exactly the classical families") {
  for (int n = 0; n <= 7; ++n) {
    auto ours = set_partitions(n);
    auto ref = oracle::set_partitions(n);
    REQUIRE(ours.size() == ref.size());
    std::set<std::vector<std::vector<int>>> got, want;
    for (const auto& p : ours) got.insert(p.blocks);
    for (const auto& p : ref) want.insert(p);
    CHECK(got == want);
  }
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(0).front().blocks.empty());
  CHECK_THROWS_AS(set_partitions(-1), IndexOutOfRangeError);
  CHECK_THROWS_AS(set_partitions(15), SizeLimitError);
}

TEST_CASE("from_blocks canonicalizes and validates") {
  using B = std::vector<std::vector<int>>;
  auto p = SetPartition::from_blocks(B{{5, 3, 2}, {4, 1}});
  CHECK(p.blocks == (B{{1, 4}, {2, 3, 5}}));
  CHECK(p.ground_size() == 5);
  CHECK(p.type() == (MultiIndex{{2, 1}, {3, 1}}));
  CHECK_THROWS_AS(SetPartition::from_blocks(B{{1}, {}}), PartitionMismatchError);
  CHECK_THROWS_AS(SetPartition::from_blocks(B{{1, 2}, {2, 3}}), PartitionMismatchError);
  CHECK_THROWS_AS(SetPartition::from_blocks(B{{1}, {3}}), PartitionMismatchError);
}

TEST_CASE("incidence matrix of two partitions of an 11-element set") {
  using B = std::vector<std::vector<int>>;
  auto p1 = SetPartition::from_blocks(B{{2, 3, 5}, {1, 4, 6, 7, 8}, {9, 10, 11}});
  auto p2 = SetPartition::from_blocks(B{{1}, {2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11}});
  CHECK(p1.type() == (MultiIndex{{3, 2}, {5, 1}}));
  CHECK(p2.type() == (MultiIndex{{1, 1}, {2, 1}, {3, 1}, {5, 1}}));

  auto d = diagram_from_partitions(p1, p2);
  // Blocks sorted by least element, so p1's 5-block comes first.
  using M = std::vector<std::vector<int>>;
  CHECK(d.row_vectors() == (M{{1, 1, 3, 0}, {0, 2, 1, 0}, {0, 0, 1, 2}}));
  CHECK(d.row_vectors() == oracle::incidence(p1.blocks, p2.blocks));

  auto stated = LabelledDiagram::from_rows(M{{0, 2, 1, 0}, {1, 1, 3, 0}, {0, 0, 1, 2}});
  CHECK(diag_canonical(d) == diag_canonical(stated));

  auto single = SetPartition::from_blocks(B{{1, 2}});
  CHECK_THROWS_AS(diagram_from_partitions(p1, single), PartitionMismatchError);
}
