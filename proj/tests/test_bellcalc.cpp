#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hopfcalc/egf.hpp"
#include "hopfcalc/hadamard_routes.hpp"
#include "hopfcalc/partitions.hpp"
#include "oracles.hpp"

using namespace hopfcalc;

namespace {

EGFSeries<Rational> rat_series(std::vector<long> cs) {
  std::vector<Rational> v(cs.begin(), cs.end());
  return EGFSeries<Rational>(std::move(v));
}

Rational coeff_sum(const LinComb<Monomial>& p) {
  Rational s;
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    s += c;
  }
  return s;
}

}  // namespace

TEST_CASE("Stirling numbers of the second kind match the recurrence") {
  CHECK(stirling2(0, 0) == BigInt(1));
  CHECK(stirling2(4, 2) == BigInt(7));
  CHECK(stirling2(5, 3) == BigInt(25));
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n + 1; ++k)
      CHECK(stirling2(n, k) == BigInt(static_cast<long>(oracle::stirling_rec(n, k))));
  CHECK(stirling2(6, 0) == BigInt(0));
  CHECK(stirling2(3, 7) == BigInt(0));
}

TEST_CASE("Bell numbers: triangle, column sums, and raw enumeration agree") {
  std::vector<long> first = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n < static_cast<int>(first.size()); ++n) {
    CHECK(bell(n) == BigInt(first[static_cast<std::size_t>(n)]));
    CHECK(bell(n) == BigInt(static_cast<long>(oracle::bell_triangle(n))));
    BigInt cols(0);
    for (int k = 0; k <= n; ++k) cols += stirling2(n, k);
    CHECK(bell(n) == cols);
  }
  CHECK(bell(10) == BigInt(115975));
  for (int n = 0; n <= 8; ++n)
    CHECK(bell(n) == BigInt(static_cast<long>(set_partitions(n).size())));
}

TEST_CASE("partitions with k blocks are counted by Stirling numbers") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<long> by_blocks(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : set_partitions(n)) ++by_blocks[p.blocks.size()];
    for (int k = 0; k <= n; ++k)
      CHECK(BigInt(by_blocks[static_cast<std::size_t>(k)]) == stirling2(n, k));
  }
}

TEST_CASE("Bell polynomials collect Stirling numbers by block count") {
  Var y{'y', 0};
  LinComb<Monomial> b3;
  b3.add_term(Monomial().mul_var(y, 1), Rational(1));
  b3.add_term(Monomial().mul_var(y, 2), Rational(3));
  b3.add_term(Monomial().mul_var(y, 3), Rational(1));
  CHECK(bell_polynomial(3) == b3);
  CHECK(bell_polynomial(0) == LinComb<Monomial>(Monomial::one()));

  for (int n = 0; n <= 8; ++n) {
    const auto p = bell_polynomial(n);
    for (int k = 0; k <= n; ++k) {
      Monomial yk = k == 0 ? Monomial::one() : Monomial().mul_var(y, k);
      CHECK(p.coeff(yk) == Rational(stirling2(n, k)));
    }
    CHECK(coeff_sum(p) == Rational(bell(n)));  // evaluate at y = 1
  }
}

TEST_CASE("EGF multiplication is binomial convolution") {
  auto ez = rat_series({1, 1, 1, 1, 1, 1});
  auto prod = egf_mul(ez, ez);
  for (int n = 0; n <= 5; ++n) CHECK(prod.coeff(n) == Rational(1L << n));

  auto z = rat_series({0, 1, 0, 0});
  auto z2 = egf_mul(z, z);
  CHECK(z2 == rat_series({0, 0, 2, 0}));

  CHECK_THROWS_AS(egf_mul(ez, z), OrderMismatchError);
  CHECK_THROWS_AS(EGFSeries<Rational>(std::vector<Rational>{}), OrderMismatchError);
}

TEST_CASE("exp and log are mutually inverse at fixed order") {
  auto z = rat_series({0, 1, 0, 0, 0, 0});
  auto ez = egf_exp(z);
  for (int n = 0; n <= 5; ++n) CHECK(ez.coeff(n) == Rational(1));
  CHECK(egf_log(ez) == z);

  auto f = EGFSeries<Rational>(std::vector<Rational>{
      Rational(0), Rational(2), Rational(-1, 3), Rational(5), Rational(0),
      Rational(7, 2)});
  CHECK(egf_log(egf_exp(f)) == f);
  auto g = egf_exp(f);
  CHECK(egf_exp(egf_log(g)) == g);

  CHECK_THROWS_AS(egf_exp(rat_series({1, 1})), NonzeroConstantTermError);
  CHECK_THROWS_AS(egf_log(rat_series({0, 1})), NonzeroConstantTermError);
}

TEST_CASE("coefficientwise Hadamard product") {
  auto a = rat_series({1, 1, 2, 6});
  auto b = rat_series({1, 1, 1, 1});
  CHECK(hadamard(a, b) == a);
  CHECK(hadamard(a, a) == rat_series({1, 1, 4, 36}));
  CHECK_THROWS_AS(hadamard(a, rat_series({1, 1})), OrderMismatchError);
}

TEST_CASE("exp of y(e^z - 1) generates the Bell polynomials") {
  const int order = 8;
  Var y{'y', 0};
  SymbolicEGF inner(order);
  for (int n = 1; n <= order; ++n)
    inner.coeff(n) = LinComb<Monomial>(Monomial().mul_var(y, 1));
  auto expd = egf_exp(inner);
  CHECK(expd.coeff(0) == LinComb<Monomial>(Monomial::one()));
  for (int n = 0; n <= order; ++n) CHECK(expd.coeff(n) == bell_polynomial(n));
}

TEST_CASE("exp of a one-mode series stacks powers of the mode variable") {
  const int order = 6;
  Var l1{'L', 1};
  SymbolicEGF lam(order);
  lam.coeff(1) = LinComb<Monomial>(Monomial().mul_var(l1, 1));
  auto e = egf_exp(lam);
  for (int n = 0; n <= order; ++n) {
    Monomial ln = n == 0 ? Monomial::one() : Monomial().mul_var(l1, n);
    CHECK(e.coeff(n) == LinComb<Monomial>(ln));
  }
}

TEST_CASE("three expansions of the Hadamard product of moment series agree") {
  const int order = 5;
  auto via_exp = hadamard_via_exp(order);
  auto via_parts = hadamard_via_partitions(order);
  auto via_diag = hadamard_via_diagrams(order);
  CHECK(via_exp == via_parts);
  CHECK(via_parts == via_diag);

  // Order-2 coefficient written out: L2V2 + L1^2 V2 + L2 V1^2 + L1^2 V1^2.
  Var l1{'L', 1}, l2{'L', 2}, v1{'V', 1}, v2{'V', 2};
  LinComb<Monomial> c2;
  c2.add_term(Monomial().mul_var(l2, 1).mul_var(v2, 1), Rational(1));
  c2.add_term(Monomial().mul_var(l1, 2).mul_var(v2, 1), Rational(1));
  c2.add_term(Monomial().mul_var(l2, 1).mul_var(v1, 2), Rational(1));
  c2.add_term(Monomial().mul_var(l1, 2).mul_var(v1, 2), Rational(1));
  CHECK(via_parts.coeff(2) == c2);

  // Setting every variable to 1 counts ordered partition pairs: Bell squared.
  for (int n = 0; n <= order; ++n)
    CHECK(coeff_sum(via_parts.coeff(n)) == Rational(BigInt(bell(n) * bell(n))));
}

TEST_CASE("type monomials encode block-size multisets") {
  auto p = SetPartition::from_blocks({{1, 4, 6, 7, 8}, {2, 3, 5}, {9, 10, 11}});
  Monomial expect;
  expect.mul_var(Var{'L', 3}, 2).mul_var(Var{'L', 5}, 1);
  CHECK(type_monomial(p.type(), 'L') == expect);
  CHECK(type_monomial(PartitionType{}, 'V') == Monomial::one());
}

TEST_CASE("diagram multiplicities count the partition pairs in each class") {
  for (int n = 0; n <= 4; ++n) {
    auto mult = diagram_multiplicities(n);
    BigInt total(0);
    for (const auto& [d, m] : mult) {
      total += m;
      CHECK(m == oracle::multiplicity(d.canon.row_vectors(), n));
    }
    CHECK(total == bell(n) * bell(n));
  }
  // Every one-edge pair of partitions of {1} collapses to the single dot.
  auto one = diagram_multiplicities(1);
  CHECK(one.size() == 1);
  CHECK(one.begin()->second == BigInt(1));

  // The four classes on two edges: both partitions of {1,2} on each side.
  auto two = diagram_multiplicities(2);
  CHECK(two.size() == 4);
  for (const auto& [d, m] : two) {
    (void)d;
    CHECK(m == BigInt(1));
  }

  using M = std::vector<std::vector<int>>;
  auto d22 = diag_canonical(LabelledDiagram::from_rows(M{{2}}));
  CHECK(mult_of_diagram(d22) == BigInt(1));
  CHECK(mult_of_diagram(diag_canonical(LabelledDiagram::from_rows(M{{1, 1}}))) ==
        BigInt(1));
}
