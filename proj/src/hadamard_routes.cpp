#include "hopfcalc/hadamard_routes.hpp"

namespace hopfcalc {

Monomial type_monomial(const PartitionType& type, char base) {
  Monomial m;
  for (const auto& [size, count] : type) m.mul_var(Var{base, size}, count);
  return m;
}

SymbolicEGF generic_moment_series(char base, int order) {
  SymbolicEGF f(order);
  for (int n = 1; n <= order; ++n)
    f.coeff(n) = LinComb<Monomial>(Monomial().mul_var(Var{base, n}, 1));
  return f;
}

SymbolicEGF hadamard_via_exp(int order) {
  return hadamard(egf_exp(generic_moment_series('L', order)),
                  egf_exp(generic_moment_series('V', order)));
}

SymbolicEGF hadamard_via_partitions(int order) {
  SymbolicEGF h(order);
  for (int n = 0; n <= order; ++n) {
    LinComb<Monomial> acc;
    auto parts = set_partitions(n);
    for (const auto& p1 : parts)
      for (const auto& p2 : parts)
        acc.add_term(mono_mul(type_monomial(p1.type(), 'L'),
                              type_monomial(p2.type(), 'V')),
                     Rational(1));
    h.coeff(n) = acc;
  }
  return h;
}

std::map<Diagram, BigInt> diagram_multiplicities(int n) {
  std::map<Diagram, BigInt> mult;
  auto parts = set_partitions(n);
  for (const auto& p1 : parts)
    for (const auto& p2 : parts)
      ++mult[diag_canonical(diagram_from_partitions(p1, p2))];
  return mult;
}

SymbolicEGF hadamard_via_diagrams(int order) {
  SymbolicEGF h(order);
  for (int n = 0; n <= order; ++n) {
    LinComb<Monomial> acc;
    for (const auto& [d, mult] : diagram_multiplicities(n)) {
      auto [alpha, beta] = spot_types(d.canon);
      acc.add_term(mono_mul(type_monomial(beta, 'L'), type_monomial(alpha, 'V')),
                   Rational(mult));
    }
    h.coeff(n) = acc;
  }
  return h;
}

BigInt mult_of_diagram(const Diagram& d) {
  const int n = d.degree();
  auto mult = diagram_multiplicities(n);
  auto it = mult.find(d);
  return it == mult.end() ? BigInt(0) : it->second;
}

}  // namespace hopfcalc
