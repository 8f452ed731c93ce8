#pragma once

#include <map>

#include "hopfcalc/egf.hpp"
#include "hopfcalc/partitions.hpp"

namespace hopfcalc {

using SymbolicEGF = EGFSeries<LinComb<Monomial>>;

// prod_k X_{base k}^{type[k]} as a monomial, e.g. type {3:2,5:1} with base L
// gives L3^2 L5.
Monomial type_monomial(const PartitionType& type, char base);

// Generic moment series exp(sum_{n>=1} X_n z^n/n!) in variables X_1..X_order.
SymbolicEGF generic_moment_series(char base, int order);

// Route 1, coefficientwise: expand F = exp(sum L_n z^n/n!) and
// G = exp(sum V_n z^n/n!) with egf_exp and take the Hadamard product.
SymbolicEGF hadamard_via_exp(int order);

// Route 2: n-th coefficient is sum over ordered pairs of set partitions of
// {1..n} of L^Type(P1) V^Type(P2).
SymbolicEGF hadamard_via_partitions(int order);

// Route 3: the same sum grouped by diagram class,
// sum_d mult(d) L^beta(d) V^alpha(d). Rows of the incidence matrix are the
// blocks of P1, so the black/row spot type beta pairs with the L variables
// and the white/column type alpha with V; pairing them the other way breaks
// agreement with route 2.
SymbolicEGF hadamard_via_diagrams(int order);

// Diagram class -> number of ordered partition pairs of {1..n} producing it.
std::map<Diagram, BigInt> diagram_multiplicities(int n);

// Multiplicity of one diagram class among partition pairs of {1..|d|}.
BigInt mult_of_diagram(const Diagram& d);

}  // namespace hopfcalc
