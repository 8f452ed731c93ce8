#pragma once

#include <string>

#include "hopfcalc/diagram.hpp"
#include "hopfcalc/egf.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/lincomb.hpp"
#include "hopfcalc/monomial.hpp"
#include "hopfcalc/trace.hpp"
#include "hopfcalc/word.hpp"

namespace hopfcalc {

// Canonical text for a single basis element. The unit element of every kind
// renders as "1".
std::string basis_str(const Word& w);
std::string basis_str(const Monomial& m);
std::string basis_str(const TraceWord& t);
std::string basis_str(const GroupElem& g);
std::string basis_str(const LabelledDiagram& d);
std::string basis_str(const Diagram& d);

template <class L, class R>
std::string basis_str(const TensorBasis<L, R>& t) {
  return basis_str(t.left) + " (x) " + basis_str(t.right);
}

std::string multi_index_str(const MultiIndex& m);

// Canonical rendering of a linear combination: terms in ascending basis
// order, reduced fractional coefficients, "1*" omitted, the unit basis
// element shown as its bare coefficient, zero as "0". format_lc composed
// with the matching parser is the identity.
template <class B>
std::string format_lc(const LinComb<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    std::string base = basis_str(b);
    std::string piece;
    if (base == "1")
      piece = mag.str();
    else if (mag == Rational(1))
      piece = base;
    else
      piece = mag.str() + "*" + base;
    if (first) {
      out += neg ? "-" + piece : piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace hopfcalc
