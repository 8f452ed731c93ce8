#pragma once

#include <string>

#include "hopfcalc/diagram.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/lincomb.hpp"
#include "hopfcalc/monomial.hpp"
#include "hopfcalc/trace.hpp"
#include "hopfcalc/word.hpp"

namespace hopfcalc {

// Linear-combination expressions over each basis kind:
//
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := rational | rational '*' elem | elem
//   elem  := basis element in the kind's surface syntax, or "1" for the unit
//
// Words are runs of lowercase letters ("ab"); monomials allow per-letter
// exponents ("a^2b"); group elements go by name ("c2", "p213"); diagrams are
// matrix literals ("[[1,0],[0,2]]"). Whitespace is insignificant. A bare
// rational means rational * unit. Inverse of format_lc on canonical forms.
LinComb<Word> parse_word_expr(const std::string& text, const Alphabet& a);
LinComb<Monomial> parse_monomial_expr(const std::string& text, const Alphabet& a);
LinComb<TraceWord> parse_trace_expr(const std::string& text, const Alphabet& a,
                                    const CommutationGraph& theta);
LinComb<GroupElem> parse_group_expr(const std::string& text, const FiniteGroup::Ptr& g);
LinComb<LabelledDiagram> parse_ldiag_expr(const std::string& text);
LinComb<Diagram> parse_diag_expr(const std::string& text);

// Tensor expressions: terms are "u (x) v" (or "u ox v").
LinComb<TensorBasis<Word, Word>> parse_word_tensor_expr(const std::string& text,
                                                        const Alphabet& a);

// A single word argument ("1" or "" for the empty word).
Word parse_single_word(const std::string& text, const Alphabet& a);

// A single matrix literal.
LabelledDiagram parse_matrix_literal(const std::string& text);

}  // namespace hopfcalc
