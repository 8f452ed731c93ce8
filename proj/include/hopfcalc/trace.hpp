#pragma once

#include <set>
#include <string>
#include <utility>

#include "hopfcalc/word.hpp"

namespace hopfcalc {

// Symmetric irreflexive set of commuting letter pairs (the independence
// relation theta of a partially commutative / trace monoid).
class CommutationGraph {
public:
  CommutationGraph() = default;
  explicit CommutationGraph(const std::set<std::pair<char, char>>& pairs);

  // "ac,bd" -> {(a,c),(b,d)}.
  static CommutationGraph parse(const std::string& text);
  static CommutationGraph complete(const Alphabet& a);

  bool commutes(char x, char y) const;
  const std::set<std::pair<char, char>>& pairs() const { return pairs_; }

private:
  std::set<std::pair<char, char>> pairs_;  // stored as (min,max)
};

// Trace class represented by its canonical spelling: the lexicographically
// smallest word in the equivalence class (unique, so equality of TraceWords
// is equality of classes). The commutation graph lives in the enclosing
// algebra, not in the element.
struct TraceWord {
  Word normal_form;

  std::size_t size() const { return normal_form.size(); }
  friend bool operator==(const TraceWord&, const TraceWord&) = default;
  friend bool operator<(const TraceWord& a, const TraceWord& b) {
    return a.normal_form < b.normal_form;
  }
};

// Lexicographic normal form: repeatedly pull out the smallest letter that
// commutes with everything to its left. (A local bubble pass is not enough:
// with theta = {(a,b),(b,c)} the word "cab" is a bubble fixpoint yet its
// class contains the smaller "bca".)
TraceWord trace_normal_form(const Word& w, const CommutationGraph& theta);

}  // namespace hopfcalc
