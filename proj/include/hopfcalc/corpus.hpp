#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "hopfcalc/diagram.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/monomial.hpp"
#include "hopfcalc/trace.hpp"
#include "hopfcalc/word.hpp"

namespace hopfcalc {

// Default finite corpora the property suites run over.

inline std::vector<Monomial> monomials_up_to(const Alphabet& a, int max_deg) {
  std::vector<Monomial> out{Monomial::one()};
  std::size_t level_begin = 0;
  for (int d = 1; d <= max_deg; ++d) {
    std::size_t level_end = out.size();
    std::set<Monomial> next;
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        next.insert(mono_mul(out[i], Monomial().mul_var(Var{a.at(j), 0}, 1)));
    level_begin = out.size();
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

inline std::vector<TraceWord> trace_classes_up_to(const Alphabet& a,
                                                  const CommutationGraph& theta,
                                                  int max_len) {
  std::set<TraceWord> classes;
  for (const Word& w : words_up_to(a, max_len)) classes.insert(trace_normal_form(w, theta));
  return {classes.begin(), classes.end()};
}

inline std::vector<GroupElem> group_corpus(const FiniteGroup::Ptr& g) {
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>(g->size()));
  for (int i = 0; i < g->size(); ++i) out.push_back(GroupElem{g, i});
  return out;
}

// Every packed matrix with `edges` total edges and at most max_rows rows.
inline void enumerate_packed(int edges, int max_rows,
                             std::vector<LabelledDiagram>& out) {
  for (int p = 1; p <= std::min(edges, max_rows); ++p) {
    for (int q = 1; q <= edges; ++q) {
      const int cells = p * q;
      std::vector<int> flat(static_cast<std::size_t>(cells), 0);
      // Compositions of `edges` into `cells` parts.
      auto emit = [&]() {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(p));
        for (int r = 0; r < p; ++r)
          rows[r] = std::vector<int>(flat.begin() + r * q, flat.begin() + (r + 1) * q);
        try {
          out.push_back(LabelledDiagram::from_rows(rows));
        } catch (const MalformedMatrixError&) {
          // not packed; skip
        }
      };
      std::function<void(int, int)> rec = [&](int cell, int remaining) {
        if (cell == cells - 1) {
          flat[static_cast<std::size_t>(cell)] = remaining;
          emit();
          return;
        }
        for (int v = 0; v <= remaining; ++v) {
          flat[static_cast<std::size_t>(cell)] = v;
          rec(cell + 1, remaining - v);
        }
      };
      rec(0, edges);
    }
  }
}

inline std::vector<LabelledDiagram> labelled_diagrams_up_to(int max_edges, int max_rows) {
  std::vector<LabelledDiagram> out{LabelledDiagram::empty()};
  for (int n = 1; n <= max_edges; ++n) enumerate_packed(n, max_rows, out);
  return out;
}

inline std::vector<Diagram> diagram_classes_up_to(int max_edges, int max_rows) {
  std::set<Diagram> classes;
  for (const auto& d : labelled_diagrams_up_to(max_edges, max_rows))
    classes.insert(diag_canonical(d));
  return {classes.begin(), classes.end()};
}

}  // namespace hopfcalc
