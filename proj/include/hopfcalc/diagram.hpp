#pragma once

#include <map>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

// Degree -> multiplicity multi-index; used both for partition types and for
// diagram spot types.
using MultiIndex = std::map<int, int>;

// Bipartite multigraph between p black spots (rows) and q white spots
// (columns), stored as a packed non-negative incidence matrix: no all-zero
// row or column. The 0x0 empty diagram is the monoid unit. Total order:
// degree, then shape, then row-major entries (deterministic and graded).
class LabelledDiagram {
public:
  LabelledDiagram() = default;  // empty diagram

  static LabelledDiagram from_rows(const std::vector<std::vector<int>>& rows);
  static LabelledDiagram empty() { return LabelledDiagram(); }

  int rows() const { return p_; }
  int cols() const { return q_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * q_ + c]; }
  int degree() const;  // total edge count
  bool is_empty() const { return p_ == 0; }
  std::vector<std::vector<int>> row_vectors() const;

  friend bool operator==(const LabelledDiagram&, const LabelledDiagram&) = default;
  friend bool operator<(const LabelledDiagram& a, const LabelledDiagram& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.q_ != b.q_) return a.q_ < b.q_;
    return a.entries_ < b.entries_;
  }

private:
  int p_ = 0, q_ = 0;
  std::vector<int> entries_;  // row-major
};

// Superposition product: block-diagonal stacking (rows of a, then rows of b;
// columns of a, then columns of b).
LabelledDiagram ldiag_concat(const LabelledDiagram& a, const LabelledDiagram& b);

// Keep the rows at the given 1-based indices (in the order given), then drop
// the columns that became all-zero, preserving relative column order.
LabelledDiagram ldiag_restrict(const LabelledDiagram& d, const std::vector<int>& rows);

// (alpha, beta): alpha = white spot type (multiset of column sums),
// beta = black spot type (multiset of row sums).
std::pair<MultiIndex, MultiIndex> spot_types(const LabelledDiagram& d);

// Diagram class under independent row and column permutations, represented
// by its canonical labelled diagram (row-major lexicographically smallest
// matrix over all row/column permutations).
struct Diagram {
  LabelledDiagram canon;

  int degree() const { return canon.degree(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.canon < b.canon; }
};

// Canonical form. Throws SizeLimit when rows or columns exceed max_dim.
// Memoizes per thread: the bialgebra suites canonicalize the same submatrices
// over and over.
Diagram diag_canonical(const LabelledDiagram& d, int max_dim = 8);

}  // namespace hopfcalc
