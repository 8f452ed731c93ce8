#include "hopfcalc/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace hopfcalc {

LabelledDiagram LabelledDiagram::from_rows(const std::vector<std::vector<int>>& rows) {
  LabelledDiagram d;
  d.p_ = static_cast<int>(rows.size());
  d.q_ = d.p_ == 0 ? 0 : static_cast<int>(rows[0].size());
  if (d.p_ > 0 && d.q_ == 0) throw MalformedMatrixError("MalformedMatrix: empty row");
  d.entries_.reserve(static_cast<std::size_t>(d.p_) * d.q_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d.q_)
      throw MalformedMatrixError("MalformedMatrix: ragged rows");
    bool nonzero = false;
    for (int v : row) {
      if (v < 0) throw MalformedMatrixError("MalformedMatrix: negative entry");
      nonzero |= v > 0;
      d.entries_.push_back(v);
    }
    if (!nonzero) throw MalformedMatrixError("MalformedMatrix: all-zero row");
  }
  for (int c = 0; c < d.q_; ++c) {
    bool nonzero = false;
    for (int r = 0; r < d.p_; ++r) nonzero |= d.at(r, c) > 0;
    if (!nonzero) throw MalformedMatrixError("MalformedMatrix: all-zero column");
  }
  return d;
}

int LabelledDiagram::degree() const {
  int s = 0;
  for (int v : entries_) s += v;
  return s;
}

std::vector<std::vector<int>> LabelledDiagram::row_vectors() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p_));
  for (int r = 0; r < p_; ++r) {
    rows[r].resize(static_cast<std::size_t>(q_));
    for (int c = 0; c < q_; ++c) rows[r][c] = at(r, c);
  }
  return rows;
}

LabelledDiagram ldiag_concat(const LabelledDiagram& a, const LabelledDiagram& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(a.rows() + b.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(a.cols() + b.cols()), 0);
    for (int c = 0; c < a.cols(); ++c) row[c] = a.at(r, c);
    rows.push_back(std::move(row));
  }
  for (int r = 0; r < b.rows(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(a.cols() + b.cols()), 0);
    for (int c = 0; c < b.cols(); ++c) row[a.cols() + c] = b.at(r, c);
    rows.push_back(std::move(row));
  }
  return LabelledDiagram::from_rows(rows);
}

LabelledDiagram ldiag_restrict(const LabelledDiagram& d, const std::vector<int>& rows) {
  if (rows.empty()) return LabelledDiagram::empty();
  std::vector<std::vector<int>> kept;
  kept.reserve(rows.size());
  for (int r1 : rows) {
    if (r1 < 1 || r1 > d.rows()) throw IndexOutOfRangeError();
    std::vector<int> row(static_cast<std::size_t>(d.cols()));
    for (int c = 0; c < d.cols(); ++c) row[c] = d.at(r1 - 1, c);
    kept.push_back(std::move(row));
  }
  std::vector<int> live_cols;
  for (int c = 0; c < d.cols(); ++c) {
    bool nonzero = false;
    for (const auto& row : kept) nonzero |= row[c] > 0;
    if (nonzero) live_cols.push_back(c);
  }
  std::vector<std::vector<int>> packed;
  packed.reserve(kept.size());
  for (const auto& row : kept) {
    std::vector<int> pr;
    pr.reserve(live_cols.size());
    for (int c : live_cols) pr.push_back(row[c]);
    packed.push_back(std::move(pr));
  }
  return LabelledDiagram::from_rows(packed);
}

std::pair<MultiIndex, MultiIndex> spot_types(const LabelledDiagram& d) {
  MultiIndex alpha, beta;
  for (int c = 0; c < d.cols(); ++c) {
    int s = 0;
    for (int r = 0; r < d.rows(); ++r) s += d.at(r, c);
    ++alpha[s];
  }
  for (int r = 0; r < d.rows(); ++r) {
    int s = 0;
    for (int c = 0; c < d.cols(); ++c) s += d.at(r, c);
    ++beta[s];
  }
  return {alpha, beta};
}

namespace {

// Minimal row-major flattening over row permutations for a fixed column
// order: since rows are compared as whole tuples, sorting them ascending is
// optimal. Wrapped in an early-abandon comparison against the best so far.
std::vector<std::vector<int>> sorted_rows_for_columns(
    const std::vector<std::vector<int>>& rows, const std::vector<int>& col_order) {
  std::vector<std::vector<int>> permuted;
  permuted.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> pr;
    pr.reserve(col_order.size());
    for (int c : col_order) pr.push_back(row[c]);
    permuted.push_back(std::move(pr));
  }
  std::sort(permuted.begin(), permuted.end());
  return permuted;
}

}  // namespace

Diagram diag_canonical(const LabelledDiagram& d, int max_dim) {
  if (d.rows() > max_dim || d.cols() > max_dim)
    throw SizeLimitError("SizeLimit: diagram exceeds canonicalization bound");
  if (d.is_empty()) return Diagram{d};

  thread_local std::map<LabelledDiagram, LabelledDiagram> cache;
  if (auto it = cache.find(d); it != cache.end()) return Diagram{it->second};

  const auto rows = d.row_vectors();
  const int q = d.cols();

  // Enumerate each distinct column arrangement once: permute indices of the
  // column content keys; next_permutation over the keyed order collapses
  // identical columns.
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c)
    for (const auto& row : rows) cols[c].push_back(row[c]);
  std::vector<int> order(static_cast<std::size_t>(q));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cols[a] < cols[b]; });

  std::vector<std::vector<int>> best;
  do {
    auto candidate = sorted_rows_for_columns(rows, order);
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(order.begin(), order.end(),
                                 [&](int a, int b) { return cols[a] < cols[b]; }));

  LabelledDiagram canon = LabelledDiagram::from_rows(best);
  cache.emplace(d, canon);
  return Diagram{canon};
}

}  // namespace hopfcalc
