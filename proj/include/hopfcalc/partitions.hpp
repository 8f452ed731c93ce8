#pragma once

#include <vector>

#include "hopfcalc/diagram.hpp"
#include "hopfcalc/lincomb.hpp"
#include "hopfcalc/monomial.hpp"

namespace hopfcalc {

using PartitionType = MultiIndex;  // block size -> number of blocks

// Unordered set partition of {1..n} in canonical form: blocks sorted by
// minimal element, elements sorted inside each block.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

  int ground_size() const;
  PartitionType type() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks < b.blocks;
  }
};

// All unordered partitions of {1..n} via restricted growth strings; the
// canonical block order (by minimal element) falls out of the encoding.
// n = 0 yields just the empty partition.
std::vector<SetPartition> set_partitions(int n, int bound = 14);

// Stirling numbers of the second kind and Bell numbers, exact.
BigInt stirling2(int n, int k);
BigInt bell(int n);

// B_n(y) = sum_k S(n,k) y^k as a polynomial in the variable y.
LinComb<Monomial> bell_polynomial(int n);

// Incidence matrix of two partitions of the same ground set: rows = blocks
// of p1 (black spots), columns = blocks of p2 (white spots), entry =
// |Y cap Z|; block order is the canonical min-element order on both sides.
LabelledDiagram diagram_from_partitions(const SetPartition& p1, const SetPartition& p2);

}  // namespace hopfcalc
