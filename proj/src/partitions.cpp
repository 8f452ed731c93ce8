#include "hopfcalc/partitions.hpp"

#include <algorithm>
#include <set>

namespace hopfcalc {

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
  std::set<int> seen;
  int n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw PartitionMismatchError("PartitionMismatch: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || !seen.insert(x).second)
        throw PartitionMismatchError("PartitionMismatch: not a partition");
      n = std::max(n, x);
    }
  }
  if (static_cast<int>(seen.size()) != n)
    throw PartitionMismatchError("PartitionMismatch: ground set has gaps");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SetPartition{std::move(blocks)};
}

int SetPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

PartitionType SetPartition::type() const {
  PartitionType t;
  for (const auto& b : blocks) ++t[static_cast<int>(b.size())];
  return t;
}

std::vector<SetPartition> set_partitions(int n, int bound) {
  if (n < 0) throw IndexOutOfRangeError();
  if (n > bound) throw SizeLimitError("SizeLimit: partition enumeration bound");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition{});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> maxes(static_cast<std::size_t>(n), 0);
  while (true) {
    int nblocks = 1 + *std::max_element(a.begin(), a.end());
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < n; ++i) blocks[a[static_cast<std::size_t>(i)]].push_back(i + 1);
    out.push_back(SetPartition{std::move(blocks)});

    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == maxes[static_cast<std::size_t>(i)] + 1)
      --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      maxes[static_cast<std::size_t>(j)] =
          std::max(maxes[static_cast<std::size_t>(j - 1)],
                   a[static_cast<std::size_t>(j - 1)]);
    }
  }
  return out;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRangeError();
  if (k > n) return 0;
  // S(n,k) = k S(n-1,k) + S(n-1,k-1), one rolling row.
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    row[0] = 0;  // S(i,0) = 0 once i >= 1
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt bell(int n) {
  BigInt b = 0;
  for (int k = 0; k <= n; ++k) b += stirling2(n, k);
  return b;
}

LinComb<Monomial> bell_polynomial(int n) {
  LinComb<Monomial> p;
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
    Monomial m;
    m.mul_var(Var{'y', 0}, k);
    p.add_term(m, Rational(stirling2(n, k)));
  }
  return p;
}

LabelledDiagram diagram_from_partitions(const SetPartition& p1, const SetPartition& p2) {
  if (p1.ground_size() != p2.ground_size())
    throw PartitionMismatchError("PartitionMismatch: different ground sets");
  if (p1.blocks.empty() || p2.blocks.empty()) {
    if (p1.blocks.empty() && p2.blocks.empty()) return LabelledDiagram::empty();
    throw PartitionMismatchError("PartitionMismatch: different ground sets");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(p1.blocks.size());
  for (const auto& y : p1.blocks) {
    std::vector<int> row;
    row.reserve(p2.blocks.size());
    for (const auto& z : p2.blocks) {
      std::vector<int> inter;
      std::set_intersection(y.begin(), y.end(), z.begin(), z.end(),
                            std::back_inserter(inter));
      row.push_back(static_cast<int>(inter.size()));
    }
    rows.push_back(std::move(row));
  }
  return LabelledDiagram::from_rows(rows);
}

}  // namespace hopfcalc
