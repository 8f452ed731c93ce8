#include "hopfcalc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopfcalc {

FiniteGroup::Ptr FiniteGroup::from_table(std::string name,
                                         std::vector<std::vector<int>> table,
                                         std::vector<std::string> elem_names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw UsageError("empty group table");
  if (elem_names.size() != static_cast<std::size_t>(n))
    throw UsageError("element name count does not match table size");
  for (const auto& row : table) {
    if (row.size() != static_cast<std::size_t>(n))
      throw UsageError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw UsageError("group table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i)
      throw UsageError("group table index 0 is not an identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw UsageError("group table is not associative");

  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == 0 && table[j][i] == 0) inverse[i] = j;
    if (inverse[i] < 0) throw UsageError("group table element has no inverse");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->n_ = n;
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->elem_names_ = std::move(elem_names);
  return g;
}

FiniteGroup::Ptr FiniteGroup::cyclic(int n) {
  if (n < 1) throw UsageError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    names[i] = i == 0 ? "1" : i == 1 ? "c" : "c" + std::to_string(i);
  }
  return from_table("C" + std::to_string(n), std::move(table), std::move(names));
}

FiniteGroup::Ptr FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw UsageError("symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity is the lexicographically first permutation, index 0.
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // (s*t)(x) = s(t(x)); one-line images are 1-based.
      std::vector<int> st(n);
      for (int x = 0; x < n; ++x) st[x] = perms[i][perms[j][x] - 1];
      table[i][j] = index.at(st);
    }

  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      names[i] = "1";
    } else {
      std::string s = "p";
      for (int x : perms[i]) s += std::to_string(x);
      names[i] = s;
    }
  }
  return from_table("S" + std::to_string(n), std::move(table), std::move(names));
}

int FiniteGroup::index_of(const std::string& elem_name) const {
  for (int i = 0; i < n_; ++i)
    if (elem_names_[i] == elem_name) return i;
  return -1;
}

}  // namespace hopfcalc
