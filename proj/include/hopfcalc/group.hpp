#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

// Finite group given by its multiplication table. The table is validated at
// construction (associativity, identity at index 0, two-sided inverses), so
// downstream code can trust it blindly.
class FiniteGroup {
public:
  using Ptr = std::shared_ptr<const FiniteGroup>;

  static Ptr from_table(std::string name, std::vector<std::vector<int>> table,
                        std::vector<std::string> elem_names);
  static Ptr cyclic(int n);     // elements 1, c, c2, ..., c{n-1}
  static Ptr symmetric(int n);  // elements named p<one-line image>, identity "1"

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  int mul(int i, int j) const { return table_[i][j]; }
  int inverse(int i) const { return inverse_[i]; }
  static constexpr int identity() { return 0; }
  const std::string& name_of(int i) const { return elem_names_[i]; }
  int index_of(const std::string& elem_name) const;  // -1 if unknown

private:
  FiniteGroup() = default;
  std::string name_;
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> elem_names_;
};

// Basis element of a group algebra k[G]. Ordered by (group name, index) so
// elements of the same group sort by table index.
struct GroupElem {
  FiniteGroup::Ptr group;
  int index = 0;

  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.group->name() == b.group->name() && a.index == b.index;
  }
  friend bool operator<(const GroupElem& a, const GroupElem& b) {
    if (a.group->name() != b.group->name()) return a.group->name() < b.group->name();
    return a.index < b.index;
  }
};

}  // namespace hopfcalc
