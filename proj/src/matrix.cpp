#include "hopfcalc/matrix.hpp"

namespace hopfcalc {

MatrixRep<GroupElem, CycOmega> c3_plane_rep(const FiniteGroup::Ptr& g) {
  if (g->size() != 3) throw UsageError("plane representation needs a group of order 3");
  auto action = [](const GroupElem& e) {
    auto pow = [](const CycOmega& w, int k) {
      CycOmega r{Rational(1)};
      for (int i = 0; i < k; ++i) r = r * w;
      return r;
    };
    Matrix<CycOmega> m(2, 2);
    m.at(0, 0) = pow(CycOmega::omega(), e.index);
    m.at(1, 1) = pow(CycOmega::omega(), 2 * e.index);
    return m;
  };
  return {2, action};
}

MatrixRep<GroupElem, Rational> regular_rep(const FiniteGroup::Ptr& g) {
  const int n = g->size();
  auto action = [n](const GroupElem& e) {
    Matrix<Rational> m(n, n);
    // Left translation: basis vector e_h goes to e_{gh}.
    for (int h = 0; h < n; ++h) m.at(e.group->mul(e.index, h), h) = Rational(1);
    return m;
  };
  return {n, action};
}

MatrixRep<GroupElem, Rational> sign_rep(const FiniteGroup::Ptr& symmetric_group) {
  if (symmetric_group->name().empty() || symmetric_group->name()[0] != 'S')
    throw UsageError("sign representation needs a symmetric group");
  auto action = [](const GroupElem& e) {
    Matrix<Rational> m(1, 1);
    // Parity from the one-line image encoded in the element name ("1" is the
    // identity, otherwise "p" followed by the images of 1..n).
    const std::string& name = e.group->name_of(e.index);
    int inversions = 0;
    if (name.size() > 1 && name[0] == 'p') {
      for (std::size_t i = 1; i < name.size(); ++i)
        for (std::size_t j = i + 1; j < name.size(); ++j)
          if (name[i] > name[j]) ++inversions;
    }
    m.at(0, 0) = Rational(inversions % 2 == 0 ? 1 : -1);
    return m;
  };
  return {1, action};
}

}  // namespace hopfcalc
