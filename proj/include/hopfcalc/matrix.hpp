#pragma once

#include <functional>
#include <vector>

#include "hopfcalc/bialgebra.hpp"
#include "hopfcalc/errors.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/rational.hpp"

namespace hopfcalc {

// Dense square-free matrix over an exact scalar (Rational or CycOmega).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(Rational(1));
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T())) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError();
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError();
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j)
          r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    return r;
  }

  friend Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = m.data_[i] * s;
    return r;
  }

  friend Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Matrix representation of an algebra on basis kind B: a carrier dimension
// plus the matrix assigned to each basis element.
template <class B, class T>
struct MatrixRep {
  int dim = 0;
  std::function<Matrix<T>(const B&)> action;
};

// rho extended linearly to a LinComb.
template <class B, class T>
Matrix<T> rep_apply(const MatrixRep<B, T>& rep, const LinComb<B>& x) {
  Matrix<T> r = Matrix<T>::zero(rep.dim, rep.dim);
  for (const auto& [b, c] : x.terms()) r = r + c * rep.action(b);
  return r;
}

// Is rho(x y) = rho(x) rho(y) on all corpus pairs, with rho(1) = Id?
template <class B, class T>
bool rep_is_morphism(const MatrixRep<B, T>& rep, const BialgebraOps<B>& alg,
                     const std::vector<B>& corpus) {
  if (!(rep.action(alg.unit) == Matrix<T>::identity(rep.dim))) return false;
  for (const B& x : corpus)
    for (const B& y : corpus)
      if (!(rep_apply(rep, alg.product(x, y)) == rep.action(x) * rep.action(y)))
        return false;
  return true;
}

// Tensor product of representations through the coproduct:
//   (rho1 # rho2)(b) = sum rho1(b(1)) (x) rho2(b(2)).
// This is an algebra morphism exactly when the coproduct is, so that is
// verified on the corpus first; NotAMorphism otherwise.
template <class B, class T>
MatrixRep<B, T> rep_tensor(const MatrixRep<B, T>& r1, const MatrixRep<B, T>& r2,
                           const BialgebraOps<B>& alg, const std::vector<B>& corpus) {
  for (const B& x : corpus)
    for (const B& y : corpus) {
      LinComb<B> xy = alg.product(x, y);
      if (alg_coproduct(alg, xy) !=
          tensor_product(alg, alg.coproduct(x), alg.coproduct(y)))
        throw NotAMorphismError();
    }
  int dim = r1.dim * r2.dim;
  auto action = [r1, r2, alg, dim](const B& b) {
    Matrix<T> m = Matrix<T>::zero(dim, dim);
    for (const auto& [t, c] : alg.coproduct(b).terms())
      m = m + c * kronecker(r1.action(t.left), r2.action(t.right));
    return m;
  };
  return MatrixRep<B, T>{dim, action};
}

// Concrete representations the checks revolve around: the exact "plane"
// representation of C3, c^k -> diag(w^k, w^{2k}) over Q(omega) (non-faithful
// as an algebra map: it kills 1 + c + c^2), the regular representation by
// permutation matrices, and the sign character of a symmetric group.
MatrixRep<GroupElem, CycOmega> c3_plane_rep(const FiniteGroup::Ptr& g);
MatrixRep<GroupElem, Rational> regular_rep(const FiniteGroup::Ptr& g);
MatrixRep<GroupElem, Rational> sign_rep(const FiniteGroup::Ptr& symmetric_group);

}  // namespace hopfcalc
