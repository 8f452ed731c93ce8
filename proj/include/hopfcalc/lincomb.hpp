#pragma once

#include <map>
#include <utility>

#include "hopfcalc/rational.hpp"

namespace hopfcalc {

// Finitely-supported map basis element -> nonzero rational coefficient.
// Zero coefficients are pruned eagerly on every mutation, so structural
// equality of the underlying maps is mathematical equality of vectors.
// B needs a strict total order (operator<).
template <class B>
class LinComb {
public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;
  explicit LinComb(const B& b) { terms_.emplace(b, Rational(1)); }
  LinComb(const B& b, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(b, c);
  }

  static LinComb zero() { return LinComb(); }

  const Terms& terms() const& { return terms_; }
  // By value on rvalues: range-for over `f(x).terms()` would otherwise walk
  // a map owned by an already-destroyed temporary.
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const Rational& a, const LinComb& other) {
    if (a.is_zero()) return;
    for (const auto& [b, c] : other.terms_) add_term(b, a * c);
  }

  friend bool operator==(const LinComb& x, const LinComb& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const LinComb& x, const LinComb& y) { return !(x == y); }

private:
  Terms terms_;
};

// a*X + b*Y.
template <class B>
LinComb<B> lc_combine(const Rational& a, const LinComb<B>& x,
                      const Rational& b, const LinComb<B>& y) {
  LinComb<B> r;
  r.add_scaled(a, x);
  r.add_scaled(b, y);
  return r;
}

template <class B>
LinComb<B> operator+(const LinComb<B>& x, const LinComb<B>& y) {
  return lc_combine(Rational(1), x, Rational(1), y);
}

template <class B>
LinComb<B> operator-(const LinComb<B>& x, const LinComb<B>& y) {
  return lc_combine(Rational(1), x, Rational(-1), y);
}

template <class B>
LinComb<B> operator-(const LinComb<B>& x) {
  return lc_combine(Rational(-1), x, Rational(0), LinComb<B>());
}

template <class B>
LinComb<B> operator*(const Rational& a, const LinComb<B>& x) {
  return lc_combine(a, x, Rational(0), LinComb<B>());
}

// Pure tensor of two basis kinds, ordered lexicographically (left, right).
template <class L, class R>
struct TensorBasis {
  L left;
  R right;
  friend bool operator==(const TensorBasis&, const TensorBasis&) = default;
  friend bool operator<(const TensorBasis& a, const TensorBasis& b) {
    if (a.left < b.left) return true;
    if (b.left < a.left) return false;
    return a.right < b.right;
  }
};

template <class L, class R>
LinComb<TensorBasis<L, R>> lc_tensor(const LinComb<L>& x, const LinComb<R>& y) {
  LinComb<TensorBasis<L, R>> r;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      r.add_term(TensorBasis<L, R>{bx, by}, cx * cy);
  return r;
}

// Kronecker dual pairing <X, Y> = sum_b X(b) Y(b).
template <class B>
Rational lc_pair(const LinComb<B>& x, const LinComb<B>& y) {
  Rational r(0);
  const auto& a = x.terms();
  const auto& b = y.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      r += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return r;
}

}  // namespace hopfcalc
