#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "virasoro/rational.hpp"

namespace vir {

// Finitely supported formal linear combination. Zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Rational>;

  LinearCombination() = default;
  LinearCombination(const Key& k, const Rational& coef = Rational(1)) { add(k, coef); }

  void add(const Key& k, const Rational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_scaled(const LinearCombination& o, const Rational& s) {
    if (s.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * s);
  }
  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& o) { add_scaled(o, Rational(1)); return *this; }
  LinearCombination& operator-=(const LinearCombination& o) { add_scaled(o, Rational(-1)); return *this; }
  LinearCombination& operator*=(const Rational& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= s;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  template <class F>
  LinearCombination filtered(F keep) const {
    LinearCombination r;
    for (const auto& [k, v] : terms_) {
      if (keep(k)) r.terms_.emplace(k, v);
    }
    return r;
  }

 private:
  Map terms_;
};

// Reduced row echelon basis of a subspace of the free space on Key. Each basis
// row is keyed by its pivot (its smallest key), has coefficient 1 there and 0 at
// every other pivot.
template <class Key>
class EchelonBasis {
 public:
  using Vector = LinearCombination<Key>;

  // Subtracts multiples of basis rows; the residual has no support on pivots.
  // If `coords` is given, receives the multiple of each row that was removed.
  Vector reduce(Vector x, std::map<Key, Rational>* coords = nullptr) const {
    Vector out;
    // Pivots are keys; a row's non-pivot support never contains other pivots,
    // so one pass over the pivots in x suffices.
    for (const auto& [pivot, row] : rows_) {
      const Rational a = x.coefficient(pivot);
      if (a.is_zero()) continue;
      x.add_scaled(row, -a);
      if (coords) (*coords)[pivot] = a;
    }
    return x;
  }

  // Adds x to the span. Returns true when the dimension grew.
  bool insert(const Vector& x) {
    Vector r = reduce(x);
    if (r.is_zero()) return false;
    const Key pivot = r.begin()->first;
    r *= Rational(1) / r.begin()->second;
    for (auto& [p, row] : rows_) {
      const Rational a = row.coefficient(pivot);
      if (!a.is_zero()) row.add_scaled(r, -a);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const Vector& x) const { return reduce(x).is_zero(); }

  // Coordinates of x over the rows when x lies in the span.
  std::optional<std::map<Key, Rational>> coordinates(const Vector& x) const {
    std::map<Key, Rational> coords;
    if (!reduce(x, &coords).is_zero()) return std::nullopt;
    return coords;
  }

  std::size_t dimension() const { return rows_.size(); }
  const std::map<Key, Vector>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

 private:
  std::map<Key, Vector> rows_;
};

// Dense exact matrix with row reduction helpers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::size_t rank() const;
  Rational determinant() const;
  // Basis of {x : A x = 0}, in reduced echelon form (first nonzero coordinate 1).
  std::vector<std::vector<Rational>> nullspace() const;
  bool is_symmetric() const;

 private:
  // Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref(std::vector<Rational>& a) const;

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace vir
