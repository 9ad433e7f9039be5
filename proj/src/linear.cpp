#include "virasoro/linear.hpp"

namespace vir {

std::vector<std::size_t> Matrix::rref(std::vector<Rational>& a) const {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t sel = r;
    while (sel < rows_ && a[sel * cols_ + col].is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a[sel * cols_ + j], a[r * cols_ + j]);
    }
    const Rational inv = Rational(1) / a[r * cols_ + col];
    for (std::size_t j = col; j < cols_; ++j) a[r * cols_ + j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rational f = a[i * cols_ + col];
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < cols_; ++j) a[i * cols_ + j] -= f * a[r * cols_ + j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  std::vector<Rational> a = a_;
  return rref(a).size();
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) return Rational(0);
  std::vector<Rational> a = a_;
  const std::size_t n = rows_;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel * n + col].is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[sel * n + j], a[col * n + j]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t i = col + 1; i < n; ++i) {
      const Rational f = a[i * n + col] / a[col * n + col];
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> Matrix::nullspace() const {
  std::vector<Rational> a = a_;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  EchelonBasis<std::size_t> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    LinearCombination<std::size_t> v(free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v.add(pivots[r], -a[r * cols_ + free]);
    basis.insert(v);
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& [pivot, row] : basis.rows()) {
    std::vector<Rational> v(cols_);
    for (const auto& [j, x] : row) v[j] = x;
    out.push_back(std::move(v));
  }
  return out;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

}  // namespace vir
