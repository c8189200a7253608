#pragma once

// Small dense matrices over exact commutative rings (Q, Q[t], Q[t][x], ...).
// Floating-point linear algebra goes through Eigen instead.

#include <cstddef>
#include <utility>
#include <vector>

#include "abelzero/polynomial.hpp"

namespace abelzero {

template <typename Ring>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_traits<Ring>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    return out;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
    return a;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
    return a;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> data_;
};

/// Fraction-free (Bareiss) determinant; all divisions are exact in an integral domain.
template <typename Ring>
Ring determinant(DenseMatrix<Ring> m) {
  const std::size_t n = m.rows();
  if (n == 0) return ring_traits<Ring>::one();
  bool negate = false;
  Ring prev = ring_traits<Ring>::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return Ring{};
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = Ring{};
    }
    prev = m(k, k);
  }
  Ring det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// det(x I - A) by Berkowitz's division-free recurrence.
template <typename Ring>
Polynomial<Ring> charpoly(const DenseMatrix<Ring>& a) {
  const std::size_t n = a.rows();
  // Coefficients highest degree first while iterating.
  std::vector<Ring> current{ring_traits<Ring>::one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S.
    std::vector<Ring> column(r + 2);
    column[0] = ring_traits<Ring>::one();
    column[1] = -a(r, r);
    std::vector<Ring> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Ring dot{};
      for (std::size_t i = 0; i < r; ++i) dot = dot + a(r, i) * s[i];
      column[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Ring> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + a(i, j) * s[j];
        s = std::move(next);
      }
    }
    std::vector<Ring> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j < current.size() && j <= i; ++j)
        updated[i] = updated[i] + column[i - j] * current[j];
    current = std::move(updated);
  }
  std::vector<Ring> ascending(current.rbegin(), current.rend());
  return Polynomial<Ring>(std::move(ascending));
}

/// Sylvester matrix of a (degree m) and b (degree n), size m + n, rows of shifted
/// coefficient vectors written highest degree first.
template <typename Ring>
DenseMatrix<Ring> sylvester_matrix(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  DenseMatrix<Ring> s(m + n, m + n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s(row, row + k) = a[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s(n + row, row + k) = b[n - k];
  return s;
}

/// Res(a, b) = lc(a)^deg b * prod b(roots of a). Both zero is rejected.
template <typename Ring>
Ring resultant(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) {
    const Polynomial<Ring>& other = a.is_zero() ? b : a;
    return other.degree() == 0 ? ring_traits<Ring>::one() : Ring{};
  }
  return determinant(sylvester_matrix(a, b));
}

}  // namespace abelzero
