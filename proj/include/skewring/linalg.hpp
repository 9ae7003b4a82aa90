#ifndef SKEWRING_LINALG_HPP
#define SKEWRING_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skewring/rational.hpp"

namespace skewring {

/// Dense row-major matrix over the rationals. Only what the coefficient
/// rings need: exact elimination on systems of at most a few hundred unknowns.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

/// Reduced row echelon form of the augmented system [a | b]; returns pivot
/// columns. `b` may have zero columns.
inline std::vector<std::size_t> row_reduce(QMatrix& a, QMatrix& b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
      for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(row, c), b(pivot, c));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t c = 0; c < b.cols(); ++c) b(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(row, c).is_zero()) b(r, c) -= f * b(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Some solution x of a x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(QMatrix a, const std::vector<Rational>& b) {
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto pivots = detail::row_reduce(a, rhs);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!rhs(r, 0).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs(r, 0);
  return x;
}

inline std::size_t rank(QMatrix a) {
  QMatrix none(a.rows(), 0);
  return detail::row_reduce(a, none).size();
}

inline std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  QMatrix a = m;
  QMatrix b = QMatrix::identity(m.rows());
  if (detail::row_reduce(a, b).size() != m.rows()) return std::nullopt;
  return b;
}

inline Rational determinant(QMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

}  // namespace skewring

#endif
