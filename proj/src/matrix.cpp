#include "qpair/matrix.hpp"

#include <utility>

#include "qpair/error.hpp"

namespace qpair {

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  ScalarMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  ScalarMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  require(cols_ == o.rows_, "matrix shape mismatch in product");
  ScalarMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& w = o.at(k, j);
        if (w.is_zero()) continue;
        r.at(i, j) += v * w;
      }
    }
  return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
  ScalarMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ScalarMatrix ScalarMatrix::kron(const ScalarMatrix& o) const {
  ScalarMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l) {
          if (o.at(k, l).is_zero()) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    }
  return r;
}

ScalarMatrix ScalarMatrix::pow(unsigned long n) const {
  require(rows_ == cols_, "matrix power needs a square matrix");
  ScalarMatrix acc = identity(rows_), base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

ScalarMatrix ScalarMatrix::inverse() const {
  require(rows_ == cols_, "inverse needs a square matrix");
  const size_t n = rows_;
  ScalarMatrix m = *this, inv = identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    require(piv < n, "matrix is singular");
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const Scalar p = m.at(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      m.at(col, j) *= p;
      inv.at(col, j) *= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<size_t> ScalarMatrix::independent_rows() const {
  // Maintain reduced pivot rows; a new row is kept iff something
  // survives elimination against them.
  std::vector<std::pair<size_t, std::vector<Scalar>>> pivots;  // (lead col, row)
  std::vector<size_t> kept;
  for (size_t r = 0; r < rows_; ++r) {
    std::vector<Scalar> row(cols_);
    for (size_t j = 0; j < cols_; ++j) row[j] = at(r, j);
    for (const auto& [lead, prow] : pivots) {
      if (row[lead].is_zero()) continue;
      const Scalar f = row[lead];
      for (size_t j = 0; j < cols_; ++j) row[j] -= f * prow[j];
    }
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == cols_) continue;
    const Scalar p = row[lead].inverse();
    for (size_t j = 0; j < cols_; ++j) row[j] *= p;
    pivots.emplace_back(lead, std::move(row));
    kept.push_back(r);
  }
  return kept;
}

size_t ScalarMatrix::rank() const { return independent_rows().size(); }

std::vector<Scalar> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
  require(rows_ == cols_ && b.size() == rows_, "solve shape mismatch");
  const size_t n = rows_;
  ScalarMatrix m = *this;
  std::vector<Scalar> x = b;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    require(piv < n, "matrix is singular");
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      std::swap(x[piv], x[col]);
    }
    const Scalar p = m.at(col, col).inverse();
    for (size_t j = 0; j < n; ++j) m.at(col, j) *= p;
    x[col] *= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      x[i] -= f * x[col];
    }
  }
  return x;
}

std::vector<std::vector<Scalar>> ScalarMatrix::null_space() const {
  // Reduced row echelon form, then one basis vector per free column.
  ScalarMatrix m = *this;
  std::vector<size_t> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const Scalar p = m.at(row, col).inverse();
    for (size_t j = 0; j < cols_; ++j) m.at(row, j) *= p;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (size_t j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qpair
