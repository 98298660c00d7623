#pragma once

#include <vector>

#include "qpair/scalar.hpp"

namespace qpair {

// Dense matrix over Q(q) with exact arithmetic throughout.
class ScalarMatrix {
public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ScalarMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& c) const;
  ScalarMatrix transpose() const;
  ScalarMatrix kron(const ScalarMatrix& o) const;
  ScalarMatrix pow(unsigned long n) const;  // square matrices

  bool operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  ScalarMatrix inverse() const;  // throws if singular
  size_t rank() const;

  // Greedy row profile: indices of the rows that are linearly
  // independent of all earlier kept rows, scanned top to bottom.
  std::vector<size_t> independent_rows() const;

  // Solve A x = b for square invertible A.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

  // Basis of the right null space { x : A x = 0 }, one vector per
  // non-pivot column of the reduced echelon form, deterministic.
  std::vector<std::vector<Scalar>> null_space() const;

private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace qpair
