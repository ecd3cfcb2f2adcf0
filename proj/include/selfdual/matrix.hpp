// Exact rational matrices: rank, kernel, determinants, maximal minors.
#pragma once

#include <map>
#include <vector>

#include "selfdual/rational.hpp"
#include "selfdual/subsets.hpp"

namespace sd {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;

  // Row rank over Q, by exact Gaussian elimination with partial pivoting on
  // the largest-magnitude candidate.
  int rank() const;

  // Basis of the right kernel; empty iff full column rank.
  std::vector<std::vector<Rat>> kernel_basis() const;

  // Determinant of a square matrix (Gaussian elimination).
  Rat det() const;

  // Inverse of a square invertible matrix (Gauss-Jordan).
  RatMatrix inverse() const;

  // Determinant by fraction-free (Bareiss) elimination on a denominator-
  // cleared integer matrix. Must agree with det(); kept as a cross-check.
  Rat det_bareiss() const;

  // All maximal minors of an n x m matrix (n <= m), keyed by the ascending
  // 1-based column tuples in lexicographic order.
  std::map<Subset, Rat> maximal_minors() const;

  // Determinant of the square submatrix picking all rows and the given
  // 1-based columns.
  Rat minor_det(const Subset& cols) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace sd
