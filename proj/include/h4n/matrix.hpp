#pragma once

#include <optional>
#include <vector>

#include "h4n/cyclotomic.hpp"

namespace h4n {

/// Dense matrix over Q(q) with exact arithmetic throughout. Column
/// convention everywhere in this project: column j of an action matrix holds
/// the image coordinates of basis vector j, so actions compose as M2*M1 and
/// act on coordinate columns as M*c.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(nullptr) {}
  Mat(const CycField* field, int rows, int cols);

  static Mat identity(const CycField* field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CycField* field() const { return field_; }

  Cyc& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyc& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Cyc& s) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;
  Mat transpose() const;
  /// Kronecker product; index convention (i1*rows2+i2, j1*cols2+j2).
  Mat kronecker(const Mat& o) const;
  /// Columns of `o` appended on the right.
  Mat hstack(const Mat& o) const;
  Mat col(int j) const;
  /// Square block-diagonal assembly of the given blocks, in order.
  static Mat block_diag(const CycField* field, const std::vector<Mat>& blocks);

 private:
  int rows_, cols_;
  const CycField* field_;
  std::vector<Cyc> a_;
};

/// Reduced row echelon form computed in place by exact Gauss-Jordan;
/// returns the pivot column indices in increasing order.
std::vector<int> rref_in_place(Mat& m);

int rank(Mat m);

/// Basis of the right null space, one kernel vector per column
/// (cols x nullity). Empty matrix (cols x 0) when the kernel is trivial.
Mat kernel_basis(const Mat& m);

/// Exact solution X of A*X = B, or nullopt when the system is inconsistent.
/// For full-column-rank A the solution is unique; otherwise free variables
/// are set to zero.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Indices of a maximal set of linearly independent columns.
std::vector<int> independent_columns(const Mat& m);

}  // namespace h4n
