#include "h4n/matrix.hpp"

#include <stdexcept>

namespace h4n {

Mat::Mat(const CycField* field, int rows, int cols)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<size_t>(rows) * cols, field->zero()) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Mat Mat::identity(const CycField* field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

namespace {
void check_same_shape(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field()) {
    throw std::invalid_argument("matrix shape/field mismatch");
  }
}
}  // namespace

Mat Mat::operator+(const Mat& o) const {
  check_same_shape(*this, o);
  Mat out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_shape(*this, o);
  Mat out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  Mat out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Cyc& left = at(i, k);
      if (left.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyc& right = o.at(k, j);
        if (right.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + left * right;
      }
    }
  }
  return out;
}

Mat Mat::operator*(const Cyc& s) const {
  Mat out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * s;
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != o.a_[i]) return false;
  }
  return true;
}

bool Mat::is_zero() const {
  for (const Cyc& v : a_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::kronecker(const Mat& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  Mat out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i1 = 0; i1 < rows_; ++i1)
    for (int j1 = 0; j1 < cols_; ++j1) {
      const Cyc& v = at(i1, j1);
      if (v.is_zero()) continue;
      for (int i2 = 0; i2 < o.rows_; ++i2)
        for (int j2 = 0; j2 < o.cols_; ++j2) {
          out.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = v * o.at(i2, j2);
        }
    }
  return out;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_ || field_ != o.field_) throw std::invalid_argument("hstack mismatch");
  Mat out(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  return out;
}

Mat Mat::col(int j) const {
  Mat out(field_, rows_, 1);
  for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
  return out;
}

Mat Mat::block_diag(const CycField* field, const std::vector<Mat>& blocks) {
  int n = 0;
  for (const Mat& b : blocks) {
    if (b.rows() != b.cols()) throw std::invalid_argument("non-square block");
    n += b.rows();
  }
  Mat out(field, n, n);
  int off = 0;
  for (const Mat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return out;
}

std::vector<int> rref_in_place(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    Cyc inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Cyc factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat m) {
  return static_cast<int>(rref_in_place(m).size());
}

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int nullity = m.cols() - static_cast<int>(pivots.size());
  Mat out(m.field(), m.cols(), nullity);
  int k = 0;
  for (int freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    out.at(freec, k) = m.field()->one();
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      out.at(pivots[pr], k) = -r.at(static_cast<int>(pr), freec);
    }
    ++k;
  }
  return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.field() != b.field()) {
    throw std::invalid_argument("solve shape mismatch");
  }
  Mat aug = a.hstack(b);
  std::vector<int> pivots = rref_in_place(aug);
  // Any pivot falling inside the augmented block marks inconsistency.
  for (int p : pivots) {
    if (p >= a.cols()) return std::nullopt;
  }
  Mat x(a.field(), a.cols(), b.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr) {
    for (int j = 0; j < b.cols(); ++j) {
      x.at(pivots[pr], j) = aug.at(static_cast<int>(pr), a.cols() + j);
    }
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Mat aug = m.hstack(Mat::identity(m.field(), m.rows()));
  std::vector<int> pivots = rref_in_place(aug);
  // All pivots must sit in the left block; one in the identity block means
  // the matrix is singular even when the pivot count looks right.
  if (static_cast<int>(pivots.size()) != m.rows() ||
      (!pivots.empty() && pivots.back() >= m.cols())) {
    return std::nullopt;
  }
  Mat out(m.field(), m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) out.at(i, j) = aug.at(i, m.cols() + j);
  return out;
}

std::vector<int> independent_columns(const Mat& m) {
  Mat r = m;
  return rref_in_place(r);
}

}  // namespace h4n
