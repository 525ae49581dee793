#pragma once

#include <string>
#include <vector>

#include "h4n/algebra.hpp"

namespace h4n {

/// Dense element of A (x) A over one algebra A, indexed by pairs of basis
/// slots (slot i*dim+j holds the coefficient of m_i (x) m_j). Products use
/// the componentwise algebra structure (a(x)b)(c(x)d) = ac (x) bd.
class Tensor2 {
 public:
  explicit Tensor2(const Algebra* alg);
  static Tensor2 outer(const Elem& a, const Elem& b);
  /// 1 (x) 1.
  static Tensor2 unit(const Algebra* alg);

  const Algebra* algebra() const { return alg_; }
  int dim() const;
  const Cyc& at(int i, int j) const;
  void set(int i, int j, const Cyc& c);
  void add(int i, int j, const Cyc& c);

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 operator*(const Tensor2& o) const;
  Tensor2 operator*(const Cyc& s) const;
  bool operator==(const Tensor2& o) const;
  bool operator!=(const Tensor2& o) const { return !(*this == o); }
  bool is_zero() const;

  /// this += c * (a (x) b).
  void add_scaled_outer(const Elem& a, const Elem& b, const Cyc& c);
  /// a (x) b -> b (x) a extended linearly.
  Tensor2 flip() const;

  /// Flattened coefficient column (dim^2 x 1), slot order matching the
  /// Kronecker convention of Mat::kronecker.
  Mat as_column() const;
  static Tensor2 from_column(const Algebra* alg, const Mat& col);

  std::string str() const;

 private:
  const Algebra* alg_;
  std::vector<Cyc> c_;
};

/// Dense element of A (x) A (x) A; slot (i*dim+j)*dim+k.
class Tensor3 {
 public:
  explicit Tensor3(const Algebra* alg);
  /// T (x) 1, 1 (x) T, and the 1-in-the-middle embedding of a 2-tensor.
  static Tensor3 embed12(const Tensor2& t);
  static Tensor3 embed23(const Tensor2& t);
  static Tensor3 embed13(const Tensor2& t);

  const Algebra* algebra() const { return alg_; }
  int dim() const;
  const Cyc& at(int i, int j, int k) const;
  void add(int i, int j, int k, const Cyc& c);

  Tensor3 operator*(const Tensor3& o) const;
  bool operator==(const Tensor3& o) const;
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

 private:
  const Algebra* alg_;
  std::vector<Cyc> c_;
};

}  // namespace h4n
