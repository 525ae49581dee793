#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h4n/cyclotomic.hpp"
#include "h4n/matrix.hpp"
#include "h4n/rational.hpp"
#include "h4n/report.hpp"

namespace h4n {

/// The four algebra families handled by the workbench. `H` and `HDual` are
/// ordinary Hopf algebras of dimension 4n; `WH` and `WHDual` are their weak
/// variants of dimension 4n+2 (the group-like generator satisfies g^{2n+1}=g
/// instead of g^{2n}=1, so 1 and g^{2n} differ).
enum class Family { H, WH, HDual, WHDual };

/// CLI code for a family: h4n, wh4n, h4n-dual, wh4n-dual.
std::string family_code(Family f);
std::optional<Family> family_from_code(const std::string& code);
bool is_weak(Family f);
bool is_dual(Family f);

struct AlgebraSpec {
  Family family = Family::H;
  int n = 2;
  Rat a = Rat(1);

  bool operator==(const AlgebraSpec& o) const {
    return family == o.family && n == o.n && a == o.a;
  }
};

class Algebra;

/// Dense element in the monomial basis g^i x^j (0 <= i < gcount, j in {0,1}),
/// with coefficients in the cyclotomic field of the owning algebra. Basis
/// slot for g^i x^j is 2*i + j.
class Elem {
 public:
  Elem() = default;
  explicit Elem(const Algebra* alg);

  const Algebra* algebra() const { return alg_; }
  const Cyc& coeff(int gpow, int xpow) const;
  void set_coeff(int gpow, int xpow, const Cyc& c);
  const Cyc& coeff_at(int idx) const { return coeffs_[idx]; }
  void set_coeff_at(int idx, const Cyc& c) { coeffs_[idx] = c; }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator-() const;
  Elem operator*(const Elem& o) const;
  Elem operator*(const Cyc& s) const;
  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Power by repeated multiplication; e >= 0.
  Elem pow(long e) const;

  /// Coefficient column vector (dim x 1) over the owning field.
  Mat column() const;

  /// Human-readable sum of monomials in basis order, e.g. "1 + (2)*z^3*x".
  std::string str() const;

 private:
  const Algebra* alg_ = nullptr;
  std::vector<Cyc> coeffs_;
};

/// One of the four finite-dimensional algebras, with its exact scalar field,
/// normal-form multiplication table and distinguished elements.
///
/// Defining relations, writing g for the group-like-ish generator and x for
/// the skew generator, q a primitive 2n-th root of unity:
///   H:      z^{2n} = 1,        zx = q xz,          x^2 = 0
///   WH:     Z^{2n+1} = Z,      ZX = q XZ,          X^2 = 0
///   HDual:  alpha^{2n} = 1,    alpha eta = -eta alpha,  eta^2 = a (1 - alpha^2)
///   WHDual: G^{2n+1} = G,      GX = -XG,           X^2 = 1 - G^2
/// The scalar parameter a only enters H (via the coproduct) and HDual (via
/// eta^2); WHDual fixes the analogous coefficient to 1.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const CycField& field() const { return *field_; }
  int n() const { return spec_.n; }
  /// Number of distinct g-powers in the basis: 2n, or 2n+1 when weak.
  int gcount() const { return gcount_; }
  int dim() const { return 2 * gcount_; }

  int index_of(int gpow, int xpow) const { return 2 * gpow + xpow; }
  /// (gpow, xpow) of basis slot idx.
  std::pair<int, int> monomial_at(int idx) const { return {idx / 2, idx % 2}; }

  /// Normalizes a g-exponent. Strong families reduce mod 2n; weak families
  /// map 0 to 0 and e != 0 to ((e-1) mod 2n) + 1, so g^{2n} stays distinct
  /// from 1.
  int reduce_gpow(long e) const;

  /// Scalar picked up when one x moves right across g^k: q^{-k} for H/WH,
  /// (-1)^k for the duals.
  Cyc comm_factor(long k) const;

  Elem zero() const;
  Elem one() const;
  Elem scalar(const Cyc& c) const;
  Elem monomial(int gpow, int xpow) const;
  Elem g_gen() const { return monomial(1, 0); }
  Elem x_gen() const { return monomial(0, 1); }

  Elem multiply(const Elem& lhs, const Elem& rhs) const;
  /// Memoized product of two basis monomials.
  const Elem& basis_product(int i1, int i2) const { return mul_[i1][i2]; }

  /// Orthogonal idempotent E_j = (1/2n) sum_i q^{-ij} g^i (family H only).
  Elem idempotent_E(int j) const;
  /// Central idempotent g^{2n} of a weak family.
  Elem central_J() const;

  /// Generator names used in printing: z/x, Z/X, alpha/eta, G/X.
  std::string gname() const;
  std::string xname() const;
  std::string monomial_name(int gpow, int xpow) const;

  /// Left-multiplication matrix of e on the algebra itself (dim x dim).
  Mat left_multiplication_matrix(const Elem& e) const;

 private:
  AlgebraSpec spec_;
  std::unique_ptr<CycField> field_;
  int gcount_;
  std::vector<std::vector<Elem>> mul_;
};

/// Splits a weak algebra A as A*J (+) A*(1-J) along the central idempotent
/// J = g^{2n}, and certifies the two blocks: A*J carries a copy of the
/// corresponding strong family (relation-preserving bijective map on the
/// generator images gJ, xJ), and A*(1-J) is 2-dimensional with
/// (x(1-J))^2 = 0 for WH and (x(1-J))^2 = 1-J for WHDual.
struct PeirceResult {
  Report checks;
  int dim_block1 = 0;
  int dim_block2 = 0;
};
PeirceResult peirce_decomposition(const Algebra& alg);

/// Checks the defining relations, associativity on all basis triples, and
/// unit laws directly against the multiplication table.
Report verify_algebra_structure(const Algebra& alg);

}  // namespace h4n
