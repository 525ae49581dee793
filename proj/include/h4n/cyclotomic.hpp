#pragma once

#include <string>
#include <vector>

#include "h4n/rational.hpp"

namespace h4n {

class CycField;

/// Element of the cyclotomic field Q(q), q a primitive 2n-th root of unity,
/// stored as the unique representative polynomial in q of degree below
/// deg(Phi_{2n}). Two elements are equal iff their coefficient vectors are
/// equal. Immutable value type; all arithmetic is exact.
class Cyc {
 public:
  Cyc() : field_(nullptr) {}
  Cyc(const CycField* field, std::vector<Rat> coeffs);

  const CycField* field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element lies in Q (all q-coefficients above degree 0 vanish).
  bool is_rational() const;
  /// The constant coefficient; the full value only when is_rational().
  const Rat& rat_part() const { return coeffs_.at(0); }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const Rat& r) const;
  /// Exact division; throws std::domain_error when o is zero.
  Cyc operator/(const Cyc& o) const;
  Cyc inverse() const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Canonical string "c0 + c1*q + c2*q^2 + ...", zero terms skipped,
  /// negative coefficients rendered with a binding minus. Deterministic.
  std::string str() const;
  /// JSON-friendly form: the coefficient vector as "num/den" strings.
  std::vector<std::string> coeff_strings() const;

 private:
  const CycField* field_;
  std::vector<Rat> coeffs_;  // length = field degree
};

/// Q(q) = Q[x]/(Phi_{2n}), q the class of x. The quotient is taken by the
/// cyclotomic polynomial (not x^{2n}-1) so the result is a field and every
/// linear solve downstream stays well posed. Construct once per (family, n)
/// and share by pointer; the object is immutable after construction.
class CycField {
 public:
  /// Field with q a primitive `order`-th root of unity (order = 2n >= 2).
  explicit CycField(int order);

  int order() const { return order_; }      // 2n
  int degree() const { return degree_; }    // deg Phi_{2n} = phi(2n)
  const std::vector<Rat>& modulus() const { return modulus_; }

  Cyc zero() const;
  Cyc one() const;
  Cyc from_rational(const Rat& r) const;
  /// q^i with i taken mod 2n (negative i allowed).
  Cyc q_power(long i) const;
  /// Reduce an arbitrary-degree coefficient vector mod Phi_{2n}.
  Cyc reduce(const std::vector<Rat>& raw) const;

 private:
  int order_;
  int degree_;
  std::vector<Rat> modulus_;                  // Phi_{2n}, monic, degree_+1 coeffs
  std::vector<std::vector<Rat>> xpow_;        // x^k mod Phi for k in [0, 2*degree_-1)
  std::vector<std::vector<Rat>> qpow_;        // q^k for k in [0, order_)
};

/// The m-th cyclotomic polynomial, monic with integer coefficients,
/// as the coefficient vector c[0..deg] with c[deg] = 1. Computed by dividing
/// x^m - 1 by the product of Phi_d over the proper divisors d of m.
std::vector<Rat> cyclotomic_polynomial(int m);

}  // namespace h4n
