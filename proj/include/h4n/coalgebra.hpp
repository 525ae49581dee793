#pragma once

#include <vector>

#include "h4n/algebra.hpp"
#include "h4n/tensor.hpp"

namespace h4n {

/// Coproduct, counit and antipode of one algebra, tabulated on the monomial
/// basis. The coproduct is fixed by its values on the generators and
/// multiplicativity: delta(g^i x^j) = delta(g)^i * delta(x)^j. The antipode
/// is fixed on generators and extended by reversing monomial factor order:
/// S(g^i x^j) = S(x)^j * S(g)^i.
///
/// Generator values:
///   H:      delta(z) = z(x)z + a(1-q^{-2}) z^{n+1}x (x) zx,
///           delta(x) = x(x)1 + z^n(x)x,  S(z) = z^{2n-1}, S(x) = -z^n x
///   WH:     same shapes with Z, X; T(Z) = Z^{2n-1}, T(X) = -Z^n X
///   HDual:  delta(alpha) = alpha(x)alpha, delta(eta) = eta(x)1 + alpha(x)eta,
///           S(alpha) = alpha^{2n-1}, S(eta) = -alpha^{2n-1} eta
///   WHDual: delta(G) = G(x)G, delta(X) = X(x)1 + G(x)X,
///           T(G) = G^{2n-1}, T(X) = -G^{2n-1} X
/// The counit sends g to 1 and x to 0 in every family.
class StructureMaps {
 public:
  explicit StructureMaps(const Algebra* alg);

  const Algebra* algebra() const { return alg_; }
  const Tensor2& delta_basis(int idx) const { return delta_[idx]; }
  const Elem& antipode_basis(int idx) const { return antipode_[idx]; }
  Cyc counit_basis(int idx) const;

  Tensor2 comultiply(const Elem& e) const;
  Cyc counit(const Elem& e) const;
  Elem antipode(const Elem& e) const;

  /// Matrices of linear endomaps in the monomial basis.
  Mat identity_matrix() const;
  Mat antipode_matrix() const;
  /// m |-> counit(m) * 1.
  Mat unit_counit_matrix() const;
  /// Convolution product of two endomaps: (f*h)(m) = sum f(m_(1)) h(m_(2)).
  Mat convolve(const Mat& f, const Mat& h) const;

 private:
  const Algebra* alg_;
  std::vector<Tensor2> delta_;
  std::vector<Elem> antipode_;
};

/// Coalgebra and (weak) Hopf axioms, checked exhaustively on the basis:
/// coassociativity, counit laws, delta/counit multiplicativity on all basis
/// pairs, well-definedness on the defining relations, and the antipode law
/// (S*id = id*S = unit.counit for the strong families; the weakened laws
/// id*T*id = id and T*id*T = T for the weak ones). Anti-multiplicativity of
/// the antipode is required for strong families and reported as an info line
/// for the weak ones. Noncommutativity and noncocommutativity witnesses are
/// included.
Report verify_coalgebra_axioms(const StructureMaps& sm);

/// True when the span of the given basis monomials is a subcoalgebra, i.e.
/// delta of each spanning monomial is supported on pairs from the set.
bool subcoalgebra_closed(const StructureMaps& sm, const std::vector<int>& idxs);

/// Extra cross-family compatibility for the weak algebras: the generator map
/// onto the J-block intertwines the coproducts, i.e. delta(img(m)) equals
/// (img (x) img)(delta_strong(m)) for every basis monomial m of the matching
/// strong family (H for WH; HDual at a=1 for WHDual).
Report verify_peirce_coalgebra(const StructureMaps& weak_sm);

}  // namespace h4n
