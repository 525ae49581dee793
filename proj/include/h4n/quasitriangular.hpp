#pragma once

#include "h4n/coalgebra.hpp"

namespace h4n {

/// Universal braiding element of family H, built from the orthogonal
/// idempotents E_j:
///   R = sum_{i,j} (-1)^{ij} E_i (x) E_j
///     + xcoef * sum_{i,j} (-1)^{i(j+1)} E_i x (x) E_j x
/// with canonical x-part coefficient xcoef = 2a.
Tensor2 build_r_matrix(const Algebra& alg);
Tensor2 build_r_matrix_with_xcoef(const Algebra& alg, const Cyc& xcoef);

struct RMatrixCheck {
  Tensor2 R;
  Tensor2 Rinv;
  Report checks;

  explicit RMatrixCheck(const Algebra* alg) : R(alg), Rinv(alg) {}
};

/// Full certification of the canonical R: invertibility (with the inverse
/// computed by exact linear solve), the intertwiner law
/// flip(delta(h)) R = R delta(h) on generators and on fixed-seed random
/// elements, both coproduct expansion laws, the braid relation
/// R12 R13 R23 = R23 R13 R12, the counit normalizations, and (as an info
/// line) invariance under S (x) S.
RMatrixCheck verify_r_matrix(const StructureMaps& sm);

/// Cheap screening of an arbitrary candidate 2-tensor: intertwiner law on
/// the two generators and the braid relation. Used as a negative control
/// for perturbed coefficients.
Report check_r_candidate(const StructureMaps& sm, const Tensor2& R);

}  // namespace h4n
