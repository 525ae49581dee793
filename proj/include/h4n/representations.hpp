#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h4n/coalgebra.hpp"

namespace h4n {

/// Canonical name of an indecomposable module.
///
/// Families H and WH use kinds S (1-dim, x acts as 0), M (2-dim, x maps the
/// first basis vector to the second), and for WH additionally N (the
/// J-killed blocks N0, N1). The dual families use kinds Mks (M[k,s] with
/// k in {1,2} and s in {0,n}), P (P_j, 1 <= j <= n-1) and for WHDual N0, N1
/// plus the uncertified 2-dimensional claim M0 (x swaps the basis vectors,
/// g acts as 0).
struct Label {
  enum class Kind { S, M, N, Mks, P, M0 };
  Kind kind = Kind::S;
  int k = 0;  // Mks only: 1 or 2
  int i = 0;  // S/M/N index, P index j, Mks second index s

  static Label s_mod(int i) { return Label{Kind::S, 0, i}; }
  static Label m_mod(int i) { return Label{Kind::M, 0, i}; }
  static Label n_mod(int i) { return Label{Kind::N, 0, i}; }
  static Label mks_mod(int k, int s) { return Label{Kind::Mks, k, s}; }
  static Label p_mod(int j) { return Label{Kind::P, 0, j}; }
  static Label m0_mod() { return Label{Kind::M0, 0, 0}; }

  std::string str() const;
  /// Family-aware parse: "M0" is kind M for H/WH and kind M0 for the duals.
  static std::optional<Label> parse(const std::string& text, Family fam, int n);

  bool operator==(const Label& o) const {
    return kind == o.kind && k == o.k && i == o.i;
  }
  bool operator!=(const Label& o) const { return !(*this == o); }
  bool operator<(const Label& o) const;
};

/// Module given by the action matrices of the two generators (column
/// convention: coordinates transform as c |-> M c).
struct Rep {
  const Algebra* alg = nullptr;
  Mat g;
  Mat x;

  Rep() = default;
  Rep(const Algebra* a, Mat g_, Mat x_) : alg(a), g(std::move(g_)), x(std::move(x_)) {}
  int vdim() const { return g.rows(); }
};

/// The canonical action matrices of a labelled indecomposable.
Rep make_indec(const Algebra& alg, const Label& label);

/// Certified catalog in canonical order. For WHDual this lists the n+5
/// modules that are pairwise non-isomorphic and indecomposable; the claimed
/// extra module M0 is excluded (it splits, which the fusion and presentation
/// reports surface as deviations).
std::vector<Label> catalog_labels(const Algebra& alg);

/// True when the matrices satisfy the defining relations of the family.
bool rep_satisfies_relations(const Rep& rep);

/// Action matrix of an algebra element.
Mat rep_act(const Rep& rep, const Elem& e);

/// Module structure on the tensor product along the coproduct.
Rep tensor_rep(const StructureMaps& sm, const Rep& r1, const Rep& r2);

/// The algebra acting on itself by left multiplication.
Rep regular_rep(const Algebra& alg);

struct Decomposition {
  std::map<Label, int> mult;
  /// Change of basis: columns are the chosen vectors, grouped copy by copy
  /// in canonical label order; rep_act(gen) * basis == basis * blockdiag of
  /// the canonical summand matrices.
  Mat basis;

  Decomposition() = default;
  int total_dim(const Algebra& alg) const;
  bool operator==(const Decomposition& o) const { return mult == o.mult; }
};

/// Splits a module that satisfies the relations into catalog indecomposables
/// and certifies the splitting (throws std::logic_error if the certificate
/// fails, std::invalid_argument on invalid input).
Decomposition decompose(const Algebra& alg, const Rep& rep);

/// Multiset rendering, e.g. "1*M2 + 1*M3" (compact: "1*M2+1*M3").
std::string multiplicity_str(const std::map<Label, int>& mult, bool compact = false);

/// Invariant fingerprint separating non-isomorphic catalog modules: module
/// dimension, per-eigenvalue dimensions of the g-eigenspaces with the ranks
/// of x restricted to each, and the J-block data for weak families.
std::string rep_fingerprint(const Rep& rep);

/// Catalog health: every entry satisfies the relations, decomposes as one
/// copy of itself, and the fingerprints are pairwise distinct.
Report verify_catalog(const Algebra& alg);

}  // namespace h4n
