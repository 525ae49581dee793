#pragma once

#include <map>
#include <string>
#include <vector>

#include "h4n/representations.hpp"

namespace h4n {

/// Integer combination of module classes; the multiplication is
/// [A][B] = [A (x) B], left factor first.
using GreenElem = std::map<Label, long>;

GreenElem ge_from(const Label& l);
GreenElem ge_add(const GreenElem& a, const GreenElem& b);
GreenElem ge_sub(const GreenElem& a, const GreenElem& b);
GreenElem ge_scale(const GreenElem& a, long c);
bool ge_is_zero(const GreenElem& a);
/// Signed rendering, e.g. "2*S1 - 1*M0"; "0" when empty.
std::string ge_str(const GreenElem& a);

/// Structure constants of the representation ring over the catalog basis,
/// computed by tensor-decomposing every ordered pair.
class FusionTable {
 public:
  FusionTable(const Algebra* alg, std::vector<Label> labels,
              std::vector<std::vector<GreenElem>> table);

  const Algebra* algebra() const { return alg_; }
  const std::vector<Label>& labels() const { return labels_; }
  int index_of(const Label& l) const;
  const GreenElem& product_basis(int i, int j) const { return table_[i][j]; }
  /// Bilinear extension; every label occurring in the inputs must be a
  /// table label.
  GreenElem product(const GreenElem& a, const GreenElem& b) const;

 private:
  const Algebra* alg_;
  std::vector<Label> labels_;
  std::vector<std::vector<GreenElem>> table_;
};

/// Builds the table; `threads` > 1 splits the pair list into deterministic
/// slots (results are written by index, so the output is identical for any
/// thread count).
FusionTable compute_fusion_table(const StructureMaps& sm, int threads = 1);

/// Checks the bundled closed-form product rules item by item against the
/// computed table. Rules whose right-hand side mentions the claimed module
/// M0 of WHDual are compared after substituting [M0] -> [N0] + [N1]; a match
/// is reported as a deviation (the claim names a decomposable module), a
/// mismatch as a failure.
Report verify_fusion_rules(const StructureMaps& sm, const FusionTable& table);

/// ([A][B])[C] = [A]([B][C]) for all basis triples, through the table.
Report verify_table_associativity(const FusionTable& table);

/// H and HDual must commute; WH and WHDual must not, and the witness pair is
/// reported.
Report commutativity_report(const FusionTable& table);

/// Generators-and-relations presentation of the ring: evaluates each bundled
/// relation word and the claimed module basis over the catalog lattice
/// (integer change of basis must be unimodular). Nonzero residuals are
/// failures except for WHDual, where they are reported as deviations.
Report verify_presentation(const FusionTable& table);

}  // namespace h4n
