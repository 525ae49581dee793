#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "h4n/quasitriangular.hpp"

using namespace h4n;

namespace {

Algebra make_h(int n, Rat a = Rat(1)) {
  AlgebraSpec spec;
  spec.family = Family::H;
  spec.n = n;
  spec.a = a;
  return Algebra(spec);
}

bool has_item(const Report& r, const std::string& id, Status st) {
  for (const CheckItem& it : r.items) {
    if (it.id == id && it.status == st) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("frozen expansion of the braiding element at n = 1") {
  for (Rat a : {Rat(1), Rat(5, 3)}) {
    Algebra alg = make_h(1, a);
    const auto& F = alg.field();
    Tensor2 r = build_r_matrix(alg);

    Tensor2 expect(&alg);
    Cyc half = F.from_rational(Rat(1, 2));
    Elem one = alg.one(), z = alg.g_gen(), x = alg.x_gen();
    Elem zx = alg.monomial(1, 1);
    expect.add_scaled_outer(one, one, half);
    expect.add_scaled_outer(z, one, half);
    expect.add_scaled_outer(one, z, half);
    expect.add_scaled_outer(z, z, -half);
    Cyc ca = F.from_rational(a);
    expect.add_scaled_outer(x, x, ca);
    expect.add_scaled_outer(zx, x, ca);
    expect.add_scaled_outer(x, zx, -ca);
    expect.add_scaled_outer(zx, zx, ca);

    CHECK(r == expect);
  }
}

TEST_CASE("braiding element is refused outside its family") {
  AlgebraSpec spec;
  spec.family = Family::WH;
  spec.n = 1;
  Algebra wh(spec);
  CHECK_THROWS_AS(build_r_matrix(wh), std::invalid_argument);
}

TEST_CASE("full certification at small sizes") {
  for (int n : {1, 2}) {
    for (Rat a : {Rat(0), Rat(1), Rat(2)}) {
      CAPTURE(n);
      CAPTURE(rat_str(a));
      Algebra alg = make_h(n, a);
      StructureMaps sm(&alg);
      RMatrixCheck rc = verify_r_matrix(sm);
      CHECK(rc.checks.clean());
      CHECK(has_item(rc.checks, "rmatrix-invertible", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-intertwiner-generators", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-intertwiner-random", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-coproduct-left", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-coproduct-right", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-braid", Status::Pass));
      CHECK(has_item(rc.checks, "rmatrix-counit", Status::Pass));
      // Direct inverse sanity on top of the reported check.
      CHECK(rc.R * rc.Rinv == Tensor2::unit(&alg));
      CHECK(rc.Rinv * rc.R == Tensor2::unit(&alg));
    }
  }
}

TEST_CASE("antipode invariance is tracked as an informational line") {
  Algebra alg = make_h(2);
  StructureMaps sm(&alg);
  RMatrixCheck rc = verify_r_matrix(sm);
  bool found = false;
  for (const CheckItem& it : rc.checks.items) {
    if (it.id == "rmatrix-antipode-invariance") {
      found = true;
      CHECK(it.status == Status::Info);
    }
  }
  CHECK(found);
}

TEST_CASE("negative control: a wrong nilpotent coefficient breaks the intertwiner law") {
  Algebra alg = make_h(2, Rat(1));
  StructureMaps sm(&alg);
  // Canonical coefficient is 2a; plant a instead. Only the group-generator
  // intertwiner condition is sensitive to the coefficient: the braid
  // relation holds for the whole one-parameter family.
  for (Rat xc : {Rat(1), Rat(3), Rat(0)}) {
    CAPTURE(rat_str(xc));
    Tensor2 bad = build_r_matrix_with_xcoef(alg, alg.field().from_rational(xc));
    Report rep = check_r_candidate(sm, bad);
    CHECK(rep.any_fail());
    CHECK(has_item(rep, "candidate-intertwiner-g", Status::Fail));
    CHECK(has_item(rep, "candidate-intertwiner-x", Status::Pass));
    CHECK(has_item(rep, "candidate-braid", Status::Pass));
  }
  // The correct coefficient passes the same screening.
  Report good = check_r_candidate(sm, build_r_matrix(alg));
  CHECK(good.clean());
}

TEST_CASE("at n = 1 every nilpotent coefficient screens clean") {
  // The smallest member carries a genuine one-parameter family of braidings,
  // so the screening cannot single out the canonical coefficient there.
  Algebra alg = make_h(1, Rat(1));
  StructureMaps sm(&alg);
  for (Rat xc : {Rat(0), Rat(1), Rat(3)}) {
    Tensor2 cand = build_r_matrix_with_xcoef(alg, alg.field().from_rational(xc));
    CHECK(check_r_candidate(sm, cand).clean());
  }
}
