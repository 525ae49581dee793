#include "h4n/quasitriangular.hpp"

#include <stdexcept>

namespace h4n {

namespace {

// Deterministic xorshift64; the stream is part of the test contract.
struct Rng {
  unsigned long long s = 88172645463325252ull;
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int m) { return static_cast<int>(next() % static_cast<unsigned>(m)); }
};

Elem random_product(const Algebra& alg, Rng& rng) {
  // Product of two small random linear combinations of basis monomials.
  auto rand_elem = [&]() {
    Elem e(&alg);
    for (int k = 0; k < 3; ++k) {
      int idx = rng.below(alg.dim());
      int c = rng.below(7) - 3;
      e.set_coeff_at(idx, e.coeff_at(idx) + alg.field().from_rational(Rat(c)));
    }
    return e;
  };
  return rand_elem() * rand_elem();
}

Tensor3 delta_leg1(const StructureMaps& sm, const Tensor2& R) {
  Tensor3 out(R.algebra());
  int d = R.algebra()->dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = R.at(i, j);
      if (c.is_zero()) continue;
      const Tensor2& D = sm.delta_basis(i);
      for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
          const Cyc& dc = D.at(u, v);
          if (!dc.is_zero()) out.add(u, v, j, c * dc);
        }
      }
    }
  }
  return out;
}

Tensor3 delta_leg2(const StructureMaps& sm, const Tensor2& R) {
  Tensor3 out(R.algebra());
  int d = R.algebra()->dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = R.at(i, j);
      if (c.is_zero()) continue;
      const Tensor2& D = sm.delta_basis(j);
      for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
          const Cyc& dc = D.at(u, v);
          if (!dc.is_zero()) out.add(i, u, v, c * dc);
        }
      }
    }
  }
  return out;
}

bool intertwines(const StructureMaps& sm, const Tensor2& R, const Elem& h) {
  Tensor2 dh = sm.comultiply(h);
  return dh.flip() * R == R * dh;
}

}  // namespace

Tensor2 build_r_matrix_with_xcoef(const Algebra& alg, const Cyc& xcoef) {
  if (alg.spec().family != Family::H) {
    throw std::invalid_argument("the braiding element is built for family h4n only");
  }
  const auto& F = alg.field();
  const int m = 2 * alg.n();
  std::vector<Elem> E, Ex;
  for (int j = 0; j < m; ++j) {
    E.push_back(alg.idempotent_E(j));
    Ex.push_back(E.back() * alg.x_gen());
  }
  Tensor2 R(&alg);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Cyc sign_group = F.from_rational(Rat((i * j) % 2 == 0 ? 1 : -1));
      R.add_scaled_outer(E[i], E[j], sign_group);
      if (!xcoef.is_zero()) {
        Cyc sign_x = F.from_rational(Rat((i * (j + 1)) % 2 == 0 ? 1 : -1));
        R.add_scaled_outer(Ex[i], Ex[j], xcoef * sign_x);
      }
    }
  }
  return R;
}

Tensor2 build_r_matrix(const Algebra& alg) {
  Cyc two_a = alg.field().from_rational(Rat(2) * alg.spec().a);
  return build_r_matrix_with_xcoef(alg, two_a);
}

RMatrixCheck verify_r_matrix(const StructureMaps& sm) {
  const Algebra& alg = *sm.algebra();
  RMatrixCheck res(&alg);
  Report& rep = res.checks;
  const auto& F = alg.field();
  const int d = alg.dim();
  const int D = d * d;

  res.R = build_r_matrix(alg);
  const Tensor2& R = res.R;
  Tensor2 unit = Tensor2::unit(&alg);

  // Invertibility: solve (left multiplication by R) * vec(X) = vec(1 (x) 1),
  // then confirm X is also a left inverse.
  {
    Mat M(&F, D, D);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Cyc& c = R.at(i, j);
        if (c.is_zero()) continue;
        for (int p = 0; p < d; ++p) {
          const Elem& p1 = alg.basis_product(i, p);
          if (p1.is_zero()) continue;
          for (int q = 0; q < d; ++q) {
            const Elem& p2 = alg.basis_product(j, q);
            if (p2.is_zero()) continue;
            int col = p * d + q;
            for (int t1 = 0; t1 < d; ++t1) {
              const Cyc& a1 = p1.coeff_at(t1);
              if (a1.is_zero()) continue;
              Cyc ca1 = c * a1;
              for (int t2 = 0; t2 < d; ++t2) {
                const Cyc& a2 = p2.coeff_at(t2);
                if (a2.is_zero()) continue;
                int row = t1 * d + t2;
                M.at(row, col) = M.at(row, col) + ca1 * a2;
              }
            }
          }
        }
      }
    }
    auto sol = solve(M, unit.as_column());
    if (!sol) {
      rep.fail("rmatrix-invertible", "no right inverse exists");
    } else {
      res.Rinv = Tensor2::from_column(&alg, *sol);
      bool two_sided = (R * res.Rinv == unit) && (res.Rinv * R == unit);
      rep.require("rmatrix-invertible", two_sided, "inverse is one-sided only");
    }
  }

  rep.require("rmatrix-intertwiner-generators",
              intertwines(sm, R, alg.g_gen()) && intertwines(sm, R, alg.x_gen()));

  {
    Rng rng;
    bool ok = true;
    for (int k = 0; k < 5 && ok; ++k) ok = intertwines(sm, R, random_product(alg, rng));
    rep.require("rmatrix-intertwiner-random", ok);
  }

  Tensor3 R12 = Tensor3::embed12(R);
  Tensor3 R13 = Tensor3::embed13(R);
  Tensor3 R23 = Tensor3::embed23(R);
  rep.require("rmatrix-coproduct-left", delta_leg1(sm, R) == R13 * R23);
  rep.require("rmatrix-coproduct-right", delta_leg2(sm, R) == R13 * R12);
  rep.require("rmatrix-braid", (R12 * R13) * R23 == (R23 * R13) * R12);

  {
    Elem left(&alg), right(&alg);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Cyc& c = R.at(i, j);
        if (c.is_zero()) continue;
        Cyc ei = sm.counit_basis(i), ej = sm.counit_basis(j);
        if (!ei.is_zero()) left.set_coeff_at(j, left.coeff_at(j) + c * ei);
        if (!ej.is_zero()) right.set_coeff_at(i, right.coeff_at(i) + c * ej);
      }
    }
    rep.require("rmatrix-counit", left == alg.one() && right == alg.one());
  }

  {
    Tensor2 ss(&alg);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Cyc& c = R.at(i, j);
        if (c.is_zero()) continue;
        ss.add_scaled_outer(sm.antipode_basis(i), sm.antipode_basis(j), c);
      }
    }
    rep.info("rmatrix-antipode-invariance",
             ss == R ? "(S(x)S)(R) = R holds" : "(S(x)S)(R) != R");
  }

  return res;
}

Report check_r_candidate(const StructureMaps& sm, const Tensor2& R) {
  Report rep;
  const Algebra& alg = *sm.algebra();
  rep.require("candidate-intertwiner-g", intertwines(sm, R, alg.g_gen()));
  rep.require("candidate-intertwiner-x", intertwines(sm, R, alg.x_gen()));
  Tensor3 R12 = Tensor3::embed12(R);
  Tensor3 R13 = Tensor3::embed13(R);
  Tensor3 R23 = Tensor3::embed23(R);
  rep.require("candidate-braid", (R12 * R13) * R23 == (R23 * R13) * R12);
  return rep;
}

}  // namespace h4n
