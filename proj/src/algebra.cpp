#include "h4n/algebra.hpp"

#include <stdexcept>

namespace h4n {

std::string family_code(Family f) {
  switch (f) {
    case Family::H: return "h4n";
    case Family::WH: return "wh4n";
    case Family::HDual: return "h4n-dual";
    case Family::WHDual: return "wh4n-dual";
  }
  return "?";
}

std::optional<Family> family_from_code(const std::string& code) {
  if (code == "h4n") return Family::H;
  if (code == "wh4n") return Family::WH;
  if (code == "h4n-dual") return Family::HDual;
  if (code == "wh4n-dual") return Family::WHDual;
  return std::nullopt;
}

bool is_weak(Family f) { return f == Family::WH || f == Family::WHDual; }
bool is_dual(Family f) { return f == Family::HDual || f == Family::WHDual; }

Elem::Elem(const Algebra* alg) : alg_(alg) {
  coeffs_.assign(alg->dim(), alg->field().zero());
}

const Cyc& Elem::coeff(int gpow, int xpow) const {
  return coeffs_[alg_->index_of(gpow, xpow)];
}

void Elem::set_coeff(int gpow, int xpow, const Cyc& c) {
  coeffs_[alg_->index_of(gpow, xpow)] = c;
}

Elem Elem::operator+(const Elem& o) const {
  Elem r(alg_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

Elem Elem::operator-(const Elem& o) const {
  Elem r(alg_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

Elem Elem::operator-() const {
  Elem r(alg_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

Elem Elem::operator*(const Elem& o) const { return alg_->multiply(*this, o); }

Elem Elem::operator*(const Cyc& s) const {
  Elem r(alg_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
  return r;
}

bool Elem::operator==(const Elem& o) const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  }
  return true;
}

bool Elem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Elem Elem::pow(long e) const {
  if (e < 0) throw std::invalid_argument("Elem::pow: negative exponent");
  Elem r = alg_->one();
  for (long k = 0; k < e; ++k) r = r * (*this);
  return r;
}

Mat Elem::column() const {
  Mat m(&alg_->field(), alg_->dim(), 1);
  for (int i = 0; i < alg_->dim(); ++i) m.at(i, 0) = coeffs_[i];
  return m;
}

std::string Elem::str() const {
  std::string out;
  for (int idx = 0; idx < alg_->dim(); ++idx) {
    const Cyc& c = coeffs_[idx];
    if (c.is_zero()) continue;
    auto [gp, xp] = alg_->monomial_at(idx);
    std::string name = alg_->monomial_name(gp, xp);
    std::string term;
    if (name == "1") {
      term = "(" + c.str() + ")";
    } else if (c == alg_->field().one()) {
      term = name;
    } else {
      term = "(" + c.str() + ")*" + name;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Algebra::Algebra(AlgebraSpec spec) : spec_(spec) {
  if (spec_.n < 1) throw std::invalid_argument("Algebra: n must be >= 1");
  field_ = std::make_unique<CycField>(2 * spec_.n);
  gcount_ = is_weak(spec_.family) ? 2 * spec_.n + 1 : 2 * spec_.n;

  const Cyc a_scalar = field_->from_rational(spec_.a);
  mul_.assign(dim(), std::vector<Elem>(dim()));
  for (int i1 = 0; i1 < dim(); ++i1) {
    auto [i, j] = monomial_at(i1);
    for (int i2 = 0; i2 < dim(); ++i2) {
      auto [k, l] = monomial_at(i2);
      Elem out(this);
      // (g^i x^j)(g^k x^l): slide x^j across g^k, then resolve x^{j+l}.
      Cyc factor = (j == 1) ? comm_factor(k) : field_->one();
      long gsum = static_cast<long>(i) + k;
      int xsum = j + l;
      if (xsum < 2) {
        int gp = reduce_gpow(gsum);
        out.set_coeff(gp, xsum, out.coeff(gp, xsum) + factor);
      } else if (spec_.family == Family::HDual || spec_.family == Family::WHDual) {
        // x^2 = c*(1 - g^2) with c = a for HDual, c = 1 for WHDual.
        Cyc c = (spec_.family == Family::HDual) ? a_scalar : field_->one();
        int gp0 = reduce_gpow(gsum);
        int gp2 = reduce_gpow(gsum + 2);
        out.set_coeff(gp0, 0, out.coeff(gp0, 0) + factor * c);
        out.set_coeff(gp2, 0, out.coeff(gp2, 0) - factor * c);
      }
      mul_[i1][i2] = out;
    }
  }
}

int Algebra::reduce_gpow(long e) const {
  long m = 2 * spec_.n;
  if (!is_weak(spec_.family)) {
    long r = e % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
  }
  if (e == 0) return 0;
  if (e < 0) throw std::invalid_argument("reduce_gpow: negative exponent in weak family");
  long r = (e - 1) % m;
  return static_cast<int>(r + 1);
}

Cyc Algebra::comm_factor(long k) const {
  if (is_dual(spec_.family)) {
    return field_->from_rational(Rat((k % 2 == 0) ? 1 : -1));
  }
  return field_->q_power(-k);
}

Elem Algebra::zero() const { return Elem(this); }

Elem Algebra::one() const { return monomial(0, 0); }

Elem Algebra::scalar(const Cyc& c) const {
  Elem e(this);
  e.set_coeff(0, 0, c);
  return e;
}

Elem Algebra::monomial(int gpow, int xpow) const {
  Elem e(this);
  e.set_coeff(gpow, xpow, field_->one());
  return e;
}

Elem Algebra::multiply(const Elem& lhs, const Elem& rhs) const {
  Elem out(this);
  for (int i1 = 0; i1 < dim(); ++i1) {
    const Cyc& c1 = lhs.coeff_at(i1);
    if (c1.is_zero()) continue;
    for (int i2 = 0; i2 < dim(); ++i2) {
      const Cyc& c2 = rhs.coeff_at(i2);
      if (c2.is_zero()) continue;
      const Cyc c12 = c1 * c2;
      const Elem& prod = mul_[i1][i2];
      for (int t = 0; t < dim(); ++t) {
        const Cyc& pc = prod.coeff_at(t);
        if (!pc.is_zero()) out.set_coeff_at(t, out.coeff_at(t) + c12 * pc);
      }
    }
  }
  return out;
}

Elem Algebra::idempotent_E(int j) const {
  if (spec_.family != Family::H) {
    throw std::invalid_argument("idempotent_E is defined for family h4n only");
  }
  Elem e(this);
  Cyc inv2n = field_->from_rational(Rat(1, 2 * spec_.n));
  for (int i = 0; i < 2 * spec_.n; ++i) {
    e.set_coeff(i, 0, inv2n * field_->q_power(-static_cast<long>(i) * j));
  }
  return e;
}

Elem Algebra::central_J() const {
  if (!is_weak(spec_.family)) {
    throw std::invalid_argument("central_J is defined for weak families only");
  }
  return monomial(2 * spec_.n, 0);
}

std::string Algebra::gname() const {
  switch (spec_.family) {
    case Family::H: return "z";
    case Family::WH: return "Z";
    case Family::HDual: return "alpha";
    case Family::WHDual: return "G";
  }
  return "?";
}

std::string Algebra::xname() const {
  switch (spec_.family) {
    case Family::H: return "x";
    case Family::WH: return "X";
    case Family::HDual: return "eta";
    case Family::WHDual: return "X";
  }
  return "?";
}

std::string Algebra::monomial_name(int gpow, int xpow) const {
  if (gpow == 0 && xpow == 0) return "1";
  std::string out;
  if (gpow > 0) {
    out = gname();
    if (gpow > 1) out += "^" + std::to_string(gpow);
  }
  if (xpow == 1) {
    if (!out.empty()) out += "*";
    out += xname();
  }
  return out;
}

Mat Algebra::left_multiplication_matrix(const Elem& e) const {
  Mat m(field_.get(), dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Elem prod(this);
    for (int i1 = 0; i1 < dim(); ++i1) {
      const Cyc& c1 = e.coeff_at(i1);
      if (c1.is_zero()) continue;
      const Elem& p = mul_[i1][j];
      for (int t = 0; t < dim(); ++t) {
        const Cyc& pc = p.coeff_at(t);
        if (!pc.is_zero()) prod.set_coeff_at(t, prod.coeff_at(t) + c1 * pc);
      }
    }
    for (int t = 0; t < dim(); ++t) m.at(t, j) = prod.coeff_at(t);
  }
  return m;
}

Report verify_algebra_structure(const Algebra& alg) {
  Report rep;
  const auto& F = alg.field();
  const Family fam = alg.spec().family;
  const int n = alg.n();
  const int d = alg.dim();

  rep.require("alg-dim", d == (is_weak(fam) ? 4 * n + 2 : 4 * n),
              "basis size is " + std::to_string(d));

  Elem one = alg.one();
  bool unit_ok = true;
  for (int i = 0; i < d && unit_ok; ++i) {
    auto [gp, xp] = alg.monomial_at(i);
    Elem m = alg.monomial(gp, xp);
    unit_ok = (one * m == m) && (m * one == m);
  }
  rep.require("alg-unit-laws", unit_ok);

  bool assoc_ok = true;
  for (int i = 0; i < d && assoc_ok; ++i) {
    for (int j = 0; j < d && assoc_ok; ++j) {
      const Elem& ij = alg.basis_product(i, j);
      for (int k = 0; k < d && assoc_ok; ++k) {
        auto [gk, xk] = alg.monomial_at(k);
        Elem rhs_jk = alg.basis_product(j, k);
        Elem left = alg.multiply(ij, alg.monomial(gk, xk));
        auto [gi, xi] = alg.monomial_at(i);
        Elem right = alg.multiply(alg.monomial(gi, xi), rhs_jk);
        assoc_ok = (left == right);
      }
    }
  }
  rep.require("alg-associativity", assoc_ok);

  Elem g = alg.g_gen();
  Elem x = alg.x_gen();
  if (is_weak(fam)) {
    rep.require("alg-rel-gorder", g.pow(2 * n + 1) == g, "g^{2n+1} != g");
  } else {
    rep.require("alg-rel-gorder", g.pow(2 * n) == one, "g^{2n} != 1");
  }

  // zx = q xz for H/WH; alpha eta = -eta alpha for the duals.
  Elem gx = g * x;
  Elem xg = x * g;
  if (is_dual(fam)) {
    rep.require("alg-rel-commutation", gx == -xg);
  } else {
    rep.require("alg-rel-commutation", gx == xg * F.q_power(1));
  }

  Elem xsq = x * x;
  Elem expected_xsq = alg.zero();
  if (fam == Family::HDual) {
    Cyc a = F.from_rational(alg.spec().a);
    expected_xsq = (alg.one() - g.pow(2)) * a;
  } else if (fam == Family::WHDual) {
    expected_xsq = alg.one() - g.pow(2);
  }
  rep.require("alg-rel-xsquare", xsq == expected_xsq);

  if (fam == Family::H) {
    // E_j = (1/2n) sum_i q^{-ij} z^i form a complete orthogonal family with
    // z E_j = q^j E_j and x E_j = E_{j+1} x.
    std::vector<Elem> E;
    for (int j = 0; j < 2 * n; ++j) E.push_back(alg.idempotent_E(j));
    bool orth = true;
    for (int j = 0; j < 2 * n && orth; ++j) {
      for (int l = 0; l < 2 * n && orth; ++l) {
        Elem prod = E[j] * E[l];
        orth = (j == l) ? (prod == E[j]) : prod.is_zero();
      }
    }
    rep.require("alg-idempotents-orthogonal", orth);

    Elem sum = alg.zero();
    for (const auto& e : E) sum = sum + e;
    rep.require("alg-idempotents-complete", sum == one);

    bool zact = true;
    for (int j = 0; j < 2 * n && zact; ++j) {
      zact = (g * E[j] == E[j] * F.q_power(j)) && (g * E[j] == E[j] * g);
    }
    rep.require("alg-idempotents-z-eigen", zact);

    bool xshift = true;
    for (int j = 0; j < 2 * n && xshift; ++j) {
      xshift = (x * E[j] == E[(j + 1) % (2 * n)] * x);
    }
    rep.require("alg-idempotents-x-shift", xshift);
  }

  return rep;
}

PeirceResult peirce_decomposition(const Algebra& alg) {
  if (!is_weak(alg.spec().family)) {
    throw std::invalid_argument("peirce_decomposition needs a weak family");
  }
  PeirceResult res;
  Report& rep = res.checks;
  const auto& F = alg.field();
  const int n = alg.n();
  const int d = alg.dim();

  Elem J = alg.central_J();
  Elem Jc = alg.one() - J;
  rep.require("peirce-j-idempotent", J * J == J);

  bool central = true;
  for (int i = 0; i < d && central; ++i) {
    auto [gp, xp] = alg.monomial_at(i);
    Elem m = alg.monomial(gp, xp);
    central = (J * m == m * J);
  }
  rep.require("peirce-j-central", central);

  // Spans of A*J and A*(1-J) from the images of all basis monomials.
  Mat b1(&F, d, d), b2(&F, d, d);
  for (int i = 0; i < d; ++i) {
    auto [gp, xp] = alg.monomial_at(i);
    Elem m = alg.monomial(gp, xp);
    Mat c1 = (m * J).column();
    Mat c2 = (m * Jc).column();
    for (int r = 0; r < d; ++r) {
      b1.at(r, i) = c1.at(r, 0);
      b2.at(r, i) = c2.at(r, 0);
    }
  }
  res.dim_block1 = rank(b1);
  res.dim_block2 = rank(b2);
  rep.require("peirce-block1-dim", res.dim_block1 == 4 * n,
              "dim A*J = " + std::to_string(res.dim_block1));
  rep.require("peirce-block2-dim", res.dim_block2 == 2,
              "dim A*(1-J) = " + std::to_string(res.dim_block2));
  rep.require("peirce-direct-sum", rank(b1.hstack(b2)) == d);

  // Block A*J carries the strong family: generator images gJ, xJ satisfy its
  // defining relations with unit J, and their monomials span the block.
  Elem gJ = alg.g_gen() * J;
  Elem xJ = alg.x_gen() * J;
  // Powers inside the block use J as the empty product, not the global unit.
  Elem gJ2n = J;
  for (int k = 0; k < 2 * n; ++k) gJ2n = gJ2n * gJ;
  bool rel_order = (gJ2n == J);
  bool rel_comm;
  Elem gx = gJ * xJ;
  Elem xg = xJ * gJ;
  if (alg.spec().family == Family::WH) {
    rel_comm = (gx == xg * F.q_power(1));
  } else {
    rel_comm = (gx == -xg);
  }
  Elem xJsq = xJ * xJ;
  bool rel_xsq;
  if (alg.spec().family == Family::WH) {
    rel_xsq = xJsq.is_zero();
  } else {
    rel_xsq = (xJsq == J - gJ * gJ);
  }
  rep.require("peirce-block1-relations", rel_order && rel_comm && rel_xsq);

  Mat imgs(&F, d, 4 * n);
  {
    int col = 0;
    Elem gpow = J;
    for (int i = 0; i < 2 * n; ++i) {
      for (int j = 0; j < 2; ++j) {
        Elem m = (j == 0) ? gpow : gpow * xJ;
        Mat c = m.column();
        for (int r = 0; r < d; ++r) imgs.at(r, col) = c.at(r, 0);
        ++col;
      }
      gpow = gpow * gJ;
    }
  }
  rep.require("peirce-block1-bijective", rank(imgs) == 4 * n);
  rep.require("peirce-block1-span", rank(b1.hstack(imgs)) == res.dim_block1);

  // Block A*(1-J): for WH the generator u = x(1-J) squares to zero; for
  // WHDual g(1-J) = 0 and u squares to 1-J, the block unit.
  Elem u = alg.x_gen() * Jc;
  if (alg.spec().family == Family::WHDual) {
    rep.require("peirce-block2-g-vanishes", (alg.g_gen() * Jc).is_zero());
    rep.require("peirce-block2-usquare", u * u == Jc, "(x(1-J))^2 != 1-J");
  } else {
    rep.require("peirce-block2-usquare", (u * u).is_zero(), "(x(1-J))^2 != 0");
  }
  Mat span2 = Jc.column().hstack(u.column());
  rep.require("peirce-block2-basis", rank(span2) == 2);

  return res;
}

}  // namespace h4n
