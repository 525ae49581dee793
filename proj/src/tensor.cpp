#include "h4n/tensor.hpp"

namespace h4n {

Tensor2::Tensor2(const Algebra* alg) : alg_(alg) {
  int d = alg->dim();
  c_.assign(static_cast<size_t>(d) * d, alg->field().zero());
}

Tensor2 Tensor2::outer(const Elem& a, const Elem& b) {
  Tensor2 t(a.algebra());
  t.add_scaled_outer(a, b, a.algebra()->field().one());
  return t;
}

Tensor2 Tensor2::unit(const Algebra* alg) { return outer(alg->one(), alg->one()); }

int Tensor2::dim() const { return alg_->dim(); }

const Cyc& Tensor2::at(int i, int j) const { return c_[static_cast<size_t>(i) * dim() + j]; }

void Tensor2::set(int i, int j, const Cyc& c) { c_[static_cast<size_t>(i) * dim() + j] = c; }

void Tensor2::add(int i, int j, const Cyc& c) {
  size_t s = static_cast<size_t>(i) * dim() + j;
  c_[s] = c_[s] + c;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 r(alg_);
  for (size_t s = 0; s < c_.size(); ++s) r.c_[s] = c_[s] + o.c_[s];
  return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  Tensor2 r(alg_);
  for (size_t s = 0; s < c_.size(); ++s) r.c_[s] = c_[s] - o.c_[s];
  return r;
}

Tensor2 Tensor2::operator*(const Cyc& s) const {
  Tensor2 r(alg_);
  for (size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t] * s;
  return r;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
  Tensor2 r(alg_);
  int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& cij = at(i, j);
      if (cij.is_zero()) continue;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          const Cyc& ckl = o.at(k, l);
          if (ckl.is_zero()) continue;
          Cyc scale = cij * ckl;
          const Elem& p1 = alg_->basis_product(i, k);
          const Elem& p2 = alg_->basis_product(j, l);
          for (int t1 = 0; t1 < d; ++t1) {
            const Cyc& a1 = p1.coeff_at(t1);
            if (a1.is_zero()) continue;
            for (int t2 = 0; t2 < d; ++t2) {
              const Cyc& a2 = p2.coeff_at(t2);
              if (a2.is_zero()) continue;
              r.add(t1, t2, scale * a1 * a2);
            }
          }
        }
      }
    }
  }
  return r;
}

bool Tensor2::operator==(const Tensor2& o) const {
  for (size_t s = 0; s < c_.size(); ++s) {
    if (!(c_[s] == o.c_[s])) return false;
  }
  return true;
}

bool Tensor2::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void Tensor2::add_scaled_outer(const Elem& a, const Elem& b, const Cyc& c) {
  int d = dim();
  for (int i = 0; i < d; ++i) {
    const Cyc& ai = a.coeff_at(i);
    if (ai.is_zero()) continue;
    Cyc cai = c * ai;
    for (int j = 0; j < d; ++j) {
      const Cyc& bj = b.coeff_at(j);
      if (bj.is_zero()) continue;
      add(i, j, cai * bj);
    }
  }
}

Tensor2 Tensor2::flip() const {
  Tensor2 r(alg_);
  int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

Mat Tensor2::as_column() const {
  Mat m(&alg_->field(), dim() * dim(), 1);
  for (size_t s = 0; s < c_.size(); ++s) m.at(static_cast<int>(s), 0) = c_[s];
  return m;
}

Tensor2 Tensor2::from_column(const Algebra* alg, const Mat& col) {
  Tensor2 t(alg);
  for (size_t s = 0; s < t.c_.size(); ++s) t.c_[s] = col.at(static_cast<int>(s), 0);
  return t;
}

std::string Tensor2::str() const {
  std::string out;
  int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = at(i, j);
      if (c.is_zero()) continue;
      auto [g1, x1] = alg_->monomial_at(i);
      auto [g2, x2] = alg_->monomial_at(j);
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + alg_->monomial_name(g1, x1) + "(x)" +
             alg_->monomial_name(g2, x2);
    }
  }
  return out.empty() ? "0" : out;
}

Tensor3::Tensor3(const Algebra* alg) : alg_(alg) {
  size_t d = static_cast<size_t>(alg->dim());
  c_.assign(d * d * d, alg->field().zero());
}

int Tensor3::dim() const { return alg_->dim(); }

const Cyc& Tensor3::at(int i, int j, int k) const {
  return c_[(static_cast<size_t>(i) * dim() + j) * dim() + k];
}

void Tensor3::add(int i, int j, int k, const Cyc& c) {
  size_t s = (static_cast<size_t>(i) * dim() + j) * dim() + k;
  c_[s] = c_[s] + c;
}

Tensor3 Tensor3::embed12(const Tensor2& t) {
  Tensor3 r(t.algebra());
  int d = r.dim();
  int u = t.algebra()->index_of(0, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = t.at(i, j);
      if (!c.is_zero()) r.add(i, j, u, c);
    }
  }
  return r;
}

Tensor3 Tensor3::embed23(const Tensor2& t) {
  Tensor3 r(t.algebra());
  int d = r.dim();
  int u = t.algebra()->index_of(0, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = t.at(i, j);
      if (!c.is_zero()) r.add(u, i, j, c);
    }
  }
  return r;
}

Tensor3 Tensor3::embed13(const Tensor2& t) {
  Tensor3 r(t.algebra());
  int d = r.dim();
  int u = t.algebra()->index_of(0, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Cyc& c = t.at(i, j);
      if (!c.is_zero()) r.add(i, u, j, c);
    }
  }
  return r;
}

Tensor3 Tensor3::operator*(const Tensor3& o) const {
  Tensor3 r(alg_);
  int d = dim();
  // Sparse double loop over nonzero slots of both factors; each slot product
  // expands through the (at most two-term) basis products per leg.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Cyc& cl = at(i, j, k);
        if (cl.is_zero()) continue;
        for (int p = 0; p < d; ++p) {
          const Elem& e1 = alg_->basis_product(i, p);
          if (e1.is_zero()) continue;
          for (int s = 0; s < d; ++s) {
            for (int t = 0; t < d; ++t) {
              const Cyc& cr = o.at(p, s, t);
              if (cr.is_zero()) continue;
              Cyc scale = cl * cr;
              const Elem& e2 = alg_->basis_product(j, s);
              const Elem& e3 = alg_->basis_product(k, t);
              for (int t1 = 0; t1 < d; ++t1) {
                const Cyc& a1 = e1.coeff_at(t1);
                if (a1.is_zero()) continue;
                for (int t2 = 0; t2 < d; ++t2) {
                  const Cyc& a2 = e2.coeff_at(t2);
                  if (a2.is_zero()) continue;
                  Cyc s12 = scale * a1 * a2;
                  for (int t3 = 0; t3 < d; ++t3) {
                    const Cyc& a3 = e3.coeff_at(t3);
                    if (a3.is_zero()) continue;
                    r.add(t1, t2, t3, s12 * a3);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

bool Tensor3::operator==(const Tensor3& o) const {
  for (size_t s = 0; s < c_.size(); ++s) {
    if (!(c_[s] == o.c_[s])) return false;
  }
  return true;
}

}  // namespace h4n
