#include "h4n/representations.hpp"

#include <algorithm>
#include <stdexcept>

namespace h4n {

namespace {

Mat select_columns(const Mat& m, const std::vector<int>& idxs) {
  Mat out(m.field(), m.rows(), static_cast<int>(idxs.size()));
  for (size_t j = 0; j < idxs.size(); ++j) {
    for (int r = 0; r < m.rows(); ++r) out.at(r, static_cast<int>(j)) = m.at(r, idxs[j]);
  }
  return out;
}

Mat column_space_basis(const Mat& m) { return select_columns(m, independent_columns(m)); }

Mat mat_pow(const Mat& m, int e) {
  Mat acc = Mat::identity(m.field(), m.rows());
  for (int k = 0; k < e; ++k) acc = acc * m;
  return acc;
}

int label_dim(Family fam, const Label& l) {
  switch (l.kind) {
    case Label::Kind::S: return 1;
    case Label::Kind::M: return 2;
    case Label::Kind::N: return fam == Family::WH ? (l.i == 0 ? 1 : 2) : 1;
    case Label::Kind::Mks: return l.k;
    case Label::Kind::P: return 2;
    case Label::Kind::M0: return 2;
  }
  return 0;
}

int kind_rank(Label::Kind k) {
  switch (k) {
    case Label::Kind::S: return 0;
    case Label::Kind::M: return 1;
    case Label::Kind::Mks: return 0;
    case Label::Kind::P: return 1;
    case Label::Kind::N: return 2;
    case Label::Kind::M0: return 3;
  }
  return 4;
}

// Per-label ordered lists of copies; each copy is its ambient column tuple.
struct CopyList {
  std::map<Label, std::vector<std::vector<Mat>>> copies;

  void add(const Label& l, std::vector<Mat> cols) {
    copies[l].push_back(std::move(cols));
  }
};

// Given the span of an eigenvalue-t eigenspace (coords in the block basis B,
// ambient = B * coords) and the x-maps into and out of it, collect the 1-dim
// summands: kernel vectors of x_out extending the image of x_in.
std::vector<Mat> one_dim_choices(const Mat& ambient_basis, const Mat& x_out,
                                 const Mat& x_in, const std::vector<int>& src_in) {
  Mat targets = select_columns(x_in, src_in);
  Mat ker = kernel_basis(x_out);
  Mat combined = targets.hstack(ker);
  std::vector<Mat> out;
  for (int idx : independent_columns(combined)) {
    if (idx < targets.cols()) continue;
    out.push_back(ambient_basis * combined.col(idx));
  }
  return out;
}

// Splits the restriction to span(B) for a strong-type action; for dual-like
// families x shifts g-eigenvalues by n, otherwise by 1.
void decompose_strong_block(const Algebra& alg, const Mat& B, const Mat& G,
                            const Mat& X, CopyList& out) {
  const auto& F = alg.field();
  const bool dual = is_dual(alg.spec().family);
  const int n = alg.n();
  const int m = B.cols();
  if (m == 0) return;

  auto gr_opt = solve(B, G * B);
  auto xr_opt = solve(B, X * B);
  if (!gr_opt || !xr_opt) throw std::logic_error("block not invariant under the action");
  Mat gR = *gr_opt, xR = *xr_opt;

  // Eigenspaces of g for eigenvalue q^t, in block coordinates.
  std::vector<Mat> K;
  std::vector<Mat> ambient;
  int total = 0;
  for (int t = 0; t < 2 * n; ++t) {
    Mat shifted = gR;
    Cyc ev = F.q_power(t);
    for (int r = 0; r < m; ++r) shifted.at(r, r) = shifted.at(r, r) - ev;
    K.push_back(kernel_basis(shifted));
    ambient.push_back(B * K.back());
    total += K.back().cols();
  }
  if (total != m) throw std::logic_error("g is not semisimple over the expected eigenvalues");

  // x maps the eigenvalue-q^t space to the eigenvalue-q^{t+shift} space.
  const int shift = dual ? n : 1;
  std::vector<Mat> A(2 * n, Mat());
  for (int t = 0; t < 2 * n; ++t) {
    int tn = (t + shift) % (2 * n);
    auto a_opt = solve(ambient[tn], X * ambient[t]);
    if (!a_opt) throw std::logic_error("x does not shift g-eigenspaces as required");
    A[t] = *a_opt;
  }

  if (!dual) {
    std::vector<std::vector<int>> src(2 * n);
    for (int t = 0; t < 2 * n; ++t) src[t] = independent_columns(A[t]);
    for (int t = 0; t < 2 * n; ++t) {
      int prev = (t + 2 * n - 1) % (2 * n);
      std::vector<Mat> singles = one_dim_choices(ambient[t], A[t], A[prev], src[prev]);
      for (const Mat& v : singles) out.add(Label::s_mod(t), {v});
      for (int s : src[t]) {
        Mat v = ambient[t].col(s);
        out.add(Label::m_mod(t), {v, X * v});
      }
    }
    return;
  }

  // Dual pairing: the (1, -1) pair carries the M[k,s] modules, the
  // (q^j, -q^j) pairs for 1 <= j <= n-1 are free over P_j.
  std::vector<int> src_u = independent_columns(A[0]);
  std::vector<int> src_w = independent_columns(A[n]);
  for (Mat v : one_dim_choices(ambient[0], A[0], A[n], src_w)) {
    out.add(Label::mks_mod(1, 0), {v});
  }
  for (Mat v : one_dim_choices(ambient[n], A[n], A[0], src_u)) {
    out.add(Label::mks_mod(1, n), {v});
  }
  for (int s : src_u) {
    Mat v = ambient[0].col(s);
    out.add(Label::mks_mod(2, 0), {v, X * v});
  }
  for (int s : src_w) {
    Mat v = ambient[n].col(s);
    out.add(Label::mks_mod(2, n), {v, X * v});
  }
  for (int j = 1; j < n; ++j) {
    if (K[j].cols() != K[j + n].cols()) {
      throw std::logic_error("paired eigenspaces differ in dimension");
    }
    if (rank(A[j]) != K[j].cols()) {
      throw std::logic_error("x is not invertible on a paired eigenspace");
    }
    for (int c = 0; c < ambient[j].cols(); ++c) {
      Mat v = ambient[j].col(c);
      out.add(Label::p_mod(j), {v, X * v});
    }
  }
}

}  // namespace

std::string Label::str() const {
  switch (kind) {
    case Kind::S: return "S" + std::to_string(i);
    case Kind::M: return "M" + std::to_string(i);
    case Kind::N: return "N" + std::to_string(i);
    case Kind::Mks: return "M[" + std::to_string(k) + "," + std::to_string(i) + "]";
    case Kind::P: return "P" + std::to_string(i);
    case Kind::M0: return "M0";
  }
  return "?";
}

std::optional<Label> Label::parse(const std::string& text, Family fam, int n) {
  auto parse_int = [](const std::string& s, int& out) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    try {
      out = std::stoi(s);
    } catch (...) {
      return false;
    }
    return true;
  };

  if (is_dual(fam)) {
    if (text == "M0" && fam == Family::WHDual) return m0_mod();
    if (text.size() >= 6 && text.rfind("M[", 0) == 0 && text.back() == ']') {
      std::string inner = text.substr(2, text.size() - 3);
      auto comma = inner.find(',');
      if (comma == std::string::npos) return std::nullopt;
      int k = 0, s = 0;
      if (!parse_int(inner.substr(0, comma), k)) return std::nullopt;
      if (!parse_int(inner.substr(comma + 1), s)) return std::nullopt;
      if ((k != 1 && k != 2) || (s != 0 && s != n)) return std::nullopt;
      return mks_mod(k, s);
    }
    if (text.size() >= 2 && text[0] == 'P') {
      int j = 0;
      if (!parse_int(text.substr(1), j)) return std::nullopt;
      if (j < 1 || j > n - 1) return std::nullopt;
      return p_mod(j);
    }
    if (fam == Family::WHDual && text.size() >= 2 && text[0] == 'N') {
      int i = 0;
      if (!parse_int(text.substr(1), i)) return std::nullopt;
      if (i != 0 && i != 1) return std::nullopt;
      return n_mod(i);
    }
    return std::nullopt;
  }

  if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'M')) {
    int i = 0;
    if (!parse_int(text.substr(1), i)) return std::nullopt;
    if (i < 0 || i >= 2 * n) return std::nullopt;
    return text[0] == 'S' ? s_mod(i) : m_mod(i);
  }
  if (fam == Family::WH && text.size() >= 2 && text[0] == 'N') {
    int i = 0;
    if (!parse_int(text.substr(1), i)) return std::nullopt;
    if (i != 0 && i != 1) return std::nullopt;
    return n_mod(i);
  }
  return std::nullopt;
}

bool Label::operator<(const Label& o) const {
  int r1 = kind_rank(kind), r2 = kind_rank(o.kind);
  if (r1 != r2) return r1 < r2;
  if (k != o.k) return k < o.k;
  return i < o.i;
}

Rep make_indec(const Algebra& alg, const Label& label) {
  const auto& F = alg.field();
  const Family fam = alg.spec().family;
  const int n = alg.n();
  auto bad = [&]() {
    return std::invalid_argument("label " + label.str() + " is not valid for family " +
                                 family_code(fam));
  };
  Cyc z = F.zero(), one = F.one();

  switch (label.kind) {
    case Label::Kind::S: {
      if (is_dual(fam) || label.i < 0 || label.i >= 2 * n) throw bad();
      Mat g(&F, 1, 1), x(&F, 1, 1);
      g.at(0, 0) = F.q_power(label.i);
      return Rep(&alg, g, x);
    }
    case Label::Kind::M: {
      if (is_dual(fam) || label.i < 0 || label.i >= 2 * n) throw bad();
      Mat g(&F, 2, 2), x(&F, 2, 2);
      g.at(0, 0) = F.q_power(label.i);
      g.at(1, 1) = F.q_power(label.i + 1);
      x.at(1, 0) = one;
      return Rep(&alg, g, x);
    }
    case Label::Kind::N: {
      if (label.i != 0 && label.i != 1) throw bad();
      if (fam == Family::WH) {
        int d = label.i == 0 ? 1 : 2;
        Mat g(&F, d, d), x(&F, d, d);
        if (label.i == 1) x.at(1, 0) = one;
        return Rep(&alg, g, x);
      }
      if (fam == Family::WHDual) {
        Mat g(&F, 1, 1), x(&F, 1, 1);
        x.at(0, 0) = label.i == 0 ? one : -one;
        return Rep(&alg, g, x);
      }
      throw bad();
    }
    case Label::Kind::Mks: {
      if (!is_dual(fam) || (label.k != 1 && label.k != 2) ||
          (label.i != 0 && label.i != n)) {
        throw bad();
      }
      Cyc eps = label.i == 0 ? one : -one;
      if (label.k == 1) {
        Mat g(&F, 1, 1), x(&F, 1, 1);
        g.at(0, 0) = eps;
        return Rep(&alg, g, x);
      }
      Mat g(&F, 2, 2), x(&F, 2, 2);
      g.at(0, 0) = eps;
      g.at(1, 1) = -eps;
      x.at(1, 0) = one;
      return Rep(&alg, g, x);
    }
    case Label::Kind::P: {
      if (!is_dual(fam) || label.i < 1 || label.i > n - 1) throw bad();
      Cyc kappa = one - F.q_power(2 * label.i);
      if (fam == Family::HDual) kappa = kappa * F.from_rational(alg.spec().a);
      Mat g(&F, 2, 2), x(&F, 2, 2);
      g.at(0, 0) = F.q_power(label.i);
      g.at(1, 1) = F.q_power(label.i + n);
      x.at(0, 1) = kappa;
      x.at(1, 0) = one;
      return Rep(&alg, g, x);
    }
    case Label::Kind::M0: {
      if (fam != Family::WHDual) throw bad();
      Mat g(&F, 2, 2), x(&F, 2, 2);
      x.at(0, 1) = one;
      x.at(1, 0) = one;
      return Rep(&alg, g, x);
    }
  }
  (void)z;
  throw bad();
}

std::vector<Label> catalog_labels(const Algebra& alg) {
  const Family fam = alg.spec().family;
  const int n = alg.n();
  std::vector<Label> out;
  if (!is_dual(fam)) {
    for (int i = 0; i < 2 * n; ++i) out.push_back(Label::s_mod(i));
    for (int i = 0; i < 2 * n; ++i) out.push_back(Label::m_mod(i));
    if (fam == Family::WH) {
      out.push_back(Label::n_mod(0));
      out.push_back(Label::n_mod(1));
    }
    return out;
  }
  out.push_back(Label::mks_mod(1, 0));
  out.push_back(Label::mks_mod(1, n));
  out.push_back(Label::mks_mod(2, 0));
  out.push_back(Label::mks_mod(2, n));
  for (int j = 1; j <= n - 1; ++j) out.push_back(Label::p_mod(j));
  if (fam == Family::WHDual) {
    out.push_back(Label::n_mod(0));
    out.push_back(Label::n_mod(1));
  }
  return out;
}

bool rep_satisfies_relations(const Rep& rep) {
  const Algebra& alg = *rep.alg;
  const auto& F = alg.field();
  const int n = alg.n();
  const int d = rep.vdim();
  if (rep.g.rows() != d || rep.g.cols() != d || rep.x.rows() != d || rep.x.cols() != d) {
    return false;
  }
  Mat I = Mat::identity(&F, d);
  Mat g2n = mat_pow(rep.g, 2 * n);
  if (is_weak(alg.spec().family)) {
    if (!(g2n * rep.g == rep.g)) return false;
  } else {
    if (!(g2n == I)) return false;
  }
  if (is_dual(alg.spec().family)) {
    if (!((rep.g * rep.x + rep.x * rep.g).is_zero())) return false;
  } else {
    if (!(rep.g * rep.x == (rep.x * rep.g) * F.q_power(1))) return false;
  }
  Mat x2 = rep.x * rep.x;
  switch (alg.spec().family) {
    case Family::H:
    case Family::WH:
      return x2.is_zero();
    case Family::HDual:
      return x2 == (I - rep.g * rep.g) * F.from_rational(alg.spec().a);
    case Family::WHDual:
      return x2 == I - rep.g * rep.g;
  }
  return false;
}

Mat rep_act(const Rep& rep, const Elem& e) {
  const Algebra& alg = *rep.alg;
  const auto& F = alg.field();
  Mat out(&F, rep.vdim(), rep.vdim());
  std::vector<Mat> gpow;
  gpow.push_back(Mat::identity(&F, rep.vdim()));
  for (int i = 1; i < alg.gcount(); ++i) gpow.push_back(gpow.back() * rep.g);
  for (int idx = 0; idx < alg.dim(); ++idx) {
    const Cyc& c = e.coeff_at(idx);
    if (c.is_zero()) continue;
    auto [gp, xp] = alg.monomial_at(idx);
    Mat m = xp == 0 ? gpow[gp] : gpow[gp] * rep.x;
    out = out + m * c;
  }
  return out;
}

Rep tensor_rep(const StructureMaps& sm, const Rep& r1, const Rep& r2) {
  const Algebra& alg = *sm.algebra();
  const auto& F = alg.field();
  const int d = alg.dim();
  const int vd = r1.vdim() * r2.vdim();

  // Monomial action tables for both factors.
  std::vector<Mat> act1, act2;
  for (int idx = 0; idx < d; ++idx) {
    auto [gp, xp] = alg.monomial_at(idx);
    Elem m = alg.monomial(gp, xp);
    act1.push_back(rep_act(r1, m));
    act2.push_back(rep_act(r2, m));
  }

  auto through_delta = [&](int gen_idx) {
    Mat out(&F, vd, vd);
    const Tensor2& D = sm.delta_basis(gen_idx);
    for (int s = 0; s < d; ++s) {
      for (int t = 0; t < d; ++t) {
        const Cyc& c = D.at(s, t);
        if (c.is_zero()) continue;
        out = out + act1[s].kronecker(act2[t]) * c;
      }
    }
    return out;
  };

  return Rep(&alg, through_delta(alg.index_of(1, 0)), through_delta(alg.index_of(0, 1)));
}

Rep regular_rep(const Algebra& alg) {
  return Rep(&alg, alg.left_multiplication_matrix(alg.g_gen()),
             alg.left_multiplication_matrix(alg.x_gen()));
}

int Decomposition::total_dim(const Algebra& alg) const {
  int d = 0;
  for (const auto& [l, c] : mult) d += c * label_dim(alg.spec().family, l);
  return d;
}

Decomposition decompose(const Algebra& alg, const Rep& rep) {
  const auto& F = alg.field();
  const int n = alg.n();
  if (rep.alg != &alg) throw std::invalid_argument("rep belongs to a different algebra");
  if (!rep_satisfies_relations(rep)) {
    throw std::invalid_argument("matrices do not satisfy the defining relations");
  }
  if (alg.spec().family == Family::HDual && alg.spec().a == Rat(0)) {
    throw std::invalid_argument("decomposition over h4n-dual needs a != 0");
  }

  const int vd = rep.vdim();
  CopyList out;

  if (is_weak(alg.spec().family)) {
    Mat P = mat_pow(rep.g, 2 * n);
    if (!(P * P == P)) throw std::logic_error("J does not act idempotently");
    Mat B1 = column_space_basis(P);
    Mat B0 = kernel_basis(P);
    if (B1.cols() + B0.cols() != vd) throw std::logic_error("J-splitting is not direct");
    decompose_strong_block(alg, B1, rep.g, rep.x, out);

    if (B0.cols() > 0) {
      if (!(rep.g * B0).is_zero()) throw std::logic_error("g does not kill the J-kernel");
      auto x0_opt = solve(B0, rep.x * B0);
      if (!x0_opt) throw std::logic_error("x does not preserve the J-kernel");
      Mat x0 = *x0_opt;
      if (alg.spec().family == Family::WH) {
        std::vector<int> src = independent_columns(x0);
        for (Mat v : one_dim_choices(B0, x0, x0, src)) out.add(Label::n_mod(0), {v});
        for (int s : src) {
          Mat v = B0.col(s);
          out.add(Label::n_mod(1), {v, rep.x * v});
        }
      } else {
        Mat I0 = Mat::identity(&F, x0.rows());
        Mat plus = kernel_basis(x0 - I0);
        Mat minus = kernel_basis(x0 + I0);
        if (plus.cols() + minus.cols() != B0.cols()) {
          throw std::logic_error("x is not an involution on the J-kernel");
        }
        for (int c = 0; c < plus.cols(); ++c) out.add(Label::n_mod(0), {B0 * plus.col(c)});
        for (int c = 0; c < minus.cols(); ++c) out.add(Label::n_mod(1), {B0 * minus.col(c)});
      }
    }
  } else {
    decompose_strong_block(alg, Mat::identity(&F, vd), rep.g, rep.x, out);
  }

  // Assemble the certificate basis and the canonical block matrices.
  Decomposition dec;
  std::vector<Mat> cols;
  std::vector<Mat> gblocks, xblocks;
  for (const auto& [label, copies] : out.copies) {
    dec.mult[label] = static_cast<int>(copies.size());
    Rep canon = make_indec(alg, label);
    for (const auto& copy : copies) {
      for (const Mat& v : copy) cols.push_back(v);
      gblocks.push_back(canon.g);
      xblocks.push_back(canon.x);
    }
  }
  if (dec.total_dim(alg) != vd) throw std::logic_error("summand dimensions do not add up");

  Mat B(&F, vd, vd);
  {
    int j = 0;
    for (const Mat& v : cols) {
      for (int r = 0; r < vd; ++r) B.at(r, j) = v.at(r, 0);
      ++j;
    }
    if (j != vd) throw std::logic_error("basis column count mismatch");
  }
  Mat blockG = Mat::block_diag(&F, gblocks);
  Mat blockX = Mat::block_diag(&F, xblocks);
  if (rank(B) != vd) throw std::logic_error("certificate basis is singular");
  if (!(rep.g * B == B * blockG) || !(rep.x * B == B * blockX)) {
    throw std::logic_error("certificate conjugation failed");
  }
  dec.basis = B;
  return dec;
}

std::string multiplicity_str(const std::map<Label, int>& mult, bool compact) {
  if (mult.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : mult) {
    if (c == 0) continue;
    if (!out.empty()) out += compact ? "+" : " + ";
    out += std::to_string(c) + "*" + l.str();
  }
  return out.empty() ? "0" : out;
}

std::string rep_fingerprint(const Rep& rep) {
  const Algebra& alg = *rep.alg;
  const auto& F = alg.field();
  const int n = alg.n();
  std::string fp = "dim=" + std::to_string(rep.vdim());

  Mat B = Mat::identity(&F, rep.vdim());
  if (is_weak(alg.spec().family)) {
    Mat P = mat_pow(rep.g, 2 * n);
    Mat B0 = kernel_basis(P);
    B = column_space_basis(P);
    fp += ";jker=" + std::to_string(B0.cols());
    if (B0.cols() > 0) {
      Mat x0 = solve(B0, rep.x * B0).value();
      if (alg.spec().family == Family::WH) {
        fp += ";x0rank=" + std::to_string(rank(x0));
      } else {
        Mat I0 = Mat::identity(&F, x0.rows());
        fp += ";x0plus=" + std::to_string(kernel_basis(x0 - I0).cols());
        fp += ";x0minus=" + std::to_string(kernel_basis(x0 + I0).cols());
      }
    }
  }
  if (B.cols() > 0) {
    Mat gR = solve(B, rep.g * B).value();
    std::vector<Mat> amb;
    for (int t = 0; t < 2 * n; ++t) {
      Mat shifted = gR;
      Cyc ev = F.q_power(t);
      for (int r = 0; r < gR.rows(); ++r) shifted.at(r, r) = shifted.at(r, r) - ev;
      amb.push_back(B * kernel_basis(shifted));
    }
    int shiftv = is_dual(alg.spec().family) ? n : 1;
    for (int t = 0; t < 2 * n; ++t) {
      Mat xt = solve(amb[(t + shiftv) % (2 * n)], rep.x * amb[t]).value();
      fp += ";t" + std::to_string(t) + "=" + std::to_string(amb[t].cols()) + "," +
            std::to_string(rank(xt));
    }
  }
  return fp;
}

Report verify_catalog(const Algebra& alg) {
  Report rep;
  std::vector<Label> labels = catalog_labels(alg);
  const int n = alg.n();
  int expected = 0;
  switch (alg.spec().family) {
    case Family::H: expected = 4 * n; break;
    case Family::WH: expected = 4 * n + 2; break;
    case Family::HDual: expected = n + 3; break;
    case Family::WHDual: expected = n + 5; break;
  }
  rep.require("catalog-size", static_cast<int>(labels.size()) == expected,
              "have " + std::to_string(labels.size()) + ", expected " +
                  std::to_string(expected));

  bool relations = true;
  std::string bad_rel;
  for (const Label& l : labels) {
    if (!rep_satisfies_relations(make_indec(alg, l))) {
      relations = false;
      bad_rel = l.str();
      break;
    }
  }
  rep.require("catalog-relations", relations, bad_rel);

  bool indec = relations;
  std::string bad_indec;
  if (relations) {
    for (const Label& l : labels) {
      Decomposition d = decompose(alg, make_indec(alg, l));
      if (!(d.mult.size() == 1 && d.mult.begin()->first == l &&
            d.mult.begin()->second == 1)) {
        indec = false;
        bad_indec = l.str() + " -> " + multiplicity_str(d.mult);
        break;
      }
    }
  }
  rep.require("catalog-indecomposable", indec, bad_indec);

  bool distinct = true;
  std::string bad_pair;
  std::vector<std::string> fps;
  for (const Label& l : labels) fps.push_back(rep_fingerprint(make_indec(alg, l)));
  for (size_t i = 0; i < fps.size() && distinct; ++i) {
    for (size_t j = i + 1; j < fps.size(); ++j) {
      if (fps[i] == fps[j]) {
        distinct = false;
        bad_pair = labels[i].str() + " vs " + labels[j].str();
        break;
      }
    }
  }
  rep.require("catalog-separated", distinct, bad_pair);
  return rep;
}

}  // namespace h4n
