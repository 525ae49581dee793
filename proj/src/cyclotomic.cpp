#include "h4n/cyclotomic.hpp"

#include <mutex>
#include <map>
#include <stdexcept>

namespace h4n {

namespace {

// Dense polynomial helpers over Q. Coefficient vectors are c[0..deg];
// the zero polynomial is the empty vector after trimming.

void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const std::vector<Rat>& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

// Quotient of a by b; requires b monic-leading nonzero. `exact` demands a
// zero remainder (used for cyclotomic factors, which divide exactly).
std::vector<Rat> poly_div(std::vector<Rat> a, const std::vector<Rat>& b, bool exact,
                          std::vector<Rat>* remainder_out = nullptr) {
  trim(a);
  if (degree_of(b) < 0) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> quot(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
  const Rat& lead = b.back();
  while (degree_of(a) >= degree_of(b)) {
    int shift = degree_of(a) - degree_of(b);
    Rat factor = a.back() / lead;
    quot[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= factor * b[i];
    }
    trim(a);
  }
  if (exact && degree_of(a) >= 0) throw std::logic_error("inexact polynomial division");
  if (remainder_out) *remainder_out = a;
  trim(quot);
  return quot;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic or constant.
struct XGcd {
  std::vector<Rat> g, s, t;
};

XGcd poly_xgcd(std::vector<Rat> a, std::vector<Rat> b) {
  trim(a);
  trim(b);
  std::vector<Rat> s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (degree_of(b) >= 0) {
    std::vector<Rat> rem;
    std::vector<Rat> q = poly_div(a, b, false, &rem);
    a = b;
    b = rem;
    std::vector<Rat> qs = poly_mul(q, s1);
    std::vector<Rat> qt = poly_mul(q, t1);
    std::vector<Rat> ns = s0, nt = t0;
    ns.resize(std::max(ns.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
    nt.resize(std::max(nt.size(), qt.size()), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
    trim(ns);
    trim(nt);
    s0 = s1;
    t0 = t1;
    s1 = ns;
    t1 = nt;
  }
  return {a, s0, t0};
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::map<int, std::vector<Rat>> cache;
  static std::mutex cache_mu;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d over all proper divisors d of m.
  std::vector<Rat> value(m + 1, Rat(0));
  value[0] = -1;
  value[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) value = poly_div(value, cyclotomic_polynomial(d), true);
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(m, value);
  return value;
}

CycField::CycField(int order) : order_(order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("field order must be an even integer >= 2");
  }
  modulus_ = cyclotomic_polynomial(order);
  degree_ = degree_of(modulus_);
  // Reduction table for x^k, degree_ <= k <= 2*degree_-1, as coefficient
  // vectors of length degree_. x^degree == -(lower part of Phi). The extra
  // row beyond 2*degree_-2 keeps degree-1 fields (order 2) working, where
  // building the q powers already needs x^degree itself.
  std::vector<Rat> cur(degree_, Rat(0));
  for (int i = 0; i < degree_; ++i) cur[i] = -modulus_[i];
  xpow_.clear();
  for (int k = degree_; k <= 2 * degree_ - 1; ++k) {
    xpow_.push_back(cur);
    // multiply by x: shift up, fold the overflow through x^degree.
    std::vector<Rat> next(degree_, Rat(0));
    Rat top = cur.empty() ? Rat(0) : cur[degree_ - 1];
    for (int i = degree_ - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) next[i] += top * -modulus_[i];
    }
    cur = next;
  }
  // Powers of q.
  qpow_.resize(order_);
  std::vector<Rat> p(degree_, Rat(0));
  p[0] = 1;
  for (int k = 0; k < order_; ++k) {
    qpow_[k] = p;
    std::vector<Rat> raw(degree_ + 1, Rat(0));
    for (int i = 0; i < degree_; ++i) raw[i + 1] = p[i];
    p = reduce(raw).coeffs();
  }
}

Cyc CycField::zero() const {
  return Cyc(this, std::vector<Rat>(degree_, Rat(0)));
}

Cyc CycField::one() const {
  return from_rational(Rat(1));
}

Cyc CycField::from_rational(const Rat& r) const {
  std::vector<Rat> c(degree_, Rat(0));
  c[0] = r;
  return Cyc(this, std::move(c));
}

Cyc CycField::q_power(long i) const {
  long k = i % order_;
  if (k < 0) k += order_;
  return Cyc(this, qpow_[static_cast<size_t>(k)]);
}

Cyc CycField::reduce(const std::vector<Rat>& raw) const {
  std::vector<Rat> out(degree_, Rat(0));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (static_cast<int>(k) < degree_) {
      out[k] += raw[k];
    } else {
      size_t row = k - degree_;
      if (row >= xpow_.size()) throw std::logic_error("reduction degree out of range");
      for (int i = 0; i < degree_; ++i) out[i] += raw[k] * xpow_[row][i];
    }
  }
  return Cyc(this, std::move(out));
}

Cyc::Cyc(const CycField* field, std::vector<Rat> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree()) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
}

bool Cyc::is_zero() const {
  for (const Rat& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

namespace {
void check_same_field(const Cyc& a, const Cyc& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mixed cyclotomic fields");
}
}  // namespace

Cyc Cyc::operator+(const Cyc& o) const {
  check_same_field(*this, o);
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-(const Cyc& o) const {
  check_same_field(*this, o);
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (Rat& v : c) v = -v;
  return Cyc(field_, std::move(c));
}

Cyc Cyc::operator*(const Cyc& o) const {
  check_same_field(*this, o);
  const int d = field_->degree();
  std::vector<Rat> raw(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return field_->reduce(raw);
}

Cyc Cyc::operator*(const Rat& r) const {
  std::vector<Rat> c(coeffs_);
  for (Rat& v : c) v *= r;
  return Cyc(field_, std::move(c));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(q)");
  std::vector<Rat> self(coeffs_);
  trim(self);
  XGcd e = poly_xgcd(field_->modulus(), self);
  // gcd is a nonzero constant because the modulus is irreducible.
  if (degree_of(e.g) != 0) throw std::logic_error("modulus not coprime to element");
  std::vector<Rat> t = e.t;
  for (Rat& v : t) v /= e.g[0];
  t.resize(field_->degree(), Rat(0));
  return Cyc(field_, std::move(t));
}

Cyc Cyc::operator/(const Cyc& o) const {
  check_same_field(*this, o);
  return *this * o.inverse();
}

bool Cyc::operator==(const Cyc& o) const {
  if (field_ != o.field_) return false;
  return coeffs_ == o.coeffs_;
}

std::string Cyc::str() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    bool neg = c < 0;
    std::string term;
    if (i == 0) {
      term = rat_str(mag);
    } else {
      std::string power = (i == 1) ? "q" : "q^" + std::to_string(i);
      term = (mag == 1) ? power : rat_str(mag) + "*" + power;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> Cyc::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) out.push_back(rat_str(c));
  return out;
}

}  // namespace h4n
