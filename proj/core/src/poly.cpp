#include "commfam/poly.hpp"

#include <algorithm>

#include "commfam/errors.hpp"

namespace commfam {

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[Monomial{}] = c;
  return p;
}

Poly Poly::variable(VarId v, uint32_t exp) {
  Poly p;
  p.terms_[Monomial::variable(v, exp)] = 1;
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_value() const {
  for (const auto& [m, c] : terms_)
    if (m.is_unit()) return c;
  return Rational(0);
}

uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

uint32_t Poly::degree_in(VarId v) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

bool Poly::uses_only(VarKind kind) const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (f.first.kind() != kind) return false;
  return true;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
  return r;
}

Poly Poly::pow(uint32_t e) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Poly Poly::derivative(VarId v) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    uint32_t e = m.exponent(v);
    if (e == 0) continue;
    auto q = m.divided_by(Monomial::variable(v));
    r.add_term(*q, c * Rational(e));
  }
  return r;
}

Rational Poly::evaluate(const std::map<VarId, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& f : m.factors()) {
      auto it = assignment.find(f.first);
      if (it == assignment.end())
        fail(ErrorCode::MissingAssignment,
             "unassigned variable in evaluation: " + VarRegistry::instance().label(f.first));
      Rational p(1);
      Rational base = it->second;
      for (uint32_t k = 0; k < f.second; ++k) p *= base;
      v *= p;
    }
    total += v;
  }
  return total;
}

Poly Poly::substitute_values(const std::map<VarId, Rational>& assignment) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& f : m.factors()) {
      auto it = assignment.find(f.first);
      if (it == assignment.end()) {
        rest.push_back(f);
        continue;
      }
      Rational base = it->second;
      for (uint32_t k = 0; k < f.second; ++k) v *= base;
    }
    if (v != 0) r.add_term(Monomial(std::move(rest)), v);
  }
  return r;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(1);
  Rational g(0);
  for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
  if (leading_coefficient() < 0) g = -g;
  return g;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  Poly r;
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff / c;
  return r;
}

std::optional<Poly> poly_div_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) return std::nullopt;
  if (den.is_constant()) return num.scaled(Rational(1) / den.constant_value());
  Poly q;
  Poly r = num;
  const Monomial& lm = den.leading_monomial();
  const Rational& lc = den.leading_coefficient();
  while (!r.is_zero()) {
    auto mono = r.leading_monomial().divided_by(lm);
    if (!mono) return std::nullopt;
    Rational c = r.leading_coefficient() / lc;
    Poly t = Poly::term(*mono, c);
    q += t;
    r -= t * den;
  }
  return q;
}

namespace {

// Recursive (univariate-in-v) view: exponent of v -> coefficient polynomial
// in the remaining variables.
using Recursive = std::map<uint32_t, Poly>;

Recursive to_recursive(const Poly& p, VarId v) {
  Recursive r;
  for (const auto& [m, c] : p.terms()) {
    uint32_t e = m.exponent(v);
    auto rest = m.divided_by(Monomial::variable(v, e));
    r[e].add_term(*rest, c);
  }
  return r;
}

uint32_t rec_degree(const Recursive& r) { return r.empty() ? 0 : r.rbegin()->first; }

Recursive rec_trim(Recursive r) {
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_zero())
      it = r.erase(it);
    else
      ++it;
  }
  return r;
}

Recursive rec_scale(const Recursive& r, const Poly& f) {
  Recursive out;
  for (const auto& [e, c] : r) {
    Poly p = c * f;
    if (!p.is_zero()) out[e] = p;
  }
  return out;
}

Recursive rec_shift(const Recursive& r, uint32_t k) {
  Recursive out;
  for (const auto& [e, c] : r) out[e + k] = c;
  return out;
}

Recursive rec_sub(const Recursive& a, const Recursive& b) {
  Recursive out = a;
  for (const auto& [e, c] : b) {
    auto it = out.find(e);
    if (it == out.end()) {
      out[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

Poly rec_content(const Recursive& r) {
  Poly g;
  for (const auto& [e, c] : r) g = poly_gcd(g, c);
  return g;
}

Recursive rec_div_poly(const Recursive& r, const Poly& d) {
  Recursive out;
  for (const auto& [e, c] : r) {
    auto q = poly_div_exact(c, d);
    if (!q) fail(ErrorCode::Internal, "content division failed in gcd");
    if (!q->is_zero()) out[e] = *q;
  }
  return out;
}

// Pseudo-remainder of a by b in the main variable (coefficient-wise Polys).
Recursive rec_prem(Recursive a, const Recursive& b) {
  uint32_t db = rec_degree(b);
  const Poly& lb = b.rbegin()->second;
  while (!a.empty() && rec_degree(a) >= db) {
    uint32_t da = rec_degree(a);
    Poly la = a.rbegin()->second;
    // a := lb*a - la * x^(da-db) * b ; kills the leading term of a
    a = rec_sub(rec_scale(a, lb), rec_shift(rec_scale(b, la), da - db));
    a = rec_trim(std::move(a));
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);

  // main variable: largest VarId present in either operand
  VarId v = *a.variables().rbegin();
  {
    VarId vb = *b.variables().rbegin();
    if (vb > v) v = vb;
  }
  Recursive ra = to_recursive(a, v);
  Recursive rb = to_recursive(b, v);
  Poly cont_a = rec_content(ra);
  Poly cont_b = rec_content(rb);
  Recursive pa = rec_div_poly(ra, cont_a);
  Recursive pb = rec_div_poly(rb, cont_b);
  if (rec_degree(pa) < rec_degree(pb)) std::swap(pa, pb);

  // primitive remainder sequence
  while (true) {
    if (pb.empty()) break;
    Recursive r = rec_prem(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb = {};
      break;
    }
    Poly c = rec_content(r);
    pb = rec_div_poly(r, c);
  }

  Poly gcont = poly_gcd(cont_a, cont_b);
  Poly g;
  for (const auto& [e, c] : pa) g += c * Poly::variable(v, e);
  return (gcont * g).primitive_part();
}

Poly coordinate_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  // group terms by their coordinate part; the parameter parts form the
  // coefficients whose gcd is the removable content
  std::map<Monomial, Poly, GrlexGreater> groups;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> coord_part, param_part;
    for (const auto& f : m.factors())
      (f.first.kind() == VarKind::Coordinate ? coord_part : param_part).push_back(f);
    groups[Monomial(std::move(coord_part))].add_term(Monomial(std::move(param_part)), c);
  }
  Poly content;
  for (const auto& [cm, coeff] : groups) {
    content = poly_gcd(content, coeff);
    if (content.is_constant()) return p.primitive_part();
  }
  Poly out;
  for (const auto& [cm, coeff] : groups) {
    Poly q = *poly_div_exact(coeff, content);
    for (const auto& [pm, c] : q.terms()) out.add_term(cm.times(pm), c);
  }
  return out.primitive_part();
}

}  // namespace commfam
