#include "commfam/ratfunc.hpp"

#include "commfam/errors.hpp"

namespace commfam {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *poly_div_exact(num_, g);
      den_ = *poly_div_exact(den_, g);
    }
  }
  Rational c = den_.content();
  num_ = num_.scaled(Rational(1) / c);
  den_ = den_.scaled(Rational(1) / c);
}

Rational RatFunc::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroDenominator, "inverse of zero");
  return RatFunc(den_, num_);
}

Rational RatFunc::evaluate(const std::map<VarId, Rational>& assignment) const {
  Rational d = den_.evaluate(assignment);
  if (d == 0) fail(ErrorCode::ZeroDenominator, "denominator vanishes at evaluation point");
  return num_.evaluate(assignment) / d;
}

RatFunc RatFunc::substitute_values(const std::map<VarId, Rational>& assignment) const {
  Poly d = den_.substitute_values(assignment);
  if (d.is_zero()) fail(ErrorCode::ZeroDenominator, "denominator vanishes under substitution");
  return RatFunc(num_.substitute_values(assignment), d);
}

RatFunc poly_substitute(const Poly& p, const std::map<VarId, RatFunc>& images) {
  // per-variable power cache
  std::map<VarId, std::vector<RatFunc>> powers;
  auto power = [&](VarId v, uint32_t e) -> RatFunc {
    auto it = images.find(v);
    if (it == images.end()) return RatFunc(Poly::variable(v, e));
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(RatFunc::constant(1));
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  RatFunc total;
  for (const auto& [m, c] : p.terms()) {
    RatFunc term = RatFunc::constant(c);
    for (const auto& f : m.factors()) term = term * power(f.first, f.second);
    total += term;
  }
  return total;
}

}  // namespace commfam
