#ifndef COMMFAM_RATFUNC_HPP
#define COMMFAM_RATFUNC_HPP

#include "commfam/poly.hpp"

namespace commfam {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1, den nonzero
/// with integer-primitive coefficients and positive leading coefficient.
/// Elements of the coefficient field K = Q(t1..tm) are RatFuncs whose
/// variables are all parameters; general fractions (arbitrary variables)
/// appear in substitution results and symbolic rank computations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(Poly num);  // NOLINT: implicit lift is intended
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const Rational& c) { return RatFunc(Poly::constant(c)); }
  static RatFunc variable(VarId v) { return RatFunc(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  bool uses_only(VarKind kind) const {
    return num_.uses_only(kind) && den_.uses_only(kind);
  }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Exact evaluation; ZeroDenominator if the denominator vanishes.
  Rational evaluate(const std::map<VarId, Rational>& assignment) const;
  RatFunc substitute_values(const std::map<VarId, Rational>& assignment) const;

 private:
  void normalize();
  Poly num_, den_;
};

/// Simultaneous substitution of variables by rational functions. Variables
/// without an image are left untouched. Returns the normalized fraction.
RatFunc poly_substitute(const Poly& p, const std::map<VarId, RatFunc>& images);

}  // namespace commfam

#endif
