#ifndef COMMFAM_POLY_HPP
#define COMMFAM_POLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "commfam/monomial.hpp"
#include "commfam/rational.hpp"

namespace commfam {

/// Exact sparse multivariate polynomial over Q with mixed coordinate and
/// parameter variables. Terms are kept in graded-lexicographic order (leading
/// term first) with no zero coefficients, so equality is structural.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;  // zero
  static Poly constant(const Rational& c);
  static Poly variable(VarId v, uint32_t exp = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (the whole value when is_constant()).
  Rational constant_value() const;
  bool is_one() const { return is_constant() && constant_value() == 1; }

  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  uint32_t total_degree() const;
  uint32_t degree_in(VarId v) const;
  std::set<VarId> variables() const;
  bool uses_only(VarKind kind) const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Rational& c) const;
  Poly pow(uint32_t e) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly derivative(VarId v) const;
  /// Exact evaluation; every variable occurring in the polynomial must be
  /// assigned, otherwise MissingAssignment.
  Rational evaluate(const std::map<VarId, Rational>& assignment) const;
  /// Partial evaluation of a subset of variables.
  Poly substitute_values(const std::map<VarId, Rational>& assignment) const;

  /// Rational content: c such that p/c has coprime integer coefficients and
  /// positive leading coefficient. content(0) = 1.
  Rational content() const;
  Poly primitive_part() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

/// Exact quotient num/den in Q[vars]; nullopt when den does not divide num.
std::optional<Poly> poly_div_exact(const Poly& num, const Poly& den);

/// Multivariate gcd (primitive pseudo-remainder sequences), normalized to
/// integer-primitive with positive leading coefficient. gcd(0,0) = 0;
/// gcd with a nonzero constant is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

/// p divided by its parameter-only content (the gcd of the coefficients of
/// its coordinate monomials), then made integer-primitive.
Poly coordinate_primitive(const Poly& p);

}  // namespace commfam

#endif
