#ifndef COMMFAM_RATIONAL_HPP
#define COMMFAM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "commfam/errors.hpp"

namespace commfam {

/// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
/// after canonicalize(), which every constructor path below guarantees.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Throws on malformed input or q = 0.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) fail(ErrorCode::Parse, "empty rational literal");
  try {
    Rational r(s);
    r.canonicalize();
    if (r.get_den() == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Parse, "malformed rational literal: " + s);
  }
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

/// gcd on rationals: gcd of numerators over lcm of denominators, positive.
/// Used for polynomial content extraction.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace commfam

#endif
