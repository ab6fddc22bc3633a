#ifndef COMMFAM_INVARIANTS_HPP
#define COMMFAM_INVARIANTS_HPP

#include "commfam/liealgebra.hpp"

namespace commfam {

struct InvariantSet {
  std::vector<Poly> generators;
  std::string source;  // builtin_classical | user_supplied | abelian_trivial
};

/// Verifies {F, x_i} = 0 for every coordinate, symbolically;
/// NotVerifiedInvariant otherwise.
void verify_invariants(const LieAlgebra& g, const std::vector<Poly>& generators);

/// Free generators of the invariant field for the classical families, built
/// on g's own coordinates through the trace-form identification g = g* and
/// verified against g's actual structure constants:
///   gl_n: characteristic coefficients, r = n
///   sl_n: same minus the trace, r = n-1
///   so_n: even characteristic coefficients, Pfaffian on top for even n
///   sp_2m: even characteristic coefficients, r = m
/// Generators are normalized to integer-primitive, positive leading
/// coefficient. The family is read off g.name() (e.g. "gl3").
InvariantSet classical_invariants(const LieAlgebra& g);

/// Wraps user generators after symbolic verification.
InvariantSet user_invariants(const LieAlgebra& g, const std::vector<Poly>& generators);

/// Pfaffian of an antisymmetric matrix of polynomials (row expansion).
Poly pfaffian(const std::vector<std::vector<Poly>>& a);

/// Coefficients c_1..c_n of det(lambda I - M) = lambda^n + c_1 lambda^{n-1} +
/// ... + c_n, by the Faddeev-LeVerrier recurrence (exact over Q).
std::vector<Poly> char_poly_coefficients(const std::vector<std::vector<Poly>>& m);

}  // namespace commfam

#endif
