#ifndef COMMFAM_REDUCTION_HPP
#define COMMFAM_REDUCTION_HPP

#include <map>
#include <optional>

#include "commfam/heisenberg.hpp"
#include "commfam/poisson.hpp"
#include "commfam/structure.hpp"

namespace commfam {

/// Central character entry: a central vector over K pinned to a value in K.
struct Constraint {
  VecK vec;
  RatFunc value;
};

/// Serialized into the certificate trace.
struct StepInfo {
  std::string kind;  // heis | com | quotient | base | argshift
  int dim_before = 0;
  int dim_after = 0;
  int params_added = 0;
  std::vector<std::string> pinned;
};

/// The recursion's representation of the Poisson variety X: an algebra over
/// K together with a central character. Constraint vectors must be central
/// and linearly independent.
struct ReductionState {
  LieAlgebra algebra;
  std::vector<Constraint> constraints;
};

void validate_state(const ReductionState& st);

/// Heisenberg nilradical reduction (explicit function lift).
struct HeisReduction {
  ReductionState parent;
  std::optional<ReductionState> quotient_state;  // absent when n = g
  std::optional<Quotient> q;
  std::map<VarId, RatFunc> lift_map;  // quotient coordinate -> lifted function
  std::vector<VecK> vplus;            // Darboux x-vectors in parent coordinates
  VecK zvec;
  bool z_pinned = false;
  StepInfo info;
};

/// Requires: n is the (Heisenberg) nilradical of st.algebra with its centre
/// z central in g, and z is not pinned to 0. The lift of a quotient
/// coordinate carries a z-power denominator of degree at most 2; N-invariance
/// and the Poisson-homomorphism identity of the lift are verified
/// symbolically (PreconditionFailed / Internal on violation).
HeisReduction heis_reduce(const ReductionState& st, const HeisenbergBasis& basis_in_g,
                          const Subspace& n);

/// Applies the lift to the sub-family, clears z-denominators by the minimal
/// power, appends a basis of V+ and (when z is unpinned) of <z>.
PolyFamily heis_assemble(const HeisReduction& red, const PolyFamily& sub);

/// Commutative-ideal reduction to gtilde over the enlarged field K(beta).
struct ComReduction {
  ReductionState parent;
  ReductionState tilde;              // w pinned to 1 in tilde.constraints[0]
  Subspace h;
  std::vector<VarId> new_params;     // beta_1..beta_m'
  MatK reps;                         // coset representatives; row 0 realizes w
  std::vector<RatFunc> param_images; // beta_r -> affine function of h-coordinates
  std::vector<VecK> appended_h;      // non-pinned h-directions appended on pullback
  StepInfo info;
};

/// Requires: h a commutative ideal of g inside the nilradical with dim h > 1
/// or [g, h] != 0. Pinned central directions lying inside h are absorbed into
/// an affine parametrization of x_h (the pin-free case is the plain x_h = h*
/// construction). Verifies Jacobi on gtilde (constructor), centrality of w and
/// the strict dimension drop.
ComReduction com_reduce(const ReductionState& st, const Subspace& h);

/// Substitutes gtilde coordinates by their representative linear forms,
/// parameters by h-coordinate functions, clears denominators minimally and
/// appends the non-pinned h-basis functions.
PolyFamily com_pullback(const ComReduction& red, const PolyFamily& sub);

}  // namespace commfam

#endif
