#ifndef COMMFAM_ARGSHIFT_HPP
#define COMMFAM_ARGSHIFT_HPP

#include "commfam/invariants.hpp"
#include "commfam/poisson.hpp"

namespace commfam {

struct ShiftFamily {
  std::vector<Rational> a;  // shift covector
  PolyFamily members;       // nonconstant directional derivatives, k = 0 first
  CommutativityReport commutativity;
};

/// All nonconstant iterated directional derivatives of the generators in the
/// direction a; pairwise commutativity verified symbolically and recorded.
ShiftFamily shift_family(const LieAlgebra& g, const InvariantSet& inv,
                         const std::vector<Rational>& a);

struct CompleteResult {
  bool complete = false;
  ShiftFamily family;
  IndependenceResult independence;
  int target_l = 0;
  int attempts = 0;
};
/// Draws shift vectors (small integers, range widened on retry) until the
/// family reaches independence rank l(g*) = (dim g + ind g)/2 or the retry
/// budget is exhausted; the last attempt is returned either way.
CompleteResult complete_on_dual(const LieAlgebra& g, const InvariantSet& inv,
                                const RunConfig& cfg, Rng& rng);

struct OrbitReport {
  int orbit_dim = 0;
  int ind_g = 0;
  int ind_stabilizer = 0;
  bool stabilizer_index_equal = false;
  bool found_a = false;
  std::vector<Rational> a;
  int dim_v = 0;
  bool complete_on_orbit = false;
};
/// Coadjoint-orbit completeness test at a rational point: orbit dimension from
/// the Kirillov matrix, index of the stabilizer, then a search for a with
/// 2 dim V_{a,xi} = dim(G xi), where V_{a,xi} is the pairing of the shift
/// family differentials against the orbit tangent space.
OrbitReport orbit_criterion(const LieAlgebra& g, const InvariantSet& inv,
                            const std::vector<Rational>& xi, const RunConfig& cfg,
                            Rng& rng);

}  // namespace commfam

#endif
