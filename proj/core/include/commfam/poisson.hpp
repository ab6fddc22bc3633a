#ifndef COMMFAM_POISSON_HPP
#define COMMFAM_POISSON_HPP

#include "commfam/config.hpp"
#include "commfam/liealgebra.hpp"

namespace commfam {

struct FamilyMember {
  Poly p;
  std::string provenance;  // argshift | heis_lift | com_pullback | h_basis |
                           // vplus_basis | invariant
};

struct PolyFamily {
  std::vector<FamilyMember> members;
  size_t size() const { return members.size(); }
  void add(Poly p, std::string provenance);
};

/// Matrix of the Kirillov form: entry (i, j) is the linear function
/// gamma -> gamma([e_i, e_j]) (a linear polynomial when the structure
/// constants are denominator-free).
MatK kirillov_matrix(const LieAlgebra& g);

/// Lie-Poisson bracket on K[g*]. The result is a fraction only when the
/// structure constants have denominators; over catalog algebras it is the
/// polynomial on g* of the classical construction.
RatFunc poisson_bracket(const LieAlgebra& g, const Poly& a, const Poly& b);

struct BracketFailure {
  size_t i, j;
  RatFunc witness;
};
struct CommutativityReport {
  size_t pairs_checked = 0;
  std::vector<BracketFailure> failures;
  bool pass() const { return failures.empty(); }
};
/// Fully symbolic pairwise bracket check; failures are recorded, not thrown.
CommutativityReport commutativity_check(const PolyFamily& family, const LieAlgebra& g);

struct IndexResult {
  int index = 0;
  int generic_rank = 0;
  bool symbolic_checked = false;
  int sampled_rank = 0;
};
/// Index of g: dim g minus the generic rank of the Kirillov matrix. Rank is
/// sampled at cfg.trials random rational points and, for dim g up to
/// cfg.symbolic_rank_cutoff, confirmed by fully symbolic fraction-free rank
/// over Q(x, t).
IndexResult index_of(const LieAlgebra& g, const RunConfig& cfg, Rng& rng);

struct LValue {
  int dim_X = 0;
  int invariant_degrees = 0;
  int l = 0;
};
/// l(X) accounting for X = g* sliced by `constraints` pinned central
/// directions: dim X = dim g - s, invariant degrees = ind g - s; parity of
/// dim X + invariant degrees enforced.
LValue l_value(const LieAlgebra& g, size_t constraints, const RunConfig& cfg, Rng& rng);

struct RankSample {
  std::vector<long> point;
  int rank = 0;
};
struct IndependenceResult {
  int rank = 0;
  std::vector<RankSample> samples;
};
/// Max over sampled rational points of the exact Jacobian rank of the family
/// with respect to the coordinates of g (parameters also drawn at random).
IndependenceResult independence_rank(const PolyFamily& family, const LieAlgebra& g,
                                     const RunConfig& cfg, Rng& rng);

}  // namespace commfam

#endif
