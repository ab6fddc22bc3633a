#ifndef COMMFAM_PIPELINE_HPP
#define COMMFAM_PIPELINE_HPP

#include "commfam/argshift.hpp"
#include "commfam/reduction.hpp"

namespace commfam {

/// Checkable record of a construction or verification run. verdict is
/// "complete" iff the commutativity check passes and the achieved
/// independence rank equals target_l.
struct Certificate {
  int schema = 1;
  std::string algebra_name;
  size_t dim = 0;
  uint64_t fingerprint = 0;
  uint64_t seed = 0;
  int target_l = 0;
  std::vector<std::string> family;
  std::vector<std::string> provenance;
  size_t pairs_checked = 0;
  std::vector<std::string> failures;  // printed witnesses
  int achieved_rank = 0;
  std::vector<RankSample> rank_samples;
  int trials = 0;
  long coeff_range = 0;
  std::vector<StepInfo> trace;
  std::string verdict;  // complete | incomplete | failed

  bool complete() const { return verdict == "complete"; }
  std::string to_json() const;
  std::string to_text() const;
};

struct ConstructOptions {
  RunConfig cfg;
  /// Invariant generators for a non-classical reductive input (verified
  /// before use).
  std::vector<Poly> user_invariants;
};

/// The induction: abelian base case, argument shift for reductive algebras
/// with available invariants, quotient by pinned-to-zero central directions,
/// Heisenberg nilradical reduction, commutative-ideal reduction. Total on
/// solvable algebras; throws Unsupported with a diagnostic when a reductive
/// quotient without invariants is met.
Certificate construct(const LieAlgebra& g, const ConstructOptions& opts);

/// Certification only: symbolic commutativity plus sampled independence rank
/// against l(g*).
Certificate verify_family(const LieAlgebra& g, const PolyFamily& family,
                          const ConstructOptions& opts);

/// The family constructed by the induction on one state (exposed for tests
/// and step-level inspection).
PolyFamily construct_family(const ReductionState& state, const ConstructOptions& opts,
                            Rng& rng, std::vector<StepInfo>& trace);

}  // namespace commfam

#endif
