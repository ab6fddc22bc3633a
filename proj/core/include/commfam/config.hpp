#ifndef COMMFAM_CONFIG_HPP
#define COMMFAM_CONFIG_HPP

#include <cstdint>
#include <random>

#include "commfam/rational.hpp"

namespace commfam {

/// Run-wide knobs. Every random draw flows from `seed`, so outputs are
/// reproducible artifacts.
struct RunConfig {
  uint64_t seed = 1;
  int trials = 8;                 // random evaluation points per rank estimate
  long coeff_range = 10000;       // evaluation points drawn from [-range, range]
  int symbolic_rank_cutoff = 12;  // symbolic index cross-check up to this dim
  int retry_budget = 5;           // shift-vector redraws in complete_on_dual
  int resample_rounds = 3;        // independence re-sampling rounds
  long shift_range = 20;          // shift covector coordinates
  bool json_output = false;
};

/// Deterministic integer draws. Modulo reduction instead of
/// std::uniform_int_distribution keeps byte-identical output independent of
/// the standard library implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  long draw(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  Rational draw_rational(long range) { return Rational(draw(-range, range)); }
  uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace commfam

#endif
