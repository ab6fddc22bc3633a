#ifndef COMMFAM_HEISENBERG_HPP
#define COMMFAM_HEISENBERG_HPP

#include <optional>

#include "commfam/liealgebra.hpp"
#include "commfam/subspace.hpp"

namespace commfam {

/// Darboux basis of a Heisenberg algebra: [x_i, y_j] = delta_ij z, all other
/// basis brackets zero, z spanning the centre. Vectors are coordinate vectors
/// of the algebra the basis was recognized on.
struct HeisenbergBasis {
  std::vector<VecK> x;
  std::vector<VecK> y;
  VecK z;
  size_t k() const { return x.size(); }
};

/// Recognizes n as a Heisenberg algebra (dim 2k+1 with [n,n] = centre = <z>,
/// or the degenerate 1-dimensional case k = 0) and produces a Darboux basis by
/// symplectic Gram-Schmidt with first-nonzero-pairing pivoting. Returns
/// nullopt when n is not Heisenberg. The output relations are re-verified
/// symbolically.
std::optional<HeisenbergBasis> heisenberg_recognize(const LieAlgebra& n);

}  // namespace commfam

#endif
