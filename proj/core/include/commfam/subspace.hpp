#ifndef COMMFAM_SUBSPACE_HPP
#define COMMFAM_SUBSPACE_HPP

#include <vector>

#include "commfam/linalg.hpp"

namespace commfam {

/// Subspace of K^n held in reduced row echelon form with unit pivots, so
/// subspace equality is structural equality of the basis matrix.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace from_rows(size_t ambient, const std::vector<VecK>& rows);
  static Subspace full(size_t ambient);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const MatK& basis() const { return basis_; }
  VecK basis_row(size_t r) const { return basis_.row(r); }

  /// Residual of v after elimination against the basis; zero iff contained.
  VecK reduce(const VecK& v) const;
  bool contains(const VecK& v) const;
  bool contains(const Subspace& other) const;
  std::vector<size_t> pivot_cols() const;
  std::vector<size_t> non_pivot_cols() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  size_t ambient_ = 0;
  MatK basis_;
};

}  // namespace commfam

#endif
