#ifndef COMMFAM_LIEALGEBRA_HPP
#define COMMFAM_LIEALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "commfam/linalg.hpp"
#include "commfam/polyio.hpp"

namespace commfam {

/// Bracket data for construction: (i, j) with i < j maps to the coordinate
/// vector of [e_i, e_j]; omitted pairs are zero. Antisymmetry is implied by
/// storage, the Jacobi identity is verified symbolically at construction.
using BracketMap = std::map<std::pair<size_t, size_t>, std::map<size_t, RatFunc>>;

class LieAlgebra {
 public:
  LieAlgebra() = default;  // the zero algebra
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             std::vector<VarId> params, const BracketMap& brackets);

  size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<VarId>& coords() const { return coords_; }
  VarId coord(size_t i) const { return coords_[i]; }
  const std::vector<VarId>& params() const { return params_; }

  /// Structure constant c_{ij}^k (antisymmetric in i, j).
  RatFunc c(size_t i, size_t j, size_t k) const;
  /// Coordinate vector of [e_i, e_j].
  VecK basis_bracket(size_t i, size_t j) const;
  /// Bilinear extension to coordinate vectors over K.
  VecK bracket(const VecK& u, const VecK& v) const;

  /// The linear function gamma -> gamma(v) as an element of K[g*].
  RatFunc linear_form(const VecK& v) const;
  Poly coordinate_poly(size_t i) const { return Poly::variable(coords_[i]); }

  /// Variable names resolvable in polynomial files for this algebra.
  LabelMap label_map() const;

  std::string to_json() const;
  static LieAlgebra from_json(const std::string& text);
  uint64_t fingerprint() const;

  /// Structure constants conjugated by an invertible matrix (rows of p are
  /// the new basis vectors in old coordinates).
  LieAlgebra change_basis(const MatK& p, const std::string& new_name) const;

 private:
  void verify_jacobi() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<VarId> coords_;
  std::vector<VarId> params_;
  // pair (i < j) -> dense coordinate vector of [e_i, e_j]
  std::vector<VecK> table_;
  size_t pair_index(size_t i, size_t j) const;
};

}  // namespace commfam

#endif
