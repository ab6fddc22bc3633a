#ifndef COMMFAM_STRUCTURE_HPP
#define COMMFAM_STRUCTURE_HPP

#include <optional>

#include "commfam/liealgebra.hpp"
#include "commfam/subspace.hpp"

namespace commfam {

Subspace center(const LieAlgebra& g);
/// Span of [a, b] over basis pairs of the two subspaces.
Subspace product_space(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// g = g^(0) >= g^(1) = [g,g] >= ... until stabilization.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g = g^1 >= g^2 = [g, g^1] >= ... until stabilization.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
/// center = z_1 <= z_2 <= ... until stabilization (z_{i+1}/z_i central in g/z_i).
std::vector<Subspace> upper_central_series(const LieAlgebra& g);

bool is_abelian(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Maximal solvable ideal: Killing-orthogonal complement of [g, g]
/// (characteristic zero); result verified to be a solvable ideal.
Subspace solvable_radical(const LieAlgebra& g);

/// Maximal nilpotent ideal, computed as {x : ad x in rad(A)} where A is the
/// associative algebra generated by ad(g) and rad(A) its trace-form radical.
/// A posteriori checks (ideal, nilpotency, maximality at a random parameter
/// evaluation) throw NilradicalUnverified on failure.
Subspace nilradical(const LieAlgebra& g);

struct Quotient {
  LieAlgebra algebra;
  /// Parent basis indices acting as coset representatives (one per quotient
  /// coordinate).
  std::vector<size_t> complement_cols;
  Subspace ideal;
  /// Projection of a parent coordinate vector onto quotient coordinates.
  VecK project(const VecK& v) const;
};
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

struct SubalgebraExtract {
  LieAlgebra algebra;
  /// Rows embed the subalgebra basis into parent coordinates.
  MatK inclusion;
  VecK to_parent(const VecK& v) const;
  Subspace subspace_to_parent(const Subspace& s) const;
};
SubalgebraExtract subalgebra(const LieAlgebra& g, const Subspace& s);

/// Kernel of u -> xi([u, .]) (the Kirillov form at xi).
Subspace stabilizer(const LieAlgebra& g, const VecK& xi);

/// Searches the canonical candidates (center of n, then centers of the
/// successive upper-central-series terms of n) for a commutative ideal h of g
/// inside n with dim h > 1 or [g, h] != 0. Returns nullopt when every
/// candidate is 1-dimensional and central in g; n is then a Heisenberg
/// algebra with central z (cross-checked, InconsistentStructure otherwise).
std::optional<Subspace> commutative_characteristic_ideal(const LieAlgebra& g,
                                                         const Subspace& n);

}  // namespace commfam

#endif
