#ifndef COMMFAM_CATALOG_HPP
#define COMMFAM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "commfam/liealgebra.hpp"

namespace commfam {

/// Built-in algebras over Q. Names: gl, sl, so, sp, heis, strictly_upper,
/// borel_sl2, abelian, filiform, oscillator. `size` is the defining size
/// (matrix size for the matrix families, dimension for heis/abelian/filiform).
LieAlgebra catalog(const std::string& name, int size);

const std::vector<std::string>& catalog_names();

/// "gl3" -> {"gl", 3} for the classical matrix families gl/sl/so/sp.
std::optional<std::pair<std::string, int>> parse_classical_name(const std::string& name);

using QMatrix = std::vector<std::vector<Rational>>;

/// Matrix realization of the basis of a classical family (order matches
/// catalog()). Used both to derive structure constants and to build
/// invariant generators through the trace-form identification.
std::vector<QMatrix> classical_basis_matrices(const std::string& family, int n);

}  // namespace commfam

#endif
