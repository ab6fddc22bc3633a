#ifndef COMMFAM_LINALG_HPP
#define COMMFAM_LINALG_HPP

#include <optional>
#include <vector>

#include "commfam/ratfunc.hpp"

namespace commfam {

using VecK = std::vector<RatFunc>;

/// Dense rectangular matrix over the rational-function field.
class MatK {
 public:
  MatK() = default;
  MatK(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static MatK from_rows(const std::vector<VecK>& rows, size_t cols);
  static MatK identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  RatFunc& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const RatFunc& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  VecK row(size_t r) const;
  MatK transposed() const;
  bool operator==(const MatK& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

MatK mat_mul(const MatK& a, const MatK& b);
VecK mat_apply(const MatK& a, const VecK& v);

/// Rank over the field of fractions, computed by fraction-free (Bareiss)
/// elimination on the denominator-cleared polynomial matrix.
int matk_rank(const MatK& m);

/// Basis of the right kernel. Vectors are denominator-cleared to polynomial
/// entries with unit content and sign-normalized, so output is canonical.
std::vector<VecK> matk_kernel(const MatK& m);

/// Reduced row echelon form with unit pivots (canonical representative of the
/// row space; used for structural subspace equality).
MatK matk_rref(const MatK& m);

/// Coefficients c with sum_i c_i rows[i] = v, if v lies in the row space.
std::optional<VecK> express_in_rows(const MatK& rows, const VecK& v);

/// A particular solution of A x = b, if consistent.
std::optional<VecK> solve_linear(const MatK& a, const VecK& b);

/// Exact rank of a rational matrix.
int q_rank(std::vector<std::vector<Rational>> m);

}  // namespace commfam

#endif
