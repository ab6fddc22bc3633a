#include "commfam/subspace.hpp"

#include "commfam/errors.hpp"

namespace commfam {

Subspace Subspace::from_rows(size_t ambient, const std::vector<VecK>& rows) {
  Subspace s(ambient);
  if (rows.empty()) return s;
  s.basis_ = matk_rref(MatK::from_rows(rows, ambient));
  return s;
}

Subspace Subspace::full(size_t ambient) {
  Subspace s(ambient);
  s.basis_ = MatK::identity(ambient);
  return s;
}

VecK Subspace::reduce(const VecK& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "reduce shape");
  VecK r = v;
  for (size_t row = 0; row < basis_.rows(); ++row) {
    size_t pc = 0;
    while (pc < ambient_ && basis_.at(row, pc).is_zero()) ++pc;
    if (pc == ambient_) continue;
    RatFunc c = r[pc];
    if (c.is_zero()) continue;
    for (size_t j = pc; j < ambient_; ++j)
      if (!basis_.at(row, j).is_zero()) r[j] = r[j] - c * basis_.at(row, j);
  }
  return r;
}

bool Subspace::contains(const VecK& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

std::vector<size_t> Subspace::pivot_cols() const {
  std::vector<size_t> cols;
  for (size_t row = 0; row < basis_.rows(); ++row) {
    size_t pc = 0;
    while (pc < ambient_ && basis_.at(row, pc).is_zero()) ++pc;
    if (pc < ambient_) cols.push_back(pc);
  }
  return cols;
}

std::vector<size_t> Subspace::non_pivot_cols() const {
  std::vector<bool> pivot(ambient_, false);
  for (size_t c : pivot_cols()) pivot[c] = true;
  std::vector<size_t> cols;
  for (size_t c = 0; c < ambient_; ++c)
    if (!pivot[c]) cols.push_back(c);
  return cols;
}

}  // namespace commfam
