#include "commfam/linalg.hpp"

#include <algorithm>

#include "commfam/errors.hpp"

namespace commfam {

MatK MatK::from_rows(const std::vector<VecK>& rows, size_t cols) {
  MatK m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged rows");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

MatK MatK::identity(size_t n) {
  MatK m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(1);
  return m;
}

VecK MatK::row(size_t r) const {
  VecK v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

MatK MatK::transposed() const {
  MatK m(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

MatK mat_mul(const MatK& a, const MatK& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "mat_mul shape");
  MatK r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

VecK mat_apply(const MatK& a, const VecK& v) {
  if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "mat_apply shape");
  VecK r(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !v[j].is_zero()) r[i] += a.at(i, j) * v[j];
  return r;
}

namespace {

struct Echelon {
  std::vector<std::vector<Poly>> a;   // echelonized polynomial matrix
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
};

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return (*poly_div_exact(a * b, g)).primitive_part();
}

// Clears denominators row-wise (kernel/rank invariant under row scaling) and
// runs Bareiss elimination: entries stay polynomial, the division by the
// previous pivot is exact. Rational row content is stripped as we go; removing
// polynomial content would break the Bareiss divisibility invariant.
Echelon bareiss(const MatK& m) {
  size_t nr = m.rows(), nc = m.cols();
  Echelon e;
  e.a.assign(nr, std::vector<Poly>(nc));
  for (size_t r = 0; r < nr; ++r) {
    Poly lcm = Poly::constant(1);
    for (size_t c = 0; c < nc; ++c) lcm = poly_lcm(lcm, m.at(r, c).den());
    Rational content(0);
    for (size_t c = 0; c < nc; ++c) {
      const RatFunc& f = m.at(r, c);
      if (f.is_zero()) continue;
      e.a[r][c] = f.num() * *poly_div_exact(lcm, f.den());
      content = rat_gcd(content, e.a[r][c].content());
    }
    if (content != 0)
      for (size_t c = 0; c < nc; ++c) e.a[r][c] = e.a[r][c].scaled(1 / content);
  }

  Poly prev = Poly::constant(1);
  size_t rank_row = 0;
  for (size_t col = 0; col < nc && rank_row < nr; ++col) {
    // pivot with the fewest terms keeps intermediate minors small
    size_t pr = nr;
    for (size_t r = rank_row; r < nr; ++r) {
      if (e.a[r][col].is_zero()) continue;
      if (pr == nr || e.a[r][col].term_count() < e.a[pr][col].term_count()) pr = r;
    }
    if (pr == nr) continue;
    std::swap(e.a[rank_row], e.a[pr]);
    const Poly& pivot = e.a[rank_row][col];
    for (size_t r = rank_row + 1; r < nr; ++r) {
      Poly head = e.a[r][col];
      for (size_t c = col + 1; c < nc; ++c) {
        Poly num = pivot * e.a[r][c] - head * e.a[rank_row][c];
        auto q = poly_div_exact(num, prev);
        if (!q) fail(ErrorCode::Internal, "Bareiss division not exact");
        e.a[r][c] = std::move(*q);
      }
      e.a[r][col] = Poly();
    }
    e.pivots.push_back({rank_row, col});
    prev = pivot;
    ++rank_row;
  }
  return e;
}

VecK normalize_kernel_vector(const VecK& v) {
  Poly lcm = Poly::constant(1);
  for (const auto& f : v) lcm = poly_lcm(lcm, f.den());
  std::vector<Poly> cleared(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) cleared[i] = v[i].num() * *poly_div_exact(lcm, v[i].den());
  Poly g;
  for (const auto& p : cleared) g = poly_gcd(g, p);
  VecK out(v.size());
  bool flip = false;
  bool sign_set = false;
  for (size_t i = 0; i < v.size(); ++i) {
    Poly p = cleared[i];
    if (!g.is_constant() && !p.is_zero()) p = *poly_div_exact(p, g);
    if (!p.is_zero() && !sign_set) {
      flip = p.leading_coefficient() < 0;
      sign_set = true;
    }
    out[i] = RatFunc(flip ? -p : p);
  }
  // strip rational content
  Rational content(0);
  for (const auto& f : out)
    if (!f.is_zero()) content = rat_gcd(content, f.num().content());
  if (content != 0 && content != 1)
    for (auto& f : out)
      if (!f.is_zero()) f = RatFunc(f.num().scaled(1 / content));
  return out;
}

}  // namespace

int matk_rank(const MatK& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(bareiss(m).pivots.size());
}

std::vector<VecK> matk_kernel(const MatK& m) {
  size_t nc = m.cols();
  if (nc == 0) return {};
  if (m.rows() == 0) {
    std::vector<VecK> basis;
    for (size_t c = 0; c < nc; ++c) {
      VecK v(nc);
      v[c] = RatFunc::constant(1);
      basis.push_back(v);
    }
    return basis;
  }
  Echelon e = bareiss(m);
  std::vector<bool> is_pivot_col(nc, false);
  for (auto& [r, c] : e.pivots) is_pivot_col[c] = true;

  std::vector<VecK> basis;
  for (size_t f = 0; f < nc; ++f) {
    if (is_pivot_col[f]) continue;
    VecK v(nc);
    v[f] = RatFunc::constant(1);
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      auto [r, c] = *it;
      if (c > f) continue;  // columns right of f beyond pivots already zero
      RatFunc s;
      for (size_t j = c + 1; j < nc; ++j) {
        if (e.a[r][j].is_zero() || v[j].is_zero()) continue;
        s += RatFunc(e.a[r][j]) * v[j];
      }
      v[c] = -s / RatFunc(e.a[r][c]);
    }
    basis.push_back(normalize_kernel_vector(v));
  }
  return basis;
}

MatK matk_rref(const MatK& m) {
  MatK a = m;
  size_t nr = a.rows(), nc = a.cols();
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t pr = nr;
    for (size_t r = row; r < nr; ++r)
      if (!a.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr == nr) continue;
    for (size_t c = 0; c < nc; ++c) std::swap(a.at(row, c), a.at(pr, c));
    RatFunc inv = a.at(row, col).inverse();
    for (size_t c = col; c < nc; ++c)
      if (!a.at(row, c).is_zero()) a.at(row, c) = a.at(row, c) * inv;
    for (size_t r = 0; r < nr; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      RatFunc factor = a.at(r, col);
      for (size_t c = col; c < nc; ++c)
        if (!a.at(row, c).is_zero())
          a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
    }
    ++row;
  }
  // drop zero rows
  std::vector<VecK> keep;
  for (size_t r = 0; r < row; ++r) keep.push_back(a.row(r));
  return MatK::from_rows(keep, nc);
}

std::optional<VecK> express_in_rows(const MatK& rows, const VecK& v) {
  size_t k = rows.rows(), n = rows.cols();
  if (v.size() != n) fail(ErrorCode::DimensionMismatch, "express_in_rows shape");
  // RREF with a transformation track: T * rows = R
  MatK r = rows;
  MatK t = MatK::identity(k);
  size_t row = 0;
  std::vector<std::pair<size_t, size_t>> pivots;
  for (size_t col = 0; col < n && row < k; ++col) {
    size_t pr = k;
    for (size_t rr = row; rr < k; ++rr)
      if (!r.at(rr, col).is_zero()) {
        pr = rr;
        break;
      }
    if (pr == k) continue;
    for (size_t c = 0; c < n; ++c) std::swap(r.at(row, c), r.at(pr, c));
    for (size_t c = 0; c < k; ++c) std::swap(t.at(row, c), t.at(pr, c));
    RatFunc inv = r.at(row, col).inverse();
    for (size_t c = 0; c < n; ++c)
      if (!r.at(row, c).is_zero()) r.at(row, c) = r.at(row, c) * inv;
    for (size_t c = 0; c < k; ++c)
      if (!t.at(row, c).is_zero()) t.at(row, c) = t.at(row, c) * inv;
    for (size_t rr = 0; rr < k; ++rr) {
      if (rr == row || r.at(rr, col).is_zero()) continue;
      RatFunc factor = r.at(rr, col);
      for (size_t c = 0; c < n; ++c)
        if (!r.at(row, c).is_zero()) r.at(rr, c) = r.at(rr, c) - factor * r.at(row, c);
      for (size_t c = 0; c < k; ++c)
        if (!t.at(row, c).is_zero()) t.at(rr, c) = t.at(rr, c) - factor * t.at(row, c);
    }
    pivots.push_back({row, col});
    ++row;
  }
  // reduce v against R, tracking coefficients in terms of R's rows
  VecK residual = v;
  VecK coeff_r(k);
  for (auto& [pr, pc] : pivots) {
    RatFunc c = residual[pc];
    if (c.is_zero()) continue;
    coeff_r[pr] = c;
    for (size_t j = 0; j < n; ++j)
      if (!r.at(pr, j).is_zero()) residual[j] = residual[j] - c * r.at(pr, j);
  }
  for (const auto& x : residual)
    if (!x.is_zero()) return std::nullopt;
  // coefficients over original rows: c = coeff_r^T * T
  VecK out(k);
  for (size_t j = 0; j < k; ++j) {
    RatFunc s;
    for (size_t i = 0; i < k; ++i)
      if (!coeff_r[i].is_zero() && !t.at(i, j).is_zero()) s += coeff_r[i] * t.at(i, j);
    out[j] = s;
  }
  return out;
}

std::optional<VecK> solve_linear(const MatK& a, const VecK& b) {
  // x solves A x = b iff x^T solves rows(A^T); reuse the row expression solver
  auto coeffs = express_in_rows(a.transposed(), b);
  if (!coeffs) return std::nullopt;
  return coeffs;
}

int q_rank(std::vector<std::vector<Rational>> m) {
  size_t nr = m.size();
  if (nr == 0) return 0;
  size_t nc = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t pr = nr;
    for (size_t r = row; r < nr; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == nr) continue;
    std::swap(m[row], m[pr]);
    for (size_t r = row + 1; r < nr; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (size_t c = col; c < nc; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace commfam
