#include "commfam/structure.hpp"

#include <algorithm>

#include "commfam/config.hpp"
#include "commfam/errors.hpp"
#include "commfam/heisenberg.hpp"

namespace commfam {

namespace {

VecK unit_vec(size_t n, size_t i) {
  VecK v(n);
  v[i] = RatFunc::constant(1);
  return v;
}

std::vector<RatFunc> flatten(const MatK& m) {
  std::vector<RatFunc> v;
  v.reserve(m.rows() * m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

MatK ad_matrix(const LieAlgebra& g, size_t i) {
  size_t n = g.dim();
  MatK m(n, n);
  for (size_t j = 0; j < n; ++j) {
    VecK br = g.basis_bracket(i, j);
    for (size_t k = 0; k < n; ++k) m.at(k, j) = br[k];
  }
  return m;
}

RatFunc mat_trace_product(const MatK& a, const MatK& b) {
  RatFunc t;
  size_t n = a.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!a.at(i, j).is_zero() && !b.at(j, i).is_zero()) t += a.at(i, j) * b.at(j, i);
  return t;
}

}  // namespace

Subspace center(const LieAlgebra& g) {
  size_t n = g.dim();
  if (n == 0) return Subspace(0);
  MatK cond(n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      VecK br = g.basis_bracket(i, j);
      for (size_t k = 0; k < n; ++k) cond.at(j * n + k, i) = br[k];
    }
  return Subspace::from_rows(n, matk_kernel(cond));
}

Subspace product_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<VecK> rows;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j)
      rows.push_back(g.bracket(a.basis_row(i), b.basis_row(j)));
  return Subspace::from_rows(g.dim(), rows);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    const Subspace& cur = series.back();
    Subspace next = product_space(g, cur, cur);
    if (next.dim() == cur.dim()) break;
    series.push_back(next);
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    const Subspace& cur = series.back();
    Subspace next = product_space(g, series.front(), cur);
    if (next.dim() == cur.dim()) break;
    series.push_back(next);
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
  size_t n = g.dim();
  std::vector<Subspace> series{center(g)};
  while (true) {
    const Subspace& cur = series.back();
    if (cur.dim() == n) break;
    // z_{next} = { u : [u, e_j] in cur for all j }
    std::vector<VecK> residuals;  // reduce([e_i, e_j]) for each i, j
    MatK cond(n * n, n);
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) {
        VecK res = cur.reduce(g.basis_bracket(i, j));
        for (size_t k = 0; k < n; ++k) cond.at(j * n + k, i) = res[k];
      }
    Subspace next = Subspace::from_rows(n, matk_kernel(cond));
    if (next.dim() == cur.dim()) break;
    series.push_back(next);
  }
  return series;
}

bool is_abelian(const LieAlgebra& g) {
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = i + 1; j < g.dim(); ++j)
      for (const auto& c : g.basis_bracket(i, j))
        if (!c.is_zero()) return false;
  return true;
}

bool is_nilpotent(const LieAlgebra& g) {
  auto s = lower_central_series(g);
  return s.back().dim() == 0 || g.dim() == 0;
}

bool is_solvable(const LieAlgebra& g) {
  auto s = derived_series(g);
  return s.back().dim() == 0 || g.dim() == 0;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(g.bracket(unit_vec(g.dim(), i), s.basis_row(r)))) return false;
  return true;
}

Subspace solvable_radical(const LieAlgebra& g) {
  size_t n = g.dim();
  if (n == 0) return Subspace(0);
  Subspace derived = product_space(g, Subspace::full(n), Subspace::full(n));
  if (derived.dim() == 0) return Subspace::full(n);
  std::vector<MatK> ads;
  ads.reserve(n);
  for (size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, i));
  MatK killing(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      killing.at(i, j) = mat_trace_product(ads[i], ads[j]);
      killing.at(j, i) = killing.at(i, j);
    }
  // radical = { u : kappa(u, [g,g]) = 0 }
  MatK cond(derived.dim(), n);
  for (size_t r = 0; r < derived.dim(); ++r) {
    VecK d = derived.basis_row(r);
    for (size_t i = 0; i < n; ++i) {
      RatFunc s;
      for (size_t k = 0; k < n; ++k)
        if (!d[k].is_zero() && !killing.at(i, k).is_zero()) s += killing.at(i, k) * d[k];
      cond.at(r, i) = s;
    }
  }
  Subspace rad = Subspace::from_rows(n, matk_kernel(cond));
  if (!is_ideal(g, rad))
    fail(ErrorCode::Internal, "computed radical is not an ideal");
  if (rad.dim() > 0 && !is_solvable(subalgebra(g, rad).algebra))
    fail(ErrorCode::Internal, "computed radical is not solvable");
  return rad;
}

namespace {

// Basis of the associative algebra generated by ad(g) inside End(g),
// as matrices together with the span of their flattenings.
std::vector<MatK> associative_closure(const LieAlgebra& g) {
  size_t n = g.dim();
  std::vector<MatK> basis;
  Subspace span(n * n);
  auto try_add = [&](const MatK& m) {
    std::vector<VecK> rows;
    for (size_t r = 0; r < span.dim(); ++r) rows.push_back(span.basis_row(r));
    VecK flat = flatten(m);
    if (span.contains(flat)) return false;
    rows.push_back(flat);
    span = Subspace::from_rows(n * n, rows);
    basis.push_back(m);
    return true;
  };
  for (size_t i = 0; i < n; ++i) try_add(ad_matrix(g, i));
  size_t processed = 0;  // products among basis[0..processed) are already spanned
  while (processed < basis.size()) {
    size_t end = basis.size();
    for (size_t a = 0; a < end; ++a)
      for (size_t b = processed; b < end; ++b) {
        if (a >= processed && a > b) continue;
        try_add(mat_mul(basis[a], basis[b]));
        try_add(mat_mul(basis[b], basis[a]));
      }
    processed = end;
  }
  return basis;
}

// {x in g : ad x in rad(A)} where rad(A) is the Dickson trace radical.
Subspace trace_radical_membership(const LieAlgebra& g) {
  size_t n = g.dim();
  std::vector<MatK> basis = associative_closure(g);
  size_t d = basis.size();
  Subspace w(n * n);  // span of rad(A) flattenings
  if (d > 0) {
    MatK gram(d, d);
    for (size_t p = 0; p < d; ++p)
      for (size_t q = p; q < d; ++q) {
        gram.at(p, q) = mat_trace_product(basis[p], basis[q]);
        gram.at(q, p) = gram.at(p, q);
      }
    std::vector<VecK> rad_rows;
    for (const VecK& combo : matk_kernel(gram)) {
      VecK flat(n * n);
      for (size_t p = 0; p < d; ++p) {
        if (combo[p].is_zero()) continue;
        VecK fp = flatten(basis[p]);
        for (size_t s = 0; s < n * n; ++s)
          if (!fp[s].is_zero()) flat[s] += combo[p] * fp[s];
      }
      rad_rows.push_back(flat);
    }
    w = Subspace::from_rows(n * n, rad_rows);
  }
  // condition on x: vec(ad x) reduces to zero mod W
  MatK cond(n * n, n);
  for (size_t i = 0; i < n; ++i) {
    VecK res = w.reduce(flatten(ad_matrix(g, i)));
    for (size_t s = 0; s < n * n; ++s) cond.at(s, i) = res[s];
  }
  return Subspace::from_rows(n, matk_kernel(cond));
}

LieAlgebra evaluate_params(const LieAlgebra& g, Rng& rng, long range) {
  if (g.params().empty()) return g;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::map<VarId, Rational> point;
    for (VarId p : g.params()) point[p] = rng.draw_rational(range);
    try {
      BracketMap bm;
      for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = i + 1; j < g.dim(); ++j) {
          VecK br = g.basis_bracket(i, j);
          for (size_t k = 0; k < g.dim(); ++k)
            if (!br[k].is_zero())
              bm[{i, j}][k] = RatFunc(Poly::constant(br[k].evaluate(point)));
        }
      return LieAlgebra(g.name() + "@eval", g.basis_labels(), {}, bm);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroDenominator && e.code() != ErrorCode::Jacobi) throw;
      // denominator hit or Jacobi failure at a special point: redraw
    }
  }
  fail(ErrorCode::NilradicalUnverified,
       "could not find a regular parameter evaluation point");
}

}  // namespace

Subspace nilradical(const LieAlgebra& g) {
  size_t n = g.dim();
  if (n == 0) return Subspace(0);
  Subspace nil = trace_radical_membership(g);

  // a posteriori verification
  if (!is_ideal(g, nil))
    fail(ErrorCode::NilradicalUnverified, "nilradical candidate is not an ideal");
  if (nil.dim() > 0 && !is_nilpotent(subalgebra(g, nil).algebra))
    fail(ErrorCode::NilradicalUnverified, "nilradical candidate is not nilpotent");
  if (!solvable_radical(g).contains(nil))
    fail(ErrorCode::NilradicalUnverified, "nilradical candidate exceeds the radical");
  if (!g.params().empty()) {
    // maximality of the candidate re-checked over Q at a random parameter point
    Rng rng(0x9e3779b97f4a7c15ull ^ g.fingerprint());
    LieAlgebra geval = evaluate_params(g, rng, 1000);
    Subspace nil_eval = trace_radical_membership(geval);
    if (nil_eval.dim() != nil.dim())
      fail(ErrorCode::NilradicalUnverified,
           "nilradical dimension jumps at a random parameter evaluation");
  }
  return nil;
}

VecK Quotient::project(const VecK& v) const {
  VecK res = ideal.reduce(v);
  VecK out(complement_cols.size());
  for (size_t m = 0; m < complement_cols.size(); ++m) out[m] = res[complement_cols[m]];
  return out;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) fail(ErrorCode::NotAnIdeal, "quotient by a non-ideal");
  std::vector<size_t> comp = ideal.non_pivot_cols();
  std::vector<std::string> labels;
  for (size_t c : comp) labels.push_back(g.basis_labels()[c]);
  BracketMap bm;
  for (size_t a = 0; a < comp.size(); ++a)
    for (size_t b = a + 1; b < comp.size(); ++b) {
      VecK res = ideal.reduce(g.basis_bracket(comp[a], comp[b]));
      for (size_t m = 0; m < comp.size(); ++m)
        if (!res[comp[m]].is_zero()) bm[{a, b}][m] = res[comp[m]];
    }
  LieAlgebra q(g.name() + "/q", labels, g.params(), bm);
  return Quotient{std::move(q), comp, ideal};
}

VecK SubalgebraExtract::to_parent(const VecK& v) const {
  VecK out(inclusion.cols());
  for (size_t r = 0; r < inclusion.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (size_t c = 0; c < inclusion.cols(); ++c)
      if (!inclusion.at(r, c).is_zero()) out[c] += v[r] * inclusion.at(r, c);
  }
  return out;
}

Subspace SubalgebraExtract::subspace_to_parent(const Subspace& s) const {
  std::vector<VecK> rows;
  for (size_t r = 0; r < s.dim(); ++r) rows.push_back(to_parent(s.basis_row(r)));
  return Subspace::from_rows(inclusion.cols(), rows);
}

SubalgebraExtract subalgebra(const LieAlgebra& g, const Subspace& s) {
  size_t k = s.dim();
  BracketMap bm;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      VecK br = g.bracket(s.basis_row(i), s.basis_row(j));
      auto coeffs = express_in_rows(s.basis(), br);
      if (!coeffs) fail(ErrorCode::NotClosed, "subspace is not closed under the bracket");
      for (size_t m = 0; m < k; ++m)
        if (!(*coeffs)[m].is_zero()) bm[{i, j}][m] = (*coeffs)[m];
    }
  std::vector<std::string> labels;
  std::vector<size_t> pivots = s.pivot_cols();
  for (size_t i = 0; i < k; ++i) labels.push_back(g.basis_labels()[pivots[i]]);
  LieAlgebra sub(g.name() + "[sub]", labels, g.params(), bm);
  return SubalgebraExtract{std::move(sub), s.basis()};
}

Subspace stabilizer(const LieAlgebra& g, const VecK& xi) {
  size_t n = g.dim();
  if (xi.size() != n) fail(ErrorCode::DimensionMismatch, "stabilizer covector size");
  MatK cond(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      VecK br = g.basis_bracket(i, j);
      RatFunc s;
      for (size_t k = 0; k < n; ++k)
        if (!br[k].is_zero() && !xi[k].is_zero()) s += br[k] * xi[k];
      cond.at(j, i) = s;
    }
  return Subspace::from_rows(n, matk_kernel(cond));
}

std::optional<Subspace> commutative_characteristic_ideal(const LieAlgebra& g,
                                                         const Subspace& n) {
  SubalgebraExtract nx = subalgebra(g, n);

  std::vector<Subspace> candidates;
  auto push_unique = [&](const Subspace& s) {
    if (s.dim() == 0) return;
    for (const auto& c : candidates)
      if (c == s) return;
    candidates.push_back(s);
  };
  push_unique(nx.subspace_to_parent(center(nx.algebra)));
  auto ucs = upper_central_series(nx.algebra);
  for (size_t t = 1; t < ucs.size(); ++t) {
    SubalgebraExtract term = subalgebra(nx.algebra, ucs[t]);
    Subspace c_in_n = term.subspace_to_parent(center(term.algebra));
    push_unique(nx.subspace_to_parent(c_in_n));
  }

  for (const Subspace& h : candidates) {
    bool commutative = true;
    for (size_t i = 0; i < h.dim() && commutative; ++i)
      for (size_t j = i + 1; j < h.dim() && commutative; ++j)
        for (const auto& e : g.bracket(h.basis_row(i), h.basis_row(j)))
          if (!e.is_zero()) {
            commutative = false;
            break;
          }
    if (!commutative || !is_ideal(g, h)) continue;
    bool noncentral = product_space(g, Subspace::full(g.dim()), h).dim() > 0;
    if (h.dim() > 1 || noncentral) return h;
  }

  if (!heisenberg_recognize(nx.algebra))
    fail(ErrorCode::InconsistentStructure,
         "no commutative characteristic ideal found but n is not Heisenberg");
  return std::nullopt;
}

}  // namespace commfam
