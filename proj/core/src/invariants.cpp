#include "commfam/invariants.hpp"

#include <functional>

#include "commfam/catalog.hpp"
#include "commfam/errors.hpp"
#include "commfam/poisson.hpp"

namespace commfam {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size();
  PolyMatrix r(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

Poly poly_mat_trace(const PolyMatrix& a) {
  Poly t;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Inverse of a rational matrix by Gauss-Jordan; Internal if singular.
QMatrix q_inverse(QMatrix m) {
  size_t n = m.size();
  QMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pr = col;
    while (pr < n && m[pr][col] == 0) ++pr;
    if (pr == n) fail(ErrorCode::Internal, "singular Gram matrix");
    std::swap(m[pr], m[col]);
    std::swap(inv[pr], inv[col]);
    Rational p = m[col][col];
    for (size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<Poly> char_poly_coefficients(const PolyMatrix& m) {
  size_t n = m.size();
  std::vector<Poly> coeffs(n);
  PolyMatrix nk = m;  // N_1 = M
  Poly ck = -poly_mat_trace(nk);
  coeffs[0] = ck;
  for (size_t k = 2; k <= n; ++k) {
    PolyMatrix shifted = nk;
    for (size_t i = 0; i < n; ++i) shifted[i][i] += ck;
    nk = poly_mat_mul(m, shifted);
    ck = (-poly_mat_trace(nk)).scaled(Rational(1, static_cast<long>(k)));
    coeffs[k - 1] = ck;
  }
  return coeffs;
}

Poly pfaffian(const PolyMatrix& a) {
  std::vector<size_t> idx(a.size());
  for (size_t i = 0; i < a.size(); ++i) idx[i] = i;
  // recursive expansion along the first remaining row
  std::function<Poly(std::vector<size_t>)> pf = [&](std::vector<size_t> ids) -> Poly {
    if (ids.empty()) return Poly::constant(1);
    if (ids.size() % 2 != 0) fail(ErrorCode::Internal, "Pfaffian of odd size");
    if (ids.size() == 2) return a[ids[0]][ids[1]];
    Poly sum;
    for (size_t j = 1; j < ids.size(); ++j) {
      const Poly& entry = a[ids[0]][ids[j]];
      if (entry.is_zero()) continue;
      std::vector<size_t> rest;
      for (size_t t = 1; t < ids.size(); ++t)
        if (t != j) rest.push_back(ids[t]);
      Poly sub = pf(std::move(rest));
      if (sub.is_zero()) continue;
      Poly term = entry * sub;
      sum += (j % 2 == 1) ? term : -term;
    }
    return sum;
  };
  return pf(idx);
}

void verify_invariants(const LieAlgebra& g, const std::vector<Poly>& generators) {
  for (const Poly& f : generators) {
    if (f.is_zero() || f.is_constant())
      fail(ErrorCode::NotVerifiedInvariant, "invariant generator is constant");
    for (size_t i = 0; i < g.dim(); ++i) {
      RatFunc br = poisson_bracket(g, f, g.coordinate_poly(i));
      if (!br.is_zero())
        fail(ErrorCode::NotVerifiedInvariant,
             "generator fails {F, " + g.basis_labels()[i] + "} = 0");
    }
  }
}

InvariantSet classical_invariants(const LieAlgebra& g) {
  auto parsed = parse_classical_name(g.name());
  if (!parsed)
    fail(ErrorCode::UnknownName, "no builtin invariants for algebra: " + g.name());
  auto [family, n] = *parsed;
  std::vector<QMatrix> basis = classical_basis_matrices(family, n);
  if (basis.size() != g.dim())
    fail(ErrorCode::NotVerifiedInvariant, "algebra dimension does not match its name");

  // trace-form identification g = g*: the matrix of the point is
  // M(x) = sum_b x_b * dual(b) with dual defined through the Gram inverse.
  size_t k = basis.size();
  QMatrix gram(k, std::vector<Rational>(k, Rational(0)));
  for (size_t p = 0; p < k; ++p)
    for (size_t q = p; q < k; ++q) {
      Rational tr(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += basis[p][i][j] * basis[q][j][i];
      gram[p][q] = gram[q][p] = tr;
    }
  QMatrix ginv = q_inverse(gram);
  PolyMatrix m(n, std::vector<Poly>(n));
  for (size_t b = 0; b < k; ++b) {
    // dual(b) = sum_a ginv[a][b] basis[a]
    for (size_t aa = 0; aa < k; ++aa) {
      if (ginv[aa][b] == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (basis[aa][i][j] != 0)
            m[i][j] += Poly::variable(g.coord(b)).scaled(ginv[aa][b] * basis[aa][i][j]);
    }
  }

  std::vector<Poly> coeffs = char_poly_coefficients(m);
  auto gen = [&](size_t deg) {  // F_deg = (-1)^deg c_deg, primitive-normalized
    Poly f = coeffs[deg - 1];
    if (deg % 2 == 1) f = -f;
    return f.primitive_part();
  };

  InvariantSet inv;
  inv.source = "builtin_classical";
  if (family == "gl") {
    for (int d = 1; d <= n; ++d) inv.generators.push_back(gen(d));
  } else if (family == "sl") {
    for (int d = 2; d <= n; ++d) inv.generators.push_back(gen(d));
  } else if (family == "so") {
    for (int d = 2; d <= n; d += 2) {
      if (d == n) {
        inv.generators.push_back(pfaffian(m).primitive_part());
      } else {
        inv.generators.push_back(gen(d));
      }
    }
  } else if (family == "sp") {
    for (int d = 2; d <= n; d += 2) inv.generators.push_back(gen(d));
  }
  verify_invariants(g, inv.generators);
  return inv;
}

InvariantSet user_invariants(const LieAlgebra& g, const std::vector<Poly>& generators) {
  verify_invariants(g, generators);
  return InvariantSet{generators, "user_supplied"};
}

}  // namespace commfam
