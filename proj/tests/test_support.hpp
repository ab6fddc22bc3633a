#ifndef COMMFAM_TEST_SUPPORT_HPP
#define COMMFAM_TEST_SUPPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "commfam/config.hpp"
#include "commfam/liealgebra.hpp"
#include "commfam/polyio.hpp"

namespace commfam::test {

/// Fresh coordinate variables named x1..xn (registry-backed).
inline std::vector<VarId> coords(int n, const std::string& stem = "x") {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i)
    v.push_back(VarRegistry::instance().fresh_coordinate(stem + std::to_string(i)));
  return v;
}

inline LabelMap labels_of(const std::vector<VarId>& vars) {
  LabelMap m;
  for (VarId v : vars) m[VarRegistry::instance().label(v)] = v;
  return m;
}

/// Random sparse polynomial: up to `terms` terms of degree <= `deg` in `vars`.
inline Poly random_poly(Rng& rng, const std::vector<VarId>& vars, int terms, int deg,
                        long crange = 9) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> fs;
    int d = static_cast<int>(rng.draw(0, deg));
    for (int k = 0; k < d; ++k) {
      VarId v = vars[static_cast<size_t>(rng.draw(0, static_cast<long>(vars.size()) - 1))];
      fs.push_back({v, 1});
    }
    Rational c = rng.draw_rational(crange);
    p += Poly::term(Monomial(std::move(fs)), c);
  }
  return p;
}

/// Plain rational Gaussian elimination, independent of linalg.cpp; the
/// brute-force rank oracle used to derive expected index values.
inline int naive_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t nr = m.size(), nc = m[0].size(), row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t pr = row;
    while (pr < nr && m[pr][col] == 0) ++pr;
    if (pr == nr) continue;
    std::swap(m[row], m[pr]);
    for (size_t r = 0; r < nr; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (size_t c = 0; c < nc; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

/// Kirillov matrix at a rational point, contracted directly from the
/// structure constants (independent of poisson.cpp).
inline std::vector<std::vector<Rational>> kirillov_at(const LieAlgebra& g,
                                                      const std::vector<Rational>& xi) {
  size_t n = g.dim();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(0)));
  std::map<VarId, Rational> empty;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      VecK c = g.basis_bracket(i, j);
      Rational s(0);
      for (size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) s += c[k].num().evaluate(empty) * xi[k];
      b[i][j] = s;
    }
  return b;
}

/// Brute-force index oracle: dim minus max Kirillov rank over random points.
inline int index_oracle(const LieAlgebra& g, uint64_t seed, int trials = 8,
                        long range = 10000) {
  Rng rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> xi;
    for (size_t i = 0; i < g.dim(); ++i) xi.push_back(rng.draw_rational(range));
    int r = naive_rank(kirillov_at(g, xi));
    if (r > best) best = r;
  }
  return static_cast<int>(g.dim()) - best;
}

}  // namespace commfam::test

#endif
