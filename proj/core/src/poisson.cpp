#include "commfam/poisson.hpp"

#include <algorithm>

#include "commfam/errors.hpp"

namespace commfam {

void PolyFamily::add(Poly p, std::string provenance) {
  if (p.is_zero()) fail(ErrorCode::Internal, "zero polynomial added to family");
  members.push_back({std::move(p), std::move(provenance)});
}

MatK kirillov_matrix(const LieAlgebra& g) {
  size_t n = g.dim();
  MatK b(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      b.at(i, j) = g.linear_form(g.basis_bracket(i, j));
      b.at(j, i) = -b.at(i, j);
    }
  return b;
}

RatFunc poisson_bracket(const LieAlgebra& g, const Poly& a, const Poly& b) {
  size_t n = g.dim();
  std::vector<Poly> da(n), db(n);
  std::vector<bool> za(n), zb(n);
  for (size_t i = 0; i < n; ++i) {
    da[i] = a.derivative(g.coord(i));
    db[i] = b.derivative(g.coord(i));
    za[i] = da[i].is_zero();
    zb[i] = db[i].is_zero();
  }
  RatFunc out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if ((za[i] || zb[j]) && (za[j] || zb[i])) continue;
      const VecK cij = g.basis_bracket(i, j);
      bool zero_c = true;
      for (const auto& c : cij)
        if (!c.is_zero()) {
          zero_c = false;
          break;
        }
      if (zero_c) continue;
      Poly factor = da[i] * db[j] - da[j] * db[i];
      if (factor.is_zero()) continue;
      out += RatFunc(factor) * g.linear_form(cij);
    }
  return out;
}

CommutativityReport commutativity_check(const PolyFamily& family, const LieAlgebra& g) {
  CommutativityReport rep;
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      RatFunc br = poisson_bracket(g, family.members[i].p, family.members[j].p);
      ++rep.pairs_checked;
      if (!br.is_zero()) rep.failures.push_back({i, j, br});
    }
  return rep;
}

namespace {

/// Draws a full assignment for coordinates and parameters; redraws while any
/// matrix-entry denominator vanishes.
std::map<VarId, Rational> draw_point(const LieAlgebra& g, const MatK* guard, long range,
                                     Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<VarId, Rational> pt;
    for (VarId v : g.coords()) pt[v] = rng.draw_rational(range);
    for (VarId v : g.params()) pt[v] = rng.draw_rational(range);
    bool ok = true;
    if (guard) {
      for (size_t r = 0; r < guard->rows() && ok; ++r)
        for (size_t c = 0; c < guard->cols() && ok; ++c)
          if (!guard->at(r, c).is_zero() && guard->at(r, c).den().evaluate(pt) == 0)
            ok = false;
    }
    if (ok) return pt;
  }
  fail(ErrorCode::AllPointsSingular, "no regular sample point found");
}

}  // namespace

IndexResult index_of(const LieAlgebra& g, const RunConfig& cfg, Rng& rng) {
  IndexResult res;
  size_t n = g.dim();
  if (n == 0) return res;
  MatK b = kirillov_matrix(g);
  int sampled = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    auto pt = draw_point(g, &b, cfg.coeff_range, rng);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!b.at(i, j).is_zero()) m[i][j] = b.at(i, j).evaluate(pt);
    sampled = std::max(sampled, q_rank(std::move(m)));
  }
  res.sampled_rank = sampled;
  res.generic_rank = sampled;
  if (static_cast<int>(n) <= cfg.symbolic_rank_cutoff) {
    int symbolic = matk_rank(b);
    res.symbolic_checked = true;
    if (sampled > symbolic)
      fail(ErrorCode::Internal, "sampled Kirillov rank exceeds symbolic rank");
    res.generic_rank = symbolic;
  }
  res.index = static_cast<int>(n) - res.generic_rank;
  return res;
}

LValue l_value(const LieAlgebra& g, size_t constraints, const RunConfig& cfg, Rng& rng) {
  IndexResult idx = index_of(g, cfg, rng);
  LValue v;
  v.dim_X = static_cast<int>(g.dim()) - static_cast<int>(constraints);
  v.invariant_degrees = idx.index - static_cast<int>(constraints);
  if ((v.dim_X + v.invariant_degrees) % 2 != 0)
    fail(ErrorCode::ParityViolation, "dim X + tr.deg invariants is odd");
  v.l = (v.dim_X + v.invariant_degrees) / 2;
  return v;
}

IndependenceResult independence_rank(const PolyFamily& family, const LieAlgebra& g,
                                     const RunConfig& cfg, Rng& rng) {
  IndependenceResult res;
  if (family.size() == 0) return res;
  size_t n = g.dim();
  std::vector<std::vector<Poly>> jac(family.size(), std::vector<Poly>(n));
  for (size_t f = 0; f < family.size(); ++f)
    for (size_t c = 0; c < n; ++c)
      jac[f][c] = family.members[f].p.derivative(g.coord(c));
  for (int t = 0; t < cfg.trials; ++t) {
    auto pt = draw_point(g, nullptr, cfg.coeff_range, rng);
    std::vector<std::vector<Rational>> m(family.size(), std::vector<Rational>(n, Rational(0)));
    for (size_t f = 0; f < family.size(); ++f)
      for (size_t c = 0; c < n; ++c)
        if (!jac[f][c].is_zero()) m[f][c] = jac[f][c].evaluate(pt);
    RankSample sample;
    for (VarId v : g.coords()) sample.point.push_back(pt[v].get_num().get_si());
    sample.rank = q_rank(std::move(m));
    res.rank = std::max(res.rank, sample.rank);
    res.samples.push_back(std::move(sample));
  }
  return res;
}

}  // namespace commfam
