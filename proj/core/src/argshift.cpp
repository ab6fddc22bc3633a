#include "commfam/argshift.hpp"

#include <algorithm>

#include "commfam/errors.hpp"
#include "commfam/structure.hpp"

namespace commfam {

ShiftFamily shift_family(const LieAlgebra& g, const InvariantSet& inv,
                         const std::vector<Rational>& a) {
  if (a.size() != g.dim()) fail(ErrorCode::DimensionMismatch, "shift covector size");
  ShiftFamily fam;
  fam.a = a;
  for (const Poly& f : inv.generators) {
    Poly cur = f;
    int k = 0;
    while (!cur.is_zero() && !cur.is_constant()) {
      fam.members.add(cur, k == 0 ? "invariant" : "argshift");
      Poly next;
      for (size_t i = 0; i < g.dim(); ++i)
        if (a[i] != 0) next += cur.derivative(g.coord(i)).scaled(a[i]);
      cur = next;
      ++k;
    }
  }
  fam.commutativity = commutativity_check(fam.members, g);
  return fam;
}

CompleteResult complete_on_dual(const LieAlgebra& g, const InvariantSet& inv,
                                const RunConfig& cfg, Rng& rng) {
  CompleteResult res;
  Rng lrng(rng.raw());
  res.target_l = l_value(g, 0, cfg, lrng).l;
  long range = cfg.shift_range;
  for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    res.attempts = attempt + 1;
    std::vector<Rational> a(g.dim());
    bool nonzero = false;
    for (auto& c : a) {
      c = rng.draw_rational(range);
      if (c != 0) nonzero = true;
    }
    if (!nonzero) a[0] = 1;
    res.family = shift_family(g, inv, a);
    if (!res.family.commutativity.pass())
      fail(ErrorCode::Internal, "shift family fails symbolic commutativity");
    res.independence = independence_rank(res.family.members, g, cfg, rng);
    if (res.independence.rank == res.target_l) {
      res.complete = true;
      return res;
    }
    range *= 2;  // widen on retry
  }
  return res;
}

OrbitReport orbit_criterion(const LieAlgebra& g, const InvariantSet& inv,
                            const std::vector<Rational>& xi, const RunConfig& cfg,
                            Rng& rng) {
  size_t n = g.dim();
  if (xi.size() != n) fail(ErrorCode::DimensionMismatch, "orbit point size");
  OrbitReport rep;

  // Kirillov matrix at xi
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      VecK cij = g.basis_bracket(i, j);
      Rational s(0);
      for (size_t k = 0; k < n; ++k) {
        if (cij[k].is_zero()) continue;
        if (!cij[k].is_constant())
          fail(ErrorCode::Unsupported, "orbit criterion needs rational structure constants");
        s += cij[k].constant_value() * xi[k];
      }
      b[i][j] = s;
    }
  rep.orbit_dim = q_rank(b);

  Rng irng(rng.raw());
  rep.ind_g = index_of(g, cfg, irng).index;
  VecK xiv(n);
  for (size_t i = 0; i < n; ++i) xiv[i] = RatFunc::constant(xi[i]);
  Subspace stab = stabilizer(g, xiv);
  SubalgebraExtract stab_alg = subalgebra(g, stab);
  rep.ind_stabilizer =
      stab.dim() == 0 ? 0 : index_of(stab_alg.algebra, cfg, irng).index;
  rep.stabilizer_index_equal = (rep.ind_stabilizer == rep.ind_g);

  if (rep.orbit_dim == 0) {
    // xi = 0-type degenerate case: the restriction is empty and complete
    rep.found_a = true;
    rep.complete_on_orbit = rep.stabilizer_index_equal;
    return rep;
  }

  long range = cfg.shift_range;
  for (int attempt = 0; attempt < cfg.retry_budget && !rep.found_a; ++attempt) {
    std::vector<Rational> a(n);
    bool nonzero = false;
    for (auto& c : a) {
      c = rng.draw_rational(range);
      if (c != 0) nonzero = true;
    }
    if (!nonzero) a[0] = 1;
    ShiftFamily fam = shift_family(g, inv, a);
    // differentials at xi, paired against the tangent space (image of B)
    std::map<VarId, Rational> pt;
    for (size_t i = 0; i < n; ++i) pt[g.coord(i)] = xi[i];
    std::vector<std::vector<Rational>> paired;
    for (const auto& member : fam.members.members) {
      std::vector<Rational> grad(n, Rational(0));
      for (size_t i = 0; i < n; ++i) grad[i] = member.p.derivative(g.coord(i)).evaluate(pt);
      std::vector<Rational> row(n, Rational(0));
      for (size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (size_t i = 0; i < n; ++i)
          if (grad[i] != 0 && b[i][j] != 0) s += grad[i] * b[i][j];
        row[j] = s;
      }
      paired.push_back(std::move(row));
    }
    int dim_v = q_rank(std::move(paired));
    rep.dim_v = std::max(rep.dim_v, dim_v);
    if (2 * dim_v == rep.orbit_dim) {
      rep.found_a = true;
      rep.a = a;
    }
    range *= 2;
  }
  // the theorem's verdict requires the index equality as well
  rep.complete_on_orbit = rep.found_a && rep.stabilizer_index_equal;
  return rep;
}

}  // namespace commfam
