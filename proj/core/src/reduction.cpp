#include "commfam/reduction.hpp"

#include <algorithm>

#include "commfam/errors.hpp"

namespace commfam {

namespace {

VecK unit_vec(size_t n, size_t i) {
  VecK v(n);
  v[i] = RatFunc::constant(1);
  return v;
}

bool vec_is_zero(const VecK& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_central_vec(const LieAlgebra& g, const VecK& v) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (!vec_is_zero(g.bracket(v, unit_vec(g.dim(), i)))) return false;
  return true;
}

RatFunc ratfunc_substitute(const RatFunc& f, const std::map<VarId, RatFunc>& images) {
  RatFunc num = poly_substitute(f.num(), images);
  RatFunc den = poly_substitute(f.den(), images);
  return num / den;
}

/// Substitutes the pin relations (linear in the pivot coordinates of the
/// RREF'd constraint matrix) into f. Identities that hold on the state's
/// slice X reduce to zero under this map.
RatFunc reduce_mod_pins(const LieAlgebra& g, const std::vector<Constraint>& pins,
                        const RatFunc& f) {
  if (pins.empty()) return f;
  size_t n = g.dim();
  // augmented RREF [vec | value]
  std::vector<VecK> rows;
  for (const auto& pin : pins) {
    VecK row = pin.vec;
    row.push_back(pin.value);
    rows.push_back(row);
  }
  MatK aug = matk_rref(MatK::from_rows(rows, n + 1));
  std::map<VarId, RatFunc> images;
  for (size_t r = 0; r < aug.rows(); ++r) {
    size_t pc = 0;
    while (pc < n && aug.at(r, pc).is_zero()) ++pc;
    if (pc == n) fail(ErrorCode::InconsistentStructure, "inconsistent central character");
    // x_pc = value - sum_{j > pc} a_j x_j   (pivot coefficient is 1 in RREF)
    RatFunc image = aug.at(r, n);
    for (size_t j = pc + 1; j < n; ++j)
      if (!aug.at(r, j).is_zero())
        image -= aug.at(r, j) * RatFunc(Poly::variable(g.coord(j)));
    images[g.coord(pc)] = image;
  }
  return ratfunc_substitute(f, images);
}

}  // namespace

void validate_state(const ReductionState& st) {
  const LieAlgebra& g = st.algebra;
  std::vector<VecK> rows;
  for (const auto& c : st.constraints) {
    if (c.vec.size() != g.dim()) fail(ErrorCode::DimensionMismatch, "constraint size");
    if (vec_is_zero(c.vec)) fail(ErrorCode::InconsistentStructure, "zero constraint vector");
    if (!is_central_vec(g, c.vec))
      fail(ErrorCode::InconsistentStructure, "constraint vector is not central");
    for (const auto& e : c.vec)
      if (!e.uses_only(VarKind::Parameter))
        fail(ErrorCode::InconsistentStructure, "constraint vector not over K");
    rows.push_back(c.vec);
  }
  if (!rows.empty() &&
      Subspace::from_rows(g.dim(), rows).dim() != st.constraints.size())
    fail(ErrorCode::InconsistentStructure, "constraint vectors linearly dependent");
}

HeisReduction heis_reduce(const ReductionState& st, const HeisenbergBasis& hb,
                          const Subspace& n) {
  const LieAlgebra& g = st.algebra;
  size_t dim = g.dim();
  HeisReduction red;
  red.parent = st;
  red.zvec = hb.z;
  red.vplus = hb.x;

  if (!is_central_vec(g, hb.z))
    fail(ErrorCode::PreconditionFailed, "Heisenberg centre is not central in g");

  // pins on the z-direction are absorbed into the assembly bookkeeping
  Subspace zspan = Subspace::from_rows(dim, {hb.z});
  std::vector<Constraint> carried;
  for (const auto& c : st.constraints) {
    if (zspan.contains(c.vec)) {
      if (c.value.is_zero())
        fail(ErrorCode::PreconditionFailed, "z is pinned to 0 on this state");
      red.z_pinned = true;
    } else {
      carried.push_back(c);
    }
  }

  red.info.kind = "heis";
  red.info.dim_before = static_cast<int>(dim);
  red.info.dim_after = static_cast<int>(dim - n.dim());
  red.info.params_added = 0;
  if (red.z_pinned) red.info.pinned.push_back("z");

  if (n.dim() == dim) return red;  // g itself Heisenberg: nothing to lift

  Quotient q = quotient(g, n);
  RatFunc lz = g.linear_form(hb.z);

  // eta(gamma) in V solving (gamma - ad*(eta) gamma)|_V = 0:
  // coefficient of x_i is l(y_i)/l(z), of y_i is -l(x_i)/l(z)
  size_t k = hb.k();
  std::vector<VecK> darboux;
  std::vector<RatFunc> eta;
  for (size_t i = 0; i < k; ++i) {
    darboux.push_back(hb.x[i]);
    eta.push_back(g.linear_form(hb.y[i]) / lz);
  }
  for (size_t i = 0; i < k; ++i) {
    darboux.push_back(hb.y[i]);
    eta.push_back(-(g.linear_form(hb.x[i]) / lz));
  }

  for (size_t m = 0; m < q.complement_cols.size(); ++m) {
    VecK e = unit_vec(dim, q.complement_cols[m]);
    RatFunc lift = g.linear_form(e);
    std::vector<VecK> fe(2 * k);  // [f_j, e]
    for (size_t j = 0; j < 2 * k; ++j) {
      fe[j] = g.bracket(darboux[j], e);
      if (!vec_is_zero(fe[j])) lift -= eta[j] * g.linear_form(fe[j]);
    }
    for (size_t j = 0; j < 2 * k; ++j) {
      if (eta[j].is_zero()) continue;
      for (size_t jj = 0; jj < 2 * k; ++jj) {
        if (vec_is_zero(fe[jj])) continue;
        VecK ffe = g.bracket(darboux[j], fe[jj]);
        if (vec_is_zero(ffe)) continue;
        lift += RatFunc::constant(Rational(1, 2)) * eta[j] * eta[jj] * g.linear_form(ffe);
      }
    }
    red.lift_map[q.algebra.coord(m)] = lift;
  }

  // carried constraints project to the quotient
  ReductionState qs;
  std::vector<Constraint> qcons;
  for (const auto& c : carried) {
    VecK img = q.project(c.vec);
    if (vec_is_zero(img))
      fail(ErrorCode::InconsistentStructure, "carried constraint vanishes in g/n");
    qcons.push_back({img, c.value});
  }
  qs.algebra = q.algebra;
  qs.constraints = std::move(qcons);
  validate_state(qs);
  red.quotient_state = std::move(qs);
  red.q = std::move(q);

  // --- symbolic verification of the lift ---
  const LieAlgebra& qa = red.quotient_state->algebra;
  std::vector<VecK> nbasis;
  for (size_t r = 0; r < n.dim(); ++r) nbasis.push_back(n.basis_row(r));
  for (const auto& entry : red.lift_map) {
    // N-invariance: the cleared lift commutes with every element of n
    const RatFunc& lift = entry.second;
    for (const auto& v : nbasis) {
      RatFunc lv = g.linear_form(v);
      RatFunc br = poisson_bracket(g, lift.num(), lv.num());
      if (!br.is_zero())
        fail(ErrorCode::Internal, "heis lift fails N-invariance");
    }
  }
  // Poisson homomorphism: {lift(u_a), lift(u_b)} = lift({u_a, u_b})
  for (size_t a = 0; a < qa.dim(); ++a)
    for (size_t b = a + 1; b < qa.dim(); ++b) {
      const RatFunc& la = red.lift_map.at(qa.coord(a));
      const RatFunc& lb = red.lift_map.at(qa.coord(b));
      RatFunc lhs = poisson_bracket(g, la.num(), lb.num()) / (RatFunc(la.den()) * RatFunc(lb.den()));
      RatFunc rhs;
      VecK cab = qa.basis_bracket(a, b);
      for (size_t kk = 0; kk < qa.dim(); ++kk)
        if (!cab[kk].is_zero()) rhs += cab[kk] * red.lift_map.at(qa.coord(kk));
      if (!(lhs - rhs).is_zero())
        fail(ErrorCode::Internal, "heis lift fails the Poisson-homomorphism identity");
    }

  return red;
}

namespace {

/// Checks that den is a power of base times an element of K (a central
/// constant, legitimate to clear); returns the power, or nullopt.
std::optional<uint32_t> power_of_mod_params(const Poly& den, const Poly& base) {
  Poly d = den.primitive_part();
  Poly b = base.primitive_part();
  uint32_t k = 0;
  while (!d.uses_only(VarKind::Parameter)) {
    auto q = poly_div_exact(d, b);
    if (!q) return std::nullopt;
    d = q->primitive_part();
    ++k;
  }
  return k;
}

}  // namespace

PolyFamily heis_assemble(const HeisReduction& red, const PolyFamily& sub) {
  const LieAlgebra& g = red.parent.algebra;
  PolyFamily out;
  RatFunc lz = g.linear_form(red.zvec);
  for (const auto& member : sub.members) {
    RatFunc lifted = poly_substitute(member.p, red.lift_map);
    if (!power_of_mod_params(lifted.den(), lz.num()))
      fail(ErrorCode::Internal, "lift denominator is not a z-power");
    out.add(coordinate_primitive(lifted.num()), "heis_lift");
  }
  for (const auto& x : red.vplus)
    out.add(coordinate_primitive(g.linear_form(x).num()), "vplus_basis");
  if (!red.z_pinned) out.add(coordinate_primitive(lz.num()), "vplus_basis");
  return out;
}

ComReduction com_reduce(const ReductionState& st, const Subspace& h) {
  const LieAlgebra& g = st.algebra;
  size_t n = g.dim();
  size_t m = h.dim();
  ComReduction red;
  red.parent = st;
  red.h = h;

  // h must be a commutative ideal
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (!vec_is_zero(g.bracket(h.basis_row(i), h.basis_row(j))))
        fail(ErrorCode::NotCommutativeIdeal, "h is not commutative");
  if (!is_ideal(g, h)) fail(ErrorCode::NotAnIdeal, "h is not an ideal");

  bool acts = product_space(g, Subspace::full(n), h).dim() > 0;
  if (m <= 1 && !acts)
    fail(ErrorCode::PreconditionFailed,
         "h is 1-dimensional and central: excluded by the induction's case split");

  // split the central character: pins inside h are absorbed into an affine
  // parametrization of x_h
  std::vector<VecK> kappa_rows;   // h-coordinates of inside pins
  std::vector<RatFunc> pin_vals;
  std::vector<Constraint> outside;
  for (const auto& c : st.constraints) {
    if (h.contains(c.vec)) {
      auto coords = express_in_rows(h.basis(), c.vec);
      kappa_rows.push_back(*coords);
      pin_vals.push_back(c.value);
    } else {
      outside.push_back(c);
    }
  }
  size_t s = kappa_rows.size();

  // direction space D and particular point alpha0 of x_h
  std::vector<VecK> dirs;
  VecK alpha0(m);
  if (s == 0) {
    for (size_t r = 0; r < m; ++r) dirs.push_back(unit_vec(m, r));
  } else {
    MatK kappa = MatK::from_rows(kappa_rows, m);
    dirs = matk_kernel(kappa);
    if (dirs.size() != m - s)
      fail(ErrorCode::InconsistentStructure, "degenerate pinned directions in h");
    auto part = solve_linear(kappa, pin_vals);
    if (!part) fail(ErrorCode::InconsistentStructure, "inconsistent central character on h");
    alpha0 = *part;
  }
  // mprime = 0 is legitimate: every h-direction pinned, x_h a single point,
  // the reduction proceeds over the unenlarged field
  size_t mprime = dirs.size();

  // dual vectors d*_r in h with <d_s, d*_r> = delta_sr
  MatK dmat = MatK::from_rows(dirs, m);
  std::vector<VecK> duals;
  for (size_t r = 0; r < mprime; ++r) {
    auto u = solve_linear(dmat, unit_vec(mprime, r));
    if (!u) fail(ErrorCode::Internal, "direction space has no dual basis");
    duals.push_back(*u);
  }

  // fresh parameters beta_r and the affine functional alpha
  for (size_t r = 0; r < mprime; ++r)
    red.new_params.push_back(VarRegistry::instance().fresh_parameter());
  VecK alpha(m);
  for (size_t j = 0; j < m; ++j) {
    RatFunc v = alpha0[j];
    for (size_t r = 0; r < mprime; ++r)
      if (!dirs[r][j].is_zero())
        v += RatFunc(Poly::variable(red.new_params[r])) * dirs[r][j];
    alpha[j] = v;
  }

  // ghat = kernel of A[j][i] = alpha([e_i, h_j])
  MatK a(m, n);
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) {
      VecK br = g.bracket(unit_vec(n, i), h.basis_row(j));
      if (vec_is_zero(br)) continue;
      auto coords = express_in_rows(h.basis(), br);
      if (!coords) fail(ErrorCode::NotAnIdeal, "[g, h] leaves h");
      RatFunc entry;
      for (size_t l = 0; l < m; ++l)
        if (!(*coords)[l].is_zero()) entry += (*coords)[l] * alpha[l];
      a.at(j, i) = entry;
    }
  std::vector<VecK> ghat = matk_kernel(a);

  // hhat = { theta in h (x) K : alpha(theta) = 0 }, mapped to g coordinates
  MatK alpha_row(1, m);
  for (size_t j = 0; j < m; ++j) alpha_row.at(0, j) = alpha[j];
  std::vector<VecK> hhat_g;
  for (const VecK& theta : matk_kernel(alpha_row)) {
    VecK vg(n);
    for (size_t l = 0; l < m; ++l) {
      if (theta[l].is_zero()) continue;
      VecK hrow = h.basis_row(l);
      for (size_t i = 0; i < n; ++i)
        if (!hrow[i].is_zero()) vg[i] += theta[l] * hrow[i];
    }
    hhat_g.push_back(vg);
  }
  if (hhat_g.size() != m - 1)
    fail(ErrorCode::Internal, "hhat has unexpected dimension");

  // w representative: theta0 with alpha(theta0) = 1, reduced modulo hhat
  size_t jstar = m;
  for (size_t j = 0; j < m; ++j)
    if (!alpha[j].is_zero()) {
      jstar = j;
      break;
    }
  if (jstar == m) fail(ErrorCode::Internal, "alpha vanishes identically");
  VecK theta0(n);
  {
    RatFunc inv = alpha[jstar].inverse();
    VecK hrow = h.basis_row(jstar);
    for (size_t i = 0; i < n; ++i)
      if (!hrow[i].is_zero()) theta0[i] = hrow[i] * inv;
  }
  Subspace rh = Subspace::from_rows(n, hhat_g);
  VecK wrep = rh.reduce(theta0);
  if (vec_is_zero(wrep)) fail(ErrorCode::Internal, "w representative collapsed");

  // coset representatives: echelon pivoting on ghat with hhat eliminated first
  std::vector<VecK> reps{wrep};
  auto span_rows = [&]() {
    std::vector<VecK> rows = hhat_g;
    rows.insert(rows.end(), reps.begin(), reps.end());
    return Subspace::from_rows(n, rows);
  };
  Subspace span = span_rows();
  for (const VecK& v : ghat) {
    VecK resid = span.reduce(v);
    if (vec_is_zero(resid)) continue;
    // scale so the leading entry is 1 (deterministic representatives)
    size_t lead = 0;
    while (resid[lead].is_zero()) ++lead;
    RatFunc inv = resid[lead].inverse();
    for (auto& e : resid) e = e * inv;
    reps.push_back(resid);
    span = span_rows();
  }
  size_t q = reps.size();
  if (q != ghat.size() - (m - 1))
    fail(ErrorCode::Internal, "gtilde dimension mismatch");
  if (q >= n)
    fail(ErrorCode::NoDimensionDrop, "dim gtilde did not decrease");
  red.reps = MatK::from_rows(reps, n);

  // structure constants of gtilde = ghat / hhat over K(beta)
  std::vector<VecK> mrows = hhat_g;
  mrows.insert(mrows.end(), reps.begin(), reps.end());
  MatK mmat = MatK::from_rows(mrows, n);
  BracketMap bm;
  for (size_t i = 0; i < q; ++i)
    for (size_t j = i + 1; j < q; ++j) {
      VecK br = g.bracket(reps[i], reps[j]);
      auto coeffs = express_in_rows(mmat, br);
      if (!coeffs) fail(ErrorCode::Internal, "bracket leaves ghat");
      for (size_t k = 0; k < q; ++k)
        if (!(*coeffs)[m - 1 + k].is_zero()) bm[{i, j}][k] = (*coeffs)[m - 1 + k];
    }
  std::vector<std::string> labels{"w"};
  for (size_t i = 1; i < q; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<VarId> params = g.params();
  params.insert(params.end(), red.new_params.begin(), red.new_params.end());
  LieAlgebra tilde(g.name() + "~", labels, params, bm);  // Jacobi re-verified here

  // w must be central in gtilde
  for (size_t i = 1; i < q; ++i)
    if (!vec_is_zero(tilde.basis_bracket(0, i)))
      fail(ErrorCode::Internal, "w is not central in gtilde");

  // carried constraints: image in gtilde coordinates
  std::vector<Constraint> tcons;
  tcons.push_back({unit_vec(q, 0), RatFunc::constant(1)});  // w = 1
  for (const auto& c : outside) {
    auto coeffs = express_in_rows(mmat, c.vec);
    if (!coeffs)
      fail(ErrorCode::InconsistentStructure, "carried constraint is not in ghat");
    VecK img(q);
    for (size_t k = 0; k < q; ++k) img[k] = (*coeffs)[m - 1 + k];
    if (vec_is_zero(img))
      fail(ErrorCode::InconsistentStructure, "carried constraint vanishes in gtilde");
    tcons.push_back({img, c.value});
  }
  red.tilde.algebra = std::move(tilde);
  red.tilde.constraints = std::move(tcons);
  validate_state(red.tilde);

  // pullback images of the new parameters: beta_r -> l(d*_r) - alpha0(d*_r)
  for (size_t r = 0; r < mprime; ++r) {
    VecK dg(n);
    RatFunc shift;
    for (size_t l = 0; l < m; ++l) {
      if (duals[r][l].is_zero()) continue;
      VecK hrow = h.basis_row(l);
      for (size_t i = 0; i < n; ++i)
        if (!hrow[i].is_zero()) dg[i] += duals[r][l] * hrow[i];
      shift += duals[r][l] * alpha0[l];
    }
    red.param_images.push_back(g.linear_form(dg) - shift);
  }

  // non-pinned h-directions appended on pullback
  if (s == 0) {
    for (size_t l = 0; l < m; ++l) red.appended_h.push_back(h.basis_row(l));
  } else {
    Subspace pinned_in_h = Subspace::from_rows(m, kappa_rows);
    for (size_t l : pinned_in_h.non_pivot_cols()) red.appended_h.push_back(h.basis_row(l));
  }

  red.info.kind = "com";
  red.info.dim_before = static_cast<int>(n);
  red.info.dim_after = static_cast<int>(q);
  red.info.params_added = static_cast<int>(mprime);
  red.info.pinned.push_back("w");
  for (size_t c = 1; c < red.tilde.constraints.size(); ++c)
    red.info.pinned.push_back("carried");
  return red;
}

PolyFamily com_pullback(const ComReduction& red, const PolyFamily& sub) {
  const LieAlgebra& g = red.parent.algebra;
  const LieAlgebra& tilde = red.tilde.algebra;
  size_t n = g.dim();
  size_t q = tilde.dim();

  std::map<VarId, RatFunc> beta_images;
  for (size_t r = 0; r < red.new_params.size(); ++r)
    beta_images[red.new_params[r]] = red.param_images[r];

  std::map<VarId, RatFunc> images = beta_images;
  for (size_t j = 0; j < q; ++j) {
    RatFunc image;
    for (size_t i = 0; i < n; ++i) {
      const RatFunc& coeff = red.reps.at(j, i);
      if (coeff.is_zero()) continue;
      image += ratfunc_substitute(coeff, beta_images) * RatFunc(Poly::variable(g.coord(i)));
    }
    images[tilde.coord(j)] = image;
  }

  PolyFamily out;
  for (const auto& member : sub.members) {
    RatFunc pulled = poly_substitute(member.p, images);
    out.add(coordinate_primitive(pulled.num()), "com_pullback");
  }
  for (const auto& hvec : red.appended_h)
    out.add(coordinate_primitive(g.linear_form(hvec).num()), "h_basis");

  // H-invariance, modulo the parent's central character: every member
  // commutes with every element of h on the parent's slice X
  for (const auto& member : out.members)
    for (size_t l = 0; l < red.h.dim(); ++l) {
      RatFunc lh = g.linear_form(red.h.basis_row(l));
      RatFunc br = poisson_bracket(g, member.p, lh.num());
      if (!reduce_mod_pins(g, red.parent.constraints, br).is_zero())
        fail(ErrorCode::Internal, "pullback member fails H-invariance");
    }
  return out;
}

}  // namespace commfam
