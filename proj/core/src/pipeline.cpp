#include "commfam/pipeline.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "commfam/catalog.hpp"
#include "commfam/errors.hpp"

namespace commfam {

using nlohmann::json;

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

PolyFamily abelian_base_family(const ReductionState& st, std::vector<StepInfo>& trace) {
  const LieAlgebra& g = st.algebra;
  std::vector<VecK> rows;
  for (const auto& c : st.constraints) rows.push_back(c.vec);
  Subspace pinned = Subspace::from_rows(g.dim(), rows);
  PolyFamily fam;
  for (size_t c : pinned.non_pivot_cols()) fam.add(g.coordinate_poly(c), "invariant");
  StepInfo info;
  info.kind = "base";
  info.dim_before = info.dim_after = static_cast<int>(g.dim());
  for (size_t i = 0; i < st.constraints.size(); ++i) info.pinned.push_back("central");
  trace.push_back(info);
  return fam;
}

}  // namespace

PolyFamily construct_family(const ReductionState& state, const ConstructOptions& opts,
                            Rng& rng, std::vector<StepInfo>& trace) {
  const LieAlgebra& g = state.algebra;
  size_t n = g.dim();
  if (n == 0) return {};

  // (a) abelian base case: the coordinates off the pinned directions
  if (is_abelian(g)) return abelian_base_family(state, trace);

  // (b) reductive with available invariants: argument shift on g*
  Subspace rad = solvable_radical(g);
  if (rad == center(g)) {
    if (!state.constraints.empty())
      fail(ErrorCode::Unsupported,
           "constrained reductive state has no invariant theory here: " + g.name());
    InvariantSet inv;
    if (!opts.user_invariants.empty()) {
      inv = user_invariants(g, opts.user_invariants);
    } else if (parse_classical_name(g.name())) {
      inv = classical_invariants(g);
    } else {
      fail(ErrorCode::Unsupported,
           "reductive algebra without builtin or user invariants: " + g.name());
    }
    CompleteResult res = complete_on_dual(g, inv, opts.cfg, rng);
    if (!res.complete)
      fail(ErrorCode::RetryBudgetExhausted,
           "shift-vector retry budget exhausted at rank " +
               std::to_string(res.independence.rank) + " of " +
               std::to_string(res.target_l));
    StepInfo info;
    info.kind = "argshift";
    info.dim_before = info.dim_after = static_cast<int>(n);
    trace.push_back(info);
    return res.family.members;
  }

  // (c) a central direction pinned to zero: pass to the quotient
  for (size_t ci = 0; ci < state.constraints.size(); ++ci) {
    if (!state.constraints[ci].value.is_zero()) continue;
    Subspace span = Subspace::from_rows(n, {state.constraints[ci].vec});
    Quotient q = quotient(g, span);
    ReductionState qs;
    qs.algebra = q.algebra;
    for (size_t cj = 0; cj < state.constraints.size(); ++cj) {
      if (cj == ci) continue;
      VecK img = q.project(state.constraints[cj].vec);
      if (vec_is_zero(img)) {
        if (!state.constraints[cj].value.is_zero())
          fail(ErrorCode::InconsistentStructure, "contradictory central character");
        continue;
      }
      qs.constraints.push_back({img, state.constraints[cj].value});
    }
    validate_state(qs);
    StepInfo info;
    info.kind = "quotient";
    info.dim_before = static_cast<int>(n);
    info.dim_after = static_cast<int>(qs.algebra.dim());
    info.pinned.push_back("central=0");
    trace.push_back(info);
    PolyFamily sub = construct_family(qs, opts, rng, trace);
    // pull back along the coordinate renaming of the complement
    std::map<VarId, RatFunc> images;
    for (size_t mcol = 0; mcol < q.complement_cols.size(); ++mcol)
      images[qs.algebra.coord(mcol)] =
          RatFunc(Poly::variable(g.coord(q.complement_cols[mcol])));
    PolyFamily out;
    for (const auto& member : sub.members) {
      RatFunc moved = poly_substitute(member.p, images);
      out.add(moved.num().primitive_part(), member.provenance);
    }
    return out;
  }

  // (d) Heisenberg nilradical with central z
  Subspace n_sub = nilradical(g);
  SubalgebraExtract nx = subalgebra(g, n_sub);
  if (auto hb = heisenberg_recognize(nx.algebra)) {
    HeisenbergBasis hb_g;
    for (const auto& x : hb->x) hb_g.x.push_back(nx.to_parent(x));
    for (const auto& y : hb->y) hb_g.y.push_back(nx.to_parent(y));
    hb_g.z = nx.to_parent(hb->z);
    bool z_central = true;
    for (size_t i = 0; i < n && z_central; ++i)
      z_central = vec_is_zero(g.bracket(hb_g.z, unit_vec(n, i)));
    if (z_central) {
      HeisReduction red = heis_reduce(state, hb_g, n_sub);
      trace.push_back(red.info);
      PolyFamily sub;
      if (red.quotient_state) sub = construct_family(*red.quotient_state, opts, rng, trace);
      return heis_assemble(red, sub);
    }
  }

  // (e) commutative characteristic ideal reduction
  auto h = commutative_characteristic_ideal(g, n_sub);
  if (!h)
    fail(ErrorCode::InconsistentStructure,
         "Heisenberg branch rejected but no commutative ideal found");
  ComReduction red = com_reduce(state, *h);
  if (red.tilde.algebra.dim() >= n)
    fail(ErrorCode::NoDimensionDrop, "recursion is not decreasing");
  trace.push_back(red.info);
  PolyFamily sub = construct_family(red.tilde, opts, rng, trace);
  return com_pullback(red, sub);
}

namespace {

Certificate certify(const LieAlgebra& g, const PolyFamily& family,
                    const ConstructOptions& opts, Rng& rng,
                    std::vector<StepInfo> trace) {
  Certificate cert;
  cert.algebra_name = g.name();
  cert.dim = g.dim();
  cert.fingerprint = g.fingerprint();
  cert.seed = opts.cfg.seed;
  cert.trials = opts.cfg.trials;
  cert.coeff_range = opts.cfg.coeff_range;
  cert.trace = std::move(trace);
  cert.target_l = l_value(g, 0, opts.cfg, rng).l;
  for (const auto& m : family.members) {
    cert.family.push_back(poly_to_string(m.p));
    cert.provenance.push_back(m.provenance);
  }
  CommutativityReport comm = commutativity_check(family, g);
  cert.pairs_checked = comm.pairs_checked;
  for (const auto& f : comm.failures)
    cert.failures.push_back("{" + cert.family[f.i] + ", " + cert.family[f.j] +
                            "} = " + ratfunc_to_string(f.witness));
  // unlucky sampling is re-drawn a few rounds before declaring incomplete
  IndependenceResult ind;
  for (int round = 0; round < opts.cfg.resample_rounds; ++round) {
    ind = independence_rank(family, g, opts.cfg, rng);
    if (ind.rank == cert.target_l) break;
  }
  cert.achieved_rank = ind.rank;
  cert.rank_samples = ind.samples;
  cert.verdict =
      (comm.pass() && cert.achieved_rank == cert.target_l) ? "complete" : "incomplete";
  return cert;
}

}  // namespace

Certificate construct(const LieAlgebra& g, const ConstructOptions& opts) {
  Rng rng(opts.cfg.seed);
  std::vector<StepInfo> trace;
  ReductionState state{g, {}};
  try {
    PolyFamily family = construct_family(state, opts, rng, trace);
    return certify(g, family, opts, rng, std::move(trace));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RetryBudgetExhausted) {
      Certificate cert;
      cert.algebra_name = g.name();
      cert.dim = g.dim();
      cert.fingerprint = g.fingerprint();
      cert.seed = opts.cfg.seed;
      cert.verdict = "failed";
      cert.failures.push_back(e.what());
      return cert;
    }
    throw;
  }
}

Certificate verify_family(const LieAlgebra& g, const PolyFamily& family,
                          const ConstructOptions& opts) {
  Rng rng(opts.cfg.seed);
  return certify(g, family, opts, rng, {});
}

std::string Certificate::to_json() const {
  json j;
  j["schema"] = schema;
  j["algebra"] = {{"name", algebra_name}, {"dim", dim}, {"fingerprint", fingerprint}};
  j["seed"] = seed;
  j["target_l"] = target_l;
  j["family"] = family;
  j["provenance"] = provenance;
  j["commutativity"] = {{"pairs_checked", pairs_checked}, {"failures", failures}};
  json samples = json::array();
  for (const auto& s : rank_samples) samples.push_back({{"point", s.point}, {"rank", s.rank}});
  j["independence"] = {{"achieved_rank", achieved_rank},
                       {"rank_samples", samples},
                       {"trials", trials},
                       {"coeff_range", coeff_range}};
  json tr = json::array();
  for (const auto& s : trace)
    tr.push_back({{"step", s.kind},
                  {"dim_before", s.dim_before},
                  {"dim_after", s.dim_after},
                  {"params_added", s.params_added},
                  {"pinned", s.pinned}});
  j["trace"] = tr;
  j["verdict"] = verdict;
  return j.dump(2);
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "algebra: " << algebra_name << " (dim " << dim << ")\n";
  os << "family (target l = " << target_l << "):\n";
  for (size_t i = 0; i < family.size(); ++i)
    os << "  [" << provenance[i] << "] " << family[i] << "\n";
  os << "commutativity: " << (failures.empty() ? "pass" : "FAIL") << " ("
     << pairs_checked << " pairs)";
  for (const auto& f : failures) os << "\n  witness " << f;
  os << "\nindependence: rank " << achieved_rank << " / target " << target_l << "\n";
  if (!trace.empty()) {
    os << "trace:";
    for (const auto& s : trace) os << " " << s.kind << "(" << s.dim_before << "->"
                                   << s.dim_after << ")";
    os << "\n";
  }
  os << "seed: " << seed << "\n";
  os << "verdict: " << verdict << "\n";
  return os.str();
}

}  // namespace commfam
