// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "commfam/catalog.hpp"
#include "commfam/errors.hpp"
#include "commfam/pipeline.hpp"
#include "test_support.hpp"

using namespace commfam;
using namespace commfam::test;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
};

std::vector<Certificate> g_argshift_certs;  // reused by criterion 7
std::vector<Certificate> g_pipeline_certs;

// ---------------------------------------------------------------- criterion 1
// Argument-shift completeness on the classical algebras: symbolically zero
// pairwise brackets, independence rank exactly (dim g + ind g)/2 with the
// index derived from the brute-force Kirillov-rank oracle.
Outcome criterion1() {
  Outcome out;
  struct Want {
    std::string fam;
    int n;
    int l;
  };
  const std::vector<Want> wants{{"gl", 2, 3}, {"gl", 3, 6}, {"sl", 2, 2}, {"sl", 3, 5},
                                {"so", 3, 2}, {"so", 4, 4}, {"sp", 4, 6}};
  RunConfig cfg;
  for (const auto& w : wants) {
    LieAlgebra g = catalog(w.fam, w.n);
    int ind = index_oracle(g, 0xACCE5501u + w.n);
    int l = (static_cast<int>(g.dim()) + ind) / 2;
    if (l != w.l) {
      out.pass = false;
      out.notes << " " << g.name() << ": oracle l=" << l << " != " << w.l;
      continue;
    }
    ConstructOptions opts;
    opts.cfg = cfg;
    Certificate cert = construct(g, opts);
    g_argshift_certs.push_back(cert);
    if (!cert.complete() || cert.target_l != l || cert.achieved_rank != l ||
        !cert.failures.empty()) {
      out.pass = false;
      out.notes << " " << g.name() << ": verdict=" << cert.verdict << " rank="
                << cert.achieved_rank << "/" << l;
    }
  }
  return out;
}

// ---------------------------------------------------------------- criterion 2
// Index via random sampling equals index via fully symbolic rank over the
// function field, for every catalog algebra of dim <= 10.
Outcome criterion2() {
  Outcome out;
  std::vector<LieAlgebra> algebras;
  for (int n = 1; n <= 3; ++n) algebras.push_back(catalog("gl", n));
  for (int n = 2; n <= 3; ++n) algebras.push_back(catalog("sl", n));
  for (int n = 2; n <= 5; ++n) algebras.push_back(catalog("so", n));
  algebras.push_back(catalog("sp", 2));
  algebras.push_back(catalog("sp", 4));
  for (int n = 3; n <= 9; n += 2) algebras.push_back(catalog("heis", n));
  for (int n = 2; n <= 5; ++n) algebras.push_back(catalog("strictly_upper", n));
  algebras.push_back(catalog("borel_sl2", 2));
  for (int n = 1; n <= 10; ++n) algebras.push_back(catalog("abelian", n));
  for (int n = 3; n <= 10; ++n) algebras.push_back(catalog("filiform", n));
  algebras.push_back(catalog("oscillator", 4));

  RunConfig cfg;  // trials = 8, range 10^4, cutoff 12
  for (const auto& g : algebras) {
    if (g.dim() > 10) continue;
    Rng rng(cfg.seed);
    IndexResult idx = index_of(g, cfg, rng);
    if (!idx.symbolic_checked || idx.sampled_rank != idx.generic_rank) {
      out.pass = false;
      out.notes << " " << g.name() << ": sampled rank " << idx.sampled_rank
                << " vs symbolic " << idx.generic_rank;
    }
  }
  return out;
}

// ---------------------------------------------------------------- criterion 3
// The inductive pipeline on the solvable catalog: verdict complete with
// family size l(g*), l derived from the index oracle.
Outcome criterion3() {
  Outcome out;
  std::vector<LieAlgebra> algebras;
  for (int n = 1; n <= 6; ++n) algebras.push_back(catalog("abelian", n));
  algebras.push_back(catalog("heis", 3));
  algebras.push_back(catalog("heis", 5));
  algebras.push_back(catalog("borel_sl2", 2));
  algebras.push_back(catalog("oscillator", 4));
  algebras.push_back(catalog("strictly_upper", 3));
  algebras.push_back(catalog("strictly_upper", 4));
  algebras.push_back(catalog("filiform", 4));

  for (const auto& g : algebras) {
    int ind = index_oracle(g, 0xACCE5503u);
    int l = (static_cast<int>(g.dim()) + ind) / 2;
    ConstructOptions opts;
    Certificate cert = construct(g, opts);
    g_pipeline_certs.push_back(cert);
    if (!cert.complete() || static_cast<int>(cert.family.size()) != l ||
        cert.target_l != l) {
      out.pass = false;
      out.notes << " " << g.name() << ": verdict=" << cert.verdict << " size="
                << cert.family.size() << " l=" << l;
    }
  }
  return out;
}

// ---------------------------------------------------------------- criterion 4
// 50 seeded random solvable algebras (dim <= 6, nilpotent bases + diagonal
// derivation extensions, Jacobi-checked at construction). Every executed
// heis_reduce verifies the N-invariance and Poisson-homomorphism identities
// internally; every com_reduce verifies Jacobi on gtilde, centrality of w and
// the strict dimension drop. Any violation throws, so zero failures means
// every executed step passed.
LieAlgebra random_solvable(Rng& rng, int tag) {
  std::string name = "rand" + std::to_string(tag);
  int kind = static_cast<int>(rng.draw(0, 6));
  BracketMap bm;
  std::vector<std::string> labels;
  auto lab = [&](const std::string& stem, int count) {
    for (int i = 1; i <= count; ++i) labels.push_back(stem + std::to_string(i));
  };
  switch (kind) {
    case 0: {  // abelian base with a random derivation d
      int k = static_cast<int>(rng.draw(1, 5));
      lab("v", k);
      labels.push_back("d");
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Rational c = rng.draw_rational(3);
          if (c != 0) bm[{size_t(i), size_t(k)}][j] = RatFunc::constant(-c);  // [v_i, d]
        }
      break;
    }
    case 1: {  // heis3 (+ optional diagonal derivation)
      lab("x", 1);
      lab("y", 1);
      labels.push_back("z");
      bm[{0, 1}][2] = RatFunc::constant(1);
      if (rng.draw(0, 1) == 1) {
        labels.push_back("d");
        Rational c = rng.draw_rational(3);
        Rational a = rng.draw_rational(3);
        Rational b = c - a;
        if (a != 0) bm[{0, 3}][0] = RatFunc::constant(-a);
        if (b != 0) bm[{1, 3}][1] = RatFunc::constant(-b);
        if (c != 0) bm[{2, 3}][2] = RatFunc::constant(-c);
      }
      break;
    }
    case 2: {  // heis5 (+ optional diagonal derivation)
      lab("x", 2);
      lab("y", 2);
      labels.push_back("z");
      bm[{0, 2}][4] = RatFunc::constant(1);
      bm[{1, 3}][4] = RatFunc::constant(1);
      if (rng.draw(0, 1) == 1) {
        labels.push_back("d");
        Rational c = rng.draw_rational(3);
        for (int i = 0; i < 2; ++i) {
          Rational a = rng.draw_rational(3);
          Rational b = c - a;
          if (a != 0) bm[{size_t(i), 5}][i] = RatFunc::constant(-a);
          if (b != 0) bm[{size_t(2 + i), 5}][2 + i] = RatFunc::constant(-b);
        }
        if (c != 0) bm[{4, 5}][4] = RatFunc::constant(-c);
      }
      break;
    }
    case 3: {  // filiform4 (+ optional diagonal derivation from the grading)
      lab("e", 4);
      bm[{0, 1}][2] = RatFunc::constant(1);
      bm[{0, 2}][3] = RatFunc::constant(1);
      if (rng.draw(0, 1) == 1) {
        labels.push_back("d");
        Rational a = rng.draw_rational(3);
        Rational b = rng.draw_rational(3);
        std::vector<Rational> w{a, b, a + b, a + a + b};
        for (int i = 0; i < 4; ++i)
          if (w[i] != 0) bm[{size_t(i), 4}][i] = RatFunc::constant(-w[i]);
      }
      break;
    }
    case 4: {  // strictly upper triangular 3x3 + optional torus weights
      lab("u", 3);  // u1 = E12, u2 = E13, u3 = E23
      bm[{0, 2}][1] = RatFunc::constant(1);
      if (rng.draw(0, 1) == 1) {
        labels.push_back("d");
        Rational m1 = rng.draw_rational(3), m2 = rng.draw_rational(3),
                 m3 = rng.draw_rational(3);
        std::vector<Rational> w{m1 - m2, m1 - m3, m2 - m3};
        for (int i = 0; i < 3; ++i)
          if (w[i] != 0) bm[{size_t(i), 3}][i] = RatFunc::constant(-w[i]);
      }
      break;
    }
    case 5: {  // heis3 + abelian summand (multi-dimensional centre)
      int k = static_cast<int>(rng.draw(1, 2));
      lab("x", 1);
      lab("y", 1);
      labels.push_back("z");
      lab("c", k);
      bm[{0, 1}][2] = RatFunc::constant(1);
      if (3 + k < 6 && rng.draw(0, 1) == 1) {
        labels.push_back("d");
        size_t di = static_cast<size_t>(3 + k);
        Rational c = rng.draw_rational(3);
        Rational a = rng.draw_rational(3);
        Rational b = c - a;
        if (a != 0) bm[{0, di}][0] = RatFunc::constant(-a);
        if (b != 0) bm[{1, di}][1] = RatFunc::constant(-b);
        if (c != 0) bm[{2, di}][2] = RatFunc::constant(-c);
        for (int i = 0; i < k; ++i) {
          Rational w = rng.draw_rational(3);
          if (w != 0) bm[{size_t(3 + i), di}][3 + i] = RatFunc::constant(-w);
        }
      }
      break;
    }
    default: {  // oscillator + central line (nested com -> heis chain)
      labels = {"h", "x", "y", "z", "c"};
      bm[{0, 1}][2] = RatFunc::constant(1);
      bm[{0, 2}][1] = RatFunc::constant(-1);
      bm[{1, 2}][3] = RatFunc::constant(1);
      break;
    }
  }
  return LieAlgebra(name, labels, {}, bm);
}

Outcome criterion4() {
  Outcome out;
  Rng rng(0xACCE5504u);
  int heis_steps = 0, com_steps = 0, failures = 0;
  for (int i = 0; i < 50; ++i) {
    LieAlgebra g = random_solvable(rng, i);
    try {
      ConstructOptions opts;
      opts.cfg.seed = 1000 + static_cast<uint64_t>(i);
      Certificate cert = construct(g, opts);
      for (const auto& s : cert.trace) {
        if (s.kind == "heis") ++heis_steps;
        if (s.kind == "com") ++com_steps;
      }
      if (!cert.complete()) {
        ++failures;
        out.notes << " " << g.name() << ": " << cert.verdict;
      }
    } catch (const Error& e) {
      ++failures;
      out.notes << " " << g.name() << ": " << e.what();
    }
  }
  out.notes << " (heis steps: " << heis_steps << ", com steps: " << com_steps << ")";
  if (failures > 0 || heis_steps == 0 || com_steps == 0) out.pass = false;
  return out;
}

// ---------------------------------------------------------------- criterion 5
// Orbit completeness criterion at regular rational points of sl2 and gl2, plus
// the degenerate point xi = 0.
Outcome criterion5() {
  Outcome out;
  RunConfig cfg;
  {
    LieAlgebra sl2 = catalog("sl", 2);
    InvariantSet inv = classical_invariants(sl2);
    Rng rng(cfg.seed);
    OrbitReport rep =
        orbit_criterion(sl2, inv, {Rational(0), Rational(0), Rational(1)}, cfg, rng);
    if (!(rep.orbit_dim == 2 && rep.stabilizer_index_equal && rep.found_a &&
          2 * rep.dim_v == rep.orbit_dim && rep.complete_on_orbit)) {
      out.pass = false;
      out.notes << " sl2 regular point failed";
    }
    OrbitReport zero =
        orbit_criterion(sl2, inv, {Rational(0), Rational(0), Rational(0)}, cfg, rng);
    if (!(zero.orbit_dim == 0 && zero.complete_on_orbit)) {
      out.pass = false;
      out.notes << " sl2 degenerate point failed";
    }
  }
  {
    LieAlgebra gl2 = catalog("gl", 2);
    InvariantSet inv = classical_invariants(gl2);
    Rng rng(cfg.seed);
    OrbitReport rep = orbit_criterion(
        gl2, inv, {Rational(1), Rational(0), Rational(0), Rational(2)}, cfg, rng);
    if (!(rep.orbit_dim == 2 && rep.ind_g == 2 && rep.ind_stabilizer == 2 &&
          rep.found_a && rep.complete_on_orbit)) {
      out.pass = false;
      out.notes << " gl2 regular point failed";
    }
  }
  return out;
}

// ---------------------------------------------------------------- criterion 6
// Poisson axioms: 1000 seeded random triples on random catalog algebras,
// antisymmetry, Leibniz and Jacobi all exact.
Outcome criterion6() {
  Outcome out;
  std::vector<LieAlgebra> algebras{
      catalog("heis", 3),   catalog("heis", 5),      catalog("sl", 2),
      catalog("so", 3),     catalog("oscillator", 4), catalog("strictly_upper", 3),
      catalog("borel_sl2", 2), catalog("abelian", 4), catalog("filiform", 4)};
  Rng rng(0xACCE5506u);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const LieAlgebra& g =
        algebras[static_cast<size_t>(rng.draw(0, static_cast<long>(algebras.size()) - 1))];
    Poly a = random_poly(rng, g.coords(), 3, 2, 5);
    Poly b = random_poly(rng, g.coords(), 3, 2, 5);
    Poly c = random_poly(rng, g.coords(), 3, 2, 5);
    RatFunc anti = poisson_bracket(g, a, b) + poisson_bracket(g, b, a);
    RatFunc leib = poisson_bracket(g, a * b, c) - RatFunc(a) * poisson_bracket(g, b, c) -
                   RatFunc(b) * poisson_bracket(g, a, c);
    RatFunc jac = poisson_bracket(g, a, poisson_bracket(g, b, c).num()) +
                  poisson_bracket(g, b, poisson_bracket(g, c, a).num()) +
                  poisson_bracket(g, c, poisson_bracket(g, a, b).num());
    if (!anti.is_zero() || !leib.is_zero() || !jac.is_zero()) {
      out.pass = false;
      out.notes << " triple " << i << " on " << g.name() << " violates an axiom";
      break;
    }
    ++checked;
  }
  out.notes << " (" << checked << " triples)";
  return out;
}

// ---------------------------------------------------------------- criterion 7
// Isotropy bound: for every certified commuting family produced in criteria
// 1 and 3, no sampled Jacobian rank exceeds l.
Outcome criterion7() {
  Outcome out;
  int families = 0, violations = 0;
  for (const auto* bucket : {&g_argshift_certs, &g_pipeline_certs})
    for (const auto& cert : *bucket) {
      if (!cert.failures.empty()) continue;  // only commuting families
      ++families;
      for (const auto& s : cert.rank_samples)
        if (s.rank > cert.target_l) ++violations;
    }
  out.notes << " (" << families << " families)";
  if (violations > 0 || families == 0) {
    out.pass = false;
    out.notes << " violations: " << violations;
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "argument-shift completeness on gl2, gl3, sl2, sl3, so3, so4, sp4", criterion1},
      {2, "sampled index equals symbolic index on catalog algebras (dim <= 10)", criterion2},
      {3, "inductive pipeline completes on the solvable catalog", criterion3},
      {4, "reduction-step invariants on 50 random solvable algebras", criterion4},
      {5, "orbit criterion at regular and degenerate points of sl2, gl2", criterion5},
      {6, "Poisson bracket axioms on 1000 random triples", criterion6},
      {7, "isotropy bound: sampled rank never exceeds l", criterion7},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes << " exception: " << e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
              << c.title << out.notes.str() << " [" << dt << "s]" << std::endl;
    if (!out.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << " passed, " << failed << " failed"
            << std::endl;
  return failed;
}
