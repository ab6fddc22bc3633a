#include <doctest.h>

#include "commfam/catalog.hpp"
#include "commfam/poisson.hpp"
#include "test_support.hpp"

using namespace commfam;
using namespace commfam::test;

TEST_CASE("kirillov matrix entries") {
  LieAlgebra h3 = catalog("heis", 3);
  MatK b = kirillov_matrix(h3);
  Poly z = h3.coordinate_poly(2);
  CHECK(b.at(0, 1) == RatFunc(z));
  CHECK(b.at(1, 0) == -RatFunc(z));
  CHECK(b.at(0, 2).is_zero());
  CHECK(b.at(2, 2).is_zero());

  MatK zero = kirillov_matrix(catalog("abelian", 3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(zero.at(i, j).is_zero());

  LieAlgebra sl2 = catalog("sl", 2);
  MatK bs = kirillov_matrix(sl2);
  CHECK(bs.at(0, 1) == RatFunc(sl2.coordinate_poly(2)));                 // {e,f} = x_h
  CHECK(bs.at(0, 2) == RatFunc(sl2.coordinate_poly(0).scaled(-2)));      // {e,h} = -2x_e
  CHECK(bs.at(1, 2) == RatFunc(sl2.coordinate_poly(1).scaled(2)));       // {f,h} = 2x_f
}

TEST_CASE("poisson bracket examples") {
  LieAlgebra h3 = catalog("heis", 3);
  Poly x = h3.coordinate_poly(0), y = h3.coordinate_poly(1), z = h3.coordinate_poly(2);
  RatFunc br = poisson_bracket(h3, x * y, x);
  CHECK(br == RatFunc(-(x * z)));

  Poly p = x * y + z.pow(2);
  CHECK(poisson_bracket(h3, p, p).is_zero());

  LieAlgebra sl2 = catalog("sl", 2);
  Poly xe = sl2.coordinate_poly(0), xf = sl2.coordinate_poly(1), xh = sl2.coordinate_poly(2);
  Poly casimir = xh * xh + (xe * xf).scaled(4);
  CHECK(poisson_bracket(sl2, casimir, xe).is_zero());
  CHECK(poisson_bracket(sl2, casimir, xf).is_zero());
  CHECK(poisson_bracket(sl2, casimir, xh).is_zero());
}

TEST_CASE("bracket of coordinates matches the kirillov matrix") {
  for (auto& [name, size] : std::vector<std::pair<std::string, int>>{
           {"sl", 2}, {"heis", 5}, {"strictly_upper", 3}, {"oscillator", 4}}) {
    LieAlgebra g = catalog(name, size);
    MatK b = kirillov_matrix(g);
    for (size_t i = 0; i < g.dim(); ++i)
      for (size_t j = 0; j < g.dim(); ++j) {
        RatFunc br = poisson_bracket(g, g.coordinate_poly(i), g.coordinate_poly(j));
        CHECK((br - b.at(i, j)).is_zero());
      }
  }
}

TEST_CASE("poisson axioms on random triples") {
  Rng rng(31337);
  std::vector<LieAlgebra> algebras{catalog("heis", 3), catalog("sl", 2),
                                   catalog("oscillator", 4), catalog("strictly_upper", 3)};
  for (int i = 0; i < 30; ++i) {
    const LieAlgebra& g = algebras[static_cast<size_t>(rng.draw(0, 3))];
    Poly a = random_poly(rng, g.coords(), 3, 2, 5);
    Poly b = random_poly(rng, g.coords(), 3, 2, 5);
    Poly c = random_poly(rng, g.coords(), 3, 2, 5);
    // antisymmetry
    CHECK((poisson_bracket(g, a, b) + poisson_bracket(g, b, a)).is_zero());
    // Leibniz: {ab, c} = a{b,c} + {a,c}b
    RatFunc leib = poisson_bracket(g, a * b, c) - RatFunc(a) * poisson_bracket(g, b, c) -
                   RatFunc(b) * poisson_bracket(g, a, c);
    CHECK(leib.is_zero());
    // Jacobi
    auto nested = [&](const Poly& p, const RatFunc& q) {
      // q polynomial here (catalog constants have no denominators)
      REQUIRE(q.is_polynomial());
      return poisson_bracket(g, p, q.num());
    };
    RatFunc jac = nested(a, poisson_bracket(g, b, c)) + nested(b, poisson_bracket(g, c, a)) +
                  nested(c, poisson_bracket(g, a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("index matches the brute-force oracle") {
  RunConfig cfg;
  struct Expect {
    std::string name;
    int size;
    int index;
  };
  for (const auto& e : std::vector<Expect>{{"heis", 3, 1},
                                           {"abelian", 3, 3},
                                           {"sl", 2, 1},
                                           {"strictly_upper", 4, 2},
                                           {"oscillator", 4, 2},
                                           {"gl", 3, 3},
                                           {"filiform", 4, 2}}) {
    LieAlgebra g = catalog(e.name, e.size);
    Rng rng(cfg.seed);
    IndexResult idx = index_of(g, cfg, rng);
    CHECK(idx.index == e.index);
    CHECK(idx.index == index_oracle(g, 555));
    CHECK(idx.symbolic_checked);
    CHECK(idx.sampled_rank == idx.generic_rank);
  }
}

TEST_CASE("index is invariant under a change of basis") {
  RunConfig cfg;
  Rng rng(9);
  for (const auto& name : std::vector<std::pair<std::string, int>>{
           {"heis", 3}, {"oscillator", 4}, {"strictly_upper", 3}}) {
    LieAlgebra g = catalog(name.first, name.second);
    size_t n = g.dim();
    MatK p(n, n);
    while (true) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p.at(i, j) = RatFunc::constant(rng.draw_rational(3));
      if (matk_rank(p) == static_cast<int>(n)) break;
    }
    LieAlgebra conj = g.change_basis(p, g.name() + "conj");
    Rng r1(cfg.seed), r2(cfg.seed);
    CHECK(index_of(g, cfg, r1).index == index_of(conj, cfg, r2).index);
  }
}

TEST_CASE("l value accounting") {
  RunConfig cfg;
  Rng rng(cfg.seed);
  CHECK(l_value(catalog("gl", 3), 0, cfg, rng).l == 6);
  CHECK(l_value(catalog("heis", 3), 0, cfg, rng).l == 2);
  CHECK(l_value(catalog("abelian", 5), 0, cfg, rng).l == 5);
  // central slice of heis3: dim X = 2, invariants = 0, l = 1
  LValue slice = l_value(catalog("heis", 3), 1, cfg, rng);
  CHECK(slice.dim_X == 2);
  CHECK(slice.invariant_degrees == 0);
  CHECK(slice.l == 1);
}

TEST_CASE("independence rank") {
  RunConfig cfg;
  LieAlgebra ab3 = catalog("abelian", 3);
  PolyFamily coords3;
  for (size_t i = 0; i < 3; ++i) coords3.add(ab3.coordinate_poly(i), "invariant");
  Rng rng(cfg.seed);
  CHECK(independence_rank(coords3, ab3, cfg, rng).rank == 3);

  PolyFamily dep;
  dep.add(ab3.coordinate_poly(0), "invariant");
  dep.add(ab3.coordinate_poly(0).pow(2), "invariant");
  CHECK(independence_rank(dep, ab3, cfg, rng).rank == 1);

  LieAlgebra sl2 = catalog("sl", 2);
  Poly casimir = sl2.coordinate_poly(2).pow(2) +
                 (sl2.coordinate_poly(0) * sl2.coordinate_poly(1)).scaled(4);
  PolyFamily fam;
  fam.add(casimir, "invariant");
  fam.add(sl2.coordinate_poly(1), "invariant");
  CHECK(independence_rank(fam, sl2, cfg, rng).rank == 2);
}

TEST_CASE("commutativity check records failures") {
  LieAlgebra h3 = catalog("heis", 3);
  PolyFamily good;
  good.add(h3.coordinate_poly(2), "invariant");
  good.add(h3.coordinate_poly(0), "invariant");
  CHECK(commutativity_check(good, h3).pass());

  PolyFamily bad;
  bad.add(h3.coordinate_poly(0), "invariant");
  bad.add(h3.coordinate_poly(1), "invariant");
  CommutativityReport rep = commutativity_check(bad, h3);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.pairs_checked == 1);
  // witness is the defining relation {x, y} = z up to sign
  RatFunc w = rep.failures[0].witness;
  CHECK((w - RatFunc(h3.coordinate_poly(2))).is_zero());
}
