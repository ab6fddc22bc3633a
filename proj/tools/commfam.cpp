#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commfam/catalog.hpp"
#include "commfam/errors.hpp"
#include "commfam/heisenberg.hpp"
#include "commfam/pipeline.hpp"
#include "commfam/structure.hpp"

using namespace commfam;
using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
      return 2;
    case ErrorCode::Jacobi:
      return 3;
    case ErrorCode::Unsupported:
    case ErrorCode::UnknownName:
      return 4;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Rational> parse_csv_rationals(const std::string& csv, size_t expect,
                                          const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  if (out.size() != expect)
    fail(ErrorCode::Parse, what + " needs " + std::to_string(expect) + " coordinates");
  return out;
}

PolyFamily parse_family_file(const std::string& path, const LieAlgebra& g) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid family JSON: ") + e.what());
  }
  if (!j.contains("family") || !j["family"].is_array())
    fail(ErrorCode::Parse, "family file needs a \"family\" array of polynomial strings");
  PolyFamily fam;
  LabelMap lm = g.label_map();
  for (const auto& s : j["family"]) {
    Poly p = poly_parse(s.get<std::string>(), lm);
    if (p.is_zero()) fail(ErrorCode::Parse, "zero polynomial in family file");
    fam.add(p, "user");
  }
  return fam;
}

InvariantSet invariants_for(const LieAlgebra& g, const std::string& invariants_file) {
  if (!invariants_file.empty()) {
    json j = json::parse(read_file(invariants_file));
    std::vector<Poly> gens;
    LabelMap lm = g.label_map();
    for (const auto& s : j.at("generators")) gens.push_back(poly_parse(s.get<std::string>(), lm));
    return user_invariants(g, gens);
  }
  if (is_abelian(g)) {
    InvariantSet inv;
    inv.source = "abelian_trivial";
    for (size_t i = 0; i < g.dim(); ++i) inv.generators.push_back(g.coordinate_poly(i));
    return inv;
  }
  return classical_invariants(g);
}

struct Cli {
  RunConfig cfg;
  bool json_out = false;
};

int cmd_analyze(const Cli& cli, const std::string& file) {
  LieAlgebra g = LieAlgebra::from_json(read_file(file));
  Subspace c = center(g);
  Subspace rad = solvable_radical(g);
  Subspace nil = nilradical(g);
  SubalgebraExtract nx = subalgebra(g, nil);
  auto hb = heisenberg_recognize(nx.algebra);
  Rng rng(cli.cfg.seed);
  IndexResult idx = index_of(g, cli.cfg, rng);
  Rng rng2(cli.cfg.seed);
  LValue l = l_value(g, 0, cli.cfg, rng2);

  if (cli.json_out) {
    json out;
    out["algebra"] = {{"name", g.name()}, {"dim", g.dim()}, {"fingerprint", g.fingerprint()}};
    out["center_dim"] = c.dim();
    out["solvable_radical_dim"] = rad.dim();
    out["nilradical_dim"] = nil.dim();
    out["nilradical_heisenberg"] = hb.has_value();
    if (hb) out["heisenberg_k"] = hb->k();
    out["index"] = idx.index;
    out["index_symbolic_checked"] = idx.symbolic_checked;
    out["l"] = l.l;
    out["seed"] = cli.cfg.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << g.name() << " (dim " << g.dim() << ")\n"
              << "center dim: " << c.dim() << "\n"
              << "solvable radical dim: " << rad.dim() << "\n"
              << "nilradical dim: " << nil.dim() << "\n"
              << "nilradical heisenberg: "
              << (hb ? "yes (k=" + std::to_string(hb->k()) + ")" : "no") << "\n"
              << "index: " << idx.index
              << (idx.symbolic_checked ? " (symbolically checked)" : " (sampled)") << "\n"
              << "l(g*): " << l.l << "\n"
              << "seed: " << cli.cfg.seed << "\n";
  }
  return 0;
}

int cmd_catalog(const std::string& name, int size) {
  LieAlgebra g = catalog(name, size);
  std::cout << g.to_json() << "\n";
  return 0;
}

int cmd_shift(const Cli& cli, const std::string& file, const std::string& a_csv,
              const std::string& invariants_file) {
  LieAlgebra g = LieAlgebra::from_json(read_file(file));
  InvariantSet inv = invariants_for(g, invariants_file);
  Rng rng(cli.cfg.seed);
  std::vector<Rational> a;
  if (!a_csv.empty()) {
    a = parse_csv_rationals(a_csv, g.dim(), "--a");
  } else {
    for (size_t i = 0; i < g.dim(); ++i) a.push_back(rng.draw_rational(cli.cfg.shift_range));
  }
  ShiftFamily fam = shift_family(g, inv, a);
  if (cli.json_out) {
    json out;
    out["algebra"] = g.name();
    json av = json::array();
    for (const auto& c : a) av.push_back(rat_str(c));
    out["a"] = av;
    json members = json::array();
    for (const auto& m : fam.members.members)
      members.push_back({{"poly", poly_to_string(m.p)}, {"provenance", m.provenance}});
    out["members"] = members;
    out["pairs_checked"] = fam.commutativity.pairs_checked;
    out["commutative"] = fam.commutativity.pass();
    out["seed"] = cli.cfg.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "shift direction a = (";
    for (size_t i = 0; i < a.size(); ++i) std::cout << (i ? "," : "") << rat_str(a[i]);
    std::cout << ")\n";
    for (const auto& m : fam.members.members)
      std::cout << "  [" << m.provenance << "] " << poly_to_string(m.p) << "\n";
    std::cout << "commutativity: " << (fam.commutativity.pass() ? "pass" : "FAIL") << " ("
              << fam.commutativity.pairs_checked << " pairs)\n";
  }
  return fam.commutativity.pass() ? 0 : 5;
}

int cmd_complete(const Cli& cli, const std::string& file, const std::string& invariants_file) {
  LieAlgebra g = LieAlgebra::from_json(read_file(file));
  ConstructOptions opts;
  opts.cfg = cli.cfg;
  if (!invariants_file.empty()) {
    json j = json::parse(read_file(invariants_file));
    LabelMap lm = g.label_map();
    for (const auto& s : j.at("generators"))
      opts.user_invariants.push_back(poly_parse(s.get<std::string>(), lm));
  }
  Certificate cert = construct(g, opts);
  std::cout << (cli.json_out ? cert.to_json() + "\n" : cert.to_text());
  return cert.complete() ? 0 : 5;
}

int cmd_verify(const Cli& cli, const std::string& file, const std::string& family_file) {
  LieAlgebra g = LieAlgebra::from_json(read_file(file));
  PolyFamily fam = parse_family_file(family_file, g);
  ConstructOptions opts;
  opts.cfg = cli.cfg;
  Certificate cert = verify_family(g, fam, opts);
  std::cout << (cli.json_out ? cert.to_json() + "\n" : cert.to_text());
  return cert.complete() ? 0 : 5;
}

int cmd_orbit(const Cli& cli, const std::string& file, const std::string& xi_csv,
              const std::string& invariants_file) {
  LieAlgebra g = LieAlgebra::from_json(read_file(file));
  InvariantSet inv = invariants_for(g, invariants_file);
  std::vector<Rational> xi = parse_csv_rationals(xi_csv, g.dim(), "--xi");
  Rng rng(cli.cfg.seed);
  OrbitReport rep = orbit_criterion(g, inv, xi, cli.cfg, rng);
  if (cli.json_out) {
    json out;
    out["algebra"] = g.name();
    out["orbit_dim"] = rep.orbit_dim;
    out["ind_g"] = rep.ind_g;
    out["ind_stabilizer"] = rep.ind_stabilizer;
    out["stabilizer_index_equal"] = rep.stabilizer_index_equal;
    out["found_a"] = rep.found_a;
    out["dim_V"] = rep.dim_v;
    out["complete_on_orbit"] = rep.complete_on_orbit;
    out["seed"] = cli.cfg.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "orbit dim: " << rep.orbit_dim << "\n"
              << "ind g: " << rep.ind_g << ", ind g_xi: " << rep.ind_stabilizer
              << (rep.stabilizer_index_equal ? " (equal)" : " (NOT equal)") << "\n";
    if (rep.orbit_dim > 0)
      std::cout << "search: " << (rep.found_a ? "found a" : "no a found") << ", dim V = "
                << rep.dim_v << "\n";
    std::cout << (rep.complete_on_orbit ? "complete on orbit\n" : "not certified complete\n");
  }
  return rep.complete_on_orbit ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commfam: complete Poisson-commuting families on duals of Lie algebras"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--seed", cli.cfg.seed, "random seed (all draws flow from it)");
  app.add_option("--trials", cli.cfg.trials, "random evaluation points per rank estimate");
  app.add_option("--range", cli.cfg.coeff_range, "evaluation coordinate range");
  app.add_option("--cutoff", cli.cfg.symbolic_rank_cutoff,
                 "symbolic index cross-check dimension cutoff");
  app.add_option("--retries", cli.cfg.retry_budget, "shift vector retry budget");
  app.add_flag("--json", cli.json_out, "machine-readable JSON output");

  std::string file, family_file, a_csv, xi_csv, invariants_file, cat_name;
  int cat_size = 0;

  auto* analyze = app.add_subcommand("analyze", "structure, index and l of an algebra");
  analyze->add_option("file", file, "algebra JSON file")->required();

  auto* shift = app.add_subcommand("shift", "argument-shift family for a direction");
  shift->add_option("file", file, "algebra JSON file")->required();
  shift->add_option("--a", a_csv, "shift covector (comma separated rationals)");
  shift->add_option("--invariants", invariants_file, "user invariant generators (JSON)");

  auto* complete = app.add_subcommand("complete", "construct a certified complete family");
  complete->add_option("file", file, "algebra JSON file")->required();
  complete->add_option("--invariants", invariants_file, "user invariant generators (JSON)");

  auto* verify = app.add_subcommand("verify", "certify a user family");
  verify->add_option("file", file, "algebra JSON file")->required();
  verify->add_option("family", family_file, "family JSON file")->required();

  auto* orbit = app.add_subcommand("orbit", "coadjoint-orbit completeness at a point");
  orbit->add_option("file", file, "algebra JSON file")->required();
  orbit->add_option("--xi", xi_csv, "orbit point (comma separated rationals)")->required();
  orbit->add_option("--invariants", invariants_file, "user invariant generators (JSON)");

  auto* cat = app.add_subcommand("catalog", "print a built-in algebra as JSON");
  cat->add_option("name", cat_name, "family name")->required();
  cat->add_option("size", cat_size, "size parameter")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(cli, file);
    if (shift->parsed()) return cmd_shift(cli, file, a_csv, invariants_file);
    if (complete->parsed()) return cmd_complete(cli, file, invariants_file);
    if (verify->parsed()) return cmd_verify(cli, file, family_file);
    if (orbit->parsed()) return cmd_orbit(cli, file, xi_csv, invariants_file);
    if (cat->parsed()) return cmd_catalog(cat_name, cat_size);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
