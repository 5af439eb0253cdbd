#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pachner/bv.hpp"
#include "pachner/json_io.hpp"
#include "pachner/sp_algebras.hpp"
#include "pachner/state_sum.hpp"
#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

namespace pachner::cli {

void Outcome::add(std::string name, bool ok, nlohmann::json detail) {
  checks.push_back(Check{std::move(name), ok ? "pass" : "fail", std::move(detail)});
}

void Outcome::skip(std::string name, nlohmann::json detail) {
  checks.push_back(Check{std::move(name), "skipped", std::move(detail)});
}

namespace {

Surface seed_by_name(const std::string& name) {
  auto num = [&](std::size_t from) { return std::stoi(name.substr(from)); };
  try {
    if (name.rfind("disk", 0) == 0) return fan_triangulate(disk_polygon(num(4)));
    if (name == "triangle_center") return triangle_with_center();
    if (name == "torus") return minimal_torus();
    if (name == "genus2") return genus_two_glued();
    if (name.rfind("cyl", 0) == 0) {
      auto x = name.find('x');
      Surface s = strip(std::string(std::stoi(name.substr(3, x - 3)), 'R'));
      if (x != std::string::npos) s = stack(s, strip(std::string(num(x + 1), 'R')));
      return s;
    }
  } catch (const std::exception&) {
  }
  throw Error("unknown seed surface " + name + " (diskN, cylK, cylKxK, triangle_center, torus, genus2)");
}

Surface load_surface(const std::string& file, const Globals& g) {
  if (!file.empty()) return surface_from_json(read_json_file(file));
  if (!g.seed_surface.empty()) return seed_by_name(g.seed_surface);
  throw Error("give --surface or --seed-surface");
}

/// A file path, or a builtin name; "minimal" is the c4 found on M11.
CyclicAInfty load_algebra(const std::string& spec, Ring ring) {
  if (std::filesystem::exists(spec)) return algebra_from_json(read_json_file(spec));
  if (spec == "minimal") {
    auto m = find_minimal_m3(builtin_algebra("M11", Ring::GF2));
    if (!m) throw Error("no minimal algebra found");
    return *m;
  }
  return builtin_algebra(spec, ring);
}

AhatAlgebra load_ahat(const std::string& spec, Ring ring) {
  if (std::filesystem::exists(spec)) return ahat_from_json(read_json_file(spec));
  return strict_ahat(builtin_algebra(spec, ring));
}

PointConfiguration load_points(const std::string& file) { return points_from_json(read_json_file(file)); }

nlohmann::json fvector_json(const std::vector<long>& f) { return f; }

void cmd_verify_algebra(Outcome& o, const std::string& alg, int nmax, const Globals& g) {
  CyclicAInfty v = load_algebra(alg, g.ring);
  o.body["algebra"] = v.name;
  o.body["ring"] = std::string(ring_name(v.ring));
  o.add("structure", true, {{"dim", v.basis->size()}});
  RelationReport rel = verify_relations(v, nmax);
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [n, st] : rel.per_n) per[std::to_string(n)] = st;
  nlohmann::json d{{"per_n", per}};
  if (!rel.witness.empty()) d["witness"] = rel.witness;
  if (rel.status == "skipped")
    o.skip("relations", d);
  else
    o.add("relations", rel.status == "pass", d);
  RelationReport cyc = verify_cyclicity(v);
  o.add("cyclicity", cyc.status == "pass", cyc.witness.empty() ? nlohmann::json::object() : nlohmann::json{{"witness", cyc.witness}});
}

void cmd_flip_complex(Outcome& o, const std::string& surface, const std::string& emit, const Globals& g) {
  Surface s = load_surface(surface, g);
  BuildOptions opt;
  opt.max_dim = g.max_dim;
  opt.max_cells = g.max_cells;
  opt.ring = g.ring;
  FlipComplex fc;
  try {
    fc = build_flip_complex(s, opt);
  } catch (const CapExceeded& e) {
    o.skip("build", {{"cap", std::to_string(g.max_cells)}, {"reason", e.what()}});
    return;
  }
  o.body["fvector"] = fvector_json(fc.fvector());
  o.body["complete"] = fc.complete;
  o.add("boundary_squared_zero", boundary_squares_to_zero(fc, g.ring));
  if (emit == "homology") {
    Homology h = homology_gf2(fc, false);
    o.body["betti_gf2"] = h.betti;
  } else if (emit == "cells") {
    nlohmann::json cells = nlohmann::json::array();
    for (int d = 0; d <= fc.built_dim; ++d)
      for (const auto& rep : fc.reps[d]) cells.push_back({{"dim", d}, {"faces", rep.face_profile()}});
    o.body["cells"] = cells;
  } else if (emit != "fvector") {
    throw Error("unknown --emit " + emit);
  }
}

void cmd_state_sum(Outcome& o, const std::string& surface, const std::string& alg, const std::string& chain,
                   const std::string& emit, const Globals& g) {
  CyclicAInfty v = load_algebra(alg, g.ring);
  GradedTensor t;
  if (!chain.empty()) {
    t = evaluate_on_chain(chain_from_json(read_json_file(chain)), v);
  } else {
    t = evaluate_Z(load_surface(surface, g), v).tensor;
  }
  if (emit == "scalar") {
    if (t.arity() != 0) throw Error("scalar output needs a closed surface");
    o.body["value"] = to_string(t.at({}));
  } else {
    o.body["tensor"] = tensor_to_json(t);
  }
  o.add("evaluated", true);
}

void cmd_check_closedness(Outcome& o, const std::string& surface, const std::string& alg, const Globals& g) {
  CyclicAInfty v = load_algebra(alg, g.ring);
  BuildOptions opt;
  opt.max_dim = g.max_dim;
  opt.max_cells = g.max_cells;
  opt.ring = v.ring;
  FlipComplex fc;
  try {
    fc = build_flip_complex(load_surface(surface, g), opt);
  } catch (const CapExceeded& e) {
    o.skip("closedness", {{"cap", std::to_string(g.max_cells)}, {"reason", e.what()}});
    return;
  }
  o.body["fvector"] = fvector_json(fc.fvector());
  ClosednessReport r = check_closedness(fc, v, g.max_dim);
  nlohmann::json d{{"checked", r.checked}, {"skipped", r.skipped}, {"through_dim", r.through_dim}};
  if (!r.failures.empty()) d["witnesses"] = r.failures;
  if (r.status == "skipped")
    o.skip("closedness", d);
  else
    o.add("closedness", r.status == "pass", d);
}

void cmd_dw(Outcome& o, const std::string& group, int genus) {
  nlohmann::json gj = std::filesystem::exists(group) ? read_json_file(group) : nlohmann::json{{"builtin", group}};
  GroupTable t = group_from_json(gj);
  Rational brute = dw_brute(t, genus);
  o.body["value"] = to_string(brute);
  Surface s = genus == 1 ? minimal_torus() : genus == 2 ? genus_two_glued() : closed_polygon_surface(genus);
  CyclicAInfty v = from_group_algebra(t, Ring::Q);
  Rational z = evaluate_Z(s, v).tensor.at({});
  Rational norm = dw_normalized(z, t.order(), s.euler_characteristic());
  o.body["state_sum"] = to_string(z);
  o.add("state_sum_matches", norm == brute, {{"normalized", to_string(norm)}, {"chi", s.euler_characteristic()}});
  if (gj.contains("builtin")) {
    std::vector<int> dims;
    if (gj["builtin"] == "S3")
      dims = {1, 1, 2};
    else
      dims.assign(t.order(), 1);
    Rational irr = dw_from_irreps(t.order(), dims, genus);
    o.add("irreps_match", irr == brute, {{"irreps", to_string(irr)}});
  }
}

void cmd_bv(Outcome& o, int k, const std::string& check, int order, const std::string& alg, const Globals& g) {
  if (check == "cycle") {
    BvCycle c = build_c_delta(k, g.ring);
    o.body["support"] = c.chain.size();
    o.add("closed", chain_boundary(c.chain).is_zero());
    o.add("support_k_squared", static_cast<int>(c.chain.size()) == k * k);
  } else if (check == "square") {
    ChainCheck c = verify_square_bounds(k);
    o.add("square_bounds", c.ok, {{"lhs", c.lhs_size}, {"rhs", c.rhs_size}, {"detail", c.detail}});
  } else if (check == "mc") {
    auto r = verify_mc(order);
    for (std::size_t s = 0; s < r.size(); ++s)
      o.add("boundary_B" + std::to_string(s + 1), r[s].ok, {{"lhs", r[s].lhs_size}, {"rhs", r[s].rhs_size}});
  } else if (check == "operator") {
    CyclicAInfty v = load_algebra(alg, Ring::GF2);
    GradedTensor op = bv_operator(v, build_c_delta(k).chain);
    o.body["operator_entries"] = op.entries().size();
    o.add("q_closed", apply_Q(op, v.Q).is_zero());
    SquareReport sq = check_square_q_exact(op, k, v);
    o.add("square_q_exact", sq.square_closed && sq.witness_found,
          {{"square_entries", sq.square_entries}, {"square_zero", sq.square_zero}});
    MaurerCartanReport mc = delta_infinity(v, order);
    o.add("delta_infinity_squared_zero", mc.ok, {{"entries", mc.entries}});
  } else if (check == "nontrivial") {
    NontrivialityReport r = c_delta_nontriviality(k, g.max_cells);
    if (!r.complex_built)
      o.skip("nontrivial", {{"cap", std::to_string(g.max_cells)}});
    else
      o.add("nontrivial", !r.bounds, {{"fvector", r.fvector}});
  } else {
    throw Error("unknown --check " + check);
  }
}

nlohmann::json poset_dot(const SecondaryPolytope& sp) {
  std::string dot = "digraph sp {\n";
  for (std::size_t f = 0; f < sp.faces.size(); ++f)
    dot += "  f" + std::to_string(f) + " [label=\"" + describe(sp.config, sp.faces[f]) + "\"];\n";
  for (std::size_t f = 0; f < sp.faces.size(); ++f)
    for (int c : sp.covers[f]) dot += "  f" + std::to_string(f) + " -> f" + std::to_string(c) + ";\n";
  return dot + "}\n";
}

void cmd_sp(Outcome& o, const std::string& points, const std::string& emit) {
  PointConfiguration a = load_points(points);
  SecondaryPolytope sp = build_sp(a);
  o.body["dim"] = sp.dim;
  o.body["fvector"] = sp.fvector();
  o.body["subdivisions"] = sp.subdivisions_total;
  o.body["triangulations"] = sp.triangulations_total;
  o.add("hull_agrees", sp.hull_agrees);
  if (emit == "faces") {
    nlohmann::json faces = nlohmann::json::array();
    for (std::size_t f = 0; f < sp.faces.size(); ++f) {
      nlohmann::json h = nlohmann::json::array();
      for (const auto& x : sp.heights[f]) h.push_back(to_string(x));
      faces.push_back({{"dim", sp.face_dim[f]}, {"cells", subdivision_to_json(a, sp.faces[f])}, {"heights", h}});
    }
    o.body["faces"] = faces;
  } else if (emit == "gkz") {
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t i = 0; i < sp.vertices.size(); ++i) {
      nlohmann::json phi = nlohmann::json::array();
      for (const auto& x : sp.gkz[i]) phi.push_back(to_string(x));
      v.push_back({{"cells", subdivision_to_json(a, sp.faces[sp.vertices[i]])}, {"gkz", phi}});
    }
    o.body["vertices"] = v;
  } else if (emit == "poset") {
    o.body["dot"] = poset_dot(sp);
  } else if (emit != "fvector") {
    throw Error("unknown --emit " + emit);
  }
}

void report_model2(Outcome& o, const std::string& name, const Model2Report& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.top_terms)
    terms.push_back({{"subdivision", t.subdivision}, {"incidence", t.incidence}, {"zero", t.zero}});
  nlohmann::json d{{"checked", r.checked}, {"top_terms", terms}, {"top_lhs_zero", r.top_lhs_zero}};
  if (!r.failures.empty()) d["witnesses"] = r.failures;
  o.add(name, r.status == "pass", d);
}

void cmd_ahat(Outcome& o, const std::string& points, const std::string& alg, bool all_faces, const Globals& g) {
  PointConfiguration a = load_points(points);
  AhatAlgebra v = load_ahat(alg, g.ring);
  SecondaryPolytope sp = build_sp(a);
  o.body["fvector"] = sp.fvector();
  if (all_faces)
    report_model2(o, "model2_closedness", model2_check(sp, v));
  else
    report_model2(o, "ahat_relation", verify_ahat_relation(sp, v));
}

struct Sp1Input {
  std::vector<int> degrees;
  Matrix q;
  nlohmann::json j;
  int truncation = 6;
};

Sp1Input load_sp1(const std::string& file) {
  Sp1Input in;
  in.j = read_json_file(file);
  if (!in.j.contains("degrees") || !in.j["degrees"].is_array()) throw SchemaError("/degrees", "missing");
  for (const auto& d : in.j["degrees"]) {
    if (!d.is_number_integer()) throw SchemaError("/degrees", "expected integers");
    in.degrees.push_back(d.get<int>());
  }
  if (!in.j.contains("Q")) throw SchemaError("/Q", "missing");
  in.q = matrix_from_json(in.j["Q"], Ring::Q, "/Q");
  if (in.j.contains("truncation")) in.truncation = in.j["truncation"].get<int>();
  return in;
}

SP1Algebra sp1_algebra(const Sp1Input& in) {
  if (in.j.contains("G")) return sp1_from_continuum(in.degrees, in.q, matrix_from_json(in.j["G"], Ring::Q, "/G"), in.truncation);
  if (!in.j.contains("U") || !in.j["U"].is_array()) throw SchemaError("/U", "give G (continuum) or U (list of matrices)");
  SP1Algebra a;
  a.degrees = in.degrees;
  a.Q = in.q;
  a.order = in.truncation;
  for (std::size_t n = 0; n < in.j["U"].size(); ++n)
    a.U.push_back(MatrixSeries::constant(matrix_from_json(in.j["U"][n], Ring::Q, "/U/" + std::to_string(n)), a.order));
  return a;
}

void report_sp1(Outcome& o, const std::string& name, const SP1Report& r) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [n, ok] : r.per_n) per[std::to_string(n)] = ok ? "pass" : "fail";
  nlohmann::json d{{"per_n", per}};
  if (!r.witness.empty()) d["witness"] = r.witness;
  o.add(name, r.status == "pass", d);
}

void report_htqm(Outcome& o, const std::string& name, const HtqmReport& r) {
  nlohmann::json d{{"faces", r.faces}};
  if (!r.failures.empty()) d["witnesses"] = r.failures;
  o.add(name, r.status == "pass", d);
}

void cmd_sp1(Outcome& o, const std::string& input, const std::string& check, int order) {
  Sp1Input in = load_sp1(input);
  if (check == "infinitesimal") {
    if (!in.j.contains("G_list")) throw SchemaError("/G_list", "missing");
    std::vector<Matrix> gs;
    for (std::size_t n = 0; n < in.j["G_list"].size(); ++n)
      gs.push_back(matrix_from_json(in.j["G_list"][n], Ring::Q, "/G_list/" + std::to_string(n)));
    report_sp1(o, "infinitesimal_relations", infinitesimal_sp1_verify(in.degrees, in.q, gs, order));
    return;
  }
  SP1Algebra a = sp1_algebra(in);
  if (check == "relation") {
    report_sp1(o, "sp1_relation", sp1_verify(a, order));
  } else if (check == "htqm") {
    for (int m = 3; m <= order + 2; ++m) {
      std::vector<Rational> xs;
      for (int i = 0; i < m; ++i) xs.push_back(i);
      report_htqm(o, "htqm_closedness_m" + std::to_string(m), htqm_check(build_sp(points_on_line(xs)), a));
    }
  } else {
    throw Error("unknown --check " + check);
  }
}

void cmd_htqm(Outcome& o, const std::string& input, const std::string& points) {
  SP1Algebra a = sp1_algebra(load_sp1(input));
  PointConfiguration pts = load_points(points);
  SecondaryPolytope sp = build_sp(pts);
  o.body["fvector"] = sp.fvector();
  report_htqm(o, "htqm_closedness", htqm_check(sp, a));
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"pachner: flip complexes, state sums and secondary polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::string ring = "gf2";
  app.add_option("--ring", ring, "gf2 or q")->check(CLI::IsMember({"gf2", "q", "GF2", "Q"}));
  app.add_option("--out", g.out, "report file (default stdout)");
  app.add_option("--max-cells", g.max_cells, "cell cap for complex builds");
  app.add_option("--max-dim", g.max_dim, "highest cell dimension");
  app.add_flag("--verbose", g.verbose);
  app.add_option("--seed-surface", g.seed_surface, "builtin seed: diskN, cylK, cylKxK, triangle_center, torus, genus2");

  std::string surface, algebra = "Z2", chain, emit, group = "Z2", points, input, check;
  int nmax = 6, genus = 1, k = 2, order = 3;

  auto* va = app.add_subcommand("verify-algebra", "check the polygon relations of a cyclic A-infinity algebra");
  va->add_option("algebra", algebra, "algebra JSON or builtin name")->required();
  va->add_option("--nmax", nmax);
  auto* fc = app.add_subcommand("flip-complex", "build the flip complex of a surface");
  fc->add_option("--surface", surface);
  fc->add_option("--emit", emit, "fvector|cells|homology")->default_val("fvector");
  auto* ss = app.add_subcommand("state-sum", "evaluate Z on a surface or chain");
  ss->add_option("--surface", surface);
  ss->add_option("--algebra", algebra);
  ss->add_option("--chain", chain);
  ss->add_option("--emit", emit, "tensor|scalar")->default_val("tensor");
  auto* cc = app.add_subcommand("check-closedness", "(delta + Q) Z = 0 on the flip complex");
  cc->add_option("--surface", surface);
  cc->add_option("--algebra", algebra);
  auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten value of a closed surface");
  dw->add_option("--group", group, "group JSON or builtin name");
  dw->add_option("--genus", genus)->check(CLI::Range(1, 4));
  auto* bv = app.add_subcommand("bv", "BV cycles and operators on cylinders");
  bv->add_option("--k", k)->check(CLI::Range(1, 8));
  bv->add_option("--check", check, "cycle|square|mc|operator|nontrivial")->required();
  bv->add_option("--order", order);
  bv->add_option("--algebra", algebra)->default_val("minimal");
  auto* sp = app.add_subcommand("sp", "secondary polytope of a point configuration");
  sp->add_option("--points", points)->required();
  sp->add_option("--emit", emit, "faces|fvector|gkz|poset")->default_val("fvector");
  auto* ah = app.add_subcommand("ahat-verify", "top-face relation of an Ahat algebra");
  ah->add_option("--points", points)->required();
  ah->add_option("--algebra", algebra);
  auto* m2 = app.add_subcommand("model2", "closedness of Z on every face of sp(A)");
  m2->add_option("--points", points)->required();
  m2->add_option("--algebra", algebra);
  auto* s1 = app.add_subcommand("sp1", "SP1 relations");
  s1->add_option("--input", input)->required();
  s1->add_option("--check", check, "relation|htqm|infinitesimal")->default_val("relation");
  s1->add_option("--order", order);
  auto* ht = app.add_subcommand("htqm", "cube model closedness on points of a line");
  ht->add_option("--input", input)->required();
  ht->add_option("--points", points)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }
  g.ring = parse_ring(ring == "gf2" ? "GF2" : ring == "q" ? "Q" : ring);

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  int code = 0;
  nlohmann::json report;
  report["command"] = echo;
  try {
    if (*va) cmd_verify_algebra(o, algebra, nmax, g);
    if (*fc) cmd_flip_complex(o, surface, emit, g);
    if (*ss) cmd_state_sum(o, surface, algebra, chain, emit, g);
    if (*cc) cmd_check_closedness(o, surface, algebra, g);
    if (*dw) cmd_dw(o, group, genus);
    if (*bv) cmd_bv(o, k, check, order, algebra, g);
    if (*sp) cmd_sp(o, points, emit);
    if (*ah) cmd_ahat(o, points, algebra, false, g);
    if (*m2) cmd_ahat(o, points, algebra, true, g);
    if (*s1) cmd_sp1(o, input, check, order);
    if (*ht) cmd_htqm(o, input, points);
    bool any_fail = false, any_skip = false;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : o.checks) {
      any_fail = any_fail || c.status == "fail";
      any_skip = any_skip || c.status == "skipped";
      checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
      if (g.verbose) std::cerr << c.name << ": " << c.status << "\n";
    }
    report.update(o.body);
    report["checks"] = checks;
    report["status"] = any_fail ? "fail" : any_skip ? "skipped" : "pass";
    code = any_fail ? 1 : any_skip ? 2 : 0;
  } catch (const SchemaError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "schema"}, {"path", e.path}, {"message", e.what()}};
    code = 3;
  } catch (const CapExceeded& e) {
    report["status"] = "skipped";
    report["error"] = {{"kind", "cap"}, {"message", e.what()}};
    code = 2;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    code = 3;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  report["timing_ms"] = std::to_string(ms);
  const std::string text = report.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "cannot write " << g.out << "\n";
      return 3;
    }
    f << text;
  }
  return code;
}

}  // namespace pachner::cli
