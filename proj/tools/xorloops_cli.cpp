// Command-line front end: generation, invariants, verification suites,
// exports and SVG rendering.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "xorloops/dimer.hpp"
#include "xorloops/height.hpp"
#include "xorloops/homology.hpp"
#include "xorloops/io.hpp"
#include "xorloops/ising.hpp"
#include "xorloops/six_vertex.hpp"
#include "xorloops/verify.hpp"

using namespace xorloops;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kSizeGuard = 3;

struct Globals {
  std::string graph = "torus_square:2,2";
  std::string weights;
  std::string mode = "exact";
  std::uint64_t seed = 1;
  std::string out;
  std::string blocks;
  int fields = 1;
};

/// Writes to --out when given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Surface surface_of(const Globals& g) {
  auto emb = std::make_shared<const CellEmbedding>(resolve_graph(g.graph));
  const auto blocks = parse_blocks(g.blocks);
  return blocks.empty() ? whole_surface(emb) : remove_faces(emb, blocks);
}

Json chains_json(const std::vector<EdgeSet>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(chain_to_json(c));
  return a;
}

Json comparisons_json(const std::vector<Comparison>& cs, const char* mode) {
  Json a = Json::array();
  for (std::size_t k = 0; k < cs.size(); ++k)
    a.push_back({{"class", k}, {"lhs", cs[k].lhs}, {"rhs", cs[k].rhs}, {"equal", cs[k].equal}, {"mode", mode}});
  return a;
}

bool all_equal(const std::vector<Comparison>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Comparison& c) { return c.equal; });
}

// --- gen / homology ---------------------------------------------------------

int cmd_gen(const Globals& g) {
  Output out(g.out);
  if (g.graph.rfind("planar_patch:", 0) == 0) {
    const QuadGraph q = resolve_quad(g.graph);
    out.os() << Json{{"name", q.name()},           {"base_edges", q.base_edge_count()},
                     {"vertices", q.vertex_count()}, {"edges", q.edge_count()},
                     {"faces", q.face_count()},     {"stubs", q.stubs().size()}}
                    .dump(2)
             << '\n';
    return kPass;
  }
  out.os() << embedding_to_json(resolve_graph(g.graph)).dump(2) << '\n';
  return kPass;
}

int cmd_homology(const Globals& g) {
  const Surface s = surface_of(g);
  const HomologyBasis b = compute_basis(s);
  Json j{{"graph", s.graph->name()},
         {"genus", s.graph->genus()},
         {"boundary_components", s.boundary_components()},
         {"N", b.N},
         {"lambda", chains_json(b.lambda)},
         {"gamma", chains_json(b.gamma)}};
  bool ok = true;
  if (b.N <= 8) {
    const auto r = verify_orthogonality(b);
    j["orthogonality"] = {{"checked", r.checked}, {"violations", r.violations}};
    ok = r.violations == 0;
  }
  Output out(g.out);
  out.os() << j.dump(2) << '\n';
  return ok ? kPass : kFail;
}

// --- ising / sixv -------------------------------------------------------------

template <class S>
int cmd_ising(const Globals& g) {
  const HomologyBasis b = compute_basis(surface_of(g));
  const auto J = parse_weights<S>(g.weights, b.surface.graph->edge_count(), g.seed);
  const char* mode = ScalarTraits<S>::exact ? "exact" : "float";
  const bool spins = J.root.has_value();
  const auto c = expansion_checks(b, J, spins);
  Json j{{"N", b.N},
         {"low_temp", comparisons_json(c.low_temp, mode)},
         {"high_temp", comparisons_json(c.high_temp, mode)},
         {"duality_forward", comparisons_json(c.duality_forward, mode)},
         {"duality_inverse", comparisons_json(c.duality_inverse, mode)}};
  if (!spins) j["note"] = "spin sums skipped: exp(-J) is not representable for these weights";
  bool ok = all_equal(c.low_temp) && all_equal(c.high_temp) && all_equal(c.duality_forward) &&
            all_equal(c.duality_inverse);
  if (b.surface.closed()) j["z_dising"] = ScalarTraits<S>::str(z_double_ising(b, J));
  Output out(g.out);
  out.os() << j.dump(2) << '\n';
  return ok ? kPass : kFail;
}

template <class S>
int cmd_sixv(const Globals& g) {
  const CellEmbedding emb = resolve_graph(g.graph);
  const auto census = mapping_I_census(emb);
  const auto J = parse_weights<S>(g.weights, emb.edge_count(), g.seed);
  const auto sv = SixVertexWeights<S>::free_fermion(J);
  const S z6 = z_six_vertex(emb, sv);
  const S zp = z_six_vertex_pairs(admissible_pairs(emb), sv);
  const bool two_to_one = census.bad == 0 && census.configs == 2 * census.pairs;
  const Json j{{"configs", census.configs},
               {"admissible_pairs", census.pairs},
               {"two_to_one", two_to_one},
               {"z_6v", ScalarTraits<S>::str(z6)},
               {"z_pairs", ScalarTraits<S>::str(zp)},
               {"equal", ScalarTraits<S>::equal(z6, zp)},
               {"mode", ScalarTraits<S>::exact ? "exact" : "float"}};
  Output out(g.out);
  out.os() << j.dump(2) << '\n';
  return two_to_one && ScalarTraits<S>::equal(z6, zp) ? kPass : kFail;
}

// --- dimer --------------------------------------------------------------------

struct DimerContext {
  QuadGraph q;
  HomologyBasis basis;
  std::vector<EdgeSet> matchings;
};

DimerContext dimer_context(const Globals& g) {
  DimerContext c{resolve_quad(g.graph), {}, {}};
  if (!c.q.is_patch()) c.basis = compute_basis(whole_surface(c.q.base()));
  c.matchings = enumerate_matchings(c.q);
  return c;
}

template <class S>
int cmd_dimer(const Globals& g, const std::string& action) {
  using T = ScalarTraits<S>;
  DimerContext c = dimer_context(g);
  const auto J = parse_weights<S>(g.weights, c.q.base_edge_count(), g.seed);
  const auto w = DimerWeights<S>::from_coupling(c.q, J);
  Output out(g.out);
  if (action == "count") {
    Json per = Json::array();
    std::vector<long> n(std::size_t{1} << c.basis.N, 0);
    for (const auto& m : c.matchings) ++n[class_index(sector_of(c.q, c.basis, m))];
    out.os() << Json{{"matchings", c.matchings.size()}, {"per_sector", n}}.dump(2) << '\n';
    return kPass;
  }
  if (action == "sectors" || action == "kasteleyn") {
    const auto signs = kasteleyn_signs(c.q);
    if (action == "kasteleyn") {
      out.os() << kasteleyn_json(c.q, w, signs).dump(1) << '\n';
      return kPass;
    }
    const auto z = z_quadri_sectors(c.q, c.basis, c.matchings, w);
    const SignTable table = sign_table(c.q, c.basis, c.matchings, signs);
    const auto dets = kasteleyn_determinants(c.q, c.basis, w, signs);
    const auto rec = sector_from_determinants(table, dets);
    Json rows = Json::array();
    bool ok = table.constant;
    for (std::size_t a = 0; a < z.size(); ++a) {
      const bool eq = T::equal(z[a], rec[a]);
      ok = ok && eq;
      rows.push_back({{"sector", class_bits(c.basis.N, a).hex()},
                      {"enumerated", T::str(z[a])},
                      {"from_determinants", T::str(rec[a])},
                      {"det", T::str(dets[a])},
                      {"equal", eq}});
    }
    out.os() << Json{{"sign_constant_per_sector", table.constant}, {"sectors", rows}}.dump(2) << '\n';
    return ok ? kPass : kFail;
  }
  if (action == "distribution") {
    write_distribution_csv(out.os(), restricted_distribution(c.q, c.basis, c.matchings, w));
    return kPass;
  }
  if (action == "verify-law") {
    VerifyOptions o;
    o.graph = g.graph;
    o.weights = g.weights;
    o.seed = g.seed;
    o.fields = g.fields;
    o.mode = T::exact ? Mode::Exact : Mode::Float;
    bool ok = true;
    for (const auto& r : run_suite("dimer-law", o)) {
      out.os() << (r.pass ? "PASS " : "FAIL ") << r.check << "  " << r.identity << "  lhs=" << r.lhs
               << " rhs=" << r.rhs << '\n';
      ok = ok && r.pass;
    }
    return ok ? kPass : kFail;
  }
  throw CLI::ValidationError("action", "unknown dimer action '" + action + "'");
}

// --- height -------------------------------------------------------------------

EdgeSet pick_matching(const QuadGraph& q, long index, const std::string& edges) {
  if (!edges.empty()) {
    const EdgeSet m = chain_from_json(Json::parse(edges), static_cast<std::size_t>(q.edge_count()));
    if (!is_perfect_matching(q, m)) throw Error(ErrorCode::NotAMatching, "given edges are not a perfect matching");
    return m;
  }
  if (index < 0) return q.m0();
  const auto all = enumerate_matchings(q);
  if (index >= static_cast<long>(all.size()))
    throw Error(ErrorCode::OutOfRange, "matching index " + std::to_string(index) + " of " +
                                           std::to_string(all.size()));
  return all[static_cast<std::size_t>(index)];
}

HeightKind height_kind(const std::string& s) {
  if (s == "theta_pi") return HeightKind::ThetaPiFlow;
  if (s == "m0") return HeightKind::M0Flow;
  throw CLI::ValidationError("--flow", "expected theta_pi or m0");
}

int cmd_height(const Globals& g, long index, const std::string& edges, const std::string& flow) {
  const QuadGraph q = resolve_quad(g.graph);
  const EdgeSet m = pick_matching(q, index, edges);
  const HeightField h = height_field(q, m, height_kind(flow));
  const PolygonPair pp = poly(q, m);
  const EdgeSet l1 = level_lines(q, h, FaceKind::DualVertex), l2 = level_lines(q, h, FaceKind::PrimalVertex);
  Json hv = Json::array(), hd = Json::array();
  for (const auto& v : restrict_heights(q, h, FaceKind::PrimalVertex)) hv.push_back(v.get_str());
  for (const auto& v : restrict_heights(q, h, FaceKind::DualVertex)) hd.push_back(v.get_str());
  const bool ok = l1 == pp.primal && l2 == pp.dual;
  Output out(g.out);
  out.os() << Json{{"matching", chain_to_json(m)},
                   {"flow", to_string(h.kind)},
                   {"h_primal", hv},
                   {"h_dual", hd},
                   {"level_lines_dual", chain_to_json(l1)},
                   {"level_lines_primal", chain_to_json(l2)},
                   {"poly1", chain_to_json(pp.primal)},
                   {"poly2", chain_to_json(pp.dual)},
                   {"consistent", ok}}
                  .dump(2)
           << '\n';
  return ok ? kPass : kFail;
}

// --- verify / export ----------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite) {
  VerifyOptions o;
  o.graph = g.graph;
  o.blocks = parse_blocks(g.blocks);
  o.weights = g.weights;
  o.seed = g.seed;
  o.fields = g.fields;
  o.mode = g.mode == "float" ? Mode::Float : Mode::Exact;
  const auto reports = run_suite(suite, o);
  Output out(g.out);
  bool ok = true;
  for (const auto& r : reports) {
    out.os() << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.check << ' ' << r.identity
             << "  [" << r.mode << ", " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms]";
    if (!r.pass) out.os() << "  lhs=" << r.lhs << " rhs=" << r.rhs;
    out.os() << '\n';
    ok = ok && r.pass;
  }
  out.os() << (ok ? "all " : "some ") << "checks " << (ok ? "passed" : "FAILED") << " (" << reports.size()
           << " reports)\n";
  return ok ? kPass : kFail;
}

template <class S>
int cmd_export(const Globals& g, const std::string& what, long index, const std::string& edges) {
  Output out(g.out);
  if (what == "xor-dist") {
    const HomologyBasis b = compute_basis(surface_of(g));
    if (!b.surface.closed()) throw Error(ErrorCode::BadSpec, "xor-dist needs a closed surface");
    const auto J = parse_weights<S>(g.weights, b.surface.graph->edge_count(), g.seed);
    write_distribution_csv(out.os(), xor_distribution(b, J, XorRoute::Pairs));
    return kPass;
  }
  if (what == "dimer-dist") {
    DimerContext c = dimer_context(g);
    if (c.q.is_patch()) throw Error(ErrorCode::BadSpec, "dimer-dist needs a closed surface");
    const auto J = parse_weights<S>(g.weights, c.q.base_edge_count(), g.seed);
    write_distribution_csv(out.os(), restricted_distribution(c.q, c.basis, c.matchings,
                                                             DimerWeights<S>::from_coupling(c.q, J)));
    return kPass;
  }
  if (what == "heights") {
    const QuadGraph q = resolve_quad(g.graph);
    write_heights_csv(out.os(), q, height_field(q, pick_matching(q, index, edges), HeightKind::ThetaPiFlow));
    return kPass;
  }
  throw CLI::ValidationError("what", "expected xor-dist, dimer-dist or heights");
}

// --- render -------------------------------------------------------------------

struct Segment {
  std::array<double, 2> a, b;
  int edge;
};

class Svg {
 public:
  void line(const std::array<double, 2>& a, const std::array<double, 2>& b, const char* style) {
    grow(a);
    grow(b);
    std::ostringstream s;
    s << std::setprecision(6) << "<line x1=\"" << a[0] << "\" y1=\"" << -a[1] << "\" x2=\"" << b[0] << "\" y2=\""
      << -b[1] << "\" style=\"" << style << "\"/>\n";
    body_ += s.str();
  }
  void dot(const std::array<double, 2>& p) {
    grow(p);
    std::ostringstream s;
    s << std::setprecision(6) << "<circle cx=\"" << p[0] << "\" cy=\"" << -p[1] << "\" r=\"0.06\" fill=\"#333\"/>\n";
    body_ += s.str();
  }
  void write(std::ostream& os) const {
    const double pad = 0.5;
    os << std::setprecision(6) << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_[0] - pad << ' '
       << -hi_[1] - pad << ' ' << hi_[0] - lo_[0] + 2 * pad << ' ' << hi_[1] - lo_[1] + 2 * pad
       << "\" width=\"600\">\n<rect x=\"-1000\" y=\"-1000\" width=\"2000\" height=\"2000\" fill=\"white\"/>\n"
       << body_ << "</svg>\n";
  }

 private:
  void grow(const std::array<double, 2>& p) {
    for (int k = 0; k < 2; ++k) {
      lo_[k] = std::min(lo_[k], p[k]);
      hi_[k] = std::max(hi_[k], p[k]);
    }
  }
  std::string body_;
  std::array<double, 2> lo_{1e9, 1e9}, hi_{-1e9, -1e9};
};

constexpr const char* kPrimal = "stroke:#999;stroke-width:0.03";
constexpr const char* kDual = "stroke:#bbb;stroke-width:0.02;stroke-dasharray:0.08,0.06";
constexpr const char* kPrimalLoop = "stroke:#c0392b;stroke-width:0.09;stroke-linecap:round";
constexpr const char* kDualLoop = "stroke:#2471a3;stroke-width:0.07;stroke-dasharray:0.12,0.06;stroke-linecap:round";

/// Primal edges as drawn segments; dual edges cross them at the midpoint.
void draw(Svg& svg, const std::vector<Segment>& primal, const std::vector<Segment>& dual, const EdgeSet& P,
          const EdgeSet& D) {
  for (const auto& s : dual) svg.line(s.a, s.b, kDual);
  for (const auto& s : primal) svg.line(s.a, s.b, kPrimal);
  for (const auto& s : dual)
    if (D.test(static_cast<std::size_t>(s.edge))) svg.line(s.a, s.b, kDualLoop);
  for (const auto& s : primal)
    if (P.test(static_cast<std::size_t>(s.edge))) svg.line(s.a, s.b, kPrimalLoop);
}

void render_embedding(std::ostream& os, const CellEmbedding& emb, const EdgeSet& P, const EdgeSet& D) {
  if (!emb.layout()) throw Error(ErrorCode::NoCoordinates, "graph '" + emb.name() + "' has no drawing positions");
  const Layout& l = *emb.layout();
  std::vector<Segment> primal, dual;
  Svg svg;
  for (int e = 0; e < emb.edge_count(); ++e) {
    const int d = emb.edge_darts(e)[0];
    const auto p = l.vertex_xy[emb.vertex_of(d)];
    const auto v = l.dart_vector[d];
    const std::array<double, 2> q{p[0] + v[0], p[1] + v[1]}, mid{p[0] + v[0] / 2, p[1] + v[1] / 2};
    primal.push_back({p, q, e});
    dual.push_back({{mid[0] + v[1] / 2, mid[1] - v[0] / 2}, {mid[0] - v[1] / 2, mid[1] + v[0] / 2}, e});
  }
  draw(svg, primal, dual, P, D);
  for (const auto& p : l.vertex_xy) svg.dot(p);
  svg.write(os);
}

void render_patch(std::ostream& os, const QuadGraph& q, const EdgeSet& P, const EdgeSet& D) {
  const auto& xy = q.face_xy();
  if (xy.empty()) throw Error(ErrorCode::NoCoordinates, "quad graph has no drawing positions");
  std::vector<Segment> primal, dual;
  for (int e = 0; e < q.base_edge_count(); ++e) {
    primal.push_back({xy[q.primal_ends(e)[0]], xy[q.primal_ends(e)[1]], e});
    dual.push_back({xy[q.dual_ends(e)[0]], xy[q.dual_ends(e)[1]], e});
  }
  Svg svg;
  draw(svg, primal, dual, P, D);
  for (int v = 0; v < q.primal_vertex_count(); ++v) svg.dot(xy[q.face_id(FaceKind::PrimalVertex, v)]);
  svg.write(os);
}

EdgeSet sample_xor(const HomologyBasis& b, std::uint64_t seed, const std::string& weights) {
  const auto J = parse_weights<Rational>(weights, b.surface.graph->edge_count(), seed);
  const auto dist = xor_distribution(b, J, XorRoute::Pairs);
  // Inverse-CDF draw against a uniform rational with a large denominator.
  RationalSampler sampler(seed ^ 0x9e3779b97f4a7c15ULL);
  const Rational u(static_cast<long>(sampler.below(1000000)), 1000000);
  Rational acc = 0;
  for (const auto& [P, p] : dist) {
    acc += p;
    if (u < acc) return P;
  }
  return dist.rbegin()->first;
}

int cmd_render(const Globals& g, const std::string& primal, const std::string& dualc, long matching, bool sample) {
  Output out(g.out);
  if (g.graph.rfind("planar_patch:", 0) == 0) {
    const QuadGraph q = resolve_quad(g.graph);
    const std::size_t E = static_cast<std::size_t>(q.base_edge_count());
    EdgeSet P(E), D(E);
    if (matching >= 0) {
      const auto pp = poly(q, pick_matching(q, matching, ""));
      P = pp.primal, D = pp.dual;
    }
    if (!primal.empty()) P = chain_from_json(Json::parse(primal), E);
    if (!dualc.empty()) D = chain_from_json(Json::parse(dualc), E);
    render_patch(out.os(), q, P, D);
    return kPass;
  }
  const auto emb = std::make_shared<const CellEmbedding>(resolve_graph(g.graph));
  const std::size_t E = static_cast<std::size_t>(emb->edge_count());
  EdgeSet P(E), D(E);
  if (matching >= 0) {
    const QuadGraph q = quad_graph(emb);
    const auto pp = poly(q, pick_matching(q, matching, ""));
    P = pp.primal, D = pp.dual;
  }
  if (sample) P = sample_xor(compute_basis(whole_surface(emb)), g.seed, g.weights);
  if (!primal.empty()) P = chain_from_json(Json::parse(primal), E);
  if (!dualc.empty()) D = chain_from_json(Json::parse(dualc), E);
  render_embedding(out.os(), *emb, P, D);
  return kPass;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeGuard: return kSizeGuard;
    case ErrorCode::BadSpec:
    case ErrorCode::UnknownKind:
    case ErrorCode::OutOfRange:  // user-supplied weights, angles or chain indices
    case ErrorCode::Io: return kUsage;
    default: return kFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact double Ising, 6-vertex and quadri-tiling dimer computations on surface graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--graph", g.graph, "torus_square:m,n | torus_triangular:m,n | sphere_platonic:name | "
                                     "planar_patch:m,n | file:<embedding.json>")
      ->capture_default_str();
  app.add_option("--weights", g.weights, "x=p/q | x=[p/q,...] | seeded | critical (float mode)");
  app.add_option("--mode", g.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for generated coupling fields")->capture_default_str();
  app.add_option("--fields", g.fields, "number of seeded fields (seed, seed+1, ...)")->capture_default_str();
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--blocks", g.blocks, "removed face blocks, e.g. \"0|5,6\"");

  auto* gen = app.add_subcommand("gen", "print the embedding as JSON");
  auto* hom = app.add_subcommand("homology", "homology basis of the (relative) surface");
  auto* ising = app.add_subcommand("ising", "low/high temperature expansions and dualities");
  auto* sixv = app.add_subcommand("sixv", "6-vertex census and partition functions");

  auto* dimer = app.add_subcommand("dimer", "quadri-tiling dimers");
  std::string dimer_action = "count";
  dimer->add_option("action", dimer_action, "count | sectors | kasteleyn | distribution | verify-law")
      ->check(CLI::IsMember({"count", "sectors", "kasteleyn", "distribution", "verify-law"}));

  long matching = -1;
  std::string edges, flow = "theta_pi";
  auto* height = app.add_subcommand("height", "height function of one matching (default M0)");
  height->add_option("--matching", matching, "index in enumeration order");
  height->add_option("--edges", edges, "matching as a JSON array of quad edge indices");
  height->add_option("--flow", flow, "theta_pi | m0")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite = "all";
  verify->add_option("suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();

  auto* exp = app.add_subcommand("export", "write a distribution or height CSV");
  std::string what;
  exp->add_option("what", what, "xor-dist | dimer-dist | heights")
      ->required()
      ->check(CLI::IsMember({"xor-dist", "dimer-dist", "heights"}));
  exp->add_option("--matching", matching, "matching index for heights");
  exp->add_option("--edges", edges, "matching edges for heights");

  auto* render = app.add_subcommand("render", "draw a loop configuration as SVG");
  std::string primal, dualc;
  bool sample = false;
  render->add_option("--primal", primal, "primal chain as a JSON index array");
  render->add_option("--dual", dualc, "dual chain as a JSON index array");
  render->add_option("--matching", matching, "draw poly1/poly2 of this matching");
  render->add_flag("--sample", sample, "draw a seeded XOR sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  const bool exact = g.mode == "exact";
  try {
    if (*gen) return cmd_gen(g);
    if (*hom) return cmd_homology(g);
    if (*ising) return exact ? cmd_ising<Rational>(g) : cmd_ising<double>(g);
    if (*sixv) return exact ? cmd_sixv<Rational>(g) : cmd_sixv<double>(g);
    if (*dimer) return exact ? cmd_dimer<Rational>(g, dimer_action) : cmd_dimer<double>(g, dimer_action);
    if (*height) return cmd_height(g, matching, edges, flow);
    if (*verify) return cmd_verify(g, suite);
    if (*exp) return exact ? cmd_export<Rational>(g, what, matching, edges) : cmd_export<double>(g, what, matching, edges);
    if (*render) return cmd_render(g, primal, dualc, matching, sample);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON argument: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
