#include "xorloops/verify.hpp"

#include <chrono>
#include <sstream>

#include "xorloops/dimer.hpp"
#include "xorloops/height.hpp"
#include "xorloops/homology.hpp"
#include "xorloops/io.hpp"
#include "xorloops/ising.hpp"
#include "xorloops/six_vertex.hpp"

namespace xorloops {

namespace {

using Clock = std::chrono::steady_clock;

template <class S>
const char* mode_name() {
  return ScalarTraits<S>::exact ? "exact" : "float";
}

/// Collects reports of one suite and stamps each with the time since the
/// previous one.
class Recorder {
 public:
  Recorder(std::vector<VerifyReport>& out, std::string mode) : out_(out), mode_(std::move(mode)) {}

  void add(std::string check, std::string identity, std::string lhs, std::string rhs, bool pass) {
    const auto now = Clock::now();
    out_.push_back({std::move(check), std::move(identity), mode_, std::move(lhs), std::move(rhs), pass,
                    std::chrono::duration<double, std::milli>(now - last_).count()});
    last_ = now;
  }
  /// Summarizes a list: shows the first failing pair, or the first pair.
  void add(std::string check, std::string identity, const std::vector<Comparison>& cs) {
    const Comparison* shown = cs.empty() ? nullptr : &cs.front();
    for (const auto& c : cs)
      if (!c.equal) {
        shown = &c;
        break;
      }
    add(std::move(check), std::move(identity), shown ? shown->lhs : "", shown ? shown->rhs : "",
        shown == nullptr || shown->equal);
  }
  void count(std::string check, std::string identity, long bad, long total) {
    add(std::move(check), std::move(identity), std::to_string(total - bad) + " ok",
        std::to_string(total) + " checked", bad == 0);
  }

 private:
  std::vector<VerifyReport>& out_;
  std::string mode_;
  Clock::time_point last_ = Clock::now();
};

std::string tag(const std::string& suite, std::uint64_t seed) {
  return suite + "[seed=" + std::to_string(seed) + "]";
}

Surface surface_of(const VerifyOptions& o) {
  auto g = std::make_shared<const CellEmbedding>(resolve_graph(o.graph));
  return o.blocks.empty() ? whole_surface(g) : remove_faces(g, o.blocks);
}

int field_count(const VerifyOptions& o) { return o.weights.empty() ? std::max(1, o.fields) : 1; }

template <class S>
CouplingField<S> field(const VerifyOptions& o, int edges, int k) {
  return parse_weights<S>(o.weights, edges, o.seed + static_cast<std::uint64_t>(k));
}

template <class S>
void expansions(const std::string& suite, const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, mode_name<S>());
  const HomologyBasis basis = compute_basis(surface_of(o));
  const int E = basis.surface.graph->edge_count();
  for (int k = 0; k < field_count(o); ++k) {
    const auto J = field<S>(o, E, k);
    const auto c = expansion_checks(basis, J, suite != "duality");
    const std::string t = tag(suite, o.seed + static_cast<std::uint64_t>(k));
    if (suite == "lowtemp") rec.add(t, "Z_spin^eps = 2 prod e^J Z_LT^eps, every eps", c.low_temp);
    if (suite == "hightemp") rec.add(t, "Z_spin^eps = 2^|V*| prod cosh J sum (-1)^<eps,gamma> Z_HT", c.high_temp);
    if (suite == "duality") {
      rec.add(t, "Z_LT from Z_HT (forward duality)", c.duality_forward);
      rec.add(t, "Z_HT from Z_LT (inverted duality)", c.duality_inverse);
    }
  }
}

template <class S>
void mixed(const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, mode_name<S>());
  const Surface s = surface_of(o);
  if (!s.closed()) throw Error(ErrorCode::BadSpec, "the double Ising suite needs a closed surface");
  const HomologyBasis basis = compute_basis(s);
  const int E = s.graph->edge_count();
  const auto classes = cycles_by_class(basis);
  const auto dual_zero = dual_cycles_by_zero_class(basis);
  const std::uint64_t M = std::uint64_t{1} << basis.N;

  long bi_bad = 0, bi_total = 0;
  for (const EdgeSet& P : classes[0])
    for (std::uint64_t eps = 0; eps < M; ++eps) {
      const BiCount b = bi_count(basis, classes[eps], P, class_bits(basis.N, eps));
      ++bi_total;
      if (b.bad_tuples || b.wrong_multiplicity || b.realised_tuples != b.admissible_tuples) ++bi_bad;
    }
  rec.count("mixed", "bichromatic pairs realise each admissible tuple 2^(n_P-1) times", bi_bad, bi_total);

  for (int k = 0; k < field_count(o); ++k) {
    const auto J = field<S>(o, E, k);
    const std::string t = tag("mixed", o.seed + static_cast<std::uint64_t>(k));
    const auto zlt = z_low_temp_all(basis, J.x);
    const S C = double_constant(s, J);
    std::vector<Comparison> decomposition, cut, contour;
    S total = ScalarTraits<S>::from_int(0);
    std::vector<S> by_eps(M, ScalarTraits<S>::from_int(0));
    for (const EdgeSet& P : classes[0]) {
      S sum_eps = ScalarTraits<S>::from_int(0);
      for (std::uint64_t eps = 0; eps < M; ++eps) {
        const S w = w_mono(basis, J, P, class_bits(basis.N, eps));
        cut.push_back(compare<S>(w, w_mono_pairs(classes[eps], s, J, P)));
        by_eps[eps] += w;
        sum_eps += w;
      }
      contour.push_back(compare<S>(sum_eps, mixed_contour_weight(basis, J, P, dual_zero)));
      total += sum_eps;
    }
    for (std::uint64_t eps = 0; eps < M; ++eps) decomposition.push_back(compare<S>(by_eps[eps], S(C * zlt[eps] * zlt[eps])));
    rec.add(t, "W^eps[mono=P] cut-piece formula = direct pair sum, every P and eps", cut);
    rec.add(t, "sum_P W^eps[mono=P] = (Z_spin^eps)^2, every eps", decomposition);
    rec.add(t, "sum_eps W^eps[mono=P] = C_I prod a(e) sum over disjoint dual cycles, every P", contour);
    rec.add(t, "sum_P sum_eps W^eps = Z_dising", {compare<S>(total, z_double_ising(basis, J))});
  }
}

template <class S>
void sixv(const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, mode_name<S>());
  const auto g = std::make_shared<const CellEmbedding>(resolve_graph(o.graph));
  const MappingICensus census = mapping_I_census(*g);
  rec.add("sixv", "Mapping I is exactly 2-to-1 onto admissible pairs",
          std::to_string(census.configs) + " configs", std::to_string(census.pairs) + " pairs",
          census.bad == 0 && census.configs == 2 * census.pairs && census.fibers_of_two == census.pairs);

  const QuadGraph q = quad_graph(g);
  const auto matchings = enumerate_matchings(q);
  long image_bad = 0;
  for (const EdgeSet& m : matchings) {
    const EdgeSet cfg = mapping_II(q, m);
    if (!is_valid_six_vertex(*g, cfg) || !(mapping_I(*g, cfg) == poly(q, m))) ++image_bad;
  }
  rec.count("sixv", "Mapping II lands in valid 6V configs compatible with Mapping I", image_bad,
            static_cast<long>(matchings.size()));

  const auto pairs = admissible_pairs(*g);
  for (int k = 0; k < field_count(o); ++k) {
    const auto J = field<S>(o, g->edge_count(), k);
    const std::string t = tag("sixv", o.seed + static_cast<std::uint64_t>(k));
    const auto sv = SixVertexWeights<S>::free_fermion(J);
    const S z6 = z_six_vertex(*g, sv);
    rec.add(t, "Z_6V by configurations = 2 sum over admissible pairs", {compare<S>(z6, z_six_vertex_pairs(pairs, sv))});
    const auto w = DimerWeights<S>::from_coupling(q, J);
    const long bad = mapping_II_weight_mismatches(q, matchings, w, sv);
    rec.count(t, "Mapping II preserves weight when a^2+b^2=1", bad, static_cast<long>(matchings.size()));
    S zq = ScalarTraits<S>::from_int(0);
    for (const EdgeSet& m : matchings) zq += matching_weight(m, w);
    rec.add(t, "Z_quadri = Z_6V", {compare<S>(zq, z6)});

    auto broken = sv;
    for (auto& b : broken.B) b = S(b / 2);
    const long caught = mapping_II_weight_mismatches(q, matchings, DimerWeights<S>::from_ab(q, broken.A, broken.B), broken);
    rec.add(t, "broken free-fermion weights are detected", std::to_string(caught) + " mismatching configs",
            "> 0", caught > 0);
  }
}

template <class S>
S total_variation(const std::map<EdgeSet, S>& a, const std::map<EdgeSet, S>& b) {
  std::map<EdgeSet, S> diff = a;
  for (const auto& [k, v] : b) {
    auto [it, fresh] = diff.try_emplace(k, ScalarTraits<S>::from_int(0));
    it->second -= v;
  }
  S tv = ScalarTraits<S>::from_int(0);
  for (const auto& [k, v] : diff) tv += v < 0 ? S(-v) : v;
  return S(tv / 2);
}

template <class S>
void dimer_law(const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, mode_name<S>());
  const Surface s = surface_of(o);
  if (!s.closed()) throw Error(ErrorCode::BadSpec, "the dimer law suite needs a closed surface");
  const HomologyBasis basis = compute_basis(s);
  const QuadGraph q = quad_graph(s.graph);
  const auto matchings = enumerate_matchings(q);
  const int E = s.graph->edge_count();
  for (int k = 0; k < field_count(o); ++k) {
    const auto J = field<S>(o, E, k);
    const std::string t = tag("dimer-law", o.seed + static_cast<std::uint64_t>(k));
    const auto w = DimerWeights<S>::from_coupling(q, J);
    const auto xor_pairs = xor_distribution(basis, J, XorRoute::Pairs);
    const auto xor_mixed = xor_distribution(basis, J, XorRoute::MixedContour);
    const auto dimer = restricted_distribution(q, basis, matchings, w);
    const S tv = total_variation(xor_pairs, dimer);
    rec.add(t, "TV(P_dising[XOR], P0_quadri[poly1]) = 0", ScalarTraits<S>::str(tv), "0",
            ScalarTraits<S>::exact ? ScalarTraits<S>::is_zero(tv) : ScalarTraits<S>::to_double(tv) <= 1e-9);
    const S tv2 = total_variation(xor_pairs, xor_mixed);
    rec.add(t, "XOR law by pair sums = XOR law by mixed contours", ScalarTraits<S>::str(tv2), "0",
            ScalarTraits<S>::exact ? ScalarTraits<S>::is_zero(tv2) : ScalarTraits<S>::to_double(tv2) <= 1e-9);
    S c = pow2<S>(s.kept_face_count() + 2 * s.graph->genus());
    s.edges.for_each([&](int e) { c *= J.cosh_2j(e); });
    const S z0 = z_quadri_sectors(q, basis, matchings, w)[0];
    rec.add(t, "Z_dising = 2^(|V*|+2g) prod cosh 2J Z0_quadri", {compare<S>(z_double_ising(basis, J), S(c * z0))});
  }
}

template <class S>
void kasteleyn(const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, mode_name<S>());
  const QuadGraph q = resolve_quad(o.graph);
  HomologyBasis basis;
  if (!q.is_patch()) basis = compute_basis(whole_surface(q.base()));
  const auto matchings = enumerate_matchings(q);
  const auto signs = kasteleyn_signs(q);
  rec.count("kasteleyn", "face sign condition on every complete face",
            static_cast<long>(kasteleyn_face_violations(q, signs).size()), q.face_count());

  const SignTable table = sign_table(q, basis, matchings, signs);
  rec.add("kasteleyn", "det K^(eps) term sign is constant on each sector",
          std::to_string(table.audited) + " terms", "constant", table.constant);
  long char_bad = 0;
  for (std::size_t a = 0; a < table.s.size(); ++a)
    for (std::size_t e = 0; e < table.s.size(); ++e)
      if (table.s[a][e] != table.s[a][0] * (std::popcount(a & e) & 1 ? -1 : 1)) ++char_bad;
  rec.count("kasteleyn", "s(alpha,eps) = s(alpha,0) (-1)^(alpha.eps)", char_bad,
            static_cast<long>(table.s.size() * table.s.size()));

  long lemma_bad = 0;
  for (const EdgeSet& m : matchings) {
    const EdgeSet p1 = poly(q, m).primal;
    if (!(p1 == poly1_by_parity(q, m))) ++lemma_bad;
    else if (!q.is_patch() && !(sector_of(q, basis, m) == homology_class({Side::Primal, p1}, basis))) ++lemma_bad;
  }
  rec.count("kasteleyn", "sector of M0 u m = class of poly1(m), every matching", lemma_bad,
            static_cast<long>(matchings.size()));

  for (int k = 0; k < field_count(o); ++k) {
    const auto J = field<S>(o, q.base_edge_count(), k);
    const std::string t = tag("kasteleyn", o.seed + static_cast<std::uint64_t>(k));
    const auto w = DimerWeights<S>::from_coupling(q, J);
    const auto z = z_quadri_sectors(q, basis, matchings, w);
    const auto dets = kasteleyn_determinants(q, basis, w, signs);
    const auto recovered = sector_from_determinants(table, dets);
    std::vector<Comparison> cs;
    for (std::size_t a = 0; a < z.size(); ++a) cs.push_back(compare<S>(recovered[a], z[a]));
    rec.add(t, "Z^(alpha) from Kasteleyn determinants = enumerated Z^(alpha)", cs);
  }
}

void height(const VerifyOptions& o, std::vector<VerifyReport>& out) {
  Recorder rec(out, "exact");
  const QuadGraph q = resolve_quad(o.graph);
  const auto matchings = enumerate_matchings(q);
  const long n = static_cast<long>(matchings.size());
  const auto h00 = height_field(q, q.m0(), HeightKind::M0Flow);
  bool flat = true;
  for (const Rational& v : h00.values) flat = flat && sgn(v) == 0;
  rec.add("height", "h(M0) under the M0 flow vanishes", flat ? "0" : "nonzero", "0", flat);

  long values_bad = 0, incr_bad = 0, dual_lines_bad = 0, primal_lines_bad = 0, diagonal_bad = 0, gauge_bad = 0;
  const Rational one(1), two(2);
  for (const EdgeSet& m : matchings) {
    const auto h = height_field(q, m, HeightKind::ThetaPiFlow);
    const auto h0 = height_field(q, m, HeightKind::M0Flow);
    const auto hv = restrict_heights(q, h, FaceKind::PrimalVertex);
    const auto hd = restrict_heights(q, h, FaceKind::DualVertex);
    bool ok = true;
    for (const Rational& v : hv) ok = ok && v.get_den() == 1;
    for (const Rational& v : hd) ok = ok && v.get_den() == 2;
    values_bad += !ok;

    ok = true;
    for (int e = 0; e < q.base_edge_count(); ++e) {
      const Rational d = h.values[q.primal_ends(e)[1]] - h.values[q.primal_ends(e)[0]];
      ok = ok && (d == 0 || d == one || d == -one);
    }
    incr_bad += !ok;

    const PolygonPair pp = poly(q, m);
    const EdgeSet l1 = level_lines(q, h, FaceKind::DualVertex);
    const EdgeSet l2 = level_lines(q, h, FaceKind::PrimalVertex);
    dual_lines_bad += !(l1 == pp.primal);
    primal_lines_bad += !(l2 == pp.dual);
    diagonal_bad += l1.intersects(l2);

    ok = true;
    for (FaceKind side : {FaceKind::PrimalVertex, FaceKind::DualVertex}) {
      const auto a = restrict_heights(q, h, side), b = restrict_heights(q, h0, side);
      for (std::size_t i = 1; i < a.size(); ++i) ok = ok && a[i] - b[i] == a[0] - b[0];
    }
    gauge_bad += !ok;
  }
  rec.count("height", "h_V integer and h_V* half-integer under the theta/pi flow", values_bad, n);
  rec.count("height", "h_V increments across each rhombus lie in {-1,0,1}", incr_bad, n);
  rec.count("height", "level lines of h_V* = poly1(m)", dual_lines_bad, n);
  rec.count("height", "level lines of h_V = poly2(m)", primal_lines_bad, n);
  rec.count("height", "no rhombus has both diagonals jumping", diagonal_bad, n);
  rec.count("height", "theta/pi and M0 flows differ by a constant on each side", gauge_bad, n);
}

template <class S>
void dispatch(const std::string& suite, const VerifyOptions& o, std::vector<VerifyReport>& out) {
  if (suite == "lowtemp" || suite == "hightemp" || suite == "duality") expansions<S>(suite, o, out);
  else if (suite == "mixed") mixed<S>(o, out);
  else if (suite == "sixv") sixv<S>(o, out);
  else if (suite == "dimer-law") dimer_law<S>(o, out);
  else if (suite == "kasteleyn") kasteleyn<S>(o, out);
  else if (suite == "height") height(o, out);
  else throw Error(ErrorCode::BadSpec, "unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lowtemp", "hightemp", "duality", "mixed", "sixv",
                                              "dimer-law", "kasteleyn", "height", "all"};
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& suite, const VerifyOptions& o) {
  std::vector<VerifyReport> out;
  std::vector<std::string> suites{suite};
  if (suite == "all") {
    if (o.graph.rfind("planar_patch:", 0) == 0) suites = {"kasteleyn", "height"};
    else if (!o.blocks.empty()) suites = {"lowtemp", "hightemp", "duality"};
    else suites = {"lowtemp", "hightemp", "duality", "mixed", "sixv", "dimer-law", "kasteleyn"};
  }
  for (const auto& s : suites) {
    if (o.mode == Mode::Exact) dispatch<Rational>(s, o, out);
    else dispatch<double>(s, o, out);
  }
  return out;
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  if (text.empty()) return blocks;
  std::istringstream is(text);
  std::string block;
  while (std::getline(is, block, '|')) {
    std::vector<int> faces;
    std::istringstream bs(block);
    std::string tok;
    while (std::getline(bs, tok, ',')) {
      try {
        std::size_t used = 0;
        faces.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::BadSpec, "bad face index '" + tok + "' in blocks");
      }
    }
    if (faces.empty()) throw Error(ErrorCode::BadSpec, "empty face block");
    blocks.push_back(std::move(faces));
  }
  return blocks;
}

}  // namespace xorloops
