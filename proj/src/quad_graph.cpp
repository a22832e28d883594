#include "xorloops/quad_graph.hpp"

#include <map>
#include <sstream>

#include "xorloops/errors.hpp"

namespace xorloops {

const char* to_string(QuadEdgeKind k) {
  switch (k) {
    case QuadEdgeKind::AParallel: return "a-parallel";
    case QuadEdgeKind::BParallel: return "b-parallel";
    case QuadEdgeKind::External: return "external";
  }
  return "?";
}

const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::PrimalVertex: return "primal-vertex";
    case FaceKind::DualVertex: return "dual-vertex";
    case FaceKind::Edge: return "edge";
  }
  return "?";
}

int QuadGraph::face_id(FaceKind kind, int index) const {
  switch (kind) {
    case FaceKind::PrimalVertex: return index;
    case FaceKind::DualVertex: return primal_count_ + index;
    case FaceKind::Edge: return primal_count_ + dual_count_ + index;
  }
  return -1;
}

void QuadGraph::finish() {
  incident_.assign(static_cast<std::size_t>(vertex_count()), {});
  external_.assign(static_cast<std::size_t>(vertex_count()), -1);
  m0_ = EdgeSet(edges_.size());
  for (int i = 0; i < edge_count(); ++i) {
    const QuadEdge& q = edges_[i];
    incident_[q.white].push_back(i);
    incident_[q.black].push_back(i);
    if (q.kind == QuadEdgeKind::External) external_[q.white] = external_[q.black] = i;
    if (q.kind == QuadEdgeKind::BParallel) m0_.set(static_cast<std::size_t>(i));
  }
}

namespace {

// Internal edges of all decorations, shared by both constructions. `tail`,
// `left`, `right` give the primal vertex and dual faces of a base dart.
template <class Tail, class Left, class Right>
void add_decorations(int base_edges, std::vector<QuadEdge>& edges,
                     std::vector<std::array<int, 4>>& slots, std::vector<std::array<int, 4>>& deco,
                     Tail tail, Left left, Right right, int primal_count, int dual_count) {
  const auto dual_face = [&](int f) { return primal_count + f; };
  const auto edge_face = [&](int e) { return primal_count + dual_count + e; };
  for (int e = 0; e < base_edges; ++e) {
    const int d = 2 * e, dp = 2 * e + 1;
    std::array<int, 4> ids;
    int k = 0;
    for (int x : {d, dp}) {
      ids[k++] = static_cast<int>(edges.size());
      edges.push_back({2 * x, 2 * x + 1, QuadEdgeKind::BParallel, e, edge_face(e), tail(x)});
    }
    for (int x : {d, dp}) {
      ids[k++] = static_cast<int>(edges.size());
      edges.push_back({2 * x, 2 * (x ^ 1) + 1, QuadEdgeKind::AParallel, e, dual_face(left(x)),
                       edge_face(e)});
    }
    (void)right;
    deco.push_back(ids);
    slots.push_back({2 * d + 1, 2 * dp, 2 * dp + 1, 2 * d});
  }
}

}  // namespace

QuadGraph quad_graph(std::shared_ptr<const CellEmbedding> gp) {
  const CellEmbedding& g = *gp;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge_darts(e)[0] != 2 * e || g.edge_darts(e)[1] != 2 * e + 1)
      throw Error(ErrorCode::BadSpec, "quad graph expects darts 2e, 2e+1 on edge e");
  QuadGraph q;
  q.base_edge_count_ = g.edge_count();
  q.genus_ = g.genus();
  q.primal_count_ = g.vertex_count();
  q.dual_count_ = g.face_count();
  add_decorations(
      g.edge_count(), q.edges_, q.slots_, q.decoration_, [&](int x) { return g.vertex_of(x); },
      [&](int x) { return g.face_of(x); }, [&](int x) { return g.right_face(x); }, q.primal_count_,
      q.dual_count_);
  for (int x = 0; x < g.dart_count(); ++x)
    q.edges_.push_back({2 * x, 2 * g.sigma(x) + 1, QuadEdgeKind::External, -1, g.vertex_of(x),
                        q.primal_count_ + g.face_of(x)});
  for (int v = 0; v < g.vertex_count(); ++v) q.faces_.push_back({FaceKind::PrimalVertex, v, true});
  for (int f = 0; f < g.face_count(); ++f) q.faces_.push_back({FaceKind::DualVertex, f, true});
  for (int e = 0; e < g.edge_count(); ++e) {
    q.faces_.push_back({FaceKind::Edge, e, true});
    const int d = 2 * e;
    q.primal_ends_.push_back({g.vertex_of(d), g.head(d)});
    q.dual_ends_.push_back({q.primal_count_ + g.face_of(d), q.primal_count_ + g.right_face(d)});
  }
  q.base_ = gp;
  q.name_ = "quad(" + g.name() + ")";

  if (g.layout()) {
    const Layout& l = *g.layout();
    q.vertex_xy_.resize(static_cast<std::size_t>(q.vertex_count()));
    for (int x = 0; x < g.dart_count(); ++x) {
      const auto p = l.vertex_xy[g.vertex_of(x)];
      const auto v = l.dart_vector[x];
      const auto u = l.dart_vector[g.sigma(x)];
      const auto w = l.dart_vector[g.sigma_inv(x)];
      // Points a third along the dart, nudged toward the two neighbours.
      const double s = 0.3, t = 0.15;
      q.vertex_xy_[2 * x] = {p[0] + s * v[0] + t * u[0], p[1] + s * v[1] + t * u[1]};
      q.vertex_xy_[2 * x + 1] = {p[0] + s * v[0] + t * w[0], p[1] + s * v[1] + t * w[1]};
    }
  }
  q.finish();
  return q;
}

QuadGraph planar_patch(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadSpec, "planar_patch needs m,n >= 1");
  using Pt = std::array<int, 2>;
  // Index lattice points by parity class.
  std::map<Pt, int> primal, dualp;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= m; ++i) {
      auto& bucket = (i + j) % 2 == 0 ? primal : dualp;
      const int id = static_cast<int>(bucket.size());
      bucket[{i, j}] = id;
    }
  QuadGraph q;
  const int E = m * n;
  q.base_edge_count_ = E;
  q.primal_count_ = static_cast<int>(primal.size());
  q.dual_count_ = static_cast<int>(dualp.size());

  std::vector<Pt> tail(2 * E), left(2 * E), right(2 * E);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const int r = j * m + i;
      Pt p0, p1, qa, qb;
      if ((i + j) % 2 == 0) {
        p0 = {i, j}, p1 = {i + 1, j + 1}, qa = {i + 1, j}, qb = {i, j + 1};
      } else {
        p0 = {i + 1, j}, p1 = {i, j + 1}, qa = {i, j}, qb = {i + 1, j + 1};
      }
      const auto is_left = [](Pt a, Pt b, Pt c) {
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0;
      };
      const Pt l = is_left(p0, p1, qa) ? qa : qb;
      const Pt rr = l == qa ? qb : qa;
      tail[2 * r] = p0, left[2 * r] = l, right[2 * r] = rr;
      tail[2 * r + 1] = p1, left[2 * r + 1] = rr, right[2 * r + 1] = l;
    }
  add_decorations(
      E, q.edges_, q.slots_, q.decoration_, [&](int x) { return primal.at(tail[x]); },
      [&](int x) { return dualp.at(left[x]); }, [&](int x) { return dualp.at(right[x]); },
      q.primal_count_, q.dual_count_);

  // Pair decoration vertices across shared rhombus sides.
  std::map<std::pair<Pt, Pt>, std::vector<int>> sides;
  for (int x = 0; x < 2 * E; ++x) {
    sides[{tail[x], left[x]}].push_back(2 * x);
    sides[{tail[x], right[x]}].push_back(2 * x + 1);
  }
  for (const auto& [key, vs] : sides) {
    const int pv = primal.at(key.first), dv = q.primal_count_ + dualp.at(key.second);
    if (vs.size() == 2) {
      const int w = QuadGraph::is_white(vs[0]) ? vs[0] : vs[1];
      const int b = w == vs[0] ? vs[1] : vs[0];
      if (!QuadGraph::is_white(w) || QuadGraph::is_white(b))
        throw Error(ErrorCode::BadSpec, "patch side joins two vertices of one colour");
      q.edges_.push_back({w, b, QuadEdgeKind::External, -1, pv, dv});
    } else {
      q.stubs_.push_back({vs[0], pv, dv});
    }
  }

  const auto interior = [&](Pt p) { return p[0] > 0 && p[0] < m && p[1] > 0 && p[1] < n; };
  q.faces_.resize(primal.size() + dualp.size());
  q.face_xy_.resize(primal.size() + dualp.size() + E);
  for (const auto& [p, id] : primal) {
    q.faces_[id] = {FaceKind::PrimalVertex, id, interior(p)};
    q.face_xy_[id] = {double(p[0]), double(p[1])};
  }
  for (const auto& [p, id] : dualp) {
    q.faces_[q.primal_count_ + id] = {FaceKind::DualVertex, id, interior(p)};
    q.face_xy_[q.primal_count_ + id] = {double(p[0]), double(p[1])};
  }
  q.vertex_xy_.resize(static_cast<std::size_t>(4 * E));
  for (int e = 0; e < E; ++e) {
    q.faces_.push_back({FaceKind::Edge, e, true});
    const int d = 2 * e;
    q.primal_ends_.push_back({primal.at(tail[d]), primal.at(tail[d + 1])});
    q.dual_ends_.push_back(
        {q.primal_count_ + dualp.at(left[d]), q.primal_count_ + dualp.at(right[d])});
    const double cx = (e % m) + 0.5, cy = (e / m) + 0.5;
    q.face_xy_[primal.size() + dualp.size() + e] = {cx, cy};
    for (int x : {d, d + 1})
      for (int b : {0, 1}) {
        const Pt a = tail[x], c = b ? right[x] : left[x];
        const double mx = (a[0] + c[0]) / 2.0, my = (a[1] + c[1]) / 2.0;
        q.vertex_xy_[2 * x + b] = {mx + 0.3 * (cx - mx), my + 0.3 * (cy - my)};
      }
  }
  q.name_ = "planar_patch:" + std::to_string(m) + "," + std::to_string(n);
  q.finish();
  return q;
}

QuadGraph generate_quad(const std::string& spec) {
  if (spec.rfind("planar_patch:", 0) == 0) {
    int m = 0, n = 0;
    char comma = 0;
    std::istringstream is(spec.substr(13));
    if (!(is >> m >> comma >> n) || comma != ',' || !is.eof())
      throw Error(ErrorCode::BadSpec, "expected 'planar_patch:m,n', got '" + spec + "'");
    return planar_patch(m, n);
  }
  return quad_graph(std::make_shared<const CellEmbedding>(generate(spec)));
}

}  // namespace xorloops
