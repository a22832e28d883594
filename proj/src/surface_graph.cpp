#include "xorloops/surface_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "xorloops/errors.hpp"

namespace xorloops {

namespace {

std::vector<std::vector<int>> orbits(const std::vector<int>& perm, std::vector<int>& label) {
  label.assign(perm.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orbit;
    for (int d = static_cast<int>(s); label[d] < 0; d = perm[d]) {
      label[d] = static_cast<int>(out.size());
      orbit.push_back(d);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

void check_permutation(const std::vector<int>& p, const char* what) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || hit[v])
      throw Error(ErrorCode::NotAPermutation, std::string(what) + " is not a permutation of the darts");
    hit[v] = 1;
  }
}

}  // namespace

CellEmbedding build_embedding(std::vector<int> alpha, std::vector<int> sigma) {
  const std::size_t n = alpha.size();
  if (n == 0) throw Error(ErrorCode::BadSpec, "embedding has no darts");
  if (sigma.size() != n) throw Error(ErrorCode::NotAPermutation, "alpha and sigma sizes differ");
  for (std::size_t d = 0; d < n; ++d) {
    const int a = alpha[d];
    if (a < 0 || static_cast<std::size_t>(a) >= n || a == static_cast<int>(d) ||
        alpha[a] != static_cast<int>(d))
      throw Error(ErrorCode::NonInvolution, "alpha is not a fixed-point-free involution at dart " +
                                                std::to_string(d));
  }
  check_permutation(sigma, "sigma");

  CellEmbedding g;
  g.alpha_ = std::move(alpha);
  g.sigma_ = std::move(sigma);
  g.sigma_inv_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) g.sigma_inv_[g.sigma_[d]] = static_cast<int>(d);

  // Connectivity of the group generated by alpha and sigma.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int nb : {g.alpha_[d], g.sigma_[d], g.sigma_inv_[d]}) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "rotation system is not connected");

  g.vertex_darts_ = orbits(g.sigma_, g.vertex_of_);
  std::vector<int> phi(n);
  for (std::size_t d = 0; d < n; ++d) phi[d] = g.sigma_inv_[g.alpha_[d]];
  g.face_darts_ = orbits(phi, g.face_of_);
  g.edge_of_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (g.edge_of_[d] >= 0) continue;
    const int e = static_cast<int>(g.edge_darts_.size());
    g.edge_of_[d] = g.edge_of_[g.alpha_[d]] = e;
    g.edge_darts_.push_back({static_cast<int>(d), g.alpha_[d]});
  }
  const int chi = g.vertex_count() - g.edge_count() + g.face_count();
  if ((2 - chi) % 2 != 0) throw Error(ErrorCode::OddEulerDefect, "2 - V + E - F is odd");
  g.genus_ = (2 - chi) / 2;
  return g;
}

EdgeSet CellEmbedding::face_boundary(int f) const {
  EdgeSet s(static_cast<std::size_t>(edge_count()));
  for (int d : face_darts_[f]) s.flip(static_cast<std::size_t>(edge_of_[d]));
  return s;
}

EdgeSet CellEmbedding::vertex_star(int v) const {
  EdgeSet s(static_cast<std::size_t>(edge_count()));
  for (int d : vertex_darts_[v]) s.flip(static_cast<std::size_t>(edge_of_[d]));
  return s;
}

CellEmbedding dual(const CellEmbedding& g) {
  std::vector<int> sigma(static_cast<std::size_t>(g.dart_count()));
  for (int d = 0; d < g.dart_count(); ++d) sigma[d] = g.phi(d);
  CellEmbedding h = build_embedding(g.alpha(), sigma);
  h.set_name("dual(" + g.name() + ")");
  if (g.layout()) {
    // Dual vertices at face barycenters of the unwrapped face polygons.
    Layout l;
    for (int f = 0; f < g.face_count(); ++f) {
      const auto& ds = g.face_darts(f);
      const int v0 = g.vertex_of(ds[0]);
      std::array<double, 2> p = g.layout()->vertex_xy[v0], acc{0, 0};
      for (int d : ds) {
        acc[0] += p[0];
        acc[1] += p[1];
        p[0] += g.layout()->dart_vector[d][0];
        p[1] += g.layout()->dart_vector[d][1];
      }
      l.vertex_xy.push_back({acc[0] / ds.size(), acc[1] / ds.size()});
    }
    // A dual dart crosses its primal dart from the right face to the left face.
    l.dart_vector.resize(g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) {
      const auto& v = g.layout()->dart_vector[d];
      l.dart_vector[d] = {-v[1], v[0]};
    }
    h.set_layout(std::move(l), g.period());
  }
  return h;
}

CellEmbedding medial(const CellEmbedding& g) {
  const int n = g.dart_count();
  std::vector<int> alpha(2 * n), sigma(2 * n);
  for (int c = 0; c < n; ++c) {
    alpha[2 * c] = 2 * c + 1;
    alpha[2 * c + 1] = 2 * c;
  }
  const auto after = [](int x) { return 2 * x; };
  const auto before = [&](int x) { return 2 * g.sigma_inv(x) + 1; };
  for (int e = 0; e < g.edge_count(); ++e) {
    const int d = g.edge_darts(e)[0], dp = g.edge_darts(e)[1];
    sigma[before(d)] = after(dp);
    sigma[after(dp)] = before(dp);
    sigma[before(dp)] = after(d);
    sigma[after(d)] = before(d);
  }
  CellEmbedding m = build_embedding(std::move(alpha), std::move(sigma));
  m.set_name("medial(" + g.name() + ")");
  return m;
}

std::optional<std::vector<int>> find_isomorphism(const CellEmbedding& a, const CellEmbedding& b) {
  const int n = a.dart_count();
  if (n != b.dart_count() || a.vertex_count() != b.vertex_count() ||
      a.face_count() != b.face_count())
    return std::nullopt;
  for (int t = 0; t < n; ++t) {
    std::vector<int> map(n, -1), inv(n, -1);
    std::vector<int> stack{0};
    map[0] = t;
    inv[t] = 0;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      const std::array<std::pair<int, int>, 2> steps{
          std::pair{a.alpha(d), b.alpha(map[d])}, std::pair{a.sigma(d), b.sigma(map[d])}};
      for (auto [x, y] : steps) {
        if (map[x] < 0 && inv[y] < 0) {
          map[x] = y;
          inv[y] = x;
          stack.push_back(x);
        } else if (map[x] != y) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return map;
  }
  return std::nullopt;
}

CellEmbedding embedding_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> edge_index;
  for (const auto& f : faces)
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int u = f[k], w = f[(k + 1) % f.size()];
      edge_index[{std::min(u, w), std::max(u, w)}] = 0;
    }
  int e = 0;
  for (auto& [key, idx] : edge_index) idx = e++;
  const auto dart = [&](int u, int w) {
    const int idx = edge_index.at({std::min(u, w), std::max(u, w)});
    return 2 * idx + (u < w ? 0 : 1);
  };
  std::vector<int> alpha(2 * e), sigma(2 * e, -1);
  for (int i = 0; i < 2 * e; ++i) alpha[i] = i ^ 1;
  for (const auto& f : faces)
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int u = f[k], v = f[(k + 1) % f.size()], w = f[(k + 2) % f.size()];
      const int from = dart(v, w);
      if (sigma[from] >= 0) throw Error(ErrorCode::NotAPermutation, "face list is not a surface");
      sigma[from] = dart(v, u);
    }
  (void)vertex_count;
  return build_embedding(std::move(alpha), std::move(sigma));
}

CellEmbedding torus_square(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadSpec, "torus_square needs m,n >= 1");
  const int V = m * n;
  std::vector<int> alpha(4 * V), sigma(4 * V);
  for (int i = 0; i < 4 * V; ++i) alpha[i] = i ^ 1;
  const auto id = [&](int i, int j) { return ((j % n + n) % n) * m + ((i % m + m) % m); };
  Layout layout;
  layout.dart_vector.resize(4 * V);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const int v = id(i, j);
      const int east = 4 * v, north = 4 * v + 2;
      const int west = 4 * id(i - 1, j) + 1, south = 4 * id(i, j - 1) + 3;
      sigma[east] = north;
      sigma[north] = west;
      sigma[west] = south;
      sigma[south] = east;
      layout.vertex_xy.push_back({double(i), double(j)});
      layout.dart_vector[east] = {1, 0};
      layout.dart_vector[east + 1] = {-1, 0};
      layout.dart_vector[north] = {0, 1};
      layout.dart_vector[north + 1] = {0, -1};
    }
  CellEmbedding g = build_embedding(std::move(alpha), std::move(sigma));
  g.set_name("torus_square:" + std::to_string(m) + "," + std::to_string(n));
  g.set_layout(std::move(layout), std::array<double, 2>{double(m), double(n)});
  return g;
}

CellEmbedding torus_triangular(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadSpec, "torus_triangular needs m,n >= 1");
  const int V = m * n;
  const int steps[3][2] = {{1, 0}, {0, 1}, {-1, 1}};
  std::vector<int> alpha(6 * V), sigma(6 * V);
  for (int i = 0; i < 6 * V; ++i) alpha[i] = i ^ 1;
  const auto id = [&](int i, int j) { return ((j % n + n) % n) * m + ((i % m + m) % m); };
  const double h = std::sqrt(3.0) / 2;
  const auto plane = [&](double i, double j) { return std::array<double, 2>{i + j / 2, j * h}; };
  Layout layout;
  layout.dart_vector.resize(6 * V);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const int v = id(i, j);
      std::array<int, 6> ring;
      for (int k = 0; k < 3; ++k) {
        ring[k] = 2 * (3 * v + k);
        const int src = id(i - steps[k][0], j - steps[k][1]);
        ring[3 + k] = 2 * (3 * src + k) + 1;
        layout.dart_vector[ring[k]] = plane(steps[k][0], steps[k][1]);
        layout.dart_vector[ring[k] + 1] = plane(-steps[k][0], -steps[k][1]);
      }
      for (int k = 0; k < 6; ++k) sigma[ring[k]] = ring[(k + 1) % 6];
      layout.vertex_xy.push_back(plane(i, j));
    }
  CellEmbedding g = build_embedding(std::move(alpha), std::move(sigma));
  g.set_name("torus_triangular:" + std::to_string(m) + "," + std::to_string(n));
  g.set_layout(std::move(layout));
  return g;
}

namespace {

using Vec3 = std::array<double, 3>;

// Triangulated convex polyhedron from vertex coordinates: faces are the
// triangles of shortest edges, oriented outward.
CellEmbedding triangulated_hull(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  const auto dist2 = [&](int a, int b) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (pts[a][k] - pts[b][k]) * (pts[a][k] - pts[b][k]);
    return s;
  };
  double best = 1e300;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) best = std::min(best, dist2(a, b));
  const auto adjacent = [&](int a, int b) { return std::abs(dist2(a, b) - best) < 1e-9 * best; };
  std::vector<std::vector<int>> faces;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!adjacent(a, b) || !adjacent(b, c) || !adjacent(a, c)) continue;
        Vec3 u, w;
        for (int k = 0; k < 3; ++k) {
          u[k] = pts[b][k] - pts[a][k];
          w[k] = pts[c][k] - pts[a][k];
        }
        const Vec3 normal{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                          u[0] * w[1] - u[1] * w[0]};
        const double out = normal[0] * pts[a][0] + normal[1] * pts[a][1] + normal[2] * pts[a][2];
        faces.push_back(out > 0 ? std::vector<int>{a, b, c} : std::vector<int>{a, c, b});
      }
  CellEmbedding g = embedding_from_faces(n, faces);
  Layout layout;
  for (const auto& p : pts) layout.vertex_xy.push_back({p[0] + 0.35 * p[2], p[1] + 0.2 * p[2]});
  layout.dart_vector.resize(g.dart_count());
  for (int d = 0; d < g.dart_count(); ++d) {
    const auto& a = layout.vertex_xy[g.vertex_of(d)];
    const auto& b = layout.vertex_xy[g.head(d)];
    layout.dart_vector[d] = {b[0] - a[0], b[1] - a[1]};
  }
  g.set_layout(std::move(layout));
  return g;
}

}  // namespace

CellEmbedding sphere_platonic(const std::string& name) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CellEmbedding g;
  if (name == "tetrahedron") {
    g = triangulated_hull({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  } else if (name == "octahedron" || name == "cube") {
    g = triangulated_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    if (name == "cube") g = dual(g);
  } else if (name == "icosahedron" || name == "dodecahedron") {
    std::vector<Vec3> pts;
    for (double s : {-1.0, 1.0})
      for (double t : {-1.0, 1.0}) {
        pts.push_back({0, s, t * phi});
        pts.push_back({s, t * phi, 0});
        pts.push_back({t * phi, 0, s});
      }
    g = triangulated_hull(pts);
    if (name == "dodecahedron") g = dual(g);
  } else {
    throw Error(ErrorCode::UnknownKind, "unknown platonic solid '" + name + "'");
  }
  g.set_name("sphere_platonic:" + name);
  return g;
}

// --- Surfaces --------------------------------------------------------------

namespace {

Surface finish_surface(std::shared_ptr<const CellEmbedding> g, std::vector<char> kept) {
  Surface s;
  s.edges = EdgeSet(static_cast<std::size_t>(g->edge_count()));
  for (int e = 0; e < g->edge_count(); ++e) {
    const int d = g->edge_darts(e)[0];
    if (kept[g->face_of(d)] && kept[g->right_face(d)]) s.edges.set(static_cast<std::size_t>(e));
  }
  s.interior_vertex.assign(static_cast<std::size_t>(g->vertex_count()), 1);
  for (int d = 0; d < g->dart_count(); ++d)
    if (!s.edges.test(static_cast<std::size_t>(g->edge_of(d)))) s.interior_vertex[g->vertex_of(d)] = 0;
  s.kept_face = std::move(kept);
  s.graph = std::move(g);
  return s;
}

}  // namespace

int Surface::kept_face_count() const {
  return static_cast<int>(std::count(kept_face.begin(), kept_face.end(), 1));
}

int Surface::boundary_components() const {
  const CellEmbedding& g = *graph;
  const int n = g.dart_count();
  const auto boundary = [&](int d) { return kept_face[g.face_of(d)] && !kept_face[g.right_face(d)]; };
  std::vector<char> seen(n, 0);
  int circles = 0;
  for (int s = 0; s < n; ++s) {
    if (!boundary(s) || seen[s]) continue;
    ++circles;
    for (int d = s; !seen[d];) {
      seen[d] = 1;
      int next = g.sigma_inv(g.alpha(d));
      while (edges.test(static_cast<std::size_t>(g.edge_of(next)))) next = g.sigma_inv(next);
      d = next;
    }
  }
  return circles;
}

std::vector<EdgeSet> Surface::face_rows() const {
  std::vector<EdgeSet> rows;
  for (int f = 0; f < graph->face_count(); ++f)
    if (kept_face[f]) rows.push_back(graph->face_boundary(f) & edges);
  return rows;
}

std::vector<EdgeSet> Surface::star_rows() const {
  std::vector<EdgeSet> rows;
  for (int v = 0; v < graph->vertex_count(); ++v)
    if (interior_vertex[v]) rows.push_back(graph->vertex_star(v));
  return rows;
}

Surface whole_surface(std::shared_ptr<const CellEmbedding> g) {
  std::vector<char> kept(static_cast<std::size_t>(g->face_count()), 1);
  return finish_surface(std::move(g), std::move(kept));
}

Surface remove_faces(std::shared_ptr<const CellEmbedding> g, const std::vector<std::vector<int>>& blocks) {
  const CellEmbedding& G = *g;
  std::vector<int> owner_face(G.face_count(), -1), owner_vertex(G.vertex_count(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.empty()) throw Error(ErrorCode::NotADisc, "empty block");
    std::vector<char> in(G.face_count(), 0), vert(G.vertex_count(), 0);
    std::vector<char> edge(G.edge_count(), 0);
    for (int f : block) {
      if (f < 0 || f >= G.face_count())
        throw Error(ErrorCode::BadSpec, "face " + std::to_string(f) + " out of range");
      if (owner_face[f] >= 0 || in[f])
        throw Error(ErrorCode::OverlappingBlocks, "face " + std::to_string(f) + " used twice");
      in[f] = 1;
    }
    for (int f : block)
      for (int d : G.face_darts(f)) {
        vert[G.vertex_of(d)] = 1;
        edge[G.edge_of(d)] = 1;
      }
    for (int v = 0; v < G.vertex_count(); ++v) {
      if (!vert[v]) continue;
      if (owner_vertex[v] >= 0)
        throw Error(ErrorCode::OverlappingBlocks,
                    "blocks " + std::to_string(owner_vertex[v]) + " and " + std::to_string(b) +
                        " share vertex " + std::to_string(v));
      owner_vertex[v] = static_cast<int>(b);
    }
    // Face-connected through shared edges.
    std::vector<char> reached(G.face_count(), 0);
    std::vector<int> stack{block[0]};
    reached[block[0]] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int d : G.face_darts(f)) {
        const int h = G.right_face(d);
        if (in[h] && !reached[h]) {
          reached[h] = 1;
          ++count;
          stack.push_back(h);
        }
      }
    }
    const long V = std::count(vert.begin(), vert.end(), 1);
    const long E = std::count(edge.begin(), edge.end(), 1);
    const long chi = V - E + static_cast<long>(block.size());
    if (count != block.size() || chi != 1)
      throw Error(ErrorCode::NotADisc, "block " + std::to_string(b) +
                                           " is not a closed disc (Euler characteristic " +
                                           std::to_string(chi) + ")");
    for (int f : block) owner_face[f] = static_cast<int>(b);
  }
  std::vector<char> kept(G.face_count(), 1);
  for (int f = 0; f < G.face_count(); ++f)
    if (owner_face[f] >= 0) kept[f] = 0;
  Surface s = finish_surface(std::move(g), std::move(kept));
  s.blocks = blocks;
  return s;
}

Surface surface_piece(std::shared_ptr<const CellEmbedding> g, std::vector<char> kept_face) {
  return finish_surface(std::move(g), std::move(kept_face));
}

std::vector<Surface> cut_along(const Surface& s, const EdgeSet& cut) {
  const CellEmbedding& G = *s.graph;
  std::vector<int> comp(G.face_count(), -1);
  std::vector<Surface> pieces;
  for (int f0 = 0; f0 < G.face_count(); ++f0) {
    if (!s.kept_face[f0] || comp[f0] >= 0) continue;
    const int id = static_cast<int>(pieces.size());
    std::vector<char> kept(G.face_count(), 0);
    std::vector<int> stack{f0};
    comp[f0] = id;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      kept[f] = 1;
      for (int d : G.face_darts(f)) {
        const int e = G.edge_of(d);
        if (!s.edges.test(static_cast<std::size_t>(e)) || cut.test(static_cast<std::size_t>(e))) continue;
        const int h = G.right_face(d);
        if (comp[h] < 0) {
          comp[h] = id;
          stack.push_back(h);
        }
      }
    }
    pieces.push_back(surface_piece(s.graph, std::move(kept)));
  }
  return pieces;
}

CellEmbedding generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto two_ints = [&]() {
    int m = 0, n = 0;
    char comma = 0;
    std::istringstream is(args);
    if (!(is >> m >> comma >> n) || comma != ',' || !is.eof())
      throw Error(ErrorCode::BadSpec, "expected '" + kind + ":m,n', got '" + spec + "'");
    return std::pair{m, n};
  };
  if (kind == "torus_square") {
    auto [m, n] = two_ints();
    return torus_square(m, n);
  }
  if (kind == "torus_triangular") {
    auto [m, n] = two_ints();
    return torus_triangular(m, n);
  }
  if (kind == "sphere_platonic") return sphere_platonic(args);
  throw Error(ErrorCode::UnknownKind, "unknown graph kind '" + kind + "'");
}

}  // namespace xorloops
