#include <doctest.h>

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "xorloops/errors.hpp"
#include "xorloops/quad_graph.hpp"
#include "xorloops/surface_graph.hpp"

using namespace xorloops;

namespace {

std::shared_ptr<const CellEmbedding> shared(CellEmbedding g) {
  return std::make_shared<const CellEmbedding>(std::move(g));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

void check_euler(const CellEmbedding& g) {
  CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2 - 2 * g.genus());
}

}  // namespace

TEST_CASE("build_embedding derives counts and genus") {
  const CellEmbedding tetra = sphere_platonic("tetrahedron");
  CHECK(tetra.vertex_count() == 4);
  CHECK(tetra.edge_count() == 6);
  CHECK(tetra.face_count() == 4);
  CHECK(tetra.genus() == 0);

  const CellEmbedding t1 = torus_square(1, 1);
  CHECK(t1.vertex_count() == 1);
  CHECK(t1.edge_count() == 2);
  CHECK(t1.face_count() == 1);
  CHECK(t1.genus() == 1);

  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      const CellEmbedding t = torus_square(m, n);
      CHECK(t.vertex_count() == m * n);
      CHECK(t.edge_count() == 2 * m * n);
      CHECK(t.face_count() == m * n);
      CHECK(t.genus() == 1);
    }
}

TEST_CASE("build_embedding rejects malformed maps") {
  CHECK(code_of([] { build_embedding({0, 1}, {1, 0}); }) == ErrorCode::NonInvolution);
  CHECK(code_of([] { build_embedding({1, 0}, {0, 0}); }) == ErrorCode::NotAPermutation);
  // Two separate loops on two vertices.
  CHECK(code_of([] { build_embedding({1, 0, 3, 2}, {1, 0, 3, 2}); }) == ErrorCode::Disconnected);
}

TEST_CASE("a single loop on the sphere") {
  const CellEmbedding g = build_embedding({1, 0}, {1, 0});
  CHECK(g.vertex_count() == 1);
  CHECK(g.face_count() == 2);
  CHECK(g.genus() == 0);
}

TEST_CASE("generators") {
  const CellEmbedding t2 = generate("torus_square:2,2");
  CHECK(t2.vertex_count() == 4);
  CHECK(t2.edge_count() == 8);
  CHECK(t2.face_count() == 4);
  CHECK(t2.genus() == 1);

  const CellEmbedding cube = generate("sphere_platonic:cube");
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.face_count() == 6);
  CHECK(cube.genus() == 0);

  for (const char* name : {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
    const CellEmbedding g = sphere_platonic(name);
    check_euler(g);
    CHECK(g.genus() == 0);
  }
  const CellEmbedding tri = generate("torus_triangular:3,2");
  CHECK(tri.edge_count() == 18);
  CHECK(tri.face_count() == 12);
  CHECK(tri.genus() == 1);

  CHECK(code_of([] { generate("klein_bottle:2,2"); }) == ErrorCode::UnknownKind);
  CHECK(code_of([] { generate("sphere_platonic:torus"); }) == ErrorCode::UnknownKind);
  CHECK(code_of([] { generate("torus_square:2"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { generate("torus_square:0,2"); }) == ErrorCode::BadSpec);
}

TEST_CASE("generated dart numbering is deterministic") {
  const CellEmbedding a = torus_square(3, 2), b = torus_square(3, 2);
  CHECK(a.alpha() == b.alpha());
  CHECK(a.sigma() == b.sigma());
  for (int e = 0; e < a.edge_count(); ++e) {
    CHECK(a.edge_darts(e)[0] == 2 * e);
    CHECK(a.alpha(2 * e) == 2 * e + 1);
  }
}

TEST_CASE("duality") {
  const CellEmbedding tetra = sphere_platonic("tetrahedron");
  CHECK(find_isomorphism(dual(tetra), tetra).has_value());

  const CellEmbedding t1d = dual(torus_square(1, 1));
  CHECK(t1d.vertex_count() == 1);
  CHECK(t1d.edge_count() == 2);
  CHECK(t1d.face_count() == 1);

  const CellEmbedding t2 = torus_square(2, 2);
  CHECK(find_isomorphism(dual(dual(t2)), t2).has_value());

  // Dual keeps edge indices: e and e* share an index.
  const CellEmbedding cube = sphere_platonic("cube");
  const CellEmbedding oct = dual(cube);
  CHECK(oct.edge_count() == cube.edge_count());
  CHECK(oct.vertex_count() == cube.face_count());
  CHECK(oct.alpha() == cube.alpha());

  CHECK_FALSE(find_isomorphism(cube, sphere_platonic("octahedron")).has_value());
}

TEST_CASE("medial graphs") {
  const CellEmbedding m1 = medial(torus_square(1, 1));
  CHECK(m1.vertex_count() == 2);
  CHECK(m1.edge_count() == 4);

  const CellEmbedding t2 = torus_square(2, 2);
  const CellEmbedding m2 = medial(t2);
  CHECK(m2.vertex_count() == 8);
  CHECK(m2.edge_count() == 16);

  for (const CellEmbedding& g : {t2, sphere_platonic("cube"), torus_triangular(2, 2)}) {
    const CellEmbedding m = medial(g);
    for (int v = 0; v < m.vertex_count(); ++v) CHECK(m.vertex_darts(v).size() == 4);
    CHECK(find_isomorphism(m, medial(dual(g))).has_value());
    check_euler(m);
    CHECK(m.genus() == g.genus());
  }
}

TEST_CASE("quad graphs") {
  const QuadGraph q1 = quad_graph(shared(torus_square(1, 1)));
  CHECK(q1.vertex_count() == 8);
  CHECK(q1.edge_count() == 12);

  const auto t2 = shared(torus_square(2, 2));
  const QuadGraph q2 = quad_graph(t2);
  CHECK(q2.vertex_count() == 32);
  CHECK(q2.edge_count() == 48);

  for (const QuadGraph& q : {q1, q2, quad_graph(shared(sphere_platonic("cube"))), planar_patch(2, 3)}) {
    int kinds[3] = {0, 0, 0};
    for (const QuadEdge& e : q.edges()) {
      CHECK(QuadGraph::is_white(e.white));
      CHECK_FALSE(QuadGraph::is_white(e.black));
      ++kinds[static_cast<int>(e.kind)];
    }
    CHECK(kinds[0] == 2 * q.base_edge_count());
    CHECK(kinds[1] == 2 * q.base_edge_count());
    for (int e = 0; e < q.base_edge_count(); ++e) {
      const auto& dec = q.decoration_edges(e);
      std::set<int> verts;
      for (int i : dec) {
        verts.insert(q.edge(i).white);
        verts.insert(q.edge(i).black);
        CHECK(q.edge(i).base == e);
      }
      CHECK(verts.size() == 4);
    }
    CHECK(q.m0().count() * 2 == static_cast<std::size_t>(q.vertex_count()));
  }

  // Face census.
  int census[3] = {0, 0, 0};
  for (const QuadFace& f : q2.faces()) ++census[static_cast<int>(f.kind)];
  CHECK(census[0] == t2->vertex_count());
  CHECK(census[1] == t2->face_count());
  CHECK(census[2] == t2->edge_count());
}

TEST_CASE("planar patches") {
  const QuadGraph p = planar_patch(2, 3);
  CHECK(p.is_patch());
  CHECK(p.base_edge_count() == 6);
  CHECK(p.vertex_count() == 24);
  CHECK(p.primal_vertex_count() + p.dual_vertex_count() == 12);
  // Every vertex is covered by an edge or a stub exactly once outside its
  // decoration.
  for (int v = 0; v < p.vertex_count(); ++v) {
    int stubs = 0;
    for (const QuadStub& s : p.stubs()) stubs += s.vertex == v;
    CHECK((p.external_edge(v) >= 0) + stubs == 1);
  }
  CHECK(code_of([] { planar_patch(0, 2); }) == ErrorCode::BadSpec);
  CHECK(generate_quad("planar_patch:3,3").base_edge_count() == 9);
}

TEST_CASE("remove_faces") {
  const auto t2 = shared(torus_square(2, 2));
  const Surface whole = remove_faces(t2, {});
  CHECK(whole.edges.count() == 8);
  CHECK(whole.closed());

  const Surface one = remove_faces(t2, {{0}});
  CHECK(8 - one.edges.count() == 4);
  CHECK(one.boundary_components() == 1);
  CHECK(one.kept_face_count() == 3);

  // Two adjacent faces in one block: the shared edge is interior to the block.
  const auto t33 = shared(torus_square(3, 3));
  const Surface two = remove_faces(t33, {{0, 1}});
  CHECK(two.boundary_components() == 1);
  CHECK(two.kept_face_count() == 7);
  std::set<int> removed;
  for (int f : {0, 1})
    t33->face_boundary(f).for_each([&](int e) { removed.insert(e); });
  CHECK(18 - two.edges.count() == removed.size());

  // Three separate discs on a 4x4 torus.
  const Surface three = remove_faces(shared(torus_square(4, 4)), {{0}, {6}, {11}});
  CHECK(three.boundary_components() == 3);

  CHECK(code_of([&] { remove_faces(t2, {{0}, {1}}); }) == ErrorCode::OverlappingBlocks);
  CHECK(code_of([&] { remove_faces(t2, {{0}, {0}}); }) == ErrorCode::OverlappingBlocks);
  // A full row of faces wraps around the torus: an annulus, not a disc. The
  // east dart 4v leaves grid vertex v, so its left face has v as lower-left
  // corner.
  const auto t43 = shared(torus_square(4, 3));
  std::vector<int> row;
  for (int i = 0; i < 4; ++i) row.push_back(t43->face_of(4 * i));
  CHECK(std::set<int>(row.begin(), row.end()).size() == 4);
  CHECK(code_of([&] { remove_faces(t43, {row}); }) == ErrorCode::NotADisc);
  // Two faces touching only at a corner are not face-connected.
  CHECK(code_of([&] { remove_faces(t43, {{t43->face_of(0), t43->face_of(4 * 5)}}); }) == ErrorCode::NotADisc);
  CHECK(code_of([&] { remove_faces(shared(torus_square(3, 3)), {{0, 1, 2, 3, 4, 5, 6, 7, 8}}); }) ==
        ErrorCode::NotADisc);
}
