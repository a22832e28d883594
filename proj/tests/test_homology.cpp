#include <doctest.h>

#include <map>
#include <memory>

#include "xorloops/homology.hpp"

using namespace xorloops;

namespace {

std::shared_ptr<const CellEmbedding> shared(CellEmbedding g) {
  return std::make_shared<const CellEmbedding>(std::move(g));
}

HomologyBasis basis_of(CellEmbedding g, std::vector<std::vector<int>> blocks = {}) {
  return compute_basis(remove_faces(shared(std::move(g)), blocks));
}

EdgeSet bits(std::size_t n, std::initializer_list<int> idx) { return EdgeSet::from_indices(n, idx); }

void check_pairing(const HomologyBasis& b) {
  REQUIRE(b.lambda.size() == static_cast<std::size_t>(b.N));
  REQUIRE(b.gamma.size() == static_cast<std::size_t>(b.N));
  for (int i = 0; i < b.N; ++i)
    for (int j = 0; j < b.N; ++j) CHECK(b.lambda[i].dot(b.gamma[j]) == (i == j));
  for (const auto& l : b.lambda) CHECK(is_polygon_config({Side::Dual, l}, b.surface));
  for (const auto& g : b.gamma) CHECK(is_polygon_config({Side::Primal, g}, b.surface));
}

}  // namespace

TEST_CASE("polygon configurations") {
  const Surface t2 = whole_surface(shared(torus_square(2, 2)));
  CHECK(is_polygon_config({Side::Primal, EdgeSet(8)}, t2));
  CHECK_FALSE(is_polygon_config({Side::Primal, bits(8, {0})}, t2));
  CHECK(is_polygon_config({Side::Primal, t2.graph->face_boundary(0)}, t2));
  CHECK(is_polygon_config({Side::Dual, t2.graph->vertex_star(0)}, t2));

  const Surface t1 = whole_surface(shared(torus_square(1, 1)));
  CHECK(is_polygon_config({Side::Primal, bits(2, {0})}, t1));
  CHECK(is_polygon_config({Side::Primal, bits(2, {1})}, t1));
}

TEST_CASE("basis dimension and pairing") {
  const HomologyBasis sphere = basis_of(sphere_platonic("cube"));
  CHECK(sphere.N == 0);

  const HomologyBasis t2 = basis_of(torus_square(2, 2));
  CHECK(t2.N == 2);
  check_pairing(t2);

  const HomologyBasis p1 = basis_of(torus_square(2, 2), {{0}});
  CHECK(p1.N == 2);
  check_pairing(p1);

  const HomologyBasis p2 = basis_of(torus_square(4, 3), {{0}, {6}});
  CHECK(p2.N == 3);
  check_pairing(p2);

  const HomologyBasis p3 = basis_of(torus_square(4, 4), {{0}, {6}, {11}});
  CHECK(p3.N == 4);
  check_pairing(p3);

  const HomologyBasis tri = basis_of(torus_triangular(2, 2));
  CHECK(tri.N == 2);
  check_pairing(tri);
}

TEST_CASE("bases are deterministic") {
  const HomologyBasis a = basis_of(torus_square(3, 2)), b = basis_of(torus_square(3, 2));
  CHECK(a.lambda == b.lambda);
  CHECK(a.gamma == b.gamma);
}

TEST_CASE("intersection form") {
  const EdgeSet c = bits(2, {0});
  CHECK_FALSE(intersection({Side::Primal, c}, {Side::Dual, EdgeSet(2)}));
  CHECK(intersection({Side::Primal, bits(2, {0})}, {Side::Dual, bits(2, {0})}));
  CHECK_FALSE(intersection({Side::Primal, bits(2, {0})}, {Side::Dual, bits(2, {1})}));
  try {
    intersection({Side::Primal, c}, {Side::Primal, c});
    FAIL("expected SameSide");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SameSide);
  }
  // Bilinearity over every triple of a small family of T2 chains.
  std::vector<EdgeSet> fam;
  for (int k = 0; k < 16; ++k) {
    EdgeSet s(8);
    for (int i = 0; i < 8; ++i)
      if ((k * 37 + i * 11) % 3 == 0) s.set(static_cast<std::size_t>(i));
    fam.push_back(s);
  }
  for (const auto& a : fam)
    for (const auto& b : fam)
      for (const auto& d : fam) {
        const bool lhs = intersection({Side::Primal, a ^ b}, {Side::Dual, d});
        const bool rhs = intersection({Side::Primal, a}, {Side::Dual, d}) ^
                         intersection({Side::Primal, b}, {Side::Dual, d});
        CHECK(lhs == rhs);
      }
}

TEST_CASE("homology classes") {
  const HomologyBasis t1 = basis_of(torus_square(1, 1));
  CHECK(homology_class({Side::Primal, EdgeSet(2)}, t1).empty());
  CHECK(homology_class({Side::Primal, bits(2, {0})}, t1) == bits(2, {0}));
  CHECK(homology_class({Side::Primal, bits(2, {1})}, t1) == bits(2, {1}));

  const HomologyBasis t2 = basis_of(torus_square(2, 2));
  for (int f = 0; f < 4; ++f) CHECK(homology_class({Side::Primal, t2.surface.graph->face_boundary(f)}, t2).empty());
  for (int v = 0; v < 4; ++v) CHECK(homology_class({Side::Dual, t2.surface.graph->vertex_star(v)}, t2).empty());
  try {
    homology_class({Side::Primal, bits(8, {0})}, t2);
    FAIL("expected NotACycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACycle);
  }
}

TEST_CASE("class map is a surjective homomorphism with the face boundaries as kernel") {
  const HomologyBasis t2 = basis_of(torus_square(2, 2));
  const auto cycles = primal_cycle_basis(t2.surface);
  CHECK(cycles.size() == 5);  // E - V + 1
  std::map<std::uint64_t, int> per_class;
  Z2Echelon faces(8);
  for (int f = 0; f < 4; ++f) faces.insert(t2.surface.graph->face_boundary(f));
  CHECK(faces.rank() == 3);  // E - V + 1 - 2g
  for_each_in_span(cycles, 8, [&](const EdgeSet& c) {
    const EdgeSet cls = homology_class({Side::Primal, c}, t2);
    ++per_class[class_index(cls)];
    CHECK(cls.empty() == faces.contains(c));
  });
  CHECK(per_class.size() == 4);
  for (const auto& [k, n] : per_class) CHECK(n == 8);

  // Sums map to sums.
  std::vector<EdgeSet> all;
  for_each_in_span(cycles, 8, [&](const EdgeSet& c) { all.push_back(c); });
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK(homology_class({Side::Primal, a ^ b}, t2) ==
            (homology_class({Side::Primal, a}, t2) ^ homology_class({Side::Primal, b}, t2)));
}

TEST_CASE("the pairing is well defined on classes") {
  const HomologyBasis t2 = basis_of(torus_square(2, 2));
  const CellEmbedding& g = *t2.surface.graph;
  for_each_in_span(primal_cycle_basis(t2.surface), 8, [&](const EdgeSet& c) {
    for_each_in_span(dual_cycle_basis(t2.surface), 8, [&](const EdgeSet& d) {
      const bool base = intersection({Side::Primal, c}, {Side::Dual, d});
      for (int f = 0; f < g.face_count(); ++f)
        CHECK(intersection({Side::Primal, c ^ g.face_boundary(f)}, {Side::Dual, d}) == base);
      for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(intersection({Side::Primal, c}, {Side::Dual, d ^ g.vertex_star(v)}) == base);
    });
  });
}

TEST_CASE("relative classes on surfaces with boundary") {
  for (const auto& b : {basis_of(torus_square(2, 2), {{0}}), basis_of(torus_square(4, 3), {{0}, {6}})}) {
    std::map<std::uint64_t, int> per_class;
    for_each_in_span(primal_cycle_basis(b.surface), b.surface.edges.size(),
                     [&](const EdgeSet& c) { ++per_class[class_index(homology_class({Side::Primal, c}, b))]; });
    CHECK(per_class.size() == (std::size_t{1} << b.N));
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << b.N); ++k) {
      const EdgeSet eps = class_bits(b.N, k);
      CHECK(homology_class({Side::Primal, defect_representative(b, eps)}, b) == eps);
    }
  }
}

TEST_CASE("orthogonality of characters") {
  const auto r0 = verify_orthogonality(basis_of(sphere_platonic("tetrahedron")));
  CHECK(r0.N == 0);
  CHECK(r0.checked == 1);
  CHECK(r0.violations == 0);
  const auto r2 = verify_orthogonality(basis_of(torus_square(2, 2)));
  CHECK(r2.checked == 16);
  CHECK(r2.violations == 0);
}

TEST_CASE("restricting representatives") {
  const HomologyBasis t2 = basis_of(torus_square(2, 2));
  const EdgeSet loop = t2.surface.graph->face_boundary(0);
  const auto pieces = cut_along(t2.surface, loop);
  REQUIRE(pieces.size() == 2);
  const Surface& inner = pieces[0].kept_face_count() == 1 ? pieces[0] : pieces[1];
  const Surface& outer = pieces[0].kept_face_count() == 1 ? pieces[1] : pieces[0];
  CHECK(restrict_representative(EdgeSet(8), outer).empty());
  const EdgeSet rep = t2.gamma[0];
  CHECK(restrict_representative(rep, outer) == (rep & outer.edges));
  CHECK(restrict_representative(outer.edges, outer) == outer.edges);
  CHECK(inner.edges.empty());  // a single face keeps no interior edges
}

TEST_CASE("mixed class zero through corner colourings") {
  const CellEmbedding t2 = torus_square(2, 2);
  const HomologyBasis b = basis_of(t2);
  CHECK(mixed_class_zero(t2, EdgeSet(8), EdgeSet(8)));
  CHECK(mixed_class_zero(t2, t2.face_boundary(0), EdgeSet(8)));
  CHECK(mixed_class_zero(t2, EdgeSet(8), t2.vertex_star(1)));
  CHECK_FALSE(mixed_class_zero(t2, b.gamma[0], EdgeSet(8)));
  CHECK_FALSE(mixed_class_zero(t2, EdgeSet(8), b.lambda[1]));
  // An essential primal loop is cancelled by some disjoint essential dual
  // loop.
  for (int i = 0; i < 2; ++i) {
    bool found = false;
    for_each_in_span(dual_cycle_basis(b.surface), 8, [&](const EdgeSet& d) {
      if (d.any() && !d.intersects(b.gamma[i]) && mixed_class_zero(t2, b.gamma[i], d)) found = true;
    });
    CHECK(found);
  }
}

TEST_CASE("span enumeration") {
  int n = 0;
  for_each_in_span({bits(4, {0}), bits(4, {1, 2}), bits(4, {3})}, 4, [&](const EdgeSet&) { ++n; });
  CHECK(n == 8);
  std::vector<EdgeSet> big(25, EdgeSet(25));
  CHECK_THROWS_AS(for_each_in_span(big, 25, [](const EdgeSet&) {}), Error);
}
