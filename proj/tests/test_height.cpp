#include <doctest.h>

#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "xorloops/dimer.hpp"
#include "xorloops/height.hpp"

using namespace xorloops;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("reference matching has zero height") {
  const QuadGraph q = planar_patch(3, 3);
  const HeightField h = height_field(q, q.m0(), HeightKind::M0Flow);
  CHECK(h.base_face == q.face_id(FaceKind::PrimalVertex, 0));
  CHECK(h.kind == HeightKind::M0Flow);
  for (const auto& v : h.values) CHECK(v == 0);
  CHECK(level_lines(q, h, FaceKind::DualVertex).empty());
  CHECK(level_lines(q, h, FaceKind::PrimalVertex).empty());
  CHECK(std::string(to_string(HeightKind::M0Flow)) == "m0");
  CHECK(std::string(to_string(HeightKind::ThetaPiFlow)) == "theta_pi");
}

TEST_CASE("heights of every matching of a patch") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
    const QuadGraph q = planar_patch(m, n);
    for (const EdgeSet& mm : enumerate_matchings(q)) {
      const HeightField h = height_field(q, mm, HeightKind::ThetaPiFlow);
      CHECK(h.values[h.base_face] == 0);
      for (const auto& v : restrict_heights(q, h, FaceKind::PrimalVertex)) CHECK(v.get_den() == 1);
      for (const auto& v : restrict_heights(q, h, FaceKind::DualVertex)) CHECK(v.get_den() == 2);
      for (int e = 0; e < q.base_edge_count(); ++e) {
        const Rational d = h.values[q.primal_ends(e)[1]] - h.values[q.primal_ends(e)[0]];
        CHECK(abs(d) <= 1);
      }
      const PolygonPair pp = poly(q, mm);
      const EdgeSet l1 = level_lines(q, h, FaceKind::DualVertex), l2 = level_lines(q, h, FaceKind::PrimalVertex);
      CHECK(l1 == pp.primal);
      CHECK(l2 == pp.dual);
      CHECK_FALSE(l1.intersects(l2));

      // The two flows differ by one constant per side.
      const HeightField g = height_field(q, mm, HeightKind::M0Flow);
      for (FaceKind side : {FaceKind::PrimalVertex, FaceKind::DualVertex}) {
        const auto a = restrict_heights(q, h, side), b = restrict_heights(q, g, side);
        for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] - b[i] == a[0] - b[0]);
      }
    }
  }
}

TEST_CASE("height errors") {
  const QuadGraph patch = planar_patch(2, 2);
  CHECK(code_of([&] { height_field(patch, EdgeSet(static_cast<std::size_t>(patch.edge_count())), HeightKind::M0Flow); }) ==
        ErrorCode::NotAMatching);
  const QuadGraph torus = quad_graph(std::make_shared<const CellEmbedding>(torus_square(2, 2)));
  CHECK(code_of([&] { height_field(torus, torus.m0(), HeightKind::ThetaPiFlow); }) == ErrorCode::NotSimplyConnected);
}

TEST_CASE("pairing with test functions") {
  const QuadGraph q = planar_patch(3, 3);
  const auto matchings = enumerate_matchings(q);
  const HeightField h = height_field(q, matchings.back(), HeightKind::ThetaPiFlow);
  const std::size_t D = static_cast<std::size_t>(q.dual_vertex_count());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> f(D), g(D), sum(D);
  for (std::size_t i = 0; i < D; ++i) {
    f[i] = u(rng);
    g[i] = u(rng);
    sum[i] = 2 * f[i] - 3 * g[i];
  }
  const double mesh = 0.25;
  CHECK(pair_with_test_function(q, h, sum, mesh) ==
        doctest::Approx(2 * pair_with_test_function(q, h, f, mesh) - 3 * pair_with_test_function(q, h, g, mesh)));
  CHECK(pair_with_test_function(q, h, std::vector<double>(D, 0.0), mesh) == 0.0);

  // Shifting heights by a constant is invisible to area-balanced test functions.
  HeightField one = h;
  for (auto& v : one.values) v = 1;
  const double mean = pair_with_test_function(q, one, f, mesh) / pair_with_test_function(q, one, std::vector<double>(D, 1.0), mesh);
  for (auto& v : f) v -= mean;
  HeightField shifted = h;
  for (auto& v : shifted.values) v += Rational(7, 2);
  CHECK(pair_with_test_function(q, shifted, f, mesh) == doctest::Approx(pair_with_test_function(q, h, f, mesh)));
}

TEST_CASE("height CSV") {
  const QuadGraph q = planar_patch(1, 1);
  const HeightField h = height_field(q, q.m0(), HeightKind::M0Flow);
  std::ostringstream os;
  write_heights_csv(os, q, h);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "face,tag,value");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "0");
  }
  CHECK(rows == q.face_count());
}
