#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "xorloops/isoradial.hpp"

using namespace xorloops;

namespace {

constexpr double pi = std::numbers::pi;

QuadGraph closed_quad(const std::string& spec) {
  return quad_graph(std::make_shared<const CellEmbedding>(generate(spec)));
}

}  // namespace

TEST_CASE("critical coupling") {
  const CriticalCoupling sq = critical_coupling(pi / 4);
  CHECK(sq.J == doctest::Approx(0.5 * std::log(1 + std::sqrt(2.0))).epsilon(1e-12));
  CHECK(sq.x == doctest::Approx(std::exp(-2 * sq.J)).epsilon(1e-12));
  CHECK(sq.x == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));

  double prev = critical_coupling(1e-6).J;
  CHECK(prev == doctest::Approx(0.0).epsilon(1e-5));
  for (int k = 1; k < 100; ++k) {
    const double J = critical_coupling(k * (pi / 2) / 100).J;
    CHECK(J > prev);
    prev = J;
  }

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(1e-3, pi / 2 - 1e-3);
  for (int k = 0; k < 100; ++k) {
    const double theta = u(rng);
    const double back = std::asin(std::tanh(2 * critical_coupling(theta).J));
    CHECK(back == doctest::Approx(theta).epsilon(1e-9));
  }

  CHECK_THROWS_AS(critical_coupling(0.0), Error);
  CHECK_THROWS_AS(critical_coupling(pi / 2), Error);
  CHECK_THROWS_AS(critical_coupling(-0.1), Error);
}

TEST_CASE("critical dimer weights") {
  const QuadGraph q = closed_quad("torus_square:2,2");
  const AngleField sq = AngleField::square(8);
  const auto w = critical_dimer_weights(q, sq);
  for (int i = 0; i < q.edge_count(); ++i) {
    if (q.edge(i).kind == QuadEdgeKind::External) CHECK(w.w[i] == 1.0);
    else CHECK(w.w[i] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  }

  // Generic angles: a^2 + b^2 = 1 and agreement with the route through x.
  AngleField mixed;
  for (int e = 0; e < 8; ++e) mixed.theta_over_pi.push_back(Rational(e + 1, 20));
  const auto wm = critical_dimer_weights(q, mixed);
  const auto via_x = DimerWeights<double>::from_coupling(q, critical_field(mixed));
  const auto J = critical_field(mixed);
  for (int e = 0; e < 8; ++e) {
    CHECK(J.a(e) * J.a(e) + J.b(e) * J.b(e) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(J.a(e) == doctest::Approx(std::cos(mixed.theta(e))).epsilon(1e-12));
  }
  for (int i = 0; i < q.edge_count(); ++i) CHECK(wm.w[i] == doctest::Approx(via_x.w[i]).epsilon(1e-12));

  AngleField bad = AngleField::square(8);
  bad.theta_over_pi[3] = Rational(1, 2);
  CHECK_THROWS_AS(critical_dimer_weights(q, bad), Error);
}

TEST_CASE("reference flows are unit flows") {
  std::vector<QuadGraph> graphs;
  graphs.push_back(closed_quad("torus_square:2,2"));
  graphs.push_back(planar_patch(2, 3));
  graphs.push_back(planar_patch(3, 3));
  for (const QuadGraph& q : graphs) {
    const ReferenceFlow f = reference_flow(q, AngleField::square(q.base_edge_count()));
    for (int i = 0; i < q.edge_count(); ++i) {
      const QuadEdge& e = q.edge(i);
      CHECK(f.edge[i] == (e.kind == QuadEdgeKind::External ? Rational(1, 2) : Rational(1, 4)));
    }
    for (const auto& d : flow_divergence(q, f)) CHECK(d == 1);

    AngleField skew;
    for (int e = 0; e < q.base_edge_count(); ++e) skew.theta_over_pi.push_back(Rational(1 + e % 4, 10));
    for (const auto& d : flow_divergence(q, reference_flow(q, skew))) CHECK(d == 1);

    // A perfect matching is a unit flow too.
    ReferenceFlow m0{std::vector<Rational>(q.edge_count(), 0), std::vector<Rational>(q.stubs().size(), 0)};
    q.m0().for_each([&](int i) { m0.edge[i] = 1; });
    for (const auto& d : flow_divergence(q, m0)) CHECK(d == 1);
  }
}
