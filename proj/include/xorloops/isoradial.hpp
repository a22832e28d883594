#pragma once

// Critical (isoradial) couplings and weights. Angles are rhombus half-angles
// theta_e in (0, pi/2); theta/pi is stored as a rational so reference flows
// stay exact.

#include <cmath>
#include <numbers>
#include <vector>

#include "xorloops/dimer.hpp"
#include "xorloops/errors.hpp"
#include "xorloops/ising.hpp"
#include "xorloops/quad_graph.hpp"
#include "xorloops/scalar.hpp"

namespace xorloops {

struct AngleField {
  std::vector<Rational> theta_over_pi;  // per base edge

  static AngleField square(int edges) { return {std::vector<Rational>(edges, Rational(1, 4))}; }
  double theta(int e) const { return theta_over_pi[e].get_d() * std::numbers::pi; }
};

struct CriticalCoupling {
  double J;
  double x;  // e^{-2J}
};

/// J(theta) = 1/2 log((1 + sin theta) / cos theta).
inline CriticalCoupling critical_coupling(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2))
    throw Error(ErrorCode::OutOfRange, "half-angle must lie in (0, pi/2)");
  const double s = std::sin(theta), c = std::cos(theta);
  return {0.5 * std::log((1.0 + s) / c), c / (1.0 + s)};
}

inline CouplingField<double> critical_field(const AngleField& angles) {
  std::vector<double> xs;
  for (std::size_t e = 0; e < angles.theta_over_pi.size(); ++e)
    xs.push_back(critical_coupling(angles.theta(static_cast<int>(e))).x);
  return CouplingField<double>::from_x(xs);
}

/// a = cos theta on a-parallel edges, b = sin theta on b-parallel ones.
inline DimerWeights<double> critical_dimer_weights(const QuadGraph& q, const AngleField& angles) {
  std::vector<double> a, b;
  for (std::size_t e = 0; e < angles.theta_over_pi.size(); ++e) {
    const double t = angles.theta(static_cast<int>(e));
    if (!(t > 0.0 && t < std::numbers::pi / 2))
      throw Error(ErrorCode::OutOfRange, "half-angle must lie in (0, pi/2)");
    a.push_back(std::cos(t));
    b.push_back(std::sin(t));
  }
  return DimerWeights<double>::from_ab(q, a, b);
}

/// Reference unit flow: theta/pi on a-parallel, 1/2 - theta/pi on
/// b-parallel and 1/2 on external edges. Stub values come second.
struct ReferenceFlow {
  std::vector<Rational> edge;
  std::vector<Rational> stub;
};

inline ReferenceFlow reference_flow(const QuadGraph& q, const AngleField& angles) {
  ReferenceFlow f;
  const Rational half(1, 2);
  for (const QuadEdge& e : q.edges()) {
    switch (e.kind) {
      case QuadEdgeKind::AParallel: f.edge.push_back(angles.theta_over_pi[e.base]); break;
      case QuadEdgeKind::BParallel: f.edge.push_back(half - angles.theta_over_pi[e.base]); break;
      case QuadEdgeKind::External: f.edge.push_back(half); break;
    }
  }
  f.stub.assign(q.stubs().size(), half);
  return f;
}

/// Total flow out of each vertex (white) or into it (black).
inline std::vector<Rational> flow_divergence(const QuadGraph& q, const ReferenceFlow& f) {
  std::vector<Rational> div(static_cast<std::size_t>(q.vertex_count()), Rational(0));
  for (int i = 0; i < q.edge_count(); ++i) {
    div[q.edge(i).white] += f.edge[i];
    div[q.edge(i).black] += f.edge[i];
  }
  for (std::size_t k = 0; k < q.stubs().size(); ++k) div[q.stubs()[k].vertex] += f.stub[k];
  return div;
}

}  // namespace xorloops
