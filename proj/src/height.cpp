#include "xorloops/height.hpp"

#include <deque>
#include <ostream>

#include "xorloops/dimer.hpp"

namespace xorloops {

const char* to_string(HeightKind k) {
  return k == HeightKind::M0Flow ? "m0" : "theta_pi";
}

HeightField height_field(const QuadGraph& q, const EdgeSet& m, HeightKind kind) {
  return height_field(q, m, kind, AngleField::square(q.base_edge_count()));
}

HeightField height_field(const QuadGraph& q, const EdgeSet& m, HeightKind kind,
                         const AngleField& angles) {
  if (!q.is_patch() && q.genus() > 0)
    throw Error(ErrorCode::NotSimplyConnected, "heights on a surface of genus " +
                                                   std::to_string(q.genus()) + " have periods");
  if (m.size() != static_cast<std::size_t>(q.edge_count()) || !is_perfect_matching(q, m))
    throw Error(ErrorCode::NotAMatching, "configuration is not a perfect matching");

  const ReferenceFlow ref = reference_flow(q, angles);
  struct Step {
    int to;
    Rational delta;
  };
  std::vector<std::vector<Step>> adj(static_cast<std::size_t>(q.face_count()));
  const auto link = [&](int l, int r, const Rational& d) {
    adj[l].push_back({r, d});
    adj[r].push_back({l, Rational(-d)});
  };
  for (int i = 0; i < q.edge_count(); ++i) {
    const Rational am = m.test(static_cast<std::size_t>(i)) ? 1 : 0;
    const Rational a0 = kind == HeightKind::M0Flow ? Rational(q.m0().test(static_cast<std::size_t>(i)) ? 1 : 0)
                                                   : ref.edge[i];
    link(q.edge(i).left_face, q.edge(i).right_face, am - a0);
  }
  for (std::size_t k = 0; k < q.stubs().size(); ++k) {
    const QuadStub& s = q.stubs()[k];
    const Rational a0 = kind == HeightKind::M0Flow ? Rational(0) : ref.stub[k];
    // Stubs carry reference flow only; their faces are tagged as for a real
    // white-to-black edge.
    link(s.left_face, s.right_face, -a0);
  }

  HeightField h;
  h.kind = kind;
  h.base_face = q.face_id(FaceKind::PrimalVertex, 0);
  h.values.assign(static_cast<std::size_t>(q.face_count()), Rational(0));
  std::vector<char> seen(static_cast<std::size_t>(q.face_count()), 0);
  std::deque<int> queue{h.base_face};
  seen[h.base_face] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const Step& s : adj[f]) {
      const Rational v = h.values[f] + s.delta;
      if (!seen[s.to]) {
        seen[s.to] = 1;
        h.values[s.to] = v;
        queue.push_back(s.to);
      } else if (h.values[s.to] != v) {
        throw Error(ErrorCode::NotSimplyConnected, "height increments have a nonzero period");
      }
    }
  }
  return h;
}

std::vector<Rational> restrict_heights(const QuadGraph& q, const HeightField& h, FaceKind side) {
  const int n = side == FaceKind::PrimalVertex ? q.primal_vertex_count() : q.dual_vertex_count();
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(h.values[q.face_id(side, i)]);
  return out;
}

EdgeSet level_lines(const QuadGraph& q, const HeightField& h, FaceKind side) {
  EdgeSet out(static_cast<std::size_t>(q.base_edge_count()));
  for (int e = 0; e < q.base_edge_count(); ++e) {
    const auto& ends = side == FaceKind::DualVertex ? q.dual_ends(e) : q.primal_ends(e);
    if (h.values[ends[0]] != h.values[ends[1]]) out.set(static_cast<std::size_t>(e));
  }
  return out;
}

double pair_with_test_function(const QuadGraph& q, const HeightField& h, const std::vector<double>& phi,
                               double mesh) {
  std::vector<int> rhombi(static_cast<std::size_t>(q.dual_vertex_count()), 0);
  const int offset = q.face_id(FaceKind::DualVertex, 0);
  for (int e = 0; e < q.base_edge_count(); ++e)
    for (int f : q.dual_ends(e)) ++rhombi[f - offset];
  double sum = 0.0;
  for (int v = 0; v < q.dual_vertex_count(); ++v) {
    const double area = mesh * mesh * rhombi[v] / 2.0;
    sum += area * h.values[offset + v].get_d() * phi[v];
  }
  return sum;
}

void write_heights_csv(std::ostream& os, const QuadGraph& q, const HeightField& h) {
  os << "face,tag,value\n";
  for (int f = 0; f < q.face_count(); ++f) {
    os << f << ',' << to_string(q.face(f).kind) << ',' << h.values[f].get_str() << '\n';
  }
}

}  // namespace xorloops
