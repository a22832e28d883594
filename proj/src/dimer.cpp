#include "xorloops/dimer.hpp"

#include <algorithm>

namespace xorloops {

bool is_perfect_matching(const QuadGraph& q, const EdgeSet& m) {
  std::vector<int> cover(static_cast<std::size_t>(q.vertex_count()), 0);
  m.for_each([&](int i) {
    ++cover[q.edge(i).white];
    ++cover[q.edge(i).black];
  });
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<EdgeSet> enumerate_matchings(const QuadGraph& q) {
  const int n = q.vertex_count();
  size_guard("quad graph vertex count", static_cast<std::size_t>(n), 64);
  std::vector<EdgeSet> out;
  std::vector<char> used(n, 0);
  EdgeSet cur(static_cast<std::size_t>(q.edge_count()));
  const auto rec = [&](auto&& self, int v) -> void {
    while (v < n && used[v]) ++v;
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (int i : q.incident(v)) {
      const QuadEdge& e = q.edge(i);
      const int u = e.white == v ? e.black : e.white;
      if (used[u]) continue;
      used[v] = used[u] = 1;
      cur.set(static_cast<std::size_t>(i));
      self(self, v + 1);
      cur.set(static_cast<std::size_t>(i), false);
      used[v] = used[u] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::array<bool, 4>> slot_states(const QuadGraph& q, const EdgeSet& m) {
  std::vector<std::array<bool, 4>> out;
  for (int e = 0; e < q.base_edge_count(); ++e) {
    std::array<bool, 4> st;
    for (int k = 0; k < 4; ++k) {
      const int ext = q.external_edge(q.slots(e)[k]);
      st[k] = ext >= 0 && m.test(static_cast<std::size_t>(ext));
    }
    out.push_back(st);
  }
  return out;
}

EdgeSet mapping_II(const QuadGraph& q, const EdgeSet& m) {
  EdgeSet cfg(static_cast<std::size_t>(2 * q.base_edge_count()));
  for (int x = 0; x < 2 * q.base_edge_count(); ++x) {
    const int ext = q.external_edge(QuadGraph::white_of(x));
    if (ext >= 0 && m.test(static_cast<std::size_t>(ext))) cfg.set(static_cast<std::size_t>(x));
  }
  return cfg;
}

PolygonPair poly(const QuadGraph& q, const EdgeSet& m) {
  const std::size_t E = static_cast<std::size_t>(q.base_edge_count());
  PolygonPair pp{EdgeSet(E), EdgeSet(E)};
  const auto states = slot_states(q, m);
  for (std::size_t e = 0; e < E; ++e) {
    const LocalType t = classify_slots(states[e]);
    if (is_a(t)) pp.primal.set(e);
    if (is_b(t)) pp.dual.set(e);
  }
  return pp;
}

EdgeSet poly1_by_parity(const QuadGraph& q, const EdgeSet& m) {
  EdgeSet p(static_cast<std::size_t>(q.base_edge_count()));
  m.for_each([&](int i) {
    if (q.edge(i).kind == QuadEdgeKind::AParallel) p.flip(static_cast<std::size_t>(q.edge(i).base));
  });
  return p;
}

EdgeSet lambda_of(const HomologyBasis& basis, const EdgeSet& eps) {
  EdgeSet l(basis.surface.edges.size());
  eps.for_each([&](int i) { l ^= basis.lambda[i]; });
  return l;
}

EdgeSet sector_of(const QuadGraph& q, const HomologyBasis& basis, const EdgeSet& m) {
  const EdgeSet loops = m ^ q.m0();
  EdgeSet coords(static_cast<std::size_t>(basis.N));
  for (int i = 0; i < basis.N; ++i) {
    bool parity = false;
    loops.for_each([&](int k) {
      const QuadEdge& e = q.edge(k);
      if (e.kind == QuadEdgeKind::AParallel && basis.lambda[i].test(static_cast<std::size_t>(e.base)))
        parity = !parity;
    });
    if (parity) coords.set(static_cast<std::size_t>(i));
  }
  return coords;
}

namespace {

std::vector<std::vector<int>> face_edges(const QuadGraph& q) {
  std::vector<std::vector<int>> fe(static_cast<std::size_t>(q.face_count()));
  for (int i = 0; i < q.edge_count(); ++i) {
    fe[q.edge(i).left_face].push_back(i);
    fe[q.edge(i).right_face].push_back(i);
  }
  return fe;
}

}  // namespace

std::vector<int> kasteleyn_signs(const QuadGraph& q) {
  // One Z/2 unknown per edge (1 = minus); one equation per complete face.
  const auto fe = face_edges(q);
  std::vector<EdgeSet> rows;
  std::vector<bool> rhs;
  for (int f = 0; f < q.face_count(); ++f) {
    if (!q.face(f).complete) continue;
    EdgeSet r(static_cast<std::size_t>(q.edge_count()));
    for (int i : fe[f]) r.flip(static_cast<std::size_t>(i));
    rows.push_back(r);
    rhs.push_back((fe[f].size() / 2 - 1) % 2 == 1);
  }
  const auto sol = z2_solve(rows, rhs, static_cast<std::size_t>(q.edge_count()));
  if (!sol) throw Error(ErrorCode::SignSystemInfeasible, "no Kasteleyn sign assignment exists");
  std::vector<int> signs(static_cast<std::size_t>(q.edge_count()));
  for (int i = 0; i < q.edge_count(); ++i) signs[i] = sol->test(static_cast<std::size_t>(i)) ? -1 : 1;
  // Flipping a white row keeps every face condition: each face meets a
  // vertex in zero or two edges.
  q.m0().for_each([&](int i) {
    if (signs[i] > 0) return;
    for (int k : q.incident(q.edge(i).white)) signs[k] = -signs[k];
  });
  if (!kasteleyn_face_violations(q, signs).empty())
    throw Error(ErrorCode::SignSystemInfeasible, "sign propagation left a face unsatisfied");
  return signs;
}

std::vector<int> kasteleyn_face_violations(const QuadGraph& q, const std::vector<int>& signs) {
  const auto fe = face_edges(q);
  std::vector<int> bad;
  for (int f = 0; f < q.face_count(); ++f) {
    if (!q.face(f).complete) continue;
    std::size_t minus = 0;
    for (int i : fe[f]) minus += signs[i] < 0;
    if (minus % 2 != (fe[f].size() / 2 - 1) % 2) bad.push_back(f);
  }
  return bad;
}

std::vector<int> twisted_signs(const QuadGraph& q, std::vector<int> signs, const EdgeSet& flip_bases) {
  flip_bases.for_each([&](int e) {
    signs[q.decoration_edges(e)[2]] *= -1;
    signs[q.decoration_edges(e)[3]] *= -1;
  });
  return signs;
}

int matching_sign(const QuadGraph& q, const EdgeSet& m, const std::vector<int>& signs) {
  std::vector<int> image(static_cast<std::size_t>(q.vertex_count() / 2), -1);
  int sign = 1;
  m.for_each([&](int i) {
    image[q.edge(i).white / 2] = q.edge(i).black / 2;
    sign *= signs[i];
  });
  return sign * permutation_sign(image);
}

SignTable sign_table(const QuadGraph& q, const HomologyBasis& basis, const std::vector<EdgeSet>& matchings,
                     const std::vector<int>& base_signs) {
  SignTable t;
  t.N = basis.N;
  const std::size_t M = std::size_t{1} << basis.N;
  t.s.assign(M, std::vector<int>(M, 0));
  t.empty_sector.assign(M, 1);
  std::vector<std::vector<int>> twisted;
  for (std::size_t eps = 0; eps < M; ++eps)
    twisted.push_back(twisted_signs(q, base_signs, lambda_of(basis, class_bits(basis.N, eps))));
  for (const EdgeSet& m : matchings) {
    const std::size_t alpha = class_index(sector_of(q, basis, m));
    t.empty_sector[alpha] = 0;
    for (std::size_t eps = 0; eps < M; ++eps) {
      const int s = matching_sign(q, m, twisted[eps]);
      ++t.audited;
      if (t.s[alpha][eps] == 0) t.s[alpha][eps] = s;
      else if (t.s[alpha][eps] != s) t.constant = false;
    }
  }
  // Empty sectors contribute nothing; any sign keeps the system solvable,
  // and the character table keeps it invertible.
  for (std::size_t alpha = 0; alpha < M; ++alpha)
    if (t.empty_sector[alpha])
      for (std::size_t eps = 0; eps < M; ++eps)
        t.s[alpha][eps] = std::popcount(alpha & eps) & 1 ? -1 : 1;
  return t;
}

}  // namespace xorloops
