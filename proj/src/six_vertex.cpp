#include "xorloops/six_vertex.hpp"

#include <algorithm>

namespace xorloops {

const char* to_string(LocalType t) {
  switch (t) {
    case LocalType::APlus: return "A+";
    case LocalType::AMinus: return "A-";
    case LocalType::BPlus: return "B+";
    case LocalType::BMinus: return "B-";
    case LocalType::CPlus: return "C+";
    case LocalType::CMinus: return "C-";
  }
  return "?";
}

LocalType classify_slots(const std::array<bool, 4>& p) {
  const int mask = p[0] | p[1] << 1 | p[2] << 2 | p[3] << 3;
  switch (mask) {
    case 0b0011: return LocalType::APlus;
    case 0b1100: return LocalType::AMinus;
    case 0b0110: return LocalType::BPlus;
    case 0b1001: return LocalType::BMinus;
    case 0b1111: return LocalType::CPlus;
    case 0b0000: return LocalType::CMinus;
    default:
      throw Error(ErrorCode::InvalidLocalConfig, "present edges are not an even consecutive run");
  }
}

std::array<int, 4> medial_slots(const CellEmbedding& g, int e) {
  const int d = g.edge_darts(e)[0], dp = g.edge_darts(e)[1];
  return {g.sigma_inv(d), dp, g.sigma_inv(dp), d};
}

LocalType classify_vertex(const CellEmbedding& g, const EdgeSet& cfg, int e) {
  const auto s = medial_slots(g, e);
  return classify_slots({cfg.test(s[0]), cfg.test(s[1]), cfg.test(s[2]), cfg.test(s[3])});
}

bool is_valid_six_vertex(const CellEmbedding& g, const EdgeSet& cfg) {
  try {
    for (int e = 0; e < g.edge_count(); ++e) classify_vertex(g, cfg, e);
    return true;
  } catch (const Error&) {
    return false;
  }
}

PolygonPair mapping_I(const CellEmbedding& g, const EdgeSet& cfg) {
  PolygonPair pp{EdgeSet(static_cast<std::size_t>(g.edge_count())),
                 EdgeSet(static_cast<std::size_t>(g.edge_count()))};
  for (int e = 0; e < g.edge_count(); ++e) {
    const LocalType t = classify_vertex(g, cfg, e);
    if (is_a(t)) pp.primal.set(static_cast<std::size_t>(e));
    if (is_b(t)) pp.dual.set(static_cast<std::size_t>(e));
  }
  return pp;
}

std::array<EdgeSet, 2> mapping_I_fiber(const CellEmbedding& g, const EdgeSet& P, const EdgeSet& Pstar) {
  if (P.intersects(Pstar))
    throw Error(ErrorCode::InvalidLocalConfig, "primal and dual configurations cross");
  const auto colors = corner_coloring(g, P, Pstar);
  if (!colors) throw Error(ErrorCode::NotNullHomologous, "P u P* is not null-homologous");
  EdgeSet cfg(static_cast<std::size_t>(g.dart_count()));
  for (int c = 0; c < g.dart_count(); ++c)
    if ((*colors)[c]) cfg.set(static_cast<std::size_t>(c));
  return {cfg, ~cfg};
}

// The six admissible corner patterns, bit k = slot k.
constexpr std::array<int, 6> kPatterns{0b0011, 0b1100, 0b0110, 0b1001, 0b1111, 0b0000};

std::vector<EdgeSet> enumerate_six_vertex(const CellEmbedding& g) {
  const int n = g.dart_count();
  size_guard("medial edge count", static_cast<std::size_t>(n), 24);
  // Depth-first over medial vertices, fixing their four corners together.
  std::vector<EdgeSet> out;
  std::vector<int> state(n, -1);
  std::vector<std::array<int, 4>> slots;
  for (int e = 0; e < g.edge_count(); ++e) slots.push_back(medial_slots(g, e));
  const auto rec = [&](auto&& self, int e) -> void {
    if (e == g.edge_count()) {
      EdgeSet cfg(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        if (state[c] == 1) cfg.set(static_cast<std::size_t>(c));
      out.push_back(cfg);
      return;
    }
    for (int pat : kPatterns) {
      std::array<int, 4> saved;
      bool ok = true;
      for (int k = 0; k < 4; ++k) {
        const int c = slots[e][k];
        saved[k] = state[c];
        const int want = pat >> k & 1;
        if (state[c] >= 0 && state[c] != want) ok = false;
      }
      if (!ok) continue;
      for (int k = 0; k < 4; ++k) state[slots[e][k]] = pat >> k & 1;
      self(self, e + 1);
      for (int k = 3; k >= 0; --k) state[slots[e][k]] = saved[k];
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolygonPair> admissible_pairs(const CellEmbedding& g) {
  auto gp = std::make_shared<const CellEmbedding>(g);
  const Surface s = whole_surface(gp);
  std::vector<EdgeSet> primal, dualc;
  for_each_in_span(primal_cycle_basis(s), s.edges.size(), [&](const EdgeSet& c) { primal.push_back(c); });
  for_each_in_span(dual_cycle_basis(s), s.edges.size(), [&](const EdgeSet& c) { dualc.push_back(c); });
  std::vector<PolygonPair> out;
  for (const auto& P : primal)
    for (const auto& Q : dualc)
      if (!P.intersects(Q) && mixed_class_zero(g, P, Q)) out.push_back({P, Q});
  std::sort(out.begin(), out.end());
  return out;
}

MappingICensus mapping_I_census(const CellEmbedding& g) {
  MappingICensus c;
  std::map<PolygonPair, long> fiber;
  for (const EdgeSet& cfg : enumerate_six_vertex(g)) {
    ++c.configs;
    ++fiber[mapping_I(g, cfg)];
  }
  const auto pairs = admissible_pairs(g);
  c.pairs = static_cast<long>(pairs.size());
  for (const auto& pp : pairs) {
    const auto it = fiber.find(pp);
    if (it != fiber.end() && it->second == 2) ++c.fibers_of_two;
    else ++c.bad;
  }
  for (const auto& [pp, n] : fiber)
    if (!std::binary_search(pairs.begin(), pairs.end(), pp)) ++c.bad;
  return c;
}

}  // namespace xorloops
