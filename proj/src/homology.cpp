#include "xorloops/homology.hpp"

#include <algorithm>

namespace xorloops {

namespace {

std::vector<EdgeSet> outside_rows(const Surface& s) {
  std::vector<EdgeSet> rows;
  const std::size_t E = s.edges.size();
  for (std::size_t e = 0; e < E; ++e)
    if (!s.edges.test(e)) {
      EdgeSet r(E);
      r.set(e);
      rows.push_back(std::move(r));
    }
  return rows;
}

std::vector<EdgeSet> null_of(std::vector<EdgeSet> rows, const Surface& s) {
  for (auto& r : outside_rows(s)) rows.push_back(std::move(r));
  return z2_nullspace(rows, s.edges.size());
}

// Greedy choice of short cycles independent modulo boundaries.
std::vector<EdgeSet> pick_classes(const std::vector<EdgeSet>& cycles,
                                  const std::vector<EdgeSet>& boundaries, std::size_t E) {
  std::vector<EdgeSet> candidates;
  if (cycles.size() <= 16) {
    for_each_in_span(cycles, E, [&](const EdgeSet& c) {
      if (c.any()) candidates.push_back(c);
    });
  } else {
    candidates = cycles;
  }
  std::sort(candidates.begin(), candidates.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  Z2Echelon span(E);
  for (const auto& b : boundaries) span.insert(b);
  const std::size_t base_rank = span.rank();
  Z2Echelon full = span;
  for (const auto& c : cycles) full.insert(c);
  const std::size_t target = full.rank() - base_rank;
  std::vector<EdgeSet> chosen;
  for (const auto& c : candidates) {
    if (chosen.size() == target) break;
    if (span.insert(c)) chosen.push_back(c);
  }
  return chosen;
}

}  // namespace

bool is_polygon_config(const Chain& c, const Surface& s) {
  if (!c.edges.subset_of(s.edges)) return false;
  const auto rows = c.side == Side::Primal ? s.star_rows() : s.face_rows();
  for (const auto& r : rows)
    if (r.dot(c.edges)) return false;
  return true;
}

std::vector<EdgeSet> primal_cycle_basis(const Surface& s) { return null_of(s.star_rows(), s); }
std::vector<EdgeSet> dual_cycle_basis(const Surface& s) { return null_of(s.face_rows(), s); }

HomologyBasis compute_basis(const Surface& s) {
  const std::size_t E = s.edges.size();
  HomologyBasis b;
  b.surface = s;
  b.gamma = pick_classes(primal_cycle_basis(s), s.face_rows(), E);
  b.lambda = pick_classes(dual_cycle_basis(s), s.star_rows(), E);
  if (b.gamma.size() != b.lambda.size())
    throw Error(ErrorCode::ClassMismatch, "primal and dual homology dimensions differ");
  b.N = static_cast<int>(b.gamma.size());
  std::vector<EdgeSet> pairing;
  for (int i = 0; i < b.N; ++i) {
    EdgeSet row(static_cast<std::size_t>(b.N));
    for (int j = 0; j < b.N; ++j)
      if (b.lambda[i].dot(b.gamma[j])) row.set(static_cast<std::size_t>(j));
    pairing.push_back(row);
  }
  const auto inv = z2_inverse(pairing);
  if (!inv) throw Error(ErrorCode::ClassMismatch, "intersection pairing is degenerate");
  std::vector<EdgeSet> gamma(static_cast<std::size_t>(b.N), EdgeSet(E));
  for (int k = 0; k < b.N; ++k)
    for (int j = 0; j < b.N; ++j)
      if ((*inv)[k].test(static_cast<std::size_t>(j))) gamma[j] ^= b.gamma[k];
  b.gamma = std::move(gamma);
  return b;
}

bool intersection(const Chain& a, const Chain& b) {
  if (a.side == b.side) throw Error(ErrorCode::SameSide, "intersection needs a primal and a dual chain");
  return a.edges.dot(b.edges);
}

EdgeSet homology_class(const Chain& c, const HomologyBasis& basis) {
  if (!is_polygon_config(c, basis.surface))
    throw Error(ErrorCode::NotACycle, "chain is not a polygon configuration of the surface");
  EdgeSet coords(static_cast<std::size_t>(basis.N));
  for (int i = 0; i < basis.N; ++i) {
    const bool bit = c.side == Side::Primal ? basis.lambda[i].dot(c.edges)
                                            : c.edges.dot(basis.gamma[i]);
    if (bit) coords.set(static_cast<std::size_t>(i));
  }
  return coords;
}

EdgeSet defect_representative(const HomologyBasis& basis, const EdgeSet& cls) {
  EdgeSet rep(basis.surface.edges.size());
  cls.for_each([&](int j) { rep ^= basis.gamma[j]; });
  return rep;
}

OrthogonalityReport verify_orthogonality(const HomologyBasis& basis) {
  OrthogonalityReport r;
  r.N = basis.N;
  size_guard("homology dimension", static_cast<std::size_t>(basis.N), 8);
  const std::uint64_t M = std::uint64_t{1} << basis.N;
  for (std::uint64_t t = 0; t < M; ++t)
    for (std::uint64_t u = 0; u < M; ++u) {
      long sum = 0;
      for (std::uint64_t e = 0; e < M; ++e) {
        const int parity = (std::popcount(t & e) + std::popcount(u & e)) & 1;
        sum += parity ? -1 : 1;
      }
      ++r.checked;
      if (sum != (t == u ? static_cast<long>(M) : 0)) ++r.violations;
    }
  return r;
}

EdgeSet restrict_representative(const EdgeSet& rep, const Surface& piece) { return rep & piece.edges; }

RelativeClassKey::RelativeClassKey(const Surface& s)
    : boundaries_(s.edges.size()) {
  for (const auto& r : s.face_rows()) boundaries_.insert(r);
}

std::optional<std::vector<char>> corner_coloring(const CellEmbedding& g, const EdgeSet& primal,
                                                 const EdgeSet& dual) {
  const int n = g.dart_count();
  std::vector<char> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      // Neighbours of cell c: across primal half-edges c and sigma c, across
      // dual half-edges on the face side of c and of sigma c.
      const int sc = g.sigma(c);
      const std::array<std::pair<int, bool>, 4> nbrs{
          std::pair{g.sigma_inv(c), primal.test(static_cast<std::size_t>(g.edge_of(c)))},
          std::pair{sc, primal.test(static_cast<std::size_t>(g.edge_of(sc)))},
          std::pair{g.sigma_inv(g.alpha(c)), dual.test(static_cast<std::size_t>(g.edge_of(c)))},
          std::pair{g.alpha(sc), dual.test(static_cast<std::size_t>(g.edge_of(sc)))}};
      for (auto [nb, flip] : nbrs) {
        const char want = static_cast<char>(color[c] ^ (flip ? 1 : 0));
        if (color[nb] < 0) {
          color[nb] = want;
          stack.push_back(nb);
        } else if (color[nb] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace xorloops
