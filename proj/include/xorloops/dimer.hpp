#pragma once

// Dimers on the quadri-tiling graph: matchings, Mapping II to the 6-vertex
// model, homology sectors relative to M0, and Kasteleyn matrices.

#include <map>
#include <vector>

#include "xorloops/homology.hpp"
#include "xorloops/ising.hpp"
#include "xorloops/linalg.hpp"
#include "xorloops/quad_graph.hpp"
#include "xorloops/six_vertex.hpp"

namespace xorloops {

template <class S>
struct DimerWeights {
  std::vector<S> w;  // per quad edge

  static DimerWeights from_ab(const QuadGraph& q, const std::vector<S>& a, const std::vector<S>& b) {
    DimerWeights d;
    for (const QuadEdge& e : q.edges()) {
      switch (e.kind) {
        case QuadEdgeKind::AParallel: d.w.push_back(a[e.base]); break;
        case QuadEdgeKind::BParallel: d.w.push_back(b[e.base]); break;
        case QuadEdgeKind::External: d.w.push_back(ScalarTraits<S>::from_int(1)); break;
      }
    }
    return d;
  }
  static DimerWeights from_coupling(const QuadGraph& q, const CouplingField<S>& J) {
    const auto sv = SixVertexWeights<S>::free_fermion(J);
    return from_ab(q, sv.A, sv.B);
  }
};

bool is_perfect_matching(const QuadGraph& q, const EdgeSet& m);

/// All perfect matchings in lexicographic search order (guarded at 64
/// vertices).
std::vector<EdgeSet> enumerate_matchings(const QuadGraph& q);

/// Externally matched state of the four slots of each decoration.
std::vector<std::array<bool, 4>> slot_states(const QuadGraph& q, const EdgeSet& m);

/// Medial configuration: corner c present iff the external edge at W_c is
/// matched.
EdgeSet mapping_II(const QuadGraph& q, const EdgeSet& m);

/// (poly1, poly2) read from the local 6-vertex types.
PolygonPair poly(const QuadGraph& q, const EdgeSet& m);

/// poly1 as the decorations with an odd number of matched a-parallel edges.
EdgeSet poly1_by_parity(const QuadGraph& q, const EdgeSet& m);

/// Dual cycle lambda_eps = sum of lambda_i over set coordinates.
EdgeSet lambda_of(const HomologyBasis& basis, const EdgeSet& eps);

/// Class of the loops of M0 u m: parity of a-parallel edges over each lambda_i.
EdgeSet sector_of(const QuadGraph& q, const HomologyBasis& basis, const EdgeSet& m);

template <class S>
S matching_weight(const EdgeSet& m, const DimerWeights<S>& w) {
  return edge_product(m, w.w);
}

template <class S>
std::vector<S> z_quadri_sectors(const QuadGraph& q, const HomologyBasis& basis,
                                const std::vector<EdgeSet>& matchings, const DimerWeights<S>& w) {
  std::vector<S> z(std::size_t{1} << basis.N, ScalarTraits<S>::from_int(0));
  for (const EdgeSet& m : matchings) z[class_index(sector_of(q, basis, m))] += matching_weight(m, w);
  return z;
}

/// Sum over matchings of the image configuration minus its 6-vertex weight,
/// as a list of (config, dimer sum, 6V weight) mismatches.
template <class S>
long mapping_II_weight_mismatches(const QuadGraph& q, const std::vector<EdgeSet>& matchings,
                                  const DimerWeights<S>& w, const SixVertexWeights<S>& sv) {
  std::map<EdgeSet, S> by_config;
  for (const EdgeSet& m : matchings) {
    auto [it, fresh] = by_config.try_emplace(mapping_II(q, m), ScalarTraits<S>::from_int(0));
    it->second += matching_weight(m, w);
  }
  long bad = 0;
  for (const auto& [cfg, sum] : by_config)
    if (!ScalarTraits<S>::equal(sum, six_vertex_weight(*q.base(), cfg, sv))) ++bad;
  return bad;
}

// --- Kasteleyn --------------------------------------------------------------

/// Signs (+1/-1 per quad edge) with #minus = deg/2 - 1 (mod 2) around every
/// complete face and + on every M0 edge. Throws SignSystemInfeasible.
std::vector<int> kasteleyn_signs(const QuadGraph& q);

/// Faces whose sign condition fails.
std::vector<int> kasteleyn_face_violations(const QuadGraph& q, const std::vector<int>& signs);

/// Signs of K^(eps): both a-parallel edges of every decoration on lambda_eps
/// flipped.
std::vector<int> twisted_signs(const QuadGraph& q, std::vector<int> signs, const EdgeSet& flip_bases);

/// Sign of the term of m in det K for the given edge signs (rows white,
/// columns black, W_x -> row x, B_y -> column y).
int matching_sign(const QuadGraph& q, const EdgeSet& m, const std::vector<int>& signs);

template <class S>
DenseMatrix<S> kasteleyn_matrix(const QuadGraph& q, const DimerWeights<S>& w, const std::vector<int>& signs) {
  const std::size_t n = static_cast<std::size_t>(q.vertex_count() / 2);
  DenseMatrix<S> K(n, n);
  for (int i = 0; i < q.edge_count(); ++i) {
    const QuadEdge& e = q.edge(i);
    const S v = signs[i] > 0 ? w.w[i] : S(-w.w[i]);
    K(static_cast<std::size_t>(e.white / 2), static_cast<std::size_t>(e.black / 2)) += v;
  }
  return K;
}

/// s_{alpha,eps} from a per-matching audit. `constant` is false when some
/// sector mixes signs.
struct SignTable {
  int N = 0;
  std::vector<std::vector<int>> s;  // [alpha][eps]
  std::vector<char> empty_sector;
  bool constant = true;
  long audited = 0;
};

SignTable sign_table(const QuadGraph& q, const HomologyBasis& basis, const std::vector<EdgeSet>& matchings,
                     const std::vector<int>& base_signs);

template <class S>
std::vector<S> kasteleyn_determinants(const QuadGraph& q, const HomologyBasis& basis,
                                      const DimerWeights<S>& w, const std::vector<int>& base_signs) {
  std::vector<S> dets;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << basis.N); ++k) {
    const auto signs = twisted_signs(q, base_signs, lambda_of(basis, class_bits(basis.N, k)));
    dets.push_back(determinant(kasteleyn_matrix(q, w, signs)));
  }
  return dets;
}

/// Z^(alpha) recovered from the 2^N determinants.
template <class S>
std::vector<S> sector_from_determinants(const SignTable& table, const std::vector<S>& dets) {
  const std::size_t M = dets.size();
  DenseMatrix<S> A(M, M);
  for (std::size_t eps = 0; eps < M; ++eps)
    for (std::size_t alpha = 0; alpha < M; ++alpha)
      A(eps, alpha) = ScalarTraits<S>::from_int(table.s[alpha][eps]);
  auto z = solve(A, dets);
  if (!z) throw Error(ErrorCode::SingularSignTable, "sign table is singular");
  return *z;
}

/// P0_quadri[poly1 = P] over the zero sector.
template <class S>
std::map<EdgeSet, S> restricted_distribution(const QuadGraph& q, const HomologyBasis& basis,
                                             const std::vector<EdgeSet>& matchings,
                                             const DimerWeights<S>& w) {
  std::map<EdgeSet, S> dist;
  S total = ScalarTraits<S>::from_int(0);
  for (const EdgeSet& m : matchings) {
    if (sector_of(q, basis, m).any()) continue;
    const S wm = matching_weight(m, w);
    auto [it, fresh] = dist.try_emplace(poly(q, m).primal, ScalarTraits<S>::from_int(0));
    it->second += wm;
    total += wm;
  }
  for (auto& [P, v] : dist) v /= total;
  return dist;
}

}  // namespace xorloops
