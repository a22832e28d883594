#pragma once

// 6-vertex configurations as subsets of medial edges. Medial edge c is the
// corner between base darts c and sigma c; around the medial vertex of base
// edge e (darts d, d') the four corners in counterclockwise order are
// [before d, after d', before d', after d].

#include <array>
#include <map>
#include <vector>

#include "xorloops/homology.hpp"
#include "xorloops/ising.hpp"

namespace xorloops {

enum class LocalType { APlus, AMinus, BPlus, BMinus, CPlus, CMinus };

const char* to_string(LocalType t);
inline bool is_a(LocalType t) { return t == LocalType::APlus || t == LocalType::AMinus; }
inline bool is_b(LocalType t) { return t == LocalType::BPlus || t == LocalType::BMinus; }

/// Present pair {0,1} or {2,3} is separated from the absent pair by the primal
/// edge (type A); {1,2} or {3,0} by the dual edge (type B).
LocalType classify_slots(const std::array<bool, 4>& present);

/// Corners around the medial vertex of e.
std::array<int, 4> medial_slots(const CellEmbedding& g, int e);

LocalType classify_vertex(const CellEmbedding& g, const EdgeSet& cfg, int e);
bool is_valid_six_vertex(const CellEmbedding& g, const EdgeSet& cfg);

struct PolygonPair {
  EdgeSet primal;
  EdgeSet dual;
  friend bool operator<(const PolygonPair& a, const PolygonPair& b) {
    if (!(a.primal == b.primal)) return a.primal < b.primal;
    return a.dual < b.dual;
  }
  friend bool operator==(const PolygonPair& a, const PolygonPair& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
};

PolygonPair mapping_I(const CellEmbedding& g, const EdgeSet& cfg);

/// The two complementary configurations over (P, P*).
std::array<EdgeSet, 2> mapping_I_fiber(const CellEmbedding& g, const EdgeSet& P, const EdgeSet& Pstar);

/// Every valid configuration of the closed surface (guarded at 24 medial edges).
std::vector<EdgeSet> enumerate_six_vertex(const CellEmbedding& g);

/// Non-crossing pairs (P, P*) of polygon configurations with null union.
std::vector<PolygonPair> admissible_pairs(const CellEmbedding& g);

struct MappingICensus {
  long configs = 0;
  long pairs = 0;
  long fibers_of_two = 0;
  long bad = 0;  // fibers of other sizes, invalid images, or unreached pairs
};
MappingICensus mapping_I_census(const CellEmbedding& g);

/// A_v, B_v per medial vertex (base edge); C_v = 1.
template <class S>
struct SixVertexWeights {
  std::vector<S> A, B;

  static SixVertexWeights free_fermion(const CouplingField<S>& J) {
    SixVertexWeights w;
    for (int e = 0; e < J.size(); ++e) {
      w.A.push_back(J.a(e));
      w.B.push_back(J.b(e));
    }
    return w;
  }
  bool is_free_fermion() const {
    for (std::size_t e = 0; e < A.size(); ++e)
      if (!ScalarTraits<S>::equal(S(A[e] * A[e] + B[e] * B[e]), ScalarTraits<S>::from_int(1)))
        return false;
    return true;
  }
};

template <class S>
S six_vertex_weight(const CellEmbedding& g, const EdgeSet& cfg, const SixVertexWeights<S>& w) {
  S p = ScalarTraits<S>::from_int(1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const LocalType t = classify_vertex(g, cfg, e);
    if (is_a(t)) p *= w.A[e];
    else if (is_b(t)) p *= w.B[e];
  }
  return p;
}

/// Z_6V summed over configurations.
template <class S>
S z_six_vertex(const CellEmbedding& g, const SixVertexWeights<S>& w) {
  S z = ScalarTraits<S>::from_int(0);
  for (const EdgeSet& cfg : enumerate_six_vertex(g)) z += six_vertex_weight(g, cfg, w);
  return z;
}

/// 2 * sum over admissible (P, P*) of prod A over P times prod B over P*.
template <class S>
S z_six_vertex_pairs(const std::vector<PolygonPair>& pairs, const SixVertexWeights<S>& w) {
  S z = ScalarTraits<S>::from_int(0);
  for (const auto& pp : pairs) z += edge_product(pp.primal, w.A) * edge_product(pp.dual, w.B);
  return 2 * z;
}

}  // namespace xorloops
