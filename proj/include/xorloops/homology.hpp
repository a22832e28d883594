#pragma once

// Z/2 chains on a surface piece. Primal chains live on the kept edges with
// parity constraints at interior vertices only (relative cycles); dual chains
// live on the same edge indices with parity constraints at every kept face.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "xorloops/edge_set.hpp"
#include "xorloops/errors.hpp"
#include "xorloops/linalg.hpp"
#include "xorloops/surface_graph.hpp"

namespace xorloops {

enum class Side { Primal, Dual };

struct Chain {
  Side side;
  EdgeSet edges;
};

/// Basis with (lambda_i | gamma_j) = delta_ij. A primal class has coordinates
/// (lambda_i | c); a dual class has coordinates (c | gamma_j).
struct HomologyBasis {
  Surface surface;
  int N = 0;
  std::vector<EdgeSet> lambda;  // dual cycles
  std::vector<EdgeSet> gamma;   // primal relative cycles
};

bool is_polygon_config(const Chain& c, const Surface& s);

/// Spanning set of the primal relative cycle space.
std::vector<EdgeSet> primal_cycle_basis(const Surface& s);
/// Spanning set of the dual cycle space.
std::vector<EdgeSet> dual_cycle_basis(const Surface& s);

HomologyBasis compute_basis(const Surface& s);

/// Parity of common edge indices; a primal edge crosses its dual once.
bool intersection(const Chain& a, const Chain& b);

/// Coordinates as a bit vector of length N. Throws NotACycle.
EdgeSet homology_class(const Chain& c, const HomologyBasis& basis);

/// The fixed representative: sum of gamma_j over set coordinates.
EdgeSet defect_representative(const HomologyBasis& basis, const EdgeSet& cls);

struct OrthogonalityReport {
  int N = 0;
  long checked = 0;
  long violations = 0;
};
OrthogonalityReport verify_orthogonality(const HomologyBasis& basis);

/// rep restricted to the edges of a piece.
EdgeSet restrict_representative(const EdgeSet& rep, const Surface& piece);

/// Canonical key of a primal relative class without a basis: the chain
/// reduced modulo kept-face boundaries.
class RelativeClassKey {
 public:
  explicit RelativeClassKey(const Surface& s);
  EdgeSet operator()(const EdgeSet& chain) const { return boundaries_.reduce(chain); }

 private:
  Z2Echelon boundaries_;
};

/// Two-colouring of corner cells (one per dart) across P (primal half-edges)
/// and P* (dual half-edges). Exists iff the class of P u P* vanishes on a
/// closed surface. Cell 0 gets colour 0.
std::optional<std::vector<char>> corner_coloring(const CellEmbedding& g, const EdgeSet& primal,
                                                 const EdgeSet& dual);

inline bool mixed_class_zero(const CellEmbedding& g, const EdgeSet& primal, const EdgeSet& dual) {
  return corner_coloring(g, primal, dual).has_value();
}

/// Visits every element of the span of `basis` (gray-code order).
template <class F>
void for_each_in_span(const std::vector<EdgeSet>& basis, std::size_t size, F&& f) {
  size_guard("cycle-space dimension", basis.size(), 24);
  EdgeSet cur(size);
  f(cur);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    f(cur);
  }
}

/// Coordinates of a class index k in (Z/2)^N.
inline EdgeSet class_bits(int N, std::uint64_t k) {
  EdgeSet c(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    if (k >> i & 1u) c.set(static_cast<std::size_t>(i));
  return c;
}

inline std::uint64_t class_index(const EdgeSet& c) {
  std::uint64_t k = 0;
  c.for_each([&](int i) { k |= std::uint64_t{1} << i; });
  return k;
}

}  // namespace xorloops
