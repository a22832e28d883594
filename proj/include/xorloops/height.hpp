#pragma once

// Height functions of perfect matchings on simply connected quadri-tiling
// regions. Crossing an edge oriented white to black from its left face to
// its right face (black on the left of the crossing) raises the height by
// alpha_M(e) - alpha_0(e).

#include <iosfwd>
#include <vector>

#include "xorloops/isoradial.hpp"
#include "xorloops/quad_graph.hpp"
#include "xorloops/scalar.hpp"

namespace xorloops {

enum class HeightKind { M0Flow, ThetaPiFlow };

const char* to_string(HeightKind k);

struct HeightField {
  std::vector<Rational> values;  // per quad face id
  int base_face = 0;
  HeightKind kind = HeightKind::ThetaPiFlow;
};

/// Throws NotAMatching, or NotSimplyConnected when the region has periods.
HeightField height_field(const QuadGraph& q, const EdgeSet& m, HeightKind kind,
                         const AngleField& angles);
HeightField height_field(const QuadGraph& q, const EdgeSet& m, HeightKind kind);

/// Heights on primal (or dual) vertex faces, indexed by vertex.
std::vector<Rational> restrict_heights(const QuadGraph& q, const HeightField& h, FaceKind side);

/// Base edges across which the restriction to `side` jumps: the dual-vertex
/// restriction yields a primal chain, the primal one a dual chain.
EdgeSet level_lines(const QuadGraph& q, const HeightField& h, FaceKind side);

/// sum_v area(v) h(v) phi(v) over dual-vertex faces, areas scaled by mesh^2.
double pair_with_test_function(const QuadGraph& q, const HeightField& h, const std::vector<double>& phi,
                               double mesh);

void write_heights_csv(std::ostream& os, const QuadGraph& q, const HeightField& h);

}  // namespace xorloops
