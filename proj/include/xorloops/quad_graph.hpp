#pragma once

// The bipartite quadri-tiling graph. Every base edge e is replaced by a
// quadrangle decoration; decorations of consecutive edges around a corner
// are joined by an external edge.
//
// Vertex numbering is per base dart x: white W_x = 2x sits in the corner after
// x, black B_x = 2x+1 in the corner before x. The decoration of e (darts d,
// d') is the 4-cycle W_d - B_d - W_d' - B_d'.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xorloops/edge_set.hpp"
#include "xorloops/surface_graph.hpp"

namespace xorloops {

enum class QuadEdgeKind { AParallel, BParallel, External };
enum class FaceKind { PrimalVertex, DualVertex, Edge };

const char* to_string(QuadEdgeKind k);
const char* to_string(FaceKind k);

/// Oriented white to black; faces are seen along that direction.
struct QuadEdge {
  int white;
  int black;
  QuadEdgeKind kind;
  int base;  // base edge for internal edges, -1 for external ones
  int left_face;
  int right_face;
};

/// Half-edge leaving the region at a boundary vertex. Oriented like a real
/// edge (white to black), never matched, carries reference flow only.
struct QuadStub {
  int vertex;
  int left_face;
  int right_face;
};

struct QuadFace {
  FaceKind kind;
  int index;
  bool complete;
};

class QuadGraph {
 public:
  int vertex_count() const { return 4 * base_edge_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int base_edge_count() const { return base_edge_count_; }
  int genus() const { return genus_; }
  bool is_patch() const { return base_ == nullptr; }

  static bool is_white(int v) { return v % 2 == 0; }
  static int white_of(int x) { return 2 * x; }
  static int black_of(int x) { return 2 * x + 1; }

  const QuadEdge& edge(int i) const { return edges_[i]; }
  const std::vector<QuadEdge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  const std::vector<QuadStub>& stubs() const { return stubs_; }
  const QuadFace& face(int f) const { return faces_[f]; }
  const std::vector<QuadFace>& faces() const { return faces_; }
  int face_id(FaceKind kind, int index) const;
  int primal_vertex_count() const { return primal_count_; }
  int dual_vertex_count() const { return dual_count_; }

  /// Slot vertices of the decoration of e in cyclic order
  /// [B_d, W_d', B_d', W_d]; sides 0,1 and 2,3 are separated by the primal edge.
  const std::array<int, 4>& slots(int e) const { return slots_[e]; }
  /// Internal edges of the decoration: b-parallel at d, d', a-parallel at d, d'.
  const std::array<int, 4>& decoration_edges(int e) const { return decoration_[e]; }
  /// External edge incident to a vertex, or -1 at a stub.
  int external_edge(int v) const { return external_[v]; }

  /// Faces of the two primal endpoints and two dual endpoints of base edge e.
  const std::array<int, 2>& primal_ends(int e) const { return primal_ends_[e]; }
  const std::array<int, 2>& dual_ends(int e) const { return dual_ends_[e]; }

  /// The reference matching made of every b-parallel edge.
  const EdgeSet& m0() const { return m0_; }

  const std::shared_ptr<const CellEmbedding>& base() const { return base_; }
  const std::string& name() const { return name_; }

  /// Drawing positions for vertices and faces; empty when unknown.
  const std::vector<std::array<double, 2>>& vertex_xy() const { return vertex_xy_; }
  const std::vector<std::array<double, 2>>& face_xy() const { return face_xy_; }

  friend QuadGraph quad_graph(std::shared_ptr<const CellEmbedding> g);
  friend QuadGraph planar_patch(int m, int n);

 private:
  void finish();

  int base_edge_count_ = 0;
  int genus_ = 0;
  int primal_count_ = 0, dual_count_ = 0;
  std::vector<QuadEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<QuadStub> stubs_;
  std::vector<QuadFace> faces_;
  std::vector<std::array<int, 4>> slots_, decoration_;
  std::vector<int> external_;
  std::vector<std::array<int, 2>> primal_ends_, dual_ends_;
  EdgeSet m0_;
  std::shared_ptr<const CellEmbedding> base_;
  std::string name_;
  std::vector<std::array<double, 2>> vertex_xy_, face_xy_;
};

/// Quadri-tiling graph of a closed embedded graph.
QuadGraph quad_graph(std::shared_ptr<const CellEmbedding> g);

/// Simply connected square-lattice region: an m x n block of unit rhombi of
/// the diamond lattice. Lattice point (i,j) is a primal vertex when i+j is
/// even, a dual vertex otherwise; rhombus (i,j) is base edge j*m+i.
QuadGraph planar_patch(int m, int n);

/// Closed generators plus "planar_patch:m,n".
QuadGraph generate_quad(const std::string& spec);

}  // namespace xorloops
