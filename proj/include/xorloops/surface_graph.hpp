#pragma once

// Graphs cellularly embedded in closed orientable surfaces, stored as rotation
// systems. A dart is a half-edge; alpha pairs the two darts of an edge and
// sigma turns counterclockwise around the tail vertex.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xorloops/edge_set.hpp"

namespace xorloops {

/// Optional drawing hints. Vertex positions plus one displacement per dart
/// (the drawn vector from tail to head), so wrapped torus edges stay short.
struct Layout {
  std::vector<std::array<double, 2>> vertex_xy;
  std::vector<std::array<double, 2>> dart_vector;
};

class CellEmbedding {
 public:
  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
  int edge_count() const { return static_cast<int>(edge_darts_.size()); }
  int face_count() const { return static_cast<int>(face_darts_.size()); }
  int genus() const { return genus_; }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  /// Face successor: the next dart along the face on the left of `d`.
  int phi(int d) const { return sigma_inv_[alpha_[d]]; }

  int vertex_of(int d) const { return vertex_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  /// Face on the left of `d`; also the face holding the corner (d, sigma d).
  int face_of(int d) const { return face_of_[d]; }
  /// Face on the right of `d`.
  int right_face(int d) const { return face_of_[alpha_[d]]; }
  int head(int d) const { return vertex_of_[alpha_[d]]; }

  /// Darts around a vertex in counterclockwise order.
  const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[v]; }
  /// Darts along a face, each with the face on its left.
  const std::vector<int>& face_darts(int f) const { return face_darts_[f]; }
  /// The two darts of an edge; the first is the lower index.
  const std::array<int, 2>& edge_darts(int e) const { return edge_darts_[e]; }

  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& sigma() const { return sigma_; }

  /// Z/2 boundary of a face: edges met an odd number of times along it.
  EdgeSet face_boundary(int f) const;
  /// Z/2 star of a vertex: edges with exactly one end at it (loops cancel).
  EdgeSet vertex_star(int v) const;

  const std::string& name() const { return name_; }
  const std::optional<Layout>& layout() const { return layout_; }
  /// Box for periodic drawings, empty for non-periodic layouts.
  const std::optional<std::array<double, 2>>& period() const { return period_; }

  void set_name(std::string n) { name_ = std::move(n); }
  void set_layout(Layout l, std::optional<std::array<double, 2>> period = std::nullopt) {
    layout_ = std::move(l);
    period_ = period;
  }

  friend CellEmbedding build_embedding(std::vector<int> alpha, std::vector<int> sigma);

 private:
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, edge_of_, face_of_;
  std::vector<std::vector<int>> vertex_darts_, face_darts_;
  std::vector<std::array<int, 2>> edge_darts_;
  int genus_ = 0;
  std::string name_;
  std::optional<Layout> layout_;
  std::optional<std::array<double, 2>> period_;
};

/// Validates a rotation system and derives its orbits and genus. Edge indices
/// follow the lowest dart of each alpha orbit.
CellEmbedding build_embedding(std::vector<int> alpha, std::vector<int> sigma);

/// Same darts and edge indices, vertices and faces exchanged.
CellEmbedding dual(const CellEmbedding& g);

/// One vertex per edge of `g`, one edge per corner. Corner c (between c and
/// sigma c) becomes medial edge c with darts 2c (at edge(c)) and 2c+1 (at
/// edge(sigma c)).
CellEmbedding medial(const CellEmbedding& g);

/// Orientation-preserving isomorphism of rotation systems, if any, as a dart
/// map from `a` to `b`.
std::optional<std::vector<int>> find_isomorphism(const CellEmbedding& a, const CellEmbedding& b);

/// Builds a closed surface from oriented faces (vertex cycles, counterclockwise
/// seen from outside). Edge e joins the pair ranked e among sorted (min,max)
/// vertex pairs; dart 2e runs from the smaller vertex.
CellEmbedding embedding_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces);

// Generators ---------------------------------------------------------------

/// m x n square grid on the torus. Vertex (i,j) is j*m+i; its east edge is
/// 2v, north edge 2v+1; dart 2e leaves v.
CellEmbedding torus_square(int m, int n);
/// Triangular lattice on the torus with steps (1,0), (0,1), (-1,1).
CellEmbedding torus_triangular(int m, int n);
/// tetrahedron, cube, octahedron, dodecahedron or icosahedron.
CellEmbedding sphere_platonic(const std::string& name);

// Surfaces with removed faces ------------------------------------------------

/// A graph together with a kept region of faces. Primal edges are those with
/// both sides kept; interior vertices have all their edges kept. With every
/// face kept this is the closed surface itself.
struct Surface {
  std::shared_ptr<const CellEmbedding> graph;
  std::vector<char> kept_face;
  EdgeSet edges;
  std::vector<char> interior_vertex;
  std::vector<std::vector<int>> blocks;

  int kept_face_count() const;
  /// Number of boundary circles.
  int boundary_components() const;
  bool closed() const { return boundary_components() == 0; }
  /// Z/2 boundaries of kept faces restricted to `edges`.
  std::vector<EdgeSet> face_rows() const;
  /// Stars of interior vertices.
  std::vector<EdgeSet> star_rows() const;
};

Surface whole_surface(std::shared_ptr<const CellEmbedding> g);

/// Removes disjoint closed-disc blocks of faces.
Surface remove_faces(std::shared_ptr<const CellEmbedding> g, const std::vector<std::vector<int>>& blocks);

/// The piece of `g` made of an arbitrary kept face set (used for cut pieces).
Surface surface_piece(std::shared_ptr<const CellEmbedding> g, std::vector<char> kept_face);

/// Connected components of the kept faces once the dual edges of `cut` are
/// deleted, each as a piece. Ordered by lowest face index.
std::vector<Surface> cut_along(const Surface& s, const EdgeSet& cut);

// Graph specs ---------------------------------------------------------------

/// Parses "torus_square:m,n", "torus_triangular:m,n", "sphere_platonic:name".
/// planar_patch is handled by the quad graph module.
CellEmbedding generate(const std::string& spec);

}  // namespace xorloops
