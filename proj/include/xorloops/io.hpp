#pragma once

// Serialization: embeddings and angle fields as JSON, chains as index
// arrays, distributions as CSV, and weight specifications.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "xorloops/dimer.hpp"
#include "xorloops/isoradial.hpp"
#include "xorloops/surface_graph.hpp"

namespace xorloops {

using Json = nlohmann::ordered_json;

/// {"darts", "alpha", "sigma", "labels": {"name", "vertex_xy", "dart_vector", "period"}}.
Json embedding_to_json(const CellEmbedding& g);
CellEmbedding embedding_from_json(const Json& j);
CellEmbedding load_embedding(const std::string& path);

/// {"theta_over_pi": ["1/4", ...]}.
AngleField angles_from_json(const Json& j, int edges);

Json chain_to_json(const EdgeSet& c);
EdgeSet chain_from_json(const Json& j, std::size_t size);

/// Graph spec: a generator ("torus_square:2,2") or "file:<path>".
CellEmbedding resolve_graph(const std::string& spec);
QuadGraph resolve_quad(const std::string& spec);

/// Weight spec: "x=p/q", "x=[p/q,...]", "seeded" (or empty; uses `seed`),
/// or "critical" (float only: square-lattice critical point).
template <class S>
CouplingField<S> parse_weights(const std::string& spec, int edges, std::uint64_t seed);

template <class S>
void write_distribution_csv(std::ostream& os, const std::map<EdgeSet, S>& dist) {
  os << "config,probability\n";
  for (const auto& [c, p] : dist) os << c.hex() << ',' << ScalarTraits<S>::str(p) << '\n';
}

template <class S>
Json scalar_json(const S& v) {
  return ScalarTraits<S>::str(v);
}

/// Dense Kasteleyn matrix with signs and weights kept apart.
template <class S>
Json kasteleyn_json(const QuadGraph& q, const DimerWeights<S>& w, const std::vector<int>& signs) {
  const int n = q.vertex_count() / 2;
  Json sign = Json::array(), weight = Json::array();
  std::vector<std::vector<int>> sg(n, std::vector<int>(n, 0));
  std::vector<std::vector<std::string>> wt(n, std::vector<std::string>(n, "0"));
  for (int i = 0; i < q.edge_count(); ++i) {
    const QuadEdge& e = q.edge(i);
    sg[e.white / 2][e.black / 2] = signs[i];
    wt[e.white / 2][e.black / 2] = ScalarTraits<S>::str(w.w[i]);
  }
  for (int r = 0; r < n; ++r) {
    sign.push_back(sg[r]);
    weight.push_back(wt[r]);
  }
  return Json{{"rows", n}, {"cols", n}, {"row_vertex", "white W_x = 2x"},
              {"col_vertex", "black B_x = 2x+1"}, {"sign", sign}, {"weight", weight}};
}

}  // namespace xorloops
