#include "xorloops/ising.hpp"

namespace xorloops {

BiCount bi_count(const HomologyBasis& basis, const std::vector<EdgeSet>& same_class, const EdgeSet& P,
                 const EdgeSet& eps) {
  BiCount out;
  const auto pieces = components_of(basis, P);
  out.pieces = static_cast<int>(pieces.size());
  const EdgeSet rep = defect_representative(basis, eps);
  std::vector<RelativeClassKey> keys;
  std::vector<EdgeSet> targets;
  out.admissible_tuples = 1;
  for (const Surface& piece : pieces) {
    keys.emplace_back(piece);
    targets.push_back(keys.back()(rep & piece.edges));
    long count = 0;
    for_each_in_span(primal_cycle_basis(piece), piece.edges.size(), [&](const EdgeSet& c) {
      if (keys.back()(c) == targets.back()) ++count;
    });
    out.admissible_tuples *= count;
  }
  std::map<std::vector<EdgeSet>, long> realised;
  for (const EdgeSet& red : same_class)
    for (const EdgeSet& blue : same_class) {
      if (!((red ^ blue) == P)) continue;
      const EdgeSet bi = red & blue;
      std::vector<EdgeSet> tuple;
      for (const Surface& piece : pieces) tuple.push_back(bi & piece.edges);
      ++realised[tuple];
    }
  out.realised_tuples = static_cast<long>(realised.size());
  const long expected = 1L << (pieces.size() - 1);
  for (const auto& [tuple, count] : realised) {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (!(keys[i](tuple[i]) == targets[i])) {
        ++out.bad_tuples;
        break;
      }
    if (count != expected) ++out.wrong_multiplicity;
  }
  return out;
}

}  // namespace xorloops
