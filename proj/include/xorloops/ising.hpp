#pragma once

// Ising and double Ising models on surface pieces, parameterised per edge by
// x = exp(-2J) of the crossing dual edge. Everything except the literal spin
// sum is a rational function of x; the spin sum also needs y = exp(-J).

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xorloops/errors.hpp"
#include "xorloops/homology.hpp"
#include "xorloops/scalar.hpp"

namespace xorloops {

template <class S>
struct CouplingField {
  std::vector<S> x;
  /// exp(-J) per edge when representable in S.
  std::optional<std::vector<S>> root;

  int size() const { return static_cast<int>(x.size()); }

  static CouplingField from_roots(std::vector<S> y) {
    CouplingField c;
    for (const S& v : y) c.x.push_back(S(v * v));
    c.root = std::move(y);
    return c;
  }

  static CouplingField from_x(std::vector<S> xs) {
    CouplingField c;
    std::vector<S> ys;
    bool all = true;
    for (const S& v : xs) {
      if (!(v > 0 && v < 1)) throw Error(ErrorCode::OutOfRange, "coupling x must lie in (0,1)");
      auto r = ScalarTraits<S>::sqrt(v);
      if (!r) all = false; else ys.push_back(*r);
    }
    c.x = std::move(xs);
    if (all) c.root = std::move(ys);
    return c;
  }

  /// Small-denominator y = exp(-J) per edge; x = y^2.
  static CouplingField seeded(int edges, std::uint64_t seed) {
    RationalSampler sampler(seed);
    std::vector<S> y;
    for (int e = 0; e < edges; ++e) y.push_back(ScalarTraits<S>::from_rational(sampler.unit_interval()));
    return from_roots(std::move(y));
  }

  static CouplingField uniform(int edges, const S& x) { return from_x(std::vector<S>(edges, x)); }

  const S& y(int e) const {
    if (!root) throw Error(ErrorCode::IrrationalWeight, "exp(-J) is not representable; supply squares");
    return (*root)[e];
  }
  S tanh_j(int e) const { return S((1 - x[e]) / (1 + x[e])); }
  S cosh_j(int e) const { return S((1 / y(e) + y(e)) / 2); }
  /// cosh(J)/exp(J), rational in x.
  S cosh_over_exp(int e) const { return S((1 + x[e]) / 2); }
  S cosh_2j(int e) const { return S((1 + x[e] * x[e]) / (2 * x[e])); }
  /// Free-fermion dimer weights attached to the decoration of e.
  S a(int e) const { return S(2 * x[e] / (1 + x[e] * x[e])); }
  S b(int e) const { return S((1 - x[e] * x[e]) / (1 + x[e] * x[e])); }
  CouplingField doubled() const {
    CouplingField c;
    for (const S& v : x) c.x.push_back(S(v * v));
    if (root) c.root = x;
    return c;
  }
};

template <class S>
S edge_product(const EdgeSet& edges, const std::vector<S>& w) {
  S p = ScalarTraits<S>::from_int(1);
  edges.for_each([&](int e) { p *= w[e]; });
  return p;
}

template <class S, class F>
S edge_product_fn(const EdgeSet& edges, F&& f) {
  S p = ScalarTraits<S>::from_int(1);
  edges.for_each([&](int e) { p *= f(e); });
  return p;
}

// --- single Ising ----------------------------------------------------------

/// Literal sum over spins on kept faces, couplings negated on dual edges
/// crossing `defect`.
template <class S>
S z_spin(const Surface& s, const CouplingField<S>& J, const EdgeSet& defect) {
  const CellEmbedding& g = *s.graph;
  std::vector<int> spin_of(g.face_count(), -1);
  int V = 0;
  for (int f = 0; f < g.face_count(); ++f)
    if (s.kept_face[f]) spin_of[f] = V++;
  size_guard("number of dual vertices", static_cast<std::size_t>(V), 24);
  struct Bond { int u, v; S agree, disagree; };
  std::vector<Bond> bonds;
  s.edges.for_each([&](int e) {
    const int d = g.edge_darts(e)[0];
    const S up = 1 / J.y(e), down = J.y(e);
    const bool neg = defect.test(static_cast<std::size_t>(e));
    bonds.push_back({spin_of[g.face_of(d)], spin_of[g.right_face(d)], neg ? down : up, neg ? up : down});
  });
  S total = ScalarTraits<S>::from_int(0);
  for (std::uint64_t cfg = 0; cfg < (std::uint64_t{1} << V); ++cfg) {
    S term = ScalarTraits<S>::from_int(1);
    for (const Bond& b : bonds) term *= ((cfg >> b.u ^ cfg >> b.v) & 1u) ? b.disagree : b.agree;
    total += term;
  }
  return total;
}

/// Z_LT per relative class index, by enumerating the relative cycle space.
template <class S>
std::vector<S> z_low_temp_all(const HomologyBasis& basis, const std::vector<S>& x) {
  std::vector<S> z(std::size_t{1} << basis.N, ScalarTraits<S>::from_int(0));
  const auto cycles = primal_cycle_basis(basis.surface);
  for_each_in_span(cycles, basis.surface.edges.size(), [&](const EdgeSet& c) {
    std::uint64_t k = 0;
    for (int i = 0; i < basis.N; ++i)
      if (basis.lambda[i].dot(c)) k |= std::uint64_t{1} << i;
    z[k] += edge_product(c, x);
  });
  return z;
}

/// Z_HT per dual class index.
template <class S>
std::vector<S> z_high_temp_all(const HomologyBasis& basis, const CouplingField<S>& J) {
  std::vector<S> t;
  for (int e = 0; e < J.size(); ++e) t.push_back(J.tanh_j(e));
  std::vector<S> z(std::size_t{1} << basis.N, ScalarTraits<S>::from_int(0));
  const auto cycles = dual_cycle_basis(basis.surface);
  for_each_in_span(cycles, basis.surface.edges.size(), [&](const EdgeSet& c) {
    std::uint64_t k = 0;
    for (int j = 0; j < basis.N; ++j)
      if (c.dot(basis.gamma[j])) k |= std::uint64_t{1} << j;
    z[k] += edge_product(c, t);
  });
  return z;
}

template <class S>
S z_low_temp(const HomologyBasis& basis, const CouplingField<S>& J, const EdgeSet& cls) {
  return z_low_temp_all(basis, J.x)[class_index(cls)];
}

template <class S>
S z_high_temp(const HomologyBasis& basis, const CouplingField<S>& J, const EdgeSet& cls) {
  return z_high_temp_all(basis, J)[class_index(cls)];
}

/// Z_LT of a piece for the class of `rep`, with weights `x`, without a basis.
template <class S>
S z_low_temp_of_rep(const Surface& piece, const std::vector<S>& x, const EdgeSet& rep) {
  const RelativeClassKey key(piece);
  const EdgeSet target = key(rep & piece.edges);
  S z = ScalarTraits<S>::from_int(0);
  for_each_in_span(primal_cycle_basis(piece), piece.edges.size(), [&](const EdgeSet& c) {
    if (key(c) == target) z += edge_product(c, x);
  });
  return z;
}

inline int sign_of(const EdgeSet& a, std::uint64_t b) {
  return std::popcount(class_index(a) & b) & 1 ? -1 : 1;
}

struct Comparison {
  std::string lhs, rhs;
  bool equal;
};

template <class S>
Comparison compare(const S& lhs, const S& rhs) {
  return {ScalarTraits<S>::str(lhs), ScalarTraits<S>::str(rhs), ScalarTraits<S>::equal(lhs, rhs)};
}

/// Per-class checks of the low- and high-temperature expansions and of both
/// directions of the duality relation.
template <class S>
struct ExpansionChecks {
  std::vector<Comparison> low_temp, high_temp, duality_forward, duality_inverse;
};

template <class S>
ExpansionChecks<S> expansion_checks(const HomologyBasis& basis, const CouplingField<S>& J,
                                    bool with_spins = true) {
  using T = ScalarTraits<S>;
  ExpansionChecks<S> out;
  const Surface& s = basis.surface;
  const auto zlt = z_low_temp_all(basis, J.x);
  const auto zht = z_high_temp_all(basis, J);
  const int V = s.kept_face_count();
  const std::uint64_t M = std::uint64_t{1} << basis.N;
  S cosh_over_exp = T::from_int(1);
  s.edges.for_each([&](int e) { cosh_over_exp *= J.cosh_over_exp(e); });
  for (std::uint64_t k = 0; k < M; ++k) {
    const EdgeSet eps = class_bits(basis.N, k);
    S dual_sum = T::from_int(0);
    for (std::uint64_t t = 0; t < M; ++t)
      dual_sum += (std::popcount(t & k) & 1) ? S(-zht[t]) : zht[t];
    if (with_spins) {
      const S spin = z_spin(s, J, defect_representative(basis, eps));
      S ej = T::from_int(2), ch = pow2<S>(V);
      s.edges.for_each([&](int e) {
        ej /= J.y(e);
        ch *= J.cosh_j(e);
      });
      out.low_temp.push_back(compare<S>(spin, S(ej * zlt[k])));
      out.high_temp.push_back(compare<S>(spin, S(ch * dual_sum)));
    }
    out.duality_forward.push_back(compare<S>(zlt[k], S(pow2<S>(V - 1) * cosh_over_exp * dual_sum)));
  }
  for (std::uint64_t t = 0; t < M; ++t) {
    S sum = T::from_int(0);
    for (std::uint64_t k = 0; k < M; ++k) sum += (std::popcount(t & k) & 1) ? S(-zlt[k]) : zlt[k];
    const S rhs = pow2<S>(-basis.N - V + 1) / cosh_over_exp * sum;
    out.duality_inverse.push_back(compare<S>(zht[t], rhs));
  }
  return out;
}

// --- double Ising on a closed surface --------------------------------------

/// mono = symmetric difference of a same-class pair.
inline EdgeSet xor_loops(const HomologyBasis& basis, const EdgeSet& red, const EdgeSet& blue) {
  if (!(homology_class({Side::Primal, red}, basis) == homology_class({Side::Primal, blue}, basis)))
    throw Error(ErrorCode::ClassMismatch, "red and blue configurations lie in different classes");
  return red ^ blue;
}

inline EdgeSet bi_edges(const HomologyBasis& basis, const EdgeSet& red, const EdgeSet& blue) {
  if (!(homology_class({Side::Primal, red}, basis) == homology_class({Side::Primal, blue}, basis)))
    throw Error(ErrorCode::ClassMismatch, "red and blue configurations lie in different classes");
  return red & blue;
}

/// Pieces of the surface cut along a null-homologous polygon configuration.
inline std::vector<Surface> components_of(const HomologyBasis& basis, const EdgeSet& P) {
  if (homology_class({Side::Primal, P}, basis).any())
    throw Error(ErrorCode::NotNullHomologous, "cut configuration is not null-homologous");
  return cut_along(basis.surface, P);
}

/// All polygon configurations of the closed surface grouped by class index.
inline std::vector<std::vector<EdgeSet>> cycles_by_class(const HomologyBasis& basis) {
  std::vector<std::vector<EdgeSet>> out(std::size_t{1} << basis.N);
  for_each_in_span(primal_cycle_basis(basis.surface), basis.surface.edges.size(), [&](const EdgeSet& c) {
    out[class_index(homology_class({Side::Primal, c}, basis))].push_back(c);
  });
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

inline std::vector<EdgeSet> dual_cycles_by_zero_class(const HomologyBasis& basis) {
  std::vector<EdgeSet> out;
  for_each_in_span(dual_cycle_basis(basis.surface), basis.surface.edges.size(), [&](const EdgeSet& c) {
    if (homology_class({Side::Dual, c}, basis).empty()) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// C = (2 prod exp J)^2 = 4 prod 1/x over all edges.
template <class S>
S double_constant(const Surface& s, const CouplingField<S>& J) {
  S c = ScalarTraits<S>::from_int(4);
  s.edges.for_each([&](int e) { c /= J.x[e]; });
  return c;
}

/// W^eps[mono = P] from the cut-piece formula.
template <class S>
S w_mono(const HomologyBasis& basis, const CouplingField<S>& J, const EdgeSet& P, const EdgeSet& eps) {
  const auto pieces = components_of(basis, P);
  const EdgeSet rep = defect_representative(basis, eps);
  const auto x2 = J.doubled().x;
  S w = double_constant(basis.surface, J) / 2 * edge_product(P, J.x);
  for (const Surface& piece : pieces) w *= 2 * z_low_temp_of_rep(piece, x2, rep);
  return w;
}

/// W^eps[mono = P] by summing over same-class pairs.
template <class S>
S w_mono_pairs(const std::vector<EdgeSet>& same_class, const Surface& s, const CouplingField<S>& J,
               const EdgeSet& P) {
  S w = ScalarTraits<S>::from_int(0);
  for (const EdgeSet& red : same_class)
    for (const EdgeSet& blue : same_class)
      if ((red ^ blue) == P) w += edge_product(red, J.x) * edge_product(blue, J.x);
  return w * double_constant(s, J);
}

/// C_I = 2^{|V*|+2g+1} prod cosh 2J.
template <class S>
S mixed_constant(const Surface& s, const CouplingField<S>& J) {
  S c = pow2<S>(s.kept_face_count() + 2 * s.graph->genus() + 1);
  s.edges.for_each([&](int e) { c *= J.cosh_2j(e); });
  return c;
}

/// W[mono = P] from the mixed contour expansion.
template <class S>
S mixed_contour_weight(const HomologyBasis& basis, const CouplingField<S>& J, const EdgeSet& P,
                       const std::vector<EdgeSet>& dual_zero) {
  if (homology_class({Side::Primal, P}, basis).any())
    throw Error(ErrorCode::NotNullHomologous, "mixed contour weight needs a null-homologous P");
  S sum = ScalarTraits<S>::from_int(0);
  for (const EdgeSet& ps : dual_zero)
    if (!ps.intersects(P)) sum += edge_product_fn<S>(ps, [&](int e) { return J.b(e); });
  return mixed_constant(basis.surface, J) * edge_product_fn<S>(P, [&](int e) { return J.a(e); }) * sum;
}

/// Z_dising = sum over eps of (Z_spin^eps)^2, through the low-temperature form.
template <class S>
S z_double_ising(const HomologyBasis& basis, const CouplingField<S>& J) {
  S total = ScalarTraits<S>::from_int(0);
  for (const S& z : z_low_temp_all(basis, J.x)) total += z * z;
  return total * double_constant(basis.surface, J);
}

/// P(XOR = P) over P in P^0, either through pair enumeration or through the
/// mixed contour expansion.
enum class XorRoute { Pairs, MixedContour };

template <class S>
std::map<EdgeSet, S> xor_distribution(const HomologyBasis& basis, const CouplingField<S>& J,
                                      XorRoute route) {
  const auto classes = cycles_by_class(basis);
  std::map<EdgeSet, S> w;
  for (const EdgeSet& P : classes[0]) w[P] = ScalarTraits<S>::from_int(0);
  if (route == XorRoute::Pairs) {
    const S C = double_constant(basis.surface, J);
    for (const auto& same : classes)
      for (const EdgeSet& red : same)
        for (const EdgeSet& blue : same)
          w[red ^ blue] += C * edge_product(red, J.x) * edge_product(blue, J.x);
  } else {
    const auto dual_zero = dual_cycles_by_zero_class(basis);
    for (auto& [P, v] : w) v = mixed_contour_weight(basis, J, P, dual_zero);
  }
  S total = ScalarTraits<S>::from_int(0);
  for (const auto& [P, v] : w) total += v;
  for (auto& [P, v] : w) v /= total;
  return w;
}

/// Pair counting behind the bichromatic lemma for one (P, eps).
struct BiCount {
  int pieces = 0;
  long admissible_tuples = 0;
  long realised_tuples = 0;
  long bad_tuples = 0;      // realised but outside the admissible classes
  long wrong_multiplicity = 0;
};

BiCount bi_count(const HomologyBasis& basis, const std::vector<EdgeSet>& same_class, const EdgeSet& P,
                 const EdgeSet& eps);

}  // namespace xorloops
