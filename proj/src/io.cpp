#include "xorloops/io.hpp"

#include <fstream>
#include <sstream>

namespace xorloops {

Json embedding_to_json(const CellEmbedding& g) {
  Json labels = Json::object();
  labels["name"] = g.name();
  if (g.layout()) {
    labels["vertex_xy"] = g.layout()->vertex_xy;
    labels["dart_vector"] = g.layout()->dart_vector;
  }
  if (g.period()) labels["period"] = *g.period();
  return Json{{"darts", g.dart_count()}, {"alpha", g.alpha()}, {"sigma", g.sigma()}, {"labels", labels}};
}

CellEmbedding embedding_from_json(const Json& j) {
  try {
    const int n = j.at("darts").get<int>();
    auto alpha = j.at("alpha").get<std::vector<int>>();
    auto sigma = j.at("sigma").get<std::vector<int>>();
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(sigma.size()) != n)
      throw Error(ErrorCode::BadSpec, "alpha and sigma must have 'darts' entries");
    CellEmbedding g = build_embedding(std::move(alpha), std::move(sigma));
    if (j.contains("labels")) {
      const Json& l = j["labels"];
      if (l.contains("name")) g.set_name(l["name"].get<std::string>());
      if (l.contains("vertex_xy") && l.contains("dart_vector")) {
        Layout lay{l["vertex_xy"].get<std::vector<std::array<double, 2>>>(),
                   l["dart_vector"].get<std::vector<std::array<double, 2>>>()};
        std::optional<std::array<double, 2>> period;
        if (l.contains("period")) period = l["period"].get<std::array<double, 2>>();
        g.set_layout(std::move(lay), period);
      }
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("malformed embedding JSON: ") + e.what());
  }
}

CellEmbedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return embedding_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::BadSpec, std::string("invalid JSON: ") + e.what());
  }
}

AngleField angles_from_json(const Json& j, int edges) {
  AngleField a;
  try {
    for (const auto& s : j.at("theta_over_pi")) a.theta_over_pi.push_back(parse_rational(s.get<std::string>()));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("malformed angle JSON: ") + e.what());
  }
  if (static_cast<int>(a.theta_over_pi.size()) != edges)
    throw Error(ErrorCode::BadSpec, "angle field needs one entry per edge");
  for (const Rational& t : a.theta_over_pi)
    if (sgn(t) <= 0 || t >= Rational(1, 2)) throw Error(ErrorCode::OutOfRange, "theta/pi must lie in (0, 1/2)");
  return a;
}

Json chain_to_json(const EdgeSet& c) { return c.indices(); }

EdgeSet chain_from_json(const Json& j, std::size_t size) {
  auto idx = j.get<std::vector<int>>();
  for (int i : idx)
    if (i < 0 || static_cast<std::size_t>(i) >= size)
      throw Error(ErrorCode::OutOfRange, "edge index " + std::to_string(i) + " out of range");
  return EdgeSet::from_indices(size, idx);
}

CellEmbedding resolve_graph(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_embedding(spec.substr(5));
  return generate(spec);
}

QuadGraph resolve_quad(const std::string& spec) {
  if (spec.rfind("planar_patch:", 0) == 0) return generate_quad(spec);
  return quad_graph(std::make_shared<const CellEmbedding>(resolve_graph(spec)));
}

namespace {

std::vector<Rational> parse_x_values(const std::string& body, int edges) {
  std::vector<Rational> xs;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorCode::BadSpec, "unterminated weight list");
    std::istringstream is(body.substr(1, body.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ',')) xs.push_back(parse_rational(tok));
    if (static_cast<int>(xs.size()) != edges)
      throw Error(ErrorCode::BadSpec, "weight list has " + std::to_string(xs.size()) + " entries, graph has " +
                                          std::to_string(edges) + " edges");
  } else {
    xs.assign(static_cast<std::size_t>(edges), parse_rational(body));
  }
  for (const Rational& x : xs)
    if (sgn(x) <= 0 || x >= 1) throw Error(ErrorCode::OutOfRange, "x must lie in (0,1)");
  return xs;
}

}  // namespace

template <class S>
CouplingField<S> parse_weights(const std::string& spec, int edges, std::uint64_t seed) {
  if (spec.empty() || spec == "seeded") return CouplingField<S>::seeded(edges, seed);
  if (spec == "critical") {
    if constexpr (ScalarTraits<S>::exact) {
      throw Error(ErrorCode::BadSpec, "critical weights are irrational; use --mode float");
    } else {
      return critical_field(AngleField::square(edges));
    }
  }
  if (spec.rfind("x=", 0) != 0) throw Error(ErrorCode::BadSpec, "unknown weight spec '" + spec + "'");
  std::vector<S> xs;
  for (const Rational& x : parse_x_values(spec.substr(2), edges)) xs.push_back(ScalarTraits<S>::from_rational(x));
  return CouplingField<S>::from_x(xs);
}

template CouplingField<Rational> parse_weights<Rational>(const std::string&, int, std::uint64_t);
template CouplingField<double> parse_weights<double>(const std::string&, int, std::uint64_t);

}  // namespace xorloops
