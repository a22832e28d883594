#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "xorloops/io.hpp"
#include "xorloops/verify.hpp"

using namespace xorloops;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("embedding JSON round trip") {
  for (const char* spec : {"torus_square:2,3", "torus_triangular:2,2", "sphere_platonic:octahedron"}) {
    CAPTURE(spec);
    const CellEmbedding g = generate(spec);
    const Json j = embedding_to_json(g);
    CHECK(j.at("darts") == g.dart_count());
    const CellEmbedding back = embedding_from_json(Json::parse(j.dump()));
    CHECK(back.alpha() == g.alpha());
    CHECK(back.sigma() == g.sigma());
    CHECK(back.name() == g.name());
    CHECK(back.genus() == g.genus());
    CHECK(back.layout().has_value() == g.layout().has_value());
  }
}

TEST_CASE("embedding files") {
  const std::string path = "xorloops_io_test.json";
  {
    std::ofstream out(path);
    out << embedding_to_json(torus_square(1, 2)).dump(2);
  }
  CHECK(resolve_graph("file:" + path).edge_count() == 4);
  CHECK(resolve_quad("file:" + path).vertex_count() == 16);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK(code_of([&] { load_embedding(path); }) == ErrorCode::BadSpec);
  std::remove(path.c_str());
  CHECK(code_of([&] { load_embedding(path); }) == ErrorCode::Io);

  CHECK(code_of([] { embedding_from_json(Json{{"darts", 2}, {"alpha", {1, 0}}}); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { embedding_from_json(Json{{"darts", 3}, {"alpha", {1, 0}}, {"sigma", {1, 0}}}); }) ==
        ErrorCode::BadSpec);
  CHECK(code_of([] { embedding_from_json(Json{{"darts", 2}, {"alpha", {0, 1}}, {"sigma", {1, 0}}}); }) ==
        ErrorCode::NonInvolution);
  CHECK(code_of([] { resolve_graph("klein_bottle:2"); }) == ErrorCode::UnknownKind);
}

TEST_CASE("angle fields") {
  const AngleField a = angles_from_json(Json{{"theta_over_pi", {"1/4", "1/3", "1/8"}}}, 3);
  CHECK(a.theta_over_pi[1] == Rational(1, 3));
  CHECK(code_of([] { angles_from_json(Json{{"theta_over_pi", {"1/4"}}}, 2); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { angles_from_json(Json{{"theta_over_pi", {"1/2"}}}, 1); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { angles_from_json(Json{{"theta_over_pi", {"0"}}}, 1); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { angles_from_json(Json{{"angles", {}}}, 0); }) == ErrorCode::BadSpec);
}

TEST_CASE("chains") {
  const EdgeSet c = EdgeSet::from_indices(10, {1, 4, 9});
  CHECK(chain_to_json(c).dump() == "[1,4,9]");
  CHECK(chain_from_json(Json::parse("[9,1,4]"), 10) == c);
  CHECK(chain_from_json(Json::array(), 10).empty());
  CHECK(code_of([] { chain_from_json(Json::parse("[10]"), 10); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { chain_from_json(Json::parse("[-1]"), 10); }) == ErrorCode::OutOfRange);
}

TEST_CASE("weight specifications") {
  const auto seeded = parse_weights<Rational>("", 4, 9);
  CHECK(seeded.x == CouplingField<Rational>::seeded(4, 9).x);
  CHECK(parse_weights<Rational>("seeded", 4, 9).x == seeded.x);

  const auto uni = parse_weights<Rational>("x=1/3", 4, 0);
  CHECK(uni.x == std::vector<Rational>(4, Rational(1, 3)));
  const auto list = parse_weights<Rational>("x=[1/2,1/3,1/4]", 3, 0);
  CHECK(list.x == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 4)});

  const auto crit = parse_weights<double>("critical", 2, 0);
  CHECK(crit.x[0] == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(parse_weights<double>("x=1/4", 1, 0).x[0] == 0.25);

  CHECK(code_of([] { parse_weights<Rational>("critical", 2, 0); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_weights<Rational>("x=[1/2,1/3]", 3, 0); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_weights<Rational>("x=[1/2,1/3", 2, 0); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_weights<Rational>("x=3/2", 2, 0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { parse_weights<Rational>("x=0", 2, 0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { parse_weights<Rational>("y=1/2", 2, 0); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_weights<Rational>("x=abc", 2, 0); }) == ErrorCode::BadSpec);
}

TEST_CASE("face blocks") {
  CHECK(parse_blocks("").empty());
  CHECK(parse_blocks("0") == std::vector<std::vector<int>>{{0}});
  CHECK(parse_blocks("0|5,6") == std::vector<std::vector<int>>{{0}, {5, 6}});
  CHECK(code_of([] { parse_blocks("0||1"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_blocks("a"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_blocks("1x"); }) == ErrorCode::BadSpec);
}

TEST_CASE("distribution CSV") {
  std::map<EdgeSet, Rational> dist{{EdgeSet(8), Rational(2, 3)}, {EdgeSet::from_indices(8, {0, 5}), Rational(1, 3)}};
  std::ostringstream os;
  write_distribution_csv(os, dist);
  CHECK(os.str() == "config,probability\n00,2/3\n21,1/3\n");
}

TEST_CASE("Kasteleyn matrix JSON") {
  const QuadGraph q = planar_patch(1, 1);
  const auto w = DimerWeights<Rational>::from_ab(q, {Rational(3, 5)}, {Rational(4, 5)});
  const auto signs = kasteleyn_signs(q);
  const Json j = kasteleyn_json(q, w, signs);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 2);
  int nonzero = 0, minus = 0;
  for (const auto& row : j.at("sign"))
    for (const auto& s : row) {
      nonzero += s.get<int>() != 0;
      minus += s.get<int>() < 0;
    }
  CHECK(nonzero == 4);
  CHECK(minus % 2 == 1);  // a 4-face carries an odd number of minus signs
  const DenseMatrix<Rational> K = kasteleyn_matrix(q, w, signs);
  CHECK(abs(determinant(K)) == Rational(9, 25) + Rational(16, 25));
}

TEST_CASE("verify suites") {
  VerifyOptions o;
  o.graph = "torus_square:1,1";
  o.fields = 3;
  for (const char* s : {"lowtemp", "hightemp", "duality", "mixed", "sixv", "dimer-law", "kasteleyn"}) {
    CAPTURE(s);
    const auto reports = run_suite(s, o);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) CHECK(r.pass);
  }
  o.graph = "planar_patch:2,2";
  for (const auto& r : run_suite("all", o)) CHECK(r.pass);
  o.mode = Mode::Float;
  o.graph = "torus_square:2,2";
  for (const auto& r : run_suite("dimer-law", o)) CHECK(r.pass);
  CHECK(code_of([&] { run_suite("nonsense", o); }) == ErrorCode::BadSpec);
  CHECK(suite_names().back() == "all");
}
