#pragma once

// Identity checks by exhaustive enumeration, grouped into suites. Every
// report compares two computed sides; in exact mode "pass" means equality,
// in float mode relative error at most 1e-9.

#include <cstdint>
#include <string>
#include <vector>

#include "xorloops/scalar.hpp"

namespace xorloops {

struct VerifyReport {
  std::string check;     // e.g. "lowtemp[seed=3]"
  std::string identity;  // what is being compared
  std::string mode;
  std::string lhs, rhs;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  std::string graph = "torus_square:2,2";
  std::vector<std::vector<int>> blocks;  // removed face blocks; empty = closed
  std::string weights;                   // empty = seeded fields
  std::uint64_t seed = 1;
  int fields = 1;  // seeded fields seed, seed+1, ...
  Mode mode = Mode::Exact;
};

const std::vector<std::string>& suite_names();

/// Throws BadSpec for unknown suites; "all" picks the suites that apply to
/// the graph (closed surfaces or planar patches).
std::vector<VerifyReport> run_suite(const std::string& suite, const VerifyOptions& opts);

/// "0|5,6" -> {{0}, {5, 6}}.
std::vector<std::vector<int>> parse_blocks(const std::string& text);

}  // namespace xorloops
