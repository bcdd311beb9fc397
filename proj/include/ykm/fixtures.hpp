#pragma once

#include <string>
#include <vector>

#include "ykm/kgraph.hpp"

namespace ykm {

enum class FixStatus { Pass, Flagged, Fail };

struct FixtureResult {
  std::string name;
  FixStatus status = FixStatus::Pass;
  std::string message;
};

// scope: all | classical | exceptional | magic
std::vector<FixtureResult> run_fixtures(const std::string& scope,
                                        std::size_t cap = kDefaultWeightCap);

inline bool fixtures_ok(const std::vector<FixtureResult>& rs) {
  for (const auto& r : rs)
    if (r.status == FixStatus::Fail) return false;
  return true;
}

// --- helpers shared with the test suites ---

struct ExpectedMember {
  std::vector<Weight> labels;  // per simple factor
  int parent;
};

struct ExpectedGraph {
  std::vector<std::vector<ExpectedMember>> nodes;
  // (i, j, delta) with delta = C(i-side) - C(j-side); compared modulo flip
  std::vector<std::tuple<int, int, Rat>> edges;
};

// empty string on match, else a mismatch description
std::string compare_graph(const BranchingGraph& g, const ExpectedGraph& want);

// is the multiset of member labels obtainable as the full graph, a component,
// or a truncation survivor set
bool truncation_obtainable(const BranchingGraph& g,
                           const std::vector<std::vector<Weight>>& member_labels);

}  // namespace ykm
