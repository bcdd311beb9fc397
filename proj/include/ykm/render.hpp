#pragma once

#include <string>

#include "ykm/kgraph.hpp"

namespace ykm {

enum class Format { Text, Dot, Json };

Format parse_format(const std::string& s);

std::string render_weight(LieType t, const Weight& w);       // "2l1+l3" with l = lambda
std::string render_hirrep(const HAlgebra& h, const HIrrep& w);  // "(λ1,1)"

// chain-style text, DOT digraph, or the structured JSON document
std::string render_graph(const BranchingGraph& g, Format f);

// parse the emitted JSON document and re-serialize (bit-exact round trip)
std::string graph_json_roundtrip(const std::string& text);

std::string render_theta(const Rat& x);  // "x iπ"

}  // namespace ykm
