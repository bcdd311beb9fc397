#include "ykm/render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ykm {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "dot") return Format::Dot;
  if (s == "json") return Format::Json;
  fail(errc::parse_error, "unknown format: " + s);
}

std::string render_weight(LieType t, const Weight& w) {
  if (t.series == Series::A && t.rank == 1) return std::to_string(w[0]);
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (w[i] != 1) s += std::to_string(w[i]);
    s += "\xce\xbb" + std::to_string(i + 1);  // lambda
  }
  return s.empty() ? "0" : s;
}

std::string render_hirrep(const HAlgebra& h, const HIrrep& w) {
  std::string s = "(";
  for (size_t i = 0; i < h.factors.size(); ++i) {
    if (i) s += ",";
    s += render_weight(h.factors[i], w.labels[i]);
  }
  if (h.factors.empty()) s += "0";
  s += ")";
  if (h.has_u1) s += "_{" + w.charge.get_str() + "}";
  return s;
}

std::string render_theta(const Rat& x) { return x.get_str() + " i\xcf\x80"; }

namespace {

std::string node_text(const BranchingGraph& g, int i) {
  std::string s;
  for (size_t m = 0; m < g.nodes[i].members.size(); ++m) {
    if (m) s += "\xe2\x8a\x95";  // (+)
    s += render_hirrep(g.pair.h, g.nodes[i].members[m].irrep);
  }
  return s;
}

Rat node_max_casimir(const BranchingGraph& g, int i) {
  Rat c = g.nodes[i].members[0].casimir;
  for (const auto& m : g.nodes[i].members) c = std::max(c, m.casimir);
  return c;
}

std::string text_graph(const BranchingGraph& g) {
  size_t n = g.nodes.size();
  std::vector<std::vector<int>> adj(n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].src].push_back(static_cast<int>(e));
    adj[g.edges[e].dst].push_back(static_cast<int>(e));
  }
  bool chain = g.edges.size() + 1 == n;
  for (size_t i = 0; i < n; ++i) chain = chain && adj[i].size() <= 2;
  if (chain && n >= 1) {
    // walk from the higher-Casimir end
    int start = -1;
    for (size_t i = 0; i < n; ++i) {
      if (adj[i].size() >= 2 && n > 1) continue;
      if (start < 0 || node_max_casimir(g, static_cast<int>(i)) > node_max_casimir(g, start))
        start = static_cast<int>(i);
    }
    if (start >= 0) {
      std::string s = node_text(g, start);
      int cur = start, prev_edge = -1;
      while (true) {
        int next_edge = -1;
        for (int e : adj[cur])
          if (e != prev_edge) next_edge = e;
        if (next_edge < 0) break;
        const auto& e = g.edges[next_edge];
        int other = (e.src == cur) ? e.dst : e.src;
        std::string d = e.delta.get_str();
        s += (e.src == cur) ? " -" + d + "-> " : " <-" + d + "- ";
        s += node_text(g, other);
        prev_edge = next_edge;
        cur = other;
      }
      return s + "\n";
    }
  }
  // general form: nodes then edges
  std::string s;
  for (size_t i = 0; i < n; ++i)
    s += "n" + std::to_string(i) + ": " + node_text(g, static_cast<int>(i)) + "\n";
  for (const auto& e : g.edges)
    s += "n" + std::to_string(e.src) + " -" + e.delta.get_str() + "-> n" + std::to_string(e.dst) +
         "\n";
  return s;
}

std::string dot_graph(const BranchingGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << g.pair.pair_string << " v" << g.vrep.index << "\" {\n";
  out << "  rankdir=LR;\n  node [shape=box];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    std::string label;
    for (size_t m = 0; m < g.nodes[i].members.size(); ++m) {
      const auto& gm = g.nodes[i].members[m];
      if (m) label += " \xe2\x8a\x95 ";
      label += render_hirrep(g.pair.h, gm.irrep) + " " + gm.dim.get_str();
    }
    out << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : g.edges)
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.delta.get_str() << "\"];\n";
  out << "}\n";
  return out.str();
}

using json = nlohmann::ordered_json;

json rat_pair(const Rat& r) {
  return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_pair(const json& j) {
  Rat r(Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
  r.canonicalize();
  return r;
}

json graph_doc(const BranchingGraph& g) {
  json doc;
  doc["pair"] = g.pair.pair_string;
  doc["vrep"] = g.vrep.index;
  doc["c_A"] = rat_pair(g.c_adjoint);
  doc["top_node"] = g.top_node;
  doc["nodes"] = json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    json node;
    node["id"] = static_cast<int>(i);
    node["members"] = json::array();
    for (const auto& m : g.nodes[i].members) {
      json mem;
      mem["factor_labels"] = m.irrep.labels;
      mem["charge"] = rat_pair(m.irrep.charge);
      mem["parent"] = m.parent;
      mem["dim"] = m.dim.get_str();
      mem["casimir"] = rat_pair(m.casimir);
      node["members"].push_back(mem);
    }
    doc["nodes"].push_back(node);
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges) {
    json ed;
    ed["src"] = e.src;
    ed["dst"] = e.dst;
    ed["delta_num"] = e.delta.get_num().get_str();
    ed["delta_den"] = e.delta.get_den().get_str();
    doc["edges"].push_back(ed);
  }
  doc["truncations"] = json::array();
  for (const auto& t : truncations(g)) {
    json tr;
    tr["delta"] = rat_pair(t.delta);
    tr["theta_zero"] = rat_pair(t.theta_zero);
    tr["theta_pole"] = rat_pair(t.theta_pole);
    tr["components"] = t.components;
    tr["contains_top"] = t.contains_top;
    tr["survivors_zero"] = t.survivors_zero;
    tr["survivors_pole"] = t.survivors_pole;
    doc["truncations"].push_back(tr);
  }
  return doc;
}

}  // namespace

std::string render_graph(const BranchingGraph& g, Format f) {
  switch (f) {
    case Format::Text: return text_graph(g);
    case Format::Dot: return dot_graph(g);
    case Format::Json: return graph_doc(g).dump(2) + "\n";
  }
  return {};
}

std::string graph_json_roundtrip(const std::string& text) {
  json in = json::parse(text);
  // reconstruct the document field by field through typed values
  json out;
  out["pair"] = in.at("pair").get<std::string>();
  out["vrep"] = in.at("vrep").get<int>();
  out["c_A"] = rat_pair(rat_from_pair(in.at("c_A")));
  out["top_node"] = in.at("top_node").get<int>();
  out["nodes"] = json::array();
  for (const auto& node : in.at("nodes")) {
    json n;
    n["id"] = node.at("id").get<int>();
    n["members"] = json::array();
    for (const auto& m : node.at("members")) {
      json mem;
      mem["factor_labels"] = m.at("factor_labels").get<std::vector<Weight>>();
      mem["charge"] = rat_pair(rat_from_pair(m.at("charge")));
      mem["parent"] = m.at("parent").get<int>();
      mem["dim"] = Int(m.at("dim").get<std::string>()).get_str();
      mem["casimir"] = rat_pair(rat_from_pair(m.at("casimir")));
      n["members"].push_back(mem);
    }
    out["nodes"].push_back(n);
  }
  out["edges"] = json::array();
  for (const auto& e : in.at("edges")) {
    json ed;
    ed["src"] = e.at("src").get<int>();
    ed["dst"] = e.at("dst").get<int>();
    ed["delta_num"] = Int(e.at("delta_num").get<std::string>()).get_str();
    ed["delta_den"] = Int(e.at("delta_den").get<std::string>()).get_str();
    out["edges"].push_back(ed);
  }
  out["truncations"] = json::array();
  for (const auto& t : in.at("truncations")) {
    json tr;
    tr["delta"] = rat_pair(rat_from_pair(t.at("delta")));
    tr["theta_zero"] = rat_pair(rat_from_pair(t.at("theta_zero")));
    tr["theta_pole"] = rat_pair(rat_from_pair(t.at("theta_pole")));
    tr["components"] = t.at("components").get<std::vector<std::vector<int>>>();
    tr["contains_top"] = t.at("contains_top").get<std::vector<bool>>();
    tr["survivors_zero"] = t.at("survivors_zero").get<std::vector<int>>();
    tr["survivors_pole"] = t.at("survivors_pole").get<std::vector<int>>();
    out["truncations"].push_back(tr);
  }
  return out.dump(2) + "\n";
}

}  // namespace ykm
