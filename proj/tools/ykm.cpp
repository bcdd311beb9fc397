#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ykm/fixtures.hpp"
#include "ykm/render.hpp"

using namespace ykm;

namespace {

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::bad_params:
    case errc::unsupported_rank:
    case errc::not_dominant: return 2;
    case errc::multiplicity_failure: return 3;
    case errc::inconsistent_labels: return 4;
    case errc::unknown:
    case errc::not_in_catalogue:
    case errc::label_absent: return 5;
    default: return 1;
  }
}

struct Options {
  std::string pair, g, weight, weight2, format = "text", scope = "all", filter;
  int vrep = -1;
  std::string charge_scale = "1";
  std::size_t max_weights = kDefaultWeightCap;
  bool decimal = false;
  int max_n = 10;
};

std::string maybe_decimal(const Rat& r, bool decimal) {
  std::string s = r.get_str();
  if (decimal && r.get_den() != 1) s += " (" + std::to_string(r.get_d()) + ")";
  return s;
}

std::string k_string(const SymmetricPair& p) {
  std::string s;
  for (size_t i = 0; i < p.k_rep.size(); ++i) {
    if (i) s += "+";
    s += render_hirrep(p.h, p.k_rep[i]);
  }
  return s;
}

std::string c_string(const SymmetricPair& p) {
  std::string s;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (i) s += ",";
    s += p.c[i].get_str();
  }
  if (p.h.has_u1) s += (s.empty() ? "" : ",") + ("u1:" + p.c_u1.get_str());
  return s;
}

void print_pair_row(const SymmetricPair& p) {
  std::cout << p.family << "\t" << p.pair_string << "\tK=" << k_string(p) << "\tc=" << c_string(p)
            << "\tsum=" << symmetric_space_sum(p).get_str()
            << (p.degenerate ? "\t[degenerate]" : "") << "\n";
}

int cmd_pairs(const Options& opt) {
  if (opt.filter.empty()) {
    for (const auto& fam : catalogue()) {
      std::vector<int> params;
      if (fam.name == "AI") params = {5};
      else if (fam.name == "AII") params = {6};
      else if (fam.name == "AIII") params = {5, 2};
      else if (fam.name == "BDI") params = {7, 3};
      else if (fam.name == "CI") params = {6};
      else if (fam.name == "CII") params = {8, 4};
      else if (fam.name == "DIII") params = {10};
      SymmetricPair p = instantiate(fam.name, params, parse_rat(opt.charge_scale), opt.max_weights);
      std::cout << fam.name << "\t" << fam.g_pattern << " / " << fam.h_pattern
                << "\tK=" << fam.k_pattern << "\tc=" << c_string(p)
                << "\tsum=" << symmetric_space_sum(p).get_str() << "\t(at " << p.pair_string
                << ")\n";
    }
    return 0;
  }
  LieType g = parse_type(opt.filter);
  bool any = false;
  auto emit = [&](const std::string& fam, std::vector<int> params) {
    SymmetricPair p = instantiate(fam, params, parse_rat(opt.charge_scale), opt.max_weights);
    print_pair_row(p);
    any = true;
  };
  if (g.series == Series::A) {
    int N = g.rank + 1;
    emit("AI", {N});
    if (N % 2 == 0 && N >= 4) emit("AII", {N});
    for (int m = 1; m <= N / 2; ++m) emit("AIII", {N, m});
  } else if (g.series == Series::B || g.series == Series::D) {
    int N = (g.series == Series::B) ? 2 * g.rank + 1 : 2 * g.rank;
    if (N >= 5)
      for (int m = 1; m <= N / 2; ++m) emit("BDI", {N, m});
    if (g.series == Series::D) emit("DIII", {N});
  } else if (g.series == Series::C) {
    int N = 2 * g.rank;
    emit("CI", {N});
    for (int m = 2; m < N; m += 2) emit("CII", {N, m});
  } else {
    for (const auto& fam : catalogue()) {
      if (fam.nparams != 0) continue;
      SymmetricPair p = instantiate(fam.name, {}, parse_rat(opt.charge_scale), opt.max_weights);
      if (p.g == g) {
        print_pair_row(p);
        any = true;
      }
    }
  }
  if (!any) fail(errc::not_in_catalogue, "no catalogued pairs with g = " + opt.filter);
  return 0;
}

int cmd_kgraph(const Options& opt) {
  SymmetricPair p = pair_from_string(opt.pair, parse_rat(opt.charge_scale), opt.max_weights);
  BranchingGraph g = branching_graph(p, yrep(p.g, opt.vrep), opt.max_weights);
  std::cout << render_graph(g, parse_format(opt.format));
  return 0;
}

int cmd_verify(const Options& opt) {
  auto results = run_fixtures(opt.scope, opt.max_weights);
  int fails = 0;
  for (const auto& r : results) {
    const char* s = r.status == FixStatus::Pass ? "PASS"
                    : r.status == FixStatus::Flagged ? "FLAGGED"
                                                     : "FAIL";
    if (r.status == FixStatus::Fail) ++fails;
    std::cout << s << "  " << r.name;
    if (!r.message.empty()) std::cout << "  [" << r.message << "]";
    std::cout << "\n";
  }
  std::cout << results.size() << " cases, " << fails << " failures\n";
  return fails == 0 ? 0 : 1;
}

int cmd_casimir(const Options& opt) {
  const auto& rs = root_system(parse_type(opt.g));
  Weight w = parse_weight(opt.weight, rs.rank());
  std::cout << maybe_decimal(rs.casimir(w), opt.decimal) << "\n";
  return 0;
}

int cmd_tensor(const Options& opt) {
  const auto& rs = root_system(parse_type(opt.g));
  Weight a = parse_weight(opt.weight, rs.rank());
  Weight b = parse_weight(opt.weight2, rs.rank());
  for (const auto& [w, m] : tensor_decompose(rs, a, b, opt.max_weights)) {
    std::cout << "(" << render_weight(rs.type(), w) << ") x" << m.get_str() << "  dim "
              << rs.dimension(w).get_str() << "\n";
  }
  return 0;
}

int cmd_branch(const Options& opt) {
  SymmetricPair p = pair_from_string(opt.pair, parse_rat(opt.charge_scale), opt.max_weights);
  Weight w = parse_weight(opt.weight, p.g.rank);
  for (const auto& [u, m] : restrict_irrep(p, w, opt.max_weights)) {
    std::cout << render_hirrep(p.h, u) << " x" << m.get_str() << "  dim "
              << h_dim(p.h, u).get_str() << "  C=" << composite_casimir(p, u).get_str() << "\n";
  }
  return 0;
}

int cmd_truncations(const Options& opt) {
  SymmetricPair p = pair_from_string(opt.pair, parse_rat(opt.charge_scale), opt.max_weights);
  BranchingGraph g = branching_graph(p, yrep(p.g, opt.vrep), opt.max_weights);
  auto node_str = [&](int i) {
    std::string s;
    for (size_t m = 0; m < g.nodes[i].members.size(); ++m) {
      if (m) s += "+";
      s += render_hirrep(p.h, g.nodes[i].members[m].irrep);
    }
    return s;
  };
  for (const auto& t : truncations(g)) {
    std::cout << "delta " << t.delta.get_str() << ": zero at theta = "
              << render_theta(t.theta_zero) << ", pole at theta = " << render_theta(t.theta_pole)
              << "\n";
    for (size_t c = 0; c < t.components.size(); ++c) {
      std::cout << "  component";
      if (t.contains_top[c]) std::cout << "*";
      for (int n : t.components[c]) std::cout << " " << node_str(n);
      std::cout << "\n";
    }
    auto survivors = [&](const char* tag, const std::vector<int>& s) {
      std::cout << "  survives at " << tag << ":";
      for (int n : s) std::cout << " " << node_str(n);
      std::cout << "\n";
    };
    survivors("zero", t.survivors_zero);
    survivors("pole", t.survivors_pole);
  }
  return 0;
}

int cmd_check_ss(const Options& opt) {
  SymmetricPair p = pair_from_string(opt.pair, parse_rat(opt.charge_scale), opt.max_weights);
  std::cout << maybe_decimal(symmetric_space_sum(p), opt.decimal) << "\n";
  return 0;
}

int cmd_catalogue(const Options& opt) {
  std::cout << catalogue_to_json(default_instances(opt.max_n, opt.max_weights));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted Yangian branching graphs and K-matrix spectral decompositions"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--charge-scale", opt.charge_scale, "debug: rescale the u(1) charge row");
    sub->add_option("--max-weights", opt.max_weights, "resource cap on weight-system sizes");
    sub->add_flag("--decimal", opt.decimal, "append decimal renderings of rationals");
  };

  auto* pairs = app.add_subcommand("pairs", "list the symmetric-pair catalogue");
  pairs->add_option("--g", opt.filter, "restrict to a fixed g, e.g. f4 or so10");
  add_common(pairs);

  auto* kgraph = app.add_subcommand("kgraph", "branching graph of a Y(g,h) representation");
  kgraph->add_option("--pair", opt.pair, "pair, e.g. f4/b4 or so10/so4xso6")->required();
  kgraph->add_option("--vrep", opt.vrep, "fundamental index (0 = adjoint + trivial)")->required();
  kgraph->add_option("--format", opt.format, "text | dot | json");
  add_common(kgraph);

  auto* verify = app.add_subcommand("verify", "run the embedded case-table fixtures");
  verify->add_option("--scope", opt.scope, "all | classical | exceptional | magic");
  add_common(verify);

  auto* casimir = app.add_subcommand("casimir", "quadratic Casimir of a highest weight");
  casimir->add_option("--g", opt.g, "Lie type")->required();
  casimir->add_option("--weight", opt.weight, "Dynkin labels, comma separated")->required();
  add_common(casimir);

  auto* tensor = app.add_subcommand("tensor", "tensor product decomposition");
  tensor->add_option("--g", opt.g, "Lie type")->required();
  tensor->add_option("--weight", opt.weight, "first factor")->required();
  tensor->add_option("--weight2", opt.weight2, "second factor")->required();
  add_common(tensor);

  auto* branch = app.add_subcommand("branch", "restrict a g-irrep through a pair");
  branch->add_option("--pair", opt.pair)->required();
  branch->add_option("--weight", opt.weight)->required();
  add_common(branch);

  auto* trunc = app.add_subcommand("truncations", "graph truncations and special points");
  trunc->add_option("--pair", opt.pair)->required();
  trunc->add_option("--vrep", opt.vrep)->required();
  add_common(trunc);

  auto* ss = app.add_subcommand("check-symmetric-space", "the Casimir-ratio sum of a pair");
  ss->add_option("--pair", opt.pair)->required();
  add_common(ss);

  auto* cat = app.add_subcommand("catalogue", "emit the catalogue document (JSON)");
  cat->add_option("--max-n", opt.max_n, "largest N for the parametrized families");
  add_common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (pairs->parsed()) return cmd_pairs(opt);
    if (kgraph->parsed()) return cmd_kgraph(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (casimir->parsed()) return cmd_casimir(opt);
    if (tensor->parsed()) return cmd_tensor(opt);
    if (branch->parsed()) return cmd_branch(opt);
    if (trunc->parsed()) return cmd_truncations(opt);
    if (ss->parsed()) return cmd_check_ss(opt);
    if (cat->parsed()) return cmd_catalogue(opt);
  } catch (const error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
