// Command-line front end: build, verify, search-switch, aut, classify-edges, export.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2graph/g2graph.hpp"

namespace {

using namespace g2graph;
using nlohmann::json;

struct CommonOptions {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  bool no_prune = false;
  unsigned threads = 1;
};

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw std::runtime_error("cannot open " + opt.out + " for writing");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Switched {
  Construction c;
  SwitchScan scan;
  VertexSet w;
  Graph gamma_prime;
};

Switched build_switched(unsigned threads) {
  Switched s;
  s.c = build_construction();
  s.scan = find_switch_sets(s.c, threads);
  s.w = s.scan.canonical().vertex_set;
  s.gamma_prime = switch_graph(s.c.gamma, s.w);
  return s;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return graph_from_json(json::parse(content));
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line != "\r") return from_graph6(line);
  }
  throw std::runtime_error(path + ": no graph found");
}

int cmd_build(const CommonOptions& opt) {
  const Switched s = build_switched(opt.threads);
  const Graph comp = complement(s.gamma_prime);
  if (opt.format == "json") {
    emit(opt, dump({{"gamma", to_json(s.c.gamma)},
                    {"gamma_prime", to_json(s.gamma_prime)},
                    {"complement", to_json(comp)},
                    {"switch_set", s.w.to_vector()}}));
  } else if (opt.format == "graph6") {
    emit(opt, to_graph6(s.c.gamma) + "\n" + to_graph6(s.gamma_prime) + "\n" + to_graph6(comp) + "\n");
  } else {
    std::ostringstream os;
    os << "gamma          " << to_string(*check_srg(s.c.gamma)) << "  " << to_graph6(s.c.gamma) << '\n'
       << "gamma_prime    " << to_string(*check_srg(s.gamma_prime)) << "  " << to_graph6(s.gamma_prime) << '\n'
       << "complement     " << to_string(*check_srg(comp)) << "  " << to_graph6(comp) << '\n';
    emit(opt, os.str());
  }
  return 0;
}

int cmd_verify(const CommonOptions& opt, const std::optional<std::pair<int, int>>& flip) {
  VerificationOptions vo;
  vo.threads = opt.threads;
  vo.seed = opt.seed;
  vo.prune = !opt.no_prune;
  vo.flip_edge = flip;
  const VerificationReport r = run_full_verification(vo);
  emit(opt, opt.format == "json" ? dump(r.to_json()) : r.to_text());
  return r.passed() ? 0 : 1;
}

int cmd_search_switch(const CommonOptions& opt) {
  const Construction c = build_construction();
  const SwitchScan scan = find_switch_sets(c, opt.threads);
  if (opt.format == "json") {
    json cands = json::array();
    for (const auto& cand : scan.candidates) {
      cands.push_back({{"index", cand.index},
                       {"point_indices", cand.point_classes},
                       {"regular_21", cand.regular_21},
                       {"srg", cand.result_params ? to_string(*cand.result_params) : "none"},
                       {"valid", cand.valid()}});
    }
    emit(opt, dump({{"examined", scan.candidates.size()}, {"valid", scan.valid}, {"candidates", cands}}));
  } else {
    std::ostringstream os;
    for (const auto& cand : scan.candidates) {
      os << cand.index << " {";
      for (std::size_t i = 0; i < cand.point_classes.size(); ++i) os << (i ? "," : "") << cand.point_classes[i];
      os << "} " << (cand.result_params ? to_string(*cand.result_params) : "not srg")
         << (cand.regular_21 ? " 21-regular" : "") << (cand.valid() ? " VALID" : "") << '\n';
    }
    os << "examined " << scan.candidates.size() << ", valid " << scan.valid.size() << '\n';
    emit(opt, os.str());
  }
  return scan.valid.empty() ? 1 : 0;
}

int cmd_aut(const CommonOptions& opt, const std::string& path) {
  const Graph g = read_graph_file(path);
  const AutomorphismResult res = automorphism_search(g, {!opt.no_prune});
  const PermGroup& grp = res.group;
  std::optional<RankInfo> rank;
  if (grp.is_transitive() && g.order() > 0) rank = rank_and_subdegrees(grp, g);

  if (opt.format == "json") {
    json gens = json::array();
    for (const auto& p : grp.generators()) {
      gens.push_back({{"cycles", p.cycle_notation()},
                      {"images", std::vector<int>(p.images().begin(), p.images().end())}});
    }
    json j{{"n", g.order()},
           {"order", grp.order()},
           {"generators", gens},
           {"orbits", grp.orbits()},
           {"base", res.stats.base},
           {"orbit_lengths", res.stats.orbit_lengths}};
    if (rank) j["rank"] = {{"rank", rank->rank}, {"subdegrees", rank->subdegrees}};
    emit(opt, dump(j));
  } else {
    std::ostringstream os;
    os << "vertices   " << g.order() << "\norder      " << grp.order() << "\norbits     " << grp.orbits().size()
       << "\ntransitive " << (grp.is_transitive() ? "yes" : "no") << '\n';
    if (rank) {
      os << "rank       " << rank->rank << "\nsubdegrees";
      for (int d : rank->subdegrees) os << ' ' << d;
      os << '\n';
    }
    os << "generators\n";
    for (const auto& p : grp.generators()) os << "  " << p.cycle_notation() << '\n';
    emit(opt, os.str());
  }
  return 0;
}

int cmd_classify_edges(const CommonOptions& opt) {
  const Switched s = build_switched(opt.threads);
  const EdgeTally t = classify_complement_edges(s.c, s.gamma_prime, s.w);
  if (opt.format == "json") {
    emit(opt, dump({{"same_w_omega", t.t1},
                    {"same_w_tilde_omega", t.t2},
                    {"cross_one", t.t3},
                    {"total", t.total()},
                    {"violations", t.violations}}));
  } else {
    std::ostringstream os;
    os << "u,v in W,  h(u,v) in {w,W}: " << t.t1 << "\nu,v in W~, h(u,v) in {w,W}: " << t.t2
       << "\nu in W, v in W~, h(u,v) = 1: " << t.t3 << "\ntotal: " << t.total()
       << "\nviolations: " << t.violations.size() << '\n';
    emit(opt, os.str());
  }
  return t.violations.empty() ? 0 : 1;
}

int cmd_export(const CommonOptions& opt, const std::string& what) {
  const Switched s = build_switched(opt.threads);
  if (what == "v1") {
    json rows = json::array();
    for (std::size_t i = 0; i < s.c.v1.size(); ++i) {
      json coords = json::array();
      for (Gf4 x : s.c.v1[i]) coords.push_back(std::string(to_string(x)));
      const auto p = s.c.point_of[i];
      rows.push_back({{"index", i},
                      {"coords", coords},
                      {"point", p},
                      {"representative", to_string(s.c.points[p].representative)},
                      {"in_switch_set", s.w.contains(static_cast<int>(i))}});
    }
    emit(opt, dump(rows));
  } else if (what == "seidel") {
    std::ostringstream os;
    os << "# Seidel matrix of gamma\n" << seidel_matrix(s.c.gamma) << "# Seidel matrix of gamma_prime\n"
       << seidel_matrix(s.gamma_prime);
    emit(opt, os.str());
  } else if (what == "two-graph") {
    const TwoGraph t = associated_two_graph(s.c.gamma);
    const auto lam = is_regular(t);
    emit(opt, dump({{"points", t.n},
                    {"triples", t.triples.size()},
                    {"even_axiom", satisfies_even_axiom(t)},
                    {"regular_lambda", lam ? json(*lam) : json(nullptr)},
                    {"shared_with_gamma_prime", t == associated_two_graph(s.gamma_prime)}}));
  } else {
    throw CLI::ValidationError("export", "unknown export target " + what);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction and verification of the 36-vertex G2(2) rank-3 graph"};
  app.require_subcommand(1);

  CommonOptions opt;
  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", opt.out, "write output to this file");
    sub->add_option("--threads", opt.threads, "worker threads for the switching scan")->check(CLI::Range(1U, 256U));
  };

  auto* build = app.add_subcommand("build", "emit Gamma, Gamma' and the complement of Gamma'");
  add_common(build, {"text", "json", "graph6"});

  std::string flip_text;
  auto* verify = app.add_subcommand("verify", "run every check and print the report");
  add_common(verify, {"text", "json"});
  verify->add_option("--seed", opt.seed, "seed for the random relabelling trials");
  verify->add_flag("--no-prune", opt.no_prune, "disable orbit pruning in automorphism searches");
  verify->add_option("--flip-edge", flip_text, "toggle pair U,V of Gamma' before checking (mutation test)");

  auto* search = app.add_subcommand("search-switch", "scan all 924 six-point switching sets");
  add_common(search, {"text", "json"});

  std::string graph_path;
  auto* aut = app.add_subcommand("aut", "automorphism group of a graph6 or JSON graph");
  add_common(aut, {"text", "json"});
  aut->add_option("graph-file", graph_path, "graph6 or JSON adjacency file")->required()->check(CLI::ExistingFile);
  aut->add_flag("--no-prune", opt.no_prune, "test every candidate image instead of pruning by known orbits");

  auto* classify = app.add_subcommand("classify-edges", "edge types of the complement of Gamma'");
  add_common(classify, {"text", "json"});

  std::string what;
  auto* exp = app.add_subcommand("export", "export V1, Seidel matrices or the two-graph summary");
  add_common(exp, {"text", "json"});
  exp->add_option("what", what, "v1 | seidel | two-graph")->required()->check(CLI::IsMember({"v1", "seidel", "two-graph"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(opt);
    if (verify->parsed()) {
      std::optional<std::pair<int, int>> flip;
      if (!flip_text.empty()) {
        const auto comma = flip_text.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--flip-edge expects U,V");
        flip = std::pair{std::stoi(flip_text.substr(0, comma)), std::stoi(flip_text.substr(comma + 1))};
      }
      return cmd_verify(opt, flip);
    }
    if (search->parsed()) return cmd_search_switch(opt);
    if (aut->parsed()) return cmd_aut(opt, graph_path);
    if (classify->parsed()) return cmd_classify_edges(opt);
    if (exp->parsed()) return cmd_export(opt, what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
