#pragma once

// End-to-end verification run producing one record per checked claim.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g2graph/automorphism.hpp"
#include "g2graph/geometry.hpp"
#include "g2graph/graph.hpp"
#include "g2graph/graph_io.hpp"
#include "g2graph/perm_group.hpp"
#include "g2graph/pipeline.hpp"
#include "g2graph/seidel.hpp"
#include "g2graph/srg.hpp"
#include "g2graph/two_graph.hpp"

namespace g2graph {

struct ClaimRecord {
  std::string id;
  std::string statement;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;
  nlohmann::json switch_set;        // canonical W as point representatives and vectors
  nlohmann::json valid_switch_sets; // every valid candidate with its Aut order
  nlohmann::json environment;
  double elapsed_ms = 0.0;

  bool passed() const {
    return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });
  }

  const ClaimRecord* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }

  /// Everything except the environment stamp and timing; reproducible byte for byte.
  nlohmann::json deterministic_json() const {
    nlohmann::json j;
    j["passed"] = passed();
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : claims) {
      cs.push_back({{"id", c.id},
                    {"statement", c.statement},
                    {"computed", c.computed},
                    {"expected", c.expected},
                    {"pass", c.pass}});
    }
    j["claims"] = std::move(cs);
    j["switch_set"] = switch_set;
    j["valid_switch_sets"] = valid_switch_sets;
    return j;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = deterministic_json();
    j["environment"] = environment;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& c : claims) width = std::max(width, c.id.size());
    for (const auto& c : claims) {
      os << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(width - c.id.size() + 2, ' ') << c.statement
         << "\n      computed: " << c.computed;
      if (c.computed != c.expected) os << "  expected: " << c.expected;
      os << '\n';
    }
    const auto failed = std::count_if(claims.begin(), claims.end(), [](const auto& c) { return !c.pass; });
    os << (passed() ? "ALL CLAIMS PASS" : "VERIFICATION FAILED") << " (" << claims.size() - failed << "/"
       << claims.size() << ")\n";
    return os.str();
  }
};

struct VerificationOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;   // relabelling trials only
  int relabel_trials = 20;
  bool prune = true;
  // Flip this pair in the switched graph before it is checked (mutation testing).
  std::optional<std::pair<int, int>> flip_edge;
};

namespace detail {

inline std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

inline std::string params_text(const std::optional<SrgParams>& p) { return p ? to_string(*p) : "none"; }

inline std::string min_max(const std::vector<int>& xs) {
  if (xs.empty()) return "n/a";
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *lo == *hi ? std::to_string(*lo) : std::to_string(*lo) + ".." + std::to_string(*hi);
}

class ReportBuilder {
public:
  explicit ReportBuilder(VerificationReport& r) : r_(r) {}

  void add(std::string id, std::string statement, std::string computed, std::string expected) {
    const bool pass = computed == expected;
    r_.claims.push_back({std::move(id), std::move(statement), std::move(computed), std::move(expected), pass});
  }
  void add_flag(std::string id, std::string statement, bool ok) {
    add(std::move(id), std::move(statement), ok ? "true" : "false", "true");
  }
  void add_identity(const IdentityCheck& chk) {
    std::string statement = chk.statement;
    if (!chk.expected) statement += " (misprint, kept on record)";
    add(chk.id, std::move(statement), chk.holds ? "holds" : "fails", chk.expected ? "holds" : "fails");
  }

private:
  VerificationReport& r_;
};

}  // namespace detail

/// Runs every check in order: geometry, Gamma, Seidel identities, switching
/// scan, switched graph, two-graphs, complement, edge types, automorphisms.
inline VerificationReport run_full_verification(const VerificationOptions& opt = {}) {
  using detail::join;
  using detail::params_text;
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  detail::ReportBuilder add(report);

  // Geometry.
  const Construction c = build_construction();
  add.add("v1-size", "|V1| = |{x : h(x,x) = 1}|", std::to_string(c.v1.size()), "36");
  {
    bool sized = true;
    for (const auto& p : c.points)
      for (const auto& m : p.members) sized = sized && hermitian(m, m) == Gf4::one();
    add.add("v1-projective-points", "V1 splits into projective points of 3 vectors",
            std::to_string(c.points.size()) + (sized ? " x 3" : " (bad class)"), "12 x 3");
  }
  {
    std::vector<GeoVector> iso;
    for (const auto& x : all_vectors())
      if (!is_zero(x) && hermitian(x, x).is_zero()) iso.push_back(x);
    add.add("isotropic-points", "isotropic projective points of GF(4)^3", std::to_string(proj_points(iso).size()), "9");
  }
  {
    bool ok = true;
    const auto all = all_vectors();
    for (const auto& x : all) {
      bool witness = is_zero(x);
      for (const auto& y : all) {
        ok = ok && hermitian(y, x) == conj(hermitian(x, y)) && trace(hermitian(x, y)) == alternating(x, y);
        witness = witness || !hermitian(x, y).is_zero();
      }
      ok = ok && witness && alternating(x, x).is_zero();
    }
    add.add_flag("hermitian-form-axioms", "h hermitian and non-degenerate; s alternating", ok);
  }

  // Gamma.
  const Graph& gamma = c.gamma;
  const auto gamma_check = check_srg_detailed(gamma);
  add.add("gamma-srg-params", "Gamma is strongly regular (pair counts and A^2 identity)",
          params_text(gamma_check.params), "srg(36,15,6,6)");
  {
    bool ok = true;
    for (std::size_t i = 0; i < c.v1.size(); ++i) {
      const auto w = std::find(c.v1.begin(), c.v1.end(), scale(Gf4::omega(), c.v1[i])) - c.v1.begin();
      ok = ok && !gamma.adjacent(static_cast<int>(i), static_cast<int>(w));
    }
    add.add_flag("gamma-scalar-multiples-nonadjacent", "u and wu are never adjacent in Gamma", ok);
  }
  {
    const IntMatrix s = seidel_matrix(gamma);
    bool ok = true;
    for (int i = 0; i < s.size(); ++i) {
      int zero = 0, minus = 0, plus = 0;
      for (int j = 0; j < s.size(); ++j) (s(i, j) == 0 ? zero : s(i, j) < 0 ? minus : plus)++;
      ok = ok && zero == 1 && minus == 15 && plus == 20;
    }
    add.add("gamma-seidel-row-profile", "each Seidel row: one 0, fifteen -1, twenty +1", ok ? "1/15/20" : "mismatch",
            "1/15/20");
  }
  for (const auto& chk : verify_seidel_identities(gamma).checks) add.add_identity(chk);

  // Switching scan.
  const SwitchScan scan = find_switch_sets(c, opt.threads);
  add.add("switch-scan-examined", "unions of six projective points examined", std::to_string(scan.candidates.size()),
          "924");
  add.add("switch-scan-valid", "six-point switching sets giving srg(36,21,12,12)", std::to_string(scan.valid.size()),
          "6");
  if (scan.valid.empty()) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }
  const SwitchCandidate& chosen = scan.canonical();
  const VertexSet w = chosen.vertex_set;
  {
    nlohmann::json reps = nlohmann::json::array();
    for (int p : chosen.point_classes) reps.push_back(to_string(c.points[static_cast<std::size_t>(p)].representative));
    nlohmann::json vecs = nlohmann::json::array();
    for (int v : w.to_vector()) vecs.push_back(to_string(c.v1[static_cast<std::size_t>(v)]));
    report.switch_set = {{"candidate_index", chosen.index},
                         {"point_indices", chosen.point_classes},
                         {"point_representatives", reps},
                         {"vertices", w.to_vector()},
                         {"vectors", vecs}};
  }

  Graph gamma_prime = switch_graph(gamma, w);
  if (opt.flip_edge) gamma_prime.toggle_edge(opt.flip_edge->first, opt.flip_edge->second);

  {
    std::vector<int> degrees;
    for (int v = 0; v < gamma_prime.order(); ++v) degrees.push_back(gamma_prime.degree(v));
    add.add("switched-regular", "Gamma' is 21-regular", detail::min_max(degrees), "21");
  }
  add.add("switched-srg-params", "Gamma' is strongly regular", params_text(check_srg(gamma_prime)), "srg(36,21,12,12)");
  {
    const auto split = neighbour_split(c, w, gamma_prime);
    std::vector<int> same_w, cross_w, same_t, cross_t;
    for (int u = 0; u < gamma_prime.order(); ++u) {
      const auto i = static_cast<std::size_t>(u);
      (w.contains(u) ? same_w : same_t).push_back(split.same_side[i]);
      (w.contains(u) ? cross_w : cross_t).push_back(split.cross_side[i]);
    }
    using detail::min_max;
    add.add("switched-neighbour-split-w", "u in W: neighbours in W (h in {0,1}) + in W~ (h in {w,W})",
            min_max(same_w) + "+" + min_max(cross_w), "9+12");
    add.add("switched-neighbour-split-w-tilde", "u in W~: neighbours in W~ (h in {0,1}) + in W (h in {w,W})",
            min_max(same_t) + "+" + min_max(cross_t), "9+12");
    add.add_flag("switched-neighbours-described-by-form", "Gamma'(u) is determined by h(x,u) and the side of x",
                 split.described_by_form);
  }
  for (const auto& chk : verify_switched_seidel_identities(gamma, w, gamma_prime).checks) add.add_identity(chk);

  // Two-graphs.
  const TwoGraph tg = associated_two_graph(gamma);
  const TwoGraph tg_prime = associated_two_graph(gamma_prime);
  add.add_flag("two-graph-even-axiom", "every 4-set holds an even number of coherent triples",
               satisfies_even_axiom(tg) && satisfies_even_axiom(tg_prime));
  add.add_flag("two-graph-shared", "Gamma and Gamma' have the same two-graph", tg == tg_prime);
  {
    const auto lam = is_regular(tg);
    add.add("two-graph-regular", "the two-graph is a 2-(36,3,lambda) design",
            lam ? "lambda=" + std::to_string(*lam) : "not regular", "lambda=18");
  }
  {
    const auto wit = switching_witness(gamma, gamma_prime);
    const bool ok = wit && (*wit == w || *wit == w.complement(gamma.order()));
    add.add_flag("switching-witness", "switching Gamma to Gamma' is recovered as W or its complement", ok);
  }

  // Complement.
  const Graph comp = complement(gamma_prime);
  const auto comp_params = check_srg(comp);
  add.add("complement-srg-params", "complement of Gamma' is strongly regular", params_text(comp_params),
          "srg(36,14,4,6)");
  {
    std::string predicted = "none";
    if (auto p = check_srg(gamma_prime)) predicted = to_string(complement_params(*p));
    add.add("complement-params-formula", "complement parameters (n, n-k-1, n-2k+mu-2, n-2k+lambda)",
            params_text(comp_params), predicted);
    std::string gamma_pred = gamma_check.params ? to_string(complement_params(*gamma_check.params)) : "none";
    add.add("gamma-complement-params", "complement of Gamma", params_text(check_srg(complement(gamma))), gamma_pred);
  }
  {
    const EdgeTally tally = classify_complement_edges(c, gamma_prime, w);
    add.add("complement-edge-violations", "complement edges outside the three types",
            std::to_string(tally.violations.size()), "0");
    add.add("complement-edge-tally", "type counts (W,W,w|W) / (W~,W~,w|W) / (W,W~,1)",
            std::to_string(tally.t1) + "/" + std::to_string(tally.t2) + "/" + std::to_string(tally.t3) + " of " +
                std::to_string(tally.total()),
            "72/72/108 of 252");
  }

  // Automorphisms.
  const AutSearchOptions aut_opt{opt.prune};
  auto aut_claims = [&](const std::string& prefix, const std::string& name, const Graph& g, std::uint64_t order,
                        std::vector<int> subdegrees) {
    const PermGroup grp = automorphism_group(g, aut_opt);
    bool gens_ok = true;
    for (const auto& p : grp.generators()) gens_ok = gens_ok && is_automorphism(g, p);
    add.add_flag(prefix + "-generators", "generators of Aut(" + name + ") preserve adjacency", gens_ok);
    add.add(prefix + "-order", "|Aut(" + name + ")|", std::to_string(grp.order()), std::to_string(order));
    add.add_flag(prefix + "-transitive", "Aut(" + name + ") is vertex-transitive", grp.is_transitive());
    if (grp.is_transitive()) {
      const RankInfo rank = rank_and_subdegrees(grp, g);
      add.add(prefix + "-rank", "rank and subdegrees of Aut(" + name + ")",
              std::to_string(rank.rank) + " " + join(rank.subdegrees), "3 " + join(subdegrees));
      add.add_flag(prefix + "-suborbits", "suborbits of a vertex are its neighbours and non-neighbours",
                   rank.suborbits_match_neighbourhood);
    }
    return grp.order();
  };
  aut_claims("aut-gamma", "Gamma", gamma, 51840, {1, 15, 20});
  aut_claims("aut-switched", "Gamma'", gamma_prime, 12096, {1, 14, 21});
  aut_claims("aut-complement", "complement of Gamma'", comp, 12096, {1, 14, 21});

  {
    report.valid_switch_sets = nlohmann::json::array();
    std::vector<std::string> orders;
    for (std::size_t idx : scan.valid) {
      const auto& cand = scan.candidates[idx];
      const auto order = automorphism_group(switch_graph(gamma, cand.vertex_set), aut_opt).order();
      orders.push_back(std::to_string(order));
      report.valid_switch_sets.push_back(
          {{"candidate_index", cand.index}, {"point_indices", cand.point_classes}, {"aut_order", order}});
    }
    std::string computed;
    for (const auto& o : orders) computed += (computed.empty() ? "" : ",") + o;
    std::string expected;
    for (std::size_t i = 0; i < orders.size(); ++i) expected += (i == 0 ? "" : ",") + std::string("12096");
    add.add("aut-all-valid-switches", "|Aut| for every valid switching set", computed, expected);
  }
  {
    std::mt19937_64 rng(opt.seed);
    std::vector<int> perm(static_cast<std::size_t>(gamma_prime.order()));
    std::iota(perm.begin(), perm.end(), 0);
    int agree = 0;
    const std::uint64_t base_order = automorphism_group(gamma_prime, aut_opt).order();
    for (int t = 0; t < opt.relabel_trials; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (automorphism_group(gamma_prime.relabel(perm), aut_opt).order() == base_order) ++agree;
    }
    add.add("aut-relabel-invariance", "|Aut(Gamma')| unchanged under random relabelling",
            std::to_string(agree) + "/" + std::to_string(opt.relabel_trials),
            std::to_string(opt.relabel_trials) + "/" + std::to_string(opt.relabel_trials));
  }
  {
    const Graph reloaded = from_graph6(to_graph6(gamma_prime));
    add.add("graph6-reload", "Gamma' reloaded from graph6 is strongly regular", params_text(check_srg(reloaded)),
            "srg(36,21,12,12)");
  }

  report.environment = {{"compiler", __VERSION__},
                        {"cplusplus", __cplusplus},
                        {"threads", opt.threads},
                        {"hardware_concurrency", std::thread::hardware_concurrency()},
                        {"seed", opt.seed},
                        {"prune", opt.prune}};
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace g2graph
