// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "g2graph/g2graph.hpp"
#include "oracles.hpp"

namespace {

using namespace g2graph;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Fixture {
  Construction c = build_construction();
  SwitchScan scan = find_switch_sets(c);
  VertexSet w = scan.canonical().vertex_set;
  Graph gamma_prime = switch_graph(c.gamma, w);
  Graph complement_prime = complement(gamma_prime);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

constexpr SrgParams kGamma{36, 15, 6, 6};
constexpr SrgParams kSwitched{36, 21, 12, 12};
constexpr SrgParams kComplement{36, 14, 4, 6};

bool switched_criterion_holds(const Graph& gamma, VertexSet w, const Graph& gp) {
  for (int v = 0; v < gp.order(); ++v)
    if (gp.degree(v) != 21) return false;
  if (check_srg(gp) != kSwitched) return false;
  const auto ids = verify_switched_seidel_identities(gamma, w, gp);
  return ids.find("switched-seidel-square")->pass() && ids.find("switched-row-sums")->pass();
}

Outcome criterion1() {
  Outcome o;
  const auto& f = fixture();
  o.require(f.c.v1.size() == 36, "|V1| = " + std::to_string(f.c.v1.size()));
  o.require(f.c.points.size() == 12, "points = " + std::to_string(f.c.points.size()));
  for (const auto& p : f.c.points) {
    std::vector<std::size_t> idx(p.indices.begin(), p.indices.end());
    std::sort(idx.begin(), idx.end());
    o.require(std::adjacent_find(idx.begin(), idx.end()) == idx.end(), "class with repeated member");
  }
  int isotropic = 0;
  for (const auto& x : all_vectors())
    if (!is_zero(x) && hermitian(x, x).is_zero()) ++isotropic;
  o.require(isotropic == 27 && isotropic / 3 == 9, "isotropic vectors = " + std::to_string(isotropic));
  o.detail = o.pass ? "36 vectors, 12 points of 3, 9 isotropic points" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& g = fixture().c.gamma;
  const auto counted = check_srg(g);
  o.require(counted == kGamma, "check_srg gives " + (counted ? to_string(*counted) : std::string("none")));
  o.require(oracle::srg(g) == kGamma, "brute-force pair count disagrees");
  o.require(satisfies_srg_identity(g, kGamma), "A^2 identity fails");
  if (o.pass) o.detail = "srg(36,15,6,6) by pair counting and A^2 = 15I + 6A + 6(J-I-A)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& g = fixture().c.gamma;
  const IntMatrix s = seidel_matrix(g);
  for (int i = 0; i < 36; ++i) {
    int zero = 0, minus = 0, plus = 0;
    for (int j = 0; j < 36; ++j) (s(i, j) == 0 ? zero : s(i, j) < 0 ? minus : plus)++;
    o.require(zero == 1 && minus == 15 && plus == 20, "row " + std::to_string(i) + " profile");
  }
  const IntMatrix j = IntMatrix::ones(36);
  o.require(s * j == 5 * j && j * s == 5 * j, "SJ = JS = 5J");
  const IntMatrix i = IntMatrix::identity(36);
  o.require(s * s == 35 * i + 2 * s, std::string("S^2 = 35I + 2S does not hold") +
                                         (s * s == 35 * i - 2 * s ? " (S^2 = 35I - 2S does)" : ""));
  o.require(verify_seidel_identities(g).all_pass(), "identity report");
  if (o.pass) o.detail = "rows 1/15/20, SJ = JS = 5J, S^2 = 35I + 2S";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& f = fixture();
  o.require(f.scan.candidates.size() == 924, "examined " + std::to_string(f.scan.candidates.size()));
  o.require(!f.scan.valid.empty(), "no valid switching set");
  int valid = 0;
  for (std::size_t idx : f.scan.valid) {
    const auto& cand = f.scan.candidates[idx];
    const Graph gp = switch_graph(f.c.gamma, cand.vertex_set);
    o.require(cand.vertex_set.size() == 18, "switching set size");
    o.require(switched_criterion_holds(f.c.gamma, cand.vertex_set, gp), "candidate " + std::to_string(idx));
    ++valid;
  }
  o.require(valid == 6, "valid count " + std::to_string(valid) + " (frozen regression value 6)");
  if (o.pass) o.detail = "924 examined, 6 valid; each 21-regular, srg(36,21,12,12), S'^2 = 35I - 2S', A'J = 21J";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& f = fixture();
  const auto split = neighbour_split(f.c, f.w, f.gamma_prime);
  o.require(split.described_by_form, "neighbourhoods not described by h");
  for (int u = 0; u < 36; ++u) {
    const auto i = static_cast<std::size_t>(u);
    o.require(split.same_side[i] == 9 && split.cross_side[i] == 12,
              "vertex " + std::to_string(u) + ": " + std::to_string(split.same_side[i]) + "+" +
                  std::to_string(split.cross_side[i]));
  }
  if (o.pass) o.detail = "9 + 12 = 21 for all 18 vertices of W and all 18 of W~";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto p = check_srg(fixture().complement_prime);
  o.require(p == kComplement, "complement is " + (p ? to_string(*p) : std::string("not srg")));
  o.require(complement_params(kSwitched) == kComplement, "complement parameter formula");
  if (o.pass) o.detail = "srg(36,14,4,6)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto& f = fixture();
  const EdgeTally t = classify_complement_edges(f.c, f.gamma_prime, f.w);
  o.require(t.violations.empty(), std::to_string(t.violations.size()) + " violations");
  o.require(t.t1 == 72 && t.t2 == 72 && t.t3 == 108 && t.total() == 252,
            "tally " + std::to_string(t.t1) + "/" + std::to_string(t.t2) + "/" + std::to_string(t.t3));
  if (o.pass) o.detail = "72/72/108 of 252, no violations";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto& f = fixture();
  const TwoGraph t = associated_two_graph(f.c.gamma);
  o.require(t == associated_two_graph(f.gamma_prime), "two-graphs differ");
  o.require(satisfies_even_axiom(t), "even axiom");
  o.require(is_regular(t) == 18, "not regular with lambda 18");
  const auto wit = switching_witness(f.c.gamma, f.gamma_prime);
  o.require(wit && (*wit == f.w || *wit == f.w.complement(36)), "switching witness");
  if (o.pass) o.detail = "shared two-graph, 2-(36,3,18) design";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto& f = fixture();
  struct Case {
    const char* name;
    const Graph* graph;
    std::uint64_t order;
    std::vector<int> subdegrees;
  };
  const Case cases[] = {{"Gamma", &f.c.gamma, 51840, {1, 15, 20}},
                        {"Gamma'", &f.gamma_prime, 12096, {1, 14, 21}},
                        {"complement", &f.complement_prime, 12096, {1, 14, 21}}};
  std::string timings;
  for (const auto& cs : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const PermGroup grp = automorphism_group(*cs.graph);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 10.0, std::string(cs.name) + " took " + std::to_string(secs) + " s");
    o.require(grp.order() == cs.order, std::string(cs.name) + " order " + std::to_string(grp.order()));
    for (const auto& p : grp.generators()) o.require(is_automorphism(*cs.graph, p), "bad generator");
    o.require(grp.is_transitive(), std::string(cs.name) + " not transitive");
    if (grp.is_transitive()) {
      const RankInfo r = rank_and_subdegrees(grp, *cs.graph);
      o.require(r.rank == 3 && r.subdegrees == cs.subdegrees && r.suborbits_match_neighbourhood,
                std::string(cs.name) + " rank " + std::to_string(r.rank));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.1f ms", timings.empty() ? "" : ", ", secs * 1e3);
    timings += buf;
  }
  if (o.pass) o.detail = "|Aut| 51840 / 12096 / 12096, transitive, rank 3 (" + timings + ")";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(20260104);
  int srgs_seen = 0;
  auto round_trip = [&](const Graph& g) {
    if (auto p = check_srg(g)) {
      ++srgs_seen;
      o.require(check_srg(complement(g)) == complement_params(*p), "complement round trip " + to_string(*p));
    }
  };

  // check_srg against the brute-force oracle: every labelled graph up to 6
  // vertices and every isomorphism class up to 8.
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    Graph g(n);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << pairs.size()); ++k) {
      if (k != 0) {
        auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(k))];
        g.toggle_edge(u, v);
      }
      if (check_srg(g) != oracle::srg(g)) o.require(false, "oracle mismatch " + to_graph6(g));
      round_trip(g);
    }
  }
  const auto classes = oracle::small_graph_classes();
  o.require(classes.size() == 13598, "isomorphism class file has " + std::to_string(classes.size()) + " graphs");
  for (const auto& g : classes) {
    if (check_srg(g) != oracle::srg(g)) o.require(false, "oracle mismatch " + to_graph6(g));
    round_trip(g);
  }

  // switching laws and Seidel conjugation
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const VertexSet y1 = oracle::random_subset(n, rng);
    const VertexSet y2 = oracle::random_subset(n, rng);
    const Graph s1 = switch_graph(g, y1);
    o.require(switch_graph(s1, y1) == g, "switching involution");
    o.require(switch_graph(s1, y2) == switch_graph(g, y1 ^ y2), "symmetric difference law");
    const IntMatrix d = switching_diagonal(n, y1);
    o.require(seidel_matrix(s1) == d * seidel_matrix(g) * d, "Seidel DSD");
  }

  const auto& f = fixture();
  for (const Graph* g : {&f.c.gamma, &f.gamma_prime, &f.complement_prime}) round_trip(*g);

  std::vector<int> perm(36);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    o.require(automorphism_group(f.gamma_prime.relabel(perm)).order() == 12096, "relabelled order");
  }
  if (o.pass) {
    o.detail = "oracle agreement n<=8, " + std::to_string(srgs_seen) +
               " SRG complement round trips, 200 switching instances, 20 relabellings";
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto& f = fixture();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const int u = static_cast<int>(rng() % 36);
    int v = static_cast<int>(rng() % 35);
    if (v >= u) ++v;
    Graph gp = f.gamma_prime;
    gp.toggle_edge(u, v);
    const bool c4 = switched_criterion_holds(f.c.gamma, f.w, gp);
    const bool c6 = check_srg(complement(gp)) == kComplement;
    o.require(!c4 || !c6, "flip " + std::to_string(u) + "," + std::to_string(v) + " went undetected");
  }
  if (o.pass) o.detail = "10/10 single-edge flips detected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1  geometry: |V1|=36, 12 points, 9 isotropic points", criterion1},
      {"2  Gamma is srg(36,15,6,6)", criterion2},
      {"3  Seidel profile and identities of Gamma", criterion3},
      {"4  switching scan and srg(36,21,12,12)", criterion4},
      {"5  neighbour split 9+12", criterion5},
      {"6  complement is srg(36,14,4,6)", criterion6},
      {"7  complement edge trichotomy", criterion7},
      {"8  shared regular two-graph", criterion8},
      {"9  automorphism orders, transitivity, rank 3", criterion9},
      {"10 property suites", criterion10},
      {"11 mutation sensitivity", criterion11},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %-52s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria pass (%.2f s)\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
