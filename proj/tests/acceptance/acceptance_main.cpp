// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exits nonzero when
// any criterion fails. The email-Eu-core criteria need the SNAP files, looked
// up in $LINKC_EU_DIR or the bundled data directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linkc/linkc.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace linkc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

// Accumulates sub-checks; the first failure is kept in the detail.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    notes_ << (notes_.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [x]");
    ok_ = ok_ && ok;
  }
  Outcome outcome() const { return {ok_ ? Status::kPass : Status::kFail, notes_.str()}; }

 private:
  bool ok_ = true;
  std::ostringstream notes_;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string("--"); }

bool within(double value, double target, double tolerance) { return std::abs(value - target) <= tolerance; }

bool within(const std::optional<double>& value, double target, double tolerance) {
  return value && within(*value, target, tolerance);
}

struct EuData {
  Graph graph;
  CommunityAssignment truth;
};

std::optional<EuData> load_eu() {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("LINKC_EU_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(LINKC_TEST_DATA_DIR);
  for (const auto& dir : dirs) {
    const auto edges = dir / "email-Eu-core.txt";
    const auto labels = dir / "email-Eu-core-department-labels.txt";
    if (!fs::exists(edges) || !fs::exists(labels)) continue;
    Graph g = load_edge_list_file(edges);
    auto truth = load_communities_file(labels, g, {.skip_unknown_vertices = true});
    return EuData{std::move(g), std::move(truth)};
  }
  return std::nullopt;
}

const Outcome kNoEu{Status::kSkip,
                    "email-Eu-core.txt and email-Eu-core-department-labels.txt not found "
                    "(set LINKC_EU_DIR)"};

const EvalReport& find_report(const std::vector<EvalReport>& reports, HopWeights w) {
  return *std::find_if(reports.begin(), reports.end(), [&](const EvalReport& r) {
    return r.weights.as_array() == w.as_array();
  });
}

Outcome weight_ablation(const std::optional<EuData>& eu) {
  if (!eu) return kNoEu;
  const auto start = Clock::now();
  const auto reports = run_weight_ablation(eu->graph, eu->truth);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  Checks c;
  const auto& all = find_report(reports, {1, 1, 1});
  c.expect(within(double(all.remaining_edges), 2801, 150), "(1,1,1) edges " + std::to_string(all.remaining_edges));
  c.expect(within(double(all.detected_count), 17, 2), "DC " + std::to_string(all.detected_count));
  c.expect(within(all.f_score, 0.539, 0.05), "F " + fmt(all.f_score));
  const auto& one = find_report(reports, {1, 0, 0});
  c.expect(within(double(one.remaining_edges), 1725, 150), "(1,0,0) edges " + std::to_string(one.remaining_edges));
  c.expect(within(double(one.detected_count), 13, 2), "DC " + std::to_string(one.detected_count));
  const auto& two = find_report(reports, {0, 1, 0});
  c.expect(within(double(two.remaining_edges), 1645, 150), "(0,1,0) edges " + std::to_string(two.remaining_edges));
  c.expect(within(double(two.detected_count), 22, 3), "DC " + std::to_string(two.detected_count));
  c.expect(seconds < 60.0, "time " + fmt(seconds, 3) + " s");
  return c.outcome();
}

Outcome density_curve(const std::optional<EuData>& eu) {
  if (!eu) return kNoEu;
  const Graph& g = eu->graph;
  const auto curve = mdcore_sweep(g, score_all(g));
  Checks c;
  c.expect(within(double(curve.best_removed), 12000, 1500),
           "peak at " + std::to_string(curve.best_removed) + " of " + std::to_string(g.edge_count()) + " removals");
  const auto pruned = maximal_community_truss(prune(g, curve));
  c.expect(pruned.chosen_level == 4, "pruned level " + std::to_string(pruned.chosen_level));
  c.expect(within(double(pruned.cluster_count()), 17, 2), "clusters " + std::to_string(pruned.cluster_count()));
  const auto unpruned = maximal_community_truss(g);
  bool single = true;
  for (const auto& [level, clusters] : unpruned.level_clusters) single = single && clusters == 1;
  c.expect(single, "unpruned one cluster at all " + std::to_string(unpruned.level_clusters.size()) + " levels");
  return c.outcome();
}

Outcome spot_checks(const std::optional<EuData>& eu) {
  Checks c;
  const Graph karate = load_edge_list_file(LINKC_TEST_DATA_DIR "/karate.txt");
  const auto karate_truth = load_communities_file(LINKC_TEST_DATA_DIR "/karate_communities.txt", karate);
  const auto k = run_pipeline(karate, karate_truth, PruningMethod::kMdcore);
  c.expect(k.detected_count == 0, "Karate MDCore DC " + std::to_string(k.detected_count));
  c.expect(!k.f_score.has_value(), "Karate F " + fmt(k.f_score));
  if (!eu) {
    c.expect(true, "EU part skipped: data not found");
    return c.outcome();
  }
  const auto original = run_pipeline(eu->graph, eu->truth, PruningMethod::kOriginal);
  c.expect(original.detected_count == 1, "EU unpruned DC " + std::to_string(original.detected_count));
  c.expect(within(original.f_score, 0.19, 0.05), "F " + fmt(original.f_score));
  const auto mdcore = run_pipeline(eu->graph, eu->truth, PruningMethod::kMdcore);
  c.expect(within(mdcore.f_score, 0.54, 0.05), "EU MDCore F " + fmt(mdcore.f_score));
  return c.outcome();
}

Outcome cohesion_oracle() {
  std::mt19937_64 rng(4001);
  double worst = 0.0;
  bool in_range = true;
  std::size_t graphs = 0;
  while (graphs < 200) {
    const double low = 0.02 + 0.6 * double(graphs) / 200.0;
    const Graph g = testing::random_graph(rng, 30, low, std::min(0.9, low + 0.2));
    if (g.edge_count() == 0) continue;
    ++graphs;
    const auto fast = hop_strengths(g);
    const auto slow = testing::naive_hop_strengths(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (std::size_t hop = 0; hop < 3; ++hop) worst = std::max(worst, testing::relative_error(fast[e][hop], slow[e][hop]));
    }
    for (const auto& r : score_all(g).records()) {
      for (double v : r.normalized) in_range = in_range && v >= 0.0 && v < 1.0;
      in_range = in_range && r.cohesion >= 0.0 && r.cohesion < 1.0;
    }
  }
  Checks c;
  c.expect(worst <= 1e-12, "200 graphs, max relative error " + fmt(worst, 3));
  c.expect(in_range, "c1..c3 and cohesion in [0,1)");
  return c.outcome();
}

Outcome truss_oracle() {
  std::mt19937_64 rng(4002);
  std::size_t mismatches = 0;
  bool nested = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 50, 0.05, 0.5);
    const auto t = truss_decomposition(g);
    if (t != testing::naive_trussness(g)) ++mismatches;
    if (t.empty()) continue;
    const TrussLevel top = *std::max_element(t.begin(), t.end());
    for (TrussLevel k = 2; k <= top; ++k) {
      const auto level = truss_edges(t, k);
      const auto next = truss_edges(t, k + 1);
      const Graph sub = g.subgraph(level);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (next[e] && !level[e]) nested = false;
        if (!level[e]) continue;
        const auto edge = g.edge(e);
        std::size_t triangles = 0;
        for (VertexId w : sub.neighbors(edge.u)) triangles += sub.has_edge(w, edge.v) ? 1 : 0;
        if (triangles + 2 < k) nested = false;
      }
    }
  }
  Checks c;
  c.expect(mismatches == 0, "100 graphs, " + std::to_string(mismatches) + " mismatches");
  c.expect(nested, "nesting and support at every level");
  return c.outcome();
}

Outcome betweenness_oracle() {
  std::mt19937_64 rng(4003);
  double worst = 0.0;
  double worst_bridge = 0.0;
  std::size_t bridges = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 30, 0.03, 0.4);
    const auto fast = edge_betweenness(g);
    const auto slow = testing::naive_edge_betweenness(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) worst = std::max(worst, std::abs(fast[e] - slow[e]));
    const auto whole = connected_components(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      EdgeMask without(g.edge_count(), true);
      without.set(e, false);
      const auto split = connected_components(g, without);
      const auto edge = g.edge(e);
      if (split.labels[edge.u] == split.labels[edge.v]) continue;
      ++bridges;
      double a = 0.0;
      double b = 0.0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (whole.labels[v] != whole.labels[edge.u]) continue;
        (split.labels[v] == split.labels[edge.u] ? a : b) += 1.0;
      }
      worst_bridge = std::max(worst_bridge, std::abs(fast[e] - a * b));
    }
  }
  Checks c;
  c.expect(worst <= 1e-9, "100 graphs, max abs error " + fmt(worst, 3));
  c.expect(worst_bridge <= 1e-9, std::to_string(bridges) + " bridges, max |b - |A||B|| " + fmt(worst_bridge, 3));
  return c.outcome();
}

Outcome correlation_sign() {
  int positive = 0;
  std::ostringstream values;
  for (int r = 0; r < 20; ++r) {
    const double t = r / 19.0;
    const double p_in = 0.3 + (0.15 - 0.3) * t;
    const double p_out = 0.01 + (0.05 - 0.01) * t;
    const auto planted = planted_partition(GeneratorSpec::equal(200, 4, p_in, p_out, 5000 + r));
    const Graph& g = planted.graph;
    const auto cohesion = score_all(g).cohesion_values();
    const auto betweenness = edge_betweenness(g);
    const double rho = pearson(cohesion, betweenness);
    if (rho > 0) ++positive;
    values << (r ? " " : "") << fmt(rho, 2);
  }
  Checks c;
  c.expect(positive >= 18, std::to_string(positive) + "/20 positive; r = " + values.str());
  return c.outcome();
}

Outcome incremental_density() {
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph_with_edges(rng, 100);
    const auto scores = score_all(g);
    const auto curve = mdcore_sweep(g, scores);
    EdgeMask active(g.edge_count(), true);
    for (std::size_t k = 0; k <= g.edge_count(); ++k) {
      if (k > 0) active.set(curve.removal_order[k - 1], false);
      worst = std::max(worst, std::abs(curve.points[k].rho - density(g, scores, active)));
    }
  }
  Checks c;
  c.expect(worst <= 1e-9, "100 graphs, max |rho - recomputed| " + fmt(worst, 3));
  return c.outcome();
}

Outcome scaling() {
  Checks c;
  for (std::size_t n : {1000u, 4000u}) {
    const double degree = 30.0;
    const double mixing = 0.6;
    const std::size_t size = 50;
    const double p_in = (1.0 - mixing) * degree / double(size - 1);
    const double p_out = mixing * degree / double(n - size);
    const auto planted = planted_partition(GeneratorSpec::equal(n, n / size, p_in, p_out, 6000 + n));
    const auto start = Clock::now();
    const auto mdcore = run_pipeline(planted.graph, planted.truth, PruningMethod::kMdcore);
    const auto original = run_pipeline(planted.graph, planted.truth, PruningMethod::kOriginal);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    c.expect(mdcore.detected_count > original.detected_count,
             "n=" + std::to_string(n) + " m=" + std::to_string(planted.graph.edge_count()) +
                 " MDCore DC " + std::to_string(mdcore.detected_count) + " vs unpruned " +
                 std::to_string(original.detected_count));
    c.expect(seconds < 300.0, fmt(seconds, 3) + " s");
  }
  return c.outcome();
}

}  // namespace

int main() {
  std::optional<EuData> eu;
  try {
    eu = load_eu();
  } catch (const std::exception& e) {
    std::cerr << "email-Eu-core load failed: " << e.what() << '\n';
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 weight ablation on email-Eu-core", [&] { return weight_ablation(eu); }},
      {"2 density curve on email-Eu-core", [&] { return density_curve(eu); }},
      {"3 unpruned/MDCore spot checks", [&] { return spot_checks(eu); }},
      {"4 cohesion oracle", cohesion_oracle},
      {"5 truss oracle", truss_oracle},
      {"6 betweenness oracle", betweenness_oracle},
      {"7 cohesion/betweenness sign test", correlation_sign},
      {"8 incremental density", incremental_density},
      {"9 scaling smoke test", scaling},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    if (o.status == Status::kFail) ++failed;
    std::cout << tag << "  " << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed or skipped" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
