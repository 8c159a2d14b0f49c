#include "linkc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "linkc/baselines.hpp"
#include "linkc/density.hpp"
#include "linkc/error.hpp"
#include "linkc/truss.hpp"

namespace linkc {

std::optional<double> f_score(const CommunityAssignment& detected, const CommunityAssignment& truth) {
  if (detected.vertex_count() != truth.vertex_count()) {
    throw InvalidArgument("detected and ground-truth assignments cover different vertex sets");
  }
  if (detected.community_count() == 0 || truth.community_count() == 0) return std::nullopt;

  std::vector<std::size_t> truth_size(truth.community_count(), 0);
  std::vector<std::size_t> detected_size(detected.community_count(), 0);
  std::map<std::pair<CommunityId, CommunityId>, std::size_t> overlap;
  for (VertexId v = 0; v < truth.vertex_count(); ++v) {
    if (truth.is_labeled(v)) ++truth_size[static_cast<std::size_t>(truth[v])];
    if (detected.is_labeled(v)) ++detected_size[static_cast<std::size_t>(detected[v])];
    if (truth.is_labeled(v) && detected.is_labeled(v)) ++overlap[{truth[v], detected[v]}];
  }

  std::vector<double> best(truth.community_count(), 0.0);
  for (const auto& [key, shared] : overlap) {
    const auto t = static_cast<std::size_t>(key.first);
    const auto d = static_cast<std::size_t>(key.second);
    const double f = 2.0 * static_cast<double>(shared) /
                     static_cast<double>(truth_size[t] + detected_size[d]);
    best[t] = std::max(best[t], f);
  }

  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t t = 0; t < best.size(); ++t) {
    weighted += static_cast<double>(truth_size[t]) * best[t];
    total += static_cast<double>(truth_size[t]);
  }
  return weighted / total;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("pearson: series lengths differ");
  if (x.size() < 2) throw InvalidArgument("pearson: need at least two values");
  const auto n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedResult("pearson: a series has zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

GeneratorSpec GeneratorSpec::equal(std::size_t n, std::size_t count, double p_in, double p_out,
                                   std::uint64_t seed) {
  if (count == 0 || count > n) {
    throw InvalidArgument("cannot split " + std::to_string(n) + " vertices into " +
                          std::to_string(count) + " communities");
  }
  GeneratorSpec spec;
  for (std::size_t c = 0; c < count; ++c) {
    spec.community_sizes.push_back(n * (c + 1) / count - n * c / count);
  }
  spec.p_in = p_in;
  spec.p_out = p_out;
  spec.seed = seed;
  return spec;
}

std::size_t GeneratorSpec::vertex_count() const {
  return std::accumulate(community_sizes.begin(), community_sizes.end(), std::size_t{0});
}

void GeneratorSpec::validate() const {
  if (!(p_out >= 0.0 && p_out <= p_in && p_in <= 1.0)) {
    throw InvalidArgument("generator probabilities must satisfy 0 <= p_out <= p_in <= 1");
  }
  for (auto size : community_sizes) {
    if (size == 0) throw InvalidArgument("generator community sizes must be positive");
  }
}

PlantedGraph planted_partition(const GeneratorSpec& spec) {
  spec.validate();
  const std::size_t n = spec.vertex_count();
  std::vector<CommunityId> membership;
  membership.reserve(n);
  for (std::size_t c = 0; c < spec.community_sizes.size(); ++c) {
    membership.insert(membership.end(), spec.community_sizes[c], static_cast<CommunityId>(c));
  }

  std::mt19937_64 rng(spec.seed);
  // 53 high bits -> uniform double in [0, 1), independent of the standard
  // library's distribution implementation.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p = membership[u] == membership[v] ? spec.p_in : spec.p_out;
      if (uniform() < p) pairs.emplace_back(u, v);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  return {Graph::from_pairs(n, pairs, std::move(labels)),
          CommunityAssignment::from_labels(std::move(membership))};
}

std::string_view to_string(PruningMethod method) {
  switch (method) {
    case PruningMethod::kOriginal:
      return "original";
    case PruningMethod::kSparsify:
      return "sparsify";
    case PruningMethod::kMdcore:
      return "mdcore";
  }
  return "unknown";
}

PruningMethod parse_pruning_method(std::string_view name) {
  for (auto m : {PruningMethod::kOriginal, PruningMethod::kSparsify, PruningMethod::kMdcore}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown pruning method '" + std::string(name) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

void cluster_and_score(const Graph& reduced, const CommunityAssignment& truth, EvalReport& report) {
  report.remaining_edges = reduced.edge_count();
  report.ground_truth_count = truth.community_count();
  if (reduced.edge_count() == 0) {
    report.communities = CommunityAssignment(reduced.vertex_count());
  } else {
    auto truss = maximal_community_truss(reduced);
    report.truss_level = truss.chosen_level;
    report.communities = std::move(truss.communities);
  }
  report.detected_count = report.communities.community_count();
  report.f_score = f_score(report.communities, truth);
}

void check_truth(const Graph& g, const CommunityAssignment& truth) {
  if (truth.vertex_count() != g.vertex_count()) {
    throw InvalidArgument("ground truth covers " + std::to_string(truth.vertex_count()) +
                          " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

EvalReport run_pipeline(const Graph& g, const CommunityAssignment& truth, PruningMethod method,
                        const PipelineParams& params) {
  check_truth(g, truth);
  const auto start = Clock::now();
  EvalReport report;
  report.method = method;
  report.weights = params.weights;
  report.input_edges = g.edge_count();

  switch (method) {
    case PruningMethod::kOriginal:
      cluster_and_score(g, truth, report);
      break;
    case PruningMethod::kSparsify:
      cluster_and_score(sparsify_local(g, params.sparsify_exponent), truth, report);
      break;
    case PruningMethod::kMdcore:
      cluster_and_score(prune(g, score_all(g, params.weights, params.threads)), truth, report);
      break;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

std::vector<HopWeights> binary_weight_ablation() {
  return {{1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

std::vector<EvalReport> run_weight_ablation(const Graph& g, const CommunityAssignment& truth,
                                            unsigned threads) {
  check_truth(g, truth);
  const auto start = Clock::now();
  const auto strengths = hop_strengths(g, threads);
  const auto shared = Clock::now() - start;

  std::vector<EvalReport> out;
  for (const auto& weights : binary_weight_ablation()) {
    const auto begin = Clock::now();
    EvalReport report;
    report.method = PruningMethod::kMdcore;
    report.weights = weights;
    report.input_edges = g.edge_count();
    cluster_and_score(prune(g, EdgeScoreTable::from_strengths(strengths, weights)), truth, report);
    report.elapsed = (Clock::now() - begin) + shared;
    out.push_back(std::move(report));
  }
  return out;
}

void write_report_csv_header(std::ostream& out) {
  out << "method,w1,w2,w3,input_edges,remaining_edges,detected,ground_truth,truss_level,f_score,seconds\n";
}

void write_report_csv_row(std::ostream& out, const EvalReport& r) {
  out << to_string(r.method) << ',' << r.weights.one << ',' << r.weights.two << ',' << r.weights.three
      << ',' << r.input_edges << ',' << r.remaining_edges << ',' << r.detected_count << ','
      << r.ground_truth_count << ',' << r.truss_level << ',';
  if (r.f_score) {
    out << *r.f_score;
  } else {
    out << "--";
  }
  out << ',' << r.elapsed.count() << '\n';
}

void write_report_text(std::ostream& out, const EvalReport& r) {
  out << "method: " << to_string(r.method) << '\n'
      << "weights: " << r.weights.one << ' ' << r.weights.two << ' ' << r.weights.three << '\n'
      << "edges: " << r.remaining_edges << " of " << r.input_edges << '\n'
      << "truss level: " << r.truss_level << '\n'
      << "detected communities: " << r.detected_count << " of " << r.ground_truth_count << '\n'
      << "f-score: ";
  if (r.f_score) {
    out << *r.f_score;
  } else {
    out << "--";
  }
  out << '\n' << "seconds: " << r.elapsed.count() << '\n';
}

}  // namespace linkc
