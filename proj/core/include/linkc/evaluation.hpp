#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linkc/cohesion.hpp"
#include "linkc/community.hpp"
#include "linkc/graph.hpp"

namespace linkc {

// Best-match F-score: each ground-truth community T is matched with the
// detected community D maximizing 2|T∩D| / (|T| + |D|), and the per-T values
// are averaged weighted by |T|. Vertices left unlabeled by `detected` count as
// recall misses. Returns std::nullopt (undefined) when either side has no
// communities. Throws InvalidArgument when the vertex counts differ.
std::optional<double> f_score(const CommunityAssignment& detected, const CommunityAssignment& truth);

// Sample Pearson correlation. Throws InvalidArgument for mismatched lengths or
// fewer than two values, UndefinedResult when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);

struct GeneratorSpec {
  std::vector<std::size_t> community_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;

  // `count` communities splitting `n` vertices as evenly as possible.
  static GeneratorSpec equal(std::size_t n, std::size_t count, double p_in, double p_out,
                             std::uint64_t seed);
  std::size_t vertex_count() const;
  // Throws InvalidArgument unless 0 <= p_out <= p_in <= 1 and sizes are positive.
  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  CommunityAssignment truth;
};

// Planted-partition random graph: each same-community pair is joined with
// probability p_in and every other pair with p_out. Vertices are labeled
// 1..n with communities laid out consecutively. The pair stream is drawn from
// a 64-bit Mersenne Twister, so a GeneratorSpec reproduces the same graph everywhere.
PlantedGraph planted_partition(const GeneratorSpec& spec);

enum class PruningMethod { kOriginal, kSparsify, kMdcore };

std::string_view to_string(PruningMethod method);
// Accepts "original", "sparsify", "mdcore"; throws InvalidArgument otherwise.
PruningMethod parse_pruning_method(std::string_view name);

struct PipelineParams {
  HopWeights weights;
  double sparsify_exponent = 0.5;
  unsigned threads = 0;
};

struct EvalReport {
  PruningMethod method = PruningMethod::kOriginal;
  HopWeights weights;
  std::size_t input_edges = 0;
  std::size_t remaining_edges = 0;
  std::size_t detected_count = 0;
  std::size_t ground_truth_count = 0;
  // Chosen truss level; 0 when nothing was left to cluster.
  std::size_t truss_level = 0;
  std::optional<double> f_score;
  std::chrono::duration<double> elapsed{0.0};
  CommunityAssignment communities;
};

// Applies the pruning method, runs maximal-community truss-finding on what is
// left and scores the detected clusters against `truth`.
EvalReport run_pipeline(const Graph& g, const CommunityAssignment& truth, PruningMethod method,
                        const PipelineParams& params = {});

// The seven non-zero binary hop weightings, all three hops first.
std::vector<HopWeights> binary_weight_ablation();

// MDCore pipeline for every binary weighting, sharing one hop-strength pass.
std::vector<EvalReport> run_weight_ablation(const Graph& g, const CommunityAssignment& truth,
                                            unsigned threads = 0);

// CSV header and rows: method,w1,w2,w3,input_edges,remaining_edges,detected,
// ground_truth,truss_level,f_score,seconds. An undefined F-score is written as "--".
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const EvalReport& report);
// Human-readable "key: value" lines.
void write_report_text(std::ostream& out, const EvalReport& report);

}  // namespace linkc
