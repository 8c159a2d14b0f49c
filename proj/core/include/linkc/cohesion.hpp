#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "linkc/graph.hpp"

namespace linkc {

// Non-negative aggregation weights for the 1-, 2- and 3-hop terms.
struct HopWeights {
  double one = 1.0;
  double two = 1.0;
  double three = 1.0;

  std::array<double, 3> as_array() const { return {one, two, three}; }
  // Throws InvalidArgument for negative, non-finite or all-zero weights.
  void validate() const;

  friend bool operator==(const HopWeights&, const HopWeights&) = default;
};

struct EdgeScore {
  std::array<double, 3> strength{};    // raw hop strengths a1, a2, a3
  std::array<double, 3> normalized{};  // a / (mean + a), in [0, 1)
  double cohesion = 0.0;
};

// Per-edge link strengths and cohesion, indexed by EdgeId.
class EdgeScoreTable {
 public:
  EdgeScoreTable() = default;

  // Normalizes raw strengths against their per-hop means over all edges and
  // aggregates them with `weights`. Throws InvalidArgument when `strengths`
  // is empty or the weights are invalid.
  static EdgeScoreTable from_strengths(std::vector<std::array<double, 3>> strengths,
                                       const HopWeights& weights);

  std::size_t size() const noexcept { return records_.size(); }
  const EdgeScore& operator[](EdgeId e) const { return records_[e]; }
  std::span<const EdgeScore> records() const noexcept { return records_; }

  double cohesion(EdgeId e) const { return records_[e].cohesion; }
  std::vector<double> cohesion_values() const;

  // Mean raw strength per hop over all edges.
  const std::array<double, 3>& mean_strength() const noexcept { return mean_; }
  const HopWeights& weights() const noexcept { return weights_; }

 private:
  std::vector<EdgeScore> records_;
  std::array<double, 3> mean_{};
  HopWeights weights_;
};

// 1 / (k_i k_j).
double single_link_strength(const Graph& g, EdgeRef e);
// Triangle support: sum over common neighbors l of 1/k_l^2, scaled by 1/(k_i k_j)^2.
double double_link_strength(const Graph& g, EdgeRef e);
// Quadrilateral support: sum over paths i-m-n-j with m, n distinct and outside
// {i, j} of 1/(k_m k_n)^2, scaled by 1/(k_i k_j)^2. Both orientations of a
// 4-cycle through the edge count as separate paths.
double triple_link_strength(const Graph& g, EdgeRef e);

// Hop strengths for every edge. `threads` = 0 uses the hardware concurrency.
std::vector<std::array<double, 3>> hop_strengths(const Graph& g, unsigned threads = 0);

// Full cohesion table. Throws InvalidArgument for an edgeless graph or invalid weights.
EdgeScoreTable score_all(const Graph& g, const HopWeights& weights = {}, unsigned threads = 0);

// Header "u,v,a1,a2,a3,c1,c2,c3,cohesion"; one row per edge with external ids.
void write_scores_csv(std::ostream& out, const Graph& g, const EdgeScoreTable& scores);

}  // namespace linkc
