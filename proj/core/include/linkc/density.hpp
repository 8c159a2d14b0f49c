#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "linkc/cohesion.hpp"
#include "linkc/graph.hpp"

namespace linkc {

struct DensityPoint {
  std::size_t removed = 0;
  double rho = 0.0;
};

// Result of removing edges weakest-first and tracking density after each removal.
struct DensityCurve {
  // points[k] is the density after the first k removals; size |E| + 1.
  std::vector<DensityPoint> points;
  // Edges in removal order: ascending cohesion, ties by edge id.
  std::vector<EdgeId> removal_order;
  std::size_t best_removed = 0;
  double best_rho = 0.0;

  // Edges that survive the best prefix.
  EdgeMask kept_edges(std::size_t edge_count) const;
};

// Relative margin a later prefix must beat to count as a new maximum; equal
// densities up to rounding resolve to the smaller removal count.
inline constexpr double kDensityTieTolerance = 1e-12;

// (vertices with an active edge) x (mean cohesion over active edges); 0 when
// no edge is active. Throws InvalidArgument on size mismatches.
double density(const Graph& g, const EdgeScoreTable& scores, const EdgeMask& active);

// Removes edges in ascending cohesion order, never rescoring, and records the
// density after every removal. Throws InvalidArgument when `scores` does not
// cover g's edges.
DensityCurve mdcore_sweep(const Graph& g, const EdgeScoreTable& scores);

// Subgraph kept at the density maximum. Vertices left without edges stay in
// the vertex set.
Graph prune(const Graph& g, const EdgeScoreTable& scores);
Graph prune(const Graph& g, const DensityCurve& curve);

// Header "removed,rho".
void write_density_csv(std::ostream& out, const DensityCurve& curve);

}  // namespace linkc
