#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "linkc/community.hpp"
#include "linkc/graph.hpp"

namespace linkc {

using TrussLevel = std::uint32_t;

// Trussness per edge: the largest k such that the edge belongs to the k-truss,
// the maximal subgraph in which every edge closes at least k-2 triangles.
// Every edge has trussness >= 2.
std::vector<TrussLevel> truss_decomposition(const Graph& g);

// Edges with trussness >= level.
EdgeMask truss_edges(const std::vector<TrussLevel>& trussness, TrussLevel level);

struct TrussResult {
  std::vector<TrussLevel> trussness;
  // level -> number of connected components with at least one edge.
  std::map<TrussLevel, std::size_t> level_clusters;
  TrussLevel chosen_level = 2;
  // Components of the chosen level; vertices outside it are unlabeled.
  CommunityAssignment communities;

  std::size_t cluster_count() const { return communities.community_count(); }
};

// Scans levels 2..max trussness and picks the level with the most clusters,
// preferring the lower level on ties. Throws InvalidArgument for an edgeless graph.
TrussResult maximal_community_truss(const Graph& g);

// Header "k,clusters".
void write_level_clusters_csv(std::ostream& out, const TrussResult& result);

}  // namespace linkc
