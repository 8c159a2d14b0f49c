#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "linkc/graph.hpp"

namespace linkc {

// One value per edge, indexed by EdgeId.
using EdgeValues = std::vector<double>;

// |N(i) ∩ N(j)| / |N(i) ∪ N(j)| over open neighborhoods. Throws
// InvalidArgument when e is not an edge of g.
double jaccard_similarity(const Graph& g, EdgeRef e);
EdgeValues jaccard_similarities(const Graph& g);

// Local similarity sparsification: every vertex of degree d marks its
// ceil(d^exponent) most similar incident edges (ties by edge id) and an edge
// survives when either endpoint marks it. Throws InvalidArgument unless
// 0 < exponent <= 1.
Graph sparsify_local(const Graph& g, double exponent = 0.5);

// Exact edge betweenness: for each edge, the sum over unordered vertex pairs
// of the fraction of shortest paths that use it. Pairs in different
// components contribute nothing. `threads` = 0 uses the hardware concurrency;
// results are identical for a fixed thread count.
EdgeValues edge_betweenness(const Graph& g, unsigned threads = 0);

// Header "u,v,<column>"; one row per edge with external ids.
void write_edge_values_csv(std::ostream& out, const Graph& g, const EdgeValues& values,
                           std::string_view column);

}  // namespace linkc
