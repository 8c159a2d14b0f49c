#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linkc/graph.hpp"
#include "linkc/io.hpp"

namespace linkc::testing {

inline Graph from_text(const std::string& text, const LoadOptions& options = {}) {
  std::istringstream in(text);
  return load_edge_list(in, options);
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  return Graph::from_pairs(n, pairs);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return make_graph(n, pairs);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) pairs.emplace_back(u, static_cast<VertexId>((u + 1) % n));
  return make_graph(n, pairs);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  return make_graph(n, pairs);
}

// Center 0 with `leaves` spokes.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return make_graph(leaves + 1, pairs);
}

// Two K4 on {0..3} and {4..7} joined by the bridge (3, 4).
inline Graph barbell_k4() {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId base : {0u, 4u}) {
    for (VertexId u = 0; u < 4; ++u) {
      for (VertexId v = u + 1; v < 4; ++v) pairs.emplace_back(base + u, base + v);
    }
  }
  pairs.emplace_back(3, 4);
  return make_graph(8, pairs);
}

// Erdos-Renyi G(n, p) with n and p drawn per instance.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_n, double min_p = 0.05,
                          double max_p = 0.6) {
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  std::uniform_real_distribution<double> density(min_p, max_p);
  const std::size_t n = size(rng);
  const double p = density(rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return make_graph(n, pairs);
}

// Random graph with at most `max_edges` edges and at least one edge.
inline Graph random_graph_with_edges(std::mt19937_64& rng, std::size_t max_edges) {
  while (true) {
    Graph g = random_graph(rng, 20, 0.05, 0.5);
    if (g.edge_count() >= 1 && g.edge_count() <= max_edges) return g;
  }
}

}  // namespace linkc::testing
