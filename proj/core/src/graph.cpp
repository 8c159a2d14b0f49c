#include "linkc/graph.hpp"

#include <algorithm>

#include "linkc/error.hpp"

namespace linkc {

EdgeRef EdgeRef::canonical(VertexId a, VertexId b) {
  if (a == b) throw InvalidArgument("self-loop on vertex " + std::to_string(a));
  return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
}

Graph Graph::from_pairs(std::size_t vertex_count,
                        std::span<const std::pair<VertexId, VertexId>> pairs,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw InvalidArgument("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(vertex_count));
  }
  if (labels.empty()) {
    labels.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  }

  std::vector<EdgeRef> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= vertex_count || b >= vertex_count) {
      throw InvalidArgument("vertex id out of range in pair (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
    }
    edges.push_back(EdgeRef::canonical(a, b));
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  const auto collapsed = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  Graph g = from_canonical(std::move(edges), std::move(labels));
  g.stats_.input_pairs = pairs.size();
  g.stats_.duplicates_collapsed = collapsed;
  return g;
}

Graph Graph::from_canonical(std::vector<EdgeRef> edges, std::vector<std::string> labels) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.index_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw InvalidArgument("duplicate vertex label '" + g.labels_[v] + "'");
    }
  }

  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.targets_.resize(2 * g.edges_.size());
  g.slot_edges_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v); filling in that order leaves each list sorted:
  // a vertex w first receives its smaller neighbors (as v) in u order, then its
  // larger neighbors (as u) in v order.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.targets_[cursor[e.v]] = e.u;
    g.slot_edges_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.targets_[cursor[e.u]] = e.v;
    g.slot_edges_[cursor[e.u]++] = id;
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count() || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

EdgeId Graph::edge_id(EdgeRef e) const {
  if (auto id = find_edge(e.u, e.v)) return *id;
  throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                        ") is not in the graph");
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::subgraph(const EdgeMask& keep) const {
  check_mask(*this, keep);
  std::vector<EdgeRef> kept;
  kept.reserve(keep.count());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (keep[e]) kept.push_back(edges_[e]);
  }
  return from_canonical(std::move(kept), labels_);
}

void check_mask(const Graph& g, const EdgeMask& mask) {
  if (mask.size() != g.edge_count()) {
    throw InvalidArgument("edge subset covers " + std::to_string(mask.size()) +
                          " edges but the graph has " + std::to_string(g.edge_count()));
  }
}

}  // namespace linkc
