#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linkc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge with endpoints in canonical order (u < v).
struct EdgeRef {
  VertexId u = 0;
  VertexId v = 0;

  // Throws InvalidArgument for a == b.
  static EdgeRef canonical(VertexId a, VertexId b);

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Subset of a graph's edges, indexed by EdgeId.
class EdgeMask {
 public:
  EdgeMask() = default;
  EdgeMask(std::size_t edge_count, bool value)
      : bits_(edge_count, value ? 1 : 0), count_(value ? edge_count : 0) {}

  bool operator[](EdgeId e) const { return bits_[e] != 0; }
  void set(EdgeId e, bool value) {
    if ((bits_[e] != 0) == value) return;
    bits_[e] = value ? 1 : 0;
    value ? ++count_ : --count_;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  // Number of active edges.
  std::size_t count() const noexcept { return count_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

// Counters describing what normalization happened while building a graph.
struct BuildStats {
  std::size_t input_pairs = 0;
  std::size_t self_loops_dropped = 0;
  // Pairs that repeated an existing undirected edge in the same orientation
  // (or in either orientation when the input is declared undirected).
  std::size_t duplicates_collapsed = 0;
  // Reverse-orientation pairs merged while symmetrizing directed input.
  std::size_t reciprocal_merged = 0;
};

// Immutable undirected simple graph in compressed sparse row form.
//
// Vertices are dense ids 0..V-1; each carries the external label it was read
// with. Edges are numbered 0..E-1 in canonical (u, v) order, and every
// neighbor list is sorted ascending with a parallel list of incident edge ids.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over `vertex_count` vertices from unordered pairs.
  // Duplicate pairs (either orientation) collapse into one edge. Self-loops
  // and out-of-range ids throw InvalidArgument. `labels` is either empty
  // (labels become the decimal vertex ids) or has one entry per vertex.
  static Graph from_pairs(std::size_t vertex_count,
                          std::span<const std::pair<VertexId, VertexId>> pairs,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {slot_edges_.data() + offsets_[v], degree(v)};
  }

  const std::vector<EdgeRef>& edges() const noexcept { return edges_; }
  EdgeRef edge(EdgeId e) const { return edges_[e]; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
  // Throws InvalidArgument when the edge is absent.
  EdgeId edge_id(EdgeRef e) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Same vertex set and labels, restricted to the edges active in `keep`.
  Graph subgraph(const EdgeMask& keep) const;

  const BuildStats& build_stats() const noexcept { return stats_; }
  void set_build_stats(const BuildStats& stats) { stats_ = stats; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  static Graph from_canonical(std::vector<EdgeRef> edges, std::vector<std::string> labels);

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<EdgeId> slot_edges_;
  std::vector<EdgeRef> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  BuildStats stats_;
};

// Throws InvalidArgument unless `mask` was sized for `g`.
void check_mask(const Graph& g, const EdgeMask& mask);

}  // namespace linkc
