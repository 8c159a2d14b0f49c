#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linkc/graph.hpp"

namespace linkc {

using CommunityId = std::int32_t;

// Partial map vertex -> community, with community ids dense in 0..C-1.
class CommunityAssignment {
 public:
  static constexpr CommunityId kUnlabeled = -1;

  CommunityAssignment() = default;
  // All vertices unlabeled.
  explicit CommunityAssignment(std::size_t vertex_count)
      : labels_(vertex_count, kUnlabeled) {}

  // Takes arbitrary non-negative ids (kUnlabeled for none) and renumbers them
  // densely in first-appearance order.
  static CommunityAssignment from_labels(std::vector<CommunityId> labels);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t community_count() const noexcept { return community_count_; }
  std::size_t labeled_count() const noexcept { return labeled_count_; }

  CommunityId operator[](VertexId v) const { return labels_[v]; }
  bool is_labeled(VertexId v) const { return labels_[v] != kUnlabeled; }
  const std::vector<CommunityId>& labels() const noexcept { return labels_; }

  // Vertices of each community, ascending, indexed by community id.
  std::vector<std::vector<VertexId>> members() const;

 private:
  std::vector<CommunityId> labels_;
  std::size_t community_count_ = 0;
  std::size_t labeled_count_ = 0;
};

// Connected components under an (optional) active edge subset.
//
// Edge-bearing components take labels 0..component_count-1 in order of their
// smallest vertex; each isolated vertex then gets its own label after those.
struct Components {
  std::vector<std::uint32_t> labels;
  std::size_t component_count = 0;
  std::size_t isolated_count = 0;

  bool is_isolated(VertexId v) const { return labels[v] >= component_count; }
  // Edge-bearing components as communities; isolated vertices unlabeled.
  CommunityAssignment as_assignment() const;
};

Components connected_components(const Graph& g);
// Throws InvalidArgument when `active` is not sized for `g`.
Components connected_components(const Graph& g, const EdgeMask& active);

}  // namespace linkc
