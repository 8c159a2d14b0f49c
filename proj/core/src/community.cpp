#include "linkc/community.hpp"

#include <string>
#include <unordered_map>

#include "linkc/error.hpp"

namespace linkc {

CommunityAssignment CommunityAssignment::from_labels(std::vector<CommunityId> labels) {
  CommunityAssignment out;
  std::unordered_map<CommunityId, CommunityId> dense;
  for (auto& label : labels) {
    if (label == kUnlabeled) continue;
    if (label < 0) throw InvalidArgument("negative community id " + std::to_string(label));
    const auto [it, inserted] = dense.emplace(label, static_cast<CommunityId>(dense.size()));
    label = it->second;
    ++out.labeled_count_;
  }
  out.community_count_ = dense.size();
  out.labels_ = std::move(labels);
  return out;
}

std::vector<std::vector<VertexId>> CommunityAssignment::members() const {
  std::vector<std::vector<VertexId>> out(community_count_);
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] != kUnlabeled) out[static_cast<std::size_t>(labels_[v])].push_back(v);
  }
  return out;
}

CommunityAssignment Components::as_assignment() const {
  std::vector<CommunityId> out(labels.size(), CommunityAssignment::kUnlabeled);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < component_count) out[v] = static_cast<CommunityId>(labels[v]);
  }
  return CommunityAssignment::from_labels(std::move(out));
}

namespace {

template <typename IsActive>
Components label_components(const Graph& g, IsActive is_active) {
  constexpr auto kUnvisited = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.vertex_count();
  Components out;
  out.labels.assign(n, kUnvisited);

  std::vector<bool> has_edge(n, false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!is_active(e)) continue;
    has_edge[g.edge(e).u] = true;
    has_edge[g.edge(e).v] = true;
  }

  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (!has_edge[root] || out.labels[root] != kUnvisited) continue;
    const auto label = static_cast<std::uint32_t>(out.component_count++);
    out.labels[root] = label;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      const auto nbrs = g.neighbors(v);
      const auto ids = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!is_active(ids[i]) || out.labels[nbrs[i]] != kUnvisited) continue;
        out.labels[nbrs[i]] = label;
        stack.push_back(nbrs[i]);
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (out.labels[v] != kUnvisited) continue;
    out.labels[v] = static_cast<std::uint32_t>(out.component_count + out.isolated_count++);
  }
  return out;
}

}  // namespace

Components connected_components(const Graph& g) {
  return label_components(g, [](EdgeId) { return true; });
}

Components connected_components(const Graph& g, const EdgeMask& active) {
  check_mask(g, active);
  return label_components(g, [&active](EdgeId e) { return active[e]; });
}

}  // namespace linkc
