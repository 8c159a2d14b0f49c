#include "linkc/truss.hpp"

#include <algorithm>
#include <ostream>

#include "linkc/error.hpp"

namespace linkc {
namespace {

// Calls fn(edge_uw, edge_vw) for every triangle {u, v, w} on edge (u, v).
template <typename Fn>
void for_each_triangle(const Graph& g, EdgeRef e, Fn&& fn) {
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  const auto eu = g.incident_edges(e.u);
  const auto ev = g.incident_edges(e.v);
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < nu.size() && y < nv.size()) {
    if (nu[x] < nv[y]) {
      ++x;
    } else if (nv[y] < nu[x]) {
      ++y;
    } else {
      fn(eu[x], ev[y]);
      ++x;
      ++y;
    }
  }
}

}  // namespace

std::vector<TrussLevel> truss_decomposition(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> support(m, 0);
  std::size_t max_support = 0;
  for (EdgeId e = 0; e < m; ++e) {
    for_each_triangle(g, g.edge(e), [&](EdgeId, EdgeId) { ++support[e]; });
    max_support = std::max(max_support, support[e]);
  }

  // Bucket queue over support values (Batagelj-Zaversnik layout): `order`
  // holds edges sorted by current support, bucket_start[s] the first slot of
  // bucket s, position[e] the slot of e.
  std::vector<std::size_t> bucket_start(max_support + 2, 0);
  for (EdgeId e = 0; e < m; ++e) ++bucket_start[support[e] + 1];
  for (std::size_t s = 1; s < bucket_start.size(); ++s) bucket_start[s] += bucket_start[s - 1];
  std::vector<EdgeId> order(m);
  std::vector<std::size_t> position(m);
  {
    auto fill = bucket_start;
    for (EdgeId e = 0; e < m; ++e) {
      position[e] = fill[support[e]]++;
      order[position[e]] = e;
    }
  }

  auto demote = [&](EdgeId f) {
    const std::size_t s = support[f];
    const std::size_t first = bucket_start[s];
    const EdgeId other = order[first];
    if (other != f) {
      std::swap(order[first], order[position[f]]);
      position[other] = position[f];
      position[f] = first;
    }
    ++bucket_start[s];
    --support[f];
  };

  std::vector<TrussLevel> trussness(m, 2);
  std::vector<bool> removed(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeId e = order[i];
    const std::size_t level = support[e];
    trussness[e] = static_cast<TrussLevel>(level + 2);
    for_each_triangle(g, g.edge(e), [&](EdgeId a, EdgeId b) {
      if (removed[a] || removed[b]) return;
      if (support[a] > level) demote(a);
      if (support[b] > level) demote(b);
    });
    removed[e] = true;
  }
  return trussness;
}

EdgeMask truss_edges(const std::vector<TrussLevel>& trussness, TrussLevel level) {
  EdgeMask mask(trussness.size(), false);
  for (EdgeId e = 0; e < trussness.size(); ++e) {
    if (trussness[e] >= level) mask.set(e, true);
  }
  return mask;
}

TrussResult maximal_community_truss(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("truss-finding needs at least one edge");
  TrussResult result;
  result.trussness = truss_decomposition(g);
  const TrussLevel top = *std::max_element(result.trussness.begin(), result.trussness.end());

  std::size_t best = 0;
  for (TrussLevel level = 2; level <= top; ++level) {
    const auto clusters = connected_components(g, truss_edges(result.trussness, level)).component_count;
    result.level_clusters.emplace(level, clusters);
    if (clusters > best) {
      best = clusters;
      result.chosen_level = level;
    }
  }
  result.communities =
      connected_components(g, truss_edges(result.trussness, result.chosen_level)).as_assignment();
  return result;
}

void write_level_clusters_csv(std::ostream& out, const TrussResult& result) {
  out << "k,clusters\n";
  for (const auto& [level, clusters] : result.level_clusters) out << level << ',' << clusters << '\n';
}

}  // namespace linkc
