#include "linkc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "linkc/error.hpp"
#include "parallel.hpp"

namespace linkc {
namespace {

std::size_t common_neighbor_count(const Graph& g, VertexId a, VertexId b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::size_t count = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < na.size() && y < nb.size()) {
    if (na[x] < nb[y]) {
      ++x;
    } else if (nb[y] < na[x]) {
      ++y;
    } else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

double jaccard_unchecked(const Graph& g, EdgeRef e) {
  const auto shared = static_cast<double>(common_neighbor_count(g, e.u, e.v));
  const auto joined = static_cast<double>(g.degree(e.u) + g.degree(e.v)) - shared;
  return shared / joined;
}

// Brandes accumulation from one source, adding each edge's dependency into `acc`.
struct BrandesScratch {
  std::vector<std::int64_t> distance;
  std::vector<double> paths;
  std::vector<double> dependency;
  std::vector<VertexId> visit_order;
};

void accumulate_from(const Graph& g, VertexId source, BrandesScratch& s, std::vector<double>& acc) {
  s.visit_order.clear();
  std::fill(s.distance.begin(), s.distance.end(), -1);
  std::fill(s.paths.begin(), s.paths.end(), 0.0);
  std::fill(s.dependency.begin(), s.dependency.end(), 0.0);

  s.distance[source] = 0;
  s.paths[source] = 1.0;
  s.visit_order.push_back(source);
  for (std::size_t head = 0; head < s.visit_order.size(); ++head) {
    const VertexId v = s.visit_order[head];
    for (VertexId w : g.neighbors(v)) {
      if (s.distance[w] < 0) {
        s.distance[w] = s.distance[v] + 1;
        s.visit_order.push_back(w);
      }
      if (s.distance[w] == s.distance[v] + 1) s.paths[w] += s.paths[v];
    }
  }

  for (std::size_t idx = s.visit_order.size(); idx-- > 1;) {
    const VertexId w = s.visit_order[idx];
    const auto nbrs = g.neighbors(w);
    const auto ids = g.incident_edges(w);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const VertexId v = nbrs[k];
      if (s.distance[v] != s.distance[w] - 1) continue;
      const double share = s.paths[v] / s.paths[w] * (1.0 + s.dependency[w]);
      acc[ids[k]] += share;
      s.dependency[v] += share;
    }
  }
}

}  // namespace

double jaccard_similarity(const Graph& g, EdgeRef e) {
  (void)g.edge_id(e);
  return jaccard_unchecked(g, e);
}

EdgeValues jaccard_similarities(const Graph& g) {
  EdgeValues out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = jaccard_unchecked(g, g.edge(e));
  return out;
}

Graph sparsify_local(const Graph& g, double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidArgument("sparsify exponent must lie in (0, 1], got " + std::to_string(exponent));
  }
  const auto similarity = jaccard_similarities(g);
  EdgeMask keep(g.edge_count(), false);
  std::vector<EdgeId> ranked;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto incident = g.incident_edges(v);
    if (incident.empty()) continue;
    ranked.assign(incident.begin(), incident.end());
    std::sort(ranked.begin(), ranked.end(), [&similarity](EdgeId a, EdgeId b) {
      return similarity[a] != similarity[b] ? similarity[a] > similarity[b] : a < b;
    });
    const auto quota = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(ranked.size()), exponent)));
    for (std::size_t k = 0; k < std::min(quota, ranked.size()); ++k) keep.set(ranked[k], true);
  }
  return g.subgraph(keep);
}

EdgeValues edge_betweenness(const Graph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  threads = detail::resolve_threads(threads, n);

  // Static source ranges, reduced in range order, so the floating-point sum
  // depends only on the thread count.
  std::vector<EdgeValues> partial(threads, EdgeValues(g.edge_count(), 0.0));
  auto run = [&](unsigned t) {
    BrandesScratch s{std::vector<std::int64_t>(n), std::vector<double>(n), std::vector<double>(n), {}};
    const std::size_t begin = n * t / threads;
    const std::size_t end = n * (t + 1) / threads;
    for (std::size_t src = begin; src < end; ++src) {
      accumulate_from(g, static_cast<VertexId>(src), s, partial[t]);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(run, t);
    run(0);
  }

  EdgeValues out(g.edge_count(), 0.0);
  for (const auto& p : partial) {
    for (EdgeId e = 0; e < out.size(); ++e) out[e] += p[e];
  }
  // Every unordered pair was counted once from each end.
  for (double& v : out) v *= 0.5;
  return out;
}

void write_edge_values_csv(std::ostream& out, const Graph& g, const EdgeValues& values,
                           std::string_view column) {
  if (values.size() != g.edge_count()) {
    throw InvalidArgument("edge values do not match the graph's edge set");
  }
  const auto old_precision = out.precision(17);
  out << "u,v," << column << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.label(g.edge(e).u) << ',' << g.label(g.edge(e).v) << ',' << values[e] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace linkc
