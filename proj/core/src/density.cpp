#include "linkc/density.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "linkc/error.hpp"

namespace linkc {
namespace {

void check_scores(const Graph& g, const EdgeScoreTable& scores) {
  if (scores.size() != g.edge_count()) {
    throw InvalidArgument("score table covers " + std::to_string(scores.size()) +
                          " edges but the graph has " + std::to_string(g.edge_count()));
  }
}

}  // namespace

EdgeMask DensityCurve::kept_edges(std::size_t edge_count) const {
  if (removal_order.size() != edge_count) {
    throw InvalidArgument("density curve was built for a different edge set");
  }
  EdgeMask keep(edge_count, true);
  for (std::size_t k = 0; k < best_removed; ++k) keep.set(removal_order[k], false);
  return keep;
}

double density(const Graph& g, const EdgeScoreTable& scores, const EdgeMask& active) {
  check_scores(g, scores);
  check_mask(g, active);
  if (active.count() == 0) return 0.0;
  std::vector<bool> covered(g.vertex_count(), false);
  double total = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!active[e]) continue;
    total += scores.cohesion(e);
    covered[g.edge(e).u] = true;
    covered[g.edge(e).v] = true;
  }
  const auto vertices = static_cast<double>(std::count(covered.begin(), covered.end(), true));
  return vertices * total / static_cast<double>(active.count());
}

DensityCurve mdcore_sweep(const Graph& g, const EdgeScoreTable& scores) {
  check_scores(g, scores);
  const std::size_t m = g.edge_count();

  DensityCurve curve;
  curve.removal_order.resize(m);
  std::iota(curve.removal_order.begin(), curve.removal_order.end(), EdgeId{0});
  std::stable_sort(curve.removal_order.begin(), curve.removal_order.end(),
                   [&scores](EdgeId a, EdgeId b) { return scores.cohesion(a) < scores.cohesion(b); });

  // remaining[k] = cohesion mass left after k removals, summed from the
  // strongest end so no running subtraction accumulates error.
  std::vector<double> remaining(m + 1, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    remaining[k] = remaining[k + 1] + scores.cohesion(curve.removal_order[k]);
  }

  std::vector<std::size_t> active_degree(g.vertex_count());
  std::size_t covered = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    active_degree[v] = g.degree(v);
    if (active_degree[v] > 0) ++covered;
  }

  curve.points.reserve(m + 1);
  auto record = [&](std::size_t removed) {
    const std::size_t left = m - removed;
    const double rho =
        left == 0 ? 0.0 : static_cast<double>(covered) * remaining[removed] / static_cast<double>(left);
    curve.points.push_back({removed, rho});
    if (removed == 0 || rho > curve.best_rho * (1.0 + kDensityTieTolerance)) {
      curve.best_rho = rho;
      curve.best_removed = removed;
    }
  };

  record(0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto e = g.edge(curve.removal_order[k]);
    if (--active_degree[e.u] == 0) --covered;
    if (--active_degree[e.v] == 0) --covered;
    record(k + 1);
  }
  return curve;
}

Graph prune(const Graph& g, const DensityCurve& curve) {
  return g.subgraph(curve.kept_edges(g.edge_count()));
}

Graph prune(const Graph& g, const EdgeScoreTable& scores) {
  return prune(g, mdcore_sweep(g, scores));
}

void write_density_csv(std::ostream& out, const DensityCurve& curve) {
  const auto old_precision = out.precision(17);
  out << "removed,rho\n";
  for (const auto& p : curve.points) out << p.removed << ',' << p.rho << '\n';
  out.precision(old_precision);
}

}  // namespace linkc
