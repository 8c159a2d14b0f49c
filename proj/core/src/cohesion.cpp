#include "linkc/cohesion.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "linkc/error.hpp"
#include "parallel.hpp"

namespace linkc {
namespace {

double inverse_square_degree(const Graph& g, VertexId v) {
  const auto k = static_cast<double>(g.degree(v));
  return 1.0 / (k * k);
}

double endpoint_scale(const Graph& g, EdgeRef e) {
  const double a1 = single_link_strength(g, e);
  return a1 * a1;
}

// Sum of 1/k_n^2 over n in N(a) ∩ N(b), skipping `excluded`.
double common_neighbor_weight(const Graph& g, VertexId a, VertexId b, VertexId excluded) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  double sum = 0.0;
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < na.size() && y < nb.size()) {
    if (na[x] < nb[y]) {
      ++x;
    } else if (nb[y] < na[x]) {
      ++y;
    } else {
      if (na[x] != excluded) sum += inverse_square_degree(g, na[x]);
      ++x;
      ++y;
    }
  }
  return sum;
}

void require_edge(const Graph& g, EdgeRef e) { (void)g.edge_id(e); }

}  // namespace

void HopWeights::validate() const {
  double total = 0.0;
  for (double w : as_array()) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("hop weights must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0.0) throw InvalidArgument("hop weights must not all be zero");
}

EdgeScoreTable EdgeScoreTable::from_strengths(std::vector<std::array<double, 3>> strengths,
                                              const HopWeights& weights) {
  weights.validate();
  if (strengths.empty()) throw InvalidArgument("cannot normalize link strengths of an edgeless graph");

  EdgeScoreTable table;
  table.weights_ = weights;
  for (const auto& a : strengths) {
    for (std::size_t hop = 0; hop < 3; ++hop) table.mean_[hop] += a[hop];
  }
  for (auto& m : table.mean_) m /= static_cast<double>(strengths.size());

  const auto w = weights.as_array();
  const double weight_total = w[0] + w[1] + w[2];
  table.records_.resize(strengths.size());
  for (std::size_t e = 0; e < strengths.size(); ++e) {
    auto& record = table.records_[e];
    record.strength = strengths[e];
    double aggregate = 0.0;
    for (std::size_t hop = 0; hop < 3; ++hop) {
      const double a = strengths[e][hop];
      const double denom = table.mean_[hop] + a;
      record.normalized[hop] = denom > 0.0 ? a / denom : 0.0;
      aggregate += w[hop] * record.normalized[hop];
    }
    record.cohesion = aggregate / weight_total;
  }
  return table;
}

std::vector<double> EdgeScoreTable::cohesion_values() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.cohesion);
  return out;
}

double single_link_strength(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  return 1.0 / (static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v)));
}

double double_link_strength(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  return endpoint_scale(g, e) * common_neighbor_weight(g, e.u, e.v, e.u);
}

double triple_link_strength(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  double sum = 0.0;
  for (VertexId m : g.neighbors(e.u)) {
    if (m == e.v) continue;
    // n ranges over N(m) ∩ N(v) minus u; n != m holds since the graph is simple.
    sum += inverse_square_degree(g, m) * common_neighbor_weight(g, m, e.v, e.u);
  }
  return endpoint_scale(g, e) * sum;
}

std::vector<std::array<double, 3>> hop_strengths(const Graph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  std::vector<double> weight(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 0) weight[v] = inverse_square_degree(g, v);
  }

  // Each edge is evaluated from its higher-degree endpoint (the hub), so the
  // per-edge scan runs over the lower-degree endpoint's neighbors.
  auto is_hub = [&g](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a > b;
  };

  std::vector<std::array<double, 3>> out(g.edge_count());
  struct Scratch {
    // paths[m] = sum of 1/k_n^2 over n in N(hub) ∩ N(m): the 2-hop weight
    // between m and the hub. Extended precision keeps the later subtraction
    // of a single term exact enough.
    std::vector<long double> paths;
    std::vector<VertexId> touched;
  };

  detail::parallel_for_each(
      n, threads, [n] { return Scratch{std::vector<long double>(n, 0.0L), {}}; },
      [&](Scratch& s, std::size_t hub_index) {
        const auto hub = static_cast<VertexId>(hub_index);
        const auto hub_nbrs = g.neighbors(hub);
        bool owns_edge = false;
        for (VertexId i : hub_nbrs) owns_edge = owns_edge || is_hub(hub, i);
        if (!owns_edge) return;

        for (VertexId mid : hub_nbrs) {
          for (VertexId m : g.neighbors(mid)) {
            if (s.paths[m] == 0.0L) s.touched.push_back(m);
            s.paths[m] += weight[mid];
          }
        }

        const auto hub_edges = g.incident_edges(hub);
        for (std::size_t slot = 0; slot < hub_nbrs.size(); ++slot) {
          const VertexId i = hub_nbrs[slot];
          if (!is_hub(hub, i)) continue;
          const double scale = 1.0 / (static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(hub)));
          long double quad = 0.0L;
          for (VertexId m : g.neighbors(i)) {
            if (m == hub) continue;
            // Drop the n = i term: i is always a common neighbor of m and the hub.
            quad += weight[m] * (s.paths[m] - weight[i]);
          }
          auto& a = out[hub_edges[slot]];
          a[0] = scale;
          a[1] = scale * scale * static_cast<double>(s.paths[i]);
          a[2] = scale * scale * static_cast<double>(quad);
        }

        for (VertexId m : s.touched) s.paths[m] = 0.0L;
        s.touched.clear();
      });
  return out;
}

EdgeScoreTable score_all(const Graph& g, const HopWeights& weights, unsigned threads) {
  weights.validate();
  if (g.edge_count() == 0) throw InvalidArgument("cannot score an edgeless graph");
  return EdgeScoreTable::from_strengths(hop_strengths(g, threads), weights);
}

void write_scores_csv(std::ostream& out, const Graph& g, const EdgeScoreTable& scores) {
  if (scores.size() != g.edge_count()) {
    throw InvalidArgument("score table does not match the graph's edge set");
  }
  const auto old_precision = out.precision(17);
  out << "u,v,a1,a2,a3,c1,c2,c3,cohesion\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& r = scores[e];
    out << g.label(g.edge(e).u) << ',' << g.label(g.edge(e).v);
    for (double a : r.strength) out << ',' << a;
    for (double c : r.normalized) out << ',' << c;
    out << ',' << r.cohesion << '\n';
  }
  out.precision(old_precision);
}

}  // namespace linkc
