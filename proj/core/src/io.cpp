#include "linkc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkc/error.hpp"

namespace linkc {
namespace {

constexpr std::string_view kBlank = " \t\r\n\v\f";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, std::optional<char> delimiter) {
  std::vector<std::string_view> tokens;
  if (delimiter) {
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find(*delimiter, start);
      tokens.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return tokens;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    i = line.find_first_not_of(kBlank, i);
    if (i == std::string_view::npos) break;
    auto end = line.find_first_of(kBlank, i);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(i, end - i));
    i = end;
  }
  return tokens;
}

// Calls fn(line_number, first, second) for every non-comment, non-blank line.
template <typename Fn>
void for_each_pair(std::istream& in, std::optional<char> delimiter, Fn&& fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split(body, delimiter);
    if (tokens.size() != 2 || tokens[0].empty() || tokens[1].empty()) {
      throw ParseError(line_number, "expected exactly two tokens, got '" + std::string(body) + "'");
    }
    fn(line_number, tokens[0], tokens[1]);
  }
  if (in.bad()) throw IoError("read failure after line " + std::to_string(line_number));
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  auto intern = [&](std::string_view token) {
    const auto [it, inserted] = ids.emplace(std::string(token), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  BuildStats stats;
  std::vector<std::pair<VertexId, VertexId>> directed;
  for_each_pair(in, options.delimiter,
                [&](std::size_t line, std::string_view a, std::string_view b) {
                  ++stats.input_pairs;
                  const VertexId u = intern(a);
                  const VertexId v = intern(b);
                  if (u == v) {
                    if (!options.drop_self_loops) {
                      throw ParseError(line, "self-loop on vertex '" + std::string(a) + "'");
                    }
                    ++stats.self_loops_dropped;
                    return;
                  }
                  directed.emplace_back(u, v);
                });

  // Same-orientation repeats are duplicates in either mode.
  std::sort(directed.begin(), directed.end());
  const auto last = std::unique(directed.begin(), directed.end());
  stats.duplicates_collapsed = static_cast<std::size_t>(directed.end() - last);
  directed.erase(last, directed.end());

  const std::size_t vertex_count = labels.size();
  Graph g = Graph::from_pairs(vertex_count, directed, std::move(labels));
  const std::size_t reversed = directed.size() - g.edge_count();
  if (options.symmetrize) {
    stats.reciprocal_merged = reversed;
  } else {
    stats.duplicates_collapsed += reversed;
  }
  g.set_build_stats(stats);
  return g;
}

Graph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options) {
  auto in = open_input(path);
  return load_edge_list(in, options);
}

CommunityAssignment load_communities(std::istream& in, const Graph& g,
                                     const CommunityLoadOptions& options) {
  std::vector<CommunityId> labels(g.vertex_count(), CommunityAssignment::kUnlabeled);
  std::unordered_map<std::string, CommunityId> names;
  for_each_pair(in, options.delimiter, [&](std::size_t line, std::string_view vertex, std::string_view name) {
    const auto v = g.find_vertex(vertex);
    if (!v && options.skip_unknown_vertices) return;
    if (!v) throw ParseError(line, "vertex '" + std::string(vertex) + "' is not in the graph");
    const auto [it, inserted] =
        names.emplace(std::string(name), static_cast<CommunityId>(names.size()));
    if (labels[*v] != CommunityAssignment::kUnlabeled && labels[*v] != it->second) {
      throw ParseError(line, "vertex '" + std::string(vertex) + "' assigned to conflicting communities");
    }
    labels[*v] = it->second;
  });
  return CommunityAssignment::from_labels(std::move(labels));
}

CommunityAssignment load_communities_file(const std::filesystem::path& path, const Graph& g,
                                          const CommunityLoadOptions& options) {
  auto in = open_input(path);
  return load_communities(in, g, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_communities(std::ostream& out, const Graph& g, const CommunityAssignment& communities) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (communities.is_labeled(v)) out << g.label(v) << ' ' << communities[v] << '\n';
  }
}

}  // namespace linkc
