#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "linkc/community.hpp"
#include "linkc/graph.hpp"

namespace linkc {

struct LoadOptions {
  // Token separator; std::nullopt splits on any run of spaces and tabs.
  std::optional<char> delimiter;
  // When false a self-loop is a parse error.
  bool drop_self_loops = true;
  // Read the list as directed and merge reciprocal pairs. When false the list
  // is taken as undirected and a reversed repeat counts as a duplicate.
  bool symmetrize = true;
};

// Reads "u v" pairs, one per line; '#' starts a comment line and blank lines
// are skipped. Vertex ids are arbitrary tokens, remapped to dense ids in
// first-appearance order. Vertices seen only on dropped self-loops are kept.
// Throws ParseError (with line number) for lines without exactly two tokens.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options = {});

struct CommunityLoadOptions {
  std::optional<char> delimiter;
  // Ignore lines naming vertices absent from the graph, such as vertices
  // that have no edges in the edge list.
  bool skip_unknown_vertices = false;
};

// Reads "vertex community" pairs keyed by the graph's external vertex ids.
// Vertices not listed stay unlabeled. Throws ParseError for unknown vertices
// (unless skipped), malformed lines, or a vertex listed twice with different
// communities.
CommunityAssignment load_communities(std::istream& in, const Graph& g,
                                     const CommunityLoadOptions& options = {});
CommunityAssignment load_communities_file(const std::filesystem::path& path, const Graph& g,
                                          const CommunityLoadOptions& options = {});

// "u v" per edge using external ids, canonical edge order.
void write_edge_list(std::ostream& out, const Graph& g);
// "vertex community" per labeled vertex using external ids.
void write_communities(std::ostream& out, const Graph& g, const CommunityAssignment& communities);

}  // namespace linkc
