#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutsetlab/vertex_set.hpp"

namespace cutsetlab {

/// Raised for malformed graph text, graph6 strings, and similar input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on the labels 1..n (n <= 64).
///
/// Adjacency is stored as one VertexSet per vertex, so deletion and
/// component queries are word operations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<Edge>& edges);
  static Graph complete(int n);
  static Graph path(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Rejects loops, repeated edges and labels outside 1..n.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Unchecked adjacency lookup for hot loops; v must be in 1..n.
  VertexSet adjacent(int v) const { return adj_[v - 1]; }

  /// Edges with u < v, ordered by (v, u): the graph6 column order.
  std::vector<Edge> edges() const;
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Connected components of G - removed.
struct ComponentPartition {
  VertexSet removed;
  /// Ascending by minimum element.
  std::vector<VertexSet> components;

  int count() const { return static_cast<int>(components.size()); }
  /// Index of the component holding v, or -1 when v was removed.
  int index_of(int v) const;
};

ComponentPartition components(const Graph& g, VertexSet removed);

/// c_G(removed) without materialising the partition.
int component_count(const Graph& g, VertexSet removed);

/// The component of G - removed that contains start (start must survive).
VertexSet component_of(const Graph& g, VertexSet removed, int start);

VertexSet neighbors(const Graph& g, int v);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// Vertices whose neighbourhood induces a complete subgraph, i.e. the
/// vertices lying in exactly one maximal clique.
VertexSet free_vertices(const Graph& g);

struct BlockDecomposition {
  /// Lexicographic order on the sorted member lists.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// Indices into blocks of the blocks holding exactly one cut vertex.
  std::vector<int> terminal_blocks;
};

/// Biconnected components. Throws std::invalid_argument on a disconnected
/// graph.
BlockDecomposition block_decomposition(const Graph& g);

/// The subgraph induced on keep, relabelled to 1..|keep| in ascending order.
/// labels[i] is the original label of new vertex i+1.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;

  VertexSet lift(VertexSet local) const;
  VertexSet project(VertexSet global) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// --- I/O ------------------------------------------------------------------

/// Text format: first significant line is n, every further non-empty line
/// not starting with '#' is "u v" with 1 <= u < v <= n.
Graph parse_graph_text(std::string_view text);
std::string to_graph_text(const Graph& g);

/// Header-less graph6.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// --- labelled enumeration ---------------------------------------------------

inline constexpr std::uint64_t pair_count(int n) {
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

/// Bit index of edge {u,v} (u < v) in the graph6 column order:
/// {1,2},{1,3},{2,3},{1,4},...
inline constexpr int edge_bit(int u, int v) { return (v - 1) * (v - 2) / 2 + (u - 1); }

/// Graph on n vertices whose edge set is the given mask (n <= 11).
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

}  // namespace cutsetlab
