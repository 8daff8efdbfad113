#include "cutsetlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace cutsetlab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside 0.." + std::to_string(kMaxVertices));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 1; v <= n; ++v) g.adj_[v - 1] = VertexSet::range(n).without(v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} outside 1.." + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adj_[u - 1].contains(v)) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                                std::to_string(std::max(u, v)) + "}");
  }
  adj_[u - 1] = adj_[u - 1].with(v);
  adj_[v - 1] = adj_[v - 1].with(u);
}

bool Graph::has_edge(int u, int v) const {
  return u >= 1 && u <= n_ && adj_[u - 1].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 2; v <= n_; ++v) {
    for (int u : adj_[v - 1] & VertexSet::range(v - 1)) out.push_back({u, v});
  }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

int ComponentPartition::index_of(int v) const {
  for (int i = 0; i < count(); ++i) {
    if (components[i].contains(v)) return i;
  }
  return -1;
}

VertexSet component_of(const Graph& g, VertexSet removed, int start) {
  const VertexSet alive = g.vertices() - removed;
  VertexSet comp = VertexSet::single(start);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    const int v = frontier.min();
    frontier = frontier.without(v);
    const VertexSet fresh = (g.adjacent(v) & alive) - comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

ComponentPartition components(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices())) {
    throw std::invalid_argument("removed set " + removed.to_string() + " not inside [" +
                                std::to_string(g.order()) + "]");
  }
  ComponentPartition out{removed, {}};
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    const VertexSet comp = component_of(g, removed, rest.min());
    out.components.push_back(comp);
    rest -= comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet removed) {
  int count = 0;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    rest -= component_of(g, removed, rest.min());
    ++count;
  }
  return count;
}

VertexSet neighbors(const Graph& g, int v) {
  if (v < 1 || v > g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
  }
  return g.adjacent(v);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, VertexSet{}, 1) == g.vertices();
}

bool is_bipartite(const Graph& g) {
  VertexSet colored;
  VertexSet side;
  for (int root = 1; root <= g.order(); ++root) {
    if (colored.contains(root)) continue;
    colored = colored.with(root);
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.adjacent(v)) {
        if (!colored.contains(w)) {
          colored = colored.with(w);
          if (!side.contains(v)) side = side.with(w);
          stack.push_back(w);
        } else if (side.contains(w) == side.contains(v)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s.without(v)).subset_of(g.adjacent(v))) return false;
  }
  return true;
}

VertexSet free_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.order(); ++v) {
    if (is_clique(g, g.adjacent(v))) out = out.with(v);
  }
  return out;
}

namespace {

// Hopcroft-Tarjan with an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g) : g_(g), disc_(g.order() + 1, 0), low_(g.order() + 1, 0) {}

  std::vector<VertexSet> run() {
    for (int v = 1; v <= g_.order(); ++v) {
      if (disc_[v] != 0) continue;
      if (g_.adjacent(v).empty()) {
        blocks_.push_back(VertexSet::single(v));
        disc_[v] = ++clock_;
        continue;
      }
      visit(v, 0);
    }
    return blocks_;
  }

 private:
  void visit(int v, int parent) {
    disc_[v] = low_[v] = ++clock_;
    for (int w : g_.adjacent(v)) {
      if (disc_[w] == 0) {
        edges_.push_back({v, w});
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) pop_block(v, w);
      } else if (w != parent && disc_[w] < disc_[v]) {
        edges_.push_back({v, w});
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void pop_block(int v, int w) {
    VertexSet block;
    while (!edges_.empty()) {
      const Edge e = edges_.back();
      edges_.pop_back();
      block = block.with(e.u).with(e.v);
      if (e.u == v && e.v == w) break;
    }
    blocks_.push_back(block);
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int clock_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> blocks_;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("block decomposition needs a connected graph");
  }
  BlockDecomposition out;
  out.blocks = BlockFinder(g).run();
  std::sort(out.blocks.begin(), out.blocks.end(), lex_less);

  // A vertex is a cut vertex exactly when it lies in two or more blocks.
  for (int v = 1; v <= g.order(); ++v) {
    int seen = 0;
    for (VertexSet b : out.blocks) seen += b.contains(v) ? 1 : 0;
    if (seen >= 2) out.cut_vertices = out.cut_vertices.with(v);
  }
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
    if ((out.blocks[i] & out.cut_vertices).size() == 1) out.terminal_blocks.push_back(i);
  }
  return out;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int v : local) out = out.with(labels[v - 1]);
  return out;
}

VertexSet InducedSubgraph::project(VertexSet global) const {
  VertexSet out;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (global.contains(labels[i])) out = out.with(i + 1);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices())) {
    throw std::invalid_argument("induced_subgraph: vertex set not inside the graph");
  }
  InducedSubgraph out{Graph(keep.size()), keep.to_vector()};
  for (int i = 0; i < keep.size(); ++i) {
    for (int j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(out.labels[i], out.labels[j])) out.graph.add_edge(i + 1, j + 1);
    }
  }
  return out;
}

// --- I/O ------------------------------------------------------------------

namespace {

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (!g) {
      if (tokens.size() != 1) {
        throw InputError("line " + std::to_string(line_no) + ": expected the vertex count");
      }
      const int n = parse_int(tokens[0], line_no);
      if (n < 0 || n > kMaxVertices) {
        throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
      }
      g.emplace(n);
      continue;
    }
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (!(1 <= u && u < v && v <= g->order())) {
      throw InputError("line " + std::to_string(line_no) + ": edge must satisfy 1 <= u < v <= " +
                       std::to_string(g->order()));
    }
    if (g->has_edge(u, v)) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge " +
                       std::to_string(u) + " " + std::to_string(v));
    }
    g->add_edge(u, v);
  }
  if (!g) throw InputError("empty graph file: missing vertex count");
  return *g;
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.empty()) throw InputError("graph6: empty string");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw InputError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  int n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw InputError("graph6: unsupported vertex count");
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw InputError("graph6: more than 64 vertices");

  const std::uint64_t bits = pair_count(n);
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need) throw InputError("graph6: wrong length for n=" + std::to_string(n));

  Graph g(n);
  std::uint64_t k = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    const int byte = line[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  if (pair_count(n) > 64) throw std::invalid_argument("graph_from_mask: n too large");
  Graph g(n);
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      if ((mask >> edge_bit(u, v)) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

std::uint64_t edge_mask(const Graph& g) {
  if (pair_count(g.order()) > 64) throw std::invalid_argument("edge_mask: n too large");
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << edge_bit(e.u, e.v);
  return mask;
}

}  // namespace cutsetlab
