#pragma once

#include <cstdint>
#include <vector>

#include "cutsetlab/graph.hpp"
#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

/// Largest graph for which the 2^n component table is built.
inline constexpr int kMaxTableOrder = 22;

/// c_G(S) for every S subset of [n], indexed by S.bits().
class ComponentTable {
 public:
  explicit ComponentTable(const Graph& g);

  int operator()(VertexSet s) const { return counts_[s.bits()]; }
  int order() const { return n_; }

  /// S is empty or c(S) > c(S - {i}) for every i in S.
  bool is_cut_set(VertexSet s) const;

 private:
  int n_;
  std::vector<std::uint8_t> counts_;
};

/// The cut sets of a graph in canonical order (size, then lexicographic).
struct CutSetFamily {
  int ground_n = 0;
  std::vector<VertexSet> sets;

  bool contains(VertexSet s) const;
};

/// Indices into components(g, s) of the components holding a neighbour of v.
/// v reconnects components exactly when two or more indices come back.
/// Throws std::invalid_argument when v is not in s.
std::vector<int> reconnected_components(const Graph& g, VertexSet s, int v);

/// True when re-adding v to G - s merges two or more components.
bool reconnects(const Graph& g, VertexSet s, int v);

bool is_cut_set(const Graph& g, VertexSet s);

CutSetFamily cut_sets(const Graph& g);
CutSetFamily cut_sets(const ComponentTable& table);

/// Every cut set S satisfies c(S) = |S| + c(empty set).
bool is_unmixed(const Graph& g);

/// is_unmixed with the first offending cut set as witness:
/// {"S": [...], "c": c(S), "expected": |S| + c(empty set)}.
VerdictReport check_unmixed(const Graph& g);

struct Transversal {
  VertexSet vertices;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// All transversals of G - s: one vertex from each component, components
/// ordered by minimum element, choices in lexicographic order.
/// Throws std::invalid_argument when s is not a cut set.
std::vector<Transversal> transversals(const Graph& g, VertexSet s);

/// w avoids s and meets every component of G - s at most once, i.e. w
/// extends to a transversal of G - s.
bool is_partial_transversal(const Graph& g, VertexSet s, VertexSet w);

/// w meets every component of G - s exactly once.
bool is_transversal(const Graph& g, VertexSet s, VertexSet w);

struct ReductionTrace {
  VertexSet input;
  VertexSet result;
  /// Vertices removed from input, in removal order.
  std::vector<int> removed_order;
  VertexSet avoid;
};

struct ReductionOutcome {
  enum class Status { ok, avoid_infeasible };
  Status status = Status::ok;
  /// For avoid_infeasible this is the greedy reduction, which still ends in
  /// a cut set but keeps some avoid vertices.
  ReductionTrace trace;

  bool ok() const { return status == Status::ok; }
};

/// Shrinks u to a cut set T by repeatedly deleting a vertex of the current
/// set that reconnects no components of G minus that set. Deletion stops
/// exactly at a cut set. Removable avoid vertices go first (smallest label
/// first), then the smallest removable label. If that greedy run keeps an
/// avoid vertex, every admissible removal order is searched before
/// reporting avoid_infeasible.
///
/// Throws std::invalid_argument when u is all of [n] or avoid is not
/// contained in u.
ReductionOutcome reduce_to_cut_set(const Graph& g, VertexSet u, VertexSet avoid = {});

}  // namespace cutsetlab
