#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutsetlab/graph.hpp"
#include "cutsetlab/set_system.hpp"
#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

/// Largest order a sweep or realizability search may reach.
inline constexpr int kSweepHardCap = 8;

enum class SweepCheck {
  /// Connected graphs: (S2) on the facet complex iff accessible.
  s2_equiv_accessible,
  /// Connected unmixed graphs: the cut-set family is accessible iff it is
  /// strongly accessible.
  accessible_equiv_strongly_accessible,
  /// Connected accessible graphs on two or more vertices have at least two
  /// free vertices, each giving a cone apex y_v; connected bipartite unmixed
  /// graphs have exactly two.
  free_vertex_count,
  /// Connected unmixed graphs: for every S, being a cut set, c(S) = |S| + 1
  /// and c(S) >= |S| + 1 coincide. Free vertices lie in no cut set.
  unmixed_equivalences,
  /// Connected graphs: reduce_to_cut_set on every proper subset U keeps
  /// transversals, removes only non-reconnecting vertices, preserves c when
  /// U lies in a cut set, and honours a non-reconnecting avoid chain.
  reduction_properties,
  /// Connected unmixed graphs, every cut set S: S + s is a cut set iff s is
  /// a cut vertex of G - S; S - s is a cut set iff s reconnects exactly two
  /// components; no two vertices of S reconnect exactly the same pair.
  union_remark,
  /// Connected accessible graphs: every hypothesis-satisfying tuple of each
  /// bridging variant has a witness.
  bridging_lemmas,
};

std::string_view to_string(SweepCheck c);
std::optional<SweepCheck> parse_sweep_check(std::string_view name);
const std::vector<SweepCheck>& all_sweep_checks();

/// Runs one check on one graph. A graph outside the check's scope yields
/// applicable = false.
VerdictReport check_graph(SweepCheck check, const Graph& g);

/// Half-open edge-mask interval, applied to every order in the sweep and
/// clipped to that order's mask space.
struct MaskRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct SweepConfig {
  int max_n = 0;
  int min_n = 1;
  bool connected_only = true;
  std::vector<SweepCheck> checks;
  int workers = 1;
  std::optional<MaskRange> range;
};

struct SweepSummary {
  std::string check;
  int max_n = 0;
  /// Graphs the check applied to.
  std::uint64_t graphs = 0;
  /// Graphs passing the connectivity filter, whether or not the check applied.
  std::uint64_t enumerated = 0;
  /// Graphs the check applied to, per order.
  std::vector<std::uint64_t> per_n;
  std::uint64_t failures = 0;
  /// null, or {"n", "mask", "graph" (text format), "graph6", "payload"}.
  json witness;
  std::int64_t elapsed_ms = 0;

  /// {"check", "max_n", "graphs", "failures", "witness", "elapsed_ms",
  ///  "enumerated", "per_n": {"1": ..., ...}}
  json to_json() const;
};

/// Enumerates labeled graphs on min_n..max_n vertices in ascending edge-mask
/// order and runs one check. The first failure in enumeration order halts
/// the sweep, so failures is 0 or 1; counts then cover the graphs up to and
/// including the witness. Throws std::invalid_argument when max_n exceeds
/// the hard cap or the config is malformed.
SweepSummary sweep_check(const SweepConfig& config, SweepCheck check);

/// A caller-supplied per-graph check with the same applicability contract
/// as check_graph.
using GraphCheck = std::function<VerdictReport(const Graph&)>;

/// sweep_check with a custom check reported under name. The check runs
/// concurrently when workers > 1.
SweepSummary sweep_with(const SweepConfig& config, std::string name, const GraphCheck& check);

/// sweep_check for every configured check, in order.
std::vector<SweepSummary> sweep(const SweepConfig& config);

/// Searches all labeled graphs on m vertices, ground_n <= m <= max_n (and
/// m >= 1), for one whose cut-set family equals sys exactly. verdict is
/// true with {"status": "realized", "graph", "n", "graph6", "searched"} or
/// false with {"status": "none-within-bound", "max_n", "searched"}. The
/// negative outcome only covers the searched bound.
/// Throws std::invalid_argument when the empty set is missing, max_n is
/// below ground_n, or max_n exceeds the hard cap.
VerdictReport realize_system(const SetSystem& sys, int max_n);

}  // namespace cutsetlab
