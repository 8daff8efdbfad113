#pragma once

#include <unordered_set>
#include <vector>

#include "cutsetlab/cutsets.hpp"
#include "cutsetlab/graph.hpp"
#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

/// A family of distinct subsets of [ground_n] with O(1) membership.
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws std::invalid_argument on duplicates or members outside
  /// [ground_n]. Members are stored in canonical order.
  SetSystem(int ground_n, std::vector<VertexSet> sets);

  static SetSystem from(const CutSetFamily& family) { return {family.ground_n, family.sets}; }

  int ground_n() const { return ground_n_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(VertexSet s) const { return index_.contains(s); }

  /// {"n": ground_n, "sets": [[...], ...]}
  json to_json() const;
  static SetSystem from_json(const json& j);

 private:
  int ground_n_ = 0;
  std::vector<VertexSet> sets_;
  std::unordered_set<VertexSet, VertexSetHash> index_;
};

/// Every nonempty member loses some element and stays a member. A failing
/// report carries the first such member (canonical order) as {"S": [...]}.
VerdictReport is_accessible(const SetSystem& sys);

/// The three equivalent forms of strong accessibility, quantified over all
/// pairs S strictly inside T, both members:
///   augmentation  some v in T - S has S + v a member
///   deletion      some t in T - S has T - t a member
///   chain         T - S can be ordered so every prefix added to S is a member
enum class StrongForm { augmentation = 1, deletion = 2, chain = 3 };

/// Witness for a failure is the first offending pair {"S": [...], "T": [...]}
/// scanning S then T in canonical order. The empty set must be a member
/// (throws std::invalid_argument otherwise).
VerdictReport is_strongly_accessible(const SetSystem& sys,
                                     StrongForm form = StrongForm::deletion);

/// Unmixed and with an accessible cut-set family, decided one connected
/// component at a time. Witness names the failing part:
/// {"reason": "not-unmixed", ...} or {"reason": "not-accessible", "S": [...]}.
VerdictReport is_accessible_graph(const Graph& g);

}  // namespace cutsetlab
