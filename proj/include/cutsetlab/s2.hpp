#pragma once

#include <optional>
#include <string_view>

#include "cutsetlab/complex.hpp"
#include "cutsetlab/cutsets.hpp"
#include "cutsetlab/graph.hpp"
#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

/// Terai's criterion: every face whose link has dimension >= 1 has a
/// connected link. Faces are scanned in canonical order; a failure reports
/// the first offending face with its link facets:
/// {"face": "y1x2", "link_dimension": d, "link_facets": ["...", ...]}.
/// Throws std::invalid_argument on the void complex.
VerdictReport satisfies_s2(const SimplicialComplex& c);

/// Compares satisfies_s2 on the facet complex of g with is_accessible_graph.
/// The witness always records both sides:
/// {"s2": bool, "accessible": bool, "s2_witness": ..., "accessible_witness": ...}.
/// Throws std::invalid_argument on a disconnected graph.
VerdictReport check_s2_equiv_accessible(const Graph& g);

/// The three bridging statements that connect two facets of a link through
/// a third facet F(T, W).
enum class BridgingVariant {
  /// T1 not inside T2, |T1| < |T2|, nested transversals W1 inside W2,
  /// no single vertex of T2 - T1 extends T1 to a cut set, W2 - W1 not
  /// inside T1. Also produces c with T + c a cut set.
  nested_transversals,
  /// Nested transversals and some f in T1 - T2 with N(f) inside T1 + T2.
  enclosed_neighborhood,
  /// |T1 - T2| >= 2, one W transversal for both, and no cut set inside
  /// T1 + T2 has a transversal strictly containing W.
  shared_transversal,
};

std::string_view to_string(BridgingVariant v);
/// Accepts the descriptive names and the short aliases "4.3", "4.5", "4.7".
std::optional<BridgingVariant> parse_bridging_variant(std::string_view name);

struct BridgingQuery {
  VertexSet t1;
  VertexSet t2;
  VertexSet w1;
  /// Ignored by shared_transversal unless it differs from w1.
  VertexSet w2;
};

/// Searches every T inside t1 + t2 for a cut set meeting the variant's
/// conclusion. Built once per graph so repeated queries share the component
/// table and cut-set family.
class BridgingSearch {
 public:
  explicit BridgingSearch(const Graph& g);

  /// Hypotheses unmet gives applicable = false. Hypotheses met with no
  /// witness gives verdict = false, a refutation.
  VerdictReport run(const BridgingQuery& q, BridgingVariant variant) const;

  bool graph_qualifies() const { return graph_reason_.empty(); }
  const CutSetFamily& family() const { return family_; }

 private:
  bool is_cut(VertexSet s) const { return table_.is_cut_set(s); }
  std::string check_hypotheses(const BridgingQuery& q, BridgingVariant variant) const;
  std::vector<VertexSet> candidates(const BridgingQuery& q, BridgingVariant variant) const;
  VerdictReport run_nested(const BridgingQuery& q) const;
  VerdictReport run_enclosed(const BridgingQuery& q) const;
  VerdictReport run_shared(const BridgingQuery& q) const;

  Graph g_;
  ComponentTable table_;
  CutSetFamily family_;
  std::string graph_reason_;
};

VerdictReport find_bridging_cutset(const Graph& g, const BridgingQuery& q,
                                   BridgingVariant variant);

}  // namespace cutsetlab
