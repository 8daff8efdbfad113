#include "cutsetlab/s2.hpp"

#include <algorithm>
#include <stdexcept>

#include "cutsetlab/set_system.hpp"

namespace cutsetlab {

VerdictReport satisfies_s2(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("(S2) check needs a nonempty complex");
  VerdictReport report;
  const auto& facets = c.facets();
  std::vector<Face> star;
  std::vector<bool> joined;
  for (const Face& face : all_faces(c)) {
    ++report.stats.faces_examined;
    star.clear();
    int top = 0;
    for (const Face& facet : facets) {
      ++report.stats.work_units;
      if (face.subset_of(facet)) {
        star.push_back(facet - face);
        top = std::max(top, star.back().size());
      }
    }
    if (top - 1 < 1) continue;
    ++report.stats.links_checked;

    joined.assign(star.size(), false);
    joined[0] = true;
    Face reach = star[0];
    std::size_t count = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 1; i < star.size(); ++i) {
        if (!joined[i] && star[i].intersects(reach)) {
          joined[i] = true;
          reach = reach | star[i];
          ++count;
          grew = true;
        }
      }
    }
    if (count == star.size()) continue;

    json link_facets = json::array();
    for (const Face& f : star) link_facets.push_back(f.to_string());
    report.verdict = false;
    report.witness = {{"face", face.to_string()},
                      {"link_dimension", top - 1},
                      {"link_facets", link_facets}};
    return report;
  }
  return report;
}

VerdictReport check_s2_equiv_accessible(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("the (S2)/accessibility comparison needs a connected graph");
  }
  const VerdictReport s2 = satisfies_s2(delta_complex(g));
  const VerdictReport accessible = is_accessible_graph(g);
  VerdictReport report;
  report.verdict = s2.verdict == accessible.verdict;
  report.stats = s2.stats;
  report.stats.work_units += accessible.stats.work_units;
  report.witness = {{"s2", s2.verdict},
                    {"accessible", accessible.verdict},
                    {"s2_witness", s2.witness},
                    {"accessible_witness", accessible.witness}};
  return report;
}

std::string_view to_string(BridgingVariant v) {
  switch (v) {
    case BridgingVariant::nested_transversals: return "nested-transversals";
    case BridgingVariant::enclosed_neighborhood: return "enclosed-neighborhood";
    case BridgingVariant::shared_transversal: return "shared-transversal";
  }
  return "?";
}

std::optional<BridgingVariant> parse_bridging_variant(std::string_view name) {
  if (name == "4.3" || name == "nested-transversals") return BridgingVariant::nested_transversals;
  if (name == "4.5" || name == "enclosed-neighborhood") {
    return BridgingVariant::enclosed_neighborhood;
  }
  if (name == "4.7" || name == "shared-transversal") return BridgingVariant::shared_transversal;
  return std::nullopt;
}

namespace {

// Completes a partial transversal with the smallest vertex of every
// component it misses.
VertexSet extend_transversal(const Graph& g, VertexSet s, VertexSet w) {
  VertexSet out = w;
  for (VertexSet comp : components(g, s).components) {
    if (!comp.intersects(w)) out = out.with(comp.min());
  }
  return out;
}

}  // namespace

BridgingSearch::BridgingSearch(const Graph& g) : g_(g), table_(g) {
  family_ = cut_sets(table_);
  if (!is_connected(g)) {
    graph_reason_ = "graph is not connected";
  } else if (!is_accessible_graph(g).verdict) {
    graph_reason_ = "graph is not accessible";
  }
}

std::string BridgingSearch::check_hypotheses(const BridgingQuery& q,
                                             BridgingVariant variant) const {
  if (!graph_reason_.empty()) return graph_reason_;
  const VertexSet all = g_.vertices();
  for (VertexSet s : {q.t1, q.t2, q.w1, q.w2}) {
    if (!s.subset_of(all)) return "set " + s.to_string() + " is outside the vertex range";
  }
  if (!is_cut(q.t1)) return "T1 is not a cut set";
  if (!is_cut(q.t2)) return "T2 is not a cut set";

  switch (variant) {
    case BridgingVariant::nested_transversals: {
      if (q.t1.subset_of(q.t2)) return "T1 is contained in T2";
      if (q.t1.size() >= q.t2.size()) return "|T1| < |T2| fails";
      if (!is_transversal(g_, q.t1, q.w1)) return "W1 is not a transversal of G - T1";
      if (!is_transversal(g_, q.t2, q.w2)) return "W2 is not a transversal of G - T2";
      if (!q.w1.subset_of(q.w2)) return "W1 is not contained in W2";
      for (int v : q.t2 - q.t1) {
        if (is_cut(q.t1.with(v))) return "T1 + " + std::to_string(v) + " is a cut set";
      }
      if ((q.w2 - q.w1).subset_of(q.t1)) return "W2 - W1 is contained in T1";
      return {};
    }
    case BridgingVariant::enclosed_neighborhood: {
      if (q.t1.subset_of(q.t2)) return "T1 is contained in T2";
      if (!is_transversal(g_, q.t1, q.w1)) return "W1 is not a transversal of G - T1";
      if (!is_transversal(g_, q.t2, q.w2)) return "W2 is not a transversal of G - T2";
      if (!q.w1.subset_of(q.w2)) return "W1 is not contained in W2";
      for (int f : q.t1 - q.t2) {
        if (g_.adjacent(f).subset_of(q.t1 | q.t2)) return {};
      }
      return "no f in T1 - T2 has its neighbourhood inside T1 + T2";
    }
    case BridgingVariant::shared_transversal: {
      if (q.w2 != q.w1 && !q.w2.empty()) return "shared-transversal takes a single W";
      if ((q.t1 - q.t2).size() < 2) return "|T1 - T2| >= 2 fails";
      if (!is_transversal(g_, q.t1, q.w1)) return "W is not a transversal of G - T1";
      if (!is_transversal(g_, q.t2, q.w1)) return "W is not a transversal of G - T2";
      const VertexSet u = q.t1 | q.t2;
      for (VertexSet s : family_.sets) {
        if (s.subset_of(u) && table_(s) > q.w1.size() && is_partial_transversal(g_, s, q.w1)) {
          return "cut set " + s.to_string() + " inside T1 + T2 has a transversal strictly containing W";
        }
      }
      return {};
    }
  }
  return "unknown variant";
}

std::vector<VertexSet> BridgingSearch::candidates(const BridgingQuery& q,
                                                  BridgingVariant variant) const {
  const VertexSet u = q.t1 | q.t2;
  std::vector<VertexSet> subsets;
  for (std::uint64_t m = u.bits();; m = (m - 1) & u.bits()) {
    subsets.emplace_back(m);
    if (m == 0) break;
  }
  std::sort(subsets.begin(), subsets.end(), CanonicalLess{});

  std::vector<VertexSet> out;
  for (VertexSet t : subsets) {
    if (!is_cut(t)) continue;
    switch (variant) {
      case BridgingVariant::nested_transversals:
        if (q.t1.subset_of(t) || (q.t2 - q.t1).subset_of(t)) continue;
        if (!is_partial_transversal(g_, t, q.w1)) continue;
        break;
      case BridgingVariant::enclosed_neighborhood:
        if ((q.t1 - q.t2).subset_of(t) || (q.t2 - q.t1).subset_of(t)) continue;
        if (!is_partial_transversal(g_, t, q.w1)) continue;
        break;
      case BridgingVariant::shared_transversal:
        if ((q.t1 - q.t2).subset_of(t) || (q.t2 - q.t1).subset_of(t)) continue;
        if (!is_transversal(g_, t, q.w1)) continue;
        break;
    }
    out.push_back(t);
  }
  return out;
}

VerdictReport BridgingSearch::run(const BridgingQuery& q, BridgingVariant variant) const {
  const std::string unmet = check_hypotheses(q, variant);
  if (!unmet.empty()) return VerdictReport::not_applicable(unmet);
  VerdictReport report;
  switch (variant) {
    case BridgingVariant::nested_transversals: report = run_nested(q); break;
    case BridgingVariant::enclosed_neighborhood: report = run_enclosed(q); break;
    case BridgingVariant::shared_transversal: report = run_shared(q); break;
  }
  report.witness["variant"] = to_string(variant);
  report.stats.work_units += std::uint64_t{1} << (q.t1 | q.t2).size();
  return report;
}

VerdictReport BridgingSearch::run_nested(const BridgingQuery& q) const {
  const auto cands = candidates(q, BridgingVariant::nested_transversals);
  json per_f = json::array();
  std::optional<json> first;
  for (int f : (q.w2 - q.w1) - q.t1) {
    bool found = false;
    for (VertexSet t : cands) {
      for (int c : (q.t2 - q.t1) - t) {
        const VertexSet tc = t.with(c);
        if (!is_cut(tc) || !is_partial_transversal(g_, tc, q.w1.with(f))) continue;
        json entry = {{"f", f},
                      {"T", to_json(t)},
                      {"c", c},
                      {"W", to_json(extend_transversal(g_, t, q.w1))}};
        per_f.push_back(entry);
        if (!first) first = entry;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      return VerdictReport::fail({{"refutation", true}, {"f", f}, {"candidates", to_json(cands)}});
    }
  }
  json witness = *first;
  witness["per_f"] = per_f;
  witness["candidates"] = to_json(cands);
  return VerdictReport::pass(witness);
}

VerdictReport BridgingSearch::run_enclosed(const BridgingQuery& q) const {
  const auto cands = candidates(q, BridgingVariant::enclosed_neighborhood);
  if (cands.empty()) return VerdictReport::fail({{"refutation", true}, {"candidates", json::array()}});

  // The construction: pick the smallest f with N(f) inside T1 + T2, keep the
  // lowest component of G - T1 that f reconnects out of U, and take the
  // neighbours of f in every other reconnected component.
  int f = 0;
  for (int v : q.t1 - q.t2) {
    if (g_.adjacent(v).subset_of(q.t1 | q.t2)) {
      f = v;
      break;
    }
  }
  VertexSet u = q.t1.without(f);
  bool kept_lowest = false;
  for (VertexSet comp : components(g_, q.t1).components) {
    const VertexSet touch = comp & g_.adjacent(f);
    if (touch.empty()) continue;
    if (!kept_lowest) {
      kept_lowest = true;
      continue;
    }
    u |= touch;
  }
  const VertexSet built = reduce_to_cut_set(g_, u).trace.result;
  const bool built_valid = std::find(cands.begin(), cands.end(), built) != cands.end();
  const VertexSet chosen = built_valid ? built : cands.front();

  return VerdictReport::pass({{"T", to_json(chosen)},
                              {"W", to_json(extend_transversal(g_, chosen, q.w1))},
                              {"f", f},
                              {"U", to_json(u)},
                              {"constructed", to_json(built)},
                              {"construction_valid", built_valid},
                              {"candidates", to_json(cands)}});
}

VerdictReport BridgingSearch::run_shared(const BridgingQuery& q) const {
  const auto cands = candidates(q, BridgingVariant::shared_transversal);
  if (cands.empty()) return VerdictReport::fail({{"refutation", true}, {"candidates", json::array()}});
  return VerdictReport::pass(
      {{"T", to_json(cands.front())}, {"W", to_json(q.w1)}, {"candidates", to_json(cands)}});
}

VerdictReport find_bridging_cutset(const Graph& g, const BridgingQuery& q,
                                   BridgingVariant variant) {
  return BridgingSearch(g).run(q, variant);
}

}  // namespace cutsetlab
