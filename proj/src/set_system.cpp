#include "cutsetlab/set_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutsetlab {

SetSystem::SetSystem(int ground_n, std::vector<VertexSet> sets)
    : ground_n_(ground_n), sets_(std::move(sets)) {
  if (ground_n < 0 || ground_n > kMaxVertices) {
    throw std::invalid_argument("ground set size out of range");
  }
  const VertexSet ground = VertexSet::range(ground_n);
  for (VertexSet s : sets_) {
    if (!s.subset_of(ground)) {
      throw std::invalid_argument("member " + s.to_string() + " is not inside [" +
                                  std::to_string(ground_n) + "]");
    }
    if (!index_.insert(s).second) {
      throw std::invalid_argument("duplicate member " + s.to_string());
    }
  }
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
}

json SetSystem::to_json() const {
  return {{"n", ground_n_}, {"sets", cutsetlab::to_json(sets_)}};
}

SetSystem SetSystem::from_json(const json& j) {
  std::vector<VertexSet> sets;
  for (const auto& member : j.at("sets")) sets.push_back(vertex_set_from_json(member));
  return {j.at("n").get<int>(), std::move(sets)};
}

VerdictReport is_accessible(const SetSystem& sys) {
  VerdictReport report;
  for (VertexSet s : sys.sets()) {
    if (s.empty()) continue;
    bool shrinks = false;
    for (int v : s) {
      ++report.stats.work_units;
      if (sys.contains(s.without(v))) {
        shrinks = true;
        break;
      }
    }
    if (!shrinks) {
      report.verdict = false;
      report.witness = {{"S", to_json(s)}};
      return report;
    }
  }
  return report;
}

namespace {

bool augments(const SetSystem& sys, VertexSet s, VertexSet t) {
  for (int v : t - s) {
    if (sys.contains(s.with(v))) return true;
  }
  return false;
}

bool deletes(const SetSystem& sys, VertexSet s, VertexSet t) {
  for (int v : t - s) {
    if (sys.contains(t.without(v))) return true;
  }
  return false;
}

// Is t reachable from s by single-element additions through members?
bool chains(const SetSystem& sys, VertexSet s, VertexSet t) {
  std::vector<VertexSet> frontier{s};
  std::unordered_set<VertexSet, VertexSetHash> seen{s};
  while (!frontier.empty()) {
    const VertexSet cur = frontier.back();
    frontier.pop_back();
    if (cur == t) return true;
    for (int v : t - cur) {
      const VertexSet next = cur.with(v);
      if (sys.contains(next) && seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

}  // namespace

VerdictReport is_strongly_accessible(const SetSystem& sys, StrongForm form) {
  if (!sys.contains(VertexSet{})) {
    throw std::invalid_argument("strong accessibility needs the empty set as a member");
  }
  VerdictReport report;
  for (VertexSet s : sys.sets()) {
    for (VertexSet t : sys.sets()) {
      if (t == s || !s.subset_of(t)) continue;
      ++report.stats.work_units;
      bool ok = false;
      switch (form) {
        case StrongForm::augmentation: ok = augments(sys, s, t); break;
        case StrongForm::deletion: ok = deletes(sys, s, t); break;
        case StrongForm::chain: ok = chains(sys, s, t); break;
      }
      if (!ok) {
        report.verdict = false;
        report.witness = {{"S", to_json(s)}, {"T", to_json(t)}};
        return report;
      }
    }
  }
  return report;
}

VerdictReport is_accessible_graph(const Graph& g) {
  VerdictReport unmixed = check_unmixed(g);
  if (!unmixed.verdict) {
    unmixed.witness["reason"] = "not-unmixed";
    return unmixed;
  }
  VerdictReport report;
  for (VertexSet part : components(g, VertexSet{}).components) {
    const InducedSubgraph sub = induced_subgraph(g, part);
    const VerdictReport local = is_accessible(SetSystem::from(cut_sets(sub.graph)));
    report.stats.work_units += local.stats.work_units;
    if (!local.verdict) {
      const VertexSet s = sub.lift(vertex_set_from_json(local.witness.at("S")));
      report.verdict = false;
      report.witness = {{"reason", "not-accessible"}, {"S", to_json(s)}};
      return report;
    }
  }
  return report;
}

}  // namespace cutsetlab
