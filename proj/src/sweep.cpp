#include "cutsetlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cutsetlab/complex.hpp"
#include "cutsetlab/cutsets.hpp"
#include "cutsetlab/s2.hpp"

namespace cutsetlab {

namespace {

constexpr std::pair<SweepCheck, std::string_view> kCheckNames[] = {
    {SweepCheck::s2_equiv_accessible, "s2-equiv-accessible"},
    {SweepCheck::accessible_equiv_strongly_accessible, "accessible-equiv-strongly-accessible"},
    {SweepCheck::free_vertex_count, "free-vertex-count"},
    {SweepCheck::unmixed_equivalences, "unmixed-equivalences"},
    {SweepCheck::reduction_properties, "reduction-properties"},
    {SweepCheck::union_remark, "union-remark"},
    {SweepCheck::bridging_lemmas, "bridging-lemmas"},
};

// What every per-graph check needs, computed once.
struct Analysis {
  explicit Analysis(const Graph& graph)
      : g(graph), connected(is_connected(graph)), table(graph), family(cut_sets(table)) {
    const int base = table(VertexSet{});
    unmixed = std::all_of(family.sets.begin(), family.sets.end(),
                          [&](VertexSet s) { return table(s) == s.size() + base; });
  }

  bool accessible() const {
    return unmixed && is_accessible(SetSystem::from(family)).verdict;
  }

  const Graph& g;
  bool connected;
  ComponentTable table;
  CutSetFamily family;
  bool unmixed = false;
};

VerdictReport check_s2(const Graph& g) {
  if (!is_connected(g)) return VerdictReport::not_applicable("graph is not connected");
  return check_s2_equiv_accessible(g);
}

VerdictReport check_strong(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  if (!a.unmixed) return VerdictReport::not_applicable("graph is not unmixed");
  const SetSystem sys = SetSystem::from(a.family);
  const VerdictReport acc = is_accessible(sys);
  const VerdictReport strong = is_strongly_accessible(sys);
  VerdictReport r;
  r.verdict = acc.verdict == strong.verdict;
  r.stats.work_units = acc.stats.work_units + strong.stats.work_units;
  r.witness = {{"accessible", acc.verdict},
               {"strongly_accessible", strong.verdict},
               {"accessible_witness", acc.witness},
               {"strong_witness", strong.witness}};
  return r;
}

VerdictReport check_free_vertices(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  if (a.g.order() < 2) return VerdictReport::not_applicable("fewer than two vertices");
  const bool accessible = a.accessible();
  const bool bipartite_unmixed = a.unmixed && is_bipartite(a.g);
  if (!accessible && !bipartite_unmixed) {
    return VerdictReport::not_applicable("neither accessible nor bipartite unmixed");
  }
  const VertexSet free = free_vertices(a.g);
  json witness = {{"free", to_json(free)},
                  {"accessible", accessible},
                  {"bipartite_unmixed", bipartite_unmixed}};
  if (accessible) {
    if (free.size() < 2) {
      witness["reason"] = "fewer than two free vertices";
      return VerdictReport::fail(witness);
    }
    const Face apexes = cone_apexes(delta_complex(a.g));
    witness["cone_apexes"] = apexes.to_string();
    if (!free.subset_of(apexes.y)) {
      witness["reason"] = "free vertex without cone apex";
      return VerdictReport::fail(witness);
    }
  }
  if (bipartite_unmixed && free.size() != 2) {
    witness["reason"] = "bipartite unmixed graph without exactly two free vertices";
    return VerdictReport::fail(witness);
  }
  return VerdictReport::pass(witness);
}

VerdictReport check_unmixed_equivalences(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  if (!a.unmixed) return VerdictReport::not_applicable("graph is not unmixed");
  VerdictReport r;
  const std::uint64_t subsets = std::uint64_t{1} << a.g.order();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const VertexSet s(bits);
    const int c = a.table(s);
    const bool cut = a.table.is_cut_set(s);
    const bool equal = c == s.size() + 1;
    const bool at_least = c >= s.size() + 1;
    ++r.stats.work_units;
    if (cut != equal || equal != at_least) {
      return VerdictReport::fail({{"S", to_json(s)}, {"cut_set", cut}, {"c", c}});
    }
  }
  const VertexSet free = free_vertices(a.g);
  for (VertexSet s : a.family.sets) {
    if (s.intersects(free)) {
      return VerdictReport::fail(
          {{"reason", "free vertex in a cut set"}, {"S", to_json(s)}, {"free", to_json(free)}});
    }
  }
  return r;
}

VerdictReport check_union_remark(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  if (!a.unmixed) return VerdictReport::not_applicable("graph is not unmixed");
  VerdictReport r;
  const Graph& g = a.g;
  for (VertexSet s : a.family.sets) {
    ++r.stats.work_units;
    for (int v : g.vertices() - s) {
      const bool grows = a.table.is_cut_set(s.with(v));
      const bool cut_vertex = a.table(s.with(v)) > a.table(s);
      if (grows != cut_vertex) {
        return VerdictReport::fail({{"part", 1}, {"S", to_json(s)}, {"s", v}});
      }
    }
    std::map<std::pair<int, int>, int> owners;
    for (int v : s) {
      const std::vector<int> joined = reconnected_components(g, s, v);
      const bool shrinks = a.table.is_cut_set(s.without(v));
      if (shrinks != (joined.size() == 2)) {
        return VerdictReport::fail({{"part", 2}, {"S", to_json(s)}, {"s", v}});
      }
      if (joined.size() == 2) {
        const auto key = std::pair{joined[0], joined[1]};
        if (owners.contains(key)) {
          return VerdictReport::fail(
              {{"part", 3}, {"S", to_json(s)}, {"s", json::array({owners[key], v})}});
        }
        owners[key] = v;
      }
    }
  }
  return r;
}

// Calls fn on every transversal of G - u; u need not be a cut set.
template <class Fn>
bool all_transversals(const ComponentPartition& parts, Fn&& fn) {
  const int k = parts.count();
  std::vector<std::vector<int>> choices;
  for (VertexSet c : parts.components) choices.push_back(c.to_vector());
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    VertexSet w;
    for (int i = 0; i < k; ++i) w.insert(choices[i][pick[i]]);
    if (!fn(w)) return false;
    int i = k - 1;
    while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
    if (i < 0) return true;
  }
}

VerdictReport check_reduction(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  const Graph& g = a.g;
  const VertexSet all = g.vertices();
  VerdictReport r;
  auto fail = [](VertexSet u, const char* part, json extra = json::object()) {
    extra["U"] = to_json(u);
    extra["property"] = part;
    return VerdictReport::fail(extra);
  };
  for (std::uint64_t bits = 0; bits < all.bits(); ++bits) {
    const VertexSet u(bits);
    ++r.stats.work_units;
    const ReductionOutcome out = reduce_to_cut_set(g, u);
    const ReductionTrace& t = out.trace;
    if (!out.ok()) return fail(u, "status");
    VertexSet removed;
    for (int v : t.removed_order) removed.insert(v);
    if (t.result != u - removed || !removed.subset_of(u)) return fail(u, "trace");
    if (!a.table.is_cut_set(t.result)) return fail(u, "result-is-cut-set");
    if (a.table(t.result) < a.table(u)) return fail(u, "c-monotone");

    VertexSet cur = u;
    for (int v : t.removed_order) {
      if (reconnects(g, cur, v)) return fail(u, "step-non-reconnecting", {{"v", v}});
      cur = cur.without(v);
    }
    for (int v : removed) {
      if (reconnects(g, u, v)) return fail(u, "(ii)", {{"v", v}});
    }
    const bool inside_cut_set = std::any_of(a.family.sets.begin(), a.family.sets.end(),
                                            [&](VertexSet s) { return u.subset_of(s); });
    if (inside_cut_set && a.table(t.result) != a.table(u)) return fail(u, "(iii)");

    VertexSet bad;
    const bool kept = all_transversals(components(g, u), [&](VertexSet w) {
      if (is_partial_transversal(g, t.result, w)) return true;
      bad = w;
      return false;
    });
    if (!kept) return fail(u, "(i)", {{"W", to_json(bad)}});

    // A chain of non-reconnecting removals taken largest label first must be
    // avoidable as a whole.
    VertexSet chain;
    cur = u;
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<int> members = cur.to_vector();
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (!reconnects(g, cur, *it)) {
          chain.insert(*it);
          cur = cur.without(*it);
          grew = true;
          break;
        }
      }
    }
    if (!chain.empty()) {
      const ReductionOutcome avoided = reduce_to_cut_set(g, u, chain);
      if (!avoided.ok() || avoided.trace.result.intersects(chain)) {
        return fail(u, "(iv)", {{"avoid", to_json(chain)}});
      }
    }
  }
  return r;
}

VerdictReport check_bridging(const Analysis& a) {
  if (!a.connected) return VerdictReport::not_applicable("graph is not connected");
  if (!a.accessible()) return VerdictReport::not_applicable("graph is not accessible");
  const BridgingSearch search(a.g);
  const auto& sets = a.family.sets;
  std::vector<std::vector<Transversal>> trans;
  for (VertexSet s : sets) trans.push_back(transversals(a.g, s));

  VerdictReport r;
  json tuples = {{"nested-transversals", 0}, {"enclosed-neighborhood", 0},
                 {"shared-transversal", 0}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const VertexSet t1 = sets[i];
      const VertexSet t2 = sets[j];
      if (i == j || t1.subset_of(t2)) continue;
      for (const Transversal& w1 : trans[i]) {
        for (const Transversal& w2 : trans[j]) {
          std::vector<BridgingVariant> variants;
          if (w1.vertices.subset_of(w2.vertices)) {
            if (t1.size() < t2.size()) variants.push_back(BridgingVariant::nested_transversals);
            variants.push_back(BridgingVariant::enclosed_neighborhood);
          }
          if (w1 == w2 && (t1 - t2).size() >= 2) {
            variants.push_back(BridgingVariant::shared_transversal);
          }
          for (BridgingVariant v : variants) {
            const BridgingQuery q{t1, t2, w1.vertices, w2.vertices};
            const VerdictReport out = search.run(q, v);
            ++r.stats.work_units;
            if (!out.applicable) continue;
            tuples[std::string(to_string(v))] = tuples[std::string(to_string(v))].get<int>() + 1;
            if (!out.verdict) {
              return VerdictReport::fail({{"variant", to_string(v)},
                                          {"t1", to_json(t1)},
                                          {"t2", to_json(t2)},
                                          {"w1", to_json(w1.vertices)},
                                          {"w2", to_json(w2.vertices)},
                                          {"report", out.to_json()}});
            }
          }
        }
      }
    }
  }
  r.witness = {{"tuples", tuples}};
  return r;
}

}  // namespace

std::string_view to_string(SweepCheck c) {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "?";
}

std::optional<SweepCheck> parse_sweep_check(std::string_view name) {
  for (const auto& [check, known] : kCheckNames) {
    if (known == name) return check;
  }
  return std::nullopt;
}

const std::vector<SweepCheck>& all_sweep_checks() {
  static const std::vector<SweepCheck> checks = [] {
    std::vector<SweepCheck> out;
    for (const auto& entry : kCheckNames) out.push_back(entry.first);
    return out;
  }();
  return checks;
}

VerdictReport check_graph(SweepCheck check, const Graph& g) {
  if (check == SweepCheck::s2_equiv_accessible) return check_s2(g);
  const Analysis a(g);
  switch (check) {
    case SweepCheck::s2_equiv_accessible: break;
    case SweepCheck::accessible_equiv_strongly_accessible: return check_strong(a);
    case SweepCheck::free_vertex_count: return check_free_vertices(a);
    case SweepCheck::unmixed_equivalences: return check_unmixed_equivalences(a);
    case SweepCheck::reduction_properties: return check_reduction(a);
    case SweepCheck::union_remark: return check_union_remark(a);
    case SweepCheck::bridging_lemmas: return check_bridging(a);
  }
  throw std::logic_error("unhandled sweep check");
}

json SweepSummary::to_json() const {
  json per = json::object();
  for (std::size_t n = 0; n < per_n.size(); ++n) {
    if (per_n[n] > 0) per[std::to_string(n)] = per_n[n];
  }
  return {{"check", check}, {"max_n", max_n},         {"graphs", graphs},
          {"failures", failures},      {"witness", witness},     {"elapsed_ms", elapsed_ms},
          {"enumerated", enumerated},  {"per_n", per}};
}

namespace {

struct ChunkResult {
  std::uint64_t applied = 0;
  std::uint64_t enumerated = 0;
  bool failed = false;
  std::uint64_t mask = 0;
  json payload;
};

void validate(const SweepConfig& config) {
  if (config.max_n > kSweepHardCap) {
    throw std::invalid_argument("max_n " + std::to_string(config.max_n) +
                                " exceeds the hard cap of " + std::to_string(kSweepHardCap));
  }
  if (config.min_n < 1 || config.min_n > config.max_n) {
    throw std::invalid_argument("need 1 <= min_n <= max_n");
  }
  if (config.workers < 1) throw std::invalid_argument("workers must be positive");
  if (config.range && config.range->lo > config.range->hi) {
    throw std::invalid_argument("mask range has lo > hi");
  }
}

}  // namespace

SweepSummary sweep_check(const SweepConfig& config, SweepCheck check) {
  return sweep_with(config, std::string(to_string(check)),
                    [check](const Graph& g) { return check_graph(check, g); });
}

SweepSummary sweep_with(const SweepConfig& config, std::string name, const GraphCheck& check) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.check = std::move(name);
  summary.max_n = config.max_n;
  summary.per_n.assign(config.max_n + 1, 0);
  constexpr std::uint64_t kChunk = 4096;

  for (int n = config.min_n; n <= config.max_n && summary.failures == 0; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    std::uint64_t lo = 0;
    std::uint64_t hi = total;
    if (config.range) {
      lo = std::min(config.range->lo, total);
      hi = std::min(config.range->hi, total);
    }
    if (lo >= hi) continue;
    const std::size_t chunks = (hi - lo + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
      try {
        for (std::size_t i = next++; i < chunks; i = next++) {
          if (i > first_failure.load()) break;
          ChunkResult& out = results[i];
          const std::uint64_t end = std::min(hi, lo + (i + 1) * kChunk);
          for (std::uint64_t mask = lo + i * kChunk; mask < end; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (config.connected_only && !is_connected(g)) continue;
            ++out.enumerated;
            const VerdictReport report = check(g);
            if (!report.applicable) continue;
            ++out.applied;
            if (!report.verdict) {
              out.failed = true;
              out.mask = mask;
              out.payload = report.to_json();
              std::size_t seen = first_failure.load();
              while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
              }
              break;
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        first_failure = 0;
      }
    };

    const int threads = static_cast<int>(std::min<std::size_t>(config.workers, chunks));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    for (const ChunkResult& r : results) {
      summary.per_n[n] += r.applied;
      summary.enumerated += r.enumerated;
      if (r.failed) {
        const Graph g = graph_from_mask(n, r.mask);
        summary.failures = 1;
        summary.witness = {{"n", n},
                           {"mask", r.mask},
                           {"graph", to_graph_text(g)},
                           {"graph6", to_graph6(g)},
                           {"payload", r.payload}};
        break;
      }
    }
  }
  for (std::uint64_t c : summary.per_n) summary.graphs += c;
  summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return summary;
}

std::vector<SweepSummary> sweep(const SweepConfig& config) {
  std::vector<SweepSummary> out;
  for (SweepCheck c : config.checks) out.push_back(sweep_check(config, c));
  return out;
}

VerdictReport realize_system(const SetSystem& sys, int max_n) {
  if (!sys.contains(VertexSet{})) {
    throw std::invalid_argument("a cut-set family always contains the empty set");
  }
  if (max_n < sys.ground_n()) throw std::invalid_argument("max_n is below the ground set size");
  if (max_n > kSweepHardCap) {
    throw std::invalid_argument("max_n " + std::to_string(max_n) + " exceeds the hard cap of " +
                                std::to_string(kSweepHardCap));
  }
  std::vector<VertexSet> targets;
  for (VertexSet s : sys.sets()) {
    if (!s.empty()) targets.push_back(s);
  }
  VerdictReport report;
  json searched = json::object();
  for (int m = std::max(1, sys.ground_n()); m <= max_n; ++m) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(m);
    searched[std::to_string(m)] = total;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(m, mask);
      ++report.stats.work_units;
      const bool members_cut = std::all_of(targets.begin(), targets.end(),
                                           [&](VertexSet s) { return is_cut_set(g, s); });
      if (!members_cut || cut_sets(g).sets.size() != sys.size()) continue;
      report.witness = {{"status", "realized"},
                        {"n", m},
                        {"graph", to_graph_text(g)},
                        {"graph6", to_graph6(g)},
                        {"searched", searched}};
      return report;
    }
  }
  report.verdict = false;
  report.witness = {{"status", "none-within-bound"}, {"max_n", max_n}, {"searched", searched}};
  return report;
}

}  // namespace cutsetlab
