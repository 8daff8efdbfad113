#include "cutsetlab/cutsets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace cutsetlab {

ComponentTable::ComponentTable(const Graph& g) : n_(g.order()) {
  if (n_ > kMaxTableOrder) {
    throw std::invalid_argument("component table supports at most " +
                                std::to_string(kMaxTableOrder) + " vertices");
  }
  const std::uint64_t size = std::uint64_t{1} << n_;
  counts_.resize(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    counts_[s] = static_cast<std::uint8_t>(component_count(g, VertexSet(s)));
  }
}

bool ComponentTable::is_cut_set(VertexSet s) const {
  const int c = (*this)(s);
  for (int i : s) {
    if (c <= (*this)(s.without(i))) return false;
  }
  return true;
}

bool CutSetFamily::contains(VertexSet s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

std::vector<int> reconnected_components(const Graph& g, VertexSet s, int v) {
  if (!s.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in " + s.to_string());
  }
  const ComponentPartition parts = components(g, s);
  std::vector<int> out;
  for (int i = 0; i < parts.count(); ++i) {
    if (parts.components[i].intersects(g.adjacent(v))) out.push_back(i);
  }
  return out;
}

bool reconnects(const Graph& g, VertexSet s, int v) {
  const VertexSet outside = g.adjacent(v) - s;
  if (outside.empty()) return false;
  return !outside.subset_of(component_of(g, s, outside.min()));
}

bool is_cut_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("set " + s.to_string() + " not inside the vertex range");
  }
  const int c = component_count(g, s);
  for (int i : s) {
    if (c <= component_count(g, s.without(i))) return false;
  }
  return true;
}

CutSetFamily cut_sets(const ComponentTable& table) {
  CutSetFamily out{table.order(), {}};
  const std::uint64_t size = std::uint64_t{1} << table.order();
  for (std::uint64_t bits = 0; bits < size; ++bits) {
    if (table.is_cut_set(VertexSet(bits))) out.sets.emplace_back(bits);
  }
  std::sort(out.sets.begin(), out.sets.end(), CanonicalLess{});
  return out;
}

CutSetFamily cut_sets(const Graph& g) { return cut_sets(ComponentTable(g)); }

VerdictReport check_unmixed(const Graph& g) {
  const ComponentTable table(g);
  const int base = table(VertexSet{});
  for (VertexSet s : cut_sets(table).sets) {
    if (table(s) != s.size() + base) {
      return VerdictReport::fail(
          {{"S", to_json(s)}, {"c", table(s)}, {"expected", s.size() + base}});
    }
  }
  return VerdictReport::pass();
}

bool is_unmixed(const Graph& g) { return check_unmixed(g).verdict; }

std::vector<Transversal> transversals(const Graph& g, VertexSet s) {
  if (!is_cut_set(g, s)) {
    throw std::invalid_argument(s.to_string() + " is not a cut set");
  }
  const auto parts = components(g, s).components;
  std::vector<Transversal> out;
  std::function<void(std::size_t, VertexSet)> extend = [&](std::size_t i, VertexSet acc) {
    if (i == parts.size()) {
      out.push_back({acc});
      return;
    }
    for (int v : parts[i]) extend(i + 1, acc.with(v));
  };
  extend(0, VertexSet{});
  return out;
}

bool is_partial_transversal(const Graph& g, VertexSet s, VertexSet w) {
  if (w.intersects(s) || !w.subset_of(g.vertices())) return false;
  VertexSet rest = w;
  while (!rest.empty()) {
    const VertexSet comp = component_of(g, s, rest.min());
    if ((comp & w).size() > 1) return false;
    rest -= comp;
  }
  return true;
}

bool is_transversal(const Graph& g, VertexSet s, VertexSet w) {
  return is_partial_transversal(g, s, w) && w.size() == component_count(g, s);
}

namespace {

class Reducer {
 public:
  Reducer(const Graph& g, VertexSet avoid) : g_(g), avoid_(avoid) {}

  // Deterministic avoid-first greedy run.
  ReductionTrace greedy(VertexSet u) const {
    ReductionTrace trace{u, u, {}, avoid_};
    VertexSet cur = u;
    while (!is_cut_set(g_, cur)) {
      const int v = pick(cur);
      cur = cur.without(v);
      trace.removed_order.push_back(v);
    }
    trace.result = cur;
    return trace;
  }

  // Depth-first over every admissible removal order; avoid vertices are
  // tried first so the first success is the avoid-first one.
  bool search(VertexSet cur, std::vector<int>& order) {
    if (dead_.contains(cur.bits())) return false;
    if (is_cut_set(g_, cur)) {
      if (!cur.intersects(avoid_)) return true;
      dead_.insert(cur.bits());
      return false;
    }
    for (VertexSet pool : {cur & avoid_, cur - avoid_}) {
      for (int v : pool) {
        if (reconnects(g_, cur, v)) continue;
        order.push_back(v);
        if (search(cur.without(v), order)) return true;
        order.pop_back();
      }
    }
    dead_.insert(cur.bits());
    return false;
  }

 private:
  int pick(VertexSet cur) const {
    for (VertexSet pool : {cur & avoid_, cur - avoid_}) {
      for (int v : pool) {
        if (!reconnects(g_, cur, v)) return v;
      }
    }
    // Every set that is not a cut set has a vertex reconnecting nothing.
    throw std::logic_error("no removable vertex in " + cur.to_string());
  }

  const Graph& g_;
  VertexSet avoid_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

ReductionOutcome reduce_to_cut_set(const Graph& g, VertexSet u, VertexSet avoid) {
  if (!u.subset_of(g.vertices())) {
    throw std::invalid_argument(u.to_string() + " is not inside the vertex range");
  }
  if (u == g.vertices()) {
    throw std::invalid_argument("reduction needs a proper subset of the vertices");
  }
  if (!avoid.subset_of(u)) {
    throw std::invalid_argument("avoid set " + avoid.to_string() + " is not inside " +
                                u.to_string());
  }
  Reducer reducer(g, avoid);
  ReductionTrace trace = reducer.greedy(u);
  if (!trace.result.intersects(avoid)) return {ReductionOutcome::Status::ok, trace};

  std::vector<int> order;
  if (reducer.search(u, order)) {
    VertexSet result = u;
    for (int v : order) result = result.without(v);
    return {ReductionOutcome::Status::ok, {u, result, order, avoid}};
  }
  return {ReductionOutcome::Status::avoid_infeasible, trace};
}

}  // namespace cutsetlab
