#pragma once

// Slow reference implementations for the tests. They share nothing with the
// library beyond the Graph edge list: sets are std::set<int>, adjacency is
// a matrix, and every notion is computed straight from its definition.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutsetlab/graph.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

struct Adj {
  int n = 0;
  std::vector<std::vector<bool>> m;

  explicit Adj(const cutsetlab::Graph& g) : n(g.order()), m(n + 1, std::vector<bool>(n + 1)) {
    for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  }
  bool operator()(int a, int b) const { return m[a][b]; }
};

inline Set to_set(cutsetlab::VertexSet s) {
  Set out;
  for (int v : s) out.insert(v);
  return out;
}

inline Set full(int n) {
  Set out;
  for (int v = 1; v <= n; ++v) out.insert(v);
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Components of G - removed by depth-first search, sorted by minimum.
inline std::vector<Set> components(const Adj& g, const Set& removed) {
  std::vector<Set> out;
  std::set<int> seen(removed);
  for (int s = 1; s <= g.n; ++s) {
    if (seen.count(s)) continue;
    Set comp;
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int w = 1; w <= g.n; ++w) {
        if (g(v, w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

inline int c(const Adj& g, const Set& s) { return static_cast<int>(components(g, s).size()); }

inline std::vector<Set> subsets(const Set& ground) {
  std::vector<int> items(ground.begin(), ground.end());
  std::vector<Set> out;
  for (unsigned long m = 0; m < (1UL << items.size()); ++m) {
    Set s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (m >> i & 1) s.insert(items[i]);
    }
    out.push_back(s);
  }
  return out;
}

inline bool is_cut_set(const Adj& g, const Set& s) {
  const int base = c(g, s);
  for (int i : s) {
    Set t = s;
    t.erase(i);
    if (base <= c(g, t)) return false;
  }
  return true;
}

inline Family cut_sets(const Adj& g) {
  Family out;
  for (const Set& s : subsets(full(g.n))) {
    if (is_cut_set(g, s)) out.insert(s);
  }
  return out;
}

inline bool is_clique(const Adj& g, const Set& s) {
  for (int a : s) {
    for (int b : s) {
      if (a < b && !g(a, b)) return false;
    }
  }
  return true;
}

inline std::vector<Set> maximal_cliques(const Adj& g) {
  std::vector<Set> cliques;
  for (const Set& s : subsets(full(g.n))) {
    if (!s.empty() && is_clique(g, s)) cliques.push_back(s);
  }
  std::vector<Set> out;
  for (const Set& s : cliques) {
    bool maximal = true;
    for (const Set& t : cliques) {
      if (t.size() > s.size() && subset(s, t)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

// A vertex lying in exactly one maximal clique.
inline Set free_vertices(const Adj& g) {
  const auto cliques = maximal_cliques(g);
  Set out;
  for (int v = 1; v <= g.n; ++v) {
    int owners = 0;
    for (const Set& k : cliques) owners += static_cast<int>(k.count(v));
    if (owners == 1) out.insert(v);
  }
  return out;
}

// Blocks as the inclusion-maximal vertex sets whose induced subgraph is
// connected with no cut vertex (an edge counts, an isolated vertex counts).
inline std::vector<Set> blocks(const Adj& g) {
  const Set all = full(g.n);
  std::vector<Set> good;
  for (const Set& s : subsets(all)) {
    if (s.empty()) continue;
    const Set outside = minus(all, s);
    if (c(g, outside) != 1) continue;
    bool biconnected = true;
    if (s.size() > 2) {
      for (int v : s) {
        Set drop = outside;
        drop.insert(v);
        if (c(g, drop) != 1) biconnected = false;
      }
    }
    if (biconnected) good.push_back(s);
  }
  std::vector<Set> out;
  for (const Set& s : good) {
    bool maximal = true;
    for (const Set& t : good) {
      if (t.size() > s.size() && subset(s, t)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every choice of one vertex per component of G - s.
inline Family transversals(const Adj& g, const Set& s) {
  Family out{Set{}};
  for (const Set& comp : components(g, s)) {
    Family next;
    for (const Set& partial : out) {
      for (int v : comp) {
        Set w = partial;
        w.insert(v);
        next.insert(w);
      }
    }
    out = next;
  }
  return out;
}

// Complex vertices as ('x'|'y', index); faces as sorted sets of those.
using Symbol = std::pair<char, int>;
using Face = std::set<Symbol>;
using Complex = std::set<Face>;

inline Face facet(int n, const Set& s, const Set& w) {
  Face f;
  for (int i = 1; i <= n; ++i) {
    if (!s.count(i)) f.insert({'y', i});
  }
  for (int j : w) f.insert({'x', j});
  return f;
}

inline Complex delta_facets(const Adj& g) {
  Complex out;
  for (const Set& s : cut_sets(g)) {
    for (const Set& w : transversals(g, s)) out.insert(facet(g.n, s, w));
  }
  return out;
}

inline Complex all_faces(const Complex& facets) {
  Complex out;
  for (const Face& f : facets) {
    std::vector<Symbol> items(f.begin(), f.end());
    for (unsigned long m = 0; m < (1UL << items.size()); ++m) {
      Face sub;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (m >> i & 1) sub.insert(items[i]);
      }
      out.insert(sub);
    }
  }
  return out;
}

inline Complex maximal(const Complex& faces) {
  Complex out;
  for (const Face& f : faces) {
    bool top = true;
    for (const Face& h : faces) {
      if (h.size() > f.size() && std::includes(h.begin(), h.end(), f.begin(), f.end())) {
        top = false;
        break;
      }
    }
    if (top) out.insert(f);
  }
  return out;
}

// Maximal faces of {G : G and F disjoint, G + F a face}, read straight off
// the face list.
inline Complex link_by_definition(const Complex& faces, const Face& f) {
  Complex members;
  for (const Face& h : faces) {
    bool disjoint = true;
    for (const Symbol& s : h) disjoint = disjoint && !f.count(s);
    if (!disjoint) continue;
    Face u = h;
    u.insert(f.begin(), f.end());
    if (faces.count(u)) members.insert(h);
  }
  return maximal(members);
}

// Union-find over the vertices of the 1-skeleton.
inline bool skeleton_connected(const Complex& facets) {
  std::map<Symbol, Symbol> parent;
  std::function<Symbol(Symbol)> find = [&](Symbol s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (const Face& f : facets) {
    for (const Symbol& s : f) parent.emplace(s, s);
  }
  for (const Face& f : facets) {
    for (const Symbol& s : f) parent[find(s)] = find(*f.begin());
  }
  std::set<Symbol> roots;
  for (auto& [s, p] : parent) roots.insert(find(s));
  return roots.size() <= 1;
}

// Strong accessibility straight from the definition: for S strictly inside
// T, some v in T - S keeps S + v a member.
inline bool strongly_accessible(const Family& sys) {
  for (const Set& s : sys) {
    for (const Set& t : sys) {
      if (s == t || !subset(s, t)) continue;
      bool ok = false;
      for (int v : minus(t, s)) {
        Set next = s;
        next.insert(v);
        ok = ok || sys.count(next);
      }
      if (!ok) return false;
    }
  }
  return true;
}

inline bool accessible(const Family& sys) {
  for (const Set& s : sys) {
    if (s.empty()) continue;
    bool ok = false;
    for (int v : s) {
      Set less = s;
      less.erase(v);
      ok = ok || sys.count(less);
    }
    if (!ok) return false;
  }
  return true;
}

inline cutsetlab::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  cutsetlab::Graph g(n);
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
