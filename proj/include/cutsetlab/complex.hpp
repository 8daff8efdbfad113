#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cutsetlab/graph.hpp"
#include "cutsetlab/verdict.hpp"

namespace cutsetlab {

/// One of the 2n symbols y_1..y_n, x_1..x_n. The y-block precedes the
/// x-block, each ascending by index.
struct ComplexVertex {
  enum class Kind { y, x };
  Kind kind = Kind::y;
  int index = 1;

  std::string to_string() const;
  friend auto operator<=>(const ComplexVertex&, const ComplexVertex&) = default;
};

/// A set of complex vertices stored as two VertexSets (the y- and x-labels).
struct Face {
  VertexSet y;
  VertexSet x;

  int size() const { return y.size() + x.size(); }
  bool empty() const { return y.empty() && x.empty(); }
  bool subset_of(const Face& o) const { return y.subset_of(o.y) && x.subset_of(o.x); }
  bool intersects(const Face& o) const { return y.intersects(o.y) || x.intersects(o.x); }

  std::vector<ComplexVertex> vertices() const;

  /// Monomial form with the x-block first: "x1x3y1y3y4y5". The empty face
  /// prints as "1".
  std::string to_string() const;

  friend Face operator|(const Face& a, const Face& b) { return {a.y | b.y, a.x | b.x}; }
  friend Face operator&(const Face& a, const Face& b) { return {a.y & b.y, a.x & b.x}; }
  friend Face operator-(const Face& a, const Face& b) { return {a.y - b.y, a.x - b.x}; }
  friend bool operator==(const Face&, const Face&) = default;
};

/// By size, then lexicographically over the symbol order y_1 < ... < x_n.
bool canonical_less(const Face& a, const Face& b);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    const std::size_t hy = VertexSetHash{}(f.y);
    return hy ^ (VertexSetHash{}(f.x) + 0x9e3779b97f4a7c15ULL + (hy << 6) + (hy >> 2));
  }
};

/// Parses monomial notation in any symbol order ("y4x4", "x1y2", "1").
Face parse_face(std::string_view text);

/// A facet F(S, W): the y-symbols off the cut set S and the x-symbols on the
/// transversal W of G - S.
struct Facet {
  VertexSet cut_set;
  VertexSet transversal;

  Face face(int n) const { return {VertexSet::range(n) - cut_set, transversal}; }
};

/// A simplicial complex given by its inclusion-maximal faces. The void
/// complex has no facets; the complex {empty face} has one empty facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the facets in the given order; they must be pairwise
  /// incomparable (checked).
  SimplicialComplex(int n, std::vector<Face> facets);

  /// Reduces an arbitrary face list to its maximal members in canonical
  /// order.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_face(const Face& f) const;

  /// Same facet set regardless of order.
  bool same_facets(const SimplicialComplex& other) const;

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

/// F(S, W) for every cut set S and transversal W, ordered by (|S|, S, W).
/// Throws std::invalid_argument on a disconnected graph.
std::vector<Facet> delta_facets(const Graph& g);
SimplicialComplex delta_complex(const Graph& g);

bool is_pure(const SimplicialComplex& c);
/// Largest facet size minus one. Throws on the void complex.
int dimension(const SimplicialComplex& c);

/// Vertices lying in every facet.
Face cone_apexes(const SimplicialComplex& c);

/// Every face exactly once, in canonical face order.
std::vector<Face> all_faces(const SimplicialComplex& c);

/// Facets of link(f) are L - f for the facets L containing f.
/// Throws std::invalid_argument when f is not a face.
SimplicialComplex link(const SimplicialComplex& c, const Face& f);

/// Facets are joined when they share a vertex; true when that graph is
/// connected. Throws std::invalid_argument on the void complex.
bool is_connected_complex(const SimplicialComplex& c);

/// Plain-text complex: one facet per line in monomial notation.
SimplicialComplex parse_complex_text(std::string_view text);

json to_json(const Facet& f, int n);

}  // namespace cutsetlab
