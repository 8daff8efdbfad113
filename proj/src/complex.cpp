#include "cutsetlab/complex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "cutsetlab/cutsets.hpp"

namespace cutsetlab {

std::string ComplexVertex::to_string() const {
  return (kind == Kind::y ? "y" : "x") + std::to_string(index);
}

std::vector<ComplexVertex> Face::vertices() const {
  std::vector<ComplexVertex> out;
  for (int v : y) out.push_back({ComplexVertex::Kind::y, v});
  for (int v : x) out.push_back({ComplexVertex::Kind::x, v});
  return out;
}

std::string Face::to_string() const {
  if (empty()) return "1";
  std::string out;
  for (int v : x) out += "x" + std::to_string(v);
  for (int v : y) out += "y" + std::to_string(v);
  return out;
}

bool canonical_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t dy = a.y.bits() ^ b.y.bits();
  if (dy != 0) return (a.y.bits() & (dy & (~dy + 1))) != 0;
  const std::uint64_t dx = a.x.bits() ^ b.x.bits();
  if (dx != 0) return (a.x.bits() & (dx & (~dx + 1))) != 0;
  return false;
}

Face parse_face(std::string_view text) {
  Face f;
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.substr(i) == "1" || text.substr(i) == "{}") return f;
  while (i < text.size()) {
    const char kind = text[i++];
    if (kind != 'x' && kind != 'y') {
      throw InputError("face '" + std::string(text) + "': expected 'x' or 'y'");
    }
    int index = 0;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i++] - '0');
      if (index > kMaxVertices) throw InputError("face index too large");
    }
    if (i == start || index < 1) {
      throw InputError("face '" + std::string(text) + "': expected a positive index");
    }
    VertexSet& part = kind == 'x' ? f.x : f.y;
    if (part.contains(index)) {
      throw InputError("face '" + std::string(text) + "': repeated symbol");
    }
    part.insert(index);
  }
  return f;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets)
    : n_(n), facets_(std::move(facets)) {
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && facets_[i].subset_of(facets_[j])) {
        throw std::invalid_argument("facets " + facets_[i].to_string() + " and " +
                                    facets_[j].to_string() + " are comparable");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), CanonicalLess{});
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> maximal;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool covered = false;
    for (std::size_t j = i + 1; j < faces.size() && !covered; ++j) {
      covered = faces[i].subset_of(faces[j]);
    }
    if (!covered) maximal.push_back(faces[i]);
  }
  return {n, std::move(maximal)};
}

bool SimplicialComplex::is_face(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& facet) { return f.subset_of(facet); });
}

bool SimplicialComplex::same_facets(const SimplicialComplex& other) const {
  auto a = facets_;
  auto b = other.facets_;
  std::sort(a.begin(), a.end(), CanonicalLess{});
  std::sort(b.begin(), b.end(), CanonicalLess{});
  return a == b;
}

std::vector<Facet> delta_facets(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "the facet description needs a connected graph; process each component separately");
  }
  std::vector<Facet> out;
  for (VertexSet s : cut_sets(g).sets) {
    for (const Transversal& w : transversals(g, s)) out.push_back({s, w.vertices});
  }
  return out;
}

SimplicialComplex delta_complex(const Graph& g) {
  std::vector<Face> faces;
  for (const Facet& f : delta_facets(g)) faces.push_back(f.face(g.order()));
  return {g.order(), std::move(faces)};
}

bool is_pure(const SimplicialComplex& c) {
  const auto& f = c.facets();
  return std::all_of(f.begin(), f.end(),
                     [&](const Face& face) { return face.size() == f.front().size(); });
}

int dimension(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("the void complex has no dimension");
  int top = 0;
  for (const Face& f : c.facets()) top = std::max(top, f.size());
  return top - 1;
}

Face cone_apexes(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  Face common = c.facets().front();
  for (const Face& f : c.facets()) common = common & f;
  return common;
}

std::vector<Face> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Face, FaceHash> seen;
  for (const Face& facet : c.facets()) {
    // Walk every sub-mask of the y-part, and for each every sub-mask of the x-part.
    const std::uint64_t ys = facet.y.bits();
    const std::uint64_t xs = facet.x.bits();
    std::uint64_t y = ys;
    while (true) {
      std::uint64_t x = xs;
      while (true) {
        seen.insert(Face{VertexSet(y), VertexSet(x)});
        if (x == 0) break;
        x = (x - 1) & xs;
      }
      if (y == 0) break;
      y = (y - 1) & ys;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
  std::vector<Face> facets;
  for (const Face& facet : c.facets()) {
    if (f.subset_of(facet)) facets.push_back(facet - f);
  }
  if (facets.empty()) {
    throw std::invalid_argument(f.to_string() + " is not a face of the complex");
  }
  return {c.n(), std::move(facets)};
}

bool is_connected_complex(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("the void complex has no connectivity");
  const auto& facets = c.facets();
  std::vector<bool> joined(facets.size(), false);
  Face reach = facets.front();
  joined[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 1; i < facets.size(); ++i) {
      if (!joined[i] && facets[i].intersects(reach)) {
        joined[i] = true;
        reach = reach | facets[i];
        grew = true;
      }
    }
  }
  // Empty facets contribute no vertices, so they never disconnect anything.
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!joined[i] && !facets[i].empty()) return false;
  }
  return true;
}

SimplicialComplex parse_complex_text(std::string_view text) {
  std::vector<Face> faces;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    const Face f = parse_face(line);
    n = std::max({n, f.y.empty() ? 0 : f.y.max(), f.x.empty() ? 0 : f.x.max()});
    faces.push_back(f);
  }
  if (faces.empty()) throw InputError("complex file lists no facets");
  return SimplicialComplex::from_faces(n, std::move(faces));
}

json to_json(const Facet& f, int n) {
  return {{"S", to_json(f.cut_set)},
          {"W", to_json(f.transversal)},
          {"facet", f.face(n).to_string()}};
}

}  // namespace cutsetlab
