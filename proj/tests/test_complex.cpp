#include <doctest.h>

#include <random>

#include "cutsetlab/complex.hpp"
#include "cutsetlab/cutsets.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cutsetlab;
using fixtures::g5;
using fixtures::g9;
using fixtures::p4;

namespace {

oracle::Face to_oracle(const Face& f) {
  oracle::Face out;
  for (int v : f.y) out.insert({'y', v});
  for (int v : f.x) out.insert({'x', v});
  return out;
}

oracle::Complex to_oracle(const std::vector<Face>& faces) {
  oracle::Complex out;
  for (const Face& f : faces) out.insert(to_oracle(f));
  return out;
}

// Faces of a random complex on the symbols y1..y4, x1..x4.
SimplicialComplex random_complex(std::mt19937_64& rng) {
  std::vector<Face> faces;
  const int count = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) {
    faces.push_back({VertexSet(rng() & 0xF), VertexSet(rng() & rng() & 0xF)});
  }
  return SimplicialComplex::from_faces(4, faces);
}

}  // namespace

TEST_CASE("the five-vertex complex matches the worked example verbatim") {
  std::vector<std::string> got;
  for (const Facet& f : delta_facets(g5())) got.push_back(f.face(5).to_string());
  const std::vector<std::string> want{
      "x1y1y2y3y4y5", "x2y1y2y3y4y5", "x3y1y2y3y4y5", "x4y1y2y3y4y5", "x5y1y2y3y4y5",
      "x1x3y1y3y4y5", "x3x4y1y3y4y5", "x3x5y1y3y4y5", "x3x4x5y3y4y5"};
  CHECK(got == want);
  const auto delta = delta_complex(g5());
  CHECK(is_pure(delta));
  CHECK(dimension(delta) == 5);
}

TEST_CASE("small complexes") {
  const auto k2 = delta_complex(Graph::complete(2));
  CHECK(k2.facets() == std::vector<Face>{{{1, 2}, {1}}, {{1, 2}, {2}}});
  CHECK(all_faces(k2).size() == 12);
  CHECK(cone_apexes(k2) == Face{{1, 2}, {}});

  CHECK(delta_complex(p4()).facets().size() == 4 + 2 + 2);

  const auto k3 = delta_complex(Graph::complete(3));
  CHECK(is_pure(k3));
  CHECK(dimension(k3) == 3);

  const SimplicialComplex mixed(3, {{{1, 2}, {}}, {{3}, {}}});
  CHECK_FALSE(is_pure(mixed));
  CHECK(dimension(mixed) == 1);

  CHECK_THROWS_AS(delta_complex(Graph(2)), std::invalid_argument);
  CHECK_THROWS_AS(dimension(SimplicialComplex{}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex(2, {{{1}, {}}, {{1, 2}, {}}}), std::invalid_argument);
}

TEST_CASE("face count of the five-vertex complex") {
  const auto faces = all_faces(delta_complex(g5()));
  CHECK(faces.size() == oracle::all_faces(oracle::delta_facets(oracle::Adj(g5()))).size());
  CHECK(faces.size() == 256);
  CHECK(std::is_sorted(faces.begin(), faces.end(), CanonicalLess{}));
  CHECK(faces.front().empty());
}

TEST_CASE("faces print x-block first and parse in any order") {
  const Face f{{1, 3, 4, 5}, {1, 3}};
  CHECK(f.to_string() == "x1x3y1y3y4y5");
  CHECK(parse_face("y1y3y4y5x1x3") == f);
  CHECK(parse_face("x1x3y1y3y4y5") == f);
  CHECK(parse_face("1").empty());
  CHECK(parse_face(" {} ").empty());
  CHECK_THROWS_AS(parse_face("z1"), InputError);
  CHECK_THROWS_AS(parse_face("y"), InputError);
  CHECK_THROWS_AS(parse_face("y1y1"), InputError);
  CHECK_THROWS_AS(parse_face("y0"), InputError);
}

TEST_CASE("face order puts y symbols before x symbols") {
  CHECK(canonical_less(Face{{1}, {}}, Face{{}, {1}}));
  CHECK(canonical_less(Face{{2}, {}}, Face{{}, {1}}));
  CHECK(canonical_less(Face{{1}, {2}}, Face{{2}, {1}}));
  CHECK(ComplexVertex{ComplexVertex::Kind::y, 9} < ComplexVertex{ComplexVertex::Kind::x, 1});
}

TEST_CASE("facet count and purity agree with the oracle on connected graphs with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      const oracle::Adj adj(g);
      const auto delta = delta_complex(g);
      REQUIRE(to_oracle(delta.facets()) == oracle::delta_facets(adj));

      std::size_t product_sum = 0;
      for (VertexSet s : cut_sets(g).sets) {
        std::size_t product = 1;
        for (VertexSet comp : components(g, s).components) product *= comp.size();
        product_sum += product;
        CHECK(n - s.size() + component_count(g, s) ==
              Facet{s, transversals(g, s).front().vertices}.face(n).size());
      }
      CHECK(delta.facets().size() == product_sum);
      CHECK(is_pure(delta) == is_unmixed(g));
      if (is_unmixed(g)) CHECK(dimension(delta) == n);
      for (const Facet& f : delta_facets(g)) {
        CHECK(f.face(n).x.subset_of(f.face(n).y));
      }
    }
  }
}

TEST_CASE("faces agree with the expansion oracle") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    if (!is_connected(g)) continue;
    const auto faces = all_faces(delta_complex(g));
    CHECK(to_oracle(faces) == oracle::all_faces(oracle::delta_facets(oracle::Adj(g))));
    CHECK(to_oracle(faces).size() == faces.size());
  }
}

TEST_CASE("link facets match the definition on small graph complexes") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      const auto delta = delta_complex(g);
      const auto faces = oracle::all_faces(to_oracle(delta.facets()));
      for (const Face& f : all_faces(delta)) {
        REQUIRE(to_oracle(link(delta, f).facets()) ==
                oracle::link_by_definition(faces, to_oracle(f)));
      }
    }
  }
}

TEST_CASE("link identities") {
  const auto delta = delta_complex(g5());
  CHECK(link(delta, Face{}).same_facets(delta));
  for (const Face& facet : delta.facets()) {
    const auto l = link(delta, facet);
    REQUIRE(l.facets().size() == 1);
    CHECK(l.facets().front().empty());
  }
  std::mt19937_64 rng(4);
  const auto faces = all_faces(delta);
  for (int trial = 0; trial < 300; ++trial) {
    const Face a = faces[rng() % faces.size()];
    const Face b = faces[rng() % faces.size()];
    if (a.intersects(b) || !delta.is_face(a | b)) continue;
    CHECK(link(link(delta, a), b).same_facets(link(delta, a | b)));
  }
  CHECK_THROWS_AS(link(delta, Face{{}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("the nine-vertex link from the bridging discussion") {
  const auto delta = delta_complex(g9());
  const Face h = parse_face("y1y3y6y9x1x3x6x9");
  const auto l = link(delta, h);
  for (const char* expected : {"y5y7", "y4x4", "y4y5"}) {
    CHECK(std::find(l.facets().begin(), l.facets().end(), parse_face(expected)) !=
          l.facets().end());
  }
  CHECK(is_connected_complex(l));
}

TEST_CASE("complex connectivity") {
  const SimplicialComplex disjoint(4, {{{1, 2}, {}}, {{3, 4}, {}}});
  CHECK_FALSE(is_connected_complex(disjoint));
  const SimplicialComplex chain(9, {parse_face("y5y7"), parse_face("y4y5"), parse_face("y4x4")});
  CHECK(is_connected_complex(chain));
  CHECK(is_connected_complex(delta_complex(g5())));
  CHECK(is_connected_complex(SimplicialComplex(1, {Face{}})));
  CHECK(is_connected_complex(SimplicialComplex(1, {Face{{1}, {}}})));
  CHECK_THROWS_AS(is_connected_complex(SimplicialComplex{}), std::invalid_argument);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto c = random_complex(rng);
    CHECK(is_connected_complex(c) == oracle::skeleton_connected(to_oracle(c.facets())));
  }
}

TEST_CASE("cone apexes") {
  const Face apex = cone_apexes(delta_complex(g5()));
  CHECK(Face{{3, 4, 5}, {}}.subset_of(apex));
  const SimplicialComplex cone(3, {parse_face("y1y2"), parse_face("y1y3")});
  CHECK(cone_apexes(cone) == parse_face("y1"));
}

TEST_CASE("complex text files") {
  const auto c = parse_complex_text(fixtures::read("two-triangles.txt"));
  CHECK(c.n() == 6);
  CHECK(c.facets().size() == 2);
  CHECK_THROWS_AS(parse_complex_text("# nothing\n"), InputError);
  const auto reduced = parse_complex_text("y1\ny1y2\nx3\n");
  CHECK(reduced.facets() == std::vector<Face>{parse_face("x3"), parse_face("y1y2")});
}

TEST_CASE("facet JSON") {
  const json j = to_json(Facet{{2}, {1, 3}}, 5);
  CHECK(j.dump() == R"({"S":[2],"W":[1,3],"facet":"x1x3y1y3y4y5"})");
}
