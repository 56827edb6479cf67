#include "biis/complex.hpp"
#include "biis/generators.hpp"
#include "biis/subdivision.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace biis;

TEST_CASE("construction validates chromatic facets", "[complex]") {
  // Two vertices of one color in a facet.
  CHECK_THROWS_AS(ChromaticComplex(2, {{0, ""}, {0, ""}}, {{0, 1}}),
                  std::invalid_argument);
  // Facet id out of range.
  CHECK_THROWS_AS(ChromaticComplex(2, {{0, ""}, {1, ""}}, {{0, 7}}),
                  std::invalid_argument);
  // Vertex color out of range.
  CHECK_THROWS_AS(ChromaticComplex(1, {{3, ""}}, {{0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChromaticComplex(1, {{-1, ""}}, {{0}}),
                  std::invalid_argument);
  // A repeated vertex inside a facet is set-normalized, not rejected: the
  // facet {0,0} collapses to {0} and vertex 1 gets its singleton cover.
  const ChromaticComplex dup(2, {{0, ""}, {1, ""}}, {{0, 0}});
  REQUIRE(dup.facets().size() == 2);
  CHECK(dup.facets()[0] == Simplex{0});
  CHECK(dup.facets()[1] == Simplex{1});
}

TEST_CASE("normalization dedupes, drops dominated, covers vertices",
          "[complex]") {
  const ChromaticComplex c(2, {{0, "a"}, {1, "b"}, {0, "c"}},
                           {{1, 0}, {0, 1}, {0}});
  // {0} is dominated by {0,1}; duplicates collapse; vertex 2 was uncovered
  // and becomes a singleton facet.
  REQUIRE(c.facets().size() == 2);
  CHECK(c.facets()[0] == Simplex{0, 1});
  CHECK(c.facets()[1] == Simplex{2});
  CHECK(c.f_vector().to_string() == "(1, 3, 1)");
}

TEST_CASE("faces and f-vector of the standard simplex", "[complex]") {
  const ChromaticComplex d2 = standard_simplex(2);
  CHECK(d2.dim() == 2);
  CHECK(d2.f_vector().to_string() == "(1, 3, 3, 1)");
  CHECK(d2.faces(-1).size() == 1);
  CHECK(d2.faces(0).size() == 3);
  CHECK(d2.faces(1).size() == 3);
  CHECK(d2.faces(2).size() == 1);
  CHECK(d2.faces(3).empty());
  CHECK(d2.all_faces().size() == 7);  // non-empty faces only
  CHECK(d2.contains({}));
  CHECK(d2.contains({0, 2}));
  CHECK(!d2.contains({0, 3}));
}

TEST_CASE("the empty complex", "[complex]") {
  const ChromaticComplex e(2);
  CHECK(e.num_vertices() == 0);
  CHECK(e.dim() == -1);
  CHECK(e.f_vector().f(-1) == 1);
  CHECK(e.f_vector().to_string() == "(1)");
  CHECK(e.contains({}));
}

TEST_CASE("adjacency, links, degrees on a path", "[complex]") {
  const ChromaticComplex p = path_complex(3);  // v0 - v1 - v2 - v3
  CHECK(p.degree(0) == 1);
  CHECK(p.degree(1) == 2);
  CHECK(p.link_vertices(1) == std::vector<VertexId>{0, 2});
  CHECK(p.vertices_of_color(0) == std::vector<VertexId>{0, 2});
  CHECK(p.vertices_of_color(1) == std::vector<VertexId>{1, 3});
  CHECK(star_edges_to_color(p, 1, 0) == 2);
  CHECK(star_edges_to_color(p, 0, 1) == 1);
}

TEST_CASE("star and link of a sub-collection", "[complex]") {
  const ChromaticComplex p = path_complex(3);
  const FaceSet st = star_faces(p, {{0}});
  // Closure of the one facet through v0: two vertices and one edge (the
  // empty simplex is omitted from face sets).
  CHECK(st.size() == 3);
  CHECK(link_count_of_color(p, st, 0) == 1);  // exactly v2 remains

  const FaceSet lk = link_faces(p, st);
  REQUIRE(lk.size() == 1);  // just {v2}
  CHECK(lk[0] == Simplex{2});

  // Unknown member faces are rejected.
  CHECK_THROWS_AS(star_faces(p, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("link of the closed corner star in the subdivided triangle",
          "[complex]") {
  const ChromaticComplex ch = chromatic_subdivide(standard_simplex(2));
  const Subdivision sub(standard_simplex(2));
  const VertexId corner = sub.vertex_for(0, {0});
  const FaceSet st = star_faces(sub.result(), {{corner}});
  CHECK(link_count_of_color(sub.result(), st, 0) == 3);
  (void)ch;
}

TEST_CASE("open star requires membership", "[complex]") {
  const ChromaticComplex p = path_complex(2);
  const FaceSet ost = open_star(p, {1});
  // v1 sits in both edges: faces {1}, {0,1}, {1,2}.
  CHECK(ost.size() == 3);
  CHECK_THROWS_AS(open_star(p, {0, 2}), std::invalid_argument);
}

TEST_CASE("boundary and interior of the subdivided edge", "[complex]") {
  const ChromaticComplex ch = chromatic_subdivide(standard_simplex(1));
  const ChromaticComplex bd = boundary(ch);
  CHECK(bd.num_vertices() == 2);
  CHECK(bd.f_vector().to_string() == "(1, 2)");
  const FVector fint = fvector_of(interior(ch));
  CHECK(fint.f(-1) == 0);
  CHECK(fint.f(0) == 2);
  CHECK(fint.f(1) == 3);
}

TEST_CASE("skeleton", "[complex]") {
  const ChromaticComplex d3 = standard_simplex(3);
  CHECK(skeleton(d3, 1).f_vector().to_string() == "(1, 4, 6)");
  CHECK(skeleton(d3, 0).f_vector().to_string() == "(1, 4)");
  CHECK(skeleton(d3, 3) == d3);
  CHECK(skeleton(d3, 9) == d3);
}

TEST_CASE("join", "[complex]") {
  const ChromaticComplex a = standard_simplex(1);
  const ChromaticComplex b(4, {{2, "x"}, {3, "y"}}, {{0, 1}});
  const ChromaticComplex j = join(a, b);
  CHECK(j.f_vector().to_string() == "(1, 4, 6, 4, 1)");

  // Convolution identity including the empty face.
  const FVector fa = a.f_vector();
  const FVector fb = b.f_vector();
  const FVector fj = j.f_vector();
  for (int k = -1; k <= j.dim(); ++k) {
    BigInt expect = 0;
    for (int i = -1; i <= k; ++i) expect += fa.f(i) * fb.f(k - 1 - i);
    CHECK(fj.f(k) == expect);
  }

  // The empty complex is the join identity.
  const ChromaticComplex e(0);
  CHECK(join(a, e) == a);
  CHECK(join(e, a) == a);

  // Shared colors are rejected.
  CHECK_THROWS_AS(join(a, standard_simplex(1)), std::invalid_argument);
}

TEST_CASE("restriction to one color", "[complex]") {
  const ChromaticComplex p = path_complex(3);
  const FaceSet all = p.all_faces();
  const FaceSet only0 = restrict_to_color(p, all, 0);
  // Non-empty simplices whose vertices all carry color 0: {v0} and {v2}
  // (no edge joins two 0-colored vertices in a path).
  std::set<Simplex> got(only0.begin(), only0.end());
  CHECK(got == std::set<Simplex>{{0}, {2}});
}

TEST_CASE("equality ignores labels but not structure", "[complex]") {
  const ChromaticComplex a(2, {{0, "x"}, {1, "y"}}, {{0, 1}});
  const ChromaticComplex b(2, {{0, ""}, {1, ""}}, {{1, 0}});
  CHECK(a == b);
  const ChromaticComplex c(2, {{1, ""}, {0, ""}}, {{0, 1}});
  CHECK(a != c);
}

TEST_CASE("complex_from_faces reindexes densely", "[complex]") {
  const ChromaticComplex p = path_complex(3);
  std::vector<VertexId> parent_ids;
  const ChromaticComplex sub = complex_from_faces(p, {{1, 2}, {2, 3}},
                                                  &parent_ids);
  CHECK(sub.num_vertices() == 3);
  CHECK(parent_ids == std::vector<VertexId>{1, 2, 3});
  CHECK(sub.color_of(0) == p.color_of(1));
  CHECK(sub.facets().size() == 2);
}
