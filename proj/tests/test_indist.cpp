#include "biis/generators.hpp"
#include "biis/indist.hpp"
#include "biis/config.hpp"
#include "biis/subdivision.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace biis;

namespace {

// One p-vertex adjacent to two q-vertices: the smallest shape on which a
// shared code becomes invisible.
ChromaticComplex fork_complex() {
  return ChromaticComplex(2, {{0, "v"}, {1, "w"}, {1, "t"}}, {{0, 1}, {0, 2}});
}

bool proper(const IndistGraph& g, const std::map<VertexId, int>& coloring) {
  for (const auto& [u, w] : g.edges)
    if (coloring.at(u) == coloring.at(w)) return false;
  for (const auto& [v, code] : coloring)
    if (code < 1) return false;
  return true;
}

}  // namespace

TEST_CASE("indistinguishability graphs of the subdivided triangle",
          "[indist]") {
  const Subdivision sub(standard_simplex(2));
  const ChromaticComplex& ch = sub.result();
  for (Color p = 0; p < 3; ++p) {
    const IndistGraph g = indist_graph(ch, p);
    CHECK(g.color == p);
    CHECK(g.nodes.size() == 4);
    CHECK(g.edges.size() == 5);  // K4 minus one edge
    CHECK(g.max_degree() == 3);
  }
  // The missing edge joins the two vertices carried by different base edges:
  // no vertex has both in its link.
  const IndistGraph g0 = indist_graph(ch, 0);
  const VertexId a = sub.vertex_for(0, {0, 1});
  const VertexId b = sub.vertex_for(0, {0, 2});
  CHECK(!g0.has_edge(a, b));
  CHECK(g0.has_edge(sub.vertex_for(0, {0}), sub.vertex_for(0, {0, 1, 2})));
}

TEST_CASE("distinguishability verdicts with witnesses", "[indist]") {
  const ChromaticComplex fork = fork_complex();
  CHECK(is_distinguishable(fork, Encoding::injective(fork)).distinguishable);

  const DistResult bad = is_distinguishable(fork, Encoding::constant(fork));
  REQUIRE(!bad.distinguishable);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->s == 0);
  CHECK(bad.witness->t == 1);
  CHECK(bad.witness->w == 2);

  // Partial encodings are rejected.
  Encoding partial;
  partial.codes[0] = 1;
  CHECK_THROWS_AS(is_distinguishable(fork, partial), std::invalid_argument);

  // On a single facet every total encoding distinguishes: colors alone
  // separate the one link vertex per class.
  const ChromaticComplex d2 = standard_simplex(2);
  CHECK(is_distinguishable(d2, Encoding::constant(d2)).distinguishable);
}

TEST_CASE("coloring equivalence matches distinguishability", "[indist]") {
  Rng rng(1123);
  for (int i = 0; i < 20; ++i) {
    const ChromaticComplex c = random_chromatic_complex(rng, 3, 6);
    const Encoding e = (i % 3 == 0)
                           ? Encoding::constant(c)
                           : random_encoding(rng, c, 1 + (int)rng.below(4));
    // Throws std::logic_error if the two sides ever disagree.
    const bool verdict = coloring_equivalence_check(c, e);
    CHECK(verdict == is_distinguishable(c, e).distinguishable);
  }
}

TEST_CASE("greedy coloring is proper under both orders", "[indist]") {
  const ChromaticComplex ch = chromatic_subdivide(standard_simplex(2));
  for (Color p = 0; p < 3; ++p) {
    const IndistGraph g = indist_graph(ch, p);
    for (GreedyOrder ord :
         {GreedyOrder::kDegreeDescending, GreedyOrder::kIdAscending}) {
      const auto coloring = greedy_coloring(g, ord);
      CHECK(coloring.size() == g.nodes.size());
      CHECK(proper(g, coloring));
      int used = 0;
      for (const auto& [v, code] : coloring) used = std::max(used, code);
      CHECK(used <= g.max_degree() + 1);
    }
  }
}

TEST_CASE("exact chromatic number", "[indist]") {
  const ChromaticComplex ch = chromatic_subdivide(standard_simplex(2));
  const IndistGraph g = indist_graph(ch, 0);  // K4 minus an edge: chi = 3
  const auto exact = exact_chromatic(g);
  REQUIRE(exact.has_value());
  CHECK(proper(g, *exact));
  int used = 0;
  for (const auto& [v, code] : *exact) used = std::max(used, code);
  CHECK(used == 3);

  // Declines graphs beyond the node limit.
  IndistGraph big;
  big.color = 0;
  for (VertexId v = 0; v < 25; ++v) big.nodes.push_back(v);
  for (VertexId v = 0; v + 1 < 25; ++v) big.edges.push_back({v, v + 1});
  CHECK(!exact_chromatic(big).has_value());
  const auto forced = exact_chromatic(big, 30);
  REQUIRE(forced.has_value());
  int used2 = 0;
  for (const auto& [v, code] : *forced) used2 = std::max(used2, code);
  CHECK(used2 == 2);  // a path is 2-chromatic
}

TEST_CASE("clique and degree bounds", "[indist]") {
  const ChromaticComplex ch = chromatic_subdivide(standard_simplex(2));
  CHECK(clique_lower_bound(ch) == 3);
  CHECK(degree_upper_bound(ch) == 3);  // also cross-checks the link formula

  Rng rng(90210);
  for (int i = 0; i < 15; ++i) {
    const ChromaticComplex c = random_chromatic_complex(rng, 3, 6);
    const int lb = clique_lower_bound(c);
    const int ub = degree_upper_bound(c);  // throws if the routes disagree
    CHECK(lb <= ub + 1);
    int max_chi = 0;
    bool all_exact = true;
    for (Color p = 0; p < c.num_processes(); ++p) {
      const auto exact = exact_chromatic(indist_graph(c, p));
      if (!exact.has_value()) {
        all_exact = false;
        continue;
      }
      for (const auto& [v, code] : *exact) max_chi = std::max(max_chi, code);
    }
    if (all_exact && max_chi > 0) {
      CHECK(lb <= max_chi);
      CHECK(max_chi <= ub + 1);
    }
  }
}

TEST_CASE("bit cost of an image", "[indist]") {
  CHECK(bits_for_image(1) == 1);
  CHECK(bits_for_image(2) == 2);
  CHECK(bits_for_image(3) == 2);
  CHECK(bits_for_image(4) == 3);
  CHECK(bits_for_image(7) == 3);
  CHECK(bits_for_image(8) == 4);
}

TEST_CASE("encoding synthesis on the triangle", "[indist]") {
  const EncodingSchedule sched = synth_encoding_schedule(standard_simplex(2), 2);
  REQUIRE(sched.rounds.size() == 2);
  CHECK(!sched.truncated);

  CHECK(sched.rounds[0].round == 0);
  CHECK(sched.rounds[0].num_vertices == 3);
  CHECK(sched.rounds[0].image == 1);
  CHECK(sched.rounds[0].bits == 1);

  CHECK(sched.rounds[1].round == 1);
  CHECK(sched.rounds[1].num_vertices == 12);
  CHECK(sched.rounds[1].clique_lb == 3);
  CHECK(sched.rounds[1].delta_plus_1 == 4);
  CHECK(sched.rounds[1].image == 3);
  CHECK(sched.rounds[1].bits == 2);

  const std::string csv = bounds_report_csv(sched);
  CHECK(csv.rfind("round,vertices,clique_lb,delta_plus_1,image,bits\n", 0) ==
        0);
  CHECK(csv.find("0,3,1,1,1,1\n") != std::string::npos);
  CHECK(csv.find("1,12,3,4,3,2\n") != std::string::npos);
}

TEST_CASE("synthesis truncates at the facet cap", "[indist]") {
  const std::int64_t saved = limits().max_facets;
  limits().max_facets = 50;
  EncodingSchedule sched;
  try {
    sched = synth_encoding_schedule(standard_simplex(2), 4);
  } catch (...) {
    limits().max_facets = saved;
    throw;
  }
  limits().max_facets = saved;
  CHECK(sched.truncated);
  CHECK(sched.rounds.size() < 4);
  const std::string csv = bounds_report_csv(sched);
  CHECK(csv.find("truncated") != std::string::npos);
}

TEST_CASE("gadgets reproduce their graph", "[indist]") {
  SimpleGraph h;
  h.num_nodes = 5;
  h.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};  // node 4 isolated
  h.canonicalize();

  const ChromaticComplex gadget = gadget_from_graph(h);
  // One 0-vertex per node; node 4 survives as a singleton facet.
  CHECK(gadget.vertices_of_color(0).size() == 5);
  CHECK(gadget.vertices_of_color(1).size() == h.edges.size());
  CHECK(to_simple_graph(indist_graph(gadget, 0)) == h);

  Rng rng(64206);
  for (int i = 0; i < 20; ++i) {
    const SimpleGraph r = random_graph(rng, 10, 40);
    CHECK(to_simple_graph(indist_graph(gadget_from_graph(r), 0)) == r);
  }
}

TEST_CASE("simple graph canonicalization", "[indist]") {
  SimpleGraph g;
  g.num_nodes = 4;
  g.edges = {{2, 1}, {1, 2}, {3, 3}, {0, 2}};
  g.canonicalize();
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}
