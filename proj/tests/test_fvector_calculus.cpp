#include "biis/combinatorics.hpp"
#include "biis/complex.hpp"
#include "biis/fvector_calculus.hpp"
#include "biis/generators.hpp"
#include "biis/subdivision.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

using namespace biis;

TEST_CASE("star table closed forms and diagonal", "[fvector]") {
  for (int n = 0; n <= 12; ++n) CHECK(f_star_ch_delta(n, 0) == 1);
  // T(1, n) = n 2^{n-1}.
  for (int n = 1; n <= 12; ++n)
    CHECK(f_star_ch_delta(n, 1) == BigInt(n) * ipow(BigInt(2), n - 1));
  // 2 T(2, n) = (n)_2 (2 * 3^{n-2} + 2^{n-2}).
  for (int n = 2; n <= 12; ++n)
    CHECK(2 * f_star_ch_delta(n, 2) ==
          falling_factorial(n, 2) *
              (2 * ipow(BigInt(3), n - 2) + ipow(BigInt(2), n - 2)));
  // The diagonal walks the ordered Bell numbers.
  for (int n = 0; n <= 12; ++n)
    CHECK(f_star_ch_delta(n, n) == ordered_bell(n));
  // Outside the triangle everything vanishes.
  CHECK(f_star_ch_delta(2, 5) == 0);
  CHECK(f_star_ch_delta(-1, 0) == 0);
}

TEST_CASE("star table matches direct star enumeration", "[fvector]") {
  for (int n = 0; n <= 3; ++n) {
    const ChromaticComplex base = standard_simplex(n);
    const Subdivision sub(base);
    const VertexId corner = sub.vertex_for(0, {0});
    const FVector star = fvector_of(open_star(sub.result(), {corner}));
    for (int k = 0; k <= n; ++k)
      CHECK(f_star_ch_delta(n, k) == star.f(k));
  }
}

TEST_CASE("interior star counts", "[fvector]") {
  CHECK(f_int_star_ch(1, 1) == 1);
  CHECK(f_int_star_ch(2, 1) == 2);
  CHECK(f_int_star_ch(2, 2) == 3);
  CHECK(f_int_star_ch(3, 0) == 0);

  // Enumeration oracle: k-faces of the open corner star that avoid the
  // boundary of the subdivided simplex.
  for (int n = 1; n <= 3; ++n) {
    const ChromaticComplex base = standard_simplex(n);
    const Subdivision sub(base);
    const VertexId corner = sub.vertex_for(0, {0});
    const FaceSet star = open_star(sub.result(), {corner});
    const FaceSet inside = interior(sub.result());
    const auto in_interior = [&inside](const Simplex& s) {
      return std::find(inside.begin(), inside.end(), s) != inside.end();
    };
    for (int k = 0; k <= n; ++k) {
      BigInt count = 0;
      for (const Simplex& s : star)
        if (static_cast<int>(s.size()) == k + 1 && in_interior(s)) ++count;
      CHECK(f_int_star_ch(n, k) == count);
    }
  }
}

TEST_CASE("iterated star recurrence", "[fvector]") {
  // Corner of the triangle: open star (1, 2, 1); after one round (1, 4, 3).
  FVector base;
  base.set_f(0, 1);
  base.set_f(1, 2);
  base.set_f(2, 1);
  CHECK(f_star_ch_iterated(base, 2, 1, 0) == 1);
  CHECK(f_star_ch_iterated(base, 2, 1, 1) == 4);
  CHECK(f_star_ch_iterated(base, 2, 1, 2) == 3);
  // r = 0 returns the input.
  CHECK(f_star_ch_iterated(base, 2, 0, 1) == 2);

  // Against enumeration on every vertex of a couple of complexes.
  const auto check_complex = [](const ChromaticComplex& c) {
    const int n = c.dim();
    const IteratedSubdivision it(c, 2);
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
      const FVector st = fvector_of(open_star(c, {v}));
      for (int r = 1; r <= 2; ++r) {
        VertexId tv = v;
        for (int t = 0; t < r; ++t)
          tv = it.step(t).vertex_for(c.color_of(v), {tv});
        const FVector direct = fvector_of(open_star(it.level(r), {tv}));
        for (int k = 0; k <= n; ++k)
          CHECK(f_star_ch_iterated(st, n, r, k) == direct.f(k));
      }
    }
  };
  check_complex(standard_simplex(2));
  check_complex(path_complex(3));
}

TEST_CASE("interior table by enumeration", "[fvector]") {
  const InteriorTable table = interior_table_by_enumeration(2);
  REQUIRE(table.size() == 3);
  CHECK(table[0].f(0) == 1);
  CHECK(table[1].f(0) == 2);
  CHECK(table[1].f(1) == 3);
  CHECK(table[2].f(0) == 3);
  CHECK(table[2].f(1) == 15);
  CHECK(table[2].f(2) == 13);
  // No interior face survives on the boundary-free empty count.
  CHECK(table[2].f(-1) == 0);
}

TEST_CASE("subdivision f-vector recurrence", "[fvector]") {
  const InteriorTable table = interior_table_by_enumeration(3);

  const FVector got = fvec_subdivision(standard_simplex(2).f_vector(), table);
  CHECK(got.to_string() == "(1, 12, 24, 13)");
  const FVector twice = fvec_subdivision(got, table);
  CHECK(twice.to_string() == "(1, 99, 267, 169)");

  // The identity table reproduces the input.
  InteriorTable identity;
  for (int i = 0; i <= 3; ++i) {
    FVector fv;
    fv.set_f(i, 1);
    identity.push_back(fv);
  }
  const FVector same =
      fvec_subdivision(standard_simplex(3).f_vector(), identity);
  CHECK(same == standard_simplex(3).f_vector());

  // A table that is too short is an error.
  CHECK_THROWS_AS(
      fvec_subdivision(standard_simplex(3).f_vector(),
                       interior_table_by_enumeration(1)),
      std::invalid_argument);

  // The empty complex passes through: only the empty face.
  const FVector empty_in = ChromaticComplex(2).f_vector();
  const FVector empty_out = fvec_subdivision(empty_in, table);
  CHECK(empty_out.f(-1) == 1);
  CHECK(empty_out.dim() == -1);
}

TEST_CASE("link-of-star count via both routes", "[fvector]") {
  const ChromaticComplex p = path_complex(3);
  CHECK(link_star_count(p, 0) == 1);
  CHECK(link_star_count_direct(p, 0) == 1);

  const ChromaticComplex d2 = standard_simplex(2);
  CHECK(link_star_count(d2, 0) == 3);
  CHECK(link_star_count_direct(d2, 0) == 3);

  Rng rng(60901);
  for (int i = 0; i < 8; ++i) {
    const ChromaticComplex c = random_chromatic_complex(rng, 3, 6);
    for (VertexId v = 0; v < c.num_vertices(); ++v)
      CHECK(link_star_count(c, v) == link_star_count_direct(c, v));
  }
}

TEST_CASE("largest star sits at a central vertex", "[fvector]") {
  const ArgmaxStar best = argmax_star_vertex(standard_simplex(2), 1, 2);
  const Subdivision sub(standard_simplex(2));
  // The winner carries the full triangle and beats every corner.
  CHECK(sub.carrier_of(best.vertex) == Simplex{0, 1, 2});
  CHECK(best.value == 6);
  BigInt corner_value = 0;
  {
    const VertexId corner = sub.vertex_for(0, {0});
    const FaceSet ost = open_star(sub.result(), {corner});
    for (const Simplex& s : ost)
      if (s.size() == 3) ++corner_value;
  }
  CHECK(corner_value == 3);
  CHECK(best.value > corner_value);

  const ArgmaxStar edge_best = argmax_star_vertex(standard_simplex(1), 1, 1);
  const Subdivision sub1(standard_simplex(1));
  CHECK(sub1.carrier_of(edge_best.vertex) == Simplex{0, 1});
  CHECK(edge_best.value == 2);
}

TEST_CASE("summation identity holds exactly", "[fvector]") {
  CHECK(identity_a1_check(3, 1, 1, 1, 0));
  CHECK(identity_a1_check(8, 5, 2, 3, 1));
  CHECK(identity_a1_check(5, 5, 5, 2, 0));
  CHECK(identity_a1_check(4, 2, 0, 1, 1));
  CHECK_THROWS_AS(identity_a1_check(2, 3, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("ratio table and its rendering", "[fvector]") {
  const auto rows = bounding_ratio_table(1, 1, 6);
  REQUIRE(rows.size() == 6);
  for (const RatioRow& row : rows) {
    CHECK(row.k == 1);
    // T(1, n) equals the bounding function at k = 1, so the statement's
    // normalization gives exactly 1.
    CHECK(row.T == row.bound);
    CHECK(row.ratio == Catch::Approx(1.0));
  }
  const std::string csv = ratio_table_csv(rows);
  CHECK(csv.rfind("k,n,T,bound,ratio,ratio_alt\n", 0) == 0);
  CHECK(csv.find("1,1,1,1,1,") != std::string::npos);

  // Rows below n = k are skipped.
  CHECK(bounding_ratio_table(3, 0, 2).empty());
}

TEST_CASE("factorial asymptotics of the ordered Bell numbers", "[fvector]") {
  const double err10 = fubini_asymptotic_rel_err(10);
  CHECK(err10 < 1e-9);
  CHECK(err10 > 0);
  // The error shrinks geometrically.
  CHECK(fubini_asymptotic_rel_err(12) < fubini_asymptotic_rel_err(8));
}
