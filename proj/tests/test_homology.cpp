#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbh/graded_module.hpp"
#include "gbh/homology.hpp"

using namespace gbh;

namespace {

IntegerMatrix dense(int rows, int cols, const std::vector<std::vector<long>>& data) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < data.size(); ++r)
    for (std::size_t c = 0; c < data[r].size(); ++c)
      if (data[r][c] != 0) t.push_back({static_cast<int>(r), static_cast<int>(c), data[r][c]});
  return IntegerMatrix::from_triplets(rows, cols, std::move(t));
}

std::vector<Graph> corpus() {
  return {segment_graph(), path_graph(3), cycle_graph(3), cycle_graph(4),
          star_graph(3),   star_graph(4), complete_bipartite(2, 3)};
}

}  // namespace

TEST_CASE("homology_at on elementary complexes") {
  // Z --2--> Z --0--> 0 gives Z/2
  AbelianGroup z2 = homology_at(dense(1, 1, {{2}}), IntegerMatrix(0, 1));
  CHECK(z2 == make_abelian(0, {2}));
  CHECK(z2.to_string() == "Z/2");

  // both maps zero on a rank-3 middle term
  AbelianGroup z3 = homology_at(IntegerMatrix(3, 0), IntegerMatrix(0, 3));
  CHECK(z3 == make_abelian(3, {}));
  CHECK(z3.to_string() == "Z^3");

  CHECK_THROWS_AS(homology_at(dense(2, 1, {{1}, {0}}), dense(1, 3, {{1, 0, 0}})), Error);  // shapes
  CHECK_THROWS_AS(homology_at(dense(1, 1, {{1}}), dense(1, 1, {{1}})), Error);  // not a complex
}

TEST_CASE("homology of stated configuration spaces") {
  // the interval: connected for every particle count
  CHECK(configuration_homology(segment_graph(), 0, 3, true) == make_abelian(1, {}));
  // a circle's two-particle space is again a circle
  CHECK(configuration_homology(cycle_graph(3), 1, 2, true) == make_abelian(1, {}));
  CHECK(configuration_homology(cycle_graph(3), 0, 2, true) == make_abelian(1, {}));
  // the star with three arms: H_1(UF_2) = Z
  CHECK(configuration_homology(star_graph(3), 1, 2, true) == make_abelian(1, {}));
  // empty configuration
  CHECK(configuration_homology(star_graph(3), 0, 0, true) == make_abelian(1, {}));
  // too many particles for a single point
  Graph point = build_graph({"p"}, {});
  CHECK(configuration_homology(point, 0, 2, false).trivial());
  CHECK(configuration_homology(point, 0, 1, false) == make_abelian(1, {}));
}

TEST_CASE("star homology ranks across weights") {
  // dim H_1(UF_n(star_3)) = C(n, 2), the free module on one weight-2 class
  for (int n = 0; n <= 4; ++n) {
    auto h = configuration_homology(star_graph(3), 1, n, true);
    CHECK(h.torsion.empty());
    CHECK(h.free_rank == binomial(n, 2));
  }
  // dim H_1(UF_2(star_m)) = (m-1)(m-2)/2
  for (int m = 3; m <= 5; ++m) {
    auto h = configuration_homology(star_graph(m), 1, 2, true);
    CHECK(h.free_rank == binomial(m - 1, 2));
    CHECK(h.torsion.empty());
  }
}

TEST_CASE("configurations on a cycle are circles in every weight") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(configuration_homology(cycle_graph(4), 0, n, true) == make_abelian(1, {}));
    CHECK(configuration_homology(cycle_graph(4), 1, n, true) == make_abelian(1, {}));
    CHECK(configuration_homology(cycle_graph(4), 2, n, true).trivial());
  }
}

TEST_CASE("field betti numbers") {
  CHECK(field_betti(segment_graph(), 0, 5, true, FieldTag::Q()) == 1);
  CHECK(field_betti(star_graph(3), 1, 2, true, FieldTag::Q()) == 1);
  CHECK(field_betti(star_graph(3), 1, 2, true, FieldTag::Fp(2)) == 1);
  CHECK_THROWS_AS(FieldTag::Fp(6), Error);
  CHECK_THROWS_AS(parse_field("f9"), Error);
  CHECK(parse_field("f7").prime == 7);
  CHECK(parse_field("Q").rational);
}

TEST_CASE("field ranks agree with integral homology via universal coefficients") {
  for (const Graph& g : corpus())
    for (int q = 0; q <= 2; ++q)
      for (int n = 0; n <= 3; ++n) {
        AbelianGroup h = configuration_homology(g, q, n, true);
        AbelianGroup below = configuration_homology(g, q > 0 ? q - 1 : 0, n, true);
        long rank_q = field_betti(g, q, n, true, FieldTag::Q());
        CHECK(rank_q == h.free_rank);
        for (unsigned long p : {2ul, 3ul}) {
          long torsion_here = 0, torsion_below = 0;
          for (const auto& d : h.torsion)
            if (d % p == 0) ++torsion_here;
          if (q > 0)
            for (const auto& d : below.torsion)
              if (d % p == 0) ++torsion_below;
          CHECK(field_betti(g, q, n, true, FieldTag::Fp(p)) ==
                h.free_rank + torsion_here + torsion_below);
        }
      }
}

TEST_CASE("euler characteristic balances slice dimensions against ranks") {
  for (const Graph& g : corpus()) {
    SwComplex c(g, true);
    for (int n = 0; n <= 4; ++n) {
      long chi_slices = 0, chi_homology = 0;
      for (int q = 0; q <= n; ++q) {
        long sign = q % 2 == 0 ? 1 : -1;
        chi_slices += sign * c.slice(q, n).dim();
        chi_homology += sign * field_betti(c, q, n, FieldTag::Q());
      }
      CHECK(chi_slices == chi_homology);
    }
  }
}

TEST_CASE("full and reduced complexes have the same homology") {
  for (const Graph& g : corpus())
    for (int q = 0; q <= 2; ++q)
      for (int n = 0; n <= 3; ++n)
        CHECK(configuration_homology(g, q, n, true) == configuration_homology(g, q, n, false));
}
