#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbh/graded_module.hpp"

using namespace gbh;

namespace {

template <typename F>
void check_actions_commute(const GradedModule<F>& m) {
  for (int e = 0; e < m.edge_count(); ++e)
    for (int f = e + 1; f < m.edge_count(); ++f)
      for (int j = 0; j + 1 < m.truncation; ++j) {
        const auto& ae = m.actions[e][j];
        const auto& af = m.actions[f][j];
        const auto& ae1 = m.actions[e][j + 1];
        const auto& af1 = m.actions[f][j + 1];
        for (int r = 0; r < static_cast<int>(m.dims[j + 2]); ++r)
          for (int c = 0; c < static_cast<int>(m.dims[j]); ++c) {
            typename F::Elem lhs = m.field.zero(), rhs = m.field.zero();
            for (int k = 0; k < static_cast<int>(m.dims[j + 1]); ++k) {
              lhs = m.field.add(lhs, m.field.mul(af1.at(r, k), ae.at(k, c)));
              rhs = m.field.add(rhs, m.field.mul(ae1.at(r, k), af.at(k, c)));
            }
            CHECK(lhs == rhs);
          }
      }
}

// Hilbert series identity: sum_j dim M_j t^j = sum_p (-1)^p B_p(t) / (1-t)^E
void check_hilbert_identity(const GradedModule<RationalField>& m) {
  int n_max = m.truncation;
  std::vector<long> alternating(n_max + 1, 0);
  for (int p = 0; p <= m.edge_count(); ++p)
    for (int j = 0; j <= n_max; ++j) {
      long b = koszul_betti(m, p, j);
      if (b) alternating[j] += (p % 2 == 0 ? b : -b);
    }
  // multiply by the truncated series of (1-t)^(-E)
  std::vector<long> hilbert(n_max + 1, 0);
  for (int j = 0; j <= n_max; ++j)
    for (int k = 0; j + k <= n_max; ++k)
      hilbert[j + k] += alternating[j] * binomial(m.edge_count() - 1 + k, k);
  for (int j = 0; j <= n_max; ++j) CHECK(hilbert[j] == m.dims[j]);
}

}  // namespace

TEST_CASE("the segment total H_0 is a free module of rank one") {
  RationalField field;
  auto m = truncated_module(segment_graph(), 0, 4, true, field);
  CHECK(m.dims == std::vector<long>{1, 1, 1, 1, 1});
  for (int j = 0; j < 4; ++j) CHECK(m.actions[0][j].at(0, 0) == 1);

  auto gens = generator_degrees(m);
  CHECK(gens == std::map<int, long>{{0, 1}});
  CHECK(koszul_betti(m, 0, 0) == 1);
  for (int p = 1; p <= 1; ++p)
    for (int j = 0; j <= 4; ++j) CHECK(koszul_betti(m, p, j) == 0);
  check_hilbert_identity(m);
}

TEST_CASE("star_3 total H_1: dims and Betti numbers") {
  RationalField field;
  auto m = truncated_module(star_graph(3), 1, 4, true, field);
  CHECK(m.dims == std::vector<long>{0, 0, 1, 3, 6});

  CHECK(generator_degrees(m) == std::map<int, long>{{2, 1}});
  CHECK(koszul_betti(m, 0, 2) == 1);
  // the module is free on its single weight-2 class: no relations at all
  for (int j = 0; j <= 4; ++j) {
    CHECK(koszul_betti(m, 1, j) == 0);
    if (j != 2) CHECK(koszul_betti(m, 0, j) == 0);
  }
  check_actions_commute(m);
  check_hilbert_identity(m);

  BettiTable t = betti_table(m, 1, 4);
  CHECK(t.entries == std::map<std::pair<int, int>, long>{{{0, 2}, 1}});
  CHECK(betti_table_csv(t) == "p,j,beta\n0,2,1\n");
}

TEST_CASE("star_4 total H_1: generators in weight 2, one relation in weight 3") {
  RationalField field;
  auto m = truncated_module(star_graph(4), 1, 4, true, field);
  CHECK(m.dims == std::vector<long>{0, 0, 3, 11, 26});
  CHECK(generator_degrees(m) == std::map<int, long>{{2, 3}});
  CHECK(koszul_betti(m, 0, 2) == 3);
  CHECK(koszul_betti(m, 1, 3) == 1);
  CHECK(koszul_betti(m, 1, 4) == 0);
  CHECK(koszul_betti(m, 2, 4) == 0);
}

TEST_CASE("K_{2,3} total H_1 and H_2") {
  RationalField field;
  Graph k23 = complete_bipartite(2, 3);
  auto m = truncated_module(k23, 1, 4, true, field);
  CHECK(m.dims == std::vector<long>{0, 2, 3, 3, 3});
  CHECK(generator_degrees(m) == std::map<int, long>{{1, 2}});
  CHECK(koszul_betti(m, 1, 2) == 9);
  check_actions_commute(m);

  // H_2 first appears with four particles
  auto m2 = truncated_module(k23, 2, 4, true, field);
  CHECK(m2.dims == std::vector<long>{0, 0, 0, 0, 1});
  CHECK(generator_degrees(m2) == std::map<int, long>{{4, 1}});
}

TEST_CASE("vanishing modules give empty tables") {
  RationalField field;
  auto m = truncated_module(segment_graph(), 3, 3, true, field);
  CHECK(m.dims == std::vector<long>{0, 0, 0, 0});
  CHECK(generator_degrees(m).empty());
  CHECK(betti_table(m, 2, 3).entries.empty());
}

TEST_CASE("koszul betti equals the cokernel route for Tor_0") {
  RationalField field;
  for (const Graph& g : {star_graph(3), cycle_graph(4), complete_bipartite(2, 3)})
    for (int q : {0, 1}) {
      auto m = truncated_module(g, q, 4, true, field);
      auto gens = generator_degrees(m);
      for (int j = 0; j <= 4; ++j) {
        long expected = gens.count(j) ? gens.at(j) : 0;
        CHECK(koszul_betti(m, 0, j) == expected);
      }
    }
}

TEST_CASE("koszul differential squares to zero") {
  RationalField field;
  auto m = truncated_module(star_graph(3), 1, 4, true, field);
  for (int p = 1; p <= 2; ++p)
    for (int d = 1; d + 1 <= m.truncation; ++d) {
      auto d1 = detail::koszul_matrix(m, p, d);
      auto d2 = detail::koszul_matrix(m, p + 1, d - 1);
      if (d1.rows() == 0 || d2.cols() == 0) continue;
      for (int r = 0; r < d1.rows(); ++r)
        for (int c = 0; c < d2.cols(); ++c) {
          mpq_class acc = 0;
          for (int k = 0; k < d1.cols(); ++k) acc += d1.at(r, k) * d2.at(k, c);
          CHECK(acc == 0);
        }
    }
}

TEST_CASE("prime field module matches the rational one when torsion is absent") {
  PrimeField f2(2);
  auto m = truncated_module(star_graph(3), 1, 4, true, f2);
  CHECK(m.dims == std::vector<long>{0, 0, 1, 3, 6});
  CHECK(generator_degrees(m) == std::map<int, long>{{2, 1}});
  CHECK(koszul_betti(m, 1, 3) == 0);

  PrimeField big(1048573);
  auto mb = truncated_module(complete_bipartite(2, 3), 1, 3, true, big);
  CHECK(mb.dims == std::vector<long>{0, 2, 3, 3});
  CHECK(generator_degrees(mb) == std::map<int, long>{{1, 2}});
}

TEST_CASE("betti numbers do not depend on the edge labelling") {
  RationalField field;
  // the same star with reversed edge-label order
  Graph relabeled = build_graph({"u", "l1", "l2", "l3"}, {{"z3", {"u", "l1"}},
                                                          {"z2", {"u", "l2"}},
                                                          {"z1", {"u", "l3"}}});
  auto a = truncated_module(star_graph(3), 1, 4, true, field);
  auto b = truncated_module(relabeled, 1, 4, true, field);
  CHECK(a.dims == b.dims);
  CHECK(betti_table(a, 2, 4).entries == betti_table(b, 2, 4).entries);
  CHECK(generator_degrees(a) == generator_degrees(b));
}

TEST_CASE("error paths") {
  RationalField field;
  auto m = truncated_module(star_graph(3), 1, 3, true, field);
  CHECK_THROWS_AS(koszul_betti(m, 0, 4), Error);       // beyond truncation
  CHECK_THROWS_AS(koszul_betti(m, -1, 2), Error);      // index
  CHECK_THROWS_AS(koszul_betti(m, 4, 2), Error);       // p > |E|
  CHECK_THROWS_AS(betti_table(m, 1, 4), Error);        // table beyond truncation
  CHECK(koszul_betti(m, 0, -1) == 0);
  CHECK(koszul_betti(m, 3, 2) == 0);                   // j < p
}
