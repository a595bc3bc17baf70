#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gbh/field.hpp"
#include "gbh/graded_module.hpp"
#include "gbh/swiatkowski.hpp"

using namespace gbh;

namespace {

std::vector<Graph> corpus() {
  return {segment_graph(), path_graph(3), cycle_graph(3), cycle_graph(4),
          star_graph(3),   star_graph(4), complete_bipartite(2, 3)};
}

// Oracle for the full-mode slice dimension: coefficient of s^q t^n in
//   prod_v (1 + t + mu(v) s t) * (1 - t)^(-|E|)
long long full_dim_oracle(const Graph& g, int q, int n) {
  int qmax = q + 1, nmax = n + 1;
  std::vector<std::vector<long long>> poly(qmax + 1, std::vector<long long>(nmax + 1, 0));
  poly[0][0] = 1;
  auto mul = [&](const std::vector<std::pair<std::pair<int, int>, long long>>& factor) {
    std::vector<std::vector<long long>> out(qmax + 1, std::vector<long long>(nmax + 1, 0));
    for (int a = 0; a <= qmax; ++a)
      for (int b = 0; b <= nmax; ++b) {
        if (poly[a][b] == 0) continue;
        for (const auto& [st, c] : factor) {
          int a2 = a + st.first, b2 = b + st.second;
          if (a2 <= qmax && b2 <= nmax) out[a2][b2] += poly[a][b] * c;
        }
      }
    poly = std::move(out);
  };
  for (int v = 0; v < g.vertex_count(); ++v)
    mul({{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, g.degree(v)}});
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<std::pair<std::pair<int, int>, long long>> geometric;
    for (int k = 0; k <= nmax; ++k) geometric.push_back({{0, k}, 1});
    mul(geometric);
  }
  return poly[q][n];
}

// Reduced-mode oracle: sum over q-subsets S of vertices with mu >= 2 of
// prod (mu - 1), times the count of monomials of degree n - q.
long long reduced_dim_oracle(const Graph& g, int q, int n) {
  if (n < q || q < 0) return 0;
  std::vector<int> weights;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) weights.push_back(g.degree(v) - 1);
  std::vector<long long> elementary(q + 1, 0);
  elementary[0] = 1;
  for (int w : weights)
    for (int k = q; k >= 1; --k) elementary[k] += elementary[k - 1] * w;
  return elementary[q] * binomial(n - q + g.edge_count() - 1, g.edge_count() - 1);
}

}  // namespace

TEST_CASE("basis enumeration matches the stated examples") {
  Graph seg = segment_graph();
  BigradeSlice s01 = enumerate_basis(seg, 0, 1, false);
  REQUIRE(s01.dim() == 3);
  // one monomial generator, one Gen state per vertex
  int gens = 0, monos = 0;
  for (const auto& t : s01.basis) {
    if (t.monomial[0] == 1) ++monos;
    for (const auto& st : t.states)
      if (st.kind == VertexState::Kind::Gen) ++gens;
  }
  CHECK(monos == 1);
  CHECK(gens == 2);

  CHECK(enumerate_basis(seg, 1, 1, true).dim() == 0);

  Graph star = star_graph(3);
  BigradeSlice r11 = enumerate_basis(star, 1, 1, true);
  REQUIRE(r11.dim() == 2);
  int u = star.require_vertex("u");
  for (const auto& t : r11.basis) {
    CHECK(t.states[u].kind == VertexState::Kind::Diff);
    CHECK(t.states[u].anchor == star.require_edge("e1"));
  }
}

TEST_CASE("reduced mode rejects isolated vertices") {
  Graph lonely = build_graph({"a", "b", "z"}, {{"e1", {"a", "b"}}});
  CHECK_THROWS_AS(enumerate_basis(lonely, 0, 1, true), Error);
  CHECK(enumerate_basis(lonely, 0, 1, false).dim() == 4);  // z contributes a Gen option
}

TEST_CASE("slice dimensions match the generating function oracles") {
  for (const Graph& g : corpus())
    for (int q = 0; q <= 3; ++q)
      for (int n = 0; n <= 4; ++n) {
        CAPTURE(g.edge_count());
        CAPTURE(q);
        CAPTURE(n);
        BigradeSlice full = enumerate_basis(g, q, n, false);
        BigradeSlice reduced = enumerate_basis(g, q, n, true);
        CHECK(full.dim() == full_dim_oracle(g, q, n));
        CHECK(reduced.dim() == reduced_dim_oracle(g, q, n));
        for (const BigradeSlice* s : {&full, &reduced})
          for (const auto& t : s->basis) {
            CHECK(t.homological_degree() == q);
            CHECK(t.weight() == n);
          }
      }
}

TEST_CASE("boundary squares to zero on the corpus") {
  for (const Graph& g : corpus())
    for (bool reduced : {false, true}) {
      SwComplex complex(g, reduced);
      for (int n = 0; n <= 4; ++n)
        for (int q = 1; q <= 3; ++q) {
          const IntegerMatrix& d1 = complex.boundary(q, n);
          const IntegerMatrix& d2 = complex.boundary(q - 1, n);
          CHECK(d2.multiply(d1).is_zero());
        }
    }
}

TEST_CASE("stated boundary matrices") {
  Graph star = star_graph(3);
  SwComplex complex(star, true);
  const IntegerMatrix& d = complex.boundary(1, 1);
  REQUIRE(d.rows() == 3);
  REQUIRE(d.cols() == 2);
  // monomial basis in ascending lex order: x_{e3}, x_{e2}, x_{e1}
  CHECK(d.entry(1, 0) == 1);  // d(h_{e2,e1}) = x_{e2} - x_{e1}
  CHECK(d.entry(2, 0) == -1);
  CHECK(d.entry(0, 1) == 1);  // d(h_{e3,e1}) = x_{e3} - x_{e1}
  CHECK(d.entry(2, 1) == -1);

  // q = 0 boundary lands in the empty bigrade
  const IntegerMatrix& z = complex.boundary(0, 2);
  CHECK(z.rows() == 0);
  CHECK(z.is_zero());

  Graph seg = segment_graph();
  SwComplex full(seg, false);
  const IntegerMatrix& ds = full.boundary(1, 1);
  REQUIRE(ds.rows() == 3);
  REQUIRE(ds.cols() == 2);
  // basis (0,1): [empty(x)Gen_b, Gen_a(x)empty, x_e]; (1,1): [empty(x)h_b, h_a(x)empty]
  CHECK(ds.entry(2, 1) == 1);
  CHECK(ds.entry(1, 1) == -1);
  CHECK(ds.entry(2, 0) == 1);
  CHECK(ds.entry(0, 0) == -1);
}

TEST_CASE("edge actions commute with the boundary and each other") {
  for (const Graph& g : {star_graph(3), cycle_graph(3), complete_bipartite(2, 3)})
    for (bool reduced : {false, true}) {
      SwComplex c(g, reduced);
      for (int q = 0; q <= 2; ++q)
        for (int n = 0; n <= 3; ++n)
          for (int e = 0; e < g.edge_count(); ++e) {
            IntegerMatrix a1 = c.boundary(q, n + 1).multiply(c.edge_action(q, n, e));
            IntegerMatrix a2 = edge_action_matrix(c.slice(q - 1, n), c.slice(q - 1, n + 1), e)
                                   .multiply(c.boundary(q, n));
            CHECK(a1 == a2);
            for (int f = e + 1; f < g.edge_count(); ++f) {
              IntegerMatrix ef = edge_action_matrix(c.slice(q, n + 1), c.slice(q, n + 2), f)
                                     .multiply(c.edge_action(q, n, e));
              IntegerMatrix fe = edge_action_matrix(c.slice(q, n + 1), c.slice(q, n + 2), e)
                                     .multiply(c.edge_action(q, n, f));
              CHECK(ef == fe);
            }
          }
    }
}

TEST_CASE("edge action on the segment is the identity pattern") {
  Graph seg = segment_graph();
  SwComplex c(seg, true);
  for (int n = 0; n <= 3; ++n) {
    IntegerMatrix a = c.edge_action(0, n, 0);
    REQUIRE(a.rows() == 1);
    REQUIRE(a.cols() == 1);
    CHECK(a.entry(0, 0) == 1);
  }
  CHECK_THROWS_AS(c.edge_action(0, 0, 7), Error);
}

TEST_CASE("inclusion of the reduced complex is a chain map") {
  Graph star = star_graph(3);
  SwComplex red(star, true);
  SwComplex full(star, false);

  IntegerMatrix i11 = inclusion_matrix(red.slice(1, 1), full.slice(1, 1));
  CHECK(i11.nnz() == 4);  // two columns, two signed entries each
  for (const auto& t : i11.entries()) CHECK(abs(t.value) == 1);

  IntegerMatrix i00 = inclusion_matrix(red.slice(0, 0), full.slice(0, 0));
  REQUIRE(i00.rows() == 1);
  CHECK(i00.entry(0, 0) == 1);

  for (int q = 1; q <= 2; ++q)
    for (int n = 0; n <= 4; ++n) {
      IntegerMatrix top = inclusion_matrix(red.slice(q, n), full.slice(q, n));
      IntegerMatrix bottom = inclusion_matrix(red.slice(q - 1, n), full.slice(q - 1, n));
      CHECK(full.boundary(q, n).multiply(top) == bottom.multiply(red.boundary(q, n)));
    }

  CHECK_THROWS_AS(inclusion_matrix(red.slice(1, 1), full.slice(1, 2)), Error);
}

TEST_CASE("induced chain maps commute with the boundary") {
  // leaf swap on the star, and the orientation-reversing segment flip
  Graph star = star_graph(3);
  GraphHom swap =
      compose_or_check_hom({{"u", "u"}, {"l1", "l2"}, {"l2", "l1"}, {"l3", "l3"}}, star, star);

  Graph seg = segment_graph();
  GraphHom flip = compose_or_check_hom({{"a", "b"}, {"b", "a"}}, seg, seg);

  struct Case {
    const Graph* g;
    const GraphHom* phi;
  } cases[] = {{&star, &swap}, {&seg, &flip}};

  for (const auto& [gp, phip] : cases)
    for (bool reduced : {false, true}) {
      SwComplex c(*gp, reduced);
      for (int q = 1; q <= 2; ++q)
        for (int n = 0; n <= 4; ++n) {
          IntegerMatrix top = induced_chain_map(*phip, c.slice(q, n), c.slice(q, n));
          IntegerMatrix bottom = induced_chain_map(*phip, c.slice(q - 1, n), c.slice(q - 1, n));
          CHECK(c.boundary(q, n).multiply(top) == bottom.multiply(c.boundary(q, n)));
          if (c.slice(q, n).dim() > 0)
            CHECK(integer_rank(top) == c.slice(q, n).dim());  // injective
        }
    }
}

TEST_CASE("matrix dump format") {
  Graph star = star_graph(3);
  SwComplex c(star, true);
  std::ostringstream os;
  dump_matrix(os, "star3", c.slice(1, 1), c.boundary(1, 1));
  std::string text = os.str();
  CHECK(text.find("# graph=star3 q=1 n=1 mode=reduced rows=3 cols=2") == 0);
  CHECK(text.find("\n1 0 1\n") != std::string::npos);
  CHECK(text.find("\n2 0 -1\n") != std::string::npos);
}
