#include <doctest.h>

#include "orbicycle/graph.hpp"
#include "orbicycle/json_io.hpp"

using namespace orbicycle;

namespace {
IntPoly ipoly(std::vector<long long> coeffs) {
  std::vector<Int> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}
const long long kCap = 1000000;
}  // namespace

TEST_CASE("graph builders") {
  Graph cyc4 = build_graph("Cyc4");
  CHECK(cyc4.vertex_count() == 4);
  CHECK(cyc4.edge_count() == 4);
  CHECK(cyc4 == build_graph("edges(4; 1-2, 2-3, 3-4, 1-4)"));
  // The 4-cycle is K_{2,2} up to relabeling: same automorphism count below.

  Graph join = build_graph("join(K2,N3)");
  CHECK(join.vertex_count() == 5);
  CHECK(join.edge_count() == 7);

  Graph star = build_graph("Star4");
  CHECK(star.vertex_count() == 5);
  CHECK(star.edge_count() == 4);
  CHECK(star.star_center() == 0);

  CHECK(build_graph("Kmulti(3,3)").edge_count() == 9);
  CHECK(build_graph("union(K3,K3,K3)").edge_count() == 9);
  CHECK(build_graph("N4").edge_count() == 0);
  CHECK(build_graph("Path3").edge_count() == 2);

  CHECK_THROWS_AS(build_graph("edges(3; 1-1)"), Error);
  CHECK_THROWS_AS(build_graph("edges(3; 1-7)"), Error);
  CHECK_THROWS_AS(build_graph("Cyc2"), Error);
  CHECK_THROWS_AS(build_graph("Blah4"), Error);
}

TEST_CASE("quotient graphs") {
  Graph cyc4 = cycle_graph(4);
  QuotientGraph q1 = quotient(cyc4, Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
  CHECK_FALSE(q1.has_loop);
  CHECK(q1.graph.vertex_count() == 2);
  CHECK(q1.graph.edge_count() == 1);

  QuotientGraph q2 = quotient(cyc4, Permutation::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(q2.has_loop);
  CHECK(q2.graph.vertex_count() == 1);

  QuotientGraph q3 = quotient(cyc4, Permutation::identity(4));
  CHECK_FALSE(q3.has_loop);
  CHECK(q3.graph == cyc4);

  CHECK_THROWS_AS(quotient(cyc4, Permutation::identity(5)), Error);
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_polynomial(path_graph(3)) == ipoly({0, 1, -2, 1}));
  CHECK(chromatic_polynomial(complete_graph(4)) == falling_factorial(4));
  CHECK(chromatic_polynomial(null_graph(5)) == ipoly({0, 0, 0, 0, 0, 1}));
  CHECK(chromatic_polynomial(QuotientGraph{Graph(1), true}).is_zero());

  std::uint64_t nodes = 0;
  CHECK(chromatic_polynomial_counted(cycle_graph(4), nodes) == ipoly({0, -3, 6, -4, 1}));
  CHECK(nodes > 1);
}

TEST_CASE("chromatic evaluations agree with exhaustive counting") {
  CHECK(count_proper_colorings_bruteforce(cycle_graph(4), 2) == 2);
  CHECK(count_proper_colorings_bruteforce(complete_graph(3), 3) == 6);
  CHECK(count_proper_colorings_bruteforce(null_graph(3), 2) == 8);

  std::vector<Graph> set{null_graph(4),      complete_graph(5), cycle_graph(5),
                         path_graph(6),      star_graph(5),     complete_multipartite({2, 3}),
                         build_graph("join(K2,N3)"), build_graph("union(K3,Path3)"),
                         build_graph("edges(5; 1-2, 2-3, 3-4, 4-5, 1-3)")};
  for (const Graph& g : set) {
    IntPoly p = chromatic_polynomial(g);
    for (int q = 1; q <= 4; ++q)
      CHECK(p.eval(q) == count_proper_colorings_bruteforce(g, q));
    // Whitney: the coefficient below the top is minus the edge count.
    CHECK(p.coeff(g.vertex_count() - 1) == -g.edge_count());
  }
}

TEST_CASE("chromatic polynomial is multiplicative over disjoint unions") {
  std::vector<std::pair<Graph, Graph>> pairs{{complete_graph(3), path_graph(3)},
                                             {cycle_graph(4), null_graph(2)},
                                             {star_graph(3), complete_graph(2)}};
  for (const auto& [a, b] : pairs)
    CHECK(chromatic_polynomial(disjoint_union({a, b})) ==
          chromatic_polynomial(a) * chromatic_polynomial(b));
}

TEST_CASE("trees have chromatic polynomial x(x-1)^(r-1)") {
  for (int r = 2; r <= 7; ++r) {
    IntPoly expect = IntPoly::x();
    for (int i = 1; i < r; ++i) expect = expect * ipoly({-1, 1});
    CHECK(chromatic_polynomial(path_graph(r)) == expect);
    CHECK(chromatic_polynomial(star_graph(r - 1)) == expect);
  }
}

TEST_CASE("automorphism groups by brute force") {
  CHECK(automorphism_group(cycle_graph(4)).order() == 8);
  CHECK(automorphism_group(complete_graph(4)).order() == 24);
  CHECK(automorphism_group(null_graph(4)).order() == 24);
  CHECK(automorphism_group(star_graph(4)).order() == 24);
  CHECK(automorphism_group(path_graph(4)).order() == 2);
  CHECK_THROWS_AS(automorphism_group(null_graph(10)), Error);
}

TEST_CASE("invariance of graphs under groups") {
  CHECK(is_invariant(cycle_graph(4), named_group("D4", kCap)));
  CHECK(is_invariant(cycle_graph(4), named_group("C4", kCap)));
  CHECK_FALSE(is_invariant(path_graph(4), named_group("C4", kCap)));
  CHECK_FALSE(is_invariant(cycle_graph(4), named_group("C3", kCap)));
}

TEST_CASE("quotient loop flag agrees with a direct cycle scan") {
  std::vector<std::pair<Graph, const char*>> pairs{{cycle_graph(4), "D4"},
                                                   {complete_graph(4), "S4"},
                                                   {null_graph(5), "S5"},
                                                   {build_graph("union(K3,K3)"), "wr(S3,S2)"}};
  for (const auto& [graph, spec] : pairs) {
    PermutationGroup g = named_group(spec, kCap);
    REQUIRE(is_invariant(graph, g));
    for (const auto& e : g.elements()) {
      bool expect = false;
      for (const auto& cyc : e.cycles())
        for (size_t i = 0; i < cyc.size() && !expect; ++i)
          for (size_t j = i + 1; j < cyc.size() && !expect; ++j)
            if (graph.has_edge(cyc[i], cyc[j])) expect = true;
      CHECK(quotient(graph, e).has_loop == expect);
    }
  }
}

TEST_CASE("transposition counts") {
  auto cyc4 = transposition_counts(cycle_graph(4), named_group("D4", kCap));
  CHECK(cyc4.t == 2);
  CHECK(cyc4.t0 == 2);
  auto k3 = transposition_counts(complete_graph(3), named_group("S3", kCap));
  CHECK(k3.t == 3);
  CHECK(k3.t0 == 0);
  auto n3 = transposition_counts(null_graph(3), named_group("S3", kCap));
  CHECK(n3.t == 3);
  CHECK(n3.t0 == 3);
  CHECK_THROWS_AS(transposition_counts(null_graph(3), named_group("S4", kCap)), Error);
}

TEST_CASE("graph JSON round trip") {
  Graph g = build_graph("join(K2,N3)");
  CHECK(graph_from_json(graph_to_json(g)) == g);
}
