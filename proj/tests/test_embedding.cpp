#include <catch2/catch_amalgamated.hpp>

#include "jackmaps/embedding.hpp"

using namespace jackmaps;

TEST_CASE("graph extraction") {
  // parallel edges collapse to one adjacency entry
  Map m = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5");
  BipartiteGraph g = graph_of(m);
  CHECK(g.n_black == m.black_vertex_count());
  CHECK(g.n_white == m.white_vertex_count());
  CHECK(g.n_black == 1);
  CHECK(g.n_white == 1);
  CHECK(g.white_adj == std::vector<std::vector<int>>{{0}});

  // simple graph: two black vertices hanging off one white vertex
  Map star = parse_map("B:1-2,3-4|W:2-3,4-1|E:1-2,3-4");
  BipartiteGraph h = graph_of(star);
  CHECK(h.n_black == 2);
  CHECK(h.n_white == 1);
  CHECK(h.white_adj == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("embedding counts match brute force") {
  std::vector<YoungDiagram> diagrams{Partition({1}), Partition({2}), Partition({2, 1}),
                                     Partition({3, 2}), Partition({2, 2, 1})};
  for (unsigned n = 1; n <= 3; ++n) {
    for (const Partition& pi : partitions_of(n)) {
      auto [b, w] = canonical_base_pairings(pi);
      enumerate_maps(b, w, [&](const Map& m) {
        BipartiteGraph g = graph_of(m);
        for (const YoungDiagram& lambda : diagrams) {
          BigInt expect = count_embeddings_bruteforce(g, lambda);
          CHECK(count_embeddings(g, lambda) == expect);
          CHECK(count_embeddings_multirect(g, lambda) == expect);
        }
      });
    }
  }
}

TEST_CASE("rectangular closed form") {
  for (const Partition& pi : partitions_of(3)) {
    auto [b, w] = canonical_base_pairings(pi);
    enumerate_maps(b, w, [&](const Map& m) {
      BipartiteGraph g = graph_of(m);
      for (unsigned p = 1; p <= 3; ++p)
        for (unsigned q = 1; q <= 3; ++q) {
          YoungDiagram rect(std::vector<unsigned>(p, q));
          CHECK(count_embeddings(g, rect) == count_embeddings_rect(g, p, q));
        }
    });
  }
}

TEST_CASE("block coordinate parsing") {
  MultirectCoords mc = parse_multirect("P=1,1,1;Q=3,2,1");
  CHECK(mc.p == std::vector<unsigned>{1, 1, 1});
  CHECK(mc.q == std::vector<unsigned>{3, 2, 1});
  CHECK(multirect_diagram(mc) == Partition({3, 2, 1}));
  // the P list is taken verbatim, not sorted
  MultirectCoords tall = parse_multirect("P=1,2;Q=4,1");
  CHECK(tall.p == std::vector<unsigned>{1, 2});
  CHECK(multirect_diagram(tall) == Partition({4, 1, 1}));
  CHECK_THROWS_AS(parse_multirect("P=1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_multirect("Q=1;P=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_multirect("P=1;Q=1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_multirect("P=1,1;Q=1,2"), std::invalid_argument);  // widths increase
}

TEST_CASE("block coordinates roundtrip") {
  for (const YoungDiagram& lambda :
       {Partition({3, 2, 1}), Partition({4, 4, 2}), Partition({5}), Partition({1, 1, 1})}) {
    MultirectCoords mc = diagram_multirect(lambda);
    CHECK(multirect_diagram(mc) == lambda);
    for (size_t k = 1; k < mc.q.size(); ++k) CHECK(mc.q[k] < mc.q[k - 1]);
  }
  CHECK(diagram_multirect(Partition()).p.empty());
}

TEST_CASE("dual side evaluation agrees") {
  // single edge: one black, one white vertex; N = sum over blocks of p_k q_k
  Map one = parse_map("B:1-2|W:1-2|E:1-2");
  BipartiteGraph g = graph_of(one);
  MultirectCoords mc;
  mc.p = {1, 1, 1};
  mc.q = {3, 2, 1};
  CHECK(count_embeddings_multirect(g, mc) == 6);
  // a map with more whites than blacks forces the telescoped branch
  for (const Partition& pi : {Partition({3}), Partition({2, 2})}) {
    auto [b, w] = canonical_base_pairings(pi);
    enumerate_maps(b, w, [&](const Map& m) {
      BigInt want = count_embeddings_bruteforce(graph_of(m), multirect_diagram(mc));
      CHECK(count_embeddings_multirect(graph_of(m), mc) == want);
    });
  }
}

TEST_CASE("empty cases") {
  BipartiteGraph empty;
  CHECK(count_embeddings(empty, Partition({3, 1})) == 1);
  CHECK(count_embeddings_multirect(empty, diagram_multirect(Partition({3, 1}))) == 1);
  Map m = parse_map("B:1-2|W:1-2|E:1-2");
  CHECK(count_embeddings(m, Partition()) == 0);  // no rows to place into
}

TEST_CASE("symbolic block polynomial substitutes to the count") {
  unsigned ell = 2;
  std::vector<unsigned> pv{2, 1}, qv{3, 1};
  MultirectCoords mc;
  mc.p = pv;
  mc.q = qv;
  Rational alpha(1);
  for (const Partition& pi : partitions_of(3)) {
    auto [b, w] = canonical_base_pairings(pi);
    enumerate_maps(b, w, [&](const Map& m) {
      MultivarPoly sym = symbolic_multirect(graph_of(m), ell);
      std::vector<QuadExt> vals;
      for (unsigned v : pv) vals.push_back(QuadExt::from_rational(alpha, v));
      for (unsigned v : qv) vals.push_back(QuadExt::from_rational(alpha, v));
      QuadExt got = multivar_substitute(sym, vals);
      BigInt want = count_embeddings_multirect(graph_of(m), mc);
      CHECK(got == QuadExt::from_rational(alpha, Rational(want)));
    });
  }
  // one black vertex, one white vertex: N = sum_k p_k q_k
  MultivarPoly sym = symbolic_multirect(graph_of(parse_map("B:1-2|W:1-2|E:1-2")), 2);
  MultivarPoly expect(multirect_vars(2));
  expect.add_term({1, 0, 1, 0}, Rational(1));
  expect.add_term({0, 1, 0, 1}, Rational(1));
  CHECK(sym == expect);
}
