#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "jackmaps/weight.hpp"

using namespace jackmaps;

namespace {
const char* kKlein = "B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5";
}

TEST_CASE("hexagon example weight") {
  Map m = parse_map(kKlein);
  GammaPoly expect = GammaPoly(Rational(1, 6)) + GammaPoly::monomial(2, Rational(2, 3));
  CHECK(mean_weight(m) == expect);
  CHECK(mean_weight_naive(m) == expect);
  CHECK(weight_shape_ok(m, expect));

  // the six removal histories: two give 1/2, four give gamma^2
  std::vector<Edge> order = m.edges();
  std::sort(order.begin(), order.end());
  unsigned half = 0, gg = 0;
  do {
    GammaPoly h = history_weight(m, order);
    if (h == GammaPoly(Rational(1, 2))) ++half;
    else if (h == GammaPoly::monomial(2)) ++gg;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(half == 2);
  CHECK(gg == 4);
}

TEST_CASE("edge weights by classification") {
  Map m = parse_map(kKlein);
  for (const Edge& e : m.edges()) {
    GammaPoly w = edge_weight(m, e);
    switch (m.classify_edge(e).kind) {
      case EdgeKind::Straight: CHECK(w == GammaPoly(Rational(1))); break;
      case EdgeKind::Twisted: CHECK(w == GammaPoly::monomial(1)); break;
      case EdgeKind::Interface: CHECK(w == GammaPoly(Rational(1, 2))); break;
    }
  }
  CHECK(history_weight(Map(), {}) == GammaPoly(Rational(1)));
  CHECK_THROWS_AS(history_weight(m, std::vector<Edge>{}), std::invalid_argument);
}

TEST_CASE("memo modes agree") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Partition& pi : partitions_of(n)) {
      auto [b, w] = canonical_base_pairings(pi);
      WeightMemo canonical(MemoMode::Canonical);
      WeightMemo labeled(MemoMode::Labeled);
      WeightMemo off(MemoMode::Off);
      enumerate_maps(b, w, [&](const Map& m) {
        GammaPoly wc = mean_weight(m, canonical);
        CHECK(wc == mean_weight(m, labeled));
        CHECK(wc == mean_weight(m, off));
      });
      CHECK(off.size() == 0);
      CHECK(canonical.size() <= labeled.size());
    }
  }
}

TEST_CASE("recursion equals naive average on three edges") {
  for (const Partition& pi : partitions_of(3)) {
    auto [b, w] = canonical_base_pairings(pi);
    enumerate_maps(b, w, [&](const Map& m) {
      CHECK(mean_weight(m) == mean_weight_naive(m));
    });
  }
}

TEST_CASE("pointwise evaluation matches the polynomial") {
  Rational alpha(3);
  QuadExt gamma = gamma_value(alpha);
  for (const Partition& pi : partitions_of(4)) {
    auto [b, w] = canonical_base_pairings(pi);
    WeightMemo memo(MemoMode::Canonical);
    MemoTable<QuadExt> qmemo(MemoMode::Canonical);
    enumerate_maps(b, w, [&](const Map& m) {
      QuadExt direct = mean_weight_at(m, gamma, qmemo);
      CHECK(direct == gamma_poly_eval(mean_weight(m, memo), alpha));
    });
  }
  // rational gamma overload at 2*gamma^2 = 1 is exercised via gamma = 0 (alpha = 1)
  MemoTable<Rational> rmemo(MemoMode::Canonical);
  Map m = parse_map(kKlein);
  CHECK(mean_weight_at(m, Rational(0), rmemo) == Rational(1, 6));
}

TEST_CASE("deterministic history weight") {
  Map m = parse_map(kKlein);
  AlternativeWeight alt = lacroix_weight(m);
  // the removal order uses every edge exactly once
  std::set<Edge> used(alt.order.begin(), alt.order.end());
  CHECK(used.size() == m.edge_count());
  CHECK(alt.weight == history_weight(m, alt.order));
  CHECK(alt.trace.front() == 0);

  // degree and parity bounds hold for every map on up to four edges, and the
  // residue mod 2 gamma^2 - 1 matches gamma^{l(pi) + |pi| - |V|}
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Partition& pi : partitions_of(n)) {
      auto [b, w] = canonical_base_pairings(pi);
      enumerate_maps(b, w, [&](const Map& mm) {
        AlternativeWeight a = lacroix_weight(mm);
        CHECK(weight_shape_ok(mm, a.weight));
        unsigned k = pi.length() + pi.size() - mm.vertex_count();
        CHECK(gamma_poly_mod_half(a.weight) == gamma_poly_mod_half(GammaPoly::monomial(k)));
      });
    }
  }
}

TEST_CASE("memo mode parsing") {
  CHECK(parse_memo_mode("canonical") == MemoMode::Canonical);
  CHECK(parse_memo_mode("labeled") == MemoMode::Labeled);
  CHECK(parse_memo_mode("off") == MemoMode::Off);
  CHECK_THROWS_AS(parse_memo_mode("sometimes"), std::invalid_argument);
}
