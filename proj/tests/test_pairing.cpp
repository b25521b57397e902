#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "jackmaps/map.hpp"
#include "jackmaps/pairing.hpp"

using namespace jackmaps;

TEST_CASE("pairing basics") {
  Pairing p = Pairing::from_pairs({{0, 3}, {1, 2}});
  CHECK(p.pair_count() == 2);
  CHECK(p.partner(0) == 3);
  CHECK(p.partner(3) == 0);
  CHECK(p.has_pair(1, 2));
  CHECK_FALSE(p.has_pair(0, 1));
  CHECK(p.support_mask() == 0b1111u);
  CHECK(p.support() == std::vector<Label>{0, 1, 2, 3});
  CHECK_FALSE(p.contains(5));
  Pairing q;
  CHECK(q.empty());
}

TEST_CASE("pair removal rewires partners") {
  // remove labels 0 and 2: their partners 3 and 1 become a pair
  Pairing p = Pairing::from_pairs({{0, 3}, {1, 2}});
  Pairing r = remove_pair(p, 0, 2);
  CHECK(r.pair_count() == 1);
  CHECK(r.has_pair(1, 3));
  // removing a matched pair just deletes it
  Pairing s = remove_pair(p, 0, 3);
  CHECK(s.pair_count() == 1);
  CHECK(s.has_pair(1, 2));
  CHECK_THROWS_AS(remove_pair(p, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(remove_pair(p, 0, 9), std::invalid_argument);
}

TEST_CASE("pairing text io") {
  Pairing p = parse_pairing("1-2,3-4");
  CHECK(p.has_pair(0, 1));
  CHECK(p.has_pair(2, 3));
  CHECK(format_pairing(p) == "1-2,3-4");
  // letters continue after 10
  CHECK(detail::parse_label("1") == 0);
  CHECK(detail::parse_label("10") == 9);
  CHECK(detail::parse_label("A") == 10);
  CHECK(detail::parse_label("D") == 13);
  Pairing q = parse_pairing("6-13,14-11");
  CHECK(q.has_pair(5, 12));
  CHECK(q.has_pair(13, 10));
}

TEST_CASE("polygon decomposition") {
  // 2n-gon built from B and W on 6 labels: one hexagon
  Pairing b = parse_pairing("1-2,3-4,5-6");
  Pairing w = parse_pairing("2-3,4-5,6-1");
  PolygonDecomposition d(b, w);
  CHECK(d.count() == 1);
  CHECK(d.type() == Partition({3}));
  CHECK(d.polygon_index(0) == d.polygon_index(5));
  // parity of the label count strictly between the endpoints
  CHECK(d.position_parity(0, 3) == PositionParity::Even);
  CHECK(d.position_parity(0, 1) == PositionParity::Even);
  CHECK(d.position_parity(0, 2) == PositionParity::Odd);

  Pairing b2 = parse_pairing("1-2,3-4");
  Pairing w2 = parse_pairing("1-2,3-4");
  PolygonDecomposition two(b2, w2);
  CHECK(two.count() == 2);
  CHECK(two.type() == Partition({1, 1}));
  CHECK(two.position_parity(0, 2) == PositionParity::DifferentPolygons);
}

TEST_CASE("canonical base pairings have the requested face type") {
  for (const Partition& pi :
       {Partition({3}), Partition({2, 1}), Partition({5, 2}), Partition({1, 1, 1})}) {
    auto [b, w] = canonical_base_pairings(pi);
    CHECK(polygons(b, w).type() == pi);
    CHECK(b.pair_count() == pi.size());
  }
  CHECK_THROWS_AS(canonical_base_pairings(Partition({40})), std::invalid_argument);
}

TEST_CASE("pairing enumeration counts double factorials") {
  // (2n-1)!! fixpoint-free involutions on 2n labels
  for (unsigned n : {1u, 2u, 3u, 4u, 5u}) {
    uint64_t mask = (1ull << (2 * n)) - 1;
    std::set<std::string> seen;
    uint64_t count = enumerate_pairings(mask, [&](const Pairing& p) {
      REQUIRE(p.support_mask() == mask);
      seen.insert(format_pairing(p));
    });
    uint64_t want = 1;
    for (unsigned i = 1; i <= n; ++i) want *= 2 * i - 1;
    CHECK(count == want);
    CHECK(seen.size() == want);  // no duplicates
  }
}

TEST_CASE("sharded enumeration partitions the full set") {
  uint64_t mask = (1ull << 8) - 1;  // 7!! = 105 pairings
  std::set<std::string> all;
  enumerate_pairings(mask, [&](const Pairing& p) { all.insert(format_pairing(p)); });
  for (unsigned shards : {2u, 3u, 5u}) {
    std::set<std::string> merged;
    uint64_t total = 0;
    for (unsigned s = 0; s < shards; ++s)
      total += enumerate_pairings_sharded(mask, s, shards, [&](const Pairing& p) {
        auto [it, fresh] = merged.insert(format_pairing(p));
        REQUIRE(fresh);  // shards are disjoint
      });
    CHECK(total == all.size());
    CHECK(merged == all);
  }
}
