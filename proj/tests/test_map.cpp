#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "jackmaps/map.hpp"

using namespace jackmaps;

namespace {

Pairing conjugate(const Pairing& p, const std::vector<Label>& sigma) {
  Pairing out;
  for (auto [a, b] : p.pairs()) out.set_pair(sigma[a], sigma[b]);
  return out;
}

Map relabel(const Map& m, const std::vector<Label>& sigma) {
  return Map(conjugate(m.black(), sigma), conjugate(m.white(), sigma),
             conjugate(m.edge_pairing(), sigma));
}

}  // namespace

TEST_CASE("map text io roundtrip") {
  std::string text = "B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5";
  Map m = parse_map(text);
  // formatting normalizes pair order within each pairing
  CHECK(format_map(m) == "B:1-2,3-4,5-6|W:1-6,2-3,4-5|E:1-4,2-6,3-5");
  CHECK(canonical_key(parse_map(format_map(m))) == canonical_key(m));
  CHECK(m.edge_count() == 3);
  CHECK_THROWS_AS(parse_map("B:1-2|W:1-2|E:3-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("X:1-2"), std::invalid_argument);
}

TEST_CASE("single and double edge maps") {
  Map one = parse_map("B:1-2|W:1-2|E:1-2");
  CHECK(one.face_type() == Partition({1}));
  CHECK(one.vertex_count() == 2);
  CHECK(one.euler_characteristic() == 2);  // sphere
  CHECK(one.nonorientability_defect() == 0);
  CHECK(one.is_bridge({0, 1}));
  CHECK(one.classify_edge({0, 1}).kind == EdgeKind::Straight);
  CHECK(one.classify_edge({0, 1}).black_leaf);
  CHECK(one.classify_edge({0, 1}).white_leaf);

  Map two = parse_map("B:1-2,3-4|W:1-2,3-4|E:1-3,2-4");
  CHECK(two.face_type() == Partition({1, 1}));
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 2);
  CHECK_FALSE(two.is_bridge({0, 2}));
  CHECK(two.component_count() == 1);

  Map empty;
  CHECK(empty.empty());
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("two face example statistics") {
  Map m = parse_map(
      "B:1-2,3-4,5-6,7-8,9-10,11-12,13-14|W:2-3,4-5,6-7,8-9,10-1,12-13,14-11|"
      "E:1-3,2-10,4-9,5-14,6-13,7-12,8-11");
  CHECK(m.face_type() == Partition({5, 2}));
  CHECK(m.face_count() == 2);
  CHECK(m.edge_count() == 7);
  CHECK(m.euler_characteristic() ==
        static_cast<int>(m.vertex_count()) - 7 + 2);
  CHECK(m.nonorientability_defect() >= 0);
  CHECK(m.classify_edge({3, 8}).kind == EdgeKind::Straight);
  CHECK(m.classify_edge({0, 2}).kind == EdgeKind::Twisted);
  CHECK(m.classify_edge({5, 12}).kind == EdgeKind::Interface);
  CHECK_THROWS_AS(m.classify_edge({0, 1}), std::invalid_argument);
}

TEST_CASE("edge removal keeps the map consistent") {
  Map m = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5");
  for (const Edge& e : m.edges()) {
    Map r = m.remove_edge(e);
    CHECK(r.edge_count() == 2);
    CHECK(r.face_type().size() == 2);  // total half-size drops by one
    // removal commutes
    for (const Edge& f : r.edges()) {
      Map rf = r.remove_edge(f);
      Map fr = m.remove_edge(f).remove_edge(e);
      CHECK(rf == fr);
    }
  }
  CHECK_THROWS_AS(m.remove_edge({0, 1}), std::invalid_argument);
}

TEST_CASE("canonical key is relabeling invariant") {
  Map m = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5");
  std::vector<Label> sigma(kMaxLabels);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::mt19937 rng(7);
  std::string key = canonical_key(m);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(sigma.begin(), sigma.begin() + 6, rng);
    Map r = relabel(m, sigma);
    CHECK(canonical_key(r) == key);
  }
  // a structurally different map gets a different key
  Map other = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-2,3-6,4-5");
  CHECK(canonical_key(other) != key);
  // the labeled key distinguishes relabelings of one isomorphism class
  Map shifted = relabel(m, [] {
    std::vector<Label> s(kMaxLabels);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[0], s[2]);
    return s;
  }());
  CHECK(canonical_key(shifted) == key);
  CHECK(labeled_key(shifted) != labeled_key(m));
}

TEST_CASE("map enumeration over a face type") {
  auto [b, w] = canonical_base_pairings(Partition({2, 1}));
  uint64_t count = 0;
  std::map<std::string, uint64_t> classes;
  uint64_t total = enumerate_maps(b, w, [&](const Map& m) {
    ++count;
    CHECK(m.face_type() == Partition({2, 1}));
    classes[canonical_key(m)] += 1;
  });
  CHECK(total == 15);  // 5!! pairings on 6 labels
  CHECK(count == 15);
  uint64_t sum = 0;
  for (const auto& [k, n] : classes) sum += n;
  CHECK(sum == 15);
  CHECK(classes.size() > 1);
}

TEST_CASE("defect separates orientable and non orientable maps") {
  // planar: both edges are leaves, chi = 2
  Map sphere = parse_map("B:1-2,3-4|W:2-3,4-1|E:1-2,3-4");
  CHECK(sphere.face_type() == Partition({2}));
  CHECK(sphere.euler_characteristic() == 2);
  CHECK(sphere.nonorientability_defect() == 0);
  // projective plane: same face, twisted edge identification, chi = 1
  Map proj = parse_map("B:1-2,3-4|W:2-3,4-1|E:1-3,2-4");
  CHECK(proj.euler_characteristic() == 1);
  CHECK(proj.nonorientability_defect() == 1);
  // the hexagon example has defect 2 (Klein bottle)
  Map klein = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5");
  CHECK(klein.component_count() == 1);
  CHECK(klein.nonorientability_defect() == 2);
}
