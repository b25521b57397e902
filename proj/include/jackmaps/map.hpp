#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackmaps/pairing.hpp"
#include "jackmaps/partition.hpp"

namespace jackmaps {

enum class EdgeKind { Straight, Twisted, Interface };

inline const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Straight: return "straight";
    case EdgeKind::Twisted: return "twisted";
    case EdgeKind::Interface: return "interface";
  }
  return "?";
}

struct EdgeClass {
  EdgeKind kind;
  bool black_leaf;  // edge pair also present in B
  bool white_leaf;  // edge pair also present in W
};

using Edge = std::pair<Label, Label>;

// Bipartite map given by three fixpoint-free involutions on one label set:
// faces = polygons(B, W), black vertices = polygons(B, E), white vertices =
// polygons(W, E). Decompositions are computed eagerly at construction.
class Map {
 public:
  Map() = default;  // empty map

  Map(Pairing b, Pairing w, Pairing e)
      : b_(std::move(b)), w_(std::move(w)), e_(std::move(e)) {
    if (b_.support_mask() != w_.support_mask() || b_.support_mask() != e_.support_mask())
      throw std::invalid_argument("map: B, W, E must share one support");
    if (!b_.empty()) {
      faces_ = PolygonDecomposition(b_, w_);
      bvert_ = PolygonDecomposition(b_, e_);
      wvert_ = PolygonDecomposition(w_, e_);
      components_ = count_components();
    }
  }

  const Pairing& black() const { return b_; }
  const Pairing& white() const { return w_; }
  const Pairing& edge_pairing() const { return e_; }
  bool empty() const { return e_.empty(); }

  const PolygonDecomposition& faces() const { return faces_; }
  const PolygonDecomposition& black_vertices() const { return bvert_; }
  const PolygonDecomposition& white_vertices() const { return wvert_; }
  const Partition& face_type() const { return faces_.type(); }

  unsigned edge_count() const { return e_.pair_count(); }
  unsigned face_count() const { return faces_.count(); }
  unsigned black_vertex_count() const { return bvert_.count(); }
  unsigned white_vertex_count() const { return wvert_.count(); }
  unsigned vertex_count() const { return black_vertex_count() + white_vertex_count(); }
  unsigned component_count() const { return components_; }

  std::vector<Edge> edges() const { return e_.pairs(); }

  int euler_characteristic() const {
    return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) +
           static_cast<int>(face_count());
  }
  // d = 2 * components - euler characteristic; 0 exactly when every component
  // is spherical.
  int nonorientability_defect() const {
    return 2 * static_cast<int>(components_) - euler_characteristic();
  }

  EdgeClass classify_edge(const Edge& e) const {
    if (!e_.has_pair(e.first, e.second))
      throw std::invalid_argument("map: not an edge of this map");
    EdgeClass c{};
    switch (faces_.position_parity(e.first, e.second)) {
      case PositionParity::Even: c.kind = EdgeKind::Straight; break;
      case PositionParity::Odd: c.kind = EdgeKind::Twisted; break;
      case PositionParity::DifferentPolygons: c.kind = EdgeKind::Interface; break;
    }
    c.black_leaf = b_.has_pair(e.first, e.second);
    c.white_leaf = w_.has_pair(e.first, e.second);
    return c;
  }

  // Bridge: the edge lies on no cycle of the underlying bipartite multigraph,
  // i.e. its endpoints are disconnected once this one edge is deleted.
  bool is_bridge(const Edge& e) const {
    int src = bvert_.polygon_index(e.first);
    int dst = wvert_.polygon_index(e.first);
    unsigned nb = black_vertex_count();
    std::vector<char> seen_b(nb, 0), seen_w(white_vertex_count(), 0);
    std::vector<int> stack{src};
    seen_b[src] = 1;
    const std::vector<Edge> all = edges();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool at_black = v >= 0;
      for (const Edge& f : all) {
        if (f == e) continue;
        int fb = bvert_.polygon_index(f.first);
        int fw = wvert_.polygon_index(f.first);
        if (at_black && fb == v && !seen_w[fw]) {
          if (fw == dst) return false;
          seen_w[fw] = 1;
          stack.push_back(-1 - fw);
        } else if (!at_black && fw == -1 - v && !seen_b[fb]) {
          seen_b[fb] = 1;
          stack.push_back(fb);
        }
      }
    }
    return true;
  }

  // Removal of an edge pair: E drops it, B and W re-match the freed partners.
  Map remove_edge(const Edge& e) const {
    if (!e_.has_pair(e.first, e.second))
      throw std::invalid_argument("map: not an edge of this map");
    Pairing e2 = e_;
    e2.erase_pair(e.first);
    return Map(remove_pair(b_, e.first, e.second), remove_pair(w_, e.first, e.second), e2);
  }

  friend bool operator==(const Map& x, const Map& y) {
    return x.b_ == y.b_ && x.w_ == y.w_ && x.e_ == y.e_;
  }

 private:
  unsigned count_components() const {
    std::array<int, kMaxLabels> root{};
    root.fill(-1);
    std::function<int(int)> find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    auto unite = [&](int x, int y) { root[find(x)] = find(y); };
    for (Label a : b_.support()) root[a] = a;
    for (auto [x, y] : b_.pairs()) unite(x, y);
    for (auto [x, y] : w_.pairs()) unite(x, y);
    for (auto [x, y] : e_.pairs()) unite(x, y);
    unsigned n = 0;
    for (Label a : b_.support()) n += (find(a) == a);
    return n;
  }

  Pairing b_, w_, e_;
  PolygonDecomposition faces_, bvert_, wvert_;
  unsigned components_ = 0;
};

// --- canonical encodings ---------------------------------------------------

namespace detail {

// Relabeling traversal of one component from `seed`: ids are handed out in
// discovery order, neighbors probed in the fixed order B, W, E.
inline std::vector<uint8_t> component_encoding(const Map& m, Label seed) {
  std::array<int8_t, kMaxLabels> id;
  id.fill(-1);
  std::vector<Label> order;
  id[seed] = 0;
  order.push_back(seed);
  for (size_t k = 0; k < order.size(); ++k) {
    Label x = order[k];
    for (const Pairing* p : {&m.black(), &m.white(), &m.edge_pairing()}) {
      Label y = p->partner(x);
      if (id[y] < 0) {
        id[y] = static_cast<int8_t>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<uint8_t> enc;
  enc.reserve(3 * order.size());
  for (Label x : order) {
    enc.push_back(static_cast<uint8_t>(id[m.black().partner(x)]));
    enc.push_back(static_cast<uint8_t>(id[m.white().partner(x)]));
    enc.push_back(static_cast<uint8_t>(id[m.edge_pairing().partner(x)]));
  }
  return enc;
}

}  // namespace detail

// Relabeling-invariant key: per component the lexicographically minimal
// traversal encoding over all seeds, components sorted, joined with length
// prefixes. Two maps get equal keys exactly when they are isomorphic.
inline std::string canonical_key(const Map& m) {
  if (m.empty()) return std::string();
  // components of the label set
  std::array<int, kMaxLabels> comp_of{};
  comp_of.fill(-1);
  std::vector<std::vector<Label>> comps;
  for (Label s : m.black().support()) {
    if (comp_of[s] >= 0) continue;
    std::vector<Label> comp{s};
    comp_of[s] = static_cast<int>(comps.size());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (const Pairing* p : {&m.black(), &m.white(), &m.edge_pairing()}) {
        Label y = p->partner(comp[k]);
        if (comp_of[y] < 0) {
          comp_of[y] = comp_of[s];
          comp.push_back(y);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  std::vector<std::vector<uint8_t>> encodings;
  encodings.reserve(comps.size());
  for (const auto& comp : comps) {
    std::vector<uint8_t> best;
    for (Label seed : comp) {
      auto enc = detail::component_encoding(m, seed);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    encodings.push_back(std::move(best));
  }
  std::sort(encodings.begin(), encodings.end());
  std::string key;
  for (const auto& enc : encodings) {
    key.push_back(static_cast<char>(enc.size() / 3));
    key.append(enc.begin(), enc.end());
  }
  return key;
}

// Cheaper non-invariant key: the pairing triple after compressing the support
// order-preservingly to 0..2n-1.
inline std::string labeled_key(const Map& m) {
  std::array<int8_t, kMaxLabels> id;
  id.fill(-1);
  auto support = m.black().support();
  for (size_t i = 0; i < support.size(); ++i) id[support[i]] = static_cast<int8_t>(i);
  std::string key;
  key.reserve(3 * support.size());
  for (Label x : support) {
    key.push_back(static_cast<char>(id[m.black().partner(x)]));
    key.push_back(static_cast<char>(id[m.white().partner(x)]));
    key.push_back(static_cast<char>(id[m.edge_pairing().partner(x)]));
  }
  return key;
}

// --- enumeration -----------------------------------------------------------

// All fixpoint-free perfect matchings on the labels of `mask`, generated by
// always pairing the smallest unmatched label with each larger candidate in
// ascending order. Deterministic; returns the number visited.
inline uint64_t enumerate_pairings(uint64_t mask, const std::function<void(const Pairing&)>& fn) {
  Pairing cur;
  uint64_t count = 0;
  std::function<void(uint64_t)> rec = [&](uint64_t left) {
    if (left == 0) {
      ++count;
      fn(cur);
      return;
    }
    Label a = static_cast<Label>(__builtin_ctzll(left));
    uint64_t rest = left & ~(1ull << a);
    for (uint64_t cand = rest; cand;) {
      Label b = static_cast<Label>(__builtin_ctzll(cand));
      cand &= cand - 1;
      cur.set_pair(a, b);
      rec(rest & ~(1ull << b));
      cur.erase_pair(a);
    }
  };
  rec(mask);
  return count;
}

// Shard by the partner choice of the overall smallest label (round-robin), so
// shards are disjoint, cover everything, and preserve the global order within
// each shard.
inline uint64_t enumerate_pairings_sharded(uint64_t mask, unsigned shard, unsigned shard_count,
                                           const std::function<void(const Pairing&)>& fn) {
  if (mask == 0) {
    if (shard == 0) fn(Pairing());
    return shard == 0 ? 1 : 0;
  }
  uint64_t count = 0;
  Label a = static_cast<Label>(__builtin_ctzll(mask));
  uint64_t rest = mask & ~(1ull << a);
  unsigned branch = 0;
  for (uint64_t cand = rest; cand; ++branch) {
    Label b = static_cast<Label>(__builtin_ctzll(cand));
    cand &= cand - 1;
    if (branch % shard_count != shard) continue;
    count += enumerate_pairings(rest & ~(1ull << b), [&](const Pairing& tail) {
      Pairing full = tail;
      full.set_pair(a, b);
      fn(full);
    });
  }
  return count;
}

// All maps with the given base pairings (they fix the face structure).
inline uint64_t enumerate_maps(const Pairing& b, const Pairing& w,
                               const std::function<void(const Map&)>& fn) {
  return enumerate_pairings(b.support_mask(),
                            [&](const Pairing& e) { fn(Map(b, w, e)); });
}

// --- text I/O ----------------------------------------------------------------

// "B:1-2,3-4|W:2-3,4-1|E:1-3,2-4"
inline Map parse_map(const std::string& text) {
  std::string part[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t bar = text.find('|', pos);
    part[i] = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    pos = bar == std::string::npos ? text.size() : bar + 1;
  }
  const char* tags[3] = {"B:", "W:", "E:"};
  Pairing p[3];
  for (int i = 0; i < 3; ++i) {
    if (part[i].rfind(tags[i], 0) != 0)
      throw std::invalid_argument("map: expected sections B:|W:|E:");
    p[i] = parse_pairing(part[i].substr(2));
  }
  return Map(p[0], p[1], p[2]);
}

inline std::string format_map(const Map& m) {
  return "B:" + format_pairing(m.black()) + "|W:" + format_pairing(m.white()) +
         "|E:" + format_pairing(m.edge_pairing());
}

}  // namespace jackmaps
