#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackmaps/partition.hpp"

namespace jackmaps {

using Label = int;  // 0-based internally; text I/O is 1-based

constexpr int kMaxLabels = 64;

// Fixpoint-free involution on a finite label set (subset of 0..63).
// Removal keeps surviving labels unchanged, so supports can have holes.
class Pairing {
 public:
  Pairing() { partner_.fill(-1); }

  static Pairing from_pairs(const std::vector<std::pair<Label, Label>>& pairs) {
    Pairing p;
    for (auto [a, b] : pairs) p.set_pair(a, b);
    return p;
  }

  void set_pair(Label a, Label b) {
    if (a < 0 || b < 0 || a >= kMaxLabels || b >= kMaxLabels)
      throw std::invalid_argument("pairing: label out of range");
    if (a == b) throw std::invalid_argument("pairing: fixpoint not allowed");
    if (contains(a) || contains(b)) throw std::invalid_argument("pairing: label already paired");
    partner_[a] = b;
    partner_[b] = a;
    mask_ |= (1ull << a) | (1ull << b);
  }

  void erase_pair(Label a) {
    Label b = partner(a);
    partner_[a] = partner_[b] = -1;
    mask_ &= ~((1ull << a) | (1ull << b));
  }

  bool contains(Label a) const {
    return a >= 0 && a < kMaxLabels && (mask_ >> a) & 1;
  }
  Label partner(Label a) const {
    if (!contains(a)) throw std::out_of_range("pairing: label not in support");
    return partner_[a];
  }
  bool has_pair(Label a, Label b) const { return contains(a) && partner_[a] == b; }

  uint64_t support_mask() const { return mask_; }
  unsigned support_size() const { return static_cast<unsigned>(__builtin_popcountll(mask_)); }
  unsigned pair_count() const { return support_size() / 2; }
  bool empty() const { return mask_ == 0; }

  std::vector<Label> support() const {
    std::vector<Label> s;
    for (Label a = 0; a < kMaxLabels; ++a)
      if (contains(a)) s.push_back(a);
    return s;
  }
  // Pairs {a, b} with a < b, listed by smaller element.
  std::vector<std::pair<Label, Label>> pairs() const {
    std::vector<std::pair<Label, Label>> out;
    for (Label a = 0; a < kMaxLabels; ++a)
      if (contains(a) && partner_[a] > a) out.emplace_back(a, partner_[a]);
    return out;
  }

  friend bool operator==(const Pairing& x, const Pairing& y) {
    return x.mask_ == y.mask_ && x.partner_ == y.partner_;
  }

 private:
  std::array<int8_t, kMaxLabels> partner_;
  uint64_t mask_ = 0;
};

// P_{{s1,s2}}: drop the pair if present, otherwise drop both labels and
// re-match their former partners.
inline Pairing remove_pair(const Pairing& p, Label s1, Label s2) {
  if (!p.contains(s1) || !p.contains(s2) || s1 == s2)
    throw std::invalid_argument("remove_pair: need two distinct supported labels");
  Pairing q = p;
  if (p.partner(s1) == s2) {
    q.erase_pair(s1);
    return q;
  }
  Label t1 = p.partner(s1), t2 = p.partner(s2);
  q.erase_pair(s1);
  q.erase_pair(s2);
  q.set_pair(t1, t2);
  return q;
}

enum class PositionParity { Even, Odd, DifferentPolygons };

// Closed polygons traced by alternating two pairings on the same support.
class PolygonDecomposition {
 public:
  PolygonDecomposition() = default;

  // Polygon vertices alternate first/second pairs; traversal starts at each
  // polygon's smallest label and steps through `first` first.
  PolygonDecomposition(const Pairing& first, const Pairing& second) {
    if (first.support_mask() != second.support_mask())
      throw std::invalid_argument("polygons: pairings on different supports");
    poly_of_.fill(-1);
    pos_of_.fill(-1);
    for (Label start = 0; start < kMaxLabels; ++start) {
      if (!first.contains(start) || poly_of_[start] >= 0) continue;
      std::vector<Label> cycle;
      Label cur = start;
      bool use_first = true;
      do {
        poly_of_[cur] = static_cast<int>(polygons_.size());
        pos_of_[cur] = static_cast<int>(cycle.size());
        cycle.push_back(cur);
        cur = use_first ? first.partner(cur) : second.partner(cur);
        use_first = !use_first;
      } while (cur != start);
      polygons_.push_back(std::move(cycle));
    }
    std::vector<unsigned> half;
    for (const auto& c : polygons_) half.push_back(static_cast<unsigned>(c.size() / 2));
    type_ = Partition(std::move(half));
  }

  const std::vector<std::vector<Label>>& polygons() const { return polygons_; }
  const Partition& type() const { return type_; }
  unsigned count() const { return static_cast<unsigned>(polygons_.size()); }

  int polygon_index(Label a) const {
    if (a < 0 || a >= kMaxLabels || polygons_.empty() || poly_of_[a] < 0)
      throw std::out_of_range("polygons: label not present");
    return poly_of_[a];
  }
  int position(Label a) const {
    polygon_index(a);
    return pos_of_[a];
  }

  // Parity of the number of labels strictly between s1 and s2 along their
  // polygon; well defined because polygons have even length.
  PositionParity position_parity(Label s1, Label s2) const {
    int p1 = polygon_index(s1), p2 = polygon_index(s2);
    if (p1 != p2) return PositionParity::DifferentPolygons;
    int d = pos_of_[s2] - pos_of_[s1];
    int len = static_cast<int>(polygons_[p1].size());
    int between = ((d % len) + len) % len - 1;
    return between % 2 == 0 ? PositionParity::Even : PositionParity::Odd;
  }

 private:
  std::vector<std::vector<Label>> polygons_;
  Partition type_;
  std::array<int, kMaxLabels> poly_of_{};
  std::array<int, kMaxLabels> pos_of_{};
};

inline PolygonDecomposition polygons(const Pairing& b, const Pairing& w) {
  return PolygonDecomposition(b, w);
}

// Base pairings whose polygons realize the given type: per part r (largest
// first) on fresh labels c0..c_{2r-1}, B = {c0,c1},{c2,c3},... and
// W = {c1,c2},...,{c_{2r-1},c0}.
inline std::pair<Pairing, Pairing> canonical_base_pairings(const Partition& type) {
  Pairing b, w;
  Label next = 0;
  for (unsigned r : type.parts()) {
    if (next + 2 * static_cast<int>(r) > kMaxLabels)
      throw std::invalid_argument("canonical_base_pairings: type too large");
    Label c0 = next;
    for (unsigned i = 0; i < r; ++i) b.set_pair(c0 + 2 * i, c0 + 2 * i + 1);
    for (unsigned i = 0; i < r; ++i) w.set_pair(c0 + 2 * i + 1, c0 + (2 * i + 2) % (2 * r));
    next += 2 * r;
  }
  return {b, w};
}

namespace detail {
// 1-based decimal, or a single uppercase letter (A = 11, B = 12, ...).
inline Label parse_label(const std::string& tok) {
  if (tok.size() == 1 && tok[0] >= 'A' && tok[0] <= 'Z') return 10 + (tok[0] - 'A');
  long v = std::stol(tok);
  if (v < 1) throw std::invalid_argument("pairing: labels are 1-based");
  return static_cast<Label>(v - 1);
}
}  // namespace detail

// "1-2,3-4"; empty string = empty pairing.
inline Pairing parse_pairing(const std::string& text) {
  Pairing p;
  size_t i = 0;
  while (i < text.size()) {
    size_t comma = text.find(',', i);
    std::string chunk = text.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    i = comma == std::string::npos ? text.size() : comma + 1;
    if (chunk.empty()) continue;
    size_t dash = chunk.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("pairing: expected 'a-b' pair");
    p.set_pair(detail::parse_label(chunk.substr(0, dash)),
               detail::parse_label(chunk.substr(dash + 1)));
  }
  return p;
}

inline std::string format_pairing(const Pairing& p) {
  std::string out;
  for (auto [a, b] : p.pairs()) {
    if (!out.empty()) out += ",";
    out += std::to_string(a + 1) + "-" + std::to_string(b + 1);
  }
  return out;
}

}  // namespace jackmaps
