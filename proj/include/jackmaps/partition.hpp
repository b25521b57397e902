#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackmaps/rational.hpp"

namespace jackmaps {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    normalize();
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const {  // number of boxes
    unsigned n = 0;
    for (unsigned p : parts_) n += p;
    return n;
  }
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  unsigned part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  unsigned multiplicity(unsigned value) const {
    unsigned m = 0;
    for (unsigned p : parts_) m += (p == value);
    return m;
  }

  Partition conjugate() const {
    std::vector<unsigned> cols;
    if (!parts_.empty()) {
      cols.resize(parts_[0], 0);
      for (unsigned p : parts_)
        for (unsigned c = 0; c < p; ++c) cols[c]++;
    }
    return Partition(std::move(cols));
  }

  // z = prod parts * prod multiplicities!
  BigInt z() const {
    BigInt acc = 1;
    for (unsigned p : parts_) acc *= p;
    std::map<unsigned, unsigned> mult;
    for (unsigned p : parts_) mult[p]++;
    for (const auto& [v, m] : mult) acc *= factorial(m);
    return acc;
  }

  // True when every prefix sum of *this dominates that of other (same size).
  bool dominates(const Partition& other) const {
    unsigned a = 0, b = 0;
    size_t k = std::max(parts_.size(), other.parts_.size());
    for (size_t i = 0; i < k; ++i) {
      a += part(i);
      b += other.part(i);
      if (a < b) return false;
    }
    return a == b;
  }

  Partition with_removed(unsigned value) const {
    std::vector<unsigned> p = parts_;
    auto it = std::find(p.begin(), p.end(), value);
    if (it == p.end()) throw std::invalid_argument("partition: part to remove is absent");
    p.erase(it);
    return Partition(std::move(p));
  }
  Partition with_added(unsigned value) const {
    std::vector<unsigned> p = parts_;
    if (value > 0) p.push_back(value);
    return Partition(std::move(p));
  }
  Partition with_ones(unsigned count) const {
    std::vector<unsigned> p = parts_;
    p.insert(p.end(), count, 1u);
    return Partition(std::move(p));
  }
  // Parts equal to 1 stripped; second component counts them.
  std::pair<Partition, unsigned> split_ones() const {
    std::vector<unsigned> p;
    unsigned ones = 0;
    for (unsigned v : parts_) {
      if (v == 1) ++ones;
      else p.push_back(v);
    }
    return {Partition(std::move(p)), ones};
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  void normalize() {
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }
  std::vector<unsigned> parts_;
};

// "5,2" (empty string = empty partition).
inline Partition parse_partition(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    long v = std::stol(tok);
    if (v < 0) throw std::invalid_argument("partition: negative part");
    if (v > 0) parts.push_back(static_cast<unsigned>(v));
  }
  return Partition(std::move(parts));
}

inline std::string format_partition(const Partition& p) {
  std::string out;
  for (unsigned v : p.parts()) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

// All partitions of n, in lexicographically decreasing part order.
inline std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

inline std::vector<Partition> partitions_up_to(unsigned n) {
  std::vector<Partition> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

}  // namespace jackmaps
