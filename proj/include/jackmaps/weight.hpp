#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jackmaps/map.hpp"
#include "jackmaps/polynomial.hpp"

namespace jackmaps {

// Weight picked up when removing `e` first: straight 1, twisted gamma,
// interface 1/2.
inline GammaPoly edge_weight(const Map& m, const Edge& e) {
  switch (m.classify_edge(e).kind) {
    case EdgeKind::Straight: return GammaPoly(Rational(1));
    case EdgeKind::Twisted: return GammaPoly::monomial(1);
    case EdgeKind::Interface: return GammaPoly(Rational(1, 2));
  }
  return GammaPoly();
}

// Product of the removal weights along one full removal order.
inline GammaPoly history_weight(const Map& m, const std::vector<Edge>& order) {
  if (order.size() != m.edge_count())
    throw std::invalid_argument("history_weight: order must cover every edge once");
  GammaPoly acc{Rational(1)};
  Map cur = m;
  for (const Edge& e : order) {
    acc *= edge_weight(cur, e);
    cur = cur.remove_edge(e);
  }
  return acc;
}

enum class MemoMode { Canonical, Labeled, Off };

inline MemoMode parse_memo_mode(const std::string& s) {
  if (s == "canonical") return MemoMode::Canonical;
  if (s == "labeled") return MemoMode::Labeled;
  if (s == "off") return MemoMode::Off;
  throw std::invalid_argument("memo mode must be canonical|labeled|off");
}

// Environment knob (megabytes). Once the cap is hit no further entries are
// inserted; existing entries are never evicted, so results stay identical.
inline size_t memo_cap_bytes() {
  static size_t cap = [] {
    const char* v = std::getenv("JACKMAPS_MEMO_CAP_MB");
    if (!v) return static_cast<size_t>(1ull << 32);  // 4 GiB default
    return static_cast<size_t>(std::strtoull(v, nullptr, 10)) << 20;
  }();
  return cap;
}

template <typename Value>
class MemoTable {
 public:
  explicit MemoTable(MemoMode mode) : mode_(mode), cap_(memo_cap_bytes()) {}

  MemoMode mode() const { return mode_; }
  size_t size() const { return table_.size(); }

  std::string key_for(const Map& m) const {
    return mode_ == MemoMode::Canonical ? canonical_key(m) : labeled_key(m);
  }
  const Value* find(const std::string& key) const {
    if (mode_ == MemoMode::Off) return nullptr;
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  void insert(const std::string& key, const Value& v) {
    if (mode_ == MemoMode::Off || bytes_ >= cap_) return;
    if (table_.emplace(key, v).second) bytes_ += key.size() + sizeof(Value) + 64;
  }

 private:
  MemoMode mode_;
  size_t cap_;
  size_t bytes_ = 0;
  std::unordered_map<std::string, Value> table_;
};

using WeightMemo = MemoTable<GammaPoly>;

// Measure of non-orientability as a polynomial in gamma, through the
// first-edge recursion: omega(M) = (1/n) sum_e weight(M, e) omega(M \ e).
inline GammaPoly mean_weight(const Map& m, WeightMemo& memo) {
  if (m.empty()) return GammaPoly(Rational(1));
  std::string key = memo.key_for(m);
  if (const GammaPoly* hit = memo.find(key)) return *hit;
  GammaPoly acc;
  for (const Edge& e : m.edges()) acc += edge_weight(m, e) * mean_weight(m.remove_edge(e), memo);
  acc = acc * Rational(1, m.edge_count());
  memo.insert(key, acc);
  return acc;
}

inline GammaPoly mean_weight(const Map& m, MemoMode mode = MemoMode::Canonical) {
  WeightMemo memo(mode);
  return mean_weight(m, memo);
}

// Same average, evaluated at a fixed rational value of gamma. Branches whose
// first-edge weight vanishes (twisted edges at gamma = 0) are pruned.
inline Rational mean_weight_at(const Map& m, const Rational& gamma_value,
                               MemoTable<Rational>& memo) {
  if (m.empty()) return Rational(1);
  std::string key = memo.key_for(m);
  if (const Rational* hit = memo.find(key)) return *hit;
  Rational acc(0);
  for (const Edge& e : m.edges()) {
    Rational w;
    switch (m.classify_edge(e).kind) {
      case EdgeKind::Straight: w = 1; break;
      case EdgeKind::Twisted: w = gamma_value; break;
      case EdgeKind::Interface: w = Rational(1, 2); break;
    }
    if (w == 0) continue;
    acc += w * mean_weight_at(m.remove_edge(e), gamma_value, memo);
  }
  acc /= m.edge_count();
  memo.insert(key, acc);
  return acc;
}

// Same pruned average in Q(sqrt(alpha)), for gamma = (1-alpha)/sqrt(alpha).
inline QuadExt mean_weight_at(const Map& m, const QuadExt& gamma, MemoTable<QuadExt>& memo) {
  const QuadExt one = QuadExt::from_rational(gamma.alpha, Rational(1));
  if (m.empty()) return one;
  std::string key = memo.key_for(m);
  if (const QuadExt* hit = memo.find(key)) return *hit;
  QuadExt acc = QuadExt::from_rational(gamma.alpha, Rational(0));
  for (const Edge& e : m.edges()) {
    QuadExt w = one;
    switch (m.classify_edge(e).kind) {
      case EdgeKind::Straight: break;
      case EdgeKind::Twisted: w = gamma; break;
      case EdgeKind::Interface: w = QuadExt::from_rational(gamma.alpha, Rational(1, 2)); break;
    }
    if (w.is_zero()) continue;
    acc += w * mean_weight_at(m.remove_edge(e), gamma, memo);
  }
  acc = acc * Rational(1, m.edge_count());
  memo.insert(key, acc);
  return acc;
}

// Brute-force reference: average history weight over all n! removal orders.
inline GammaPoly mean_weight_naive(const Map& m) {
  std::vector<Edge> order = m.edges();
  std::sort(order.begin(), order.end());
  GammaPoly acc;
  uint64_t count = 0;
  do {
    acc += history_weight(m, order);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc * Rational(BigInt(1), BigInt(count));
}

struct AlternativeWeight {
  GammaPoly weight;
  std::vector<Edge> order;   // removal order actually used
  std::vector<Label> trace;  // labels visited while reading the orbits
};

// One-history weight along the deterministic order: take the smallest live
// label s0, remove its edge, then walk s0, (E o W)(s0), (E o W)^2(s0), ... in
// the ORIGINAL map, removing each still-present edge at first encounter and
// skipping the rest, until the walk returns to s0; then restart from the
// smallest label still alive.
inline AlternativeWeight lacroix_weight(const Map& m) {
  AlternativeWeight out;
  const Pairing& e0 = m.edge_pairing();
  const Pairing& w0 = m.white();
  std::array<char, kMaxLabels> alive{};
  for (Label s : e0.support()) alive[s] = 1;
  auto edge_of = [&](Label x) {
    Label y = e0.partner(x);
    return Edge{std::min(x, y), std::max(x, y)};
  };
  auto kill = [&](const Edge& e) {
    alive[e.first] = alive[e.second] = 0;
    out.order.push_back(e);
  };
  for (Label s0 = 0; s0 < kMaxLabels; ++s0) {
    if (!alive[s0]) continue;
    out.trace.push_back(s0);
    kill(edge_of(s0));
    for (Label x = e0.partner(w0.partner(s0)); x != s0; x = e0.partner(w0.partner(x))) {
      out.trace.push_back(x);
      if (alive[x]) kill(edge_of(x));
    }
  }
  out.weight = history_weight(m, out.order);
  return out;
}

// Degree bound (<= d(M)) and exponent parity (== euler characteristic mod 2)
// of a weight polynomial.
inline bool weight_shape_ok(const Map& m, const GammaPoly& w) {
  if (w.degree() > m.nonorientability_defect()) return false;
  auto [ev, od] = gamma_poly_parities(w);
  bool chi_even = m.euler_characteristic() % 2 == 0;
  return chi_even ? !od : !ev;
}

}  // namespace jackmaps
