#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "jackmaps/embedding.hpp"
#include "jackmaps/jack.hpp"
#include "jackmaps/map.hpp"
#include "jackmaps/multivar_poly.hpp"
#include "jackmaps/partition.hpp"
#include "jackmaps/polynomial.hpp"
#include "jackmaps/quad_ext.hpp"
#include "jackmaps/rational.hpp"
#include "jackmaps/weight.hpp"

namespace jackmaps {

// ---------------------------------------------------------------------------
// The map-side series
//   Chhat_pi(lambda) = (-1)^{l(pi)} sum_M (-1/sqrt(a))^{blacks} sqrt(a)^{whites}
//                      omega(M) N_M(lambda)
// summed over all edge pairings E on the fixed base polygons of face type pi.
// ---------------------------------------------------------------------------

enum class WeightKind { Mean, Lacroix };

inline const char* weight_kind_name(WeightKind k) {
  return k == WeightKind::Mean ? "mean" : "lacroix";
}

struct SeriesOptions {
  MemoMode memo = MemoMode::Canonical;
  unsigned jobs = 1;
  bool extended = false;
  WeightKind kind = WeightKind::Mean;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr unsigned kSeriesDefaultLimit = 7;
constexpr unsigned kSeriesExtendedLimit = 9;
// Sizes up to this limit keep one aggregate per isomorphism class in memory;
// larger sizes stream over the pairings instead.
constexpr unsigned kSeriesAggregateLimit = 7;

inline void series_resource_guard(const Partition& pi, const SeriesOptions& opts) {
  unsigned n = pi.size();
  unsigned cap = opts.extended ? kSeriesExtendedLimit : kSeriesDefaultLimit;
  if (n <= cap) return;
  std::string maps = double_factorial_odd(n).str();
  if (opts.extended)
    throw ResourceError("face type of size " + std::to_string(n) + " would enumerate " + maps +
                        " edge pairings, beyond the supported maximum of " +
                        std::to_string(kSeriesExtendedLimit));
  throw ResourceError("face type of size " + std::to_string(n) + " would enumerate " + maps +
                      " edge pairings; enable extended mode for sizes up to " +
                      std::to_string(kSeriesExtendedLimit));
}

namespace detail {

// Runs fn(shard) on `jobs` workers and rethrows the first failure.
inline void run_sharded(unsigned jobs, const std::function<void(unsigned)>& fn) {
  if (jobs <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned s = 0; s < jobs; ++s)
    threads.emplace_back([&fn, &errors, s] {
      try {
        fn(s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

// One isomorphism class of maps over the base polygons: the labelled count,
// vertex statistics, the summed weight polynomial, and a representative's
// incidence graph (embedding counts only depend on the graph).
struct MapClass {
  std::string key;
  uint64_t count = 0;
  unsigned v_black = 0;
  unsigned v_white = 0;
  unsigned components = 0;
  int euler = 0;
  GammaPoly weight_sum;
  BipartiteGraph graph;
};

struct SeriesAggregate {
  Partition pi;
  WeightKind kind = WeightKind::Mean;
  uint64_t map_count = 0;
  std::vector<MapClass> classes;  // sorted by key
};

inline SeriesAggregate aggregate_maps(const Partition& pi, const SeriesOptions& opts = {}) {
  series_resource_guard(pi, opts);
  if (pi.size() > kSeriesAggregateLimit)
    throw ResourceError("per-class aggregation is limited to face types of size " +
                        std::to_string(kSeriesAggregateLimit));
  auto base = canonical_base_pairings(pi);
  const Pairing& black = base.first;
  const Pairing& white = base.second;
  unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::map<std::string, MapClass>> buckets(jobs);
  std::vector<uint64_t> totals(jobs, 0);
  detail::run_sharded(jobs, [&](unsigned shard) {
    WeightMemo memo(opts.memo);
    auto& bucket = buckets[shard];
    totals[shard] =
        enumerate_pairings_sharded(black.support_mask(), shard, jobs, [&](const Pairing& e) {
          Map m(black, white, e);
          std::string key = canonical_key(m);
          MapClass& cls = bucket[key];
          if (cls.count == 0) {
            cls.key = key;
            cls.v_black = m.black_vertex_count();
            cls.v_white = m.white_vertex_count();
            cls.components = m.component_count();
            cls.euler = m.euler_characteristic();
            cls.graph = graph_of(m);
          }
          cls.count += 1;
          cls.weight_sum +=
              opts.kind == WeightKind::Mean ? mean_weight(m, memo) : lacroix_weight(m).weight;
        });
  });
  SeriesAggregate agg;
  agg.pi = pi;
  agg.kind = opts.kind;
  std::map<std::string, MapClass> merged = std::move(buckets[0]);
  for (unsigned s = 1; s < jobs; ++s) {
    for (auto& [key, cls] : buckets[s]) {
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, std::move(cls));
      } else {
        it->second.count += cls.count;
        it->second.weight_sum += cls.weight_sum;
      }
    }
  }
  for (uint64_t t : totals) agg.map_count += t;
  agg.classes.reserve(merged.size());
  for (auto& [key, cls] : merged) agg.classes.push_back(std::move(cls));
  return agg;
}

// Aggregates are reused across diagrams and alpha values; the cache key is the
// face type plus the weight kind (memo mode and job count do not change the
// result).
inline const SeriesAggregate& cached_aggregate(const Partition& pi, const SeriesOptions& opts = {}) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<SeriesAggregate>> cache;
  std::string key = format_partition(pi) + "#" + weight_kind_name(opts.kind);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto agg = std::make_unique<SeriesAggregate>(aggregate_maps(pi, opts));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(agg));
  return *it->second;
}

inline std::vector<BigInt> embedding_counts(const SeriesAggregate& agg, const YoungDiagram& lambda) {
  MultirectCoords mc = diagram_multirect(lambda);
  std::vector<BigInt> out;
  out.reserve(agg.classes.size());
  for (const auto& cls : agg.classes) out.push_back(count_embeddings_multirect(cls.graph, mc));
  return out;
}

inline QuadExt series_value(const SeriesAggregate& agg, const std::vector<BigInt>& counts,
                            const Rational& alpha) {
  QuadExt acc = QuadExt::from_rational(alpha, Rational(0));
  for (size_t i = 0; i < agg.classes.size(); ++i) {
    const MapClass& cls = agg.classes[i];
    if (counts[i] == 0) continue;
    QuadExt w = gamma_poly_eval(cls.weight_sum, alpha);
    if (w.is_zero()) continue;
    long diff = static_cast<long>(cls.v_white) - static_cast<long>(cls.v_black);
    QuadExt term = sqrt_alpha_pow(alpha, diff) * w * Rational(counts[i]);
    if (cls.v_black % 2)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return agg.pi.length() % 2 ? -acc : acc;
}

inline QuadExt series_value(const SeriesAggregate& agg, const YoungDiagram& lambda,
                            const Rational& alpha) {
  return series_value(agg, embedding_counts(agg, lambda), alpha);
}

namespace detail {

// Streaming evaluation for large face types: per map, the weight is evaluated
// at gamma = (1-a)/sqrt(a) directly (pruning branches whose first edge weight
// vanishes) and embedding counts are memoized per canonical class.
inline QuadExt genseries_streaming(const Partition& pi, const YoungDiagram& lambda,
                                   const Rational& alpha, const SeriesOptions& opts,
                                   uint64_t* maps_seen) {
  auto base = canonical_base_pairings(pi);
  const Pairing& black = base.first;
  const Pairing& white = base.second;
  MultirectCoords mc = diagram_multirect(lambda);
  QuadExt gamma = gamma_value(alpha);
  unsigned jobs = std::max(1u, opts.jobs);
  std::vector<QuadExt> partial(jobs, QuadExt::from_rational(alpha, Rational(0)));
  std::vector<uint64_t> totals(jobs, 0);
  MemoMode mode = opts.memo == MemoMode::Off ? MemoMode::Off : MemoMode::Canonical;
  run_sharded(jobs, [&](unsigned shard) {
    MemoTable<QuadExt> wmemo(mode);
    MemoTable<BigInt> nmemo(mode);
    QuadExt acc = QuadExt::from_rational(alpha, Rational(0));
    totals[shard] =
        enumerate_pairings_sharded(black.support_mask(), shard, jobs, [&](const Pairing& e) {
          Map m(black, white, e);
          QuadExt w = opts.kind == WeightKind::Mean
                          ? mean_weight_at(m, gamma, wmemo)
                          : gamma_poly_eval(lacroix_weight(m).weight, alpha);
          if (w.is_zero()) return;
          std::string key = nmemo.key_for(m);
          BigInt n;
          if (const BigInt* hit = nmemo.find(key)) {
            n = *hit;
          } else {
            n = count_embeddings_multirect(graph_of(m), mc);
            nmemo.insert(key, n);
          }
          if (n == 0) return;
          long diff = static_cast<long>(m.white_vertex_count()) -
                      static_cast<long>(m.black_vertex_count());
          QuadExt term = sqrt_alpha_pow(alpha, diff) * w * Rational(n);
          if (m.black_vertex_count() % 2)
            acc = acc - term;
          else
            acc = acc + term;
        });
    partial[shard] = acc;
  });
  QuadExt total = QuadExt::from_rational(alpha, Rational(0));
  for (const QuadExt& p : partial) total = total + p;
  if (maps_seen) {
    *maps_seen = 0;
    for (uint64_t t : totals) *maps_seen += t;
  }
  return pi.length() % 2 ? -total : total;
}

}  // namespace detail

inline QuadExt genseries_numeric(const Partition& pi, const YoungDiagram& lambda,
                                 const Rational& alpha, const SeriesOptions& opts = {},
                                 uint64_t* maps_seen = nullptr) {
  series_resource_guard(pi, opts);
  if (pi.size() <= kSeriesAggregateLimit) {
    const SeriesAggregate& agg = cached_aggregate(pi, opts);
    if (maps_seen) *maps_seen = agg.map_count;
    return series_value(agg, embedding_counts(agg, lambda), alpha);
  }
  return detail::genseries_streaming(pi, lambda, alpha, opts, maps_seen);
}

// ---------------------------------------------------------------------------
// Symbolic form over u_1..u_l, v_1..v_l, gamma. Under
//   u_i = p_i / sqrt(a), v_i = -sqrt(a) q_i, gamma = (1-a)/sqrt(a)
// the polynomial times (-1)^{|pi|} equals Chhat_pi at the block diagram
// P x Q; all sqrt(a) powers cancel, leaving rational coefficients.
// ---------------------------------------------------------------------------

inline std::vector<std::string> series_vars(unsigned ell) {
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= ell; ++i) vars.push_back("u" + std::to_string(i));
  for (unsigned i = 1; i <= ell; ++i) vars.push_back("v" + std::to_string(i));
  vars.push_back("gamma");
  return vars;
}

struct SeriesSymbolic {
  Partition pi;
  unsigned ell = 0;
  WeightKind kind = WeightKind::Mean;
  MultivarPoly poly{std::vector<std::string>{}};
};

inline SeriesSymbolic genseries_symbolic(const Partition& pi, unsigned ell,
                                         const SeriesOptions& opts = {}) {
  if (ell == 0) throw std::invalid_argument("symbolic series: need at least one block");
  const SeriesAggregate& agg = cached_aggregate(pi, opts);
  SeriesSymbolic out;
  out.pi = pi;
  out.ell = ell;
  out.kind = opts.kind;
  out.poly = MultivarPoly(series_vars(ell));
  for (const MapClass& cls : agg.classes) {
    if (cls.weight_sum.degree() < 0) continue;
    MultivarPoly shape = symbolic_multirect(cls.graph, ell);
    bool flip = (pi.size() + pi.length() + cls.v_black + cls.v_white) % 2 != 0;
    for (const auto& [mono, coeff] : shape.terms()) {
      for (unsigned k = 0; k <= static_cast<unsigned>(cls.weight_sum.degree()); ++k) {
        Rational c = cls.weight_sum.coeff(k) * coeff;
        if (c == 0) continue;
        Monomial m(2 * ell + 1, 0);
        std::copy(mono.begin(), mono.end(), m.begin());
        m[2 * ell] = k;
        out.poly.add_term(m, flip ? -c : c);
      }
    }
  }
  return out;
}

// Substitution check: evaluates the symbolic form back to the numeric series.
inline QuadExt symbolic_value(const SeriesSymbolic& sym, const std::vector<unsigned>& p,
                              const std::vector<unsigned>& q, const Rational& alpha) {
  if (p.size() != sym.ell || q.size() != sym.ell)
    throw std::invalid_argument("symbolic value: block lists must have length " +
                                std::to_string(sym.ell));
  QuadExt s = QuadExt::sqrt_alpha(alpha);
  QuadExt inv_s = quad_inv(s);
  std::vector<QuadExt> vals;
  vals.reserve(2 * sym.ell + 1);
  for (unsigned i = 0; i < sym.ell; ++i) vals.push_back(inv_s * Rational(p[i]));
  for (unsigned i = 0; i < sym.ell; ++i) vals.push_back(-(s * Rational(q[i])));
  vals.push_back(gamma_value(alpha));
  QuadExt v = multivar_substitute(sym.poly, vals);
  return sym.pi.size() % 2 ? -v : v;
}

// Specializes alpha, producing the same split polynomial form as the oracle's
// block-diagram interpolation: value = rat_part + sqrt(a) sqrt_part in p, q.
inline MultirectPoly substitute_symbolic(const SeriesSymbolic& sym, const Rational& alpha) {
  MultirectPoly mp;
  mp.ell = sym.ell;
  mp.alpha = alpha;
  auto vars = multirect_vars(sym.ell);
  mp.rat_part = MultivarPoly(vars);
  mp.sqrt_part = MultivarPoly(vars);
  QuadExt gamma = gamma_value(alpha);
  unsigned pi_parity = sym.pi.size() % 2;
  for (const auto& [mono, coeff] : sym.poly.terms()) {
    long sum_a = 0, sum_b = 0;
    for (unsigned i = 0; i < sym.ell; ++i) {
      sum_a += mono[i];
      sum_b += mono[sym.ell + i];
    }
    QuadExt z = sqrt_alpha_pow(alpha, sum_b - sum_a) *
                quad_pow(gamma, static_cast<long>(mono[2 * sym.ell])) * coeff;
    if ((pi_parity + sum_b) % 2) z = -z;
    Monomial pq(mono.begin(), mono.end() - 1);
    if (z.rat != 0) mp.rat_part.add_term(pq, z.rat);
    if (z.irr != 0) mp.sqrt_part.add_term(pq, z.irr);
  }
  return mp;
}

// Every coefficient is nonnegative once the sign of the odd gamma degrees is
// flipped (the natural variable on the twisted side is -gamma).
inline bool series_positivity_ok(const SeriesSymbolic& sym) {
  unsigned gidx = 2 * sym.ell;
  for (const auto& [mono, coeff] : sym.poly.terms()) {
    Rational c = mono[gidx] % 2 ? -coeff : coeff;
    if (c < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed product forms at alpha = 2 and alpha = 1/2: the weight collapses and
// the series becomes a pure class count,
//   a = 2:   (-1)^{l(pi)} sum_M (-1/rt2)^{blacks} rt2^{whites} (-1/rt2)^{D} N_M
//   a = 1/2: (-1)^{l(pi)} sum_M (-rt2)^{blacks} (1/rt2)^{whites} (1/rt2)^{D} N_M
// with D = |pi| + l(pi) - vertices >= 0.
// ---------------------------------------------------------------------------

enum class SpecialAlpha { Two, Half };

inline QuadExt special_alpha_closed_form(const Partition& pi, const YoungDiagram& lambda,
                                         SpecialAlpha which, const SeriesOptions& opts = {}) {
  const SeriesAggregate& agg = cached_aggregate(pi, opts);
  Rational alpha = which == SpecialAlpha::Two ? Rational(2) : Rational(1, 2);
  QuadExt s = QuadExt::sqrt_alpha(alpha);
  QuadExt rt2 = which == SpecialAlpha::Two ? s : s * Rational(2);
  QuadExt inv_rt2 = quad_inv(rt2);
  QuadExt base_b = which == SpecialAlpha::Two ? -inv_rt2 : -rt2;
  QuadExt base_w = which == SpecialAlpha::Two ? rt2 : inv_rt2;
  QuadExt tail = which == SpecialAlpha::Two ? -inv_rt2 : inv_rt2;
  MultirectCoords mc = diagram_multirect(lambda);
  unsigned budget = pi.size() + pi.length();
  QuadExt acc = QuadExt::from_rational(alpha, Rational(0));
  for (const MapClass& cls : agg.classes) {
    BigInt n = count_embeddings_multirect(cls.graph, mc);
    if (n == 0) continue;
    unsigned v = cls.v_black + cls.v_white;
    QuadExt term = quad_pow(base_b, cls.v_black) * quad_pow(base_w, cls.v_white) *
                   quad_pow(tail, budget - v) * Rational(BigInt(cls.count) * n);
    acc = acc + term;
  }
  return pi.length() % 2 ? -acc : acc;
}

// Parts equal to 1 peel off as a falling factorial:
//   Chhat_{pi + 1^k}(lambda) = (|lambda|-|pi|)(|lambda|-|pi|-1)...(|lambda|-|pi|-k+1)
//                              Chhat_pi(lambda).
inline bool verify_ones_reduction(const Partition& pi, unsigned ones, const YoungDiagram& lambda,
                                  const Rational& alpha, const SeriesOptions& opts = {}) {
  QuadExt lhs = genseries_numeric(pi.with_ones(ones), lambda, alpha, opts);
  Rational factor =
      falling_power(Rational(lambda.size()) - Rational(pi.size()), ones);
  QuadExt rhs = genseries_numeric(pi, lambda, alpha, opts) * factor;
  return lhs == rhs;
}

// The series satisfies the same rectangular recurrence as the oracle.
inline QuadExt series_recurrence_residual(const Partition& pi, unsigned p, unsigned q,
                                          const Rational& alpha, const SeriesOptions& opts = {}) {
  YoungDiagram lambda(std::vector<unsigned>(p, q));
  auto ch = [&](const Partition& pp) { return genseries_numeric(pp, lambda, alpha, opts); };
  return lassalle_recurrence_residual(pi, p, q, alpha, ch);
}

// ---------------------------------------------------------------------------
// The discrepancy witness at pi = (9): over three blocks of height one,
//   Chhat_(9) - Ch_(9) = 41/70 (2 gamma^2 - 1) (q3 - q2)(q1 - q2) q3.
// ---------------------------------------------------------------------------

struct CounterexampleResult {
  std::vector<unsigned> q;
  Rational alpha;
  QuadExt series;
  QuadExt oracle;
  QuadExt difference;
  QuadExt predicted;
  bool match = false;
  uint64_t maps_seen = 0;
};

inline CounterexampleResult counterexample_report(const std::vector<unsigned>& q,
                                                  const Rational& alpha,
                                                  const SeriesOptions& opts = {}) {
  if (q.size() != 3 || q[0] < q[1] || q[1] < q[2])
    throw std::invalid_argument("counterexample: need three weakly decreasing block widths");
  SeriesOptions o = opts;
  o.extended = true;
  Partition pi({9});
  MultirectCoords mc;
  mc.p = {1, 1, 1};
  mc.q = q;
  YoungDiagram lambda = multirect_diagram(mc);
  CounterexampleResult res;
  res.q = q;
  res.alpha = alpha;
  res.series = genseries_numeric(pi, lambda, alpha, o, &res.maps_seen);
  res.oracle = jack_character_value(pi, lambda, alpha);
  res.difference = res.series - res.oracle;
  QuadExt gamma = gamma_value(alpha);
  QuadExt one = QuadExt::from_rational(alpha, Rational(1));
  QuadExt bend = quad_pow(gamma, 2) * Rational(2) - one;
  Rational shape = (Rational(q[2]) - Rational(q[1])) * (Rational(q[0]) - Rational(q[1])) *
                   Rational(q[2]);
  res.predicted = bend * (Rational(41, 70) * shape);
  res.match = res.difference == res.predicted;
  return res;
}

}  // namespace jackmaps
