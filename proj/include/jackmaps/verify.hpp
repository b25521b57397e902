#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jackmaps/genseries.hpp"
#include "jackmaps/json_io.hpp"

namespace jackmaps {

// ---------------------------------------------------------------------------
// Verification reports. Serialized output is byte-identical across runs and
// across worker counts; anything nondeterministic (timing) stays out.
// ---------------------------------------------------------------------------

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string left;
  std::string right;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CaseResult> cases;

  unsigned failures() const {
    unsigned n = 0;
    for (const auto& c : cases)
      if (!c.pass) ++n;
    return n;
  }
  bool pass() const { return failures() == 0; }
};

inline void report_case(VerificationReport& r, std::string name, bool pass, std::string left,
                        std::string right) {
  r.cases.push_back({std::move(name), pass, std::move(left), std::move(right)});
}

inline std::string report_text(const VerificationReport& r) {
  std::string out = "suite " + r.suite + "\n";
  for (const auto& [k, v] : r.config) out += "config " + k + "=" + v + "\n";
  for (const auto& c : r.cases)
    out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name + ": " + c.left +
           (c.pass ? " == " : " != ") + c.right + "\n";
  out += "result " + std::string(r.pass() ? "PASS" : "FAIL") + " " +
         std::to_string(r.cases.size() - r.failures()) + "/" + std::to_string(r.cases.size()) +
         "\n";
  return out;
}

inline Json report_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  Json cfg = Json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  j["cases"] = Json::array();
  for (const auto& c : r.cases)
    j["cases"].push_back(
        Json{{"name", c.name}, {"pass", c.pass}, {"left", c.left}, {"right", c.right}});
  j["failures"] = r.failures();
  j["pass"] = r.pass();
  return j;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string report_csv(const VerificationReport& r) {
  std::string out = "suite,case,status,left,right\n";
  for (const auto& c : r.cases)
    out += csv_quote(r.suite) + "," + csv_quote(c.name) + "," + (c.pass ? "pass" : "fail") + "," +
           csv_quote(c.left) + "," + csv_quote(c.right) + "\n";
  return out;
}

namespace detail {

inline std::string pname(const Partition& p) { return "(" + format_partition(p) + ")"; }

inline std::string counts_to_string(const std::vector<std::pair<std::string, unsigned>>& cs) {
  std::string out;
  for (const auto& [what, n] : cs) {
    if (!out.empty()) out += ", ";
    out += what + "=" + std::to_string(n);
  }
  return out;
}

// Face multiset bookkeeping for the removal lemmas.
inline std::map<unsigned, int> face_counts(const Map& m) {
  std::map<unsigned, int> out;
  for (unsigned v : m.face_type().parts()) out[v] += 1;
  return out;
}

inline bool face_arithmetic_ok(const Map& m, const Edge& e) {
  EdgeClass cls = m.classify_edge(e);
  unsigned r1 = static_cast<unsigned>(
      m.faces().polygons()[m.faces().polygon_index(e.first)].size() / 2);
  unsigned r2 = static_cast<unsigned>(
      m.faces().polygons()[m.faces().polygon_index(e.second)].size() / 2);
  std::map<unsigned, int> before = face_counts(m);
  std::map<unsigned, int> after = face_counts(m.remove_edge(e));
  auto take = [](std::map<unsigned, int>& cs, unsigned v) {
    auto it = cs.find(v);
    if (it == cs.end() || it->second == 0) return false;
    if (--it->second == 0) cs.erase(it);
    return true;
  };
  auto put = [](std::map<unsigned, int>& cs, unsigned v) {
    if (v > 0) cs[v] += 1;
  };
  switch (cls.kind) {
    case EdgeKind::Straight: {
      // one face of half-size r1 splits into parts summing to r1 - 1
      if (!take(before, r1)) return false;
      // leftovers of `after` once the untouched faces are cancelled
      for (const auto& [v, n] : before) {
        auto it = after.find(v);
        if (it == after.end() || it->second < n) return false;
        it->second -= n;
        if (it->second == 0) after.erase(it);
      }
      unsigned total = 0, parts = 0;
      for (const auto& [v, n] : after) {
        total += v * static_cast<unsigned>(n);
        parts += static_cast<unsigned>(n);
      }
      return total == r1 - 1 && parts <= 2;
    }
    case EdgeKind::Twisted: {
      if (r1 != r2) return false;
      if (!take(before, r1)) return false;
      put(before, r1 - 1);
      return before == after;
    }
    case EdgeKind::Interface: {
      if (!take(before, r1) || !take(before, r2)) return false;
      put(before, r1 + r2 - 1);
      return before == after;
    }
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criterion 1: the worked one-face example on three edges.
// ---------------------------------------------------------------------------
inline VerificationReport verify_klein_example(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "klein-example";
  Map m = parse_map("B:1-2,3-4,5-6|W:2-3,4-5,6-1|E:1-4,2-6,3-5");

  GammaPoly omega = mean_weight(m);
  GammaPoly expect = GammaPoly(Rational(1, 6)) + GammaPoly::monomial(2, Rational(2, 3));
  report_case(r, "mean weight", omega == expect, omega.format("g"), expect.format("g"));

  GammaPoly h_half(Rational(1, 2));
  GammaPoly h_gg = GammaPoly::monomial(2);
  unsigned half = 0, gg = 0, other = 0;
  std::vector<Edge> order = m.edges();
  std::sort(order.begin(), order.end());
  do {
    GammaPoly h = history_weight(m, order);
    if (h == h_half)
      ++half;
    else if (h == h_gg)
      ++gg;
    else
      ++other;
  } while (std::next_permutation(order.begin(), order.end()));
  std::string left = detail::counts_to_string({{"1/2", half}, {"g^2", gg}, {"other", other}});
  report_case(r, "history multiset", half == 2 && gg == 4 && other == 0, left,
              "1/2=2, g^2=4, other=0");

  GammaPoly naive = mean_weight_naive(m);
  report_case(r, "naive average", naive == omega, naive.format("g"), omega.format("g"));
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: golden edge classification on the two-face example.
// ---------------------------------------------------------------------------
inline VerificationReport verify_classification_golden(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "classification-golden";
  Map m = parse_map(
      "B:1-2,3-4,5-6,7-8,9-10,11-12,13-14|W:2-3,4-5,6-7,8-9,10-1,12-13,14-11|"
      "E:1-3,2-10,4-9,5-14,6-13,7-12,8-11");
  report_case(r, "face type", m.face_type() == Partition({5, 2}),
              format_partition(m.face_type()), "5,2");
  auto kind_name = [](EdgeKind k) {
    switch (k) {
      case EdgeKind::Straight: return "straight";
      case EdgeKind::Twisted: return "twisted";
      case EdgeKind::Interface: return "interface";
    }
    return "?";
  };
  auto check = [&](int a, int b, EdgeKind want, const char* label) {
    Edge e{a - 1, b - 1};
    EdgeKind got = m.classify_edge(e).kind;
    report_case(r, std::string("edge ") + label, got == want, kind_name(got), kind_name(want));
  };
  check(4, 9, EdgeKind::Straight, "{4,9}");
  check(1, 3, EdgeKind::Twisted, "{1,3}");
  check(6, 13, EdgeKind::Interface, "{6,13}");
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: removal lemmas, exhaustive over all maps of face-type size <= 5.
// ---------------------------------------------------------------------------
inline VerificationReport verify_lemmas_small(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "lemmas-small";
  r.config.emplace_back("max-size", "5");
  for (unsigned n = 1; n <= 5; ++n) {
    unsigned leaf_bad = 0, bridge_bad = 0, face_bad = 0, commute_bad = 0, shape_bad = 0;
    uint64_t maps = 0;
    for (const Partition& pi : partitions_of(n)) {
      auto base = canonical_base_pairings(pi);
      WeightMemo memo(MemoMode::Canonical);
      enumerate_maps(base.first, base.second, [&](const Map& m) {
        ++maps;
        std::vector<Edge> edges = m.edges();
        for (const Edge& e : edges) {
          EdgeClass cls = m.classify_edge(e);
          if ((cls.black_leaf || cls.white_leaf) && cls.kind != EdgeKind::Straight) ++leaf_bad;
          if (m.is_bridge(e) && cls.kind != EdgeKind::Straight) ++bridge_bad;
          if (!detail::face_arithmetic_ok(m, e)) ++face_bad;
        }
        for (size_t i = 0; i < edges.size(); ++i)
          for (size_t j = i + 1; j < edges.size(); ++j) {
            Map ab = m.remove_edge(edges[i]).remove_edge(edges[j]);
            Map ba = m.remove_edge(edges[j]).remove_edge(edges[i]);
            if (!(ab == ba)) ++commute_bad;
          }
        if (!weight_shape_ok(m, mean_weight(m, memo))) ++shape_bad;
      });
    }
    std::string tag = " n=" + std::to_string(n) + " maps=" + std::to_string(maps);
    report_case(r, "leaf=>straight" + tag, leaf_bad == 0, std::to_string(leaf_bad), "0");
    report_case(r, "bridge=>straight" + tag, bridge_bad == 0, std::to_string(bridge_bad), "0");
    report_case(r, "face arithmetic" + tag, face_bad == 0, std::to_string(face_bad), "0");
    report_case(r, "removal commutes" + tag, commute_bad == 0, std::to_string(commute_bad), "0");
    report_case(r, "degree bound and parity" + tag, shape_bad == 0, std::to_string(shape_bad),
                "0");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: first-edge recursion equals the average over all histories.
// ---------------------------------------------------------------------------
inline VerificationReport verify_recursion_vs_naive(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "recursion-vs-naive";
  r.config.emplace_back("max-size", "5");
  for (unsigned n = 1; n <= 5; ++n) {
    unsigned bad = 0;
    uint64_t maps = 0;
    for (const Partition& pi : partitions_of(n)) {
      auto base = canonical_base_pairings(pi);
      WeightMemo memo(MemoMode::Canonical);
      enumerate_maps(base.first, base.second, [&](const Map& m) {
        ++maps;
        if (!(mean_weight(m, memo) == mean_weight_naive(m))) ++bad;
      });
    }
    report_case(r, "n=" + std::to_string(n) + " maps=" + std::to_string(maps), bad == 0,
                std::to_string(bad) + " mismatches", "0 mismatches");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: every history weight is congruent to g^{l(pi)+|pi|-|V|} modulo
// 2 g^2 - 1, and the series collapses to closed product forms at alpha = 2
// and alpha = 1/2.
// ---------------------------------------------------------------------------
inline VerificationReport verify_special_alpha(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "special-alpha";
  for (unsigned n = 1; n <= 5; ++n) {
    unsigned bad = 0;
    uint64_t maps = 0;
    for (const Partition& pi : partitions_of(n)) {
      auto base = canonical_base_pairings(pi);
      enumerate_maps(base.first, base.second, [&](const Map& m) {
        ++maps;
        unsigned v = m.vertex_count();
        if (pi.length() + n < v) {
          ++bad;
          return;
        }
        auto expect = gamma_poly_mod_half(GammaPoly::monomial(pi.length() + n - v));
        std::vector<Edge> order = m.edges();
        std::sort(order.begin(), order.end());
        do {
          if (gamma_poly_mod_half(history_weight(m, order)) != expect) {
            ++bad;
            break;
          }
        } while (std::next_permutation(order.begin(), order.end()));
      });
    }
    report_case(r, "history congruence n=" + std::to_string(n) + " maps=" + std::to_string(maps),
                bad == 0, std::to_string(bad) + " violations", "0 violations");
  }
  for (const Partition& pi : partitions_up_to(5)) {
    std::string bad;
    unsigned checked = 0;
    for (const Partition& lambda : partitions_up_to(6)) {
      QuadExt two_series = genseries_numeric(pi, lambda, Rational(2), opts);
      QuadExt two_closed = special_alpha_closed_form(pi, lambda, SpecialAlpha::Two, opts);
      QuadExt half_series = genseries_numeric(pi, lambda, Rational(1, 2), opts);
      QuadExt half_closed = special_alpha_closed_form(pi, lambda, SpecialAlpha::Half, opts);
      checked += 2;
      if (bad.empty() && !(two_series == two_closed))
        bad = "a=2 lambda=" + detail::pname(lambda) + ": " + format_quad_ext(two_series) +
              " vs " + format_quad_ext(two_closed);
      if (bad.empty() && !(half_series == half_closed))
        bad = "a=1/2 lambda=" + detail::pname(lambda) + ": " + format_quad_ext(half_series) +
              " vs " + format_quad_ext(half_closed);
    }
    std::string ok = std::to_string(checked) + " values match";
    report_case(r, "closed form pi=" + detail::pname(pi), bad.empty(), bad.empty() ? ok : bad, ok);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: the series equals the character for |pi| <= 6, |lambda| <= 7.
// ---------------------------------------------------------------------------
inline VerificationReport verify_series_vs_oracle(const SeriesOptions& opts = {},
                                                  WeightKind kind = WeightKind::Mean) {
  VerificationReport r;
  r.suite = kind == WeightKind::Mean ? "series-vs-oracle" : "alt-weight";
  r.config.emplace_back("weight", weight_kind_name(kind));
  r.config.emplace_back("alphas", "1/2,1,2,3,5/3");
  std::vector<Rational> alphas = {Rational(1, 2), Rational(1), Rational(2), Rational(3),
                                  Rational(5, 3)};
  SeriesOptions o = opts;
  o.kind = kind;
  for (const Partition& pi : partitions_up_to(6)) {
    const SeriesAggregate& agg = cached_aggregate(pi, o);
    std::string bad;
    unsigned checked = 0;
    for (const Partition& lambda : partitions_up_to(7)) {
      std::vector<BigInt> counts = embedding_counts(agg, lambda);
      for (const Rational& alpha : alphas) {
        QuadExt lhs = series_value(agg, counts, alpha);
        QuadExt rhs = jack_character_value(pi, lambda, alpha);
        ++checked;
        if (bad.empty() && !(lhs == rhs))
          bad = "lambda=" + detail::pname(lambda) + " a=" + format_rational(alpha) + ": " +
                format_quad_ext(lhs) + " vs " + format_quad_ext(rhs);
      }
    }
    std::string ok = std::to_string(checked) + " values match";
    report_case(r, "pi=" + detail::pname(pi), bad.empty(), bad.empty() ? ok : bad, ok);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: on rectangles the symbolic series equals the interpolated
// character, compared as polynomials in p, q.
// ---------------------------------------------------------------------------
inline VerificationReport verify_rectangular(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "rectangular";
  r.config.emplace_back("ell", "1");
  r.config.emplace_back("alphas", "1,2,1/2");
  std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(1, 2)};
  for (const Partition& pi : partitions_up_to(6)) {
    std::string bad;
    try {
      SeriesSymbolic sym = genseries_symbolic(pi, 1, opts);
      for (const Rational& alpha : alphas) {
        MultirectPoly lhs = substitute_symbolic(sym, alpha);
        MultirectPoly rhs = character_multirect(pi, 1, alpha);
        if (!(lhs.rat_part == rhs.rat_part && lhs.sqrt_part == rhs.sqrt_part)) {
          bad = "a=" + format_rational(alpha) + ": [" + format_multivar(lhs.rat_part) + "] + s[" +
                format_multivar(lhs.sqrt_part) + "] vs [" + format_multivar(rhs.rat_part) +
                "] + s[" + format_multivar(rhs.sqrt_part) + "]";
          break;
        }
      }
    } catch (const std::exception& ex) {
      bad = std::string("exception: ") + ex.what();
    }
    report_case(r, "pi=" + detail::pname(pi), bad.empty(), bad.empty() ? "polynomials match" : bad,
                "polynomials match");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: the rectangular recurrence holds for the oracle and the series.
// ---------------------------------------------------------------------------
inline VerificationReport verify_recurrences(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "recurrences";
  r.config.emplace_back("grid", "p,q<=3");
  r.config.emplace_back("alphas", "1/2,1,2");
  std::vector<Rational> alphas = {Rational(1, 2), Rational(1), Rational(2)};
  for (const Partition& pi : partitions_up_to(6)) {
    if (pi.empty() || pi.multiplicity(1) > 0) continue;
    std::string bad_o, bad_s;
    unsigned checked = 0;
    for (unsigned p = 1; p <= 3; ++p)
      for (unsigned q = 1; q <= 3; ++q)
        for (const Rational& alpha : alphas) {
          ++checked;
          if (bad_o.empty() && !verify_lassalle_recurrence(pi, p, q, alpha))
            bad_o = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " a=" + format_rational(alpha);
          if (bad_s.empty()) {
            QuadExt res = series_recurrence_residual(pi, p, q, alpha, opts);
            if (!res.is_zero())
              bad_s = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                      " a=" + format_rational(alpha) + " residual=" + format_quad_ext(res);
          }
        }
    std::string ok = std::to_string(checked) + " residuals vanish";
    report_case(r, "oracle pi=" + detail::pname(pi), bad_o.empty(), bad_o.empty() ? ok : bad_o,
                ok);
    report_case(r, "series pi=" + detail::pname(pi), bad_s.empty(), bad_s.empty() ? ok : bad_s,
                ok);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 9: parts equal to 1 peel off as falling factorials on both sides.
// ---------------------------------------------------------------------------
inline VerificationReport verify_parts1(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "parts1";
  r.config.emplace_back("max-pi", "4");
  r.config.emplace_back("max-ones", "2");
  for (const Partition& pi : partitions_up_to(4)) {
    std::string bad_o, bad_s;
    unsigned checked_o = 0, checked_s = 0;
    for (unsigned l = 1; l <= 2; ++l) {
      for (const Partition& lambda : partitions_up_to(7)) {
        for (const Rational& alpha : {Rational(1), Rational(5, 3)}) {
          ++checked_o;
          QuadExt lhs = jack_character_value(pi.with_ones(l), lambda, alpha);
          Rational fall =
              falling_power(Rational(lambda.size()) - Rational(pi.size()), l);
          QuadExt rhs = jack_character_value(pi, lambda, alpha) * fall;
          if (bad_o.empty() && !(lhs == rhs))
            bad_o = "l=" + std::to_string(l) + " lambda=" + detail::pname(lambda) +
                    " a=" + format_rational(alpha);
        }
      }
      for (const Partition& lambda : partitions_up_to(6)) {
        for (const Rational& alpha : {Rational(1), Rational(2)}) {
          ++checked_s;
          if (bad_s.empty() && !verify_ones_reduction(pi, l, lambda, alpha, opts))
            bad_s = "l=" + std::to_string(l) + " lambda=" + detail::pname(lambda) +
                    " a=" + format_rational(alpha);
        }
      }
    }
    report_case(r, "oracle pi=" + detail::pname(pi), bad_o.empty(),
                bad_o.empty() ? std::to_string(checked_o) + " identities" : bad_o,
                std::to_string(checked_o) + " identities");
    report_case(r, "series pi=" + detail::pname(pi), bad_s.empty(),
                bad_s.empty() ? std::to_string(checked_s) + " identities" : bad_s,
                std::to_string(checked_s) + " identities");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 10: conjugation duality for the oracle.
// ---------------------------------------------------------------------------
inline VerificationReport verify_duality(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "duality";
  r.config.emplace_back("alphas", "2,3,7/2");
  std::vector<Rational> alphas = {Rational(2), Rational(3), Rational(7, 2)};
  for (unsigned n = 1; n <= 7; ++n) {
    std::string bad;
    unsigned checked = 0;
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& pi : partitions_up_to(n)) {
        for (const Rational& alpha : alphas) {
          ++checked;
          if (bad.empty() && !duality_check(pi, lambda, alpha))
            bad = "pi=" + detail::pname(pi) + " lambda=" + detail::pname(lambda) +
                  " a=" + format_rational(alpha);
        }
      }
    }
    std::string ok = std::to_string(checked) + " identities";
    report_case(r, "n=" + std::to_string(n), bad.empty(), bad.empty() ? ok : bad, ok);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 11: nonnegativity of the symbolic series in u, v, -gamma.
// ---------------------------------------------------------------------------
inline VerificationReport verify_positivity(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "positivity";
  r.config.emplace_back("max-pi", "5");
  r.config.emplace_back("ell", "1,2,3");
  for (const Partition& pi : partitions_up_to(5)) {
    std::string bad;
    for (unsigned ell = 1; ell <= 3; ++ell) {
      SeriesSymbolic sym = genseries_symbolic(pi, ell, opts);
      if (bad.empty() && !series_positivity_ok(sym)) bad = "ell=" + std::to_string(ell);
    }
    report_case(r, "pi=" + detail::pname(pi), bad.empty(),
                bad.empty() ? "all coefficients nonnegative" : "negative coefficient at " + bad,
                "all coefficients nonnegative");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 12: oracle self-checks -- small golden expansions, and agreement
// with the independent symmetric group character routine at alpha = 1.
// ---------------------------------------------------------------------------
inline VerificationReport verify_oracle_selfchecks(const SeriesOptions& = {}) {
  VerificationReport r;
  r.suite = "oracle-selfchecks";
  {
    auto j2 = jack_powersum(Partition({2}));
    bool ok = j2.size() == 2 && j2.at(Partition({2})) == UniPoly::monomial(1) &&
              j2.at(Partition({1, 1})) == UniPoly(Rational(1));
    report_case(r, "J(2) power sums", ok,
                ok ? "a p2 + p1^2" : "unexpected expansion", "a p2 + p1^2");
  }
  {
    auto j11 = jack_powersum(Partition({1, 1}));
    bool ok = j11.size() == 2 && j11.at(Partition({2})) == UniPoly(Rational(-1)) &&
              j11.at(Partition({1, 1})) == UniPoly(Rational(1));
    report_case(r, "J(1,1) power sums", ok,
                ok ? "-p2 + p1^2" : "unexpected expansion", "-p2 + p1^2");
  }
  for (unsigned n = 1; n <= 7; ++n) {
    std::string bad;
    unsigned checked = 0;
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& pi : partitions_up_to(n)) {
        ++checked;
        QuadExt v = jack_character_value(pi, lambda, Rational(1));
        Rational want = normalized_character_alpha1(pi, lambda);
        if (bad.empty() && (v.irr != 0 || v.rat != want))
          bad = "pi=" + detail::pname(pi) + " lambda=" + detail::pname(lambda) + ": " +
                format_quad_ext(v) + " vs " + format_rational(want);
      }
    }
    std::string ok = std::to_string(checked) + " characters match";
    report_case(r, "alpha=1 n=" + std::to_string(n), bad.empty(), bad.empty() ? ok : bad, ok);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 13: the deterministic one-history weight gives the same series.
// ---------------------------------------------------------------------------
inline VerificationReport verify_alt_weight(const SeriesOptions& opts = {}) {
  return verify_series_vs_oracle(opts, WeightKind::Lacroix);
}

// ---------------------------------------------------------------------------
// Criterion 14 (opt-in): the size-9 discrepancy.
// ---------------------------------------------------------------------------
inline VerificationReport verify_counterexample(const SeriesOptions& opts = {}) {
  VerificationReport r;
  r.suite = "counterexample";
  r.config.emplace_back("pi", "9");
  r.config.emplace_back("P", "1,1,1");
  r.config.emplace_back("Q", "3,2,1");
  r.config.emplace_back("alpha", "1");
  CounterexampleResult res = counterexample_report({3, 2, 1}, Rational(1), opts);
  report_case(r, "maps enumerated", res.maps_seen == 34459425,
              std::to_string(res.maps_seen), "34459425");
  report_case(r, "oracle vanishes", res.oracle.is_zero(), format_quad_ext(res.oracle), "0");
  QuadExt want = QuadExt::from_rational(res.alpha, Rational(41, 70));
  report_case(r, "difference", res.difference == want, format_quad_ext(res.difference),
              format_quad_ext(want));
  report_case(r, "formula prediction", res.match, format_quad_ext(res.difference),
              format_quad_ext(res.predicted));
  return r;
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------
struct SuiteEntry {
  unsigned criterion;
  const char* name;
  VerificationReport (*run)(const SeriesOptions&);
};

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> entries = {
      {1, "klein-example", [](const SeriesOptions& o) { return verify_klein_example(o); }},
      {2, "classification-golden",
       [](const SeriesOptions& o) { return verify_classification_golden(o); }},
      {3, "lemmas-small", [](const SeriesOptions& o) { return verify_lemmas_small(o); }},
      {4, "recursion-vs-naive",
       [](const SeriesOptions& o) { return verify_recursion_vs_naive(o); }},
      {5, "special-alpha", [](const SeriesOptions& o) { return verify_special_alpha(o); }},
      {6, "series-vs-oracle",
       [](const SeriesOptions& o) { return verify_series_vs_oracle(o, WeightKind::Mean); }},
      {7, "rectangular", [](const SeriesOptions& o) { return verify_rectangular(o); }},
      {8, "recurrences", [](const SeriesOptions& o) { return verify_recurrences(o); }},
      {9, "parts1", [](const SeriesOptions& o) { return verify_parts1(o); }},
      {10, "duality", [](const SeriesOptions& o) { return verify_duality(o); }},
      {11, "positivity", [](const SeriesOptions& o) { return verify_positivity(o); }},
      {12, "oracle-selfchecks",
       [](const SeriesOptions& o) { return verify_oracle_selfchecks(o); }},
      {13, "alt-weight", [](const SeriesOptions& o) { return verify_alt_weight(o); }},
      {14, "counterexample", [](const SeriesOptions& o) { return verify_counterexample(o); }},
  };
  return entries;
}

inline const SuiteEntry* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (name == s.name) return &s;
  return nullptr;
}

}  // namespace jackmaps
