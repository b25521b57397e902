#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jackmaps/embedding.hpp"
#include "jackmaps/multivar_poly.hpp"
#include "jackmaps/partition.hpp"
#include "jackmaps/polynomial.hpp"
#include "jackmaps/quad_ext.hpp"
#include "jackmaps/rational.hpp"

namespace jackmaps {

// Largest |lambda| for which the fully symbolic (rational-function-in-alpha)
// construction is attempted; beyond it only fixed-alpha evaluation is offered.
constexpr unsigned kJackSymbolicBound = 9;
constexpr unsigned kJackEvalBound = 26;

// ---------------------------------------------------------------------------
// Partition bookkeeping per size n. The list is in lexicographically
// decreasing order, which extends the dominance order: if a dominates b
// then index(a) <= index(b).
// ---------------------------------------------------------------------------
struct PartitionTable {
  unsigned n = 0;
  std::vector<Partition> list;
  std::map<Partition, int> index;

  int idx(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::logic_error("partition table: wrong size");
    return it->second;
  }
};

inline const PartitionTable& partition_table(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, PartitionTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PartitionTable t;
  t.n = n;
  t.list = partitions_of(n);
  for (size_t i = 0; i < t.list.size(); ++i) t.index.emplace(t.list[i], static_cast<int>(i));
  return cache.emplace(n, std::move(t)).first->second;
}

// ---------------------------------------------------------------------------
// Power sums in the monomial basis. Multiplying an m-expansion by p_r:
// m_mu * p_r = sum over nu built from mu by adding a new part r (coefficient
// m_r(nu)) or by bumping one distinct part value u to u+r (coefficient
// m_{u+r}(nu)). Coefficients are integers.
// ---------------------------------------------------------------------------
namespace detail {

inline std::map<Partition, BigInt> multiply_by_powersum(const std::map<Partition, BigInt>& f,
                                                        unsigned r) {
  std::map<Partition, BigInt> out;
  for (const auto& [mu, c] : f) {
    Partition added = mu.with_added(r);
    out[added] += c * added.multiplicity(r);
    std::set<unsigned> values(mu.parts().begin(), mu.parts().end());
    for (unsigned u : values) {
      Partition nu = mu.with_removed(u).with_added(u + r);
      out[nu] += c * nu.multiplicity(u + r);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

// Expansion p_rho = sum_mu coeff * m_mu; every mu dominates rho.
inline const std::map<Partition, BigInt>& powersum_in_monomial(const Partition& rho) {
  static std::mutex mu;
  static std::map<Partition, std::map<Partition, BigInt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rho);
  if (it != cache.end()) return it->second;
  std::map<Partition, BigInt> f{{Partition{}, BigInt(1)}};
  for (unsigned r : rho.parts()) f = detail::multiply_by_powersum(f, r);
  return cache.emplace(rho, std::move(f)).first->second;
}

// Column of the inverse transition: values [p_rho] m_mu for all mu of size
// |rho|, indexed by position in partition_table(|rho|).list. The column is
// supported on mu dominated by rho, so the triangular solve only walks the
// dominance ideal of rho.
inline const std::map<int, Rational>& monomial_in_powersum_column(const Partition& rho) {
  static std::mutex mu;
  static std::map<Partition, std::map<int, Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rho);
  if (it != cache.end()) return it->second;

  const PartitionTable& pt = partition_table(rho.size());
  std::vector<int> ideal;  // indices of mu with rho dominating mu, ascending
  for (size_t i = 0; i < pt.list.size(); ++i)
    if (rho.dominates(pt.list[i])) ideal.push_back(static_cast<int>(i));

  std::map<int, Rational> x;
  for (int mi : ideal) {
    const Partition& mup = pt.list[mi];
    const auto& row = powersum_in_monomial(mup);  // p_mu in m-basis
    Rational rhs = mup == rho ? Rational(1) : Rational(0);
    BigInt diag = 0;
    for (const auto& [nu, c] : row) {
      int ni = pt.idx(nu);
      if (ni == mi) {
        diag = c;
        continue;
      }
      auto xv = x.find(ni);
      if (xv != x.end()) rhs -= Rational(c) * xv->second;
    }
    if (diag == 0) throw std::logic_error("powersum transition: zero diagonal");
    Rational v = rhs / Rational(diag);
    if (v != 0) x.emplace(mi, std::move(v));
  }
  return cache.emplace(rho, std::move(x)).first->second;
}

// ---------------------------------------------------------------------------
// Symbolic reference construction over the field of rational functions in
// alpha: Gram-Schmidt of the monomial basis along a linear extension of the
// dominance order, for the deformed inner product
// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}. Normalization: the
// coefficient of m_{1^n} equals n!.
// ---------------------------------------------------------------------------
struct JackSymbolicTable {
  unsigned n = 0;
  // mono[i][j]: coefficient of m_{list[j]} in J_{list[i]} (polynomial in alpha)
  std::vector<std::vector<UniPoly>> mono;
  // theta[i][j]: coefficient of p_{list[j]} in J_{list[i]} (polynomial in alpha)
  std::vector<std::vector<UniPoly>> theta;
};

inline const JackSymbolicTable& jack_symbolic_table(unsigned n) {
  if (n > kJackSymbolicBound)
    throw std::invalid_argument("jack: symbolic construction bound " +
                                std::to_string(kJackSymbolicBound) + " exceeded");
  static std::mutex mu;
  static std::map<unsigned, JackSymbolicTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  const PartitionTable& pt = partition_table(n);
  size_t k = pt.list.size();

  // X[i][j] = [p_{list[j]}] m_{list[i]}
  std::vector<std::vector<Rational>> X(k, std::vector<Rational>(k, Rational(0)));
  for (size_t j = 0; j < k; ++j)
    for (const auto& [mi, v] : monomial_in_powersum_column(pt.list[j])) X[mi][j] = v;

  // Gram matrix of the monomial basis: G[i][j] = <m_i, m_j>, polynomial in alpha.
  std::vector<std::vector<UniPoly>> G(k, std::vector<UniPoly>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      std::vector<Rational> coeffs(n + 1, Rational(0));
      for (size_t r = 0; r < k; ++r) {
        if (X[i][r] == 0 || X[j][r] == 0) continue;
        coeffs[pt.list[r].length()] += X[i][r] * X[j][r] * Rational(pt.list[r].z());
      }
      G[i][j] = UniPoly(std::move(coeffs));
      if (j != i) G[j][i] = G[i][j];
    }

  // Gram-Schmidt from the least dominant partition upward.
  std::vector<std::vector<RatFunc>> P(k, std::vector<RatFunc>(k));
  std::vector<RatFunc> norm(k);
  std::vector<size_t> done;
  for (size_t i = k; i-- > 0;) {
    std::vector<RatFunc> coef(k);
    coef[i] = RatFunc(Rational(1));
    for (size_t m : done) {
      RatFunc ip;
      for (size_t nu = 0; nu < k; ++nu)
        if (!P[m][nu].is_zero() && !G[i][nu].is_zero()) ip += P[m][nu] * RatFunc(G[i][nu]);
      if (ip.is_zero()) continue;
      RatFunc f = ip / norm[m];
      for (size_t nu = 0; nu < k; ++nu)
        if (!P[m][nu].is_zero()) coef[nu] -= f * P[m][nu];
    }
    RatFunc nrm;
    for (size_t nu = 0; nu < k; ++nu)
      if (!coef[nu].is_zero() && !G[i][nu].is_zero()) nrm += coef[nu] * RatFunc(G[i][nu]);
    if (nrm.is_zero()) throw std::logic_error("jack: degenerate inner product");
    norm[i] = std::move(nrm);
    P[i] = std::move(coef);
    done.push_back(i);
  }

  JackSymbolicTable t;
  t.n = n;
  t.mono.assign(k, std::vector<UniPoly>(k));
  t.theta.assign(k, std::vector<UniPoly>(k));
  size_t last = k - 1;  // index of 1^n, the lexicographic minimum
  for (size_t i = 0; i < k; ++i) {
    RatFunc scale = RatFunc(Rational(factorial(n))) / P[i][last];
    std::vector<RatFunc> cj(k);
    for (size_t j = 0; j < k; ++j) {
      cj[j] = P[i][j] * scale;
      t.mono[i][j] = cj[j].as_polynomial();  // integrality in alpha must hold
    }
    for (size_t r = 0; r < k; ++r) {
      RatFunc th;
      for (size_t j = 0; j < k; ++j)
        if (!cj[j].is_zero() && X[j][r] != 0) th += cj[j] * RatFunc(Rational(X[j][r]));
      t.theta[i][r] = th.as_polynomial();  // theta must be polynomial in alpha
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

// J_lambda in the power-sum basis, coefficients polynomial in alpha.
inline std::map<Partition, UniPoly> jack_powersum(const Partition& lambda) {
  const JackSymbolicTable& t = jack_symbolic_table(lambda.size());
  const PartitionTable& pt = partition_table(lambda.size());
  int li = pt.idx(lambda);
  std::map<Partition, UniPoly> out;
  for (size_t r = 0; r < pt.list.size(); ++r)
    if (!t.theta[li][r].is_zero()) out.emplace(pt.list[r], t.theta[li][r]);
  return out;
}

// theta_rho(lambda) as a polynomial in alpha.
inline UniPoly theta(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) throw std::invalid_argument("theta: |rho| != |lambda|");
  const JackSymbolicTable& t = jack_symbolic_table(lambda.size());
  const PartitionTable& pt = partition_table(lambda.size());
  return t.theta[pt.idx(lambda)][pt.idx(rho)];
}

// ---------------------------------------------------------------------------
// Fixed-alpha fast path. The monic (P-normalized) monomial coefficients
// c_{lambda mu} satisfy the eigenfunction recurrence
//   c_{lambda mu} = [ sum over moves mu -> nu of (mu_i - mu_j + 2t) c_{lambda nu} ]
//                   / (d(lambda) - d(mu)),
// where a move transfers t boxes from part j to part i (i < j) and
// d(kappa) = alpha n(kappa') - n(kappa). The denominator is nonzero for
// mu strictly dominated by lambda and alpha > 0. Validated against the
// symbolic construction in the test suite.
// ---------------------------------------------------------------------------
namespace detail {

inline Rational dominance_eigenvalue(const Partition& kappa, const Rational& alpha) {
  BigInt ncol = 0, nrow = 0;
  const auto& parts = kappa.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    ncol += BigInt(parts[i]) * (BigInt(parts[i]) - 1) / 2;
    nrow += BigInt(i) * parts[i];
  }
  return alpha * Rational(ncol) - Rational(nrow);
}

}  // namespace detail

// Coefficients of J_lambda on the monomial basis at a fixed alpha, indexed by
// partition_table(|lambda|).list (zero where not dominated by lambda).
inline const std::vector<Rational>& jack_in_monomial_fixed(const Partition& lambda,
                                                           const Rational& alpha) {
  if (lambda.size() > kJackEvalBound)
    throw std::invalid_argument("jack: evaluation bound " + std::to_string(kJackEvalBound) +
                                " exceeded");
  if (alpha <= 0) throw std::invalid_argument("jack: alpha must be positive");
  static std::mutex mu;
  static std::map<std::string, std::vector<Rational>> cache;
  std::string key = format_partition(lambda) + "|" + format_rational(alpha);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const PartitionTable& pt = partition_table(lambda.size());
  size_t k = pt.list.size();
  int li = pt.idx(lambda);
  std::vector<Rational> c(k, Rational(0));
  c[li] = 1;
  Rational dl = detail::dominance_eigenvalue(lambda, alpha);
  for (size_t mi = li + 1; mi < k; ++mi) {
    const Partition& mup = pt.list[mi];
    if (!lambda.dominates(mup)) continue;
    const auto& parts = mup.parts();
    Rational total(0);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        for (unsigned t = 1; t <= parts[j]; ++t) {
          std::vector<unsigned> v(parts);
          v[i] += t;
          v[j] -= t;
          Partition nu(std::move(v));
          int ni = pt.idx(nu);
          if (ni > static_cast<int>(mi) || c[ni] == 0) continue;
          total += Rational(parts[i] - parts[j] + 2 * t) * c[ni];
        }
    if (total == 0) continue;
    Rational denom = dl - detail::dominance_eigenvalue(mup, alpha);
    if (denom == 0) throw std::logic_error("jack: eigenvalue collision");
    c[mi] = total / denom;
  }
  // J-normalization: coefficient of m_{1^n} becomes n!.
  Rational base = c[k - 1];
  if (base == 0) throw std::logic_error("jack: vanishing m_{1^n} coefficient");
  Rational scale = Rational(factorial(lambda.size())) / base;
  for (auto& v : c) v *= scale;
  return cache.emplace(std::move(key), std::move(c)).first->second;
}

// theta_rho(lambda) evaluated at a fixed alpha. Dispatches to the symbolic
// table when available, otherwise to the eigenfunction recurrence.
inline Rational theta_at(const Partition& rho, const Partition& lambda, const Rational& alpha) {
  if (rho.size() != lambda.size()) throw std::invalid_argument("theta: |rho| != |lambda|");
  if (lambda.size() == 0) return Rational(1);
  if (lambda.size() <= kJackSymbolicBound) return theta(rho, lambda).eval(alpha);
  const std::vector<Rational>& c = jack_in_monomial_fixed(lambda, alpha);
  Rational acc(0);
  for (const auto& [mi, x] : monomial_in_powersum_column(rho))
    if (c[mi] != 0) acc += c[mi] * x;
  return acc;
}

// ---------------------------------------------------------------------------
// Jack characters.
// ---------------------------------------------------------------------------
struct CharacterValue {
  Partition pi;
  YoungDiagram lambda;
  Rational alpha;
  QuadExt value;
};

// Ch_pi(lambda) = alpha^{-(|pi|-l(pi))/2} binom(|lambda|-|pi|+m_1(pi), m_1(pi))
//                 z_pi theta_{pi cup 1^{|lambda|-|pi|}}(lambda),
// and 0 when |lambda| < |pi|.
inline CharacterValue jack_character(const Partition& pi, const YoungDiagram& lambda,
                                     const Rational& alpha) {
  CharacterValue cv{pi, lambda, alpha, QuadExt::from_rational(alpha, Rational(0))};
  if (lambda.size() < pi.size()) return cv;
  Partition rho = pi.with_ones(lambda.size() - pi.size());
  Rational th = theta_at(rho, lambda, alpha);
  Rational factor = Rational(binomial(BigInt(lambda.size() - pi.size() + pi.multiplicity(1)),
                                      pi.multiplicity(1))) *
                    Rational(pi.z()) * th;
  long m = static_cast<long>(pi.size()) - static_cast<long>(pi.length());
  cv.value = sqrt_alpha_pow(alpha, -m) * factor;
  return cv;
}

inline QuadExt jack_character_value(const Partition& pi, const YoungDiagram& lambda,
                                    const Rational& alpha) {
  return jack_character(pi, lambda, alpha).value;
}

// Lassalle's normalization: theta-hat = alpha^{(|pi|-l(pi))/2} Ch, always rational.
inline Rational lassalle_normalization(const CharacterValue& ch) {
  long m = static_cast<long>(ch.pi.size()) - static_cast<long>(ch.pi.length());
  QuadExt v = sqrt_alpha_pow(ch.alpha, m) * ch.value;
  if (v.irr != 0)
    throw std::logic_error("lassalle normalization: sqrt part must vanish");
  return v.rat;
}

// Ch_pi^{(alpha)}(lambda) = (-1)^{|pi|-l(pi)} Ch_pi^{(1/alpha)}(lambda').
// Compared through the rational normalized values to avoid mixing the
// extensions by sqrt(alpha) and sqrt(1/alpha).
inline bool duality_check(const Partition& pi, const YoungDiagram& lambda, const Rational& alpha) {
  long m = static_cast<long>(pi.size()) - static_cast<long>(pi.length());
  Rational lhs = lassalle_normalization(jack_character(pi, lambda, alpha));
  Rational rhs = lassalle_normalization(jack_character(pi, lambda.conjugate(), 1 / alpha));
  Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
  return lhs == sign * rhs * rat_pow(alpha, m);
}

// ---------------------------------------------------------------------------
// The rectangular recurrence, shared between the oracle and the map series.
// Partition surgeries (m_1(pi) = 0 required):
//   pi_down(r)   = pi minus a part r plus a part r-1
//   pi_up(i,j)   = pi minus a part i+j+1 plus parts i and j
//   pi_down(r,s) = pi minus parts r and s plus a part r+s-1
// Left side:
//   (p/sqrt(a) - sqrt(a) q) sum_r r m_r Ch_{pi_down(r)}
//   + sum_r r m_r sum_{i=1}^{r-2} Ch_{pi_up(i, r-1-i)}
//   - gamma sum_r r (r-1) m_r Ch_{pi_down(r)}
//   + sum_{r,s} r s m_r (m_s - delta_{rs}) Ch_{pi_down(rs)}
// must equal -|pi| Ch_pi. Returns left - right.
// ---------------------------------------------------------------------------
inline QuadExt lassalle_recurrence_residual(
    const Partition& pi, unsigned p, unsigned q, const Rational& alpha,
    const std::function<QuadExt(const Partition&)>& ch) {
  if (pi.multiplicity(1) != 0)
    throw std::invalid_argument("recurrence: pi must have no part equal to 1");
  QuadExt s = QuadExt::sqrt_alpha(alpha);
  QuadExt inv_s = quad_inv(s);
  QuadExt gamma = gamma_value(alpha);
  QuadExt acc = QuadExt::from_rational(alpha, Rational(0));

  std::set<unsigned> values(pi.parts().begin(), pi.parts().end());
  QuadExt leaf_coeff = QuadExt::from_rational(alpha, Rational(p)) * inv_s -
                       s * QuadExt::from_rational(alpha, Rational(q));
  for (unsigned r : values) {
    unsigned mr = pi.multiplicity(r);
    Partition down = pi.with_removed(r).with_added(r - 1);
    QuadExt chd = ch(down);
    acc += leaf_coeff * Rational(BigInt(r) * mr) * chd;
    acc -= gamma * Rational(BigInt(r) * (r - 1) * mr) * chd;
    for (unsigned i = 1; i + 2 <= r; ++i)
      acc += Rational(BigInt(r) * mr) * ch(pi.with_removed(r).with_added(i).with_added(r - 1 - i));
    for (unsigned sv : values) {
      unsigned ms = pi.multiplicity(sv) - (sv == r ? 1 : 0);
      if (ms == 0) continue;
      if (sv == r && mr < 2) continue;
      acc += Rational(BigInt(r) * sv * mr * ms) *
             ch(pi.with_removed(r).with_removed(sv).with_added(r + sv - 1));
    }
  }
  acc += Rational(pi.size()) * ch(pi);
  return acc;
}

inline bool verify_lassalle_recurrence(const Partition& pi, unsigned p, unsigned q,
                                       const Rational& alpha) {
  YoungDiagram lambda(std::vector<unsigned>(p, q));
  auto ch = [&](const Partition& pp) { return jack_character_value(pp, lambda, alpha); };
  return lassalle_recurrence_residual(pi, p, q, alpha, ch).is_zero();
}

// ---------------------------------------------------------------------------
// Independent alpha=1 ground truth: symmetric group characters by recursive
// border-strip removal on beta-sets, and the classical normalized character
//   (n)_{|pi|} chi^lambda(pi cup 1^{n-|pi|}) / chi^lambda(1^n).
// ---------------------------------------------------------------------------
inline BigInt symmetric_group_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character: |lambda| != |rho|");
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, BigInt> cache;
  if (lambda.size() == 0) return 1;
  std::lock_guard<std::mutex> lock(mu);
  std::function<BigInt(const Partition&, const Partition&)> rec =
      [&](const Partition& lam, const Partition& rr) -> BigInt {
    if (lam.size() == 0) return 1;
    auto key = std::make_pair(lam, rr);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    unsigned r = rr.part(0);
    Partition rest = rr.with_removed(r);
    size_t len = lam.length();
    std::vector<long> beta(len);
    for (size_t i = 0; i < len; ++i) beta[i] = static_cast<long>(lam.part(i)) + (len - 1 - i);
    BigInt acc = 0;
    for (size_t i = 0; i < len; ++i) {
      long target = beta[i] - static_cast<long>(r);
      if (target < 0) continue;
      bool occupied = false;
      int crossings = 0;
      for (size_t j = 0; j < len; ++j) {
        if (j == i) continue;
        if (beta[j] == target) occupied = true;
        if (beta[j] > target && beta[j] < beta[i]) ++crossings;
      }
      if (occupied) continue;
      std::vector<long> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<long>());
      std::vector<unsigned> rows(len);
      for (size_t j = 0; j < len; ++j)
        rows[j] = static_cast<unsigned>(nb[j] - static_cast<long>(len - 1 - j));
      BigInt sub = rec(Partition(std::move(rows)), rest);
      acc += crossings % 2 == 0 ? sub : -sub;
    }
    cache.emplace(std::move(key), acc);
    return acc;
  };
  return rec(lambda, rho);
}

inline Rational normalized_character_alpha1(const Partition& pi, const YoungDiagram& lambda) {
  if (lambda.size() < pi.size()) return Rational(0);
  unsigned n = lambda.size();
  Partition rho = pi.with_ones(n - pi.size());
  BigInt dim = symmetric_group_character(lambda, Partition(std::vector<unsigned>(n, 1)));
  return falling_power(Rational(n), pi.size()) *
         Rational(symmetric_group_character(lambda, rho)) / Rational(dim);
}

// ---------------------------------------------------------------------------
// Symbolic multirectangular characters by exact interpolation at a fixed
// alpha. Result stored as rational and sqrt(alpha) parts:
//   Ch_pi(P x Q) = rat_part(P, Q) + sqrt(alpha) * sqrt_part(P, Q).
// ---------------------------------------------------------------------------
struct MultirectPoly {
  unsigned ell = 1;
  Rational alpha = 1;
  MultivarPoly rat_part{std::vector<std::string>{}};
  MultivarPoly sqrt_part{std::vector<std::string>{}};
};

inline QuadExt multirect_value(const MultirectPoly& mp, const std::vector<unsigned>& p,
                               const std::vector<unsigned>& q) {
  if (p.size() != mp.ell || q.size() != mp.ell)
    throw std::invalid_argument("multirect value: wrong coordinate count");
  std::vector<QuadExt> vals;
  for (unsigned v : p) vals.push_back(QuadExt::from_rational(mp.alpha, Rational(v)));
  for (unsigned v : q) vals.push_back(QuadExt::from_rational(mp.alpha, Rational(v)));
  return multivar_substitute(mp.rat_part, vals) +
         QuadExt::sqrt_alpha(mp.alpha) * multivar_substitute(mp.sqrt_part, vals);
}

namespace detail {

// Monomial support for the interpolation of the normalized character
// s^m Ch_{pihat}(P x Q): total degree at most |pihat| + l(pihat), black
// degree (p-variables) and white degree (q-variables) each between 1 and
// |pihat|. The budget is checked by the stability pass, not trusted.
inline std::vector<Monomial> multirect_support(unsigned ell, unsigned size, unsigned budget) {
  std::vector<Monomial> out;
  Monomial cur(2 * ell, 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned used) {
    if (pos == cur.size()) {
      unsigned dp = 0, dq = 0;
      for (unsigned i = 0; i < ell; ++i) dp += cur[i];
      for (unsigned i = 0; i < ell; ++i) dq += cur[ell + i];
      if (dp >= 1 && dq >= 1 && dp <= size && dq <= size) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; used + e <= budget; ++e) {
      cur[pos] = e;
      rec(pos + 1, used + e);
    }
    cur[pos] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), GradedLexDesc());
  return out;
}

inline Rational eval_monomial(const Monomial& mono, const std::vector<unsigned>& point) {
  Rational acc(1);
  for (size_t i = 0; i < mono.size(); ++i)
    for (unsigned e = 0; e < mono[i]; ++e) acc *= point[i];
  return acc;
}

}  // namespace detail

struct MultirectOptions {
  // Largest |lambda| used as an interpolation node. Must stay within the
  // fixed-alpha evaluation bound; 26 leaves enough held-out nodes for every
  // core of size <= 6 at ell = 1.
  unsigned size_cap = kJackEvalBound;
  unsigned stability_extra = 6;  // held-out nodes that must be predicted exactly
};

// Ch_pi(P x Q) at fixed alpha as a polynomial in p_1..p_ell, q_1..q_ell.
// Parts equal to 1 are stripped first using the falling-factorial identity;
// the 1-free core is interpolated from exact jack_character values on
// multirectangular nodes, with a mandatory stability check on held-out nodes.
inline MultirectPoly character_multirect(const Partition& pi, unsigned ell, const Rational& alpha,
                                         const MultirectOptions& opts = {}) {
  if (ell == 0) throw std::invalid_argument("character_multirect: ell must be >= 1");
  auto vars = multirect_vars(ell);
  auto [core, ones] = pi.split_ones();

  MultirectPoly mp;
  mp.ell = ell;
  mp.alpha = alpha;
  mp.rat_part = MultivarPoly(vars);
  mp.sqrt_part = MultivarPoly(vars);

  long m = static_cast<long>(core.size()) - static_cast<long>(core.length());
  MultivarPoly normalized(vars);  // s^m Ch_core in the p, q variables
  if (core.empty()) {
    normalized = MultivarPoly::constant(vars, Rational(1));
  } else {
    unsigned budget = core.size() + core.length();
    std::vector<Monomial> support = detail::multirect_support(ell, core.size(), budget);

    // Candidate nodes ordered by diagram size then lexicographically:
    // heights 0..budget free, widths weakly decreasing.
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> nodes;
    std::vector<unsigned> pv(ell), qv(ell);
    std::function<void(size_t)> genq = [&](size_t pos) {
      if (pos == ell) {
        nodes.emplace_back(pv, qv);
        return;
      }
      unsigned hi = pos == 0 ? budget : qv[pos - 1];
      for (unsigned v = 0; v <= hi; ++v) {
        qv[pos] = v;
        genq(pos + 1);
      }
    };
    std::function<void(size_t)> genp = [&](size_t pos) {
      if (pos == ell) {
        genq(0);
        return;
      }
      for (unsigned v = 0; v <= budget; ++v) {
        pv[pos] = v;
        genp(pos + 1);
      }
    };
    genp(0);
    auto node_size = [](const std::pair<std::vector<unsigned>, std::vector<unsigned>>& nd) {
      unsigned s = 0;
      for (size_t i = 0; i < nd.first.size(); ++i) s += nd.first[i] * nd.second[i];
      return s;
    };
    nodes.erase(std::remove_if(nodes.begin(), nodes.end(),
                               [&](const auto& nd) { return node_size(nd) > opts.size_cap; }),
                nodes.end());
    std::stable_sort(nodes.begin(), nodes.end(), [&](const auto& a, const auto& b) {
      return node_size(a) < node_size(b);
    });

    auto value_at = [&](const auto& nd) {
      std::vector<unsigned> rows;
      for (size_t i = 0; i < nd.first.size(); ++i)
        rows.insert(rows.end(), nd.first[i], nd.second[i]);
      QuadExt ch = jack_character_value(core, YoungDiagram(std::move(rows)), alpha);
      QuadExt nv = sqrt_alpha_pow(alpha, m) * ch;
      if (nv.irr != 0) throw std::logic_error("character_multirect: normalization not rational");
      return nv.rat;
    };

    // Greedy exact rank selection: keep nodes whose evaluation row is
    // independent of the rows picked so far.
    size_t dim = support.size();
    std::vector<std::vector<Rational>> pivot_rows;
    std::vector<std::vector<Rational>> sys_rows;
    std::vector<Rational> sys_vals;
    std::vector<int> pivot_cols;
    size_t consumed = 0;
    for (; consumed < nodes.size() && pivot_rows.size() < dim; ++consumed) {
      const auto& nd = nodes[consumed];
      std::vector<unsigned> point = nd.first;
      point.insert(point.end(), nd.second.begin(), nd.second.end());
      std::vector<Rational> row(dim);
      for (size_t c = 0; c < dim; ++c) row[c] = detail::eval_monomial(support[c], point);
      std::vector<Rational> reduced = row;
      for (size_t r = 0; r < pivot_rows.size(); ++r) {
        const Rational& lead = reduced[pivot_cols[r]];
        if (lead == 0) continue;
        Rational f = lead / pivot_rows[r][pivot_cols[r]];
        for (size_t c = 0; c < dim; ++c) reduced[c] -= f * pivot_rows[r][c];
      }
      int pc = -1;
      for (size_t c = 0; c < dim; ++c)
        if (reduced[c] != 0) {
          pc = static_cast<int>(c);
          break;
        }
      if (pc < 0) continue;
      pivot_rows.push_back(std::move(reduced));
      pivot_cols.push_back(pc);
      sys_rows.push_back(std::move(row));
      sys_vals.push_back(value_at(nd));
    }
    if (pivot_rows.size() < dim)
      throw std::runtime_error("character_multirect: not enough independent nodes under cap " +
                               std::to_string(opts.size_cap));

    // Solve the square system by Gaussian elimination over the rationals.
    std::vector<std::vector<Rational>> a = sys_rows;
    std::vector<Rational> b = sys_vals;
    for (size_t col = 0; col < dim; ++col) {
      size_t piv = col;
      while (piv < dim && a[piv][col] == 0) ++piv;
      if (piv == dim) throw std::logic_error("character_multirect: singular system");
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      for (size_t r = 0; r < dim; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
        b[r] -= f * b[col];
      }
    }
    for (size_t c = 0; c < dim; ++c) {
      Rational coeff = b[c] / a[c][c];
      if (coeff != 0) normalized.add_term(support[c], coeff);
    }

    // Mandatory stability pass: the fitted polynomial must predict held-out
    // nodes exactly, otherwise the degree budget was wrong.
    unsigned checked = 0;
    for (size_t i = consumed; i < nodes.size() && checked < opts.stability_extra; ++i) {
      const auto& nd = nodes[i];
      std::vector<unsigned> point = nd.first;
      point.insert(point.end(), nd.second.begin(), nd.second.end());
      Rational predicted(0);
      for (size_t c = 0; c < dim; ++c) {
        Rational cf = normalized.coeff(support[c]);
        if (cf != 0) predicted += cf * detail::eval_monomial(support[c], point);
      }
      if (predicted != value_at(nd))
        throw std::runtime_error("character_multirect: interpolation unstable, budget " +
                                 std::to_string(budget) + " too small for pi=" +
                                 format_partition(pi));
      ++checked;
    }
    if (checked < opts.stability_extra)
      throw std::runtime_error("character_multirect: not enough held-out nodes for stability");
  }

  // Reattach parts equal to 1: multiply by (|lambda| - |core| - t) for
  // t = 0..ones-1, with |lambda| = sum p_i q_i.
  MultivarPoly sizes(vars);
  for (unsigned i = 0; i < ell; ++i) {
    Monomial mono(2 * ell, 0);
    mono[i] = 1;
    mono[ell + i] = 1;
    sizes.add_term(mono, Rational(1));
  }
  MultivarPoly factor = MultivarPoly::constant(vars, Rational(1));
  for (unsigned t = 0; t < ones; ++t) {
    MultivarPoly shift = sizes;
    shift.add_term(Monomial(2 * ell, 0), Rational(-(static_cast<long>(core.size()) + t)));
    factor = factor * shift;
  }
  normalized = normalized * factor;

  // Undo the s^m normalization monomial-wise. When sqrt(alpha) is rational the
  // whole result is rational, matching the canonical QuadExt representation.
  Rational root;
  bool square = rational_sqrt(alpha, root);
  for (const auto& [mono, coeff] : normalized.terms()) {
    if (m % 2 == 0) {
      mp.rat_part.add_term(mono, coeff / rat_pow(alpha, m / 2));
    } else if (square) {
      mp.rat_part.add_term(mono, coeff / (rat_pow(alpha, (m - 1) / 2) * root));
    } else {
      mp.sqrt_part.add_term(mono, coeff / rat_pow(alpha, (m + 1) / 2));
    }
  }
  return mp;
}

}  // namespace jackmaps
