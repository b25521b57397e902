#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackmaps/quad_ext.hpp"
#include "jackmaps/rational.hpp"

namespace jackmaps {

using Monomial = std::vector<uint32_t>;  // exponent per variable

// Graded lexicographic, leading (high) terms first.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over Rational with an explicit variable list.
// Zero coefficients are never stored.
class MultivarPoly {
 public:
  MultivarPoly() = default;
  explicit MultivarPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultivarPoly constant(std::vector<std::string> vars, const Rational& c) {
    MultivarPoly p(std::move(vars));
    p.add_term(Monomial(p.vars_.size(), 0), c);
    return p;
  }
  static MultivarPoly variable(std::vector<std::string> vars, size_t index,
                               const Rational& c = Rational(1)) {
    MultivarPoly p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m.at(index) = 1;
    p.add_term(m, c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Monomial, Rational, GradedLexDesc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size()) throw std::invalid_argument("multivar: exponent arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const MultivarPoly& a, const MultivarPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  friend MultivarPoly operator+(const MultivarPoly& a, const MultivarPoly& b) {
    check_vars(a, b);
    MultivarPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend MultivarPoly operator-(const MultivarPoly& a, const MultivarPoly& b) {
    check_vars(a, b);
    MultivarPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) {
    check_vars(a, b);
    MultivarPoly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend MultivarPoly operator*(const MultivarPoly& a, const Rational& s) {
    MultivarPoly r(a.vars_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend MultivarPoly operator*(const Rational& s, const MultivarPoly& a) { return a * s; }
  MultivarPoly& operator+=(const MultivarPoly& o) { return *this = *this + o; }
  MultivarPoly& operator-=(const MultivarPoly& o) { return *this = *this - o; }
  MultivarPoly& operator*=(const MultivarPoly& o) { return *this = *this * o; }

 private:
  static void check_vars(const MultivarPoly& a, const MultivarPoly& b) {
    if (a.vars_ != b.vars_)
      throw std::invalid_argument("multivar: arithmetic over different variable lists");
  }
  std::vector<std::string> vars_;
  std::map<Monomial, Rational, GradedLexDesc> terms_;
};

// Substitute a QuadExt value for every variable (all over one alpha).
inline QuadExt multivar_substitute(const MultivarPoly& p, const std::vector<QuadExt>& values) {
  if (values.size() != p.vars().size())
    throw std::invalid_argument("multivar: substitution needs a value per variable");
  Rational alpha = values.empty() ? Rational(1) : values.front().alpha;
  for (const auto& v : values)
    if (v.alpha != alpha) throw std::invalid_argument("multivar: bindings over different alpha");
  QuadExt acc = QuadExt::from_rational(alpha, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    QuadExt t = QuadExt::from_rational(alpha, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= quad_pow(values[i], m[i]);
    acc += t;
  }
  return acc;
}

inline std::string format_multivar(const MultivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += format_rational(a);
    else out += (a == 1 ? mono : format_rational(a) + "*" + mono);
  }
  return out;
}

}  // namespace jackmaps
