#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jackmaps/quad_ext.hpp"
#include "jackmaps/rational.hpp"

namespace jackmaps {

// Dense univariate polynomial over Rational, coefficients lowest degree first,
// never stored with trailing zeros. degree() of the zero polynomial is -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(unsigned deg, Rational coeff = Rational(1)) {
    if (coeff == 0) return UniPoly();
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = std::move(coeff);
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(unsigned deg) const { return deg < c_.size() ? c_[deg] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly(Rational(0)) - a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    if (s == 0) return UniPoly();
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("unipoly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> quo(a.degree() >= db ? a.degree() - db + 1 : 0, Rational(0));
    for (int d = a.degree(); d >= db; --d) {
      Rational f = rem[d] / b.c_[db];
      if (f == 0) continue;
      quo[d - db] = f;
      for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  template <typename T>
  T eval(const T& x, const T& one) const {  // Horner; one = multiplicative unit
    T acc = one * Rational(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + one * c_[i];
    return acc;
  }
  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string format(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
      else if (c_[i] < 0) out += "-";
      Rational a = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
      bool unit = a == 1 && i > 0;
      if (!unit) out += format_rational(a);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Polynomials in the variable gamma = (1 - alpha)/sqrt(alpha).
using GammaPoly = UniPoly;

inline GammaPoly gamma_poly_constant(Rational c) { return GammaPoly(std::move(c)); }
inline GammaPoly gamma_poly_gamma() { return GammaPoly::monomial(1); }

// Substitute gamma = (1 - alpha)/sqrt(alpha) = (1 - alpha)*sqrt(alpha)/alpha.
inline QuadExt gamma_poly_eval(const GammaPoly& p, const Rational& alpha) {
  return p.eval(gamma_value(alpha), QuadExt::from_rational(alpha, Rational(1)));
}

// Remainder of p modulo 2*gamma^2 - 1, i.e. the image under gamma^2 -> 1/2,
// returned as (constant, gamma-coefficient).
inline std::pair<Rational, Rational> gamma_poly_mod_half(const GammaPoly& p) {
  Rational even(0), odd(0);
  Rational pw(1);
  for (int d = 0; d <= p.degree(); ++d) {
    if (d >= 2 && d % 2 == 0) pw /= 2;
    (d % 2 == 0 ? even : odd) += p.coeff(d) * pw;
  }
  return {even, odd};
}

// Exponent parities present in p: {has_even_terms, has_odd_terms}.
inline std::pair<bool, bool> gamma_poly_parities(const GammaPoly& p) {
  bool ev = false, od = false;
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) (d % 2 == 0 ? ev : od) = true;
  return {ev, od};
}

// Reduced fraction of univariate polynomials (used with the variable alpha).
// Invariant: denominator monic and nonzero, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  explicit RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RatFunc(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
  RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Fails loudly when the value is not a polynomial.
  UniPoly as_polynomial() const {
    if (!is_polynomial())
      throw std::domain_error("ratfunc: expected polynomial, denominator " + den_.format("a"));
    return num_;  // den_ is the constant 1 after reduction
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { RatFunc r = a; r.num_ = -r.num_; return r; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("ratfunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("ratfunc: pole at evaluation point");
    return num_.eval(x) / d;
  }

 private:
  static UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.leading());  // monic
    return a;
  }
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("ratfunc: zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly(Rational(1));
      return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      num_ = num_ * (Rational(1) / lead);
      den_ = den_ * (Rational(1) / lead);
    }
  }
  UniPoly num_, den_;
};

}  // namespace jackmaps
