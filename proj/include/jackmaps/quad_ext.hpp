#pragma once

#include <stdexcept>
#include <string>

#include "jackmaps/rational.hpp"

namespace jackmaps {

// Element rat + irr*sqrt(alpha) of Q(sqrt(alpha)) for a fixed positive rational alpha.
// Values carry their alpha; arithmetic between different alphas is refused.
// When sqrt(alpha) is itself rational the representation is canonicalized to
// irr = 0, so equality and rationality tests stay meaningful at such alpha.
struct QuadExt {
  Rational alpha;
  Rational rat;
  Rational irr;

  QuadExt() : alpha(1), rat(0), irr(0) {}
  QuadExt(Rational alpha_, Rational rat_, Rational irr_)
      : alpha(std::move(alpha_)), rat(std::move(rat_)), irr(std::move(irr_)) {
    if (alpha <= 0) throw std::invalid_argument("quad_ext: alpha must be positive");
    if (irr != 0) {
      Rational root;
      if (rational_sqrt(alpha, root)) {
        rat += irr * root;
        irr = 0;
      }
    }
  }

  static QuadExt from_rational(const Rational& alpha, const Rational& value) {
    return QuadExt(alpha, value, Rational(0));
  }
  static QuadExt sqrt_alpha(const Rational& alpha) { return QuadExt(alpha, Rational(0), Rational(1)); }

  bool is_rational() const { return irr == 0; }
  bool is_zero() const { return rat == 0 && irr == 0; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.alpha == b.alpha && a.rat == b.rat && a.irr == b.irr;
  }
};

namespace detail {
inline void check_same_alpha(const QuadExt& a, const QuadExt& b) {
  if (a.alpha != b.alpha)
    throw std::invalid_argument("quad_ext: mixing values over different alpha (" +
                                format_rational(a.alpha) + " vs " + format_rational(b.alpha) + ")");
}
}  // namespace detail

inline QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  detail::check_same_alpha(a, b);
  return QuadExt(a.alpha, a.rat + b.rat, a.irr + b.irr);
}
inline QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  detail::check_same_alpha(a, b);
  return QuadExt(a.alpha, a.rat - b.rat, a.irr - b.irr);
}
inline QuadExt operator-(const QuadExt& a) { return QuadExt(a.alpha, -a.rat, -a.irr); }
inline QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  detail::check_same_alpha(a, b);
  return QuadExt(a.alpha, a.rat * b.rat + a.irr * b.irr * a.alpha, a.rat * b.irr + a.irr * b.rat);
}
inline QuadExt operator*(const QuadExt& a, const Rational& c) {
  return QuadExt(a.alpha, a.rat * c, a.irr * c);
}
inline QuadExt operator*(const Rational& c, const QuadExt& a) { return a * c; }
inline QuadExt& operator+=(QuadExt& a, const QuadExt& b) { return a = a + b; }
inline QuadExt& operator-=(QuadExt& a, const QuadExt& b) { return a = a - b; }
inline QuadExt& operator*=(QuadExt& a, const QuadExt& b) { return a = a * b; }

inline QuadExt quad_inv(const QuadExt& a) {
  // 1/(r + i s) = (r - i s)/(r^2 - i^2 alpha); the norm vanishes only when
  // alpha is a perfect rational square and r = +-i sqrt(alpha).
  Rational norm = a.rat * a.rat - a.irr * a.irr * a.alpha;
  if (norm == 0) throw std::domain_error("quad_ext: division by zero (or zero-norm element)");
  return QuadExt(a.alpha, a.rat / norm, -a.irr / norm);
}
inline QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  detail::check_same_alpha(a, b);
  return a * quad_inv(b);
}

// sqrt(alpha)^e for any integer e; 1/sqrt(alpha) = sqrt(alpha)/alpha.
inline QuadExt sqrt_alpha_pow(const Rational& alpha, long e) {
  long k = e >= 0 ? e : -e;
  Rational half = rat_pow(alpha, k / 2);
  QuadExt r = (k % 2 == 0) ? QuadExt::from_rational(alpha, half)
                           : QuadExt(alpha, Rational(0), half);
  if (e < 0) r = quad_inv(r);
  return r;
}

inline QuadExt quad_pow(const QuadExt& a, long e) {
  QuadExt acc = QuadExt::from_rational(a.alpha, Rational(1));
  QuadExt b = e < 0 ? quad_inv(a) : a;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// gamma = (1 - alpha)/sqrt(alpha) as an element of Q(sqrt(alpha)).
inline QuadExt gamma_value(const Rational& alpha) {
  return QuadExt(alpha, Rational(0), (1 - alpha) / alpha);
}

inline std::string format_quad_ext(const QuadExt& a) {
  if (a.irr == 0) return format_rational(a.rat);
  return format_rational(a.rat) + (a.irr < 0 ? " - " : " + ") +
         format_rational(a.irr < 0 ? Rational(-a.irr) : a.irr) + "*sqrt(" +
         format_rational(a.alpha) + ")";
}

}  // namespace jackmaps
