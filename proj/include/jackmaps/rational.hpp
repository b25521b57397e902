#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jackmaps {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator (enforced by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

// Reduced form; the "/den" part is omitted for integers.
inline std::string format_rational(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

// Display-only decimal expansion, round-to-nearest on the last digit.
inline std::string format_decimal(const Rational& r, unsigned digits) {
  BigInt num = rat_num(r), den = rat_den(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale * 2 + den;  // 2*round(num*scale/den) packed
  BigInt q = scaled / (den * 2);
  BigInt ip = q / scale, fp = q % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.str();
  if (digits > 0) out += "." + frac;
  return out;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational: 0^negative");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Exact integer square root test.
inline bool perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// Exact rational square root test (numerator and denominator both squares).
inline bool rational_sqrt(const Rational& x, Rational& root) {
  BigInt sn, sd;
  if (!perfect_square(rat_num(x), sn) || !perfect_square(rat_den(x), sd)) return false;
  root = Rational(sn, sd);
  return true;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(const BigInt& n, unsigned k) {
  BigInt acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact at every step
  }
  return acc;
}

inline BigInt double_factorial_odd(unsigned n) {  // 1*3*5*...*(2n-1)
  BigInt f = 1;
  for (unsigned i = 1; i <= n; ++i) f *= 2 * i - 1;
  return f;
}

// Falling power x_(k) = x (x-1) ... (x-k+1).
inline Rational falling_power(const Rational& x, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) acc *= x - i;
  return acc;
}

}  // namespace jackmaps
