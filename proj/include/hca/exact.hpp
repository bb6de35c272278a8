#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

#include "hca/errors.hpp"

namespace hca {

// All discrete-side arithmetic runs on these exact types. Nothing on the
// discrete side is ever allowed to round. GMP backs both: long trajectories
// reach tens of thousands of bits per component, where its multiplication
// is several times faster than the header-only backends.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Number of bits in |v|; 0 for v == 0.
inline std::size_t bit_length(const Int& v) {
  if (v.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

/// Parses a decimal integer (optional leading sign). Throws ValidationError.
inline Int parse_int(const std::string& text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  const std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ValidationError("bare sign is not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("not a decimal integer: '" + text + "'");
  }
  // Hand the backend bare digits; sign conventions differ across backends.
  Int v(text.substr(start));
  return text[0] == '-' ? Int(-v) : v;
}

/// Exact rational as "num" or "num/den" (den > 0, lowest terms).
inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "num" or "num/den". Throws ValidationError.
inline Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator: '" + text + "'");
  return Rat(num, den);
}

// Gaussian integer a + bi. std::complex requires floating scalars, so the
// exact side carries its own minimal complex-integer type.
struct GaussInt {
  Int re;
  Int im;

  GaussInt() = default;
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussInt(Int r) : re(std::move(r)), im(0) {}

  bool operator==(const GaussInt&) const = default;

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussInt operator*(const Int& k) const { return {re * k, im * k}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  GaussInt conj() const { return {re, -im}; }
  /// i * (this).
  GaussInt times_i() const { return {-im, re}; }
  /// -i * (this); exact division by i.
  GaussInt div_i() const { return {im, -re}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// |z|^2, exact.
  Int norm() const { return re * re + im * im; }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.str();
    s += (im < 0) ? "-" : "+";
    s += Int(boost::multiprecision::abs(im)).str() + "i";
    return s;
  }
};

inline GaussInt operator*(const Int& k, const GaussInt& z) { return z * k; }

}  // namespace hca
