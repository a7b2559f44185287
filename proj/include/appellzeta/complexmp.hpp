#pragma once

// Arbitrary-precision complex value as a plain (re, im) pair of Reals with the
// principal branch for log and powers. Kept deliberately small: only the
// operations the special-function and summation layers actually use.

#include <string>
#include <utility>

#include "appellzeta/errors.hpp"
#include "appellzeta/rational.hpp"
#include "appellzeta/real.hpp"

namespace appellzeta {

struct APComplex {
  Real re, im;

  APComplex() : re(0), im(0) {}
  APComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit APComplex(Real r) : re(std::move(r)), im(0) {}
  explicit APComplex(long v) : re(v), im(0) {}
  explicit APComplex(const Rational& q) : re(to_real(q)), im(0) {}

  // Accuracy of a mixed-precision pair is governed by the narrower component.
  unsigned prec() const { return std::min(re.precision(), im.precision()); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
};

inline APComplex operator+(const APComplex& a, const APComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline APComplex operator-(const APComplex& a, const APComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline APComplex operator-(const APComplex& a) { return {-a.re, -a.im}; }
inline APComplex operator*(const APComplex& a, const APComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline APComplex operator*(const APComplex& a, const Real& s) {
  return {a.re * s, a.im * s};
}
inline APComplex operator*(const Real& s, const APComplex& a) { return a * s; }

inline APComplex operator/(const APComplex& a, const APComplex& b) {
  if (b.is_zero()) throw PoleError("complex division by zero");
  if (b.im == 0) return {a.re / b.re, a.im / b.re};
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline APComplex operator/(const APComplex& a, const Real& s) {
  if (s == 0) throw PoleError("complex division by zero");
  return {a.re / s, a.im / s};
}

inline APComplex& operator+=(APComplex& a, const APComplex& b) { return a = a + b; }
inline APComplex& operator-=(APComplex& a, const APComplex& b) { return a = a - b; }
inline APComplex& operator*=(APComplex& a, const APComplex& b) { return a = a * b; }

inline bool operator==(const APComplex& a, const APComplex& b) {
  return a.re == b.re && a.im == b.im;
}

inline APComplex conj(const APComplex& z) { return {z.re, -z.im}; }

inline Real abs(const APComplex& z) {
  if (z.im == 0) return z.re < 0 ? Real(-z.re) : z.re;
  return hypot_real(z.re, z.im);
}

inline Real arg(const APComplex& z) {
  if (z.is_zero()) throw DomainError("arg(0) is undefined");
  return atan2(z.im, z.re);
}

inline APComplex exp(const APComplex& z) {
  using boost::multiprecision::exp;  // resolve against the Real overload
  const Real mag = exp(z.re);
  if (z.im == 0) return APComplex(mag);
  Real s, c;
  sin_cos_real(z.im, s, c);
  return {mag * c, mag * s};
}

// Principal branch: Im(log z) in (-pi, pi].
inline APComplex log(const APComplex& z) {
  using boost::multiprecision::log;
  if (z.is_zero()) throw PoleError("log(0)");
  if (z.im == 0 && z.re > 0) return APComplex(log(z.re));
  return {log(abs(z)), arg(z)};
}

inline APComplex sin(const APComplex& z) {
  Real s, c;
  sin_cos_real(z.re, s, c);
  if (z.im == 0) return APComplex(s);
  Real sh, ch;
  sinh_cosh_real(z.im, sh, ch);
  return {s * ch, c * sh};
}

inline APComplex cos(const APComplex& z) {
  Real s, c;
  sin_cos_real(z.re, s, c);
  if (z.im == 0) return APComplex(c);
  Real sh, ch;
  sinh_cosh_real(z.im, sh, ch);
  return {c * ch, -s * sh};
}

inline APComplex pow_int(const APComplex& b, long e) {
  if (e == 0) return APComplex(1);
  if (b.im == 0) return APComplex(pow_int(b.re, e));
  const bool neg = e < 0;
  unsigned long m = neg ? static_cast<unsigned long>(-(e + 1)) + 1ul
                        : static_cast<unsigned long>(e);
  APComplex acc(1), base = b;
  while (m > 0) {
    if (m & 1ul) acc *= base;
    m >>= 1;
    if (m) base *= base;
  }
  if (neg) {
    if (b.is_zero()) throw PoleError("pow_int: 0 raised to a negative power");
    return APComplex(1) / acc;
  }
  return acc;
}

// Principal-branch power b^e = exp(e log b); 0^e is 0 for Re(e) > 0.
inline APComplex pow(const APComplex& b, const APComplex& e) {
  using boost::multiprecision::pow;
  if (b.is_zero()) {
    if (e.re > 0) return APComplex(0);
    throw PoleError("pow: zero base with nonpositive real exponent");
  }
  if (e.im == 0 && b.im == 0 && b.re > 0) return APComplex(pow(b.re, e.re));
  return exp(e * log(b));
}

inline APComplex sqrt(const APComplex& z) {
  using boost::multiprecision::sqrt;
  if (z.im == 0 && z.re >= 0) return APComplex(sqrt(z.re));
  return pow(z, APComplex(Real(1) / 2));
}

// Principal arctangent: -(i/2) log((1+iz)/(1-iz)); branch points at +/-i.
inline APComplex atan(const APComplex& z) {
  using boost::multiprecision::atan;
  if (z.im == 0) return APComplex(atan(z.re));
  const APComplex iz(-z.im, z.re);
  const APComplex r = log((APComplex(1) + iz) / (APComplex(1) - iz));
  return {r.im / 2, -r.re / 2};
}

inline std::string format_complex(const APComplex& z, unsigned digits10) {
  if (z.im == 0) return format_real(z.re, digits10);
  const std::string im_part = format_real(z.im, digits10);
  const bool neg = !im_part.empty() && im_part[0] == '-';
  return format_real(z.re, digits10) + (neg ? " - " : " + ") +
         (neg ? im_part.substr(1) : im_part) + "*i";
}

}  // namespace appellzeta
