#pragma once

// Arbitrary-precision real floating point (MPFR-backed) with scoped control of
// the working precision. Every variable carries its own precision; fresh
// values are created at the scope's default, and arithmetic propagates the
// widest operand precision, so raising the default inside a guard is enough to
// add guard digits to an entire computation.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <ios>
#include <string>

#include "appellzeta/errors.hpp"
#include "appellzeta/rational.hpp"

namespace appellzeta {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// RAII: set the thread's default precision (decimal digits), restore on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
    if (digits10 < 10) throw ContractError("PrecisionGuard: precision below 10 digits");
    Real::default_precision(digits10);
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
  ~PrecisionGuard() { Real::default_precision(saved_); }

 private:
  unsigned saved_;
};

inline unsigned working_digits() { return Real::default_precision(); }

inline Real to_real(const Rational& q) { return Real(q); }
inline Real to_real(const Int& n) { return Real(n); }

// Round a value to `digits10` (value-preserving precision change).
inline Real round_to(Real x, unsigned digits10) {
  x.precision(digits10);
  return x;
}

// --- constants at the current default precision ---

inline Real const_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real const_log2() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real const_euler_gamma() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

// MPFR's own Catalan constant; used only as an independent cross-check oracle.
inline Real const_catalan_oracle() {
  Real r;
  mpfr_const_catalan(r.backend().data(), MPFR_RNDN);
  return r;
}

// --- stable elementary helpers ---

inline Real expm1_real(const Real& x) {
  Real r(0, x.precision());
  mpfr_expm1(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline Real log1p_real(const Real& x) {
  Real r(0, x.precision());
  mpfr_log1p(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline Real hypot_real(const Real& x, const Real& y) {
  Real r(0, std::max(x.precision(), y.precision()));
  mpfr_hypot(r.backend().data(), x.backend().data(), y.backend().data(), MPFR_RNDN);
  return r;
}

inline void sin_cos_real(const Real& x, Real& s, Real& c) {
  s = Real(0, x.precision());
  c = Real(0, x.precision());
  mpfr_sin_cos(s.backend().data(), c.backend().data(), x.backend().data(), MPFR_RNDN);
}

inline void sinh_cosh_real(const Real& x, Real& sh, Real& ch) {
  sh = Real(0, x.precision());
  ch = Real(0, x.precision());
  mpfr_sinh_cosh(sh.backend().data(), ch.backend().data(), x.backend().data(), MPFR_RNDN);
}

inline Real pow_int(const Real& b, long e) {
  if (e == 0) return Real(1);
  const bool neg = e < 0;
  unsigned long m = neg ? static_cast<unsigned long>(-(e + 1)) + 1ul
                        : static_cast<unsigned long>(e);
  Real acc(1), base(b);
  while (m > 0) {
    if (m & 1ul) acc *= base;
    m >>= 1;
    if (m) base *= base;
  }
  if (neg) {
    if (b == 0) throw PoleError("pow_int: 0 raised to a negative power");
    return Real(1) / acc;
  }
  return acc;
}

// Decimal string with `digits10` significant digits (scientific, round-trip safe
// at the stated digit count).
inline std::string format_real(const Real& x, unsigned digits10) {
  return x.str(digits10, std::ios_base::scientific);
}

}  // namespace appellzeta
