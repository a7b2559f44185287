#pragma once

// Arbitrary-precision special functions on the complex plane.
//
// Precision protocol: every public function reads the ambient working
// precision on entry, computes with 15 guard digits, and rounds the result
// back to the entry precision. Tail bounds target 10^-(entry+5) so the
// rounded value is honest to its last digit.

#include <utility>

#include "appellzeta/bernoulli.hpp"
#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/rational.hpp"
#include "appellzeta/real.hpp"

namespace appellzeta {

struct EMSettings {
  long pivot = 0;        // N: terms summed directly (0 = derive from precision)
  long corrections = 0;  // M: correction pairs (0 = adapt until the tail bound holds)
};

namespace detail {

inline bool is_nonpositive_int(const APComplex& z) {
  using boost::multiprecision::floor;
  return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

inline Real pow10_real(long e) { return pow_int(Real(10), e); }

inline APComplex round_complex(const APComplex& z, unsigned digits10) {
  return {round_to(z.re, digits10), round_to(z.im, digits10)};
}

// log Gamma by the Stirling asymptotic series; requires Re(w) large enough
// (arranged by the callers' argument raising) so the series bottoms out below
// the target before its terms regrow.
inline APComplex log_gamma_stirling(const APComplex& w, const Real& floor_mag) {
  using boost::multiprecision::log;
  const APComplex half(Real(1) / 2);
  APComplex acc = (w - half) * log(w) - w + APComplex(log(Real(2) * const_pi()) / 2);
  const APComplex winv2 = pow_int(w, -2);
  APComplex wp = APComplex(1) / w;  // w^{1-2j}, starting at j = 1
  Real prev(0);
  bool have_prev = false;
  for (long j = 1; j <= 2000; ++j) {
    const Rational c = bernoulli_number(2 * j) / Rational(2L * j * (2L * j - 1));
    const APComplex term = APComplex(to_real(c)) * wp;
    acc += term;
    const Real mag = abs(term);
    if (mag < floor_mag) return acc;
    if (have_prev && mag > prev)
      throw ConvergenceError("log_gamma: asymptotic terms regrew before the target; shift too small");
    prev = mag;
    have_prev = true;
    wp = wp * winv2;
  }
  throw ConvergenceError("log_gamma: correction budget exhausted");
}

// digamma by the matching asymptotic series.
inline APComplex digamma_stirling(const APComplex& w, const Real& floor_mag) {
  using boost::multiprecision::log;
  APComplex acc = log(w) - APComplex(1) / (APComplex(2) * w);
  const APComplex winv2 = pow_int(w, -2);
  APComplex wp = winv2;  // w^{-2j}
  Real prev(0);
  bool have_prev = false;
  for (long j = 1; j <= 2000; ++j) {
    const Rational c = bernoulli_number(2 * j) / Rational(2 * j);
    const APComplex term = APComplex(to_real(c)) * wp;
    acc -= term;
    const Real mag = abs(term);
    if (mag < floor_mag) return acc;
    if (have_prev && mag > prev)
      throw ConvergenceError("digamma: asymptotic terms regrew before the target; shift too small");
    prev = mag;
    have_prev = true;
    wp = wp * winv2;
  }
  throw ConvergenceError("digamma: correction budget exhausted");
}

}  // namespace detail

// Euler--Maclaurin pivot/correction choice for the requested digit target.
inline EMSettings choose_em_settings(const APComplex& s, unsigned digits10) {
  using boost::multiprecision::ceil;
  using boost::multiprecision::log;
  const Real digits(static_cast<long>(digits10));
  Real n_prec = ceil(digits * log(Real(10)) / log(Real(2) * const_pi()));
  Real n_mag = ceil(abs(s));
  Real n_im = ceil(abs(s.im) / 2);
  long N = static_cast<long>(n_prec) + static_cast<long>(n_im) + 1;
  N = std::max(N, static_cast<long>(n_mag) + 1);
  return EMSettings{N, 0};
}

namespace detail {

struct HurwitzEval {
  APComplex value;
  APComplex value_ds;
  Real peak;  // sum of piece magnitudes, for cancellation accounting
};

// Shared Euler--Maclaurin core for zeta(s, a) and, optionally, its
// s-derivative. Values are computed at the ambient precision; callers guard
// and retry with more digits when `peak` reveals cancellation.
inline HurwitzEval hurwitz_core(const APComplex& s, const APComplex& a,
                                EMSettings settings, unsigned entry_digits,
                                bool with_ds) {
  using boost::multiprecision::floor;
  if (s.im == 0 && s.re == 1) throw PoleError("hurwitz_zeta: pole at s = 1");

  if (settings.pivot <= 0) settings = EMSettings{choose_em_settings(s, entry_digits + 15).pivot, settings.corrections};
  const long N = settings.pivot;

  if (a.im == 0 && a.re <= 0 && floor(a.re) == a.re) {
    if (-a.re < Real(N))
      throw DomainError("hurwitz_zeta: a is a nonpositive integer inside the summation window");
  }
  if (a.re + Real(N) <= 0)
    throw DomainError("hurwitz_zeta: pivot window must reach Re(a + N) > 0");

  // Direct block: sum_{n<N} (n+a)^{-s} (and -log(n+a)(n+a)^{-s} for d/ds).
  const APComplex minus_s = -s;
  APComplex direct(0), direct_ds(0);
  Real peak(0);
  for (long n = 0; n < N; ++n) {
    const APComplex base = APComplex(n) + a;
    const APComplex p = pow(base, minus_s);
    direct += p;
    peak += abs(p);
    if (with_ds) direct_ds -= log(base) * p;
  }

  // Boundary terms at w = N + a.
  const APComplex w = APComplex(N) + a;
  const APComplex logw = log(w);
  const APComplex w_1ms = pow(w, APComplex(1) - s);  // w^{1-s}
  const APComplex winv = APComplex(1) / w;
  const APComplex w_ms = w_1ms * winv;  // w^{-s}
  const APComplex sm1 = s - APComplex(1);
  const APComplex b1 = w_1ms / sm1, b2 = w_ms / APComplex(2);
  APComplex value = direct + b1 + b2;
  peak += abs(b1) + abs(b2);
  APComplex value_ds = direct_ds;
  if (with_ds) {
    value_ds += (APComplex(0) - logw) * b1 - b1 / sm1;
    value_ds -= logw * b2;
  }

  // Correction sum: B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}, with the tail bound
  // |(s+2M+1)/(sigma+2M+1)| * |first omitted term| (valid once sigma+2M+1 > 0).
  const Real target = detail::pow10_real(-static_cast<long>(entry_digits) - 5) *
                      std::max(Real(1), abs(value));
  const Real log_factor = Real(1) + abs(logw);
  const APComplex winv2 = winv * winv;
  APComplex poch = s;       // (s)_{2j-1} at j = 1
  APComplex dpoch(1);       // its d/ds
  APComplex wp = w_ms * winv;  // w^{-s-2j+1} at j = 1
  const long mcap = settings.corrections > 0 ? settings.corrections : 1200;
  const bool adaptive = settings.corrections <= 0;
  bool met = !adaptive;
  for (long j = 1; j <= mcap; ++j) {
    const Rational c = bernoulli_number(2 * j) / Rational(factorial_int(2 * j));
    const APComplex cr(to_real(c));
    const APComplex term = cr * poch * wp;
    value += term;
    peak += abs(term);
    if (with_ds) value_ds += cr * (dpoch * wp - poch * logw * wp);
    // advance (s)_{2j-1} -> (s)_{2j+1} and w^{-s-2j+1} -> w^{-s-2j-1}
    const APComplex f1 = s + APComplex(2 * j - 1), f2 = s + APComplex(2 * j);
    if (with_ds) dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch = poch * f1 * f2;
    wp = wp * winv2;
    if (adaptive && j >= 2 && s.re + Real(2 * j + 1) > 0) {
      // Bound the first omitted term from the already-advanced factors. The
      // derivative tail needs its own bound: its Pochhammer derivative can
      // stay alive after (s)_{2j+1} collapses to zero at negative integer s.
      const Real cnext = abs(to_real(bernoulli_number(2 * j + 2) /
                                     Rational(factorial_int(2 * j + 2))));
      const Real ratio = abs(s + APComplex(2 * j + 1)) / (s.re + Real(2 * j + 1));
      const Real wpmag = abs(wp);
      const Real omitted_v = cnext * abs(poch) * wpmag;
      const bool ok_v = ratio * omitted_v < target;
      const bool ok_ds = !with_ds ||
                         ratio * cnext * (abs(dpoch) + abs(poch) * log_factor) * wpmag *
                                 log_factor <
                             target;
      if (ok_v && ok_ds) {
        met = true;
        break;
      }
    }
  }
  if (!met)
    throw ConvergenceError("hurwitz_zeta: Euler--Maclaurin tail bound not met within the correction cap");
  return {value, value_ds, peak};
}

// Retries with extra digits when the direct block cancels against the
// boundary terms (large |s| with negative real part makes the pieces peak far
// above the result).
inline detail::HurwitzEval hurwitz_eval(const APComplex& s, const APComplex& a,
                                        EMSettings settings, unsigned entry, bool with_ds) {
  using boost::multiprecision::ceil;
  using boost::multiprecision::log10;
  unsigned extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    PrecisionGuard guard(entry + 15 + extra);
    const auto r = detail::hurwitz_core(s, a, settings, entry + extra, with_ds);
    const Real scale = std::max(Real(1), abs(r.value));
    const Real lost = r.peak / scale;
    if (lost <= detail::pow10_real(static_cast<long>(extra) + 8)) return r;
    extra = static_cast<unsigned>(static_cast<long>(ceil(log10(lost)))) + 5;
  }
  throw ConvergenceError("hurwitz_zeta: cancellation exceeded the retry budget");
}

}  // namespace detail

inline APComplex hurwitz_zeta(const APComplex& s, const APComplex& a, EMSettings settings = {}) {
  const unsigned entry = working_digits();
  const auto r = detail::hurwitz_eval(s, a, settings, entry, false);
  return detail::round_complex(r.value, entry);
}

inline APComplex hurwitz_zeta_ds(const APComplex& s, const APComplex& a, EMSettings settings = {}) {
  const unsigned entry = working_digits();
  const auto r = detail::hurwitz_eval(s, a, settings, entry, true);
  return detail::round_complex(r.value_ds, entry);
}

inline APComplex riemann_zeta(const APComplex& s) { return hurwitz_zeta(s, APComplex(1)); }
inline APComplex riemann_zeta_ds(const APComplex& s) { return hurwitz_zeta_ds(s, APComplex(1)); }

inline APComplex gamma(const APComplex& z) {
  using boost::multiprecision::ceil;
  if (detail::is_nonpositive_int(z)) throw PoleError("gamma: pole at nonpositive integer");
  const unsigned entry = working_digits();
  PrecisionGuard guard(entry + 15);
  const unsigned P = working_digits();
  const Real floor_mag = detail::pow10_real(-static_cast<long>(P) - 5);

  if (z.re < Real(1) / 2) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    const Real pi = const_pi();
    const APComplex spz = sin(APComplex(pi) * z);
    if (spz.is_zero()) throw PoleError("gamma: pole at nonpositive integer");
    const APComplex rest = gamma(APComplex(1) - z);
    return detail::round_complex(APComplex(pi) / (spz * rest), entry);
  }

  const long S = static_cast<long>(0.40 * P) + 10;
  long shift = 0;
  if (z.re < Real(S)) shift = static_cast<long>(ceil(Real(S) - z.re));
  const APComplex w = z + APComplex(shift);
  const APComplex lg = detail::log_gamma_stirling(w, floor_mag);
  APComplex denom(1);
  for (long i = 0; i < shift; ++i) denom *= z + APComplex(i);
  return detail::round_complex(exp(lg) / denom, entry);
}

inline APComplex digamma(const APComplex& z) {
  using boost::multiprecision::ceil;
  if (detail::is_nonpositive_int(z)) throw PoleError("digamma: pole at nonpositive integer");
  const unsigned entry = working_digits();
  PrecisionGuard guard(entry + 15);
  const unsigned P = working_digits();
  const Real floor_mag = detail::pow10_real(-static_cast<long>(P) - 5);

  if (z.re < Real(1) / 2) {
    // reflection: psi(z) = psi(1 - z) - pi cot(pi z)
    const Real pi = const_pi();
    const APComplex pz = APComplex(pi) * z;
    const APComplex s = sin(pz), c = cos(pz);
    if (s.is_zero()) throw PoleError("digamma: pole at nonpositive integer");
    const APComplex rest = digamma(APComplex(1) - z);
    return detail::round_complex(rest - APComplex(pi) * c / s, entry);
  }

  const long S = static_cast<long>(0.40 * P) + 10;
  long shift = 0;
  if (z.re < Real(S)) shift = static_cast<long>(ceil(Real(S) - z.re));
  const APComplex w = z + APComplex(shift);
  APComplex acc = detail::digamma_stirling(w, floor_mag);
  for (long i = 0; i < shift; ++i) acc -= APComplex(1) / (z + APComplex(i));
  return detail::round_complex(acc, entry);
}

// psi^{(m)}(z) = (-1)^{m+1} m! zeta(m+1, z), m >= 1.
inline APComplex polygamma(long m, const APComplex& z) {
  if (m < 1) throw ContractError("polygamma: order must be >= 1");
  if (detail::is_nonpositive_int(z)) throw PoleError("polygamma: pole at nonpositive integer");
  const unsigned entry = working_digits();
  PrecisionGuard guard(entry + 15);
  APComplex v;
  try {
    v = hurwitz_zeta(APComplex(m + 1), z);
  } catch (const DomainError&) {
    throw PoleError("polygamma: pole at nonpositive integer");
  }
  const Real mfact = to_real(factorial_int(m));
  const APComplex r = (m % 2 == 0) ? APComplex(0) - APComplex(mfact) * v : APComplex(mfact) * v;
  return detail::round_complex(r, entry);
}

// Catalan's constant as (psi'(1/4) - psi'(3/4))/16 at the requested precision.
inline APComplex catalan(unsigned prec) {
  if (prec < 10) throw ContractError("catalan: precision below 10 digits");
  PrecisionGuard guard(prec + 15);
  const APComplex quarter(Real(1) / 4), three_quarter(Real(3) / 4);
  const APComplex v = (polygamma(1, quarter) - polygamma(1, three_quarter)) / APComplex(16);
  return detail::round_complex(v, prec);
}

// Lerch transcendent sum_{m>=0} w^m (m+a)^{-s} inside |w| <= 0.99.
inline APComplex lerch_phi(const APComplex& w, const APComplex& s, const APComplex& a) {
  if (detail::is_nonpositive_int(a))
    throw DomainError("lerch_phi: a must not be a nonpositive integer");
  const unsigned entry = working_digits();
  PrecisionGuard guard(entry + 15);
  const Real wmag = abs(w);
  if (wmag > Real(99) / 100)
    throw DomainError("lerch_phi: |w| must be <= 0.99 for the direct series");

  const Real target = detail::pow10_real(-static_cast<long>(entry) - 10);
  // geometric tail factor |w|/(1-|w|)
  const Real geo = wmag == 0 ? Real(0) : wmag / (Real(1) - wmag);

  const bool s_int = s.im == 0 && boost::multiprecision::floor(s.re) == s.re &&
                     abs(s.re) < Real(1000000);
  const long s_i = s_int ? static_cast<long>(s.re) : 0;

  APComplex acc(0);
  APComplex wpow(1);
  long small_streak = 0;
  const long cap = 2000000;
  for (long m = 0; m <= cap; ++m) {
    const APComplex base = APComplex(m) + a;
    const APComplex term = s_int ? wpow * pow_int(base, -s_i) : wpow * pow(base, -s);
    acc += term;
    const Real tail_est = abs(term) * geo;
    if (tail_est < target * std::max(Real(1), abs(acc))) {
      if (++small_streak >= 3) return detail::round_complex(acc, entry);
    } else {
      small_streak = 0;
    }
    wpow *= w;
  }
  throw ConvergenceError("lerch_phi: series did not meet its tail bound within the term cap");
}

// 2F1(1, b; b+1; w) = b * Phi(w, 1, b), on the same restricted disk.
inline APComplex hyp2f1_unit(const APComplex& b, const APComplex& w) {
  if (detail::is_nonpositive_int(b))
    throw DomainError("hyp2f1_unit: b must not be a nonpositive integer");
  return b * lerch_phi(w, APComplex(1), b);
}

// Generalized harmonic number H_z^{(r)}: zeta(r) - zeta(r, z+1), with the
// digamma route at r = 1.
inline APComplex gen_harmonic(const APComplex& z, const APComplex& r) {
  const unsigned entry = working_digits();
  PrecisionGuard guard(entry + 15);
  if (r.im == 0 && r.re == 1) {
    const APComplex v = digamma(z + APComplex(1)) + APComplex(const_euler_gamma());
    return detail::round_complex(v, entry);
  }
  const APComplex v = riemann_zeta(r) - hurwitz_zeta(r, z + APComplex(1));
  return detail::round_complex(v, entry);
}

// 1/(k)_{1-d} for d >= 0, as a pole-free finite product:
//   d = 0 -> 1/k;  d = 1 -> 1;  d >= 2 -> prod_{i=1}^{d-1} (k - i).
inline APComplex recip_pochhammer_shift(const APComplex& k, long d) {
  if (d < 0) throw ContractError("recip_pochhammer_shift: d must be nonnegative");
  if (d == 0) {
    if (k.is_zero()) throw PoleError("recip_pochhammer_shift: 1/(k)_1 with k = 0");
    return APComplex(1) / k;
  }
  if (d == 1) return APComplex(1);
  APComplex acc(1);
  for (long i = 1; i <= d - 1; ++i) acc *= k - APComplex(i);
  return acc;
}

}  // namespace appellzeta
