#pragma once

// Semi-infinite quadrature on a double-exponential node map, plus the two
// integral representations the verification harness cross-checks against.

#include <functional>

#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/real.hpp"
#include "appellzeta/specfun.hpp"

namespace appellzeta {

struct QuadResult {
  APComplex value;
  Real error_estimate;
  int levels_used = 0;
};

// Trapezoid ladder for int_0^inf f(x) dx under x = exp((pi/2) sinh t).
// Each level halves the step; node scans stop once the transformed integrand
// stays below the truncation cutoff (three misses, so isolated zeros of an
// oscillatory integrand cannot end a scan early).
inline QuadResult integrate_semiinf(const std::function<APComplex(const Real&)>& f,
                                    unsigned prec) {
  if (prec < 10) throw ContractError("integrate_semiinf: precision below 10 digits");
  PrecisionGuard guard(prec + 10);
  const Real pi_half = const_pi() / 2;
  const Real cutoff_rel = detail::pow10_real(-static_cast<long>(prec) - 12);
  const Real stop_rel = detail::pow10_real(-static_cast<long>(prec) - 3);

  const auto eval = [&](const Real& t) {
    Real sh, ch;
    sinh_cosh_real(t, sh, ch);
    const Real x = exp(pi_half * sh);
    return f(x) * APComplex(x * pi_half * ch);
  };

  APComplex prev(0);
  bool have_prev = false;
  Real h = Real(1) / 2;
  for (int level = 0; level < 14; ++level) {
    APComplex acc = eval(Real(0));
    Real gmax = abs(acc);
    for (const int dir : {1, -1}) {
      int miss = 0;
      long i = 1;
      for (; i <= 200000; ++i) {
        const Real t = Real(dir) * Real(i) * h;
        const APComplex g = eval(t);
        acc += g;
        const Real m = abs(g);
        if (m > gmax) gmax = m;
        if (m < cutoff_rel * std::max(Real(1), gmax)) {
          if (++miss >= 3) break;
        } else {
          miss = 0;
        }
      }
      if (i > 200000)
        throw ConvergenceError("integrate_semiinf: transformed integrand failed to decay");
    }
    const APComplex ih = acc * APComplex(h);
    if (have_prev) {
      const Real diff = abs(ih - prev);
      if (diff <= stop_rel * std::max(Real(1), abs(ih))) {
        QuadResult out;
        out.value = detail::round_complex(ih, prec);
        out.error_estimate = diff + cutoff_rel * std::max(Real(1), gmax);
        out.levels_used = level + 1;
        return out;
      }
    }
    prev = ih;
    have_prev = true;
    h /= 2;
  }
  throw ConvergenceError("integrate_semiinf: level ladder exhausted before the target");
}

// zeta(s, a) = (1/Gamma(s)) int_0^inf x^{s-1} e^{-a x} / (1 - e^{-x}) dx,
// valid for Re(s) > 1, Re(a) > 0. Serves as an independent cross-check of the
// series-based evaluation.
inline QuadResult hurwitz_integral_result(const APComplex& s, const APComplex& a,
                                          unsigned prec) {
  if (!(s.re > 1)) throw DomainError("hurwitz_integral: requires Re(s) > 1");
  if (!(a.re > 0)) throw DomainError("hurwitz_integral: requires Re(a) > 0");
  PrecisionGuard guard(prec + 10);
  const APComplex sm1 = s - APComplex(1);
  const auto f = [&](const Real& x) {
    const Real den = -expm1_real(-x);  // 1 - e^{-x}, stable near 0
    const APComplex num = pow(APComplex(x), sm1) * exp(APComplex(0) - a * APComplex(x));
    return num / APComplex(den);
  };
  QuadResult q = integrate_semiinf(f, prec + 5);
  const APComplex g = gamma(s);
  q.value = detail::round_complex(q.value / g, prec);
  q.error_estimate /= abs(g);
  return q;
}

inline APComplex hurwitz_integral(const APComplex& s, const APComplex& a, unsigned prec) {
  return hurwitz_integral_result(s, a, prec).value;
}

// int_0^inf 2^{1+k} (y^2 + c^2/4)^{(k-1)/2} sin((1-k) atan(2y/c)) / (e^{2 pi y} - 1) dy
// for Re(c) > 0; the y -> 0 endpoint is removable and never sampled by the
// node map.
inline QuadResult hermite_tail_integral_result(const APComplex& k, const APComplex& c,
                                               unsigned prec) {
  if (!(c.re > 0)) throw DomainError("hermite_tail_integral: requires Re(c) > 0");
  PrecisionGuard guard(prec + 10);
  const APComplex pre = pow(APComplex(2), APComplex(1) + k);
  const APComplex kexp = (k - APComplex(1)) / APComplex(2);
  const APComplex c24 = c * c / APComplex(4);
  const APComplex omk = APComplex(1) - k;
  const Real two_pi = 2 * const_pi();
  const auto f = [&](const Real& y) {
    const Real den = expm1_real(two_pi * y);  // e^{2 pi y} - 1
    const APComplex r2 = APComplex(y * y) + c24;
    const APComplex ang = atan(APComplex(2 * y) / c);
    return pre * pow(r2, kexp) * sin(omk * ang) / APComplex(den);
  };
  QuadResult q = integrate_semiinf(f, prec + 5);
  q.value = detail::round_complex(q.value, prec);
  return q;
}

inline APComplex hermite_tail_integral(const APComplex& k, const APComplex& c, unsigned prec) {
  return hermite_tail_integral_result(k, c, prec).value;
}

}  // namespace appellzeta
