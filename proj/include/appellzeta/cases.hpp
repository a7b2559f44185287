#pragma once

// Registry of verifiable identities. Each case binds a left-hand side (an
// anti-diagonal double sum or a single sum driven by the summation engine) to
// an independently computed right-hand side, together with a parameter
// domain, pinned defaults, and a default tolerance calibrated to the
// empirically attainable accuracy plateau of the (asymptotic) sum.

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "appellzeta/bernoulli.hpp"
#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/params.hpp"
#include "appellzeta/poly.hpp"
#include "appellzeta/quadrature.hpp"
#include "appellzeta/rational.hpp"
#include "appellzeta/real.hpp"
#include "appellzeta/specfun.hpp"
#include "appellzeta/summation.hpp"

namespace appellzeta {

struct EvalOptions {
  unsigned precision = 50;
  std::optional<double> tolerance;  // overrides the case default when set
  long max_diagonals = 400;
  bool override_domain = false;  // skip domain checks; divergence detection still applies
};

struct VerificationReport {
  std::string case_id;
  std::string params_text;
  unsigned precision = 50;
  double tolerance = 0;
  APComplex lhs, rhs;
  Real abs_err{0}, rel_err{0};
  long diagonals_used = 0;
  bool converged = false;
  bool used_abs_compare = false;  // |rhs| too small for a meaningful relative error
  bool pass = false;
  std::string note;
};

struct IdentityCase {
  std::string id;
  std::string description;
  std::string domain_doc;
  Params defaults;
  double default_tolerance = 1e-25;
  bool single_sum = false;
  std::function<DoubleSummand(const Params&)> make_double;
  std::function<SingleSummand(const Params&)> make_single;
  std::function<APComplex(const Params&, unsigned prec)> rhs;
  std::function<void(const Params&)> check_domain;
  // Optional exact side condition evaluated with every verification run;
  // the text is appended to the report note and a failure fails the case.
  std::function<std::pair<bool, std::string>()> subcheck;
};

namespace detail {

// ---------------------------------------------------------------------------
// Per-evaluation workspace. Built inside the summation precision guard so all
// conversions from exact parameters happen once, at full working precision.
// ---------------------------------------------------------------------------

struct SumWorkspace {
  // raw parameter values
  APComplex a, alpha, beta, gamma, delta, k, x, y;
  long q = 1;

  // effective configuration for the shared bilateral summand
  APComplex A;  // base offset: base = A - beta*n - delta*p
  APComplex K;  // weight order: exponent K - n - p - 2 and factor 1/(K)_{1-n-p}
  bool K_is_int = false;
  long K_int = 0;

  // exact base lattices for pole detection (floating zeros are not reliable)
  Rational A_re{0}, A_im{0}, be_re{0}, be_im{0}, de_re{0}, de_im{0};
  Rational A2_re{0}, A2_im{0}, be2_re{0}, be2_im{0}, de2_re{0}, de2_im{0};

  // polynomial-value caches: family 1 is primary, family 2 serves the
  // two-base cases
  APComplex e_shift, e_step, b_shift, b_step;
  APComplex e2_shift, e2_step, b2_shift, b2_step;
  std::vector<APComplex> ecache, bcache, e2cache, b2cache;

  std::vector<Real> fact{Real(1)};
  std::vector<Real> harm{Real(0)};
  std::vector<APComplex> rpcache;  // 1/(K)_{1-d}
  std::vector<APComplex> rfcache;  // (1-K)_{d-1}
  std::unordered_map<long, APComplex> diag_memo;
  APComplex const1;  // case-specific precomputed constant

  void set_lattice(const ParamValue& av, const ParamValue& bev, const ParamValue& dev) {
    A_re = av.re;
    A_im = av.im;
    be_re = bev.re;
    be_im = bev.im;
    de_re = dev.re;
    de_im = dev.im;
  }
  void set_lattice2(const ParamValue& av, const ParamValue& bev, const ParamValue& dev) {
    A2_re = av.re;
    A2_im = av.im;
    be2_re = bev.re;
    be2_im = bev.im;
    de2_re = dev.re;
    de2_im = dev.im;
  }
  bool base_vanishes(long n, long p) const {
    return A_re - be_re * n - de_re * p == 0 && A_im - be_im * n - de_im * p == 0;
  }
  bool base2_vanishes(long n, long p) const {
    return A2_re - be2_re * n - de2_re * p == 0 && A2_im - be2_im * n - de2_im * p == 0;
  }

  const Real& factorial(long n) {
    while (static_cast<long>(fact.size()) <= n)
      fact.push_back(fact.back() * Real(static_cast<long>(fact.size())));
    return fact[static_cast<std::size_t>(n)];
  }
  const Real& harmonic(long m) {  // H_m = sum_{i<=m} 1/i
    while (static_cast<long>(harm.size()) <= m)
      harm.push_back(harm.back() + Real(1) / Real(static_cast<long>(harm.size())));
    return harm[static_cast<std::size_t>(m)];
  }
  const APComplex& rp(long d) {  // 1/(K)_{1-d} as a pole-free product
    if (rpcache.empty()) {
      if (K.is_zero()) throw PoleError("pochhammer weight 1/(k)_1 with k = 0");
      rpcache.push_back(APComplex(1) / K);
    }
    while (static_cast<long>(rpcache.size()) <= d) {
      const long m = static_cast<long>(rpcache.size());
      rpcache.push_back(m == 1 ? APComplex(1) : rpcache.back() * (K - APComplex(m - 1)));
    }
    return rpcache[static_cast<std::size_t>(d)];
  }
  const APComplex& rising_one_minus_k(long d) {  // (1-K)_{d-1}; d=0 -> 1/(-K)
    if (rfcache.empty()) {
      if (K.is_zero()) throw PoleError("pochhammer factor (1-k)_{-1} with k = 0");
      rfcache.push_back(APComplex(1) / (-K));
    }
    while (static_cast<long>(rfcache.size()) <= d) {
      const long m = static_cast<long>(rfcache.size());
      rfcache.push_back(m == 1 ? APComplex(1)
                               : rfcache.back() * (APComplex(1) - K + APComplex(m - 2)));
    }
    return rfcache[static_cast<std::size_t>(d)];
  }

  const APComplex& euler_at(long n) {
    while (static_cast<long>(ecache.size()) <= n) {
      const long m = static_cast<long>(ecache.size());
      ecache.push_back(eval_complex(euler_poly(m), e_shift + APComplex(m) * e_step));
    }
    return ecache[static_cast<std::size_t>(n)];
  }
  const APComplex& bern_at(long p) {
    while (static_cast<long>(bcache.size()) <= p) {
      const long m = static_cast<long>(bcache.size());
      bcache.push_back(eval_complex(bernoulli_poly(m), b_shift + APComplex(m) * b_step));
    }
    return bcache[static_cast<std::size_t>(p)];
  }
  const APComplex& euler2_at(long n) {
    while (static_cast<long>(e2cache.size()) <= n) {
      const long m = static_cast<long>(e2cache.size());
      e2cache.push_back(eval_complex(euler_poly(m), e2_shift + APComplex(m) * e2_step));
    }
    return e2cache[static_cast<std::size_t>(n)];
  }
  const APComplex& bern2_at(long p) {
    while (static_cast<long>(b2cache.size()) <= p) {
      const long m = static_cast<long>(b2cache.size());
      b2cache.push_back(eval_complex(bernoulli_poly(m), b2_shift + APComplex(m) * b2_step));
    }
    return b2cache[static_cast<std::size_t>(p)];
  }
};

inline APComplex opt_value(const std::optional<ParamValue>& f) {
  return f ? to_complex(*f) : APComplex(0);
}

inline std::shared_ptr<SumWorkspace> make_workspace(const Params& P) {
  auto ws = std::make_shared<SumWorkspace>();
  ws->a = opt_value(P.a);
  ws->alpha = opt_value(P.alpha);
  ws->beta = opt_value(P.beta);
  ws->gamma = opt_value(P.gamma);
  ws->delta = opt_value(P.delta);
  ws->k = opt_value(P.k);
  ws->x = opt_value(P.x);
  ws->y = opt_value(P.y);
  if (P.q) ws->q = *P.q;
  return ws;
}

inline void set_weight_order(SumWorkspace& ws, const APComplex& K,
                             const std::optional<ParamValue>& source, bool negated) {
  ws.K = K;
  ws.K_is_int = false;
  if (source && source->im == 0 && boost::multiprecision::denominator(source->re) == 1) {
    ws.K_is_int = true;
    ws.K_int = static_cast<long>(boost::multiprecision::numerator(source->re));
    if (negated) ws.K_int = -ws.K_int;
  }
}

// The quadratic weight bracket shared by the Pochhammer-weighted double sums.
inline APComplex weight_bracket(long n, long p, const APComplex& A, const APComplex& be,
                                const APComplex& de, const APComplex& K) {
  const APComplex nn(n), pp(p);
  return de * (be * (K * K - K * APComplex(n + p + 1) + APComplex(2 * n * p + n + p)) -
               A * (K - nn + pp)) +
         (A - be * nn) * (A + be * (pp - K)) + de * de * pp * (K - nn);
}

inline APComplex lattice_base(const SumWorkspace& ws, long n, long p) {
  return ws.A - APComplex(n) * ws.beta - APComplex(p) * ws.delta;
}

inline void throw_lattice_pole(long n, long p) {
  throw PoleError("base a - beta*n - delta*p vanishes at n=" + std::to_string(n) +
                  ", p=" + std::to_string(p));
}

// Shared left-hand summand of the Pochhammer-weighted family:
//   B_p(b_shift + p b_step) E_n(e_shift + n e_step)
//     * base^{K-n-p-2} / (K)_{1-n-p} * bracket / (n! p!).
inline DoubleSummand weighted_bilateral_summand(std::shared_ptr<SumWorkspace> ws) {
  return [ws](long n, long p, const Params&) -> APComplex {
    if (ws->base_vanishes(n, p)) throw_lattice_pole(n, p);
    const long d = n + p;
    const APComplex base = lattice_base(*ws, n, p);
    const APComplex power = ws->K_is_int ? pow_int(base, ws->K_int - d - 2)
                                         : pow(base, ws->K - APComplex(d + 2));
    return ws->bern_at(p) * ws->euler_at(n) * power * ws->rp(d) *
           weight_bracket(n, p, ws->A, ws->beta, ws->delta, ws->K) /
           (ws->factorial(n) * ws->factorial(p));
  };
}

// ---------------------------------------------------------------------------
// Domain checks (each violation names the constraint it breaks)
// ---------------------------------------------------------------------------

inline void require_in_domain(bool ok, const std::string& constraint) {
  if (!ok) throw DomainError("parameter constraint violated: " + constraint);
}

inline Real opt_mag(const std::optional<ParamValue>& f) {
  return f ? abs(to_complex(*f)) : Real(0);
}

inline void check_weighted_common(const Params& P, bool with_k) {
  require_in_domain(P.a.has_value(), "a is required");
  const Real bmag = opt_mag(P.beta), dmag = opt_mag(P.delta);
  require_in_domain(bmag <= Real(1) / 2, "|beta| <= 1/2");
  require_in_domain(dmag <= Real(1) / 2, "|delta| <= 1/2");
  require_in_domain(to_real(P.a->re) >= Real(1) + bmag + dmag,
                    "Re(a) >= 1 + |beta| + |delta|");
  if (with_k) {
    require_in_domain(P.k.has_value(), "k is required");
    const APComplex kv = to_complex(*P.k);
    require_in_domain(!kv.is_zero(), "k != 0");
    require_in_domain(abs(kv) <= Real(10), "|k| <= 10");
  }
}

inline bool integer_param(const ParamValue& v, long& out) {
  if (v.im != 0) return false;
  if (boost::multiprecision::denominator(v.re) != 1) return false;
  out = static_cast<long>(boost::multiprecision::numerator(v.re));
  return true;
}

inline void check_single_sum_domain(const Params& P) {
  require_in_domain(P.a.has_value(), "a is required");
  require_in_domain(P.k.has_value(), "k is required");
  require_in_domain(P.x.has_value(), "x is required");
  const Real amag = opt_mag(P.alpha);
  require_in_domain(amag <= Real(1) / 2, "|alpha| <= 1/2");
  require_in_domain(to_real(P.a->re) >= Real(1) + amag, "Re(a) >= 1 + |alpha|");
  const APComplex kv = to_complex(*P.k);
  require_in_domain(!kv.is_zero(), "k != 0");
  require_in_domain(abs(kv) <= Real(10), "|k| <= 10");
}

inline void check_fixed_instance(const Params& P, const Params& defaults,
                                 const std::string& id) {
  const bool same = P.a == defaults.a && P.alpha == defaults.alpha &&
                    P.beta == defaults.beta && P.gamma == defaults.gamma &&
                    P.delta == defaults.delta && P.k == defaults.k && P.x == defaults.x &&
                    P.y == defaults.y && P.z == defaults.z && P.q == defaults.q;
  require_in_domain(same, id + " is a fixed printed instance; its parameters cannot be changed");
}

// Exact rational offset swept up when both arguments of the trigamma
// difference (117/4 and 39/4) are shifted into (0, 1) by the step-down
// recurrence; each unit shift of psi'(z) contributes 1/z^2 exactly.
inline Rational trigamma_shift_offset() {
  Rational lattice(0);
  for (long j = 0; j <= 28; ++j) lattice += Rational(16, (4 * j + 1) * (4 * j + 1));
  for (long j = 0; j <= 8; ++j) lattice -= Rational(16, (4 * j + 3) * (4 * j + 3));
  lattice /= 2;
  return lattice;
}

// The same offset as a pinned literal, for cross-checking the reduction.
inline Rational pinned_trigamma_offset() {
  return Rational(
      Int("75212337272621857920793935018753452980170388400522851847928913376"),
      Int("10213049603314044640247750329701049140178779927760268106012748125"));
}

// midpoint (a + alpha + gamma)/2 used by most right-hand sides
inline APComplex midpoint_v(const Params& P) {
  return (opt_value(P.a) + opt_value(P.alpha) + opt_value(P.gamma)) / Real(2);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Case registry
// ---------------------------------------------------------------------------

namespace detail {

inline ParamValue kc_default() { return param_of(1, 2, 1, 3); }  // 1/2 + i/3

inline IdentityCase make_case_T1() {
  IdentityCase c;
  c.id = "T1";
  c.description =
      "Pochhammer-weighted bilateral Bernoulli-Euler double sum against a "
      "Hurwitz zeta value";
  c.domain_doc = "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, 0 < |k| <= 10";
  c.defaults.a = param_of(22);
  c.defaults.alpha = param_of(1);
  c.defaults.beta = param_of(0);
  c.defaults.gamma = param_of(1);
  c.defaults.delta = param_of(0);
  c.defaults.k = kc_default();
  c.default_tolerance = 1e-30;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, ws->k, P.k, false);
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    return weighted_bilateral_summand(ws);
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex kv = opt_value(P.k);
    return -(pow(APComplex(2), kv) * hurwitz_zeta(APComplex(1) - kv, midpoint_v(P)));
  };
  c.check_domain = [](const Params& P) { check_weighted_common(P, true); };
  return c;
}

// Same sum as T1 with the weight written as an alternating rising factorial;
// the two summands are equal term for term, which the tests pin down.
inline IdentityCase make_case_D1() {
  IdentityCase c = make_case_T1();
  c.id = "D1";
  c.description =
      "Pochhammer-weighted double sum in rewritten alternating rising-factorial "
      "form (termwise equal to the direct form)";
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, ws->k, P.k, false);
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    return [ws](long n, long p, const Params&) -> APComplex {
      if (ws->base_vanishes(n, p)) throw_lattice_pole(n, p);
      const long d = n + p;
      const APComplex base = lattice_base(*ws, n, p);
      const APComplex power = ws->K_is_int ? pow_int(base, ws->K_int - d - 2)
                                           : pow(base, ws->K - APComplex(d + 2));
      const Real sign = (d % 2 == 0) ? Real(-1) : Real(1);  // (-1)^{d+1}
      return ws->bern_at(p) * ws->euler_at(n) * power *
             (ws->rising_one_minus_k(d) * sign) *
             weight_bracket(n, p, ws->A, ws->beta, ws->delta, ws->K) /
             (ws->factorial(n) * ws->factorial(p));
    };
  };
  return c;
}

inline IdentityCase make_case_T2() {
  IdentityCase c;
  c.id = "T2";
  c.description =
      "bilateral Euler-polynomial single sum against a two-term Hurwitz zeta "
      "(or digamma) closed form";
  c.domain_doc =
      "Re(a) >= 1+|alpha|, |alpha| <= 1/2, 0 < |k| <= 10, |k(k*alpha - a)| > 1e-6";
  c.defaults.a = param_of(30);
  c.defaults.alpha = param_of(1, 16);
  c.defaults.x = param_of(1, 3);
  c.defaults.k = kc_default();
  c.default_tolerance = 1e-30;
  c.single_sum = true;
  c.make_single = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, ws->k, P.k, false);
    ws->set_lattice(*P.a, P.alpha.value_or(param_of(0)), param_of(0));
    ws->e_shift = ws->x;
    ws->e_step = ws->alpha;
    return [ws](long n, const Params&) -> APComplex {
      if (ws->base_vanishes(n, 0))
        throw PoleError("base a - alpha*n vanishes at n=" + std::to_string(n));
      const APComplex base = ws->a - APComplex(n) * ws->alpha;
      const APComplex power = ws->K_is_int ? pow_int(base, ws->K_int - n - 1)
                                           : pow(base, ws->K - APComplex(n + 1));
      return ws->euler_at(n) * ws->rp(n) * power / ws->factorial(n);
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex a = opt_value(P.a), al = opt_value(P.alpha), x = opt_value(P.x);
    const APComplex kv = opt_value(P.k);
    const APComplex lo = (a + x) / Real(2), hi = (APComplex(1) + a + x) / Real(2);
    if (P.k->im == 0 && P.k->re == -1)  // the zeta pair degenerates to digammas
      return (digamma(lo) - digamma(hi)) / (a + al);
    return pow(APComplex(2), APComplex(1) + kv) *
           (hurwitz_zeta(-kv, hi) - hurwitz_zeta(-kv, lo)) / (kv * (kv * al - a));
  };
  c.check_domain = [](const Params& P) {
    check_single_sum_domain(P);
    const APComplex kv = to_complex(*P.k);
    const APComplex pref = kv * (kv * opt_value(P.alpha) - to_complex(*P.a));
    require_in_domain(abs(pref) > Real(1) / Real(1000000), "|k(k*alpha - a)| > 1e-6");
  };
  return c;
}

inline IdentityCase make_case_T3() {
  IdentityCase c;
  c.id = "T3";
  c.description = "bilateral Bernoulli-polynomial single sum against a Hurwitz zeta value";
  c.domain_doc = "Re(a) >= 1+|alpha|, |alpha| <= 1/2, 0 < |k| <= 10";
  c.defaults.a = param_of(18);
  c.defaults.alpha = param_of(1, 16);
  c.defaults.x = param_of(1, 2);
  c.defaults.k = kc_default();
  c.default_tolerance = 1e-30;
  c.single_sum = true;
  c.make_single = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, ws->k, P.k, false);
    ws->set_lattice(*P.a, P.alpha.value_or(param_of(0)), param_of(0));
    ws->b_shift = ws->x;
    ws->b_step = ws->alpha;
    ws->const1 = ws->a - ws->alpha * ws->k;
    return [ws](long n, const Params&) -> APComplex {
      if (ws->base_vanishes(n, 0))
        throw PoleError("base a - alpha*n vanishes at n=" + std::to_string(n));
      const APComplex base = ws->a - APComplex(n) * ws->alpha;
      const APComplex power = ws->K_is_int ? pow_int(base, ws->K_int - n - 1)
                                           : pow(base, ws->K - APComplex(n + 1));
      return -(ws->const1 * ws->rp(n) * power * ws->bern_at(n)) / ws->factorial(n);
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex kv = opt_value(P.k);
    return hurwitz_zeta(APComplex(1) - kv, opt_value(P.a) + opt_value(P.x));
  };
  c.check_domain = [](const Params& P) { check_single_sum_domain(P); };
  return c;
}

inline IdentityCase make_case_E1() {
  IdentityCase c;
  c.id = "E1";
  c.description =
      "double sum at negated positive integer order against a polygamma value";
  c.domain_doc =
      "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, k integer in [1,10]";
  c.defaults.a = param_of(30);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.defaults.k = param_of(2);
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, -ws->k, P.k, true);
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    return weighted_bilateral_summand(ws);
  };
  c.rhs = [](const Params& P, unsigned) {
    long kint = 0;
    integer_param(*P.k, kint);
    const APComplex v = midpoint_v(P);
    Real kfact(1);
    for (long i = 2; i <= kint; ++i) kfact *= Real(i);
    const Real sign = (kint % 2 == 0) ? Real(-1) : Real(1);  // (-1)^{-1-k}
    return -(pow(APComplex(2), APComplex(-kint)) * polygamma(kint, v) * sign) / kfact;
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    long kint = 0;
    require_in_domain(integer_param(*P.k, kint) && kint >= 1,
                      "k must be a positive integer");
  };
  return c;
}

inline IdentityCase make_case_E2() {
  IdentityCase c;
  c.id = "E2";
  c.description =
      "argument-scaled double sum against an average of Hurwitz zeta values over "
      "residue classes";
  c.domain_doc =
      "q integer in [2,7]; Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, "
      "0 < |k| <= 10";
  c.defaults.q = 3;
  c.defaults.a = param_of(8);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.defaults.k = kc_default();
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    const long q = ws->q;
    ws->A = ws->a * Real(q);
    set_weight_order(*ws, ws->k, P.k, false);
    ParamValue aq{P.a->re * q, P.a->im * q};
    ws->set_lattice(aq, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha * Real(q);
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma * Real(q);
    ws->b_step = ws->delta;
    return weighted_bilateral_summand(ws);
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex kv = opt_value(P.k);
    const APComplex v = midpoint_v(P);
    const long q = P.q.value_or(1);
    APComplex acc(0);
    for (long j = 0; j < q; ++j)
      acc += hurwitz_zeta(APComplex(1) - kv, APComplex(Rational(j, q)) + v);
    return -(pow(APComplex(2), kv) * pow(APComplex(q), kv - APComplex(1)) * acc);
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    require_in_domain(P.q.has_value() && *P.q >= 2 && *P.q <= 7, "q integer in [2,7]");
  };
  return c;
}

inline IdentityCase make_case_E3() {
  IdentityCase c = make_case_T1();
  c.id = "E3";
  c.description =
      "double sum against the exponential-integral representation of the Hurwitz "
      "zeta value";
  c.domain_doc =
      "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, Re(k) < 0, |k| <= 10";
  c.defaults.a = param_of(24);
  c.defaults.k = param_of(-1, 2);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.rhs = [](const Params& P, unsigned prec) {
    const APComplex kv = opt_value(P.k);
    return -(pow(APComplex(2), kv) *
             hurwitz_integral(APComplex(1) - kv, midpoint_v(P), prec + 5));
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    require_in_domain(to_real(P.k->re) < 0, "Re(k) < 0 (integral representation)");
  };
  return c;
}

inline IdentityCase make_case_E4() {
  IdentityCase c = make_case_T1();
  c.id = "E4";
  c.description =
      "double sum against a generalized-harmonic-number and zeta closed form";
  c.defaults.a = param_of(26);
  c.defaults.k = param_of(-3, 2);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.rhs = [](const Params& P, unsigned) {
    const APComplex kv = opt_value(P.k);
    const APComplex v = midpoint_v(P);
    const APComplex h = gen_harmonic(v - APComplex(1), APComplex(1) - kv);
    return -(pow(APComplex(2), kv) * (riemann_zeta(APComplex(1) - kv) - h));
  };
  return c;
}

inline IdentityCase make_case_E5() {
  IdentityCase c = make_case_T1();
  c.id = "E5";
  c.description =
      "finite double sum at positive integer order against an exact "
      "Bernoulli-polynomial value";
  c.domain_doc =
      "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, k integer in [1,10]";
  c.defaults.a = param_of(2);
  c.defaults.k = param_of(4);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.rhs = [](const Params& P, unsigned) {
    long kint = 0;
    integer_param(*P.k, kint);
    const APComplex bv = eval_complex(bernoulli_poly(kint), midpoint_v(P));
    return pow_int(APComplex(2), kint) * bv / Real(kint);
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    long kint = 0;
    require_in_domain(integer_param(*P.k, kint) && kint >= 1,
                      "k must be a positive integer");
  };
  return c;
}

inline IdentityCase make_case_E6() {
  IdentityCase c = make_case_T1();
  c.id = "E6";
  c.description =
      "double sum against a boundary-plus-tail integral evaluation of the zeta value";
  c.defaults.a = param_of(28);
  c.defaults.k = param_of(-5, 2);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.rhs = [](const Params& P, unsigned prec) {
    const APComplex kv = opt_value(P.k);
    const APComplex cc = opt_value(P.a) + opt_value(P.alpha) + opt_value(P.gamma);
    return -pow(cc, kv - APComplex(1)) + pow(cc, kv) / kv -
           hermite_tail_integral(kv, cc, prec + 5);
  };
  return c;
}

inline IdentityCase make_case_E7() {
  IdentityCase c;
  c.id = "E7";
  c.description =
      "finite double sum at integer order against a trigonometric Dirichlet series";
  c.domain_doc =
      "k integer in [2,10]; a+alpha+gamma real with (a+alpha+gamma)/2 in (0,1]; "
      "Re(a) >= 1+|beta|+|delta|";
  c.defaults.a = param_of(1);
  c.defaults.alpha = param_of(1, 4);
  c.defaults.beta = param_of(0);
  c.defaults.gamma = param_of(1, 4);
  c.defaults.delta = param_of(0);
  c.defaults.k = param_of(9);
  c.default_tolerance = 1e-25;
  c.make_double = make_case_T1().make_double;
  c.rhs = [](const Params& P, unsigned prec) {
    long kint = 0;
    integer_param(*P.k, kint);
    // v here is the full offset a+alpha+gamma, not the midpoint
    const Real v = to_real(P.a->re + P.alpha->re + P.gamma->re);
    const Real pi = const_pi();
    // sum_{m>=1} m^{-k} sin(m*pi*v + (1-k)*pi/2), three consecutive small
    // terms (relative to the running sum) end it
    const Real phase = pi * v;
    Real sphi, cphi;  // sin/cos of the per-step phase advance
    sphi = sin(phase);
    cphi = cos(phase);
    const Real theta0 = phase + Real(1 - kint) * pi / 2;
    Real s = sin(theta0), cth = cos(theta0);
    const Real target = detail::pow10_real(-static_cast<long>(prec + 5));
    Real acc(0);
    int small_streak = 0;
    const long cap = 20000000;
    long m = 1;
    for (; m <= cap; ++m) {
      const Real term = pow_int(Real(m), -kint) * s;
      acc += term;
      if (abs(term) < target * std::max(Real(1), abs(acc))) {
        if (++small_streak >= 3) break;
      } else {
        small_streak = 0;
      }
      const Real snew = s * cphi + cth * sphi;
      cth = cth * cphi - s * sphi;
      s = snew;
    }
    if (m > cap)
      throw ConvergenceError("trigonometric series did not meet the target within " +
                             std::to_string(cap) + " terms");
    Real gfact(1);
    for (long i = 2; i < kint; ++i) gfact *= Real(i);  // (k-1)!
    return APComplex(Real(-2) * pow_int(pi, -kint) * gfact * acc);
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    long kint = 0;
    require_in_domain(integer_param(*P.k, kint) && kint >= 2, "k integer >= 2");
    require_in_domain(P.alpha && P.alpha->im == 0 && P.gamma && P.gamma->im == 0 &&
                          P.a->im == 0,
                      "a, alpha, gamma real");
    const Rational v2 = (P.a->re + P.alpha->re + P.gamma->re) / 2;
    require_in_domain(v2 > 0 && v2 <= 1, "(a+alpha+gamma)/2 in (0,1]");
  };
  return c;
}

inline IdentityCase make_case_E8() {
  IdentityCase c;
  c.id = "E8";
  c.description = "difference-of-scales double sum against a trigamma difference";
  c.domain_doc = "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2";
  c.defaults.a = param_of(52);
  c.defaults.alpha = param_of(1, 4);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 4);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    set_weight_order(*ws, APComplex(-1), param_of(-1), false);
    ws->A = ws->a * (Real(3) / 2);
    const ParamValue be = P.beta.value_or(param_of(0));
    const ParamValue de = P.delta.value_or(param_of(0));
    ws->set_lattice({P.a->re * Rational(3, 2), P.a->im * Rational(3, 2)}, be, de);
    ws->set_lattice2(*P.a, {be.re * 2, be.im * 2}, {de.re * 2, de.im * 2});
    ws->e_shift = ws->alpha * Real(3);
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma * Real(3);
    ws->b_step = ws->delta;
    ws->e2_shift = ws->alpha;
    ws->e2_step = ws->beta;
    ws->b2_shift = ws->gamma;
    ws->b2_step = ws->delta;
    return [ws](long n, long p, const Params&) -> APComplex {
      if (ws->base_vanishes(n, p) || ws->base2_vanishes(n, p)) throw_lattice_pole(n, p);
      const long d = n + p;
      const APComplex nn(n), pp(p);
      const APComplex& a = ws->a;
      const APComplex& be = ws->beta;
      const APComplex& de = ws->delta;
      const APComplex A1 = ws->A;  // 3a/2
      const APComplex b1 = A1 - nn * be - pp * de;
      const APComplex b2 = a - (nn * be + pp * de) * Real(2);
      const APComplex np1 = APComplex(n - p + 1);
      const APComplex prod11 = APComplex((n + 1) * (p + 1));
      const APComplex br1 = -((A1 - be * nn) * (A1 + be * (pp + APComplex(1)))) -
                            A1 * de * np1 - Real(2) * be * de * prod11 +
                            de * de * APComplex((n + 1) * p);
      const APComplex br2 = (a - Real(2) * be * nn) *
                                (a + Real(2) * be * (pp + APComplex(1))) +
                            Real(2) * a * de * np1 + Real(8) * be * de * prod11 -
                            Real(4) * de * de * APComplex((n + 1) * p);
      const APComplex t1 = ws->bern_at(p) * ws->euler_at(n) * br1 * pow_int(b1, -d - 3);
      const APComplex t2 = pow_int(Real(2), d + 1) * ws->bern2_at(p) * ws->euler2_at(n) *
                           br2 * pow_int(b2, -d - 3);
      return (t1 + t2) * ws->rp(d) / (ws->factorial(n) * ws->factorial(p));
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex w =
        opt_value(P.a) + (opt_value(P.alpha) + opt_value(P.gamma)) * Real(2);
    return (polygamma(1, w * Real(3) / 4) - polygamma(1, w / Real(4))) / Real(2);
  };
  c.check_domain = [](const Params& P) { check_weighted_common(P, false); };
  return c;
}

inline IdentityCase make_case_E9() {
  IdentityCase c;
  c.id = "E9";
  c.description =
      "fixed printed instance tying the double sum to Catalan's constant through a "
      "trigamma difference";
  c.domain_doc = "parameters fixed (a=35, alpha=1, beta=1/4, gamma=1, delta=1/8)";
  c.defaults.a = param_of(35);
  c.defaults.alpha = param_of(1);
  c.defaults.beta = param_of(1, 4);
  c.defaults.gamma = param_of(1);
  c.defaults.delta = param_of(1, 8);
  // attainable plateau: the smallest anti-diagonal of this fixed asymptotic
  // instance sits near 2.4e-9 of scale, and the stopping rule certifies a
  // tolerance only when that minimum is 30x below it, so certification flips
  // at tol ~ 2e-6; 5e-6 keeps a margin while the value itself lands ~ 2.5e-8
  c.default_tolerance = 5e-6;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    set_weight_order(*ws, APComplex(-1), param_of(-1), false);
    ws->e_shift = APComplex(3);
    ws->e_step = APComplex(Rational(1, 4));
    ws->b_shift = APComplex(3);
    ws->b_step = APComplex(Rational(1, 8));
    ws->e2_shift = APComplex(1);
    ws->e2_step = APComplex(Rational(1, 4));
    ws->b2_shift = APComplex(1);
    ws->b2_step = APComplex(Rational(1, 8));
    return [ws](long n, long p, const Params&) -> APComplex {
      const long d = n + p;
      const long ib1 = 420 - 2 * n - p, ib2 = 140 - 2 * n - p;
      if (ib1 == 0 || ib2 == 0)
        throw PoleError("integer base lattice vanishes at n=" + std::to_string(n) +
                        ", p=" + std::to_string(p));
      const APComplex t1 = ws->bern_at(p) * ws->euler_at(n) *
                           (pow_int(Real(ib1), -d - 3) *
                            Real(n * (p + 420) - 423 * p - 177664));
      const APComplex t2 = ws->bern2_at(p) * ws->euler2_at(n) *
                           (pow_int(Real(ib2), -d - 3) *
                            Real(n * (p + 140) - 143 * p - 20024));
      return pow_int(Real(8), d + 1) * ws->rp(d) * (t1 - t2) /
             (ws->factorial(n) * ws->factorial(p));
    };
  };
  c.rhs = [](const Params&, unsigned) {
    return (polygamma(1, APComplex(Rational(117, 4))) -
            polygamma(1, APComplex(Rational(39, 4)))) /
           Real(2);
  };
  c.check_domain = [](const Params& P) {
    check_fixed_instance(P, make_case_E9().defaults, "E9");
  };
  // the right-hand side equals 8*Catalan minus an exact rational; re-derive
  // that rational by exact step-down recurrence and compare with the pinned
  // literal on every run
  c.subcheck = []() -> std::pair<bool, std::string> {
    const bool ok = trigamma_shift_offset() == pinned_trigamma_offset();
    return {ok, ok ? "rational offset subcheck: exact match"
                   : "rational offset subcheck: reduction differs from the pinned fraction"};
  };
  return c;
}

inline IdentityCase make_case_D2() {
  IdentityCase c;
  c.id = "D2";
  c.description =
      "order-derivative double sum against the s-derivative of a Hurwitz zeta value";
  c.domain_doc =
      "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2, 0 < |k| <= 10, "
      "k not a nonnegative integer";
  c.defaults.a = param_of(28);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.defaults.k = param_of(-3, 2);
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    set_weight_order(*ws, ws->k, P.k, false);
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    ws->const1 = gen_harmonic(-ws->k, APComplex(1));  // H(-k)
    return [ws](long n, long p, const Params&) -> APComplex {
      if (ws->base_vanishes(n, p)) throw_lattice_pole(n, p);
      const long d = n + p;
      const APComplex& a = ws->a;
      const APComplex& be = ws->beta;
      const APComplex& de = ws->delta;
      const APComplex base = lattice_base(*ws, n, p);
      auto it = ws->diag_memo.find(d);
      if (it == ws->diag_memo.end()) {
        const APComplex hd = gen_harmonic(APComplex(d - 1) - ws->K, APComplex(1));
        it = ws->diag_memo.emplace(d, hd).first;
      }
      const APComplex q = weight_bracket(n, p, a, be, de, ws->K);
      const APComplex br = a * (be + de) - q * (log(base) - it->second + ws->const1) +
                           be * de * (APComplex(d + 1) - Real(2) * ws->K) -
                           be * be * APComplex(n) - de * de * APComplex(p);
      const APComplex power = ws->K_is_int ? pow_int(base, ws->K_int - d - 2)
                                           : pow(base, ws->K - APComplex(d + 2));
      return -(ws->bern_at(p) * ws->euler_at(n) * ws->rp(d) * power * br) /
             (ws->factorial(n) * ws->factorial(p));
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex kv = opt_value(P.k);
    const APComplex v = midpoint_v(P);
    const APComplex s = APComplex(1) - kv;
    return pow(APComplex(2), kv) *
           (hurwitz_zeta_ds(s, v) - APComplex(log(Real(2))) * hurwitz_zeta(s, v));
  };
  c.check_domain = [](const Params& P) {
    check_weighted_common(P, true);
    long kint = 0;
    require_in_domain(!(integer_param(*P.k, kint) && kint >= 0),
                      "k must not be a nonnegative integer");
  };
  return c;
}

inline IdentityCase make_case_D3() {
  IdentityCase c;
  c.id = "D3";
  c.description =
      "order-derivative double sum at second order against zeta-derivative and "
      "trigamma values";
  c.domain_doc = "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2";
  c.defaults.a = param_of(28);
  c.defaults.alpha = param_of(1, 2);
  c.defaults.beta = param_of(1, 16);
  c.defaults.gamma = param_of(1, 2);
  c.defaults.delta = param_of(1, 32);
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    return [ws](long n, long p, const Params&) -> APComplex {
      if (ws->base_vanishes(n, p)) throw_lattice_pole(n, p);
      const long d = n + p;
      const APComplex& a = ws->a;
      const APComplex& be = ws->beta;
      const APComplex& de = ws->delta;
      const APComplex nn(n), pp(p);
      const APComplex base = lattice_base(*ws, n, p);
      auto it = ws->diag_memo.find(d);
      if (it == ws->diag_memo.end()) {
        const APComplex hd = gen_harmonic(APComplex(d), APComplex(1));
        it = ws->diag_memo.emplace(d, hd).first;
      }
      const APComplex q3 = (a - be * nn) * (a + be * (pp + APComplex(1))) +
                           a * de * APComplex(n - p + 1) +
                           Real(2) * be * de * APComplex((n + 1) * (p + 1)) -
                           de * de * APComplex((n + 1) * p);
      const APComplex br = q3 * (it->second - log(base)) -
                           de * (a * APComplex(n - p) +
                                 be * APComplex(2 * n * p + n + p - 1)) -
                           (a - be * nn) * (a + be * pp) + de * de * APComplex(n * p);
      const Real sign = (d % 2 == 0) ? Real(1) : Real(-1);
      return ws->bern_at(p) * ws->euler_at(n) * pow_int(base, -d - 3) * br *
             (sign * ws->factorial(d) / (ws->factorial(n) * ws->factorial(p)));
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex v = midpoint_v(P);
    return (hurwitz_zeta_ds(APComplex(2), v) -
            APComplex(log(Real(2))) * polygamma(1, v)) /
           Real(2);
  };
  c.check_domain = [](const Params& P) { check_weighted_common(P, false); };
  return c;
}

inline IdentityCase make_case_D4() {
  IdentityCase c;
  c.id = "D4";
  c.description =
      "order-derivative double sum at third order against zeta-derivative and "
      "tetragamma values";
  c.domain_doc = "Re(a) >= 1+|beta|+|delta|, |beta| <= 1/2, |delta| <= 1/2";
  c.defaults = make_case_D3().defaults;
  c.default_tolerance = 1e-25;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->A = ws->a;
    ws->set_lattice(*P.a, P.beta.value_or(param_of(0)), P.delta.value_or(param_of(0)));
    ws->e_shift = ws->alpha;
    ws->e_step = ws->beta;
    ws->b_shift = ws->gamma;
    ws->b_step = ws->delta;
    return [ws](long n, long p, const Params&) -> APComplex {
      if (ws->base_vanishes(n, p)) throw_lattice_pole(n, p);
      const long d = n + p;
      const APComplex& a = ws->a;
      const APComplex& be = ws->beta;
      const APComplex& de = ws->delta;
      const APComplex nn(n), pp(p);
      const APComplex base = lattice_base(*ws, n, p);
      auto it = ws->diag_memo.find(d);
      if (it == ws->diag_memo.end()) {
        const APComplex hd = gen_harmonic(APComplex(d + 1), APComplex(1));
        it = ws->diag_memo.emplace(d, hd).first;
      }
      const APComplex q4 = de * (a * APComplex(n - p + 2) +
                                 be * APComplex(2 * n * p + 3 * n + 3 * p + 6)) +
                           (a - be * nn) * (a + be * (pp + APComplex(2))) -
                           de * de * APComplex((n + 2) * p);
      const APComplex br = -q4 * (it->second - log(base)) +
                           de * (a * APComplex(n - p + 1) + be +
                                 Real(2) * be * APComplex(n * p + n + p)) +
                           (a - be * nn) * (a + be * (pp + APComplex(1))) -
                           de * de * APComplex((n + 1) * p);
      const Real sign = (d % 2 == 0) ? Real(1) : Real(-1);
      return ws->bern_at(p) * ws->euler_at(n) * pow_int(base, -d - 4) * br *
             (sign * ws->factorial(d + 1) / (ws->factorial(n) * ws->factorial(p)));
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex v = midpoint_v(P);
    const Real log4m1 = Real(2) * log(Real(2)) - Real(1);
    return -hurwitz_zeta_ds(APComplex(3), v) / Real(2) -
           (APComplex(log4m1) * polygamma(2, v)) / Real(8);
  };
  c.check_domain = [](const Params& P) { check_weighted_common(P, false); };
  return c;
}

inline IdentityCase make_case_D5() {
  IdentityCase c;
  c.id = "D5";
  c.description =
      "fixed printed instance combining a zeta derivative with an explicit "
      "logarithmic constant";
  c.domain_doc = "parameters fixed (a=22, alpha=1, beta=1/4, gamma=1, delta=1/3)";
  c.defaults.a = param_of(22);
  c.defaults.alpha = param_of(1);
  c.defaults.beta = param_of(1, 4);
  c.defaults.gamma = param_of(1);
  c.defaults.delta = param_of(1, 3);
  // attainable plateau: the leading omitted anti-diagonal of this fixed
  // asymptotic instance puts certification at tol ~ 2e-5 under the 30x
  // stopping-rule margin; 5e-5 keeps headroom while the value itself lands
  // near 3.3e-7
  c.default_tolerance = 5e-5;
  c.make_double = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->e_shift = APComplex(1);
    ws->e_step = APComplex(Rational(1, 4));
    ws->b_shift = APComplex(1);
    ws->b_step = APComplex(Rational(1, 3));
    return [ws](long n, long p, const Params&) -> APComplex {
      const long d = n + p;
      const long ibase = 264 - 3 * n - 4 * p;
      if (ibase <= 0)
        throw PoleError("logarithm argument 22 - n/4 - p/3 is nonpositive at n=" +
                        std::to_string(n) + ", p=" + std::to_string(p));
      const Real base(ibase);
      const Real qh = Real(n * (p - 282) + 260 * p - 73464);
      const Real ql = Real(-n * p + 282 * n - 260 * p + 73464);
      const Real rr = Real(-n * p + 279 * n - 256 * p + 71556);
      const Real br = qh * ws->harmonic(d + 1) + ql * log(base / Real(12)) + rr;
      const Real sign = (d % 2 == 0) ? Real(1) : Real(-1);
      return ws->bern_at(p) * ws->euler_at(n) *
             (sign * pow_int(Real(12), d + 2) * pow_int(base, -d - 4) * br *
              ws->factorial(d + 1) / (ws->factorial(n) * ws->factorial(p)));
    };
  };
  c.rhs = [](const Params&, unsigned) {
    const Real l2 = log(Real(2)), l3 = log(Real(3)), l5 = log(Real(5));
    const Real l7 = log(Real(7)), l11 = log(Real(11));
    const Real l4m1 = Real(2) * l2 - Real(1);
    const APComplex zp3 = riemann_zeta_ds(APComplex(3));
    const APComplex z3 = riemann_zeta(APComplex(3));
    APComplex out = -zp3 / Real(2) + z3 * (l4m1 / 4);
    out = out - APComplex(to_real(Rational(289853, 3456000)) * l2);
    out = out - APComplex(to_real(Rational(259, 11664)) * l3);
    out = out - APComplex(to_real(Rational(25523438671457, 85200014592000)) * l4m1);
    out = out - APComplex(to_real(Rational(9, 2000)) * l5);
    out = out - APComplex(l7 / Real(686));
    out = out - APComplex(l11 / Real(2662));
    return out;
  };
  c.check_domain = [](const Params& P) {
    check_fixed_instance(P, make_case_D5().defaults, "D5");
  };
  return c;
}

inline APComplex opt_z(const Params& P) { return opt_value(P.z); }

inline void check_generating_domain(const Params& P) {
  require_in_domain(P.x.has_value(), "x is required");
  require_in_domain(P.y.has_value(), "y is required");
  require_in_domain(P.z.has_value(), "z is required");
  const APComplex x = to_complex(*P.x), y = to_complex(*P.y), z = to_complex(*P.z);
  require_in_domain(exp(to_real(P.z->re)) <= Real(9) / 10, "exp(Re z) <= 9/10");
  require_in_domain(abs(y) <= Real(1) / 2, "|y| <= 1/2");
  require_in_domain(to_real(P.x->re - P.y->re) > 0, "Re(x-y) > 0");
  const Real ratio = exp(Real(1)) * abs(y * z * exp(-(y * z)));
  require_in_domain(ratio <= Real(9) / 10, "e*|y*z*exp(-y*z)| <= 9/10");
}

inline IdentityCase make_case_X1() {
  IdentityCase c;
  c.id = "X1";
  c.description =
      "Euler-family exponential generating sum against a hypergeometric-digamma "
      "closed form";
  c.domain_doc =
      "exp(Re z) <= 9/10, |y| <= 1/2, Re(x-y) > 0, e*|y*z*exp(-y*z)| <= 9/10";
  c.defaults.x = param_of(5, 8);
  c.defaults.y = param_of(1, 8);
  c.defaults.z = param_of(-1, 2);
  c.default_tolerance = 1e-25;
  c.single_sum = true;
  c.make_single = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->e_shift = ws->x;
    ws->e_step = ws->y;
    const APComplex z = opt_z(P);
    ws->const1 = z * exp(-(ws->y * z));  // expansion variable u = z*exp(-y*z)
    return [ws](long n, const Params&) -> APComplex {
      return pow_int(ws->const1, n) * ws->euler_at(n) / ws->factorial(n + 1);
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex x = opt_value(P.x), y = opt_value(P.y), z = opt_z(P);
    const APComplex b = x - y;
    const APComplex f = hyp2f1_unit(b, -exp(z));
    return (exp(y * z) / (z * b)) *
           (Real(2) * exp(z * b) * f +
            b * (digamma(b / Real(2)) - digamma((b + APComplex(1)) / Real(2))));
  };
  c.check_domain = check_generating_domain;
  return c;
}

inline IdentityCase make_case_X2() {
  IdentityCase c;
  c.id = "X2";
  c.description =
      "Bernoulli-family exponential generating sum against a Lerch-trigamma "
      "closed form";
  c.domain_doc =
      "exp(Re z) <= 9/10, |y| <= 1/2, Re(x-y) > 0, e*|y*z*exp(-y*z)| <= 9/10";
  c.defaults.x = param_of(5, 8);
  c.defaults.y = param_of(1, 8);
  c.defaults.z = param_of(-1, 2);
  c.default_tolerance = 1e-25;
  c.single_sum = true;
  c.make_single = [](const Params& P) {
    auto ws = make_workspace(P);
    ws->b_shift = ws->x;
    ws->b_step = ws->y;
    const APComplex z = opt_z(P);
    ws->const1 = z * exp(-(ws->y * z));
    return [ws](long n, const Params&) -> APComplex {
      return pow_int(ws->const1, n) * ws->bern_at(n) / ws->factorial(n + 1);
    };
  };
  c.rhs = [](const Params& P, unsigned) {
    const APComplex x = opt_value(P.x), y = opt_value(P.y), z = opt_z(P);
    const APComplex b = x - y;
    const APComplex ez = exp(z);
    const APComplex inner =
        exp(z * b) * (b * b * lerch_phi(ez, APComplex(2), b) +
                      z * (y - x) * hyp2f1_unit(b, ez)) /
        (b * b);
    return (exp(y * z) / z) * (inner - polygamma(1, b));
  };
  c.check_domain = check_generating_domain;
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry access and evaluation
// ---------------------------------------------------------------------------

inline const std::vector<IdentityCase>& case_registry() {
  static const std::vector<IdentityCase> cases = [] {
    std::vector<IdentityCase> v;
    v.push_back(detail::make_case_D1());
    v.push_back(detail::make_case_D2());
    v.push_back(detail::make_case_D3());
    v.push_back(detail::make_case_D4());
    v.push_back(detail::make_case_D5());
    v.push_back(detail::make_case_E1());
    v.push_back(detail::make_case_E2());
    v.push_back(detail::make_case_E3());
    v.push_back(detail::make_case_E4());
    v.push_back(detail::make_case_E5());
    v.push_back(detail::make_case_E6());
    v.push_back(detail::make_case_E7());
    v.push_back(detail::make_case_E8());
    v.push_back(detail::make_case_E9());
    v.push_back(detail::make_case_T1());
    v.push_back(detail::make_case_T2());
    v.push_back(detail::make_case_T3());
    v.push_back(detail::make_case_X1());
    v.push_back(detail::make_case_X2());
    return v;
  }();
  return cases;
}

inline const IdentityCase* find_case(const std::string& id) {
  for (const auto& c : case_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline Params merge_params(const Params& base, const Params& over) {
  Params out = base;
  if (over.a) out.a = over.a;
  if (over.alpha) out.alpha = over.alpha;
  if (over.beta) out.beta = over.beta;
  if (over.gamma) out.gamma = over.gamma;
  if (over.delta) out.delta = over.delta;
  if (over.k) out.k = over.k;
  if (over.x) out.x = over.x;
  if (over.y) out.y = over.y;
  if (over.z) out.z = over.z;
  if (over.q) out.q = over.q;
  return out;
}

inline VerificationReport evaluate_case(const IdentityCase& c, const EvalOptions& opts = {},
                                        const Params& overrides = {}) {
  if (opts.precision < 20) throw ContractError("precision must be at least 20 digits");
  if (opts.max_diagonals < 3) throw ContractError("max_diagonals must be at least 3");
  const double tol = opts.tolerance.value_or(c.default_tolerance);
  if (!(tol > 0)) throw ContractError("tolerance must be positive");
  if (-std::log10(tol) > static_cast<double>(opts.precision) - 10)
    throw ContractError(
        "tolerance is tighter than the precision can certify; raise the precision");

  const Params P = merge_params(c.defaults, overrides);

  VerificationReport rep;
  rep.case_id = c.id;
  rep.params_text = format_params(P);
  rep.precision = opts.precision;
  rep.tolerance = tol;

  if (!opts.override_domain) c.check_domain(P);

  {
    PrecisionGuard guard(opts.precision + 15);
    rep.rhs = c.rhs(P, opts.precision);
  }

  SumResult sr;
  {
    // the anti-diagonal partial sums transiently overshoot before the
    // asymptotic plateau, so working precision grows with the budget
    PrecisionGuard guard(opts.precision + 15 +
                         static_cast<unsigned>(opts.max_diagonals / 2));
    Real engine_tol = Real(tol) / 30;
    const Real rmag = abs(rep.rhs);
    if (rmag > detail::pow10_real(-300) && rmag < Real(1)) engine_tol *= rmag;
    SumCaps caps;
    caps.max_diagonals = opts.max_diagonals;
    try {
      sr = c.single_sum ? sum_single(c.make_single(P), P, engine_tol, caps)
                        : sum_double(c.make_double(P), P, engine_tol, caps);
    } catch (const ConvergenceError& err) {
      sr.converged = false;
      sr.diagonals_used = caps.max_diagonals;  // thrown exactly at the budget
      sr.note = err.what();
    }
  }

  rep.lhs = sr.value;
  rep.diagonals_used = sr.diagonals_used;
  rep.converged = sr.converged;
  rep.note = sr.note;
  {
    PrecisionGuard guard(opts.precision + 15);
    rep.abs_err = abs(rep.lhs - rep.rhs);
    const Real rmag = abs(rep.rhs);
    rep.used_abs_compare = rmag < detail::pow10_real(-static_cast<long>(opts.precision) / 2);
    rep.rel_err = rep.used_abs_compare ? rep.abs_err : Real(rep.abs_err / rmag);
    rep.pass = rep.converged && rep.rel_err <= Real(tol);
  }
  if (c.subcheck) {
    const auto [ok, text] = c.subcheck();
    rep.pass = rep.pass && ok;
    rep.note = rep.note.empty() ? text : rep.note + "; " + text;
  }
  return rep;
}

inline VerificationReport evaluate_case(const std::string& id, const EvalOptions& opts = {},
                                        const Params& overrides = {}) {
  const IdentityCase* c = find_case(id);
  if (!c) throw ContractError("unknown case id: " + id);
  return evaluate_case(*c, opts, overrides);
}

// ---------------------------------------------------------------------------
// Printed-constant audits: exact bookkeeping behind the two fixed instances
// ---------------------------------------------------------------------------

struct ConstantCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::vector<ConstantCheck> paper_constants_check(unsigned prec = 60) {
  if (prec < 20) throw ContractError("precision must be at least 20 digits");
  std::vector<ConstantCheck> out;
  PrecisionGuard guard(prec + 15);
  const Real budget = detail::pow10_real(-(static_cast<long>(prec) - 5));

  // 1) the explicit rational behind the trigamma difference: shifting both
  //    trigamma arguments down to the principal strip sweeps up a finite
  //    lattice sum that must match the pinned fraction exactly
  const Rational lattice = detail::trigamma_shift_offset();
  const Rational printed = detail::pinned_trigamma_offset();
  out.push_back({"catalan-shift-rational", lattice == printed,
                 lattice == printed ? "exact rational match"
                                    : "lattice sum differs from the pinned fraction"});

  // 2) the trigamma difference re-expressed through Catalan's constant
  {
    const APComplex lhs = (polygamma(1, APComplex(Rational(117, 4))) -
                           polygamma(1, APComplex(Rational(39, 4)))) /
                          Real(2);
    const APComplex rhs = Real(8) * catalan(prec + 15) - APComplex(printed);
    const Real err = abs(lhs - rhs);
    out.push_back({"catalan-closure", err <= budget,
                   "abs err " + format_real(err, 3)});
  }

  // 3) the explicit logarithmic constant assembly against its compact form
  {
    const IdentityCase* d5 = find_case("D5");
    const APComplex assembled = d5->rhs(d5->defaults, prec);
    const Real l4m1 = Real(2) * log(Real(2)) - Real(1);
    const APComplex compact =
        -hurwitz_zeta_ds(APComplex(3), APComplex(12)) / Real(2) -
        (APComplex(l4m1) * polygamma(2, APComplex(12))) / Real(8);
    const Real err = abs(assembled - compact);
    out.push_back({"log-constant-closure", err <= budget,
                   "abs err " + format_real(err, 3)});
  }
  return out;
}

}  // namespace appellzeta
