#pragma once

// Truncated formal power series over the exact rationals. A Series of order N
// retains coefficients of z^0 .. z^{N-1}; every operation is exact, so the
// generating-function checks below carry no floating-point tolerance at all.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "appellzeta/bernoulli.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/poly.hpp"
#include "appellzeta/rational.hpp"

namespace appellzeta {

struct Series {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies z^i; size() is the order
};

inline long series_order(const Series& s) { return static_cast<long>(s.coeffs.size()); }

inline Series series_zero(long order) {
  if (order < 1) throw ContractError("series: order must be >= 1");
  return Series{std::vector<Rational>(static_cast<std::size_t>(order), Rational(0))};
}

inline Series series_const(const Rational& c, long order) {
  Series s = series_zero(order);
  s.coeffs[0] = c;
  return s;
}

// The series z (truncated to the requested order).
inline Series series_z(long order) {
  Series s = series_zero(order);
  if (order > 1) s.coeffs[1] = Rational(1);
  return s;
}

enum class SeriesOp { add, sub, mul, scale };

namespace detail {

inline void require_same_order(const Series& a, const Series& b) {
  if (a.coeffs.size() != b.coeffs.size())
    throw ContractError("series: order mismatch between operands");
}

}  // namespace detail

inline Series series_add(const Series& a, const Series& b) {
  detail::require_same_order(a, b);
  Series r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline Series series_sub(const Series& a, const Series& b) {
  detail::require_same_order(a, b);
  Series r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

// Cauchy product truncated to the common order.
inline Series series_mul(const Series& a, const Series& b) {
  detail::require_same_order(a, b);
  Series r = series_zero(series_order(a));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.coeffs.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

inline Series series_scale(const Series& a, const Rational& c) {
  Series r = a;
  for (auto& v : r.coeffs) v *= c;
  return r;
}

// Single dispatch point matching the operation enumeration; `scale` expects b
// to be a constant series and multiplies by its constant term.
inline Series series_arith(const Series& a, const Series& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return series_add(a, b);
    case SeriesOp::sub:
      return series_sub(a, b);
    case SeriesOp::mul:
      return series_mul(a, b);
    case SeriesOp::scale:
      for (std::size_t i = 1; i < b.coeffs.size(); ++i)
        if (b.coeffs[i] != 0)
          throw ContractError("series_arith: scale operand must be a constant series");
      return series_scale(a, b.coeffs.empty() ? Rational(0) : b.coeffs[0]);
  }
  throw ContractError("series_arith: unknown operation");
}

// exp(a) for a with zero constant term, via the derivative recurrence
// g_m = (1/m) * sum_{j=1..m} j a_j g_{m-j}, g_0 = 1.
inline Series series_exp(const Series& a) {
  if (a.coeffs[0] != 0)
    throw ContractError("series_exp: constant term must be zero");
  const long n = series_order(a);
  Series g = series_zero(n);
  g.coeffs[0] = Rational(1);
  for (long m = 1; m < n; ++m) {
    Rational acc(0);
    for (long j = 1; j <= m; ++j) {
      if (a.coeffs[static_cast<std::size_t>(j)] == 0) continue;
      acc += Rational(j) * a.coeffs[static_cast<std::size_t>(j)] *
             g.coeffs[static_cast<std::size_t>(m - j)];
    }
    g.coeffs[static_cast<std::size_t>(m)] = acc / Rational(m);
  }
  return g;
}

// 1/a for a with nonzero constant term: r_0 = 1/a_0,
// r_m = -(1/a_0) * sum_{j=1..m} a_j r_{m-j}.
inline Series series_recip(const Series& a) {
  if (a.coeffs[0] == 0)
    throw ContractError("series_recip: constant term must be nonzero");
  const long n = series_order(a);
  Series r = series_zero(n);
  const Rational inv0 = Rational(1) / a.coeffs[0];
  r.coeffs[0] = inv0;
  for (long m = 1; m < n; ++m) {
    Rational acc(0);
    for (long j = 1; j <= m; ++j) {
      if (a.coeffs[static_cast<std::size_t>(j)] == 0) continue;
      acc += a.coeffs[static_cast<std::size_t>(j)] * r.coeffs[static_cast<std::size_t>(m - j)];
    }
    r.coeffs[static_cast<std::size_t>(m)] = -inv0 * acc;
  }
  return r;
}

// base^n by binary powering with truncated products. For a base of valuation
// >= 1 the result has valuation >= n, which is what makes the bilateral checks
// below finite.
inline Series series_pow_compose(const Series& base, long n) {
  if (n < 0) throw ContractError("series_pow_compose: n must be nonnegative");
  Series acc = series_const(Rational(1), series_order(base));
  Series b = base;
  for (long m = n; m > 0; m >>= 1) {
    if (m & 1) acc = series_mul(acc, b);
    if (m > 1) b = series_mul(b, b);
  }
  return acc;
}

// --- generating-function checks ---

enum class GFKind { bernoulli_plain, euler_plain, bernoulli_appell, euler_appell };

inline const char* gf_kind_name(GFKind kind) {
  switch (kind) {
    case GFKind::bernoulli_plain: return "bernoulli_plain";
    case GFKind::euler_plain: return "euler_plain";
    case GFKind::bernoulli_appell: return "bernoulli_appell";
    case GFKind::euler_appell: return "euler_appell";
  }
  return "?";
}

struct GFReport {
  GFKind kind;
  Rational x, y;
  long order = 0;
  bool equal = false;
  long first_mismatch = -1;  // -1 when equal
  std::string note;          // how the two sides were formed
};

// e^{c z} truncated: coefficients c^m / m!.
inline Series series_exp_linear(const Rational& c, long order) {
  Series s = series_zero(order);
  Rational term(1);
  for (long m = 0; m < order; ++m) {
    s.coeffs[static_cast<std::size_t>(m)] = term;
    term = term * c / Rational(m + 1);
  }
  return s;
}

// Compares, coefficient by coefficient, the expansion of
//   sum_n P_n(x + n y) u^n / n!   with   u = z e^{-y z}
// against the closed product form, entirely as exact series in z. For the
// plain kinds y is ignored and u = z. P is the Bernoulli family (with its
// closed form z e^{xz}/(e^z - 1)) or the Euler family (2 e^{xz}/(e^z + 1));
// the appell kinds multiply the closed form by 1/(1 - y z).
inline GFReport gf_check(GFKind kind, const Rational& x, const Rational& y, long order) {
  if (order < 1) throw ContractError("gf_check: order must be >= 1");
  const bool bernoulli =
      kind == GFKind::bernoulli_plain || kind == GFKind::bernoulli_appell;
  const bool appell =
      kind == GFKind::bernoulli_appell || kind == GFKind::euler_appell;
  const Rational yy = appell ? y : Rational(0);

  // LHS: the substituted sum. u = z e^{-y z} has valuation 1, so terms with
  // n >= order cannot touch retained coefficients.
  Series u = series_mul(series_z(order), series_exp_linear(-yy, order));
  Series lhs = series_zero(order);
  Series upow = series_const(Rational(1), order);
  Rational nfact(1);
  for (long n = 0; n < order; ++n) {
    if (n > 0) {
      upow = series_mul(upow, u);
      nfact *= Rational(n);
    }
    const Poly pn = bernoulli ? bernoulli_poly(n) : euler_poly(n);
    const Rational pval = eval_rational(pn, x + Rational(n) * yy);
    lhs = series_add(lhs, series_scale(upow, pval / nfact));
  }

  // RHS: closed form assembled from independent primitives.
  Series rhs;
  if (bernoulli) {
    // z e^{xz}/(e^z - 1) = e^{xz} * recip((e^z - 1)/z), the latter built from
    // its explicit coefficients 1/(m+1)!.
    Series em1_over_z = series_zero(order);
    Rational f(1);
    for (long m = 0; m < order; ++m) {
      f = m == 0 ? Rational(1) : f / Rational(m + 1);
      em1_over_z.coeffs[static_cast<std::size_t>(m)] = f;
    }
    rhs = series_mul(series_exp_linear(x, order), series_recip(em1_over_z));
  } else {
    Series ez_plus_1 = series_exp_linear(Rational(1), order);
    ez_plus_1.coeffs[0] += Rational(1);
    rhs = series_scale(series_mul(series_exp_linear(x, order), series_recip(ez_plus_1)),
                       Rational(2));
  }
  if (appell) {
    Series one_minus_yz = series_const(Rational(1), order);
    if (order > 1) one_minus_yz.coeffs[1] = -yy;
    rhs = series_mul(rhs, series_recip(one_minus_yz));
  }

  GFReport rep;
  rep.kind = kind;
  rep.x = x;
  rep.y = yy;
  rep.order = order;
  rep.equal = true;
  rep.note =
      "both sides expanded in z with the left-hand sum substituted at "
      "u = z*exp(-y*z); comparison is exact, coefficient by coefficient";
  for (long i = 0; i < order; ++i) {
    if (lhs.coeffs[static_cast<std::size_t>(i)] != rhs.coeffs[static_cast<std::size_t>(i)]) {
      rep.equal = false;
      rep.first_mismatch = i;
      break;
    }
  }
  return rep;
}

}  // namespace appellzeta
