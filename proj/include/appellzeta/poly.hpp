#pragma once

// Dense polynomials over the exact rationals. Coefficient index i holds the
// coefficient of x^i; the zero polynomial is stored as the single coefficient 0.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/rational.hpp"
#include "appellzeta/real.hpp"

namespace appellzeta {

struct Poly {
  std::vector<Rational> coeffs{Rational(0)};
};

inline Poly poly_from_coeffs(std::vector<Rational> c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(Rational(0));
  return Poly{std::move(c)};
}

inline Poly poly_const(const Rational& c) { return poly_from_coeffs({c}); }

inline long poly_degree(const Poly& p) { return static_cast<long>(p.coeffs.size()) - 1; }

inline bool is_zero_poly(const Poly& p) {
  return p.coeffs.size() == 1 && p.coeffs[0] == 0;
}

inline bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return poly_from_coeffs(std::move(c));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return poly_from_coeffs(std::move(c));
}

inline Poly poly_scale(const Poly& a, const Rational& s) {
  if (s == 0) return poly_const(Rational(0));
  std::vector<Rational> c = a.coeffs;
  for (auto& v : c) v *= s;
  return poly_from_coeffs(std::move(c));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (is_zero_poly(a) || is_zero_poly(b)) return poly_const(Rational(0));
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return poly_from_coeffs(std::move(c));
}

// Formal derivative.
inline Poly diff_poly(const Poly& p) {
  if (p.coeffs.size() == 1) return poly_const(Rational(0));
  std::vector<Rational> c(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = p.coeffs[i] * Rational(static_cast<long>(i));
  return poly_from_coeffs(std::move(c));
}

// p(s*x + t), exact (Horner in the affine argument).
inline Poly poly_compose_affine(const Poly& p, const Rational& s, const Rational& t) {
  const Poly arg = poly_from_coeffs({t, s});
  Poly acc = poly_const(p.coeffs.back());
  for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
    acc = poly_add(poly_mul(acc, arg), poly_const(p.coeffs[i]));
  }
  return acc;
}

// p(x + t).
inline Poly poly_shift(const Poly& p, const Rational& t) {
  return poly_compose_affine(p, Rational(1), t);
}

inline Rational eval_rational(const Poly& p, const Rational& x) {
  Rational acc = p.coeffs.back();
  for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) acc = acc * x + p.coeffs[i];
  return acc;
}

// Horner at the current working precision. Coefficients are exact, so the only
// rounding happens here, once per coefficient operation.
inline Real eval_real(const Poly& p, const Real& x) {
  Real acc = to_real(p.coeffs.back());
  for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
    acc = acc * x + to_real(p.coeffs[i]);
  }
  return acc;
}

// Horner with `prec` requested digits (evaluated with guard digits internally).
inline APComplex eval_complex(const Poly& p, const APComplex& z, unsigned prec) {
  if (prec < 10) throw ContractError("eval_complex: prec must be at least 10");
  PrecisionGuard guard(prec + 15);
  if (z.im == 0) return APComplex(eval_real(p, Real(z.re)));
  APComplex acc(to_real(p.coeffs.back()));
  for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
    acc = acc * z + APComplex(to_real(p.coeffs[i]));
  }
  return acc;
}

// Evaluation at the ambient working precision (complex argument).
inline APComplex eval_complex(const Poly& p, const APComplex& z) {
  if (z.im == 0) return APComplex(eval_real(p, z.re));
  APComplex acc(to_real(p.coeffs.back()));
  for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
    acc = acc * z + APComplex(to_real(p.coeffs[i]));
  }
  return acc;
}

}  // namespace appellzeta
