#pragma once

// Exact Bernoulli numbers and the Bernoulli/Euler polynomial families.
//
// Production path: the convolution recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0 in
// exact rational arithmetic. The series module provides an independent oracle
// (reciprocal of (e^z - 1)/z) used by the tests, not by this code.

#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include "appellzeta/poly.hpp"
#include "appellzeta/rational.hpp"

namespace appellzeta {

namespace detail {

struct BernoulliTable {
  std::mutex mu;
  std::vector<Rational> values{Rational(1)};  // values[n] = B_n

  static BernoulliTable& instance() {
    static BernoulliTable t;
    return t;
  }

  // Extends the cached prefix to cover index n (caller holds no lock).
  void ensure(long n) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(values.size()) <= n) {
      const long m = static_cast<long>(values.size());
      if (m > 1 && (m % 2) == 1) {
        values.push_back(Rational(0));
        continue;
      }
      Rational acc(0);
      for (long j = 0; j < m; ++j) {
        if (values[static_cast<std::size_t>(j)] == 0) continue;
        acc += Rational(binomial(m + 1, j)) * values[static_cast<std::size_t>(j)];
      }
      values.push_back(-acc / Rational(m + 1));
    }
  }

  Rational get(long n) {
    ensure(n);
    std::lock_guard<std::mutex> lock(mu);
    return values[static_cast<std::size_t>(n)];
  }
};

struct PolyMemo {
  std::mutex mu;
  std::deque<Poly> polys;
};

}  // namespace detail

inline Rational bernoulli_number(long n) {
  if (n < 0) throw ContractError("bernoulli_number: n must be nonnegative");
  return detail::BernoulliTable::instance().get(n);
}

// [B_0 .. B_N], exact.
inline std::vector<Rational> bernoulli_numbers(long N) {
  if (N < 0) throw ContractError("bernoulli_numbers: N must be nonnegative");
  auto& t = detail::BernoulliTable::instance();
  t.ensure(N);
  std::lock_guard<std::mutex> lock(t.mu);
  return std::vector<Rational>(t.values.begin(), t.values.begin() + (N + 1));
}

// B_n(x) = sum_i C(n,i) B_{n-i} x^i, exact.
inline Poly bernoulli_poly(long n) {
  if (n < 0) throw ContractError("bernoulli_poly: n must be nonnegative");
  static detail::PolyMemo memo;
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    if (static_cast<std::size_t>(n) < memo.polys.size()) return memo.polys[static_cast<std::size_t>(n)];
  }
  detail::BernoulliTable::instance().ensure(n);
  std::lock_guard<std::mutex> lock(memo.mu);
  while (static_cast<long>(memo.polys.size()) <= n) {
    const long m = static_cast<long>(memo.polys.size());
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) {
      c[static_cast<std::size_t>(i)] = Rational(binomial(m, i)) * bernoulli_number(m - i);
    }
    memo.polys.push_back(poly_from_coeffs(std::move(c)));
  }
  return memo.polys[static_cast<std::size_t>(n)];
}

// E_n(x) via the scaled-Bernoulli expansion: coefficient of x^i is
// 2 C(n+1,i) B_{n+1-i} (1 - 2^{n+1-i}) / (n+1). The x^{n+1} term cancels and
// the leading coefficient comes out monic, which the tests assert.
inline Poly euler_poly(long n) {
  if (n < 0) throw ContractError("euler_poly: n must be nonnegative");
  static detail::PolyMemo memo;
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    if (static_cast<std::size_t>(n) < memo.polys.size()) return memo.polys[static_cast<std::size_t>(n)];
  }
  detail::BernoulliTable::instance().ensure(n + 1);
  std::lock_guard<std::mutex> lock(memo.mu);
  while (static_cast<long>(memo.polys.size()) <= n) {
    const long m = static_cast<long>(memo.polys.size());
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) {
      const long j = m + 1 - i;  // Bernoulli index
      const Rational bj = bernoulli_number(j);
      if (bj == 0) {
        c[static_cast<std::size_t>(i)] = Rational(0);
        continue;
      }
      const Rational two_term = Rational(1) - Rational(pow_int_exact(Int(2), j));
      c[static_cast<std::size_t>(i)] =
          Rational(2) * Rational(binomial(m + 1, i)) * bj * two_term / Rational(m + 1);
    }
    memo.polys.push_back(poly_from_coeffs(std::move(c)));
  }
  return memo.polys[static_cast<std::size_t>(n)];
}

}  // namespace appellzeta
