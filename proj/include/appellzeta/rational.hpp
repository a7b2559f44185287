#pragma once

// Exact arithmetic layer: arbitrary-size integers and rationals (GMP-backed),
// plus the small combinatorial caches (binomials, factorials, harmonic numbers)
// shared by the polynomial and series layers.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "appellzeta/errors.hpp"

namespace appellzeta {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

namespace detail {

struct BinomialTable {
  std::mutex mu;
  std::vector<std::vector<Int>> rows{{Int(1)}};

  static BinomialTable& instance() {
    static BinomialTable t;
    return t;
  }
};

struct FactorialTable {
  std::mutex mu;
  std::vector<Int> values{Int(1)};

  static FactorialTable& instance() {
    static FactorialTable t;
    return t;
  }
};

struct HarmonicTable {
  std::mutex mu;
  std::vector<Rational> values{Rational(0)};

  static HarmonicTable& instance() {
    static HarmonicTable t;
    return t;
  }
};

}  // namespace detail

// C(n, k) via the Pascal recurrence, cached row by row.
inline Int binomial(long n, long k) {
  if (n < 0) throw ContractError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Int(0);
  auto& t = detail::BinomialTable::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  while (static_cast<long>(t.rows.size()) <= n) {
    const auto& prev = t.rows.back();
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    t.rows.push_back(std::move(row));
  }
  return t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline Int factorial_int(long n) {
  if (n < 0) throw ContractError("factorial_int: n must be nonnegative");
  auto& t = detail::FactorialTable::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  while (static_cast<long>(t.values.size()) <= n) {
    t.values.push_back(t.values.back() * Int(static_cast<long>(t.values.size())));
  }
  return t.values[static_cast<std::size_t>(n)];
}

// H_n = 1 + 1/2 + ... + 1/n exactly (H_0 = 0).
inline Rational harmonic_rational(long n) {
  if (n < 0) throw ContractError("harmonic_rational: n must be nonnegative");
  auto& t = detail::HarmonicTable::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  while (static_cast<long>(t.values.size()) <= n) {
    const long m = static_cast<long>(t.values.size());
    t.values.push_back(t.values.back() + Rational(1, m));
  }
  return t.values[static_cast<std::size_t>(n)];
}

inline Int pow_int_exact(const Int& b, long e) {
  if (e < 0) throw ContractError("pow_int_exact: negative exponent");
  Int acc(1), base(b);
  for (long m = e; m > 0; m >>= 1) {
    if (m & 1) acc *= base;
    if (m > 1) base *= base;
  }
  return acc;
}

inline Rational pow_rational(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (b == 0) throw PoleError("pow_rational: 0 raised to a negative power");
    return Rational(1) / pow_rational(b, -e);
  }
  Rational acc(1), base(b);
  for (long m = e; m > 0; m >>= 1) {
    if (m & 1) acc *= base;
    if (m > 1) base *= base;
  }
  return acc;
}

// Decimal-only integer parse. (The Int string constructor honors C-style base
// prefixes, so "0125" would otherwise read as octal.)
inline Int parse_int_decimal(const std::string& s) {
  if (s.empty()) throw DomainError("parse_int_decimal: empty string");
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw DomainError("parse_int_decimal: no digits in '" + s + "'");
  while (pos + 1 < s.size() && s[pos] == '0') ++pos;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("parse_int_decimal: invalid character in '" + s + "'");
  }
  Int v(s.substr(pos));
  return neg ? Int(-v) : v;
}

// Parses an exact rational from "p", "p/q", or a decimal string such as
// "-0.125" or "2.5e3". Decimals convert exactly (digits over a power of ten).
inline Rational parse_rational(const std::string& text) {
  const std::string s = [&] {
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
  }();
  if (s.empty()) throw DomainError("parse_rational: empty string");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw DomainError("parse_rational: malformed fraction '" + text + "'");
    const Int n = parse_int_decimal(num), d = parse_int_decimal(den);
    if (d == 0) throw DomainError("parse_rational: zero denominator in '" + text + "'");
    return Rational(n) / Rational(d);
  }

  std::string mantissa = s;
  long exp10 = 0;
  const auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    const std::string exppart = s.substr(epos + 1);
    if (exppart.empty() || mantissa.empty())
      throw DomainError("parse_rational: malformed exponent in '" + text + "'");
    exp10 = std::stol(exppart);
  }

  std::string digits = mantissa;
  long frac_digits = 0;
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
  }
  Rational value{parse_int_decimal(digits)};
  const long shift = exp10 - frac_digits;
  if (shift > 0) value *= Rational(pow_int_exact(Int(10), shift));
  if (shift < 0) value /= Rational(pow_int_exact(Int(10), -shift));
  return value;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace appellzeta
