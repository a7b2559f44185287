#pragma once

// Free parameters for the identity cases, plus text parsing for CLI
// overrides. Values are stored as exact Gaussian rationals so that a
// parameter like 1/3 loses nothing at parse time and converts to the
// engine's working precision at the point of use. Decimal inputs ("2.5e-1")
// convert exactly through the rational parser.

#include <cctype>
#include <optional>
#include <string>
#include <utility>

#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/rational.hpp"
#include "appellzeta/real.hpp"

namespace appellzeta {

struct ParamValue {
  Rational re{0};
  Rational im{0};
};

inline bool operator==(const ParamValue& a, const ParamValue& b) {
  return a.re == b.re && a.im == b.im;
}

inline APComplex to_complex(const ParamValue& v) { return {to_real(v.re), to_real(v.im)}; }

inline ParamValue param_of(long num, long den = 1) { return {Rational(num, den), Rational(0)}; }

inline ParamValue param_of(long re_num, long re_den, long im_num, long im_den) {
  return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

struct Params {
  std::optional<ParamValue> a, alpha, beta, gamma, delta, k, x, y, z;
  std::optional<long> q;
};

// Accepts "<re>", "<im>i", "<re>+<im>i", "<re>-<im>i" with each part a
// rational or decimal; bare "i", "+i", "-i" are unit imaginary parts.
inline ParamValue parse_param_value(const std::string& raw) {
  std::string s;
  for (const char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ContractError("parse_param_value: empty value");
  if (s.back() != 'i' && s.back() != 'I') return {parse_rational(s), Rational(0)};

  s.pop_back();  // drop the imaginary marker
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if (s[pos] != '+' && s[pos] != '-') continue;
    const char before = s[pos - 1];
    if (before == 'e' || before == 'E' || before == '+' || before == '-' || before == '/')
      continue;
    split = pos;
    break;
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = s;
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_rational(re_part), parse_rational(im_part)};
}

inline void set_param(Params& params, const std::string& key, const std::string& value) {
  if (key == "q") {
    const Rational r = parse_rational(value);
    if (boost::multiprecision::denominator(r) != 1)
      throw ContractError("parameter q must be an integer");
    params.q = static_cast<long>(boost::multiprecision::numerator(r));
    return;
  }
  const ParamValue v = parse_param_value(value);
  if (key == "a") params.a = v;
  else if (key == "alpha") params.alpha = v;
  else if (key == "beta") params.beta = v;
  else if (key == "gamma") params.gamma = v;
  else if (key == "delta") params.delta = v;
  else if (key == "k") params.k = v;
  else if (key == "x") params.x = v;
  else if (key == "y") params.y = v;
  else if (key == "z") params.z = v;
  else throw ContractError("unknown parameter key: " + key);
}

inline std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string format_param_value(const ParamValue& v) {
  if (v.im == 0) return format_rational(v.re);
  std::string im_txt = format_rational(v.im) + "i";
  if (v.re == 0) return im_txt;
  if (v.im > 0) return format_rational(v.re) + "+" + im_txt;
  return format_rational(v.re) + im_txt;  // sign carried by the numerator
}

namespace detail {

inline const ParamValue& need(const std::optional<ParamValue>& field, const char* name) {
  if (!field) throw ContractError(std::string("case requires parameter ") + name);
  return *field;
}

}  // namespace detail

// "key=value key=value ..." rendering for reports; only present fields appear.
inline std::string format_params(const Params& params) {
  std::string out;
  const auto put = [&](const char* name, const std::optional<ParamValue>& v) {
    if (!v) return;
    if (!out.empty()) out += " ";
    out += std::string(name) + "=" + format_param_value(*v);
  };
  put("a", params.a);
  put("alpha", params.alpha);
  put("beta", params.beta);
  put("gamma", params.gamma);
  put("delta", params.delta);
  put("k", params.k);
  put("x", params.x);
  put("y", params.y);
  put("z", params.z);
  if (params.q) {
    if (!out.empty()) out += " ";
    out += "q=" + std::to_string(*params.q);
  }
  return out;
}

}  // namespace appellzeta
