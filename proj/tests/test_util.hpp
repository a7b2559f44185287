#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "appellzeta/complexmp.hpp"
#include "appellzeta/real.hpp"

namespace aztest {

using appellzeta::APComplex;
using appellzeta::Real;

// |got - want| <= 10^-digits * max(1, |want|)
inline bool agrees_to(const Real& got, const Real& want, unsigned digits) {
  using boost::multiprecision::abs;
  const Real scale = abs(want) > 1 ? abs(want) : Real(1);
  const Real tol = appellzeta::pow_int(Real(10), -static_cast<long>(digits)) * scale;
  const bool ok = abs(got - want) <= tol;
  if (!ok) {
    UNSCOPED_INFO("got  = " << got.str(30, std::ios_base::scientific));
    UNSCOPED_INFO("want = " << want.str(30, std::ios_base::scientific));
    UNSCOPED_INFO("diff = " << Real(abs(got - want)).str(5, std::ios_base::scientific));
  }
  return ok;
}

inline bool agrees_to(const APComplex& got, const APComplex& want, unsigned digits) {
  const Real scale = abs(want) > 1 ? abs(want) : Real(1);
  const Real tol = appellzeta::pow_int(Real(10), -static_cast<long>(digits)) * scale;
  const bool ok = abs(got - want) <= tol;
  if (!ok) {
    UNSCOPED_INFO("got  = " << appellzeta::format_complex(got, 30));
    UNSCOPED_INFO("want = " << appellzeta::format_complex(want, 30));
    UNSCOPED_INFO("diff = " << Real(abs(got - want)).str(5, std::ios_base::scientific));
  }
  return ok;
}

}  // namespace aztest
