#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "appellzeta/bernoulli.hpp"
#include "appellzeta/series.hpp"

using namespace appellzeta;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

Series from(std::initializer_list<Rational> cs) {
  Series s;
  s.coeffs.assign(cs);
  return s;
}

Rational random_rational(std::mt19937& rng, long max_abs_num = 9, long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace

TEST_CASE("series arithmetic: add, sub, mul, truncation semantics") {
  const Series a = from({q(1), q(1), q(0)});   // 1 + z
  const Series b = from({q(1), q(-1), q(0)});  // 1 - z
  REQUIRE(series_arith(a, b, SeriesOp::add).coeffs == from({q(2), q(0), q(0)}).coeffs);
  REQUIRE(series_arith(a, b, SeriesOp::mul).coeffs == from({q(1), q(0), q(-1)}).coeffs);
  // z * z at order 2: the z^2 coefficient is truncated away
  const Series z2 = series_z(2);
  REQUIRE(series_mul(z2, z2).coeffs == series_zero(2).coeffs);
  // scale dispatch requires a constant series
  REQUIRE(series_arith(a, series_const(q(3), 3), SeriesOp::scale).coeffs ==
          from({q(3), q(3), q(0)}).coeffs);
  REQUIRE_THROWS_AS(series_arith(a, b, SeriesOp::scale), ContractError);
  REQUIRE_THROWS_AS(series_add(a, series_zero(5)), ContractError);
}

TEST_CASE("series_exp: explicit expansions and precondition") {
  REQUIRE(series_exp(series_zero(3)).coeffs == series_const(q(1), 3).coeffs);
  REQUIRE(series_exp(series_z(4)).coeffs ==
          from({q(1), q(1), q(1, 2), q(1, 6)}).coeffs);
  // exp(-2z) at order 3
  const Series minus2z = series_scale(series_z(3), q(-2));
  REQUIRE(series_exp(minus2z).coeffs == from({q(1), q(-2), q(2)}).coeffs);
  REQUIRE(series_exp_linear(q(-2), 3).coeffs == from({q(1), q(-2), q(2)}).coeffs);
  REQUIRE_THROWS_AS(series_exp(series_const(q(1), 3)), ContractError);
}

TEST_CASE("series_recip: explicit expansions, precondition, two-sided inverse") {
  REQUIRE(series_recip(series_const(q(1), 4)).coeffs == series_const(q(1), 4).coeffs);
  // 1/(1 - z) = 1 + z + z^2
  Series one_minus_z = series_const(q(1), 3);
  one_minus_z.coeffs[1] = q(-1);
  REQUIRE(series_recip(one_minus_z).coeffs == from({q(1), q(1), q(1)}).coeffs);
  // (e^z - 1)/z reciprocal = 1 - z/2 + z^2/12
  Series em1z = from({q(1), q(1, 2), q(1, 6)});
  REQUIRE(series_recip(em1z).coeffs == from({q(1), q(-1, 2), q(1, 12)}).coeffs);
  REQUIRE_THROWS_AS(series_recip(series_z(3)), ContractError);

  std::mt19937 rng(20240817);
  for (long order : {1L, 2L, 3L, 8L, 16L, 33L, 64L}) {
    Series a = series_zero(order);
    do {
      a.coeffs[0] = random_rational(rng);
    } while (a.coeffs[0] == 0);
    for (long i = 1; i < order; ++i) a.coeffs[static_cast<std::size_t>(i)] = random_rational(rng);
    const Series r = series_recip(a);
    const Series one = series_const(q(1), order);
    REQUIRE(series_mul(a, r).coeffs == one.coeffs);
    REQUIRE(series_mul(r, a).coeffs == one.coeffs);
  }
}

TEST_CASE("series_pow_compose: powers and valuation") {
  REQUIRE(series_pow_compose(series_z(5), 3).coeffs ==
          from({q(0), q(0), q(0), q(1), q(0)}).coeffs);
  // (z(1-z))^2 = z^2 - 2z^3 + z^4
  Series zz = series_z(5);
  Series z_one_minus_z = series_mul(zz, series_sub(series_const(q(1), 5), zz));
  REQUIRE(series_pow_compose(z_one_minus_z, 2).coeffs ==
          from({q(0), q(0), q(1), q(-2), q(1)}).coeffs);
  // (z e^{-z})^2 at order 4 = z^2 - 2z^3
  const Series u = series_mul(series_z(4), series_exp_linear(q(-1), 4));
  REQUIRE(series_pow_compose(u, 2).coeffs == from({q(0), q(0), q(1), q(-2)}).coeffs);
  // n = 0 is the constant 1
  REQUIRE(series_pow_compose(series_z(3), 0).coeffs == series_const(q(1), 3).coeffs);
}

TEST_CASE("series reciprocal is an independent oracle for the number cache") {
  // n! * [z^n] (z/(e^z - 1)) must equal the cached value for every n <= 30.
  const long order = 31;
  Series em1_over_z = series_zero(order);
  Rational f(1);
  for (long m = 0; m < order; ++m) {
    f = m == 0 ? q(1) : f / Rational(m + 1);
    em1_over_z.coeffs[static_cast<std::size_t>(m)] = f;
  }
  const Series recip = series_recip(em1_over_z);
  const auto numbers = bernoulli_numbers(order - 1);
  Rational nfact(1);
  for (long n = 0; n < order; ++n) {
    if (n > 0) nfact *= Rational(n);
    REQUIRE(recip.coeffs[static_cast<std::size_t>(n)] * nfact ==
            numbers[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("gf_check: plain kinds at fixed points") {
  const GFReport r1 = gf_check(GFKind::bernoulli_plain, q(0), q(0), 8);
  REQUIRE(r1.equal);
  REQUIRE(r1.first_mismatch == -1);
  const GFReport r2 = gf_check(GFKind::euler_plain, q(1, 2), q(0), 8);
  REQUIRE(r2.equal);
  // order 2 with y = 0 degenerates to the plain identities
  REQUIRE(gf_check(GFKind::euler_appell, q(1, 2), q(0), 2).equal);
  REQUIRE(gf_check(GFKind::bernoulli_appell, q(1, 3), q(1, 5), 16).equal);
}

TEST_CASE("gf_check: closed-form coefficients reproduce polynomial values") {
  // n! * [z^n] of the closed Bernoulli form equals B_n(x) for n <= 24.
  const Rational x = q(2, 7);
  const long order = 25;
  Series em1_over_z = series_zero(order);
  Rational f(1);
  for (long m = 0; m < order; ++m) {
    f = m == 0 ? q(1) : f / Rational(m + 1);
    em1_over_z.coeffs[static_cast<std::size_t>(m)] = f;
  }
  const Series rhs = series_mul(series_exp_linear(x, order), series_recip(em1_over_z));
  Rational nfact(1);
  for (long n = 0; n < order; ++n) {
    if (n > 0) nfact *= Rational(n);
    REQUIRE(rhs.coeffs[static_cast<std::size_t>(n)] * nfact ==
            eval_rational(bernoulli_poly(n), x));
  }
}

TEST_CASE("gf_check: randomized sweep over all four kinds") {
  std::mt19937 rng(971203);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x = random_rational(rng);
    Rational y = random_rational(rng);  // |y| <= 1 by construction below
    while (y > 1 || y < -1) y /= q(2);
    for (GFKind kind : {GFKind::bernoulli_plain, GFKind::euler_plain,
                        GFKind::bernoulli_appell, GFKind::euler_appell}) {
      const GFReport rep = gf_check(kind, x, y, 24);
      INFO("kind=" << gf_kind_name(kind) << " x=" << x.str() << " y=" << y.str());
      REQUIRE(rep.equal);
    }
  }
}
