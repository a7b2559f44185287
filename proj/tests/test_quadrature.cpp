#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "appellzeta/quadrature.hpp"
#include "test_util.hpp"

using namespace appellzeta;
using aztest::agrees_to;

TEST_CASE("integrate_semiinf: exponential and algebraic decay") {
  PrecisionGuard g(50);
  const auto expf = [](const Real& x) { return APComplex(exp(-x)); };
  const QuadResult q1 = integrate_semiinf(expf, 50);
  CHECK(agrees_to(q1.value, APComplex(1), 48));
  CHECK(q1.error_estimate < detail::pow10_real(-45));
  CHECK(q1.levels_used >= 3);

  // Gamma(3) = 2
  const auto gam3 = [](const Real& x) { return APComplex(x * x * exp(-x)); };
  CHECK(agrees_to(integrate_semiinf(gam3, 50).value, APComplex(2), 48));

  // int (1+x)^{-5/2} dx = 2/3: only algebraic decay in x
  const auto alg = [](const Real& x) {
    return APComplex(pow(1 + x, Real(-5) / 2));
  };
  CHECK(agrees_to(integrate_semiinf(alg, 50).value, APComplex(Rational(2, 3)), 47));
}

TEST_CASE("integrate_semiinf: complex integrand") {
  PrecisionGuard g(50);
  // int e^{-(1-i)x} dx = 1/(1-i) = (1+i)/2
  const APComplex rate(Real(-1), Real(1));
  const auto osc = [&](const Real& x) { return exp(rate * APComplex(x)); };
  CHECK(agrees_to(integrate_semiinf(osc, 50).value,
                  {Real(1) / 2, Real(1) / 2}, 47));
  CHECK_THROWS_AS(integrate_semiinf(osc, 5), ContractError);
}

TEST_CASE("hurwitz_integral: frozen anchors") {
  PrecisionGuard g(50);
  const auto oracle = [](const char* d) { return Real(d, working_digits()); };
  CHECK(agrees_to(hurwitz_integral(APComplex(3), APComplex(Real(1) / 2), 50),
                  APComplex(oracle("8.41439832211715999779816713058014993535490404638349217254590")), 47));
  CHECK(agrees_to(hurwitz_integral({Real(2), Real(3)}, APComplex(Rational(5, 4)), 50),
                  {oracle("0.307890052653195487637182301828112785413315005005153353879263"),
                   oracle("-0.415089086524043999389035229798885543120167225467685351279840")},
                  46));
}

TEST_CASE("hurwitz_integral: agrees with the series route on random points") {
  PrecisionGuard g(50);
  std::mt19937 rng(660113);
  std::uniform_real_distribution<double> sd(1.0, 6.0), ad(0.0, 4.0);
  for (int t = 0; t < 10; ++t) {
    const APComplex s(Real(1) / 1000 + Real(sd(rng)));
    const APComplex a(Real(1) / 1000 + Real(ad(rng)));
    const APComplex qi = hurwitz_integral(s, a, 50);
    const APComplex em = hurwitz_zeta(s, a);
    CHECK(agrees_to(qi, em, 45));
  }
}

TEST_CASE("hurwitz_integral: domain checks") {
  CHECK_THROWS_AS(hurwitz_integral(APComplex(Real(1) / 2), APComplex(1), 30), DomainError);
  CHECK_THROWS_AS(hurwitz_integral(APComplex(1), APComplex(1), 30), DomainError);
  CHECK_THROWS_AS(hurwitz_integral(APComplex(2), APComplex(-1), 30), DomainError);
}

TEST_CASE("hermite_tail_integral: frozen anchor and boundary assembly") {
  PrecisionGuard g(50);
  const auto oracle = [](const char* d) { return Real(d, working_digits()); };
  CHECK(agrees_to(hermite_tail_integral(APComplex(-2), APComplex(1), 50),
                  APComplex(oracle("0.603599580529289999449541782645037483838726011595873043136475")), 47));

  // zeta(s, a) = a^{-s}/2 + a^{1-s}/(s-1) + 2^{s-1} * tail(1-s, 2a)
  const auto assembly = [](const APComplex& s, const APComplex& a) {
    const APComplex tail = hermite_tail_integral(APComplex(1) - s, APComplex(2) * a, 50);
    return pow(a, APComplex(0) - s) / APComplex(2) +
           pow(a, APComplex(1) - s) / (s - APComplex(1)) +
           pow(APComplex(2), s - APComplex(1)) * tail;
  };
  {
    const APComplex s(3), a(Real(1) / 2);
    CHECK(agrees_to(assembly(s, a), hurwitz_zeta(s, a), 45));
  }
  {
    const APComplex s(Real(5) / 2), a(Real(4) / 5);
    CHECK(agrees_to(assembly(s, a), hurwitz_zeta(s, a), 45));
  }
  {
    // complex a exercises the complex arctangent branch
    const APComplex s(2), a(Real(4) / 5, Real(3) / 10);
    CHECK(agrees_to(assembly(s, a), hurwitz_zeta(s, a), 44));
  }
  CHECK_THROWS_AS(hermite_tail_integral(APComplex(-2), APComplex(-1), 30), DomainError);
}
