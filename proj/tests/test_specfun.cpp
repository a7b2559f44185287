#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "appellzeta/bernoulli.hpp"
#include "appellzeta/poly.hpp"
#include "appellzeta/specfun.hpp"
#include "test_util.hpp"

using namespace appellzeta;
using aztest::agrees_to;

namespace {

APComplex c(double re, double im = 0.0) { return {Real(re), Real(im)}; }

Real oracle(const char* digits60) { return Real(digits60, working_digits()); }

}  // namespace

TEST_CASE("gamma: exact anchors and frozen references") {
  PrecisionGuard g(50);
  // integer and half-integer anchors
  CHECK(agrees_to(gamma(APComplex(5)), APComplex(24), 45));
  CHECK(agrees_to(gamma(APComplex(Real(1) / 2)),
                  APComplex(sqrt(const_pi())), 45));
  CHECK(agrees_to(gamma(APComplex(Rational(5, 2))),
                  APComplex(oracle("1.32934038817913702047362561250585888709816209209179034616036")), 48));
  CHECK(agrees_to(gamma({Real(2), Real(1)}),
                  {oracle("0.652965496420166727838646247946084697148842619666975023158523"),
                   oracle("0.343065839816545357588735986978311486757083315508325162626763")},
                  48));
}

TEST_CASE("gamma: functional equation and reflection") {
  PrecisionGuard g(50);
  for (const APComplex z : {c(0.3, 0.7), c(2.6, -1.1), c(-1.7, 0.4), c(5.25), c(0.125)}) {
    CHECK(agrees_to(gamma(z + APComplex(1)), z * gamma(z), 45));
  }
  // Gamma(1/3) Gamma(2/3) = pi / sin(pi/3)
  const APComplex lhs = gamma(APComplex(Rational(1, 3))) * gamma(APComplex(Rational(2, 3)));
  const APComplex rhs = APComplex(const_pi()) / sin(APComplex(const_pi() / 3));
  CHECK(agrees_to(lhs, rhs, 45));
}

TEST_CASE("gamma: poles at nonpositive integers") {
  PrecisionGuard g(30);
  CHECK_THROWS_AS(gamma(APComplex(0)), PoleError);
  CHECK_THROWS_AS(gamma(APComplex(-3)), PoleError);
  CHECK_NOTHROW(gamma(c(-3.0, 0.001)));
}

TEST_CASE("digamma: anchors, recurrence, reflection") {
  PrecisionGuard g(50);
  CHECK(agrees_to(digamma(APComplex(1)), APComplex(-const_euler_gamma()), 45));
  CHECK(agrees_to(digamma(APComplex(Real(1) / 2)),
                  APComplex(-const_euler_gamma() - 2 * const_log2()), 45));
  CHECK(agrees_to(digamma(APComplex(Rational(1, 6))),
                  APComplex(oracle("-6.33212750537491479242496157484577772259049481353366914800400")), 47));
  CHECK(agrees_to(digamma({Real(3), Real(2)}),
                  {oracle("1.16459151537397752665686987046308482016388754089786145833898"),
                   oracle("0.670807282642230228386087649852887219223390131589300897805172")},
                  47));
  for (const APComplex z : {c(0.4, 0.9), c(3.7, -2.2), c(-2.3, 0.5), c(0.0625)}) {
    CHECK(agrees_to(digamma(z + APComplex(1)), digamma(z) + APComplex(1) / z, 44));
  }
  CHECK_THROWS_AS(digamma(APComplex(-7)), PoleError);
}

TEST_CASE("digamma: psi(1) against a harmonic-number limit oracle") {
  PrecisionGuard g(40);
  // gamma_E = H_N - log N - 1/(2N) + 1/(12 N^2) - 1/(120 N^4) + O(N^-6)
  const long N = 10000;
  Real h(0);
  for (long n = N; n >= 1; --n) h += Real(1) / n;
  const Real nn = Real(N);
  const Real em = h - log(nn) - 1 / (2 * nn) + 1 / (12 * nn * nn) -
                  1 / (120 * nn * nn * nn * nn);
  CHECK(agrees_to(digamma(APComplex(1)).re, -em, 25));
}

TEST_CASE("polygamma: trigamma and higher orders") {
  PrecisionGuard g(50);
  const Real pi = const_pi();
  CHECK(agrees_to(polygamma(1, APComplex(1)), APComplex(pi * pi / 6), 45));
  CHECK(agrees_to(polygamma(1, APComplex(Real(1) / 2)), APComplex(pi * pi / 2), 45));
  CHECK(agrees_to(polygamma(1, APComplex(Rational(1, 4))),
                  APComplex(oracle("17.1973291545071107392713191193352240215068944014941677005453")), 47));
  CHECK(agrees_to(polygamma(1, APComplex(Rational(3, 4))),
                  APComplex(oracle("2.54187964767160649839766288041707824912050441298741355228136")), 47));
  CHECK(agrees_to(polygamma(2, APComplex(Rational(3, 2))),
                  APComplex(oracle("-0.828796644234319995596334261160299870709808092766984345091802")), 47));
  // recurrence psi'(z+1) = psi'(z) - 1/z^2
  const APComplex z = c(1.3, 0.6);
  CHECK(agrees_to(polygamma(1, z + APComplex(1)),
                  polygamma(1, z) - pow_int(z, -2), 44));
  CHECK_THROWS_AS(polygamma(0, APComplex(2)), ContractError);
  CHECK_THROWS_AS(polygamma(1, APComplex(-2)), PoleError);
}

TEST_CASE("catalan: frozen digits, backend constant, series acceleration") {
  const APComplex v = catalan(50);
  {
    PrecisionGuard g(50);
    CHECK(v.im == 0);
    CHECK(agrees_to(v.re, oracle("0.915965594177219015054603514932384110774149374281672134266498"), 48));
    CHECK(agrees_to(v.re, const_catalan_oracle(), 48));
  }
  // alternating-series acceleration for sum (-1)^k/(2k+1)^2
  {
    PrecisionGuard g(60);
    const long n = 85;
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<int>(n));
    d = (d + 1 / d) / 2;
    Real b(-1), cc = -d, s(0);
    for (long k = 0; k < n; ++k) {
      cc = b - cc;
      s += cc / Real((2 * k + 1) * (2 * k + 1));
      b = b * Real((k + n)) * Real((k - n)) / (Real(k) + Real(1) / 2) / Real(k + 1);
    }
    const Real accel = s / d;
    CHECK(agrees_to(v.re, accel, 48));
  }
  // stability across requested precisions
  const APComplex v30 = catalan(30);
  {
    PrecisionGuard g(30);
    CHECK(agrees_to(v30.re, round_to(v.re, 30), 28));
  }
}

TEST_CASE("hurwitz_zeta: anchors") {
  PrecisionGuard g(50);
  const Real pi = const_pi();
  CHECK(agrees_to(hurwitz_zeta(APComplex(2), APComplex(1)), APComplex(pi * pi / 6), 46));
  CHECK(agrees_to(hurwitz_zeta(APComplex(3), APComplex(Real(1) / 2)),
                  APComplex(oracle("8.41439832211715999779816713058014993535490404638349217254590")), 47));
  CHECK(agrees_to(hurwitz_zeta({Real(2), Real(3)}, APComplex(Rational(5, 4))),
                  {oracle("0.307890052653195487637182301828112785413315005005153353879263"),
                   oracle("-0.415089086524043999389035229798885543120167225467685351279840")},
                  47));
  // zeta(0, a) = 1/2 - a
  const APComplex a0 = c(0.7, 0.2);
  CHECK(agrees_to(hurwitz_zeta(APComplex(0), a0), APComplex(Real(1) / 2) - a0, 44));
}

TEST_CASE("hurwitz_zeta: slow direct-sum oracle for zeta(2)") {
  PrecisionGuard g(40);
  const long N = 1000000;
  Real s(0);
  for (long n = N; n >= 1; --n) s += Real(1) / (Real(n) * Real(n));
  const Real nn = Real(N);
  // integral tail with Euler--Maclaurin corrections
  const Real tail = 1 / nn - 1 / (2 * nn * nn) + 1 / (6 * nn * nn * nn);
  CHECK(agrees_to(hurwitz_zeta(APComplex(2), APComplex(1)).re, s + tail, 30));
}

TEST_CASE("hurwitz_zeta: shift recurrence on random points") {
  PrecisionGuard g(50);
  std::mt19937 rng(482190);
  std::uniform_real_distribution<double> sre(-3.0, 4.0), sim(-2.0, 2.0);
  std::uniform_real_distribution<double> are(0.3, 2.5), aim(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    APComplex s = c(sre(rng), sim(rng));
    if (abs(s - APComplex(1)) < Real(1) / 8) s += APComplex(Real(1) / 4);
    const APComplex a = c(are(rng), aim(rng));
    const APComplex lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + APComplex(1));
    CHECK(agrees_to(lhs, pow(a, APComplex(0) - s), 45));
  }
}

TEST_CASE("hurwitz_zeta: multiplication theorem") {
  PrecisionGuard g(50);
  for (long q : {2L, 3L, 5L}) {
    for (const APComplex s : {c(2.3), c(-1.5, 0.5), c(0.5, 2.0)}) {
      const APComplex a = c(0.7, 0.15);
      APComplex rhs(0);
      for (long j = 0; j < q; ++j)
        rhs += hurwitz_zeta(s, a + APComplex(Rational(j, q)));
      const APComplex lhs = pow(APComplex(q), s) * hurwitz_zeta(s, APComplex(q) * a);
      CHECK(agrees_to(lhs, rhs, 44));
    }
  }
}

TEST_CASE("hurwitz_zeta: negative-integer arguments hit Bernoulli polynomials") {
  PrecisionGuard g(50);
  // zeta(1-k, a) = -B_k(a)/k
  for (long k = 1; k <= 12; ++k) {
    for (const APComplex a : {c(0.75), c(1.2, 0.3), c(2.0, -0.8)}) {
      const APComplex lhs = hurwitz_zeta(APComplex(1 - k), a);
      const APComplex rhs = APComplex(0) - eval_complex(bernoulli_poly(k), a) / APComplex(k);
      CHECK(agrees_to(lhs, rhs, 45));
    }
  }
}

TEST_CASE("hurwitz_zeta: pivot and correction-order invariance") {
  PrecisionGuard g(50);
  const APComplex s = c(2.5, 1.0), a = c(0.8);
  const EMSettings base = choose_em_settings(s, 65);
  const APComplex v1 = hurwitz_zeta(s, a, {base.pivot, 40});
  const APComplex v2 = hurwitz_zeta(s, a, {2 * base.pivot, 40});
  const APComplex v3 = hurwitz_zeta(s, a, {base.pivot, 42});
  CHECK(agrees_to(v1, v2, 45));
  CHECK(agrees_to(v1, v3, 45));
}

TEST_CASE("hurwitz_zeta: rejects the pole and bad a") {
  PrecisionGuard g(30);
  CHECK_THROWS_AS(hurwitz_zeta(APComplex(1), APComplex(2)), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(APComplex(2), APComplex(0)), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(APComplex(2), APComplex(-2)), DomainError);
  CHECK_NOTHROW(hurwitz_zeta(APComplex(2), c(-2.0, 0.001)));
}

TEST_CASE("hurwitz_zeta_ds: frozen references and finite differences") {
  PrecisionGuard g(50);
  CHECK(agrees_to(riemann_zeta_ds(APComplex(3)),
                  APComplex(oracle("-0.198126242885636853330681821503285796875542793463835003346890")), 46));
  CHECK(agrees_to(riemann_zeta_ds(APComplex(-1)),
                  APComplex(oracle("-0.165421143700450929213919660242780642764036380335201783666522")), 46));
  CHECK(agrees_to(hurwitz_zeta_ds({Real(2), Real(3)}, APComplex(Rational(5, 4))),
                  {oracle("0.0295353163989286744912936814383307915802424237165439120385506"),
                   oracle("0.0560083710656792656850353819241497580370641645941507186141886")},
                  46));

  // central differences at doubled precision
  std::mt19937 rng(77150);
  std::uniform_real_distribution<double> sre(-2.0, 3.5), sim(-1.5, 1.5);
  std::uniform_real_distribution<double> are(0.4, 2.0), aim(-0.6, 0.6);
  for (int t = 0; t < 20; ++t) {
    APComplex s = c(sre(rng), sim(rng));
    if (abs(s - APComplex(1)) < Real(1) / 4) s += APComplex(Real(1) / 2);
    const APComplex a = c(are(rng), aim(rng));
    const APComplex ds = hurwitz_zeta_ds(s, a);
    APComplex fd;
    {
      PrecisionGuard hi(100);
      const APComplex h(detail::pow10_real(-25));
      const APComplex sh = APComplex(s), ah = APComplex(a);
      fd = (hurwitz_zeta(sh + h, ah) - hurwitz_zeta(sh - h, ah)) / (APComplex(2) * h);
    }
    CHECK(agrees_to(ds, fd, 42));
  }
}

TEST_CASE("riemann_zeta: classical values") {
  PrecisionGuard g(50);
  const Real pi = const_pi();
  CHECK(agrees_to(riemann_zeta(APComplex(2)),
                  APComplex(oracle("1.64493406684822643647241516664602518921894990120679843773556")), 47));
  CHECK(agrees_to(riemann_zeta(APComplex(3)),
                  APComplex(oracle("1.20205690315959428539973816151144999076498629234049888179227")), 47));
  CHECK(agrees_to(riemann_zeta(APComplex(4)), APComplex(pi * pi * pi * pi / 90), 46));
  CHECK(agrees_to(riemann_zeta(APComplex(0)), APComplex(Rational(-1, 2)), 46));
  CHECK(agrees_to(riemann_zeta(APComplex(-1)), APComplex(Rational(-1, 12)), 46));
  CHECK(agrees_to(riemann_zeta(APComplex(-3)), APComplex(Rational(1, 120)), 46));
}

TEST_CASE("lerch_phi: anchors and degenerate shapes") {
  PrecisionGuard g(50);
  CHECK(agrees_to(lerch_phi(APComplex(Real(1) / 2), APComplex(2), APComplex(Rational(3, 4))),
                  APComplex(oracle("1.98726429783858636428761745081232689846878334504979477475399")), 47));
  // w = 0 collapses to a^{-s}
  CHECK(agrees_to(lerch_phi(APComplex(0), c(1.7, 0.4), c(1.3, -0.2)),
                  pow(c(1.3, -0.2), c(-1.7, -0.4)), 45));
  // s = 0 collapses to the geometric series
  CHECK(agrees_to(lerch_phi(c(-0.55, 0.3), APComplex(0), c(2.4)),
                  APComplex(1) / (APComplex(1) - c(-0.55, 0.3)), 45));
  // sum w^m/(m+1) = -log(1-w)/w
  CHECK(agrees_to(lerch_phi(APComplex(Real(1) / 2), APComplex(1), APComplex(1)),
                  APComplex(2 * const_log2()), 45));
  CHECK_THROWS_AS(lerch_phi(APComplex(1), APComplex(2), APComplex(1)), DomainError);
  CHECK_THROWS_AS(lerch_phi(APComplex(Real(1) / 2), APComplex(2), APComplex(-2)), DomainError);
}

TEST_CASE("hyp2f1_unit: anchor and logarithm identity") {
  PrecisionGuard g(50);
  CHECK(agrees_to(hyp2f1_unit(APComplex(Rational(1, 3)), APComplex(Rational(-1, 2))),
                  APComplex(oracle("0.901644258527509671814025715062578672368297102586716984086050")), 47));
  // b = 1: 2F1(1,1;2;w) = -log(1-w)/w
  const APComplex w = c(0.4, -0.3);
  CHECK(agrees_to(hyp2f1_unit(APComplex(1), w),
                  (APComplex(0) - log(APComplex(1) - w)) / w, 45));
  CHECK_THROWS_AS(hyp2f1_unit(APComplex(0), APComplex(Real(1) / 2)), DomainError);
}

TEST_CASE("gen_harmonic: integer, half-integer, and shift consistency") {
  PrecisionGuard g(50);
  CHECK(agrees_to(gen_harmonic(APComplex(3), APComplex(1)),
                  APComplex(Rational(11, 6)), 45));
  CHECK(agrees_to(gen_harmonic(APComplex(3), APComplex(2)),
                  APComplex(Rational(49, 36)), 45));
  CHECK(agrees_to(gen_harmonic(APComplex(Real(1) / 2), APComplex(1)),
                  APComplex(2 - 2 * const_log2()), 45));
  // H_z^{(r)} - H_{z-1}^{(r)} = z^{-r}
  for (const APComplex r : {c(1.0), c(2.0), c(2.5, 0.5)}) {
    const APComplex z = c(1.3, 0.2);
    const APComplex lhs = gen_harmonic(z, r) - gen_harmonic(z - APComplex(1), r);
    CHECK(agrees_to(lhs, pow(z, APComplex(0) - r), 44));
  }
}

TEST_CASE("recip_pochhammer_shift: closed products and gamma cross-check") {
  PrecisionGuard g(50);
  const APComplex k = c(0.5, 1.0 / 3.0);
  CHECK(agrees_to(recip_pochhammer_shift(k, 0), APComplex(1) / k, 46));
  CHECK(agrees_to(recip_pochhammer_shift(k, 1), APComplex(1), 46));
  CHECK(agrees_to(recip_pochhammer_shift(k, 2), k - APComplex(1), 46));
  const APComplex d5 = (k - APComplex(1)) * (k - APComplex(2)) * (k - APComplex(3)) * (k - APComplex(4));
  CHECK(agrees_to(recip_pochhammer_shift(k, 5), d5, 46));
  // for d >= 2 the product equals Gamma(k)/Gamma(k-d+1)
  const APComplex kk = c(3.5);
  CHECK(agrees_to(recip_pochhammer_shift(kk, 4),
                  gamma(kk) / gamma(kk - APComplex(3)), 44));
  CHECK_THROWS_AS(recip_pochhammer_shift(APComplex(0), 0), PoleError);
  CHECK_THROWS_AS(recip_pochhammer_shift(k, -1), ContractError);
}
