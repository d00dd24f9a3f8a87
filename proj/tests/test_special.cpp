#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qasym/special.hpp"

using namespace qasym;

static bool close(real a, real b, real tol) { return std::fabs(a - b) <= tol; }

TEST_CASE("gamma") {
    CHECK(close(gamma_fn(1), 1, 1e-18L));
    CHECK(close(gamma_fn(5), 24, 1e-15L));
    CHECK(close(gamma_fn(0.5L), std::sqrt(kPi), 1e-18L));
    CHECK(close(gamma_fn(1.5L), std::sqrt(kPi) / 2, 1e-18L));
    CHECK_THROWS_AS(gamma_fn(0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-2.5L), DomainError);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(20) == Rational(-174611, 330));
}

TEST_CASE("zeta on the real axis s > 1") {
    CHECK(close(zeta(2), kPi * kPi / 6, 1e-18L));
    CHECK(close(zeta(4), kPi * kPi * kPi * kPi / 90, 1e-18L));
    CHECK(close(zeta(3), 1.2020569031595942854L, 1e-18L));
    CHECK(close(zeta(1.5L), 2.6123753486854883433L, 1e-17L));
    CHECK(close(zeta(10), 1.0009945751278180853L, 1e-18L));
    CHECK_THROWS_AS(zeta(1), DomainError);
    CHECK_THROWS_AS(zeta(0.5L), DomainError);
}

TEST_CASE("zeta derivative s > 1") {
    CHECK(close(zeta_deriv(2), -0.93754825431584375370L, 1e-16L));
    CHECK(close(zeta_deriv(3), -0.19812624288563685333L, 1e-16L));
    // finite-difference cross-check
    const real h = 1e-6L;
    for (real s : {1.5L, 2.5L, 4.0L}) {
        real fd = (zeta(s + h) - zeta(s - h)) / (2 * h);
        CHECK(close(zeta_deriv(s), fd, 1e-9L));
    }
}

TEST_CASE("zeta at nonpositive integers, exact") {
    CHECK(zeta_neg(0) == Rational(-1, 2));
    CHECK(zeta_neg(1) == Rational(-1, 12));
    CHECK(zeta_neg(2) == Rational(0));
    CHECK(zeta_neg(3) == Rational(1, 120));
    CHECK(zeta_neg(4) == Rational(0));
    CHECK(zeta_neg(5) == Rational(-1, 252));
    CHECK(zeta_neg(7) == Rational(1, 240));
}

TEST_CASE("zeta derivative at nonpositive integers") {
    CHECK(close(zeta_deriv_neg(0), -std::log(2 * kPi) / 2, 1e-18L));
    CHECK(close(zeta_deriv_neg(1), -0.16542114370045092921L, 1e-16L));
    CHECK(close(zeta_deriv_neg(2), -0.030448457058393270780L, 1e-16L));
    CHECK(close(zeta_deriv_neg(3), 0.0053785763577743011444L, 1e-16L));
    CHECK(close(zeta_deriv_neg(4), 0.0079838114502686242807L, 1e-16L));
}

TEST_CASE("glaisher constant and its defining identity") {
    CHECK(close(glaisher(), 1.2824271291006226369L, 1e-17L));
    CHECK(close(std::log(glaisher()), 1.0L / 12 - zeta_deriv_neg(1), 1e-18L));
}

TEST_CASE("digamma at integers") {
    CHECK(close(digamma_int(1), -kEulerGamma, 1e-18L));
    CHECK(close(digamma_int(2), 1 - kEulerGamma, 1e-18L));
    CHECK(close(digamma_int(5), 25.0L / 12 - kEulerGamma, 1e-17L));
}

TEST_CASE("saddle constants c_m") {
    // reference values from direct high-cutoff summation
    CHECK(close(saddle_constant(2, SaddleVariant::minus), 0.66958308592687858810L, 1e-15L));
    CHECK(close(saddle_constant(2, SaddleVariant::plus), 0.41506183728823548710L, 1e-15L));
    CHECK(close(saddle_constant(2, SaddleVariant::ratio), 0.25452124863864310099L, 1e-15L));
    CHECK_THROWS_AS(saddle_constant(1, SaddleVariant::minus), DomainError);

    // stability under cutoff doubling, all variants
    for (std::int64_t m : {2, 3, 5, 10}) {
        const real md = static_cast<real>(m);
        for (int J : {60, 120}) {
            real minus = 0, plus = 0, ratio = 0;
            real mp = md;
            for (int j = 2; j <= J; ++j) {
                minus += 1 / (j * (mp - 1));
                plus += (j % 2 == 0 ? 1.0L : -1.0L) / (j * (mp - 1));
                mp *= md;
            }
            real m2 = md * md;
            for (int j = 1; j <= J; ++j) {
                ratio += 2 / ((2 * j + 1) * (m2 - 1));
                m2 *= md * md;
            }
            CHECK(close(saddle_constant(m, SaddleVariant::minus), minus, 1e-14L));
            CHECK(close(saddle_constant(m, SaddleVariant::plus), plus, 1e-14L));
            CHECK(close(saddle_constant(m, SaddleVariant::ratio), ratio, 1e-14L));
        }
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(3, 4) / Rational(3, 2)) == Rational(1, 2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(2).str() == "2");
    CHECK(Rational::parse("25/36") == Rational(25, 36));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(close(Rational(2, 3).value(), 2.0L / 3, 1e-19L));
}
