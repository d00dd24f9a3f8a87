#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qasym/catalog.hpp"
#include "qasym/meinardus.hpp"

using namespace qasym;

static bool rel_close(real a, real b, real tol) {
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

TEST_CASE("dirichlet data of the exponent classes") {
    DirichletData dd = dirichlet_from_exponent(ExponentFn::power(2));
    REQUIRE(dd.poles.size() == 1);
    CHECK(dd.poles[0].location == 3);
    CHECK(dd.poles[0].residue == 1);
    CHECK(dd.d0 == Rational(0)); // zeta(-2)

    dd = dirichlet_from_exponent(ExponentFn::affine(3, 2));
    REQUIRE(dd.poles.size() == 2);
    CHECK(dd.poles[0].location == 2);
    CHECK(dd.poles[0].residue == 3);
    CHECK(dd.poles[1].location == 1);
    CHECK(dd.poles[1].residue == 2);
    CHECK(dd.d0 == Rational(-3, 12) + Rational(-1)); // 3 zeta(-1) + 2 zeta(0)

    dd = dirichlet_from_exponent(ExponentFn::affine(3, 0));
    CHECK(dd.poles.size() == 1);

    dd = dirichlet_from_exponent(ExponentFn::constant(4));
    REQUIRE(dd.poles.size() == 1);
    CHECK(dd.poles[0].location == 1);
    CHECK(dd.d0 == Rational(-2));

    CHECK_THROWS_AS(dirichlet_from_exponent(ExponentFn::geometric(2)),
                    UnsupportedExponent);
}

TEST_CASE("single pole reproduces Hardy-Ramanujan at rho = 1") {
    AsymptoticForm f = single_pole_minus(dirichlet_from_exponent(ExponentFn::constant(1)));
    CHECK(rel_close(f.v, 1 / (4 * std::sqrt(3.0L)), 1e-15L));
    CHECK(rel_close(f.r(), kPi * std::sqrt(2.0L / 3), 1e-15L));
    CHECK(f.b == Rational(1));
    CHECK(f.p() == Rational(1, 2));
}

TEST_CASE("single pole plus reproduces the distinct-parts formula at rho = 1") {
    AsymptoticForm f = single_pole_plus(dirichlet_from_exponent(ExponentFn::constant(1)));
    CHECK(rel_close(f.v, 1 / (4 * std::pow(3.0L, 0.25L)), 1e-15L));
    CHECK(rel_close(f.r(), kPi / std::sqrt(3.0L), 1e-15L));
    CHECK(f.b == Rational(3, 4));
}

TEST_CASE("plane partitions field-by-field") {
    AsymptoticForm f = single_pole_minus(dirichlet_from_exponent(ExponentFn::power(1)));
    const real z3 = zeta(3.0L);
    // exp-term: 3 zeta(3)^{1/3} (n/2)^{2/3}
    CHECK(std::fabs(f.r() - 3 * std::cbrt(z3) * std::pow(0.5L, 2.0L / 3)) <= 1e-12L);
    CHECK(f.p() == Rational(2, 3));
    CHECK(f.b == Rational(25, 36));
    // amplitude via the Glaisher identity: zeta'(-1) = 1/12 - ln A
    const real v_ref = std::pow(z3, 7.0L / 36) * std::exp(1.0L / 12) /
                       (glaisher() * std::pow(2.0L, 11.0L / 36) * std::sqrt(3 * kPi));
    CHECK(std::fabs(f.v - v_ref) <= 1e-12L);
}

TEST_CASE("single-pole engine matches the closed k^m families, m = 1..6") {
    for (std::int64_t m = 1; m <= 6; ++m) {
        CAPTURE(m);
        DirichletData dd = dirichlet_from_exponent(ExponentFn::power(m));
        AsymptoticForm em = single_pole_minus(dd);
        AsymptoticForm cm = forms::powerkexpminus(m);
        CHECK(em.p() == Rational(m + 1, m + 2));
        CHECK(em.b == cm.b);
        CHECK(rel_close(em.v, cm.v, 1e-14L));
        CHECK(rel_close(em.r(), cm.r(), 1e-14L));

        AsymptoticForm ep = single_pole_plus(dd);
        AsymptoticForm cp = forms::powerkexpplus(m);
        CHECK(ep.b == cp.b);
        CHECK(rel_close(ep.v, cp.v, 1e-14L));
        CHECK(rel_close(ep.r(), cp.r(), 1e-14L));
    }
}

TEST_CASE("multiple-pole input is rejected by the single-pole path") {
    CHECK_THROWS_AS(single_pole_minus(dirichlet_from_exponent(ExponentFn::affine(1, 1))),
                    MultiplePoles);
}

TEST_CASE("saddle expansion residual vanishes through order z^{r+1}") {
    // re-evaluate the defining identity with the solved ps and check the
    // coefficients of z^0..z^3 are zero
    DirichletData dd = dirichlet_from_exponent(ExponentFn::affine(2, 1));
    for (auto type : {PoleProductType::minus, PoleProductType::plus}) {
        SaddleExpansion se = solve_saddle_expansion(dd, 2, type);
        const bool plus = type == PoleProductType::plus;
        auto weight = [&](int i) -> real {
            real w = (i == 2 ? 2.0L : 1.0L) * gamma_fn(static_cast<real>(i)) *
                     zeta(static_cast<real>(i + 1));
            if (plus) w *= 1 - std::pow(2.0L, -i);
            return w;
        };
        const real A0 = plus ? 0 : dd.d0.value();
        const std::size_t deg = 3;
        std::vector<real> F(deg + 1, 0);
        // h P^3
        for (std::size_t i = 0; i <= deg; ++i)
            for (std::size_t j = 0; i + j <= deg; ++j)
                for (std::size_t k = 0; i + j + k <= deg; ++k)
                    F[i + j + k] += se.h * se.ps[i] * se.ps[j] * se.ps[k];
        // - sum_i A_i h^{(2-i)/3} z^{2-i} P^{2-i}
        for (std::size_t i = 0; i <= deg; ++i) // i = 0: A0 h^{2/3} z^2 P^2
            for (std::size_t j = 0; i + j + 2 <= deg; ++j)
                F[i + j + 2] -= A0 * std::pow(se.h, 2.0L / 3) * se.ps[i] * se.ps[j];
        for (std::size_t i = 0; i + 1 <= deg; ++i) // i = 1: A1 h^{1/3} z P
            F[i + 1] -= 1 * weight(1) * std::pow(se.h, 1.0L / 3) * se.ps[i];
        F[0] -= 2 * weight(2); // i = 2: A2 z^0
        for (std::size_t t = 0; t <= deg; ++t) {
            CAPTURE(t);
            CHECK(std::fabs(F[t]) <= 1e-14L * std::fabs(se.h));
        }
    }
}

TEST_CASE("two-pole engine reduces to the single-pole result at c = 0") {
    for (std::int64_t m = 1; m <= 4; ++m) {
        CAPTURE(m);
        DirichletData dd = dirichlet_from_exponent(ExponentFn::affine(m, 0));
        AsymptoticForm f = two_pole(dd, PoleProductType::minus);
        AsymptoticForm ref = forms::powerkminus(m);
        REQUIRE(f.single_term());
        CHECK(f.b == ref.b);
        CHECK(rel_close(f.v, ref.v, 1e-12L));
        CHECK(rel_close(f.r(), ref.r(), 1e-12L));

        AsymptoticForm g = two_pole(dd, PoleProductType::plus);
        AsymptoticForm gref = forms::powerkplus(m);
        REQUIRE(g.single_term());
        CHECK(g.b == gref.b);
        CHECK(rel_close(g.v, gref.v, 1e-12L));
        CHECK(rel_close(g.r(), gref.r(), 1e-12L));
    }
}

TEST_CASE("two-pole engine matches the closed mk+c forms") {
    for (auto [m, c] : {std::pair<std::int64_t, std::int64_t>{1, 1},
                        {2, 1}, {3, 2}, {2, -1}, {4, -3}}) {
        CAPTURE(m);
        CAPTURE(c);
        DirichletData dd = dirichlet_from_exponent(ExponentFn::affine(m, c));
        AsymptoticForm f = two_pole(dd, PoleProductType::minus);
        AsymptoticForm ref = forms::twopole_minus(m, c);
        CHECK(f.b == ref.b);
        CHECK(rel_close(f.v, ref.v, 1e-12L));
        CHECK(rel_close(f.terms.at(Rational(2, 3)), ref.terms.at(Rational(2, 3)), 1e-13L));
        CHECK(rel_close(f.terms.at(Rational(1, 3)), ref.terms.at(Rational(1, 3)), 1e-13L));

        AsymptoticForm g = two_pole(dd, PoleProductType::plus);
        AsymptoticForm gref = forms::twopole_plus(m, c);
        CHECK(g.b == gref.b);
        CHECK(rel_close(g.v, gref.v, 1e-12L));
        CHECK(rel_close(g.terms.at(Rational(1, 3)), gref.terms.at(Rational(1, 3)), 1e-13L));
    }
}

TEST_CASE("even-m ratio simplification") {
    for (std::int64_t m : {2, 4, 6}) {
        CAPTURE(m);
        AsymptoticForm a = forms::powerkexpratio(m);
        AsymptoticForm b = forms::powerkexpratio(m, /*even_constant=*/true);
        CHECK(a.b == b.b);
        CHECK(rel_close(a.v, b.v, 1e-12L));
        CHECK(rel_close(a.r(), b.r(), 1e-12L));
    }
    CHECK_THROWS_AS(forms::powerkexpratio(3, true), ParamError);
}

TEST_CASE("unsupported pole sets") {
    DirichletData dd;
    dd.poles.push_back({3, 1.0L});
    dd.poles.push_back({1, 1.0L});
    CHECK_THROWS_AS(solve_saddle_expansion(dd, 2, PoleProductType::minus),
                    UnsupportedPoleSet);
    CHECK_THROWS_AS(solve_saddle_expansion(dd, 3, PoleProductType::minus),
                    UnsupportedPoleSet);
    DirichletData z;
    z.poles.push_back({1, 1.0L});
    CHECK_THROWS_AS(solve_saddle_expansion(z, 2, PoleProductType::minus),
                    SingularSystem);
}
