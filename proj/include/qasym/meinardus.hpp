#ifndef QASYM_MEINARDUS_HPP
#define QASYM_MEINARDUS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "qasym/asymptotic.hpp"
#include "qasym/errors.hpp"
#include "qasym/spec.hpp"
#include "qasym/special.hpp"

namespace qasym {

// Analytic data of d(s) = sum b(k) k^{-s} for a polynomial exponent b(k):
// poles {j+1 : c_j != 0} with residue c_j, d(0) = sum c_j zeta(-j),
// d'(0) = sum c_j zeta'(-j).
struct DirichletData {
    struct Pole {
        int location; // integer >= 1
        real residue;
    };
    std::vector<Pole> poles;
    Rational d0 = 0; // d(0) is rational for polynomial b(k) (Bernoulli values)
    real dd0 = 0;
};

inline DirichletData dirichlet_from_exponent(const ExponentFn& e) {
    DirichletData dd;
    switch (e.kind) {
        case ExponentFn::Kind::power:
            // b(k) = k^m -> d(s) = zeta(s-m)
            dd.poles.push_back({static_cast<int>(e.m) + 1, 1});
            dd.d0 = zeta_neg(static_cast<int>(e.m));
            dd.dd0 = zeta_deriv_neg(static_cast<int>(e.m));
            return dd;
        case ExponentFn::Kind::affine:
            // b(k) = mk + c -> m zeta(s-1) + c zeta(s)
            dd.poles.push_back({2, static_cast<real>(e.m)});
            if (e.c != 0) dd.poles.push_back({1, static_cast<real>(e.c)});
            dd.d0 = Rational(e.m) * zeta_neg(1) + Rational(e.c) * zeta_neg(0);
            dd.dd0 = e.m * zeta_deriv_neg(1) + e.c * zeta_deriv_neg(0);
            return dd;
        case ExponentFn::Kind::constant:
            // b(k) = m -> m zeta(s)
            dd.poles.push_back({1, static_cast<real>(e.m)});
            dd.d0 = Rational(e.m) * zeta_neg(0);
            dd.dd0 = e.m * zeta_deriv_neg(0);
            return dd;
        case ExponentFn::Kind::geometric:
            throw UnsupportedExponent(
                "geometric exponents have no Dirichlet pole data; use the "
                "saddle-point catalog families");
    }
    throw DomainError("unreachable exponent kind");
}

namespace detail {

inline DirichletData::Pole single_pole(const DirichletData& dd) {
    std::vector<DirichletData::Pole> live;
    for (const auto& p : dd.poles)
        if (p.residue != 0) live.push_back(p);
    if (live.size() != 1)
        throw MultiplePoles("expected exactly one pole, got " +
                            std::to_string(live.size()));
    return live.front();
}

} // namespace detail

// prod (1-q^k)^{-b(k)} with one simple pole rho:
//   p = rho/(rho+1)
//   s = (1 + 1/rho) (Res Gamma(rho+1) zeta(rho+1))^{1/(rho+1)}
//   b = (rho + 2 - 2 d(0)) / (2 rho + 2)
//   v = e^{d'(0)} (Res Gamma(rho+1) zeta(rho+1))^{(1-2d(0))/(2 rho+2)}
//       / sqrt(2 pi (rho+1))
inline AsymptoticForm single_pole_minus(const DirichletData& dd) {
    const auto pole = detail::single_pole(dd);
    const int rho = pole.location;
    const real g = pole.residue * gamma_fn(static_cast<real>(rho + 1)) *
                   zeta(static_cast<real>(rho + 1));
    AsymptoticForm out;
    out.terms[Rational(rho, rho + 1)] =
        (1 + 1.0L / rho) * std::pow(g, 1.0L / (rho + 1));
    out.b = Rational(rho + 2, 2 * (rho + 1)) - dd.d0 / Rational(rho + 1);
    out.v = std::exp(dd.dd0) *
            std::pow(g, (1 - 2 * dd.d0.value()) / (2 * (rho + 1))) /
            std::sqrt(2 * kPi * (rho + 1));
    out.check();
    return out;
}

// prod (1+q^k)^{b(k)} with one simple pole rho; the (1 - 2^{-rho}) weighting
// replaces zeta(rho+1) -> (1-2^{-rho}) zeta(rho+1) and the amplitude carries
// 2^{d(0)} instead of e^{d'(0)}; d(0) does not enter the n-power.
inline AsymptoticForm single_pole_plus(const DirichletData& dd) {
    const auto pole = detail::single_pole(dd);
    const int rho = pole.location;
    const real g = pole.residue * gamma_fn(static_cast<real>(rho + 1)) *
                   (1 - std::pow(static_cast<real>(2), -rho)) *
                   zeta(static_cast<real>(rho + 1));
    AsymptoticForm out;
    out.terms[Rational(rho, rho + 1)] =
        (1 + 1.0L / rho) * std::pow(g, 1.0L / (rho + 1));
    out.b = Rational(rho + 2, 2 * (rho + 1));
    out.v = std::pow(static_cast<real>(2), dd.d0.value()) *
            std::pow(g, 1.0L / (2 * (rho + 1))) / std::sqrt(2 * kPi * (rho + 1));
    out.check();
    return out;
}

enum class PoleProductType { minus, plus };

// Saddle-location series for equidistant simple poles 1..r (r = 2): the
// coefficients ps[0..r+1] of the expansion in z = n^{-1/(r+1)} and the
// leading constant h.
struct SaddleExpansion {
    std::vector<real> ps;
    real h = 0;
};

namespace detail {

// truncated polynomial helpers in z
using Poly = std::vector<real>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t deg) {
    Poly r(deg + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= deg; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= deg; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_pow(const Poly& a, int e, std::size_t deg) {
    Poly r{1};
    for (int i = 0; i < e; ++i) r = poly_mul(r, a, deg);
    return r;
}

// (1 + a1 z + a2 z^2 + ...)^{-1} truncated
inline Poly poly_inv(const Poly& a, std::size_t deg) {
    Poly r(deg + 1, 0);
    r[0] = 1 / a[0];
    for (std::size_t n = 1; n <= deg; ++n) {
        real acc = 0;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += a[i] * r[n - i];
        r[n] = -acc / a[0];
    }
    return r;
}

inline real residue_at(const DirichletData& dd, int loc) {
    for (const auto& p : dd.poles)
        if (p.location == loc) return p.residue;
    return 0;
}

} // namespace detail

// Successive one-unknown solves for ps[t], t = 1..r+1, from the coefficient
// identity [z^t]( h P^{r+1} - sum_{i=0}^{r} A_i h^{(r-i)/(r+1)} z^{r-i} P^{r-i} ) = 0
// where P = sum ps[j] z^j. Only r = 2 is dispatched.
inline SaddleExpansion solve_saddle_expansion(const DirichletData& dd, int r,
                                              PoleProductType type) {
    if (r != 2) throw UnsupportedPoleSet("only r = 2 equidistant poles supported");
    for (const auto& p : dd.poles)
        if (p.residue != 0 && (p.location < 1 || p.location > r))
            throw UnsupportedPoleSet("poles must lie in 1..r");
    const real res_r = detail::residue_at(dd, r);
    if (res_r == 0) throw SingularSystem("vanishing residue at the leading pole");

    const bool plus = type == PoleProductType::plus;
    auto weight = [&](int i) -> real {
        real w = detail::residue_at(dd, i) * gamma_fn(static_cast<real>(i)) *
                 zeta(static_cast<real>(i + 1));
        if (plus) w *= 1 - std::pow(static_cast<real>(2), -i);
        return w;
    };

    SaddleExpansion se;
    se.h = r * weight(r);
    // A_i of the defining identity; i = 0 carries d(0) in the minus case only
    std::vector<real> A(static_cast<std::size_t>(r) + 1, 0);
    A[0] = plus ? 0 : dd.d0.value();
    for (int i = 1; i <= r; ++i) A[static_cast<std::size_t>(i)] = i * weight(i);

    const std::size_t deg = static_cast<std::size_t>(r) + 1;
    se.ps.assign(deg + 1, 0);
    se.ps[0] = 1;
    auto identity_coeff = [&](int t) {
        detail::Poly P(se.ps.begin(), se.ps.end());
        detail::Poly F = detail::poly_pow(P, r + 1, deg);
        for (auto& x : F) x *= se.h;
        for (int i = 0; i <= r; ++i) {
            detail::Poly Pi = detail::poly_pow(P, r - i, deg);
            real c = A[static_cast<std::size_t>(i)] *
                     std::pow(se.h, static_cast<real>(r - i) / (r + 1));
            for (std::size_t j = 0; j + static_cast<std::size_t>(r - i) <= deg &&
                                    j < Pi.size();
                 ++j)
                F[j + static_cast<std::size_t>(r - i)] -= c * Pi[j];
        }
        return F[static_cast<std::size_t>(t)];
    };
    for (int t = 1; t <= r + 1; ++t) {
        se.ps[static_cast<std::size_t>(t)] = 0;
        const real c0 = identity_coeff(t);
        se.ps[static_cast<std::size_t>(t)] = 1;
        const real c1 = identity_coeff(t);
        const real slope = c1 - c0;
        if (std::fabs(slope) < 1e-30L)
            throw SingularSystem("degenerate linear solve for ps[" +
                                 std::to_string(t) + "]");
        se.ps[static_cast<std::size_t>(t)] = -c0 / slope;
    }
    return se;
}

// Equidistant two-pole Meinardus form for b(k) = mk + c products. Produces a
// mixed {1/3, 2/3} form; with c = 0 the 1/3 term drops out and the result
// coincides with the single-pole path.
inline AsymptoticForm two_pole(const DirichletData& dd, PoleProductType type) {
    const int r = 2;
    for (const auto& p : dd.poles)
        if (p.residue != 0 && p.location != 1 && p.location != 2)
            throw UnsupportedPoleSet("two_pole requires poles within {1,2}");
    SaddleExpansion se = solve_saddle_expansion(dd, r, type);
    const bool plus = type == PoleProductType::plus;
    const real res_r = detail::residue_at(dd, r);

    // B_j weights of the exponent assembly
    auto bweight = [&](int j) -> real {
        if (j == 0) return plus ? dd.d0.value() * kLn2 : dd.dd0;
        real w = detail::residue_at(dd, j) * gamma_fn(static_cast<real>(j)) *
                 zeta(static_cast<real>(j + 1));
        if (plus) w *= 1 - std::pow(static_cast<real>(2), -j);
        return w;
    };

    // Laurent exponent in z = n^{-1/3}: collect coefficients of z^-2, z^-1, z^0.
    const std::size_t deg = 6;
    real L[3] = {0, 0, 0}; // index k: coefficient of z^{k-2}
    auto add = [&](int zpow, real coef) {
        if (zpow >= -2 && zpow <= 0) L[zpow + 2] += coef;
    };
    // n*dn = h^{1/3} sum ps[j] z^{j-2}
    const real h13 = std::pow(se.h, 1.0L / (r + 1));
    for (std::size_t j = 0; j < se.ps.size(); ++j)
        add(static_cast<int>(j) - 2, h13 * se.ps[j]);
    // B_0
    add(0, bweight(0));
    // B_j dn^{-j} = B_j h^{-j/3} z^{-j} P^{-j}
    detail::Poly P(se.ps.begin(), se.ps.end());
    for (int j = 1; j <= r; ++j) {
        const real Bj = bweight(j);
        if (Bj == 0) continue;
        detail::Poly Q = detail::poly_pow(detail::poly_inv(P, deg), j, deg);
        const real c = Bj * std::pow(se.h, -static_cast<real>(j) / (r + 1));
        for (std::size_t i = 0; i < Q.size(); ++i)
            add(static_cast<int>(i) - j, c * Q[i]);
    }

    AsymptoticForm out;
    out.terms[Rational(2, 3)] = L[0];
    if (L[1] != 0) out.terms[Rational(1, 3)] = L[1];
    real pref;
    if (plus) {
        out.b = Rational(r + 2, 2 * (r + 1));
        pref = std::pow(se.h, static_cast<real>(r + 2) / (2 * (r + 1))) /
               std::sqrt(2 * kPi * res_r * (1 - std::pow(static_cast<real>(2), -r)) *
                         gamma_fn(static_cast<real>(r + 2)) *
                         zeta(static_cast<real>(r + 1)));
    } else {
        out.b = Rational(r + 2, 2 * (r + 1)) - dd.d0 / Rational(r + 1);
        pref = std::pow(se.h, -dd.d0.value() / (r + 1)) *
               std::pow(se.h, static_cast<real>(r + 2) / (2 * (r + 1))) /
               std::sqrt(2 * kPi * res_r * gamma_fn(static_cast<real>(r + 2)) *
                         zeta(static_cast<real>(r + 1)));
    }
    out.v = pref * std::exp(L[2]);
    out.check();
    return out;
}

} // namespace qasym

#endif
