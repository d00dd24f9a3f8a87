#ifndef QASYM_SPECIAL_HPP
#define QASYM_SPECIAL_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qasym/errors.hpp"
#include "qasym/rational.hpp"

namespace qasym {

using real = long double;

inline constexpr real kPi = 3.14159265358979323846264338327950288L;
inline constexpr real kLn2 = 0.69314718055994530941723212145817657L;
inline constexpr real kEulerGamma = 0.57721566490153286060651209008240243L;

inline real gamma_fn(real x) {
    if (x <= 0) throw DomainError("gamma requires x > 0");
    return std::tgamma(x);
}

namespace detail {

// B_0..B_n as exact rationals (Akiyama-Tanigawa style recurrence on the
// defining sum). Small n only; int64 rationals suffice through B_20.
inline const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        constexpr int NMAX = 21;
        std::vector<Rational> b(NMAX + 1);
        std::vector<std::vector<std::int64_t>> ch(NMAX + 2,
                                                  std::vector<std::int64_t>(NMAX + 2, 0));
        for (int i = 0; i <= NMAX + 1; ++i) {
            ch[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
        }
        b[0] = Rational(1);
        for (int n = 1; n <= NMAX; ++n) {
            Rational sum(0);
            for (int j = 0; j < n; ++j) sum += Rational(ch[n + 1][j]) * b[j];
            b[n] = Rational(-1, n + 1) * sum;
        }
        return b;
    }();
    return table;
}

} // namespace detail

inline Rational bernoulli(int n) {
    const auto& t = detail::bernoulli_table();
    if (n < 0 || n >= static_cast<int>(t.size()))
        throw DomainError("bernoulli index out of supported range");
    return t[static_cast<std::size_t>(n)];
}

// zeta(s) for real s > 1, Euler-Maclaurin.
inline real zeta(real s) {
    if (s <= 1) throw DomainError("zeta requires s > 1");
    constexpr int N = 40;
    constexpr int K = 8;
    real sum = 0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<real>(k), -s);
    const real Ns = std::pow(static_cast<real>(N), -s);
    sum += Ns * N / (s - 1) + Ns / 2;
    real poch = s;           // s(s+1)...(s+2i-2)
    real npow = Ns / N;      // N^(-s-2i+1)
    for (int i = 1; i <= K; ++i) {
        sum += bernoulli(2 * i).value() / gamma_fn(static_cast<real>(2 * i + 1)) *
               poch * npow;
        poch *= (s + 2 * i - 1) * (s + 2 * i);
        npow /= static_cast<real>(N) * N;
    }
    return sum;
}

// zeta'(s) for real s > 1: exact s-derivative of the same Euler-Maclaurin sum.
inline real zeta_deriv(real s) {
    if (s <= 1) throw DomainError("zeta_deriv requires s > 1");
    constexpr int N = 40;
    constexpr int K = 8;
    const real lnN = std::log(static_cast<real>(N));
    real sum = 0;
    for (int k = N - 1; k >= 2; --k)
        sum -= std::log(static_cast<real>(k)) * std::pow(static_cast<real>(k), -s);
    const real Ns = std::pow(static_cast<real>(N), -s);
    sum += -lnN * Ns * N / (s - 1) - Ns * N / ((s - 1) * (s - 1)) - lnN * Ns / 2;
    real poch = s;
    real dpoch = 1; // d/ds of the Pochhammer product
    real npow = Ns / N;
    for (int i = 1; i <= K; ++i) {
        const real coef = bernoulli(2 * i).value() / gamma_fn(static_cast<real>(2 * i + 1));
        sum += coef * (dpoch - poch * lnN) * npow;
        const real f = (s + 2 * i - 1) * (s + 2 * i);
        dpoch = dpoch * f + poch * (2 * s + 4 * i - 1);
        poch *= f;
        npow /= static_cast<real>(N) * N;
    }
    return sum;
}

// zeta(-m) = -B_{m+1}/(m+1), exact. The m = 0 value is -1/2 (the recurrence
// uses the B_1 = -1/2 convention, which flips the sign there).
inline Rational zeta_neg(int m) {
    if (m < 0) throw DomainError("zeta_neg requires m >= 0");
    if (m == 0) return Rational(-1, 2);
    return Rational(-1, m + 1) * bernoulli(m + 1);
}

inline real digamma_int(int n) { // psi(n) for integer n >= 1
    real h = 0;
    for (int k = 1; k < n; ++k) h += static_cast<real>(1) / k;
    return -kEulerGamma + h;
}

// zeta'(-m). m=0: -ln(2pi)/2. Even m: closed form via zeta(m+1). Odd m:
// logarithmic derivative of the functional equation (the cotangent term
// vanishes at odd negative integers).
inline real zeta_deriv_neg(int m) {
    if (m < 0) throw DomainError("zeta_deriv_neg requires m >= 0");
    if (m == 0) return -std::log(2 * kPi) / 2;
    if (m % 2 == 0) {
        real sign = (m / 2) % 2 == 0 ? 1 : -1;
        return sign * gamma_fn(static_cast<real>(m + 1)) * zeta(static_cast<real>(m + 1)) /
               (std::pow(static_cast<real>(2), m + 1) * std::pow(kPi, static_cast<real>(m)));
    }
    real zm1 = zeta(static_cast<real>(m + 1));
    return zeta_neg(m).value() *
           (std::log(2 * kPi) - digamma_int(m + 1) - zeta_deriv(static_cast<real>(m + 1)) / zm1);
}

// Glaisher-Kinkelin constant, ln A = 1/12 - zeta'(-1).
inline real glaisher() {
    static const real a = std::exp(static_cast<real>(1) / 12 - zeta_deriv_neg(1));
    return a;
}

enum class SaddleVariant { minus, plus, ratio };

// Constants c_m of the m^k exponent families:
//   minus: sum_{j>=2} 1/(j(m^{j-1}-1))
//   plus:  sum_{j>=2} (-1)^j/(j(m^{j-1}-1))
//   ratio: 2 sum_{j>=1} 1/((2j+1)(m^{2j}-1))
// Terms decay geometrically; summed until the tail bound drops below 1e-16.
inline real saddle_constant(std::int64_t m, SaddleVariant variant) {
    if (m < 2) throw DomainError("saddle constant requires m >= 2");
    const real md = static_cast<real>(m);
    real sum = 0;
    if (variant == SaddleVariant::ratio) {
        real mp = md * md; // m^(2j)
        for (int j = 1;; ++j) {
            real term = 2 / ((2 * j + 1) * (mp - 1));
            sum += term;
            if (term < 1e-18L * (1 - 1 / (md * md))) break;
            mp *= md * md;
            if (j > 4000) break;
        }
    } else {
        real mp = md; // m^(j-1)
        for (int j = 2;; ++j) {
            real term = 1 / (j * (mp - 1));
            if (variant == SaddleVariant::plus && j % 2 != 0) term = -term;
            sum += term;
            if (std::fabs(term) < 1e-18L * (1 - 1 / md)) break;
            mp *= md;
            if (j > 8000) break;
        }
    }
    return sum;
}

// Cached O(1) constants used across the closed forms.
struct ConstantTable {
    real pi = kPi;
    real zeta3 = zeta(3.0L);
    real glaisher_a = glaisher();
    real zeta_deriv_neg1 = zeta_deriv_neg(1);

    static const ConstantTable& get() {
        static const ConstantTable t;
        return t;
    }
};

} // namespace qasym

#endif
