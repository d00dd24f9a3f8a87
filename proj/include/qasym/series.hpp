#ifndef QASYM_SERIES_HPP
#define QASYM_SERIES_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qasym/errors.hpp"
#include "qasym/spec.hpp"

namespace qasym {

// Exact integer coefficients a_0..a_N of an expanded product.
struct SeriesPoly {
    std::vector<mpz_class> coeffs;

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    const mpz_class& at(std::int64_t n) const { return coeffs.at(static_cast<std::size_t>(n)); }
};

// Net weights b(d) of the representation prod_d (1-q^d)^(-b(d)), exact up to
// order N. Plus-factors are rewritten via 1+q^d = (1-q^(2d))/(1-q^d).
struct EulerWeights {
    std::vector<mpz_class> b; // index d = 0..N, b[0] unused
};

inline std::int64_t max_weight_bits() {
    if (const char* env = std::getenv("QASYM_MAX_WEIGHT_BITS")) return std::atoll(env);
    return 1000000;
}

inline EulerWeights to_euler_weights(const ProductSpec& spec, std::int64_t N,
                                     bool negate_q = false) {
    if (N < 0) throw DomainError("order must be >= 0");
    spec.check();
    EulerWeights w;
    w.b.assign(static_cast<std::size_t>(N) + 1, mpz_class(0));
    const std::int64_t bit_budget = max_weight_bits();
    for (const auto& f : spec.factors) {
        for (std::int64_t k = f.kstart;; ++k) {
            std::int64_t d = f.step * k + f.offset;
            if (d > N) break;
            mpz_class e = f.exponent.eval(k);
            if (mpz_sizeinbase(e.get_mpz_t(), 2) >
                static_cast<std::size_t>(bit_budget))
                throw OverflowGuard("factor exponent exceeds " +
                                    std::to_string(bit_budget) + " bits at k=" +
                                    std::to_string(k));
            if (f.location == FactorLocation::denominator) e = -e;
            bool plus = (f.sign == FactorSign::plus);
            if (negate_q && d % 2 != 0) plus = !plus;
            if (plus) {
                // (1+q^d)^e = (1-q^(2d))^e * (1-q^d)^(-e)
                w.b[static_cast<std::size_t>(d)] += e;
                if (2 * d <= N) w.b[static_cast<std::size_t>(2 * d)] -= e;
            } else {
                w.b[static_cast<std::size_t>(d)] -= e;
            }
        }
    }
    return w;
}

// Euler-transform recurrence: n*a_n = sum_{i=1..n} a_{n-i} * c_i with
// c_i = sum_{d|i} d*b(d). Exact big-integer arithmetic throughout; the
// division by n must be exact for any valid weight table.
inline SeriesPoly expand_weights(const EulerWeights& w) {
    const std::int64_t N = static_cast<std::int64_t>(w.b.size()) - 1;
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1, mpz_class(0));
    for (std::int64_t d = 1; d <= N; ++d) {
        if (w.b[static_cast<std::size_t>(d)] == 0) continue;
        mpz_class dbd = d * w.b[static_cast<std::size_t>(d)];
        for (std::int64_t i = d; i <= N; i += d)
            c[static_cast<std::size_t>(i)] += dbd;
    }
    SeriesPoly p;
    p.coeffs.assign(static_cast<std::size_t>(N) + 1, mpz_class(0));
    p.coeffs[0] = 1;
    mpz_class acc, rem;
    for (std::int64_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::int64_t i = 1; i <= n; ++i) {
            const mpz_class& ci = c[static_cast<std::size_t>(i)];
            if (ci == 0) continue;
            mpz_addmul(acc.get_mpz_t(), p.coeffs[static_cast<std::size_t>(n - i)].get_mpz_t(),
                       ci.get_mpz_t());
        }
        mpz_fdiv_qr_ui(p.coeffs[static_cast<std::size_t>(n)].get_mpz_t(),
                       rem.get_mpz_t(), acc.get_mpz_t(),
                       static_cast<unsigned long>(n));
        if (rem != 0)
            throw ExactnessViolation("coefficient recurrence not divisible at n=" +
                                     std::to_string(n));
    }
    return p;
}

inline SeriesPoly expand(const ProductSpec& spec, std::int64_t N) {
    return expand_weights(to_euler_weights(spec, N));
}

// Coefficients with their true signs for alternating products, obtained by
// expanding the spec at -q (where the product has a nonnegative-weight
// rewriting) and flipping parity: a_n = (-1)^n * [q^n] f(-q).
inline SeriesPoly expand_signed(const ProductSpec& spec, std::int64_t N) {
    SeriesPoly p = expand_weights(to_euler_weights(spec, N, /*negate_q=*/true));
    for (std::int64_t n = 1; n <= N; n += 2)
        p.coeffs[static_cast<std::size_t>(n)] = -p.coeffs[static_cast<std::size_t>(n)];
    return p;
}

// ln|a_n| from the limb representation; exact to ~1e-16 relative regardless
// of integer size.
inline long double log_abs_coeff(const SeriesPoly& p, std::int64_t n) {
    if (n < 0 || n > p.order()) throw DomainError("coefficient index out of range");
    const mpz_class& a = p.at(n);
    if (a == 0) throw ZeroCoefficient("a_" + std::to_string(n) + " = 0");
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) +
           static_cast<long double>(exp2) * 0.6931471805599453094172321214581766L;
}

} // namespace qasym

#endif
