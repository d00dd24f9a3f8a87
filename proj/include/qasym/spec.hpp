#ifndef QASYM_SPEC_HPP
#define QASYM_SPEC_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qasym/errors.hpp"

namespace qasym {

// Exponent e(k) applied to a factor (1 +- q^d)^e(k).
// Closed enumeration: exactly the classes that occur in infinite q-products
// of this kind. Arbitrary expressions are rejected by the parser.
struct ExponentFn {
    enum class Kind { constant, affine, power, geometric };

    Kind kind = Kind::constant;
    std::int64_t m = 1;
    std::int64_t c = 0; // affine only: e(k) = m*k + c

    static ExponentFn constant(std::int64_t m) {
        if (m < 1) throw ValidationError("constant exponent must be >= 1");
        return {Kind::constant, m, 0};
    }
    static ExponentFn affine(std::int64_t m, std::int64_t c) {
        if (m < 1) throw ValidationError("affine exponent slope must be >= 1");
        return {Kind::affine, m, c};
    }
    static ExponentFn power(std::int64_t m) {
        if (m < 1) throw ValidationError("power exponent k^m requires m >= 1");
        return {Kind::power, m, 0};
    }
    static ExponentFn geometric(std::int64_t m) {
        if (m < 2) throw ValidationError("geometric exponent m^k requires m >= 2");
        return {Kind::geometric, m, 0};
    }

    bool is_one() const { return kind == Kind::constant && m == 1; }

    // e(k); geometric values can be huge, hence mpz.
    mpz_class eval(std::int64_t k) const {
        switch (kind) {
            case Kind::constant: return mpz_class(static_cast<long>(m));
            case Kind::affine: return mpz_class(static_cast<long>(m * k + c));
            case Kind::power: {
                mpz_class r;
                mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k),
                              static_cast<unsigned long>(m));
                return r;
            }
            case Kind::geometric: {
                mpz_class r;
                mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m),
                              static_cast<unsigned long>(k));
                return r;
            }
        }
        throw DomainError("unreachable exponent kind");
    }
};

enum class FactorSign { plus, minus };          // base is 1+q^d or 1-q^d
enum class FactorLocation { numerator, denominator };

// One factor family prod_{k>=kstart} (1 +- q^(s*k+t))^e(k).
struct FactorTerm {
    FactorSign sign = FactorSign::minus;
    int kstart = 1;          // 0 or 1
    std::int64_t step = 1;   // s >= 1
    std::int64_t offset = 0; // t, relative to kstart; s*kstart + t >= 1
    ExponentFn exponent;
    FactorLocation location = FactorLocation::denominator;

    // First generated q-exponent.
    std::int64_t first_d() const { return step * kstart + offset; }
    // Offset of the progression rebased to k >= 0 (always >= 1 when valid).
    std::int64_t offset0() const { return first_d(); }

    void check() const {
        if (kstart != 0 && kstart != 1) throw ValidationError("k must start at 0 or 1");
        if (step < 1) throw ValidationError("progression step must be >= 1");
        if (first_d() < 1)
            throw ValidationError("q-exponent " + std::to_string(first_d()) +
                                  " at k=" + std::to_string(kstart) + " is not positive");
        if (exponent.kind == ExponentFn::Kind::affine &&
            exponent.m * kstart + exponent.c < 0)
            throw ValidationError("affine exponent is negative at k=" +
                                  std::to_string(kstart));
    }
};

struct ProductSpec {
    std::vector<FactorTerm> factors;

    void check() const {
        if (factors.empty()) throw ValidationError("empty product");
        for (const auto& f : factors) f.check();
    }
};

namespace detail {

inline std::string render_linear(std::int64_t s, std::int64_t t) {
    if (s == 1 && t == 0) return "k";
    std::string body = (s == 1) ? "k" : std::to_string(s) + "*k";
    if (t > 0) body += "+" + std::to_string(t);
    else if (t < 0) body += std::to_string(t);
    return "(" + body + ")";
}

inline std::string render_factor(const FactorTerm& f) {
    std::string out = "(1";
    out += (f.sign == FactorSign::plus) ? "+" : "-";
    out += "q^" + render_linear(f.step, f.offset) + ")";
    const auto& e = f.exponent;
    switch (e.kind) {
        case ExponentFn::Kind::constant:
            if (e.m != 1) out += "^" + std::to_string(e.m);
            break;
        case ExponentFn::Kind::affine:
            out += "^" + render_linear(e.m, e.c);
            break;
        case ExponentFn::Kind::power:
            out += (e.m == 1) ? "^k" : "^k^" + std::to_string(e.m);
            break;
        case ExponentFn::Kind::geometric:
            out += "^" + std::to_string(e.m) + "^k";
            break;
    }
    return out;
}

} // namespace detail

// Canonical text form. Factors are grouped by k-start; factor order is
// preserved within a group.
inline std::string render(const ProductSpec& spec) {
    spec.check();
    std::string out;
    for (int start : {0, 1}) {
        std::string num, den;
        int den_factors = 0;
        for (const auto& f : spec.factors) {
            if (f.kstart != start) continue;
            auto& dst = (f.location == FactorLocation::numerator) ? num : den;
            if (f.location == FactorLocation::denominator) ++den_factors;
            if (!dst.empty()) dst += "*";
            dst += detail::render_factor(f);
        }
        if (num.empty() && den.empty()) continue;
        std::string ratio;
        if (den.empty()) ratio = num;
        else {
            if (num.empty()) num = "1";
            ratio = num + "/" + (den_factors > 1 ? "(" + den + ")" : den);
        }
        if (!out.empty()) out += " * ";
        out += "prod(k>=" + std::to_string(start) + ", " + ratio + ")";
    }
    return out;
}

// Informational GCD check mirroring the coprimality side conditions of the
// catalog families. The source conditions are written inconsistently
// (full-tuple vs per-pair), so this reports the gcd of the full tuple of
// progression parameters and flags it; it never blocks expansion.
inline std::vector<std::string> validate_coprimality(const ProductSpec& spec) {
    std::vector<std::string> warnings;
    std::int64_t g = 0;
    std::string tuple;
    for (const auto& f : spec.factors) {
        g = std::gcd(g, std::gcd(f.step, f.offset0()));
        if (!tuple.empty()) tuple += ",";
        tuple += std::to_string(f.step) + "," + std::to_string(f.offset0());
    }
    if (g != 1)
        warnings.push_back("GCD(" + tuple + ")=" + std::to_string(g) + " != 1");
    return warnings;
}

} // namespace qasym

#endif
