#ifndef QASYM_ASYMPTOTIC_HPP
#define QASYM_ASYMPTOTIC_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "qasym/errors.hpp"
#include "qasym/rational.hpp"
#include "qasym/special.hpp"

namespace qasym {

enum class SignMode { plain, alternating };

// a_n ~ sign(n) * g^n * v * exp(sum_i s_i n^{p_i}) / n^b with 0 < p_i < 1.
// The geometric base g is 1 except for the m^k saddle-point families, which
// carry an m^n factor on top of the subexponential shape; the theorem
// operations only accept g = 1.
struct AsymptoticForm {
    real v = 1;
    std::map<Rational, real> terms; // exponent p -> coefficient s
    Rational b = 0;
    SignMode sign_mode = SignMode::plain;
    real geom_base = 1;

    bool single_term() const { return terms.size() == 1; }
    Rational p() const {
        if (!single_term()) throw MixedExponentMismatch("form is not single-term");
        return terms.begin()->first;
    }
    real r() const { return terms.begin()->second; }

    void check() const {
        if (!(v > 0)) throw DomainError("amplitude must be positive");
        for (const auto& [p, s] : terms) {
            if (!(p > Rational(0) && p < Rational(1)))
                throw DomainError("exponent p must lie strictly in (0,1)");
            (void)s;
        }
        if (!(geom_base > 0)) throw DomainError("geometric base must be positive");
    }
};

inline AsymptoticForm make_form(real v, real r, Rational b, Rational p,
                                SignMode sign = SignMode::plain) {
    AsymptoticForm a;
    a.v = v;
    a.terms[p] = r;
    a.b = b;
    a.sign_mode = sign;
    a.check();
    return a;
}

inline AsymptoticForm make_mixed_form(real v, real s13, real r23, Rational b,
                                      SignMode sign = SignMode::plain) {
    AsymptoticForm a;
    a.v = v;
    a.terms[Rational(1, 3)] = s13;
    a.terms[Rational(2, 3)] = r23;
    a.b = b;
    a.sign_mode = sign;
    a.check();
    return a;
}

namespace detail {

inline void require_convolvable(const AsymptoticForm& a, const char* op) {
    if (a.sign_mode == SignMode::alternating)
        throw AlternatingInput(std::string(op) + " requires non-alternating input");
    if (a.geom_base != 1)
        throw DomainError(std::string(op) + " does not accept a geometric factor");
    if (!a.single_term())
        throw MixedExponentMismatch(std::string(op) + " requires a single-term form");
    if (!(a.r() > 0)) throw DomainError(std::string(op) + " requires r > 0");
}

} // namespace detail

// Convolution of two subexponential sequences with a common exponent p:
//   r  = (r1^u + r2^u)^{1-p},  u = 1/(1-p)
//   b  = b1 + b2 + p/2 - 1
//   v  = sqrt(2pi) v1 v2 (r1^u + r2^u)^{b1+b2+(p-3)/2}
//        / ( sqrt((1-p)p) r1^{(b1-1/2)u} r2^{(b2-1/2)u} )
inline AsymptoticForm convolve(const AsymptoticForm& a1, const AsymptoticForm& a2) {
    detail::require_convolvable(a1, "convolve");
    detail::require_convolvable(a2, "convolve");
    if (!(a1.p() == a2.p()))
        throw MixedExponentMismatch("convolve requires equal exponents p");
    const Rational p = a1.p();
    const real pd = p.value();
    const real u = 1 / (1 - pd);
    const real r1 = a1.r(), r2 = a2.r();
    const real b1 = a1.b.value(), b2 = a2.b.value();
    const real S = std::pow(r1, u) + std::pow(r2, u);

    AsymptoticForm out;
    out.terms[p] = std::pow(S, 1 - pd);
    out.b = a1.b + a2.b + p * Rational(1, 2) - Rational(1);
    out.v = std::sqrt(2 * kPi) * a1.v * a2.v * std::pow(S, b1 + b2 + (pd - 3) / 2) /
            (std::sqrt((1 - pd) * pd) * std::pow(r1, (b1 - 0.5L) * u) *
             std::pow(r2, (b2 - 0.5L) * u));
    out.check();
    return out;
}

// Corollary form of convolve(a, a), written out explicitly.
inline AsymptoticForm self_convolve(const AsymptoticForm& a) {
    detail::require_convolvable(a, "self_convolve");
    const real pd = a.p().value();
    const real r = a.r(), b = a.b.value();
    AsymptoticForm out;
    out.terms[a.p()] = r * std::pow(static_cast<real>(2), 1 - pd);
    out.b = a.b * 2 + a.p() * Rational(1, 2) - Rational(1);
    out.v = a.v * a.v * std::sqrt(kPi) * std::pow(static_cast<real>(2), 2 * b + pd / 2 - 1) /
            std::sqrt(pd * r * (1 - pd));
    out.check();
    return out;
}

// h-th power of a subexponential generating function, h >= 1:
//   r_h = h^{1-p} r
//   b_h = b h + (p/2 - 1)(h - 1)
//   v_h = v^h h^{bh + hp/2 - h - p/2 + 1/2} (2pi/((1-p)p r))^{(h-1)/2}
// h is taken as a rational so the n-power slot stays exact.
inline AsymptoticForm power(const AsymptoticForm& a, Rational h) {
    detail::require_convolvable(a, "power");
    if (h < Rational(1)) throw DomainError("power requires h >= 1");
    const Rational p = a.p();
    const real pd = p.value();
    const real hd = h.value();
    const real r = a.r(), b = a.b.value();
    AsymptoticForm out;
    out.terms[p] = std::pow(hd, 1 - pd) * r;
    out.b = a.b * h + (p * Rational(1, 2) - Rational(1)) * (h - Rational(1));
    // the same n-power written as bh - (h-1)(2-p)/2; equality is the
    // construction self-check
    Rational alt = a.b * h - (h - Rational(1)) * (Rational(2) - p) * Rational(1, 2);
    if (!(alt == out.b)) throw DomainError("power n-exponent self-check failed");
    out.v = std::pow(a.v, hd) *
            std::pow(hd, b * hd + hd * pd / 2 - hd - pd / 2 + 0.5L) *
            std::pow(2 * kPi / ((1 - pd) * pd * r), (hd - 1) / 2);
    out.sign_mode = a.sign_mode;
    out.check();
    return out;
}

inline AsymptoticForm power(const AsymptoticForm& a, std::int64_t h) {
    return power(a, Rational(h));
}

// Solves x (*) known = target for x, the exact inverse of convolve:
//   r0 = (r2^u - r1^u)^{1-p},  b0 = b2 - b1 - p/2 + 1
//   v0 = sqrt((1-p)p) v2 r2^{(1-2b2)u/2} (r2^u - r1^u)^{1/2-p/2-b1+b2}
//        / ( sqrt(2pi) v1 r1^{(1-2b1)u/2} )
inline AsymptoticForm deconvolve(const AsymptoticForm& target,
                                 const AsymptoticForm& known) {
    detail::require_convolvable(target, "deconvolve");
    detail::require_convolvable(known, "deconvolve");
    if (!(target.p() == known.p()))
        throw MixedExponentMismatch("deconvolve requires equal exponents p");
    const Rational p = target.p();
    const real pd = p.value();
    const real u = 1 / (1 - pd);
    const real r1 = known.r(), r2 = target.r();
    if (!(r1 < r2)) throw OrderViolation("deconvolve requires r_known < r_target");
    const real b1 = known.b.value(), b2 = target.b.value();
    const real D = std::pow(r2, u) - std::pow(r1, u);

    AsymptoticForm out;
    out.terms[p] = std::pow(D, 1 - pd);
    out.b = target.b - known.b - p * Rational(1, 2) + Rational(1);
    out.v = std::sqrt((1 - pd) * pd) * target.v * std::pow(r2, (1 - 2 * b2) * u / 2) *
            std::pow(D, 0.5L - pd / 2 - b1 + b2) /
            (std::sqrt(2 * kPi) * known.v * std::pow(r1, (1 - 2 * b1) * u / 2));
    out.check();
    return out;
}

namespace detail {

inline void split_mixed(const AsymptoticForm& a, real& s13, real& r23, const char* op) {
    if (a.sign_mode == SignMode::alternating)
        throw AlternatingInput(std::string(op) + " requires non-alternating input");
    if (a.geom_base != 1)
        throw DomainError(std::string(op) + " does not accept a geometric factor");
    s13 = 0;
    r23 = 0;
    for (const auto& [p, s] : a.terms) {
        if (p == Rational(1, 3)) s13 = s;
        else if (p == Rational(2, 3)) r23 = s;
        else throw WrongExponentSet(std::string(op) + " requires exponents {1/3, 2/3}");
    }
    if (!(r23 > 0)) throw WrongExponentSet(std::string(op) + " requires r > 0 at p=2/3");
}

} // namespace detail

// Convolution for p = 2/3 forms carrying an extra exp(s n^{1/3}) term:
//   r = (r1^3 + r2^3)^{1/3}
//   s = (r1 s1 + r2 s2)/(r1^3 + r2^3)^{1/3}
//   b = b1 + b2 - 2/3
//   v = 3 v1 v2 sqrt(pi) (r1^3+r2^3)^{b1+b2-7/6} / (r1^{3b1-3/2} r2^{3b2-3/2})
//       * exp((r2^2 s1 - r1^2 s2)^2 / (4 r1 r2 (r1^3 + r2^3)))
inline AsymptoticForm convolve_mixed(const AsymptoticForm& a1,
                                     const AsymptoticForm& a2) {
    real s1, r1, s2, r2;
    detail::split_mixed(a1, s1, r1, "convolve_mixed");
    detail::split_mixed(a2, s2, r2, "convolve_mixed");
    const real b1 = a1.b.value(), b2 = a2.b.value();
    const real C = r1 * r1 * r1 + r2 * r2 * r2;
    const real R = std::cbrt(C);
    const real extra = r2 * r2 * s1 - r1 * r1 * s2;

    AsymptoticForm out;
    out.terms[Rational(2, 3)] = R;
    const real s = (r1 * s1 + r2 * s2) / R;
    if (s != 0) out.terms[Rational(1, 3)] = s;
    out.b = a1.b + a2.b - Rational(2, 3);
    out.v = 3 * a1.v * a2.v * std::sqrt(kPi) * std::pow(C, b1 + b2 - 7.0L / 6) /
            (std::pow(r1, 3 * b1 - 1.5L) * std::pow(r2, 3 * b2 - 1.5L)) *
            std::exp(extra * extra / (4 * r1 * r2 * C));
    out.check();
    return out;
}

// ln of the form at n, sign reported separately for alternating forms.
struct LogValue {
    real value;
    int sign; // +1 or -1
};

inline LogValue evaluate_log(const AsymptoticForm& a, std::int64_t n) {
    if (n < 1) throw DomainError("evaluate_log requires n >= 1");
    const real ln_n = std::log(static_cast<real>(n));
    real val = std::log(a.v) - a.b.value() * ln_n;
    for (const auto& [p, s] : a.terms) val += s * std::pow(static_cast<real>(n), p.value());
    if (a.geom_base != 1) val += static_cast<real>(n) * std::log(a.geom_base);
    int sign = (a.sign_mode == SignMode::alternating && n % 2 != 0) ? -1 : 1;
    return {val, sign};
}

// Amplitude rescaling and the substitution n -> n/lambda; both occur in the
// proof chains (e.g. splitting a product over even indices).
inline AsymptoticForm scale_amplitude(AsymptoticForm a, real c) {
    if (!(c > 0)) throw DomainError("scale factor must be positive");
    a.v *= c;
    return a;
}

inline AsymptoticForm substitute_n_scaled(AsymptoticForm a, real lambda) {
    if (!(lambda > 0)) throw DomainError("substitution scale must be positive");
    a.v *= std::pow(lambda, a.b.value());
    for (auto& [p, s] : a.terms) s *= std::pow(lambda, -p.value());
    return a;
}

// JSON: {"v":..., "terms":[{"p":"1/2","s":...}], "b":"25/36",
//        "alternating":false[, "geometric_base":2]}
inline nlohmann::json to_json(const AsymptoticForm& a) {
    nlohmann::json j;
    j["v"] = static_cast<double>(a.v);
    j["terms"] = nlohmann::json::array();
    for (const auto& [p, s] : a.terms)
        j["terms"].push_back({{"p", p.str()}, {"s", static_cast<double>(s)}});
    j["b"] = a.b.str();
    j["alternating"] = a.sign_mode == SignMode::alternating;
    if (a.geom_base != 1) j["geometric_base"] = static_cast<double>(a.geom_base);
    return j;
}

inline AsymptoticForm form_from_json(const nlohmann::json& j) {
    AsymptoticForm a;
    a.v = j.at("v").get<double>();
    for (const auto& t : j.at("terms"))
        a.terms[Rational::parse(t.at("p").get<std::string>())] = t.at("s").get<double>();
    a.b = Rational::parse(j.at("b").get<std::string>());
    a.sign_mode = j.value("alternating", false) ? SignMode::alternating : SignMode::plain;
    a.geom_base = j.value("geometric_base", 1.0);
    a.check();
    return a;
}

} // namespace qasym

#endif
