#ifndef QASYM_VERIFY_HPP
#define QASYM_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qasym/asymptotic.hpp"
#include "qasym/catalog.hpp"
#include "qasym/series.hpp"

namespace qasym {

enum class Verdict { converging, inconclusive, diverging };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::converging: return "converging";
        case Verdict::diverging: return "diverging";
        default: return "inconclusive";
    }
}

struct Checkpoint {
    std::int64_t n = 0;
    real log_coeff = 0;  // ln|a_n|
    real log_asym = 0;   // ln f(n)
    real delta = 0;      // ln|a_n| - ln f(n)
    real ratio = 0;      // a_n / f(n) (signed)
};

struct VerificationReport {
    std::vector<Checkpoint> checkpoints;
    bool sign_ok = true;
    real trend_slope = 0; // least-squares slope of |delta| against ln n
    Verdict verdict = Verdict::inconclusive;
};

inline std::vector<std::int64_t> default_checkpoints() {
    return {100, 500, 1000, 2000, 5000};
}

namespace detail {

inline void assess(VerificationReport& rep) {
    const auto& cp = rep.checkpoints;
    if (cp.size() >= 2) {
        real sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& c : cp) {
            real x = std::log(static_cast<real>(c.n));
            real y = std::fabs(c.delta);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        real k = static_cast<real>(cp.size());
        rep.trend_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    if (cp.size() >= 3) {
        bool dec = true, inc = true;
        for (std::size_t i = cp.size() - 2; i < cp.size(); ++i) {
            if (!(std::fabs(cp[i].delta) < std::fabs(cp[i - 1].delta))) dec = false;
            if (!(std::fabs(cp[i].delta) > std::fabs(cp[i - 1].delta))) inc = false;
        }
        if (dec && rep.sign_ok)
            rep.verdict = Verdict::converging;
        else if (inc)
            rep.verdict = Verdict::diverging;
        else
            rep.verdict = Verdict::inconclusive;
    }
}

} // namespace detail

// Expands the product and compares ln|a_n| against the predicted form at the
// given checkpoints. Sign disagreements at a checkpoint raise SignMismatch.
inline VerificationReport verify(const ProductSpec& spec, const AsymptoticForm& form,
                                 std::vector<std::int64_t> ns = default_checkpoints()) {
    if (ns.empty()) throw DomainError("no checkpoints");
    std::sort(ns.begin(), ns.end());
    const std::int64_t N = ns.back();
    const bool signed_expand = form.sign_mode == SignMode::alternating;
    SeriesPoly p = signed_expand ? expand_signed(spec, N) : expand(spec, N);
    VerificationReport rep;
    for (std::int64_t n : ns) {
        if (n < 1 || n > N) throw DomainError("checkpoint out of range");
        Checkpoint c;
        c.n = n;
        c.log_coeff = log_abs_coeff(p, n);
        LogValue lv = evaluate_log(form, n);
        c.log_asym = lv.value;
        c.delta = c.log_coeff - c.log_asym;
        int coeff_sign = sgn(p.at(n)) < 0 ? -1 : 1;
        if (coeff_sign != lv.sign)
            throw SignMismatch("sign of a_" + std::to_string(n) +
                               " disagrees with predicted form");
        c.ratio = coeff_sign * lv.sign * std::exp(c.delta);
        rep.checkpoints.push_back(c);
    }
    detail::assess(rep);
    return rep;
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["sign_ok"] = rep.sign_ok;
    j["trend_slope"] = static_cast<double>(rep.trend_slope);
    j["verdict"] = to_string(rep.verdict);
    j["checkpoints"] = nlohmann::json::array();
    for (const auto& c : rep.checkpoints) {
        j["checkpoints"].push_back({{"n", c.n},
                                    {"log_coeff", static_cast<double>(c.log_coeff)},
                                    {"log_asym", static_cast<double>(c.log_asym)},
                                    {"delta", static_cast<double>(c.delta)},
                                    {"ratio", static_cast<double>(c.ratio)}});
    }
    return j;
}

// Simple glob matcher for suite filters: '*' and '?' wildcards.
inline bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p; ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

struct SuiteResult {
    std::string id;
    Params params;
    VerificationReport report;
};

inline std::vector<SuiteResult> run_suite(const std::string& filter = "*",
                                          std::int64_t max_n = 5000) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n : default_checkpoints())
        if (n <= max_n) ns.push_back(n);
    if (ns.empty() || ns.back() != max_n) ns.push_back(max_n);
    std::vector<SuiteResult> out;
    for (const auto& e : catalog()) {
        if (!glob_match(filter, e.id)) continue;
        const Params& params = e.smallest.at(0);
        auto [spec, form] = instantiate(e.id, params);
        out.push_back({e.id, params, verify(spec, form, ns)});
    }
    return out;
}

} // namespace qasym

#endif
