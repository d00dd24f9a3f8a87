#ifndef QASYM_RATIONAL_HPP
#define QASYM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <compare>

#include "qasym/errors.hpp"

namespace qasym {

// Exact rational on int64. Exponents p and n-powers b in asymptotic forms are
// always small rationals (denominators like 2, 3, 36, 2m+4), so overflow is
// not a practical concern; ops normalize eagerly.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    long double value() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // "num/den", or just "num" when integral.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace qasym

#endif
