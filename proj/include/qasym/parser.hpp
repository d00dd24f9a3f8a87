#ifndef QASYM_PARSER_HPP
#define QASYM_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "qasym/spec.hpp"

namespace qasym {

// Recursive-descent parser for the q-product DSL:
//
//   product  := prod { "*" prod }
//   prod     := "prod(" "k>=" ("0"|"1") "," ratio ")"
//   ratio    := term | term "/" term | "1" "/" term
//   term     := factor { "*" factor } | "(" factor { "*" factor } ")"
//   factor   := "(" ("1+"|"1-") "q^" exp ")" [ "^" epow ]
//   exp      := "k" | "(" linear ")"
//   epow     := integer | "k" | "(" linear ")" | "k^" integer | integer "^k"
//   linear   := [integer "*"] "k" [("+"|"-") integer]
//
// Whitespace-insensitive. `q` is the fixed formal variable.
class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    ProductSpec parse() {
        ProductSpec spec;
        parse_prod(spec);
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            parse_prod(spec);
            skip_ws();
        }
        if (!eof()) fail("unexpected trailing input");
        spec.check();
        canonicalize(spec);
        return spec;
    }

private:
    void parse_prod(ProductSpec& spec) {
        expect_word("prod");
        expect('(');
        expect_word("k");
        expect('>');
        expect('=');
        skip_ws();
        int start;
        if (!eof() && (peek() == '0' || peek() == '1')) start = take() - '0';
        else { fail("expected k-start 0 or 1"); return; }
        expect(',');
        parse_ratio(spec, start);
        expect(')');
    }

    void parse_ratio(ProductSpec& spec, int start) {
        skip_ws();
        bool bare_one = false;
        if (!eof() && peek() == '1' && !starts_factor()) {
            ++pos_; // "1" / term
            bare_one = true;
        } else {
            parse_term(spec, start, FactorLocation::numerator);
        }
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            parse_term(spec, start, FactorLocation::denominator);
        } else if (bare_one) {
            fail("expected '/' after 1");
        }
    }

    void parse_term(ProductSpec& spec, int start, FactorLocation loc) {
        skip_ws();
        // "((1..." is a grouped term, "(1..." a single factor
        bool grouped = false;
        if (!eof() && peek() == '(') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            grouped = !eof() && peek() == '(';
            pos_ = save;
        }
        if (grouped) ++pos_;
        spec.factors.push_back(parse_factor(start, loc));
        skip_ws();
        while (!eof() && peek() == '*') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (eof() || peek() != '(' || lookahead_word("prod", pos_)) {
                pos_ = save; // the '*' belongs to an enclosing product list
                break;
            }
            spec.factors.push_back(parse_factor(start, loc));
            skip_ws();
        }
        if (grouped) expect(')');
    }

    FactorTerm parse_factor(int start, FactorLocation loc) {
        FactorTerm f;
        f.kstart = start;
        f.location = loc;
        expect('(');
        expect('1');
        skip_ws();
        char c = eof() ? '\0' : take();
        if (c == '+') f.sign = FactorSign::plus;
        else if (c == '-') f.sign = FactorSign::minus;
        else fail("expected '+' or '-' after 1");
        expect_word("q");
        expect('^');
        parse_exp(f);
        expect(')');
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            f.exponent = parse_epow();
        } else {
            f.exponent = ExponentFn::constant(1);
        }
        f.check();
        return f;
    }

    void parse_exp(FactorTerm& f) {
        skip_ws();
        if (!eof() && peek() == 'k') {
            ++pos_;
            f.step = 1;
            f.offset = 0;
            return;
        }
        if (!eof() && peek() == '(') {
            ++pos_;
            auto [s, t, is_linear] = parse_linear();
            if (!is_linear)
                throw ValidationError("exponent of q must depend on k");
            f.step = s;
            f.offset = t;
            expect(')');
            return;
        }
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            throw ValidationError("exponent of q must depend on k");
        fail("expected q-exponent");
    }

    ExponentFn parse_epow() {
        skip_ws();
        if (eof()) fail("expected exponent");
        if (peek() == 'k') {
            ++pos_;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                return ExponentFn::power(parse_int());
            }
            return ExponentFn::power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::int64_t m = parse_int();
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                expect_word("k");
                return ExponentFn::geometric(m);
            }
            return ExponentFn::constant(m);
        }
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            // parenthesized: linear, k^m or m^k
            if (!eof() && peek() == 'k') {
                std::size_t save = pos_;
                ++pos_;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    auto e = ExponentFn::power(parse_int());
                    expect(')');
                    return e;
                }
                pos_ = save;
            } else if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t save = pos_;
                std::int64_t m = parse_int();
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    expect_word("k");
                    expect(')');
                    return ExponentFn::geometric(m);
                }
                pos_ = save;
            }
            auto [s, t, is_linear] = parse_linear();
            expect(')');
            if (!is_linear) return ExponentFn::constant(s == 0 ? t : s);
            if (t == 0) return ExponentFn::affine(s, 0);
            return ExponentFn::affine(s, t);
        }
        fail("expected exponent");
        return ExponentFn::constant(1);
    }

    // Returns (s, t, depends_on_k) for "s*k+t", "sk+t", "k+t", "k", or "t".
    std::tuple<std::int64_t, std::int64_t, bool> parse_linear() {
        skip_ws();
        std::int64_t s = 0, t = 0;
        bool has_k = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::int64_t v = parse_int();
            skip_ws();
            if (!eof() && (peek() == '*' || peek() == 'k')) {
                if (peek() == '*') { ++pos_; skip_ws(); }
                expect_word("k");
                s = v;
                has_k = true;
            } else {
                return {0, v, false};
            }
        } else if (!eof() && peek() == 'k') {
            ++pos_;
            s = 1;
            has_k = true;
        } else {
            fail("expected linear expression in k");
        }
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            char op = take();
            std::int64_t v = parse_int();
            t = (op == '+') ? v : -v;
        }
        return {s, t, has_k};
    }

    std::int64_t parse_int() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        std::int64_t v = 0;
        std::size_t digits = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (++digits > 12) fail("integer literal too large");
            v = v * 10 + (take() - '0');
        }
        return v;
    }

    // Rewrite a k>=0 progression with t > s into the equivalent k>=1 form.
    // Only safe when the factor exponent does not depend on k.
    static void canonicalize(ProductSpec& spec) {
        for (auto& f : spec.factors) {
            bool k_free = f.exponent.kind == ExponentFn::Kind::constant;
            if (k_free && f.kstart == 0 && f.offset > f.step) {
                f.kstart = 1;
                f.offset -= f.step;
            }
        }
    }

    bool starts_factor() {
        // distinguishes leading "1/" from a factor "(1..."
        std::size_t save = pos_;
        bool r = false;
        if (!eof() && peek() == '1') {
            ++pos_;
            skip_ws();
            r = !eof() && (peek() == '+' || peek() == '-');
        }
        pos_ = save;
        return r;
    }

    bool lookahead_word(const char* w, std::size_t from) const {
        std::size_t i = from;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        for (const char* p = w; *p; ++p, ++i)
            if (i >= text_.size() || text_[i] != *p) return false;
        return true;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0)
            fail("expected '" + w + "'");
        pos_ += w.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(pos_, what);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

inline ProductSpec parse(const std::string& text) { return Parser(text).parse(); }

} // namespace qasym

#endif
