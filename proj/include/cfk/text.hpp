#pragma once

#include "cfk/ratk.hpp"

#include <cctype>
#include <string>

namespace cfk {

// Canonical text forms.  PolyA: terms in descending degree in "T", prime
// field coefficients as integers 0..p-1, extension coefficients as
// polynomials in "w" (parenthesized when attached to a power of T with more
// than one term), e.g. "(w+1)*T^2+w".  RatK: "num/den", "/den" omitted when
// the denominator is 1.

inline std::string fq_to_string(const Ctx& F, Fq a) {
    if (a.is_zero()) return "0";
    if (F.m0() == 1) return std::to_string(a.v);
    std::string out;
    int v = a.v;
    std::vector<int> coord(static_cast<size_t>(F.m0()));
    for (int i = 0; i < F.m0(); ++i) {
        coord[static_cast<size_t>(i)] = v % F.p();
        v /= F.p();
    }
    for (int i = F.m0() - 1; i >= 0; --i) {
        int d = coord[static_cast<size_t>(i)];
        if (d == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d);
        } else {
            if (d != 1) {
                out += std::to_string(d);
                out += '*';
            }
            out += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string poly_to_string(const Ctx& F, const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int k = a.deg(); k >= 0; --k) {
        Fq c = a.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        std::string ct = fq_to_string(F, c);
        if (k == 0) {
            out += ct; // bare constant; theta-free addends re-accumulate on parse
            continue;
        }
        if (!c.is_one()) {
            bool multi = ct.find('+') != std::string::npos;
            if (multi) out += '(' + ct + ')';
            else out += ct;
            out += '*';
        }
        out += (k == 1) ? "T" : "T^" + std::to_string(k);
    }
    return out;
}

inline std::string ratk_to_string(const Ctx& F, const RatK& x) {
    std::string out = poly_to_string(F, x.num);
    if (!x.den.is_one()) {
        out += '/';
        out += poly_to_string(F, x.den);
    }
    return out;
}

namespace detail {

struct TextCursor {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        long long n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (s[pos] - '0');
            ++pos;
            if (n > (1LL << 40)) fail("number too large");
        }
        return n;
    }
};

// One power-of-w factor with optional integer coefficient: INT, w, w^k,
// INT*w, INT*w^k.  Never consumes a '*' that is not followed by 'w'.
inline Fq parse_fq_term(const Ctx& F, TextCursor& cur) {
    long long d = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        d = cur.number();
        if (d >= F.p()) cur.fail("coefficient not reduced mod p");
        bool star_w = cur.peek() == '*' && cur.pos + 1 < cur.s.size() && cur.s[cur.pos + 1] == 'w';
        if (!star_w) return F.from_int(d);
        cur.eat('*');
    }
    if (!cur.eat('w')) cur.fail("expected coefficient");
    long long k = 1;
    if (cur.eat('^')) k = cur.number();
    if (k >= F.m0()) cur.fail("w power exceeds extension degree");
    long long enc = d;
    for (long long i = 0; i < k; ++i) enc *= F.p();
    return F.elem(static_cast<int>(enc));
}

inline Fq parse_fq_sum(const Ctx& F, TextCursor& cur, char stop) {
    Fq acc = F.zero();
    for (;;) {
        acc = F.add(acc, parse_fq_term(F, cur));
        if (cur.peek() == stop || cur.done()) return acc;
        if (!cur.eat('+')) cur.fail("expected + in coefficient");
    }
}

} // namespace detail

inline Fq fq_from_string(const Ctx& F, const std::string& s) {
    detail::TextCursor cur{s};
    Fq v = detail::parse_fq_sum(F, cur, '\0');
    if (!cur.done()) cur.fail("trailing input");
    return v;
}

inline Poly poly_from_string(const Ctx& F, const std::string& s) {
    detail::TextCursor cur{s};
    if (s.empty()) cur.fail("empty polynomial");
    Poly acc;
    for (;;) {
        // One addend: either a T-term with optional coefficient factor, or a
        // theta-free coefficient term folded into the constant.
        Fq coef = F.one();
        if (cur.eat('(')) {
            coef = detail::parse_fq_sum(F, cur, ')');
            if (!cur.eat(')')) cur.fail("expected )");
            if (!cur.eat('*')) cur.fail("expected * after )");
        } else if (cur.peek() != 'T') {
            coef = detail::parse_fq_term(F, cur);
            if (!cur.eat('*')) {
                // constant addend
                acc = poly_add(F, acc, poly_const(F, coef));
                if (cur.done()) break;
                if (!cur.eat('+')) cur.fail("expected +");
                continue;
            }
        }
        if (!cur.eat('T')) cur.fail("expected T");
        long long k = 1;
        if (cur.eat('^')) k = cur.number();
        if (k > 100000) cur.fail("degree too large");
        Poly t;
        t.c.assign(static_cast<size_t>(k) + 1, F.zero());
        t.c.back() = coef;
        t.trim();
        acc = poly_add(F, acc, t);
        if (cur.done()) break;
        if (!cur.eat('+')) cur.fail("expected +");
    }
    return acc;
}

inline RatK ratk_from_string(const Ctx& F, const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return ratk_from_poly(F, poly_from_string(F, s));
    Poly num = poly_from_string(F, s.substr(0, slash));
    Poly den = poly_from_string(F, s.substr(slash + 1));
    if (den.is_zero()) throw parse_error("zero denominator in \"" + s + "\"");
    if (!den.is_monic()) throw parse_error("non-monic denominator at position " + std::to_string(slash + 1) + " in \"" + s + "\"");
    if (!poly_gcd(F, num, den).is_one())
        throw parse_error("fraction not in lowest terms in \"" + s + "\"");
    return RatK{std::move(num), std::move(den)};
}

} // namespace cfk
