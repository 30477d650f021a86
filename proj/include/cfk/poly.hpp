#pragma once

#include "cfk/fq.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace cfk {

/// +infinity sentinel for valuations; ordered above every attainable order.
inline constexpr int kOrdInf = std::numeric_limits<int>::max();

/// Element of A = F_q[theta].  Coefficients ascending by degree, canonical
/// form keeps no trailing zeros; the zero polynomial has an empty vector and
/// degree -1 (standing in for the -infinity sentinel).
struct Poly {
    std::vector<Fq> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Fq lead() const { return c.empty() ? Fq{0} : c.back(); }
    Fq coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? Fq{0} : c[static_cast<size_t>(i)];
    }
    bool is_one() const { return c.size() == 1 && c[0].is_one(); }
    bool is_monic() const { return !c.empty() && c.back().is_one(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
    // Lexicographic-by-degree total order, used only for canonical maps/sets.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        for (size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    }
};

inline Poly poly_zero() { return {}; }
inline Poly poly_const(const Ctx& F, Fq v) {
    Poly r;
    if (!v.is_zero()) r.c = {v};
    (void)F;
    return r;
}
inline Poly poly_one(const Ctx& F) { return poly_const(F, F.one()); }
/// theta^k
inline Poly poly_theta(const Ctx& F, int k = 1) {
    Poly r;
    r.c.assign(static_cast<size_t>(k) + 1, F.zero());
    r.c.back() = F.one();
    return r;
}
inline Poly poly_from_int(const Ctx& F, long long n) { return poly_const(F, F.from_int(n)); }

inline Poly poly_add(const Ctx& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

inline Poly poly_neg(const Ctx& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

inline Poly poly_sub(const Ctx& F, const Poly& a, const Poly& b) { return poly_add(F, a, poly_neg(F, b)); }

inline Poly poly_scale(const Ctx& F, Fq s, const Poly& a) {
    if (s.is_zero()) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(s, x);
    r.trim();
    return r;
}

inline Poly poly_mul(const Ctx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

/// Exact division with remainder: a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Ctx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    Poly rem = a, quot;
    if (a.deg() < b.deg()) return {quot, rem};
    quot.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, F.zero());
    const Fq invlead = F.inv(b.lead());
    for (int k = a.deg(); k >= b.deg(); --k) {
        if (rem.deg() < k) continue;
        Fq c = F.mul(rem.c[static_cast<size_t>(k)], invlead);
        if (c.is_zero()) continue;
        quot.c[static_cast<size_t>(k - b.deg())] = c;
        for (int j = 0; j <= b.deg(); ++j) {
            size_t idx = static_cast<size_t>(k - b.deg() + j);
            rem.c[idx] = F.sub(rem.c[idx], F.mul(c, b.c[static_cast<size_t>(j)]));
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline Poly poly_mod(const Ctx& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

inline Poly poly_make_monic(const Ctx& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(F, F.inv(a.lead()), a);
}

/// Monic gcd.
inline Poly poly_gcd(const Ctx& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Ctx& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = poly_one(F), s1 = poly_zero();
    Poly t0 = poly_zero(), t1 = poly_one(F);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        Poly s = poly_sub(F, s0, poly_mul(F, q, s1));
        Poly t = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        Fq il = F.inv(r0.lead());
        r0 = poly_scale(F, il, r0);
        s0 = poly_scale(F, il, s0);
        t0 = poly_scale(F, il, t0);
    }
    return {r0, s0, t0};
}

inline Poly poly_pow(const Ctx& F, Poly base, long long e) {
    if (e < 0) throw domain_error("negative polynomial power");
    Poly r = poly_one(F);
    while (e > 0) {
        if (e & 1) r = poly_mul(F, r, base);
        e >>= 1;
        if (e) base = poly_mul(F, base, base);
    }
    return r;
}

/// q-power Frobenius: (sum c_i theta^i)^q = sum c_i theta^{iq}, since the
/// coefficients are fixed by x -> x^q.
inline Poly poly_frobenius_q(const Ctx& F, const Poly& a) {
    if (a.is_zero()) return {};
    Poly r;
    r.c.assign(static_cast<size_t>(a.deg()) * F.q() + 1, F.zero());
    for (int i = 0; i <= a.deg(); ++i) r.c[static_cast<size_t>(i) * F.q()] = a.c[static_cast<size_t>(i)];
    return r;
}

inline Fq poly_eval(const Ctx& F, const Poly& a, Fq x) {
    Fq r = F.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

/// The q^d monic polynomials of degree exactly d, in lexicographic order on
/// the coefficient vector (c_0, ..., c_{d-1}) with elements in canonical
/// encoding order.
inline std::vector<Poly> monic_enumerate(const Ctx& F, int d) {
    if (d < 0) throw domain_error("negative degree");
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        Poly f;
        f.c.assign(static_cast<size_t>(d) + 1, F.zero());
        f.c[static_cast<size_t>(d)] = F.one();
        long long t = idx;
        for (int j = 0; j < d; ++j) { // c_0 most significant
            f.c[static_cast<size_t>(d - 1 - j)] = F.elem(static_cast<int>(t % F.q()));
            t /= F.q();
        }
        out.push_back(std::move(f));
    }
    return out;
}

/// Companion variant: all q^d polynomials of degree < d (the F_q-module A_d).
inline std::vector<Poly> poly_space_below(const Ctx& F, int d) {
    if (d < 0) throw domain_error("negative degree");
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        Poly f;
        f.c.assign(static_cast<size_t>(d), F.zero());
        long long t = idx;
        for (int j = 0; j < d; ++j) {
            f.c[static_cast<size_t>(d - 1 - j)] = F.elem(static_cast<int>(t % F.q()));
            t /= F.q();
        }
        f.trim();
        out.push_back(std::move(f));
    }
    return out;
}

/// True iff g is irreducible over F_q.  Trial division by all monic
/// polynomials of degree <= deg(g)/2; any factorization has such a factor.
inline bool irreducible_test(const Ctx& F, const Poly& g) {
    if (g.is_zero()) throw domain_error("irreducibility of zero is undefined");
    const int d = g.deg();
    if (d == 0) return false; // units are not irreducible
    if (d == 1) return true;
    for (int e = 1; 2 * e <= d; ++e)
        for (const Poly& f : monic_enumerate(F, e))
            if (poly_mod(F, g, f).is_zero()) return false;
    return true;
}

/// Exact valuation of a polynomial at a monic irreducible v; ord(0) = kOrdInf.
/// Callers validate irreducibility of v.
inline int poly_ord_at(const Ctx& F, Poly a, const Poly& v) {
    if (a.is_zero()) return kOrdInf;
    int ord = 0;
    for (;;) {
        auto [q, r] = poly_divmod(F, a, v);
        if (!r.is_zero()) return ord;
        ++ord;
        a = std::move(q);
        if (a.is_zero()) return ord; // cannot happen for nonzero input
    }
}

} // namespace cfk
