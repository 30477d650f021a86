#pragma once

#include "cfk/ratk.hpp"

namespace cfk {

/// Truncated power series in the uniformizer u over K, known modulo u^trunc.
/// Coefficients are stored densely for indices 0..trunc-1.
struct USeriesK {
    int trunc = 0;
    std::vector<RatK> c;

    const RatK& coeff(int i) const { return c[static_cast<size_t>(i)]; }
    bool known_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    /// Order of vanishing on the known window (trunc when identically zero
    /// there).
    int ord_u() const {
        for (int i = 0; i < trunc; ++i)
            if (!c[static_cast<size_t>(i)].is_zero()) return i;
        return trunc;
    }
};

inline USeriesK series_zero(const Ctx& F, int trunc) {
    USeriesK r;
    r.trunc = trunc;
    r.c.assign(static_cast<size_t>(std::max(trunc, 0)), ratk_zero(F));
    return r;
}

inline USeriesK series_const(const Ctx& F, const RatK& a, int trunc) {
    USeriesK r = series_zero(F, trunc);
    if (trunc > 0) r.c[0] = a;
    return r;
}

/// The series u (trusted to trunc).
inline USeriesK series_u(const Ctx& F, int trunc) {
    USeriesK r = series_zero(F, trunc);
    if (trunc > 1) r.c[1] = ratk_one(F);
    return r;
}

inline USeriesK series_truncate(const USeriesK& f, int trunc) {
    if (trunc >= f.trunc) return f;
    USeriesK r;
    r.trunc = trunc;
    r.c.assign(f.c.begin(), f.c.begin() + std::max(trunc, 0));
    return r;
}

inline USeriesK series_add(const Ctx& F, const USeriesK& f, const USeriesK& g) {
    USeriesK r = series_zero(F, std::min(f.trunc, g.trunc));
    for (int i = 0; i < r.trunc; ++i) r.c[static_cast<size_t>(i)] = ratk_add(F, f.coeff(i), g.coeff(i));
    return r;
}

inline USeriesK series_neg(const Ctx& F, const USeriesK& f) {
    USeriesK r = f;
    for (auto& x : r.c) x = ratk_neg(F, x);
    return r;
}

inline USeriesK series_sub(const Ctx& F, const USeriesK& f, const USeriesK& g) {
    return series_add(F, f, series_neg(F, g));
}

inline USeriesK series_scale(const Ctx& F, const RatK& s, const USeriesK& f) {
    USeriesK r = f;
    for (auto& x : r.c) x = ratk_mul(F, s, x);
    return r;
}

/// u^k * f, an exact shift.
inline USeriesK series_shift_up(const Ctx& F, const USeriesK& f, int k) {
    USeriesK r = series_zero(F, f.trunc + k);
    for (int i = 0; i < f.trunc; ++i) r.c[static_cast<size_t>(i + k)] = f.coeff(i);
    return r;
}

/// Product with pessimistic precision: with orders of vanishing o_f, o_g the
/// trusted precision is min(N_f + o_g, N_g + o_f), optionally capped.
inline USeriesK series_mul(const Ctx& F, const USeriesK& f, const USeriesK& g, int cap = kOrdInf) {
    const int of = f.ord_u(), og = g.ord_u();
    long long t = std::min<long long>(static_cast<long long>(f.trunc) + og,
                                      static_cast<long long>(g.trunc) + of);
    t = std::min<long long>(t, cap);
    USeriesK r = series_zero(F, static_cast<int>(t));
    for (int i = of; i < f.trunc; ++i) {
        const RatK& fi = f.coeff(i);
        if (fi.is_zero()) continue;
        const int jmax = std::min(g.trunc, r.trunc - i);
        for (int j = og; j < jmax; ++j) {
            const RatK& gj = g.coeff(j);
            if (gj.is_zero()) continue;
            auto& dst = r.c[static_cast<size_t>(i + j)];
            dst = ratk_add(F, dst, ratk_mul(F, fi, gj));
        }
    }
    return r;
}

/// Inverse of a unit series (nonzero constant term).
inline USeriesK series_inv(const Ctx& F, const USeriesK& f) {
    if (f.trunc < 1 || f.c[0].is_zero()) throw domain_error("inverting a non-unit series");
    USeriesK r = series_zero(F, f.trunc);
    RatK i0 = ratk_inv(F, f.c[0]);
    r.c[0] = i0;
    for (int k = 1; k < f.trunc; ++k) {
        RatK s = ratk_zero(F);
        for (int j = 1; j <= k && j < f.trunc; ++j) {
            if (f.coeff(j).is_zero()) continue;
            s = ratk_add(F, s, ratk_mul(F, f.coeff(j), r.coeff(k - j)));
        }
        r.c[static_cast<size_t>(k)] = ratk_neg(F, ratk_mul(F, i0, s));
    }
    return r;
}

/// P(s) for a polynomial P over K (coefficients ascending) and a series s
/// with vanishing constant term.
inline USeriesK series_compose_poly(const Ctx& F, const std::vector<RatK>& P, const USeriesK& s) {
    if (s.trunc > 0 && !s.c[0].is_zero())
        throw domain_error("composition requires a series with zero constant term");
    USeriesK r = series_zero(F, s.trunc);
    for (size_t j = P.size(); j-- > 0;) {
        r = series_mul(F, r, s, s.trunc);
        r.trunc = s.trunc; // constants are exact; composition trusted to s's window
        r.c.resize(static_cast<size_t>(std::max(r.trunc, 0)), ratk_zero(F));
        if (!P[j].is_zero() && r.trunc > 0) r.c[0] = ratk_add(F, r.c[0], P[j]);
    }
    return r;
}

/// f(s) for series f and s with ord_u(s) >= 1; trusted to
/// min(N_s, N_f * ord_u(s)).
inline USeriesK series_compose(const Ctx& F, const USeriesK& f, const USeriesK& s) {
    if (s.trunc > 0 && !s.c[0].is_zero())
        throw domain_error("composition requires a series with zero constant term");
    const int os = std::max(s.ord_u(), 1);
    long long t = std::min<long long>(s.trunc, static_cast<long long>(f.trunc) * os);
    USeriesK r = series_zero(F, static_cast<int>(t));
    if (r.trunc > 0 && f.trunc > 0) r.c[0] = f.c[0];
    USeriesK spow = series_const(F, ratk_one(F), r.trunc);
    for (int j = 1; j < f.trunc; ++j) {
        if (static_cast<long long>(j) * os >= r.trunc) break;
        spow = series_mul(F, j == 1 ? series_truncate(s, r.trunc) : spow, s, r.trunc);
        spow.trunc = r.trunc;
        spow.c.resize(static_cast<size_t>(r.trunc), ratk_zero(F));
        if (f.coeff(j).is_zero()) continue;
        for (int i = 0; i < r.trunc; ++i) {
            if (spow.coeff(i).is_zero()) continue;
            r.c[static_cast<size_t>(i)] =
                ratk_add(F, r.c[static_cast<size_t>(i)], ratk_mul(F, f.coeff(j), spow.coeff(i)));
        }
    }
    return r;
}

struct SeriesOrdV {
    int ord;    // kOrdInf when zero on the window
    int window; // the statement is "ord >= this infimum on indices < window"
};

/// Infimum of coefficient valuations at v over the known window.
inline SeriesOrdV ord_v_series(const Ctx& F, const USeriesK& f, const Poly& v) {
    if (!v.is_monic() || !irreducible_test(F, v))
        throw domain_error("series valuation requires a monic irreducible");
    int best = kOrdInf;
    for (const auto& x : f.c) {
        if (x.is_zero()) continue;
        int o = poly_ord_at(F, x.num, v) - poly_ord_at(F, x.den, v);
        best = std::min(best, o);
    }
    return {best, f.trunc};
}

/// Coefficient-wise equality on the common trusted window; returns the first
/// mismatching index or -1.
inline int series_first_mismatch(const USeriesK& f, const USeriesK& g) {
    const int w = std::min(f.trunc, g.trunc);
    for (int i = 0; i < w; ++i)
        if (f.coeff(i) != g.coeff(i)) return i;
    return -1;
}

} // namespace cfk
