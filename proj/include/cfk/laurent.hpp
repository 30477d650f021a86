#pragma once

#include "cfk/poly.hpp"

namespace cfk {

/// Truncated element of K_infty = F_q((1/theta)).  Written in x = 1/theta:
/// value = sum_{j >= lead} c[j - lead] x^j, known modulo x^prec.  Precision
/// is explicit per value and tracked pessimistically through arithmetic.
/// c may be shorter than prec - lead; missing entries are exactly zero.
struct LaurentInf {
    int lead = 0;
    int prec = 0; // lead <= prec
    std::vector<Fq> c;

    Fq coeff(int j) const {
        if (j < lead || j >= prec) return Fq{0};
        return c[static_cast<size_t>(j - lead)];
    }
    bool known_zero() const {
        for (auto x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    void normalize() {
        while (!c.empty() && c.front().is_zero()) {
            c.erase(c.begin());
            ++lead;
        }
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        if (c.empty()) lead = prec;
    }
};

inline LaurentInf laurent_zero(int prec) { return LaurentInf{prec, prec, {}}; }

/// Exact polynomial in theta viewed in K_infty at the given precision.
inline LaurentInf laurent_from_poly(const Ctx& F, const Poly& a, int prec) {
    LaurentInf r;
    r.prec = prec;
    if (a.is_zero() || -a.deg() >= prec) {
        r.lead = prec;
        return r;
    }
    r.lead = -a.deg();
    r.c.assign(static_cast<size_t>(prec - r.lead), F.zero());
    for (int j = 0; j <= a.deg(); ++j)
        if (-j < prec) r.c[static_cast<size_t>(-j - r.lead)] = a.coeff(j);
    r.normalize();
    return r;
}

inline LaurentInf laurent_add(const Ctx& F, const LaurentInf& a, const LaurentInf& b) {
    LaurentInf r;
    r.prec = std::min(a.prec, b.prec);
    r.lead = std::min(std::min(a.lead, b.lead), r.prec);
    r.c.assign(static_cast<size_t>(r.prec - r.lead), F.zero());
    for (int j = r.lead; j < r.prec; ++j)
        r.c[static_cast<size_t>(j - r.lead)] = F.add(a.coeff(j), b.coeff(j));
    r.normalize();
    return r;
}

inline LaurentInf laurent_mul(const Ctx& F, const LaurentInf& a, const LaurentInf& b) {
    LaurentInf r;
    r.prec = std::min(a.prec + b.lead, b.prec + a.lead);
    r.lead = std::min(a.lead + b.lead, r.prec);
    r.c.assign(static_cast<size_t>(r.prec - r.lead), F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            int e = a.lead + static_cast<int>(i) + b.lead + static_cast<int>(j);
            if (e >= r.prec) break;
            size_t idx = static_cast<size_t>(e - r.lead);
            r.c[idx] = F.add(r.c[idx], F.mul(a.c[i], b.c[j]));
        }
    }
    r.normalize();
    return r;
}

/// Inverse of a unit (nonzero leading coefficient required).
inline LaurentInf laurent_inv(const Ctx& F, const LaurentInf& a) {
    if (a.c.empty() || a.c[0].is_zero())
        throw domain_error("Laurent inverse requires an exactly known leading term");
    LaurentInf r;
    r.lead = -a.lead;
    r.prec = a.prec - 2 * a.lead;
    int n = r.prec - r.lead;
    r.c.assign(static_cast<size_t>(n), F.zero());
    Fq il = F.inv(a.c[0]);
    r.c[0] = il;
    for (int t = 1; t < n; ++t) {
        // coefficient of x^{a.lead + t} in a * r must vanish
        Fq s = F.zero();
        for (int u = 1; u <= t && u < static_cast<int>(a.c.size()); ++u)
            s = F.add(s, F.mul(a.c[static_cast<size_t>(u)], r.c[static_cast<size_t>(t - u)]));
        r.c[static_cast<size_t>(t)] = F.neg(F.mul(il, s));
    }
    return r;
}

inline LaurentInf laurent_pow(const Ctx& F, const LaurentInf& a, long long e) {
    if (e < 0) return laurent_pow(F, laurent_inv(F, a), -e);
    // Start from an exact 1 so precision flows from the base alone.
    LaurentInf r;
    r.lead = 0;
    r.prec = 1 << 28;
    r.c.assign(1, F.one());
    LaurentInf base = a;
    while (e > 0) {
        if (e & 1) r = laurent_mul(F, r, base);
        e >>= 1;
        if (e) base = laurent_mul(F, base, base);
    }
    return r;
}

} // namespace cfk
