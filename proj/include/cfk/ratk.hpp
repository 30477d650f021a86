#pragma once

#include "cfk/poly.hpp"

namespace cfk {

/// Element of K = F_q(theta) in canonical form: den monic, gcd(num,den) = 1,
/// zero is 0/1.
struct RatK {
    Poly num;
    Poly den; // monic, nonzero

    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den.is_one(); }

    friend bool operator==(const RatK& a, const RatK& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const RatK& a, const RatK& b) { return !(a == b); }
};

inline RatK ratk_normalize(const Ctx& F, Poly num, Poly den) {
    if (den.is_zero()) throw domain_error("zero denominator in K");
    if (num.is_zero()) return RatK{poly_zero(), poly_one(F)};
    Poly g = poly_gcd(F, num, den);
    if (!g.is_one()) {
        num = poly_divmod(F, num, g).first;
        den = poly_divmod(F, den, g).first;
    }
    if (!den.is_monic()) {
        Fq il = F.inv(den.lead());
        num = poly_scale(F, il, num);
        den = poly_scale(F, il, den);
    }
    return RatK{std::move(num), std::move(den)};
}

inline RatK ratk_zero(const Ctx& F) { return RatK{poly_zero(), poly_one(F)}; }
inline RatK ratk_one(const Ctx& F) { return RatK{poly_one(F), poly_one(F)}; }
inline RatK ratk_from_poly(const Ctx& F, Poly a) { return RatK{std::move(a), poly_one(F)}; }
inline RatK ratk_from_int(const Ctx& F, long long n) { return ratk_from_poly(F, poly_from_int(F, n)); }

inline RatK ratk_add(const Ctx& F, const RatK& a, const RatK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return ratk_normalize(F, poly_add(F, a.num, b.num), a.den);
    Poly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return ratk_normalize(F, std::move(num), poly_mul(F, a.den, b.den));
}

inline RatK ratk_neg(const Ctx& F, const RatK& a) { return RatK{poly_neg(F, a.num), a.den}; }
inline RatK ratk_sub(const Ctx& F, const RatK& a, const RatK& b) { return ratk_add(F, a, ratk_neg(F, b)); }

inline RatK ratk_mul(const Ctx& F, const RatK& a, const RatK& b) {
    if (a.is_zero() || b.is_zero()) return ratk_zero(F);
    if (a.is_integral() && b.is_integral())
        return RatK{poly_mul(F, a.num, b.num), a.den};
    // Cross-cancel first so the final gcd is trivial.
    Poly g1 = poly_gcd(F, a.num, b.den);
    Poly g2 = poly_gcd(F, b.num, a.den);
    Poly n1 = g1.is_one() ? a.num : poly_divmod(F, a.num, g1).first;
    Poly d2 = g1.is_one() ? b.den : poly_divmod(F, b.den, g1).first;
    Poly n2 = g2.is_one() ? b.num : poly_divmod(F, b.num, g2).first;
    Poly d1 = g2.is_one() ? a.den : poly_divmod(F, a.den, g2).first;
    return ratk_normalize(F, poly_mul(F, n1, n2), poly_mul(F, d1, d2));
}

inline RatK ratk_inv(const Ctx& F, const RatK& a) {
    if (a.is_zero()) throw domain_error("division by zero in K");
    return ratk_normalize(F, a.den, a.num);
}

inline RatK ratk_div(const Ctx& F, const RatK& a, const RatK& b) { return ratk_mul(F, a, ratk_inv(F, b)); }

inline RatK ratk_scale(const Ctx& F, Fq s, const RatK& a) {
    if (s.is_zero() || a.is_zero()) return ratk_zero(F);
    return RatK{poly_scale(F, s, a.num), a.den};
}

inline RatK ratk_pow(const Ctx& F, const RatK& a, long long e) {
    if (e < 0) return ratk_pow(F, ratk_inv(F, a), -e);
    RatK r = ratk_one(F), base = a;
    while (e > 0) {
        if (e & 1) r = ratk_mul(F, r, base);
        e >>= 1;
        if (e) base = ratk_mul(F, base, base);
    }
    return r;
}

/// Exact v-adic valuation on K; ord(0) = kOrdInf.  v must be monic
/// irreducible (validated here; use poly_ord_at directly on hot paths).
inline int ord_v(const Ctx& F, const RatK& x, const Poly& v) {
    if (!v.is_monic() || !irreducible_test(F, v)) throw domain_error("valuation requires a monic irreducible");
    if (x.is_zero()) return kOrdInf;
    return poly_ord_at(F, x.num, v) - poly_ord_at(F, x.den, v);
}

} // namespace cfk
