#pragma once

#include "cfk/forms.hpp"

namespace cfk {

/// Completion data at a finite prime v: residues are computed modulo p_v^M
/// and p-adic exponents modulo p^T.  Requires p^T >= M so that a1-powers are
/// stable mod p_v^M ((1+x)^{p^t} = 1 + x^{p^t} in characteristic p).
struct VContext {
    Poly v;
    int d = 1;            // deg v
    long long qd = 1;     // q^d
    int M = 1;            // residue precision
    int T = 1;            // exponent precision
    long long pT = 1;     // p^T
    Poly vM;              // v^M

    VContext(const Ctx& F, Poly v_, int M_, int T_) : v(std::move(v_)), M(M_), T(T_) {
        if (!v.is_monic() || !irreducible_test(F, v))
            throw domain_error("v must be a monic irreducible");
        if (M < 1) throw domain_error("residue precision must be >= 1");
        d = v.deg();
        for (int i = 0; i < d; ++i) qd *= F.q();
        if (T < 1 || T > 60) throw domain_error("exponent precision out of range");
        for (int i = 0; i < T; ++i) {
            pT *= F.p();
            if (pT > (1LL << 60)) throw domain_error("p^T too large");
        }
        if (pT < M)
            throw precision_error("exponent precision too small: need p^T >= M");
        vM = poly_pow(F, v, M);
    }
};

// ---- arithmetic in A / p_v^M ----

inline Poly vmod_reduce(const Ctx& F, const VContext& V, const Poly& a) { return poly_mod(F, a, V.vM); }
inline Poly vmod_add(const Ctx& F, const VContext& V, const Poly& a, const Poly& b) {
    (void)V;
    return poly_add(F, a, b); // stays reduced: degrees below deg(v^M)
}
inline Poly vmod_sub(const Ctx& F, const VContext& V, const Poly& a, const Poly& b) {
    (void)V;
    return poly_sub(F, a, b);
}
inline Poly vmod_mul(const Ctx& F, const VContext& V, const Poly& a, const Poly& b) {
    return poly_mod(F, poly_mul(F, a, b), V.vM);
}
inline Poly vmod_pow(const Ctx& F, const VContext& V, Poly base, long long e) {
    if (e < 0) throw domain_error("negative exponent in residue ring");
    Poly r = poly_one(F);
    base = vmod_reduce(F, V, base);
    while (e > 0) {
        if (e & 1) r = vmod_mul(F, V, r, base);
        e >>= 1;
        if (e) base = vmod_mul(F, V, base, base);
    }
    return r;
}
inline Poly vmod_inv(const Ctx& F, const VContext& V, const Poly& a) {
    auto [g, u, w] = poly_ext_gcd(F, vmod_reduce(F, V, a), V.vM);
    if (!g.is_one()) throw domain_error("element not invertible mod p_v^M");
    (void)w;
    return vmod_reduce(F, V, u);
}

// ---- weight space S_v = Z/(q^d - 1) x Z_p at finite precision ----

/// Element (x, y) with x mod q^d - 1 and y mod p^T.
struct SvWeight {
    long long x = 0;
    long long y = 0;
    int T = 1;
};

inline SvWeight embed_weight(const VContext& V, long long m) {
    long long x = m % (V.qd - 1);
    if (x < 0) x += V.qd - 1;
    long long y = m % V.pT;
    if (y < 0) y += V.pT;
    return {x, y, V.T};
}

inline SvWeight sv_add(const VContext& V, const SvWeight& a, const SvWeight& b) {
    return {(a.x + b.x) % (V.qd - 1), (a.y + b.y) % V.pT, V.T};
}

/// Teichmuller splitting a = a0 * a1: a0 is the (q^d-1)-st root of unity
/// congruent to a mod v, reached by iterating the q^d-power map to its fixed
/// point mod p_v^M; a1 = a/a0 is congruent to 1 mod v.
inline std::pair<Poly, Poly> teichmuller_split(const Ctx& F, const VContext& V, const Poly& a) {
    Poly r = vmod_reduce(F, V, a);
    if (poly_mod(F, r, V.v).is_zero()) throw domain_error("a must be prime to v");
    for (int iter = 0; iter <= V.M + 2; ++iter) {
        Poly next = vmod_pow(F, V, r, V.qd);
        if (next == r) {
            Poly a0 = r;
            Poly a1 = vmod_mul(F, V, vmod_reduce(F, V, a), vmod_inv(F, V, a0));
            return {a0, a1};
        }
        r = std::move(next);
    }
    throw precision_error("Teichmuller iteration failed to stabilize"); // unreachable
}

/// a^{s_v} = a0^{x} * a1^{y} mod p_v^M for a prime to v.
inline Poly pow_weight(const Ctx& F, const VContext& V, const Poly& a, const SvWeight& s) {
    auto [a0, a1] = teichmuller_split(F, V, a);
    long long x = s.x % (V.qd - 1);
    if (x < 0) x += V.qd - 1;
    long long y = s.y % V.pT;
    if (y < 0) y += V.pT;
    return vmod_mul(F, V, vmod_pow(F, V, a0, x), vmod_pow(F, V, a1, y));
}

/// Membership in S_v(n): x = n mod q-1 and y = 0 mod q^{d(t+1)}, with t the
/// top base-q^d digit index of n.
inline bool sv_membership(const Ctx& F, const VContext& V, const SvWeight& s, long long n) {
    if (n < 1) throw domain_error("n must be positive");
    int t = 0;
    long long nn = n;
    while (nn >= V.qd) {
        nn /= V.qd;
        ++t;
    }
    long long mod = 1; // q^{d(t+1)}
    for (int i = 0; i <= t; ++i) {
        mod *= V.qd;
        if (mod > V.pT)
            throw precision_error("exponent precision too small to test q^{d(t+1)} divisibility");
    }
    if ((s.x - n) % (F.q() - 1) != 0) return false;
    return s.y % mod == 0;
}

// ---- v-adic series ----

/// Coefficient of a VSeries: the coset p_v^{-shift} * (residue + p_v^M A_v).
struct VAdicK {
    int shift = 0;
    Poly residue;
};

/// Truncated series in u with v-adic coefficients under one uniform shift.
struct VSeries {
    int trunc = 0;
    int shift = 0;
    std::vector<Poly> residues;
};

/// Reduce x in K to a residue against shift B: x = p_v^{-B} * (p_v^{B} x),
/// requiring ord_v(x) >= -B.
inline Poly reduce_ratk_at_v(const Ctx& F, const VContext& V, const RatK& x, int B) {
    if (x.is_zero()) return poly_zero();
    Poly n = x.num, dpoly = x.den;
    int en = 0, ed = 0;
    for (;;) {
        auto [qt, r] = poly_divmod(F, n, V.v);
        if (!r.is_zero()) break;
        n = qt;
        ++en;
    }
    for (;;) {
        auto [qt, r] = poly_divmod(F, dpoly, V.v);
        if (!r.is_zero()) break;
        dpoly = qt;
        ++ed;
    }
    int e = B + en - ed;
    if (e < 0)
        throw precision_error("denominator shift bound exceeded at v (ord_v = " +
                              std::to_string(en - ed) + ", bound " + std::to_string(B) + ")");
    Poly r = vmod_mul(F, V, vmod_reduce(F, V, n), vmod_inv(F, V, dpoly));
    if (e > 0) r = vmod_mul(F, V, r, vmod_pow(F, V, V.v, e));
    return r;
}

/// Shift bound B for coefficients built from G_n: the largest denominator
/// valuation at v among the coefficients of G_n.
inline int goss_shift_bound(const Ctx& F, const VContext& V, const GossTable& t, int n) {
    int B = 0;
    for (const auto& c : t.poly(n))
        if (!c.is_zero()) B = std::max(B, poly_ord_at(F, c.den, V.v));
    return B;
}

inline VSeries vseries_from_useries(const Ctx& F, const VContext& V, const USeriesK& f, int B) {
    VSeries r;
    r.trunc = f.trunc;
    r.shift = B;
    r.residues.reserve(f.c.size());
    for (const auto& x : f.c) r.residues.push_back(reduce_ratk_at_v(F, V, x, B));
    return r;
}

struct FhatResult {
    VSeries series;
    SvWeight weight;  // s + n
    int type = 0;     // n mod q-1
    bool sv_member = false; // Serre-form guarantee only applies on S_v(n)
};

/// The interpolated expansion fhat_{s,n} = sum_{a monic, prime to v}
/// a^{s} G_n(u_a) with residues mod p_v^M under the G_n shift bound.
inline FhatResult fhat(const Ctx& F, const VContext& V, const SvWeight& s, int n,
                       const GossTable& carlitz_goss, int N) {
    if (n < 1) throw domain_error("n must be positive");
    const int B = goss_shift_bound(F, V, carlitz_goss, n);
    VSeries acc;
    acc.trunc = N;
    acc.shift = B;
    acc.residues.assign(static_cast<size_t>(std::max(N, 0)), poly_zero());
    const auto& gn = carlitz_goss.poly(n);
    for (int deg = 0;; ++deg) {
        long long qd = 1;
        for (int i = 0; i < deg; ++i) qd *= F.q();
        if (qd >= N) break;
        for (const Poly& a : monic_enumerate(F, deg)) {
            if (poly_mod(F, a, V.v).is_zero()) continue;
            Poly c = pow_weight(F, V, a, s);
            USeriesK term = series_compose_poly(F, gn, u_sub_a(F, a, N).series);
            for (int j = 0; j < N; ++j) {
                if (term.coeff(j).is_zero()) continue;
                Poly rj = reduce_ratk_at_v(F, V, term.coeff(j), B);
                acc.residues[static_cast<size_t>(j)] =
                    vmod_add(F, V, acc.residues[static_cast<size_t>(j)], vmod_mul(F, V, c, rj));
            }
        }
    }
    FhatResult r;
    r.series = std::move(acc);
    r.weight = sv_add(V, s, embed_weight(V, n));
    r.type = static_cast<int>(n % (F.q() - 1));
    r.sv_member = sv_membership(F, V, s, n);
    return r;
}

// ---- convergence witnesses (Serre-form certificate) ----

struct ConvergenceEntry {
    int step = 0;
    int c = 0;            // exponent in the congruence y mod p^c
    long long m = 0;      // integer weight approximant, k = m + n
    long long k = 0;
    bool skipped = false; // inadmissible (k, n); no ord reported
    std::string note;
    int ord = 0;          // certified exactly when !saturated
    bool saturated = false; // difference vanished mod p_v^{work_prec}
};

struct ConvergenceTable {
    std::vector<ConvergenceEntry> entries;
    int window = 0;    // u-window of the comparison
    int work_prec = 0; // residues of the differences computed mod p_v^{work_prec}
};

/// Integer approximants m_i to s: m_i = the smallest CRT solution of
/// m = x mod (q^d - 1), m = y mod p^{c_i} that exceeds the previous step's
/// choice (the witnessing sequence must increase).  Exponent schedule
/// c_i = i.  Reports ord_v(fhat - f_{m_i + n, n}) per step, computed at a
/// working residue precision large enough to certify growing orders; the
/// published interpolation precision of V is unaffected.
inline ConvergenceTable convergence_table(const Ctx& F, const VContext& V, const SvWeight& s, int n,
                                          int steps, int N, const GossTable& carlitz_goss,
                                          int work_prec = 0) {
    if (steps < 1) throw domain_error("steps must be >= 1");
    if (!sv_membership(F, V, s, n))
        throw domain_error("convergence witnesses require s in S_v(n)");
    const int W = std::max(work_prec, V.M);
    VContext VW(F, V.v, W, V.T);
    const int B = goss_shift_bound(F, VW, carlitz_goss, n);
    const auto& gn = carlitz_goss.poly(n);

    // Reduced coefficient rows of G_n(u_a), shared between fhat and every
    // f_{k_i, n}.
    std::vector<std::pair<Poly, std::vector<std::pair<int, Poly>>>> rows; // (a, sparse row)
    for (int deg = 0;; ++deg) {
        long long qd = 1;
        for (int i = 0; i < deg; ++i) qd *= F.q();
        if (qd >= N) break;
        for (const Poly& a : monic_enumerate(F, deg)) {
            USeriesK term = series_compose_poly(F, gn, u_sub_a(F, a, N).series);
            std::vector<std::pair<int, Poly>> row;
            for (int j = 0; j < N; ++j)
                if (!term.coeff(j).is_zero()) row.emplace_back(j, reduce_ratk_at_v(F, VW, term.coeff(j), B));
            rows.emplace_back(a, std::move(row));
        }
    }

    std::vector<Poly> fhat_res(static_cast<size_t>(N), poly_zero());
    for (const auto& [a, row] : rows) {
        if (poly_mod(F, a, VW.v).is_zero()) continue;
        Poly c = pow_weight(F, VW, a, s);
        for (const auto& [j, rj] : row)
            fhat_res[static_cast<size_t>(j)] = vmod_add(F, VW, fhat_res[static_cast<size_t>(j)], vmod_mul(F, VW, c, rj));
    }

    ConvergenceTable table;
    table.window = N;
    table.work_prec = W;
    long long m_prev = 0;
    for (int i = 1; i <= steps; ++i) {
        ConvergenceEntry e;
        e.step = i;
        e.c = i;
        long long pc = 1;
        for (int t = 0; t < i && pc <= VW.pT; ++t) pc *= F.p();
        if (pc > VW.pT)
            throw precision_error("exponent schedule outruns the stored precision of y");
        // CRT on the coprime moduli q^d - 1 and p^{c_i}.
        const long long mod1 = VW.qd - 1, mod2 = pc;
        long long x = ((s.x % mod1) + mod1) % mod1;
        long long y = ((s.y % mod2) + mod2) % mod2;
        long long m = y == 0 ? mod2 : y;
        while (m % mod1 != x || m <= m_prev) m += mod2;
        // Walk to the next admissible weight, recording skips.
        while (!admissible(F, m + n, n).ok) {
            ConvergenceEntry skip = e;
            skip.m = m;
            skip.k = m + n;
            skip.skipped = true;
            skip.note = admissible(F, m + n, n).reason;
            table.entries.push_back(skip);
            m += mod1 * mod2 / std::gcd(mod1, mod2);
        }
        m_prev = m;
        e.m = m;
        e.k = m + n;

        std::vector<Poly> diff = fhat_res;
        for (const auto& [a, row] : rows) {
            Poly c = vmod_pow(F, VW, vmod_reduce(F, VW, a), m);
            for (const auto& [j, rj] : row)
                diff[static_cast<size_t>(j)] = vmod_sub(F, VW, diff[static_cast<size_t>(j)], vmod_mul(F, VW, c, rj));
        }
        int best = kOrdInf;
        for (const auto& r : diff) {
            if (r.is_zero()) continue;
            best = std::min(best, poly_ord_at(F, r, VW.v));
        }
        if (best >= W) {
            e.saturated = true;
            e.ord = W - B;
        } else {
            e.ord = best - B;
        }
        table.entries.push_back(e);
    }
    return table;
}

} // namespace cfk
