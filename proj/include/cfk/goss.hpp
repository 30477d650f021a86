#pragma once

#include "cfk/carlitz.hpp"
#include "cfk/useries.hpp"

namespace cfk {

/// Goss polynomials G_{1..n_max, Lambda} for a lattice given by exponential
/// coefficients.  polys[k] is the coefficient vector of G_k (ascending in X);
/// each G_k is monic of degree k with zero constant term.
struct GossTable {
    ExpCoeffs lattice;
    std::vector<std::vector<RatK>> polys; // index k in 1..n_max; polys[0] unused

    int n_max() const { return static_cast<int>(polys.size()) - 1; }
    const std::vector<RatK>& poly(int k) const {
        if (k < 1 || k > n_max()) throw precision_error("Goss table too short for index " + std::to_string(k));
        return polys[static_cast<size_t>(k)];
    }
};

/// Recursion G_1 = X, G_n = X*(G_{n-1} + sum_{i>=1} alpha_i G_{n-q^i}) with
/// G_j = 0 for j <= 0.  The defining identity G_k(1/e(z)) = S_k(z) is what
/// certifies this convention; see verify_goss_identity.
inline GossTable goss_table(const Ctx& F, const ExpCoeffs& lattice, int n_max) {
    if (n_max < 1) throw domain_error("goss_table requires n_max >= 1");
    GossTable t;
    t.lattice = lattice;
    t.polys.assign(static_cast<size_t>(n_max) + 1, {});
    t.polys[1] = {ratk_zero(F), ratk_one(F)};
    // Gather the alphas the recursion will touch, failing loudly if the
    // prefix is too short for an infinite lattice.
    std::vector<RatK> alpha;
    std::vector<long long> qpow;
    for (long long qi = F.q(); qi < n_max; qi *= F.q()) {
        alpha.push_back(lattice.alpha(F, static_cast<int>(alpha.size()) + 1));
        qpow.push_back(qi);
    }
    for (int n = 2; n <= n_max; ++n) {
        std::vector<RatK> body = t.polys[static_cast<size_t>(n - 1)]; // G_{n-1}
        for (size_t i = 0; i < qpow.size(); ++i) {
            const long long back = n - qpow[i];
            if (back < 1) break;
            if (alpha[i].is_zero()) continue;
            const auto& gb = t.polys[static_cast<size_t>(back)];
            if (body.size() < gb.size()) body.resize(gb.size(), ratk_zero(F));
            for (size_t r = 0; r < gb.size(); ++r)
                if (!gb[r].is_zero()) body[r] = ratk_add(F, body[r], ratk_mul(F, alpha[i], gb[r]));
        }
        std::vector<RatK> gn(body.size() + 1, ratk_zero(F));
        for (size_t r = 0; r < body.size(); ++r) gn[r + 1] = body[r];
        t.polys[static_cast<size_t>(n)] = std::move(gn);
    }
    return t;
}

/// G_n(s) as a truncated series.
inline USeriesK goss_eval_series(const Ctx& F, const GossTable& t, int n, const USeriesK& s) {
    return series_compose_poly(F, t.poly(n), s);
}

/// Binomial coefficient mod p by Lucas' theorem, as an integer in [0, p).
inline int binom_mod_p(long long n, long long r, int p) {
    if (r < 0 || r > n) return 0;
    auto inv_mod = [p](long long a) {
        long long r = 1, b = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    long long result = 1;
    while (n > 0 || r > 0) {
        long long nd = n % p, rd = r % p;
        if (rd > nd) return 0;
        long long c = 1;
        for (long long i = 1; i <= rd; ++i) c = c * ((nd - i + 1) % p) % p * inv_mod(i) % p;
        result = result * c % p;
        n /= p;
        r /= p;
    }
    return static_cast<int>(result);
}

/// binom(-k, j) mod p = (-1)^j binom(k+j-1, j) mod p.
inline int binom_neg_mod_p(long long k, long long j, int p) {
    int b = binom_mod_p(k + j - 1, j, p);
    if (j % 2 == 1) b = (p - b) % p;
    return b;
}

/// Power sums p_j = sum lambda^j over the q^d - 1 nonzero g-torsion points,
/// computed from the elementary symmetric functions read off C_g(X)/X via
/// Newton's identities (division-free, valid in characteristic p).
struct PowerSums {
    Poly g;
    std::vector<Poly> p; // p[j] for j = 0..j_max
};

inline PowerSums power_sums(const Ctx& F, const Poly& g, int j_max) {
    if (!g.is_monic() || !irreducible_test(F, g))
        throw domain_error("power sums require a monic irreducible");
    AdditivePoly cg = carlitz_poly(F, g);
    // psi(X) = C_g(X)/X, monic of degree m = q^d - 1, coefficient c_i of
    // C_g landing at degree q^i - 1.
    long long m = 1;
    for (int i = 0; i < g.deg(); ++i) m *= F.q();
    m -= 1;
    // e[i] = (-1)^i * coeff_{m-i}(psi), nonzero only when m-i = q^t - 1.
    std::vector<Poly> e(static_cast<size_t>(m) + 1);
    e[0] = poly_one(F);
    for (int t = 0; t <= cg.top(); ++t) {
        long long qt = 1;
        for (int i = 0; i < t; ++i) qt *= F.q();
        long long i = m - (qt - 1);
        if (i < 0 || i > m) continue;
        Poly v = cg.coeff(t);
        if (i % 2 == 1) v = poly_neg(F, v);
        e[static_cast<size_t>(i)] = v;
    }
    PowerSums ps;
    ps.g = g;
    ps.p.resize(static_cast<size_t>(j_max) + 1);
    ps.p[0] = poly_from_int(F, m); // = -1 in characteristic p
    for (long long k = 1; k <= j_max; ++k) {
        Poly acc = poly_zero();
        const long long top = std::min<long long>(k - 1, m);
        for (long long i = 1; i <= top; ++i) {
            if (e[static_cast<size_t>(i)].is_zero() || ps.p[static_cast<size_t>(k - i)].is_zero()) continue;
            Poly term = poly_mul(F, e[static_cast<size_t>(i)], ps.p[static_cast<size_t>(k - i)]);
            if (i % 2 == 0) term = poly_neg(F, term);
            acc = poly_add(F, acc, term);
        }
        if (k <= m) {
            Poly term = poly_scale(F, F.from_int(k), e[static_cast<size_t>(k)]);
            if (k % 2 == 0) term = poly_neg(F, term);
            acc = poly_add(F, acc, term);
        }
        ps.p[static_cast<size_t>(k)] = std::move(acc);
    }
    return ps;
}

/// Certifies the recursion against the defining identity
/// G_{k,Lambda_g}(t(z)) = S_{k,Lambda_g}(z) as formal Laurent series in 1/z,
/// comparing all coefficients of z^{-1}..z^{-L}.  The right side comes from
/// the independent Newton-identity oracle.
inline bool verify_goss_identity(const Ctx& F, const Poly& g, int k, int L) {
    if (k < 1) throw domain_error("verify_goss_identity requires k >= 1");
    if (L < k) throw domain_error("verify_goss_identity requires L >= k");
    if (!g.is_monic() || !irreducible_test(F, g))
        throw domain_error("verify_goss_identity requires a monic irreducible");
    const int d = g.deg();
    long long qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();

    // Series in w = 1/z, trusted modulo w^{L+1}.
    const int W = L + 1;
    if (W - qd < 1) throw precision_error("comparison window too short for this torsion lattice");
    AdditivePoly cg = carlitz_poly(F, g);
    // t(z) = 1/e(z) = g * w^{q^d} / rho(w), rho(w) = sum_i c_i w^{q^d - q^i}.
    USeriesK rho = series_zero(F, W);
    for (int i = 0; i <= cg.top(); ++i) {
        long long qi = 1;
        for (int t = 0; t < i; ++t) qi *= F.q();
        long long idx = qd - qi;
        if (idx < W) rho.c[static_cast<size_t>(idx)] = ratk_from_poly(F, cg.coeff(i));
    }
    USeriesK t_series = series_shift_up(F, series_inv(F, series_truncate(rho, W - static_cast<int>(qd))),
                                        static_cast<int>(qd));
    t_series = series_scale(F, ratk_from_poly(F, g), t_series);

    GossTable table = goss_table(F, torsion_exp(F, g), k);
    USeriesK lhs = goss_eval_series(F, table, k, t_series);

    // S_k(z) = z^{-k} (lambda = 0) + sum_j binom(-k, j) p_j z^{-k-j}.
    PowerSums ps = power_sums(F, g, L - k);
    USeriesK rhs = series_zero(F, W);
    rhs.c[static_cast<size_t>(k)] = ratk_one(F);
    for (int j = 0; k + j < W; ++j) {
        int b = binom_neg_mod_p(k, j, F.p());
        if (b == 0) continue;
        Poly term = poly_scale(F, F.from_int(b), ps.p[static_cast<size_t>(j)]);
        rhs.c[static_cast<size_t>(k + j)] =
            ratk_add(F, rhs.c[static_cast<size_t>(k + j)], ratk_from_poly(F, term));
    }
    return series_first_mismatch(lhs, rhs) == -1;
}

} // namespace cfk
