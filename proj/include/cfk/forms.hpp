#pragma once

#include "cfk/goss.hpp"
#include "cfk/laurent.hpp"
#include "cfk/usub.hpp"

#include <map>
#include <optional>

namespace cfk {

/// Weight/type labels carried alongside an expansion; no vector-space
/// structure is represented.
struct FormMeta {
    long long weight = 0;
    int type = 0; // residue mod q-1
    bool cuspidal = false;
};

struct Admissibility {
    bool ok;
    std::string reason; // empty when ok
};

inline long long int_ord_p(long long m, int p) {
    long long o = 0;
    while (m % p == 0) {
        m /= p;
        ++o;
    }
    return o;
}

/// Conditions for the cuspidal family f_{k,n}: k-2n a positive multiple of
/// q-1, and n <= p^{ord_p(k-n)} (evaluated directly).
inline Admissibility admissible(const Ctx& F, long long k, long long n) {
    if (k < 1 || n < 1) return {false, "k and n must be positive"};
    const long long k2n = k - 2 * n;
    if (k2n <= 0 || k2n % (F.q() - 1) != 0)
        return {false, "k-2n not a positive multiple of q-1"};
    long long ord = int_ord_p(k - n, F.p());
    long long pw = 1;
    for (long long i = 0; i < ord && pw < (1LL << 40); ++i) pw *= F.p();
    if (n > pw) return {false, "n exceeds p^ord_p(k-n)"};
    return {true, {}};
}

/// Variant replacing the p-power bound by base-p digit agreement of k and n
/// through every digit needed to write n-1 (independent code path, for the
/// equivalence check).
inline Admissibility digit_admissible(const Ctx& F, long long k, long long n) {
    if (k < 1 || n < 1) return {false, "k and n must be positive"};
    const long long k2n = k - 2 * n;
    if (k2n <= 0 || k2n % (F.q() - 1) != 0)
        return {false, "k-2n not a positive multiple of q-1"};
    int L = 0; // smallest L with p^L >= n
    long long pw = 1;
    while (pw < n) {
        pw *= F.p();
        ++L;
    }
    long long kk = k, nn = n;
    for (int i = 0; i < L; ++i) {
        if (kk % F.p() != nn % F.p()) return {false, "base-p digits of k and n disagree"};
        kk /= F.p();
        nn /= F.p();
    }
    return {true, {}};
}

/// A-expansion specification: f = c0 + sum_{a in support} c_a G_n(u_a).
struct AExpansionSpec {
    enum class Rule { petrov, h_form, delta_form, eisenstein_tail, v_restricted_petrov, custom };

    Rule rule = Rule::custom;
    int n = 1;
    RatK c0;
    long long k = 0;             // petrov / eisenstein / v-restricted
    std::optional<Poly> v;       // support restricted to a prime to v
    std::map<Poly, RatK> custom; // finite support
};

inline AExpansionSpec spec_petrov(const Ctx& F, long long k, long long n) {
    auto adm = admissible(F, k, n);
    if (!adm.ok) throw domain_error("inadmissible (k, n): " + adm.reason);
    AExpansionSpec s;
    s.rule = AExpansionSpec::Rule::petrov;
    s.k = k;
    s.n = static_cast<int>(n);
    s.c0 = ratk_zero(F);
    return s;
}

inline AExpansionSpec spec_h(const Ctx& F) {
    AExpansionSpec s;
    s.rule = AExpansionSpec::Rule::h_form;
    s.k = F.q() + 1;
    s.n = 1;
    s.c0 = ratk_zero(F);
    return s;
}

inline AExpansionSpec spec_delta(const Ctx& F) {
    AExpansionSpec s;
    s.rule = AExpansionSpec::Rule::delta_form;
    s.k = static_cast<long long>(F.q()) * F.q() - 1;
    s.n = F.q() - 1;
    s.c0 = ratk_zero(F);
    return s;
}

inline AExpansionSpec spec_eisenstein_tail(const Ctx& F, long long k) {
    if (k <= 0 || k % (F.q() - 1) != 0)
        throw domain_error("Eisenstein tail requires k a positive multiple of q-1");
    AExpansionSpec s;
    s.rule = AExpansionSpec::Rule::eisenstein_tail;
    s.k = k;
    s.n = static_cast<int>(k);
    s.c0 = ratk_zero(F);
    return s;
}

inline AExpansionSpec spec_v_restricted_petrov(const Ctx& F, long long k, long long n, const Poly& v) {
    AExpansionSpec s = spec_petrov(F, k, n);
    if (!v.is_monic() || !irreducible_test(F, v))
        throw domain_error("support restriction requires a monic irreducible");
    s.rule = AExpansionSpec::Rule::v_restricted_petrov;
    s.v = v;
    return s;
}

namespace detail {

inline RatK expansion_coefficient(const Ctx& F, const AExpansionSpec& s, const Poly& a) {
    switch (s.rule) {
    case AExpansionSpec::Rule::petrov:
    case AExpansionSpec::Rule::v_restricted_petrov:
        return ratk_from_poly(F, poly_pow(F, a, s.k - s.n));
    case AExpansionSpec::Rule::h_form:
        return ratk_from_poly(F, poly_pow(F, a, F.q()));
    case AExpansionSpec::Rule::delta_form:
        return ratk_from_poly(F, poly_pow(F, a, static_cast<long long>(F.q()) * (F.q() - 1)));
    case AExpansionSpec::Rule::eisenstein_tail:
        return ratk_one(F);
    case AExpansionSpec::Rule::custom: {
        auto it = s.custom.find(a);
        return it == s.custom.end() ? ratk_zero(F) : it->second;
    }
    }
    return ratk_zero(F);
}

} // namespace detail

/// The truncated expansion c0 + sum c_a G_n(u_a).  Degrees with
/// q^{deg a} >= N contribute nothing mod u^N since G_n(u_a) vanishes to
/// order >= q^{deg a}.
inline USeriesK a_expansion(const Ctx& F, const AExpansionSpec& s, const GossTable& carlitz_goss, int N) {
    if (N < 0) throw domain_error("negative truncation");
    if (s.n < 1 || s.n > carlitz_goss.n_max())
        throw precision_error("Goss table does not cover index n = " + std::to_string(s.n));
    const auto& gn = carlitz_goss.poly(s.n);
    USeriesK acc = series_const(F, s.c0, N);
    for (int d = 0;; ++d) {
        long long qd = 1;
        for (int i = 0; i < d; ++i) qd *= F.q();
        if (qd >= N) break;
        for (const Poly& a : monic_enumerate(F, d)) {
            if (s.rule == AExpansionSpec::Rule::v_restricted_petrov &&
                poly_mod(F, a, *s.v).is_zero())
                continue;
            RatK ca = detail::expansion_coefficient(F, s, a);
            if (ca.is_zero()) continue;
            USeriesK term = series_compose_poly(F, gn, u_sub_a(F, a, N).series);
            acc = series_add(F, acc, series_scale(F, ca, term));
        }
    }
    return acc;
}

/// Convenience that builds the Carlitz Goss table it needs.
inline USeriesK a_expansion(const Ctx& F, const AExpansionSpec& s, int N) {
    int i_max = 0;
    long long qi = 1;
    while (qi < s.n) {
        qi *= F.q();
        ++i_max;
    }
    GossTable t = goss_table(F, carlitz_factorials(F, i_max + 1).exp, std::max(s.n, 1));
    return a_expansion(F, s, t, N);
}

/// The cusp form f_{k,n} = sum a^{k-n} G_n(u_a) with its weight/type labels.
inline std::pair<USeriesK, FormMeta> petrov_form(const Ctx& F, long long k, long long n, int N) {
    AExpansionSpec s = spec_petrov(F, k, n);
    FormMeta meta{k, static_cast<int>(n % (F.q() - 1)), true};
    return {a_expansion(F, s, N), meta};
}

/// The u-dependent part of the Eisenstein series of weight k:
/// sum_{a in A_+} G_k(u_a).  The transcendental constant term is out of
/// scope; see zeta_partial for the zeta factor.
inline USeriesK eisenstein_tail(const Ctx& F, long long k, int N) {
    return a_expansion(F, spec_eisenstein_tail(F, k), N);
}

/// Partial sums of zeta_A(k) = sum_{a monic} a^{-k} in K_infty, correct
/// modulo (1/theta)^P: the degree-d block has infinity-adic order >= dk.
inline LaurentInf zeta_partial(const Ctx& F, long long k, int P) {
    if (k < 1 || P < 1) throw domain_error("zeta_partial requires k >= 1, P >= 1");
    const long long dmax = (P + k - 1) / k; // ceil(P/k)
    LaurentInf acc = laurent_zero(P);
    for (long long d = 0; d <= dmax; ++d) {
        for (const Poly& a : monic_enumerate(F, static_cast<int>(d))) {
            LaurentInf la = laurent_from_poly(F, a, P);
            acc = laurent_add(F, acc, laurent_pow(F, la, -k));
        }
    }
    acc.prec = std::min(acc.prec, P);
    acc.normalize();
    return acc;
}

} // namespace cfk
