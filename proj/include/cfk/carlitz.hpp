#pragma once

#include "cfk/ratk.hpp"

namespace cfk {

/// F_q-linear (additive) polynomial sum_i c[i] x^{q^i} with c[i] in A.
struct AdditivePoly {
    std::vector<Poly> c;

    int top() const { return static_cast<int>(c.size()) - 1; }
    Poly coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? poly_zero() : c[static_cast<size_t>(i)];
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) { return a.c == b.c; }
};

inline AdditivePoly additive_add(const Ctx& F, const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = poly_add(F, a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

/// Composition A(B(x)): with A = sum a_i tau^i and B = sum b_j tau^j in the
/// twisted polynomial ring, the tau^{i+j} coefficient picks up a_i * b_j^{q^i}.
inline AdditivePoly additive_compose(const Ctx& F, const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, poly_zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            Poly t = b.c[j];
            for (size_t k = 0; k < i; ++k) t = poly_frobenius_q(F, t);
            r.c[i + j] = poly_add(F, r.c[i + j], poly_mul(F, a.c[i], t));
        }
    }
    r.trim();
    return r;
}

/// The Carlitz action polynomial C_a, from C_theta(x) = theta x + x^q
/// extended F_q-linearly and multiplicatively (C_{ab} = C_a o C_b).
inline AdditivePoly carlitz_poly(const Ctx& F, const Poly& a) {
    AdditivePoly c_theta;
    c_theta.c = {poly_theta(F), poly_one(F)};
    AdditivePoly pow; // C_{theta^k}, starting at k = 0 (identity)
    pow.c = {poly_one(F)};
    AdditivePoly r;
    for (int k = 0; k <= a.deg(); ++k) {
        Fq ak = a.coeff(k);
        if (!ak.is_zero()) {
            AdditivePoly term = pow;
            for (auto& t : term.c) t = poly_scale(F, ak, t);
            r = additive_add(F, r, term);
        }
        if (k < a.deg()) pow = additive_compose(F, c_theta, pow);
    }
    return r;
}

/// Exponential coefficients of a lattice: e(z) = sum alphas[i] z^{q^i} with
/// alphas[0] = 1.  A torsion lattice has finitely many; the Carlitz lattice
/// carries a truncated prefix of 1/D_i.
struct ExpCoeffs {
    enum class Kind { torsion, carlitz_prefix };
    Kind kind = Kind::carlitz_prefix;
    std::vector<RatK> alphas;

    int top() const { return static_cast<int>(alphas.size()) - 1; }
    /// alpha_i; exactly zero beyond the top index for a finite lattice.
    RatK alpha(const Ctx& F, int i) const {
        if (i >= 0 && i < static_cast<int>(alphas.size())) return alphas[static_cast<size_t>(i)];
        if (kind == Kind::torsion) return ratk_zero(F);
        throw precision_error("exponential coefficients exhausted at index " + std::to_string(i));
    }
    bool finite() const { return kind == Kind::torsion; }
};

struct CarlitzFactorials {
    std::vector<Poly> brackets; // [i] = theta^{q^i} - theta, index 0 holds 0
    std::vector<Poly> D;        // D_0 = 1, D_i = [i] * D_{i-1}^q
    ExpCoeffs exp;              // alphas[i] = 1/D_i
};

inline CarlitzFactorials carlitz_factorials(const Ctx& F, int i_max) {
    if (i_max < 0) throw domain_error("carlitz_factorials requires i_max >= 0");
    CarlitzFactorials r;
    r.brackets.resize(static_cast<size_t>(i_max) + 1);
    r.D.resize(static_cast<size_t>(i_max) + 1);
    r.brackets[0] = poly_zero();
    r.D[0] = poly_one(F);
    Poly theta_qi = poly_theta(F);
    for (int i = 1; i <= i_max; ++i) {
        theta_qi = poly_frobenius_q(F, theta_qi); // theta^{q^i}
        r.brackets[static_cast<size_t>(i)] = poly_sub(F, theta_qi, poly_theta(F));
        r.D[static_cast<size_t>(i)] =
            poly_mul(F, r.brackets[static_cast<size_t>(i)], poly_frobenius_q(F, r.D[static_cast<size_t>(i - 1)]));
    }
    r.exp.kind = ExpCoeffs::Kind::carlitz_prefix;
    r.exp.alphas.reserve(static_cast<size_t>(i_max) + 1);
    for (int i = 0; i <= i_max; ++i)
        r.exp.alphas.push_back(ratk_normalize(F, poly_one(F), r.D[static_cast<size_t>(i)]));
    return r;
}

/// Exponential of the finite torsion lattice Lambda_g, realized as C_g(z)/g:
/// C_g is separable with root set Lambda_g and derivative g.
inline ExpCoeffs torsion_exp(const Ctx& F, const Poly& g) {
    if (!g.is_monic() || !irreducible_test(F, g))
        throw domain_error("torsion lattice requires a monic irreducible");
    AdditivePoly cg = carlitz_poly(F, g);
    ExpCoeffs r;
    r.kind = ExpCoeffs::Kind::torsion;
    r.alphas.reserve(cg.c.size());
    for (const auto& ci : cg.c) r.alphas.push_back(ratk_normalize(F, ci, g));
    return r;
}

} // namespace cfk
