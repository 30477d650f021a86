#pragma once

#include "cfk/errors.hpp"

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

namespace cfk {

/// Element of F_q, encoded as an integer in [0, q).  The encoding is the
/// base-p expansion of the coordinates in the power basis of the field
/// modulus: value = sum c_i p^i represents sum c_i w^i.
struct Fq {
    uint16_t v = 0;

    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
    friend bool operator<(Fq a, Fq b) { return a.v < b.v; }
    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
};

namespace detail {

inline bool int_is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multiplication of polynomials over F_p given as coefficient vectors,
// reduced modulo a monic modulus.  Only used at Ctx construction time.
inline std::vector<uint16_t> fp_polymulmod(const std::vector<uint16_t>& a,
                                           const std::vector<uint16_t>& b,
                                           const std::vector<uint16_t>& mod, int p) {
    std::vector<uint16_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<uint16_t>((prod[i + j] + a[i] * b[j]) % p);
    const int m = static_cast<int>(mod.size()) - 1; // deg of modulus, monic
    for (int k = static_cast<int>(prod.size()) - 1; k >= m; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < m; ++j) {
            int t = prod[k - m + j] - c * mod[j] % p;
            prod[k - m + j] = static_cast<uint16_t>((t % p + p) % p);
        }
    }
    prod.resize(m, 0);
    return prod;
}

inline bool fp_poly_irreducible(const std::vector<uint16_t>& f, int p);

} // namespace detail

/// Arithmetic context: the field F_q with q = p^m0 presented as
/// F_p[w]/(field_modulus).  All kernel objects are built against one Ctx and
/// must never be mixed across contexts.  Immutable after construction.
class Ctx {
public:
    Ctx(int p, int m0, std::vector<uint16_t> field_modulus = {})
        : p_(p), m0_(m0) {
        if (!detail::int_is_prime(p)) throw domain_error("characteristic must be prime");
        if (m0 < 1) throw domain_error("extension degree must be positive");
        long long q = 1;
        for (int i = 0; i < m0; ++i) {
            q *= p;
            if (q > kMaxQ) throw domain_error("field too large for table representation");
        }
        q_ = static_cast<int>(q);
        if (field_modulus.empty())
            modulus_ = canonical_modulus(p, m0);
        else {
            modulus_ = std::move(field_modulus);
            if (static_cast<int>(modulus_.size()) != m0 + 1 || modulus_.back() != 1)
                throw domain_error("field modulus must be monic of degree m0");
            for (auto c : modulus_)
                if (c >= p) throw domain_error("field modulus coefficients must be reduced mod p");
            if (m0 > 1 && !detail::fp_poly_irreducible(modulus_, p))
                throw domain_error("field modulus must be irreducible over F_p");
        }
        build_tables();
    }

    static Ctx with_q(int q) {
        int p = 2;
        while (q % p != 0) {
            ++p;
            if (p > q) throw domain_error("q must be a prime power");
        }
        int m0 = 0;
        int t = q;
        while (t > 1) {
            if (t % p != 0) throw domain_error("q must be a prime power");
            t /= p;
            ++m0;
        }
        return Ctx(p, m0);
    }

    int p() const { return p_; }
    int m0() const { return m0_; }
    int q() const { return q_; }
    const std::vector<uint16_t>& field_modulus() const { return modulus_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    /// The element with the given canonical encoding in [0, q).
    Fq elem(int encoding) const {
        if (encoding < 0 || encoding >= q_) throw domain_error("element encoding out of range");
        return Fq{static_cast<uint16_t>(encoding)};
    }
    /// Image of an integer under Z -> F_q (lands in the prime field).
    Fq from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return Fq{static_cast<uint16_t>(r)};
    }

    Fq add(Fq a, Fq b) const { return Fq{add_[a.v * q_ + b.v]}; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const { return Fq{neg_[a.v]}; }
    Fq mul(Fq a, Fq b) const { return Fq{mul_[a.v * q_ + b.v]}; }
    Fq inv(Fq a) const {
        if (a.is_zero()) throw domain_error("division by zero in F_q");
        return Fq{inv_[a.v]};
    }
    Fq pow(Fq a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        Fq r = one(), base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool same(const Ctx& other) const {
        return p_ == other.p_ && m0_ == other.m0_ && modulus_ == other.modulus_;
    }

private:
    static constexpr long long kMaxQ = 4096;

    // Smallest irreducible monic modulus in lexicographic coefficient order
    // (c_0, ..., c_{m0-1}), so the field presentation is reproducible.
    static std::vector<uint16_t> canonical_modulus(int p, int m0) {
        if (m0 == 1) return {0, 1}; // the trivial modulus w
        long long total = 1;
        for (int i = 0; i < m0; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            std::vector<uint16_t> f(m0 + 1, 0);
            f[m0] = 1;
            long long t = idx;
            for (int j = m0 - 1; j >= 0; --j) {
                f[j] = static_cast<uint16_t>(t % p);
                t /= p;
            }
            // idx counts with c_0 in the most significant position, matching
            // lexicographic order on (c_0, ..., c_{m0-1}).
            std::vector<uint16_t> g(m0 + 1);
            for (int j = 0; j < m0; ++j) g[j] = f[m0 - 1 - j];
            g[m0] = 1;
            if (detail::fp_poly_irreducible(g, p)) return g;
        }
        throw domain_error("no irreducible modulus found"); // unreachable
    }

    void build_tables() {
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.resize(q_, 0);
        auto coords = [&](int v) {
            std::vector<uint16_t> c(m0_, 0);
            for (int i = 0; i < m0_; ++i) {
                c[i] = static_cast<uint16_t>(v % p_);
                v /= p_;
            }
            return c;
        };
        auto encode = [&](const std::vector<uint16_t>& c) {
            int v = 0;
            for (int i = m0_ - 1; i >= 0; --i) v = v * p_ + c[i];
            return static_cast<uint16_t>(v);
        };
        for (int a = 0; a < q_; ++a) {
            auto ca = coords(a);
            std::vector<uint16_t> cn(m0_);
            for (int i = 0; i < m0_; ++i) cn[i] = static_cast<uint16_t>((p_ - ca[i]) % p_);
            neg_[a] = encode(cn);
            for (int b = 0; b < q_; ++b) {
                auto cb = coords(b);
                std::vector<uint16_t> cs(m0_);
                for (int i = 0; i < m0_; ++i) cs[i] = static_cast<uint16_t>((ca[i] + cb[i]) % p_);
                add_[a * q_ + b] = encode(cs);
                auto cp = detail::fp_polymulmod(ca, cb, modulus_, p_);
                cp.resize(m0_, 0);
                mul_[a * q_ + b] = encode(cp);
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<uint16_t>(b);
                    break;
                }
    }

    int p_, m0_, q_;
    std::vector<uint16_t> modulus_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

namespace detail {

inline bool fp_poly_irreducible(const std::vector<uint16_t>& f, int p) {
    // Trial division by every monic polynomial of degree <= deg(f)/2.
    // Fine for the tiny moduli used to present F_q.
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    auto mod_by = [&](const std::vector<uint16_t>& g) {
        std::vector<int> r(f.begin(), f.end());
        const int dg = static_cast<int>(g.size()) - 1;
        for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
            int c = r[k] % p;
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j)
                r[k - dg + j] = ((r[k - dg + j] - c * g[j]) % p + p) % p;
        }
        for (int k = 0; k < dg; ++k)
            if (r[k] % p != 0) return false;
        return true; // divisible
    };
    for (int e = 1; 2 * e <= d; ++e) {
        long long total = 1;
        for (int i = 0; i < e; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            std::vector<uint16_t> g(e + 1, 0);
            g[e] = 1;
            long long t = idx;
            for (int j = 0; j < e; ++j) {
                g[j] = static_cast<uint16_t>(t % p);
                t /= p;
            }
            if (mod_by(g)) return false;
        }
    }
    return true;
}

} // namespace detail

} // namespace cfk
