#pragma once

#include "cfk/carlitz.hpp"
#include "cfk/useries.hpp"

namespace cfk {

struct USub {
    USeriesK series;
    bool vanishes; // q^{deg a} >= trunc, so the expansion is 0 mod u^trunc
};

/// u_a = 1/C_a(1/u) = u^{q^d} * rho_a(u)^{-1} with
/// rho_a(u) = u^{q^d} C_a(1/u) = sum_i c_i u^{q^d - q^i}, a polynomial with
/// constant term 1 and coefficients in A.  Exact to u^N.
inline USub u_sub_a(const Ctx& F, const Poly& a, int N) {
    if (!a.is_monic()) throw domain_error("u_a requires monic a");
    const int d = a.deg();
    long long qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();
    if (qd >= N) return {series_zero(F, N), true};
    AdditivePoly ca = carlitz_poly(F, a);
    USeriesK rho = series_zero(F, N - static_cast<int>(qd));
    long long qi = 1;
    for (int i = 0; i <= ca.top(); ++i) {
        long long idx = qd - qi;
        if (idx < rho.trunc) rho.c[static_cast<size_t>(idx)] = ratk_from_poly(F, ca.coeff(i));
        qi *= F.q();
    }
    USeriesK r = series_shift_up(F, series_inv(F, rho), static_cast<int>(qd));
    return {std::move(r), false};
}

} // namespace cfk
