#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mws/bigint.hpp"
#include "mws/errors.hpp"
#include "mws/pg.hpp"

namespace mws {

namespace detail {
inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }
}  // namespace detail

// n >= ceil(q * theta_q(k-1) / 2) for every [n,k]_q MWS code with k >= 2.
inline BigInt lower_bound(uint32_t q, int k) {
    return detail::ceil_div(BigInt(q) * theta(q, k - 1), 2);
}

// n >= ceil((q^{k+2} - 3q + 2) / (4(q-1))) for MWS codes satisfying (A).
inline BigInt lower_bound_propA(uint32_t q, int k) {
    BigInt num = pow_big(BigInt(q), static_cast<unsigned long>(k) + 2) - 3 * BigInt(q) + 2;
    return detail::ceil_div(num, 4 * (BigInt(q) - 1));
}

// D^{(k)} <= binom(q^k, 2) + (q^k - 1)(q - 1): the number of distinct
// avoidance normals at step k.
inline BigInt d_bound(uint32_t q, int k) {
    BigInt qk = pow_big(BigInt(q), static_cast<unsigned long>(k));
    return qk * (qk - 1) / 2 + (qk - 1) * (q - 1);
}

// R^{(k)} <= (q-1) binom(q^k, 2) + (q^k - 1)(q - 1)^2.
inline BigInt r_bound(uint32_t q, int k) {
    BigInt qk = pow_big(BigInt(q), static_cast<unsigned long>(k));
    return (q - 1) * qk * (qk - 1) / 2 + (qk - 1) * (q - 1) * (q - 1);
}

struct RecurrenceStep {
    BigInt n_rec;
    BigInt T_rec;
};

// Upper-bound sequences for n^{(k)} and T^{(k)} from the recurrences
//   n^{(k+1)} = (q-1) R^{(k)} n^{(k)} + 1 + (q-3)(q-2)/2 (T^{(k)} + 1)
//   T^{(k+1)} <= R^{(k)} n^{(k)} + (T^{(k)} + 1) sum_j j r_{i_j}
// with n^{(1)} = 1, T^{(1)} = q-1, R^{(1)} = q(q-1)/2 and later R from the
// worst-case bound. The sorted-r sum is estimated with every r_i equal to
// ceil(R/(q-1)), the worst case compatible with a known R alone.
inline std::vector<RecurrenceStep> recurrence_estimates(uint32_t q, int k_max) {
    if (q < 3) throw UnsupportedQ("recurrences require q >= 3");
    std::vector<RecurrenceStep> out;
    BigInt n = 1, T = BigInt(q) - 1;
    out.push_back({n, T});
    for (int k = 1; k < k_max; ++k) {
        BigInt R = (k == 1) ? BigInt(q) * (q - 1) / 2 : r_bound(q, k);
        BigInt sum_jr = detail::ceil_div(R, BigInt(q) - 1) * (BigInt(q) - 1) * (q - 2) / 2;
        BigInt n_next = (BigInt(q) - 1) * R * n + 1 + BigInt(q - 3) * (q - 2) / 2 * (T + 1);
        BigInt T_next = R * n + (T + 1) * sum_jr;
        n = n_next, T = T_next;
        out.push_back({n, T});
    }
    return out;
}

struct BoundsReport {
    uint32_t q = 0;
    int k = 0;
    BigInt theta_val;
    BigInt lb_general;
    BigInt lb_propA;
    std::optional<BigInt> geometric_n;     // 2^theta - 1, omitted when theta is huge
    std::optional<BigInt> triangle_n;      // k = 3 only
    std::optional<BigInt> lift_chain_n;    // q^{(k^2+k-4)/2}, k >= 3
    BigInt D_k;
    BigInt R_k;
    BigInt n_rec;
    BigInt T_rec;
};

inline BoundsReport bounds_report(uint32_t q, int k) {
    if (k < 2) throw Error("bounds require k >= 2");
    BoundsReport rep;
    rep.q = q;
    rep.k = k;
    rep.theta_val = theta(q, k - 1);
    rep.lb_general = lower_bound(q, k);
    rep.lb_propA = lower_bound_propA(q, k);
    if (rep.theta_val <= 1'000'000)
        rep.geometric_n = pow_big(BigInt(2), static_cast<unsigned long>(rep.theta_val)) - 1;
    if (k == 3) rep.triangle_n = BigInt(q - 1) * (pow_big(BigInt(q), 3) + BigInt(q) * q + q) / 2;
    if (k >= 3) rep.lift_chain_n = pow_big(BigInt(q), static_cast<unsigned long>((k * (k + 1) - 4) / 2));
    rep.D_k = d_bound(q, k);
    rep.R_k = r_bound(q, k);
    if (q >= 3) {
        auto rec = recurrence_estimates(q, k);
        rep.n_rec = rec.back().n_rec;
        rep.T_rec = rec.back().T_rec;
    }
    return rep;
}

}  // namespace mws
