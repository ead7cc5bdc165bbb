#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "mws/bigint.hpp"
#include "mws/code.hpp"
#include "mws/errors.hpp"
#include "mws/gf.hpp"
#include "mws/pg.hpp"

namespace mws {

// ---------------------------------------------------------------------------
// Geometric constructions
// ---------------------------------------------------------------------------

// All theta_q(k-1) points of PG(k-1,q) in canonical order, m(P_i) = 2^i.
// Length 2^theta - 1; the binary expansion of the characters makes every
// hyperplane character distinct.
inline ProjectiveSystem geometric(uint32_t q, int k) {
    Field F(q);
    ProjectiveSystem sys(F, k);
    BigInt mult = 1;
    for (const auto& pt : enumerate_points(F, k)) {
        sys.add_point(pt, mult);
        mult <<= 1;
    }
    if (!mws_via_characters(sys).mws) throw NotMWS("geometric construction failed character verification");
    return sys;
}

// Multiplicity i on the i-th point of PG(1,q); n = q(q+1)/2 meets the
// general length lower bound with equality.
inline ProjectiveSystem optimal_k2(uint32_t q) {
    Field F(q);
    ProjectiveSystem sys(F, 2);
    BigInt i = 0;
    for (const auto& pt : enumerate_points(F, 2)) {
        sys.add_point(pt, i);
        ++i;
    }
    if (!mws_via_characters(sys).mws) throw NotMWS("k=2 construction failed character verification");
    return sys;
}

// [7,3]_2: multiplicities 1, 2, 4 on the standard-basis triangle of the Fano
// plane. Line characters are 0..6.
inline ProjectiveSystem fano_732() {
    Field F(2);
    ProjectiveSystem sys(F, 3);
    sys.add_point({{1, 0, 0}}, 1);
    sys.add_point({{0, 1, 0}}, 2);
    sys.add_point({{0, 0, 1}}, 4);
    if (!mws_via_characters(sys).mws) throw NotMWS("Fano construction failed character verification");
    return sys;
}

// [32,3]_3: the 13-point PG(2,3) system with line characters
// {1,2,4,5,6,8,10,11,12,13,16,18,22}. Affine points (x,y) are coordinatized
// as (1,x,y); the points of the line at infinity as (0,1,s) and (0,0,1).
inline ProjectiveSystem plane_3233() {
    Field F(3);
    ProjectiveSystem sys(F, 3);
    // 3x3 affine grid (columns x = 2,0,1 ; rows y = 2,0,1)
    sys.add_point({{1, 2, 2}}, 8);
    sys.add_point({{1, 2, 0}}, 1);
    sys.add_point({{1, 2, 1}}, 1);
    sys.add_point({{1, 0, 2}}, 4);
    sys.add_point({{1, 0, 1}}, 2);
    sys.add_point({{1, 1, 2}}, 1);
    sys.add_point({{1, 1, 1}}, 3);
    // vertical direction carries 12; the other ideal points carry 0
    sys.add_point({{0, 0, 1}}, 12);
    if (!mws_via_characters(sys).mws) throw NotMWS("[32,3]_3 construction failed character verification");
    return sys;
}

// Triangle construction in PG(2,q), q > 3: multiplicities i, iq, iq^2 on the
// non-vertex points of the three sides. For odd q the midpoint of the third
// side is dropped and its weight moved onto the vertex P.
inline ProjectiveSystem triangle_3d(uint32_t q) {
    if (q <= 3) throw UnsupportedQ("triangle construction requires q > 3");
    Field F(q);
    ProjectiveSystem sys(F, 3);
    const bool odd = (q % 2) == 1;
    const BigInt Q = q;
    for (uint32_t i = 1; i < q; ++i) {
        uint32_t a = F.exp_of(i).v;
        sys.add_point({{1, 0, a}}, i);           // P_i on <P,R>
        sys.add_point({{1, a, 0}}, BigInt(i) * Q);  // Q_i on <P,Q>
        if (!(odd && i == (q - 1) / 2)) sys.add_point({{0, 1, a}}, BigInt(i) * Q * Q);  // R_i on <Q,R>
    }
    if (odd) sys.add_point({{1, 0, 0}}, BigInt((q - 1) / 2) * Q * Q);  // vertex P
    if (!mws_via_characters(sys).mws) throw NotMWS("triangle construction failed character verification");
    return sys;
}

// Dimension lift: embed the system in the hyperplane x_{k} = 0 of PG(k,q),
// take the standard frame T_j = e_j and the new point P = e_k, and put
// multiplicity i*q^{t+j} on T_j + alpha^i P. Requires n < q^t.
inline ProjectiveSystem lift(const ProjectiveSystem& sys, unsigned t) {
    const uint32_t q = sys.q();
    const int k = sys.k();
    if (k < 2) throw Error("lift requires k >= 2");
    if (!spans(sys) || !mws_via_characters(sys).mws) throw NotMWS("lift input is not a verified MWS system");
    if (sys.n() >= pow_big(BigInt(q), t)) throw LengthTooLarge("lift requires n < q^t");

    const Field& F = sys.field();
    ProjectiveSystem out(F, k + 1);
    for (const auto& [pt, mult] : sys.mults()) {
        std::vector<uint32_t> coords = pt.coords;
        coords.push_back(0);
        out.add_point({coords}, mult);
    }
    for (int j = 0; j < k; ++j) {
        BigInt scale = pow_big(BigInt(q), t + static_cast<unsigned>(j));
        for (uint32_t i = 1; i < q; ++i) {
            std::vector<uint32_t> coords(static_cast<std::size_t>(k) + 1, 0);
            coords[static_cast<std::size_t>(j)] = 1;
            coords[static_cast<std::size_t>(k)] = F.exp_of(i).v;
            out.add_point({coords}, BigInt(i) * scale);
        }
    }
    if (mws_via_characters(out).mws) return out;
    // A hyperplane through P containing line j in full picks up (q(q-1)/2)q^{t+j},
    // which can carry into the digit slots of higher lines and collide with a
    // hyperplane avoiding P (first seen at q=3, k=4). Tagging P itself with a
    // digit above every line slot separates the two classes.
    ProjectiveSystem tagged(F, k + 1);
    for (const auto& [pt, mult] : out.mults()) tagged.add_point(pt, mult);
    std::vector<uint32_t> apex(static_cast<std::size_t>(k) + 1, 0);
    apex[static_cast<std::size_t>(k)] = 1;
    tagged.add_point({apex}, pow_big(BigInt(q), t + static_cast<unsigned>(k)));
    if (!mws_via_characters(tagged).mws) throw NotMWS("lifted system failed character verification");
    return tagged;
}

// ---------------------------------------------------------------------------
// Algebraic construction
// ---------------------------------------------------------------------------

// Integer normals (length q-1) of the affine hyperplanes a repetition vector
// must avoid, deduplicated up to rational scaling and sign.
struct HyperplaneAvoidanceProblem {
    uint32_t q = 0;
    std::vector<std::vector<std::int64_t>> normals;
};

namespace detail {

inline std::vector<std::int64_t> canonical_normal(std::vector<std::int64_t> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) return v;  // zero vector, caller rejects
    std::int64_t sign = 0;
    for (auto x : v) {
        if (x != 0) { sign = x > 0 ? 1 : -1; break; }
    }
    for (auto& x : v) x = x / g * sign;
    return v;
}

inline std::int64_t dot_i(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

// Normals of the X1 family (pairwise-injectivity of c[alpha], condition (*))
// and the X2 family (distinct entries of V(c^r), condition (**)). X1 uses all
// unordered pairs of distinct codewords with i = 1 fixed; exponents mod q-1
// with alpha^0 identified with alpha^{q-1}.
inline HyperplaneAvoidanceProblem build_avoidance_problem(const LinearCode& C) {
    const Field& F = C.field;
    const uint32_t q = F.q();
    const std::int64_t qm1 = q - 1;

    std::vector<std::vector<std::int64_t>> dists;
    for_each_codeword(C, [&](const Codeword& c) {
        dists.push_back(distribution(F, c));
    });

    std::set<std::vector<std::int64_t>> normals;
    // X1: entries a[alpha^{1-j}] - b[alpha^{1-j}], j = 1..q-1
    for (std::size_t ai = 0; ai < dists.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < dists.size(); ++bi) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(qm1));
            for (std::int64_t j = 1; j <= qm1; ++j)
                v[static_cast<std::size_t>(j - 1)] = dist_at_exp(dists[ai], 1 - j) - dist_at_exp(dists[bi], 1 - j);
            v = detail::canonical_normal(std::move(v));
            bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
            if (zero) throw PairwiseVMismatch("two distinct codewords share their distribution vector");
            normals.insert(std::move(v));
        }
    }
    // X2: per nonzero codeword, entries c[alpha^{i-j}] - c[alpha^{l-j}] for
    // 1 <= i < l <= q-1, and c[alpha^{l-j}] - c[0] for i = 0
    for (const auto& d : dists) {
        if (d[static_cast<std::size_t>(qm1)] == std::accumulate(d.begin(), d.end(), std::int64_t{0})) continue;  // zero codeword
        for (std::int64_t i = 0; i <= qm1; ++i) {
            for (std::int64_t l = i + 1; l <= qm1; ++l) {
                std::vector<std::int64_t> v(static_cast<std::size_t>(qm1));
                for (std::int64_t j = 1; j <= qm1; ++j) {
                    std::int64_t hi = (i == 0) ? d[static_cast<std::size_t>(qm1)] : dist_at_exp(d, i - j);
                    std::int64_t lo = dist_at_exp(d, l - j);
                    v[static_cast<std::size_t>(j - 1)] = (i == 0) ? lo - hi : hi - lo;
                }
                v = detail::canonical_normal(std::move(v));
                bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
                if (zero) throw PropertyBViolated("a codeword's distribution vector has tied entries");
                normals.insert(std::move(v));
            }
        }
    }
    HyperplaneAvoidanceProblem out{q, {normals.begin(), normals.end()}};
    return out;
}

namespace detail {

inline bool avoids_all(const std::vector<std::int64_t>& r, const std::vector<std::vector<std::int64_t>>& normals) {
    for (const auto& nrm : normals)
        if (dot_i(r, nrm) == 0) return false;
    return true;
}

// Compositions of `total` into `dim` non-negative parts, lexicographic
// ascending; returns true when fn signals acceptance.
template <typename Fn>
bool for_each_composition(std::int64_t total, std::size_t dim, std::vector<std::int64_t>& prefix, Fn&& fn) {
    if (dim == 1) {
        prefix.push_back(total);
        bool hit = fn(prefix);
        prefix.pop_back();
        return hit;
    }
    for (std::int64_t x = 0; x <= total; ++x) {
        prefix.push_back(x);
        bool hit = for_each_composition(total - x, dim - 1, prefix, fn);
        prefix.pop_back();
        if (hit) return true;
    }
    return false;
}

}  // namespace detail

// Minimal-R repetition vector avoiding every normal: candidates are searched
// by increasing R, then lexicographic order. The Schwartz-Zippel bound
// guarantees a solution with every entry below the normal count D, hence
// R <= (q-1)(D-1); past that bound (unreachable in practice) Vandermonde
// candidates (1, t, ..., t^{q-2}) terminate the search, since the product of
// the normal polynomials has finitely many roots.
inline RepetitionVector find_r(const HyperplaneAvoidanceProblem& problem) {
    const std::size_t dim = problem.q - 1;
    if (problem.normals.empty()) {
        std::vector<std::int64_t> r(dim, 0);
        r[0] = 1;
        return {r};
    }
    const std::int64_t D = static_cast<std::int64_t>(problem.normals.size());
    const std::int64_t r_max = static_cast<std::int64_t>(dim) * (D > 0 ? D - 1 : 0) + 1;
    std::optional<RepetitionVector> found;
    std::vector<std::int64_t> prefix;
    for (std::int64_t R = 1; R <= r_max && !found; ++R) {
        detail::for_each_composition(R, dim, prefix, [&](const std::vector<std::int64_t>& r) {
            if (detail::avoids_all(r, problem.normals)) {
                found = RepetitionVector{r};
                return true;
            }
            return false;
        });
    }
    if (found) return *found;
    for (std::int64_t t = 1;; ++t) {
        std::vector<std::int64_t> r(dim);
        std::int64_t acc = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            r[i] = acc;
            acc *= t;
        }
        if (detail::avoids_all(r, problem.normals)) return {r};
    }
}

// T = max over nonzero codewords c and beta in GF(q)* of c[beta].
inline std::int64_t max_entry_count(const LinearCode& C) {
    std::int64_t T = 0;
    for_each_codeword(C, [&](const Codeword& c) {
        if (weight(c) == 0) return;
        auto V = distribution(C.field, c);
        for (std::size_t i = 0; i + 1 < V.size(); ++i) T = std::max(T, V[i]);
    });
    return T;
}

// [2n+1, k+1] extension: rows (g | 0^{n+1}) plus the all-ones vector.
// Requires an MWS input satisfying (A).
inline LinearCode extend_dim_1(const LinearCode& C) {
    if (!is_mws(C)) throw NotMWS("extend_dim_1 requires an MWS code");
    if (!property_A(C)) throw PropertyAViolated("extend_dim_1 requires property (A)");
    const std::int64_t N = 2 * C.n + 1;
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& g : C.G) {
        std::vector<uint32_t> row = g;
        row.resize(static_cast<std::size_t>(N), 0);
        rows.push_back(std::move(row));
    }
    rows.emplace_back(static_cast<std::size_t>(N), 1);
    return make_code(C.field, std::move(rows));
}

// [N, k+1] extension preserving property (B), q >= 3: appends the row with
// value-blocks 1^n, alpha^{n+1}, alpha^2 repeated n+1+(T+1) times, ...,
// alpha^{q-2} repeated n+1+(q-3)(T+1) times.
inline LinearCode extend_dim_2(const LinearCode& C, std::int64_t T) {
    const Field& F = C.field;
    const uint32_t q = F.q();
    if (q < 3) throw UnsupportedQ("extend_dim_2 requires q >= 3");
    if (!is_mws(C)) throw NotMWS("extend_dim_2 requires an MWS code");
    if (!property_A(C)) throw PropertyAViolated("extend_dim_2 requires property (A)");
    if (!property_B(C)) throw PropertyBViolated("extend_dim_2 requires property (B)");

    std::vector<uint32_t> x;
    x.insert(x.end(), static_cast<std::size_t>(C.n), 1);
    for (uint32_t i = 1; i + 1 < q; ++i) {
        std::int64_t block = C.n + 1 + static_cast<std::int64_t>(i - 1) * (T + 1);
        x.insert(x.end(), static_cast<std::size_t>(block), F.exp_of(i).v);
    }
    const std::int64_t N = static_cast<std::int64_t>(x.size());

    std::vector<std::vector<uint32_t>> rows;
    for (const auto& g : C.G) {
        std::vector<uint32_t> row = g;
        row.resize(static_cast<std::size_t>(N), 0);
        rows.push_back(std::move(row));
    }
    rows.push_back(std::move(x));
    return make_code(F, std::move(rows));
}

// One completed induction step of the algebraic pipeline.
struct AlgebraicState {
    LinearCode code;                      // C_k, MWS with property (B)
    std::optional<RepetitionVector> r;    // r^{(k)} (absent on the final state)
    std::optional<LinearCode> repeated;   // C_k(r), MWS with (A) and (B)
    std::int64_t T = 0;                   // max c^r[beta] over the repeated code
};

// Base case of the induction: C_1 generated by
// (1, alpha, alpha, alpha^2, alpha^2, alpha^2, ...), length q(q-1)/2.
inline LinearCode algebraic_base(const Field& F) {
    const uint32_t q = F.q();
    std::vector<uint32_t> row;
    for (uint32_t t = 0; t + 1 < q; ++t) row.insert(row.end(), t + 1, F.exp_of(t).v);
    return make_code(F, {row});
}

// Full inductive pipeline up to dimension k_target. Every intermediate code
// is verified (fail-closed). `inject_r` overrides the search at given steps;
// `final_dim1` uses the shorter (A)-only extension for the last step, which
// yields an MWS code that need not satisfy (B).
inline std::vector<AlgebraicState> algebraic(uint32_t q, int k_target, bool final_dim1 = false,
                                             const std::vector<std::optional<RepetitionVector>>& inject_r = {}) {
    if (q < 3) throw UnsupportedQ("algebraic construction requires q >= 3");
    if (k_target < 1) throw Error("dimension must be at least 1");
    Field F(q);
    std::vector<AlgebraicState> states;
    LinearCode C = algebraic_base(F);
    if (!is_mws(C) || !property_B(C)) throw Error("base code failed verification");

    for (int k = 1; k < k_target; ++k) {
        auto problem = build_avoidance_problem(C);
        RepetitionVector r = (static_cast<std::size_t>(k - 1) < inject_r.size() && inject_r[static_cast<std::size_t>(k - 1)])
                                 ? *inject_r[static_cast<std::size_t>(k - 1)]
                                 : find_r(problem);
        if (!detail::avoids_all(r.r, problem.normals)) throw Error("repetition vector does not avoid all normals");
        LinearCode Cr = repetition_code(C, r);
        if (!is_mws(Cr) || !property_A(Cr) || !property_B(Cr)) throw Error("repeated code failed verification");
        std::int64_t T = max_entry_count(Cr);
        LinearCode next = (final_dim1 && k + 1 == k_target) ? extend_dim_1(Cr) : extend_dim_2(Cr, T);
        if (!is_mws(next)) throw NotMWS("extended code failed verification");
        if (!(final_dim1 && k + 1 == k_target) && !property_B(next)) throw PropertyBViolated("extended code lost property (B)");
        states.push_back({std::move(C), r, std::move(Cr), T});
        C = std::move(next);
    }
    states.push_back({std::move(C), std::nullopt, std::nullopt, 0});
    return states;
}

}  // namespace mws
