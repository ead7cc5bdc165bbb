#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mws/bigint.hpp"
#include "mws/errors.hpp"
#include "mws/gf.hpp"
#include "mws/pg.hpp"

namespace mws {

// Guards for exact enumeration: one representative per projective class for
// weights, all q^k codewords for the entry-count properties.
inline constexpr std::int64_t kMaxRepresentatives = 10'000'000;
inline constexpr std::int64_t kMaxMaterializedLength = 100'000'000;

using Codeword = std::vector<uint32_t>;

// Linear [n,k]_q code given by a k x n generator matrix (rows generate).
struct LinearCode {
    Field field;
    int k = 0;
    std::int64_t n = 0;
    std::vector<std::vector<uint32_t>> G;  // k rows of n element encodings
};

inline LinearCode make_code(Field field, std::vector<std::vector<uint32_t>> rows) {
    LinearCode C{std::move(field), static_cast<int>(rows.size()),
                 rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size()), std::move(rows)};
    for (const auto& row : C.G)
        if (static_cast<std::int64_t>(row.size()) != C.n) throw DimensionMismatch("ragged generator matrix");
    return C;
}

inline Codeword encode_message(const LinearCode& C, const std::vector<uint32_t>& msg) {
    const Field& F = C.field;
    Codeword out(static_cast<std::size_t>(C.n), 0);
    for (int i = 0; i < C.k; ++i) {
        if (msg[static_cast<std::size_t>(i)] == 0) continue;
        FieldElement s = F.element(msg[static_cast<std::size_t>(i)]);
        for (std::int64_t j = 0; j < C.n; ++j) {
            auto& cell = out[static_cast<std::size_t>(j)];
            cell = F.add(F.element(cell), F.mul(s, F.element(C.G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))).v;
        }
    }
    return out;
}

inline std::int64_t weight(const Codeword& c) {
    return static_cast<std::int64_t>(std::count_if(c.begin(), c.end(), [](uint32_t v) { return v != 0; }));
}

// One codeword per scalar class: vG for each canonical v of PG(k-1,q).
// Exactly theta_q(k-1) codewords; weights are scalar-invariant so these
// suffice for the weight set.
template <typename Fn>
void for_each_representative(const LinearCode& C, Fn&& fn) {
    if (theta(C.field.q(), C.k - 1) > kMaxRepresentatives)
        throw TooLargeToEnumerate("too many codeword classes to enumerate");
    for (const auto& pt : enumerate_points(C.field, C.k)) fn(encode_message(C, pt.coords));
}

inline std::vector<Codeword> codeword_representatives(const LinearCode& C) {
    std::vector<Codeword> out;
    for_each_representative(C, [&](Codeword c) { out.push_back(std::move(c)); });
    return out;
}

// All q^k codewords including zero (c[beta] is not scalar-invariant, so the
// property checks cannot use class representatives).
template <typename Fn>
void for_each_codeword(const LinearCode& C, Fn&& fn) {
    BigInt total = pow_big(BigInt(C.field.q()), static_cast<unsigned long>(C.k));
    if (total > kMaxRepresentatives) throw TooLargeToEnumerate("too many codewords to enumerate");
    std::vector<uint32_t> msg(static_cast<std::size_t>(C.k), 0);
    while (true) {
        fn(encode_message(C, msg));
        int i = C.k - 1;
        while (i >= 0 && msg[static_cast<std::size_t>(i)] == C.field.q() - 1) msg[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++msg[static_cast<std::size_t>(i)];
    }
}

inline std::set<std::int64_t> weight_set(const LinearCode& C) {
    std::set<std::int64_t> out;
    for_each_representative(C, [&](const Codeword& c) { out.insert(weight(c)); });
    return out;
}

inline bool is_mws(const LinearCode& C) {
    return BigInt(weight_set(C).size()) == theta(C.field.q(), C.k - 1);
}

// Entries distribution vector V(c) = (c[alpha], ..., c[alpha^{q-1}], c[0]).
inline std::vector<std::int64_t> distribution(const Field& F, const Codeword& c) {
    const uint32_t q = F.q();
    std::vector<std::int64_t> counts(q, 0);
    for (uint32_t v : c) {
        if (v == 0) {
            ++counts[q - 1];
        } else {
            uint32_t j = F.log_of(F.element(v));  // in [0, q-2], alpha^0 = alpha^{q-1}
            ++counts[(j == 0 ? q - 1 : j) - 1];
        }
    }
    return counts;
}

// c[alpha^e] with the exponent convention alpha^0 = alpha^{q-1};
// e is reduced mod q-1.
inline std::int64_t dist_at_exp(const std::vector<std::int64_t>& V, std::int64_t e) {
    const std::int64_t qm1 = static_cast<std::int64_t>(V.size()) - 1;
    e = ((e % qm1) + qm1) % qm1;
    if (e == 0) e = qm1;
    return V[static_cast<std::size_t>(e - 1)];
}

struct RepetitionVector {
    std::vector<std::int64_t> r;  // length q-1, entry i-1 repeats the alpha^i block
    std::int64_t R() const {
        std::int64_t s = 0;
        for (auto v : r) s += v;
        return s;
    }
};

// Generalized r-repetition code: block concatenation
// [alpha G x r_1 | alpha^2 G x r_2 | ... | alpha^{q-1} G x r_{q-1}].
inline LinearCode repetition_code(const LinearCode& C, const RepetitionVector& rv) {
    const Field& F = C.field;
    if (rv.r.size() != F.q() - 1) throw DimensionMismatch("repetition vector must have q-1 entries");
    bool all_zero = true;
    for (auto v : rv.r) {
        if (v < 0) throw Error("negative repetition count");
        if (v != 0) all_zero = false;
    }
    if (all_zero) throw ZeroRepetition("repetition vector is identically zero");
    if (rv.R() * C.n > kMaxMaterializedLength) throw TooLongToMaterialize("repetition code too long");

    std::vector<std::vector<uint32_t>> rows(static_cast<std::size_t>(C.k));
    for (int i = 0; i < C.k; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(rv.R() * C.n));
        for (uint32_t e = 1; e < F.q(); ++e) {
            FieldElement s = F.exp_of(e);
            for (std::int64_t rep = 0; rep < rv.r[e - 1]; ++rep)
                for (std::int64_t j = 0; j < C.n; ++j)
                    row.push_back(F.mul(s, F.element(C.G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])).v);
        }
    }
    return make_code(F, std::move(rows));
}

// Property (A): c -> c[alpha] is injective over all q^k codewords. Checking
// beta = alpha suffices for every beta in GF(q)*.
inline bool property_A(const LinearCode& C) {
    const Field& F = C.field;
    FieldElement a = F.alpha();
    std::vector<char> seen(static_cast<std::size_t>(C.n) + 1, 0);
    bool ok = true;
    for_each_codeword(C, [&](const Codeword& c) {
        if (!ok) return;
        std::int64_t count = static_cast<std::int64_t>(std::count(c.begin(), c.end(), a.v));
        if (seen[static_cast<std::size_t>(count)]) ok = false;
        seen[static_cast<std::size_t>(count)] = 1;
    });
    return ok;
}

// Property (B): every nonzero codeword's V(c) has pairwise distinct entries.
inline bool property_B(const LinearCode& C) {
    bool ok = true;
    for_each_codeword(C, [&](const Codeword& c) {
        if (!ok || weight(c) == 0) return;
        auto V = distribution(C.field, c);
        std::sort(V.begin(), V.end());
        if (std::adjacent_find(V.begin(), V.end()) != V.end()) ok = false;
    });
    return ok;
}

// Generator matrix with m(P) copies of each support point as columns,
// in deterministic (lexicographic) point order.
inline LinearCode code_from_system(const ProjectiveSystem& sys) {
    if (sys.n() > kMaxMaterializedLength)
        throw TooLongToMaterialize("system length exceeds the materialization guard; use character verification");
    const std::int64_t n = static_cast<std::int64_t>(sys.n());
    std::vector<std::vector<uint32_t>> rows(static_cast<std::size_t>(sys.k()));
    for (auto& row : rows) row.reserve(static_cast<std::size_t>(n));
    for (const auto& [pt, mult] : sys.mults()) {
        const std::int64_t reps = static_cast<std::int64_t>(mult);
        for (std::int64_t rep = 0; rep < reps; ++rep)
            for (int i = 0; i < sys.k(); ++i) rows[static_cast<std::size_t>(i)].push_back(pt.coords[static_cast<std::size_t>(i)]);
    }
    return make_code(sys.field(), std::move(rows));
}

// Columns of G, canonicalized, as a multiset of points of PG(k-1,q).
inline ProjectiveSystem system_from_code(const LinearCode& C) {
    ProjectiveSystem sys(C.field, C.k);
    for (std::int64_t j = 0; j < C.n; ++j) {
        std::vector<uint32_t> col(static_cast<std::size_t>(C.k));
        bool zero = true;
        for (int i = 0; i < C.k; ++i) {
            col[static_cast<std::size_t>(i)] = C.G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (col[static_cast<std::size_t>(i)] != 0) zero = false;
        }
        if (zero) throw DegenerateCode("generator matrix has an identically-zero column");
        sys.add_point({canonicalize_coords(C.field, col)}, 1);
    }
    return sys;
}

struct CharacterVerdict {
    bool mws = false;
    std::vector<BigInt> characters;  // sorted ascending
    std::vector<BigInt> weights;     // n - ch(H), sorted ascending
};

// Character-based MWS check: all theta_q(k-1) hyperplane characters pairwise
// distinct. Works for astronomically long codes.
inline CharacterVerdict mws_via_characters(const ProjectiveSystem& sys) {
    CharacterVerdict out;
    for (const auto& H : enumerate_hyperplanes(sys.field(), sys.k())) out.characters.push_back(character(sys, H));
    std::sort(out.characters.begin(), out.characters.end());
    out.mws = std::adjacent_find(out.characters.begin(), out.characters.end()) == out.characters.end();
    for (const auto& ch : out.characters) out.weights.push_back(sys.n() - ch);
    std::sort(out.weights.begin(), out.weights.end());
    return out;
}

}  // namespace mws
