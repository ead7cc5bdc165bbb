#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "mws/bigint.hpp"
#include "mws/errors.hpp"
#include "mws/gf.hpp"

namespace mws {

// theta_q(k) = (q^{k+1} - 1) / (q - 1), the number of points of PG(k,q).
// Conventions: theta_q(-1) = 0, theta_q(0) = 1.
inline BigInt theta(uint32_t q, int k) {
    if (k < 0) return 0;
    return (pow_big(BigInt(q), static_cast<unsigned long>(k) + 1) - 1) / (q - 1);
}

// Point of PG(k-1,q): k coordinates, canonicalized so the first nonzero
// coordinate equals 1. Stored as raw encodings; ordering is lexicographic.
struct ProjectivePoint {
    std::vector<uint32_t> coords;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords <=> b.coords;
    }
};

// Hyperplane of PG(k-1,q) in dual representation: P is incident iff
// <normal, P.coords> = 0. The normal is canonicalized like a point.
struct Hyperplane {
    std::vector<uint32_t> normal;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

inline bool is_canonical_coords(const Field& F, const std::vector<uint32_t>& coords) {
    for (uint32_t c : coords) {
        if (c >= F.q()) return false;
        if (c != 0) return c == 1;
    }
    return false;  // all-zero
}

// Rescale so the first nonzero coordinate is 1. Throws on the zero vector.
inline std::vector<uint32_t> canonicalize_coords(const Field& F, const std::vector<uint32_t>& coords) {
    FieldElement lead = F.zero();
    for (uint32_t c : coords) {
        if (c != 0) { lead = F.element(c); break; }
    }
    if (lead.v == 0) throw NonCanonicalPoint("cannot canonicalize the zero vector");
    if (lead.v == 1) return coords;
    FieldElement s = F.inv(lead);
    std::vector<uint32_t> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = F.mul(F.element(coords[i]), s).v;
    return out;
}

// All theta_q(k-1) canonical points of PG(k-1,q), in lexicographic order of
// their coordinate vectors. Deterministic and idempotent.
inline std::vector<ProjectivePoint> enumerate_points(const Field& F, int k) {
    const uint32_t q = F.q();
    std::vector<ProjectivePoint> out;
    for (int lead = k - 1; lead >= 0; --lead) {
        // leading 1 at position `lead`, free coordinates after it
        std::vector<uint32_t> coords(static_cast<std::size_t>(k), 0);
        coords[static_cast<std::size_t>(lead)] = 1;
        while (true) {
            out.push_back({coords});
            int i = k - 1;
            while (i > lead && coords[static_cast<std::size_t>(i)] == q - 1) coords[static_cast<std::size_t>(i--)] = 0;
            if (i == lead) break;
            ++coords[static_cast<std::size_t>(i)];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Hyperplane> enumerate_hyperplanes(const Field& F, int k) {
    std::vector<Hyperplane> out;
    for (const auto& pt : enumerate_points(F, k)) out.push_back({pt.coords});
    return out;
}

inline FieldElement dot(const Field& F, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of unequal length");
    FieldElement acc = F.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(F.element(a[i]), F.element(b[i])));
    return acc;
}

inline bool incident(const Field& F, const Hyperplane& H, const ProjectivePoint& P) {
    return dot(F, H.normal, P.coords).v == 0;
}

// Multiset of points of PG(k-1,q) with arbitrary-precision multiplicities.
class ProjectiveSystem {
  public:
    ProjectiveSystem(Field field, int k) : field_(std::move(field)), k_(k) {}

    const Field& field() const { return field_; }
    uint32_t q() const { return field_.q(); }
    int k() const { return k_; }
    const BigInt& n() const { return n_; }
    const std::map<ProjectivePoint, BigInt>& mults() const { return mults_; }

    void add_point(const ProjectivePoint& P, const BigInt& mult) {
        if (static_cast<int>(P.coords.size()) != k_) throw DimensionMismatch("point dimension does not match system");
        if (!is_canonical_coords(field_, P.coords)) throw NonCanonicalPoint("point is not in canonical form");
        if (mult < 0) throw Error("negative multiplicity");
        if (mult == 0) return;
        mults_[P] += mult;
        n_ += mult;
    }

    BigInt multiplicity(const ProjectivePoint& P) const {
        auto it = mults_.find(P);
        return it == mults_.end() ? BigInt(0) : it->second;
    }

  private:
    Field field_;
    int k_;
    std::map<ProjectivePoint, BigInt> mults_;
    BigInt n_ = 0;
};

// ch_M(H): total multiplicity on the hyperplane. Iterates the support only;
// supports stay small even when multiplicities are huge.
inline BigInt character(const ProjectiveSystem& sys, const Hyperplane& H) {
    if (H.normal.size() != static_cast<std::size_t>(sys.k())) throw DimensionMismatch("hyperplane dimension does not match system");
    BigInt acc = 0;
    for (const auto& [pt, mult] : sys.mults())
        if (incident(sys.field(), H, pt)) acc += mult;
    return acc;
}

// Rank over GF(q) of a set of coordinate vectors (Gaussian elimination).
inline int gf_rank(const Field& F, std::vector<std::vector<uint32_t>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        FieldElement inv_lead = F.inv(F.element(rows[row][col]));
        for (std::size_t j = col; j < cols; ++j) rows[row][j] = F.mul(F.element(rows[row][j]), inv_lead).v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            FieldElement f = F.element(rows[i][col]);
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] = F.sub(F.element(rows[i][j]), F.mul(f, F.element(rows[row][j]))).v;
        }
        ++row, ++rank;
    }
    return rank;
}

// True iff the support spans PG(k-1,q).
inline bool spans(const ProjectiveSystem& sys) {
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(sys.mults().size());
    for (const auto& [pt, mult] : sys.mults()) rows.push_back(pt.coords);
    return gf_rank(sys.field(), std::move(rows)) == sys.k();
}

}  // namespace mws
