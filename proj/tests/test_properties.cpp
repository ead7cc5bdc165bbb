#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mws/code.hpp"
#include "mws/pg.hpp"

using namespace mws;

namespace {

constexpr int kRounds = 1000;

std::vector<uint32_t> random_word(std::mt19937& rng, const Field& F, std::int64_t n) {
    std::uniform_int_distribution<uint32_t> dist(0, F.q() - 1);
    std::vector<uint32_t> w(static_cast<std::size_t>(n));
    for (auto& v : w) v = dist(rng);
    return w;
}

LinearCode random_code(std::mt19937& rng, const Field& F) {
    std::uniform_int_distribution<int> kdist(1, 2);
    std::uniform_int_distribution<std::int64_t> ndist(3, 10);
    int k = kdist(rng);
    std::int64_t n = ndist(rng);
    while (true) {
        std::vector<std::vector<uint32_t>> rows;
        for (int i = 0; i < k; ++i) rows.push_back(random_word(rng, F, n));
        if (gf_rank(F, rows) == k) return make_code(F, std::move(rows));
    }
}

RepetitionVector random_r(std::mt19937& rng, uint32_t q) {
    std::uniform_int_distribution<std::int64_t> dist(0, 3);
    while (true) {
        std::vector<std::int64_t> r(q - 1);
        std::int64_t sum = 0;
        for (auto& v : r) sum += (v = dist(rng));
        if (sum > 0) return {r};
    }
}

std::vector<uint32_t> scale(const Field& F, const std::vector<uint32_t>& c, FieldElement b) {
    std::vector<uint32_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = F.mul(F.element(c[i]), b).v;
    return out;
}

std::vector<uint32_t> add_const(const Field& F, const std::vector<uint32_t>& c, FieldElement b) {
    std::vector<uint32_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = F.add(F.element(c[i]), b).v;
    return out;
}

// c^r by definition: alpha^i c repeated r_i times, i = 1..q-1
std::vector<uint32_t> repeat_word(const Field& F, const std::vector<uint32_t>& c, const RepetitionVector& rv) {
    std::vector<uint32_t> out;
    for (uint32_t e = 1; e < F.q(); ++e) {
        auto block = scale(F, c, F.exp_of(e));
        for (std::int64_t rep = 0; rep < rv.r[e - 1]; ++rep) out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace

TEST_CASE("distribution vector identities on randomized instances") {
    for (uint32_t q : {3u, 4u, 5u}) {
        Field F(q);
        std::mt19937 rng(1234 + q);
        std::uniform_int_distribution<uint32_t> jdist(1, q - 1);
        for (int round = 0; round < kRounds; ++round) {
            std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 10);
            auto c = random_word(rng, F, n);
            auto V = distribution(F, c);
            uint32_t j = jdist(rng);
            FieldElement beta = F.exp_of(j);

            // scaling by alpha^j shifts the first q-1 entries by j
            auto Vb = distribution(F, scale(F, c, beta));
            for (std::int64_t i = 1; i < q; ++i) CHECK(dist_at_exp(Vb, i) == dist_at_exp(V, i - j));
            CHECK(Vb.back() == V.back());

            // adding beta*e permutes the entries
            auto Vshift = distribution(F, add_const(F, c, beta));
            auto a = V, b = Vshift;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);

            // concatenation adds componentwise
            auto d = random_word(rng, F, 3 + static_cast<std::int64_t>(rng() % 6));
            auto cd = c;
            cd.insert(cd.end(), d.begin(), d.end());
            auto Vc = distribution(F, c), Vd = distribution(F, d), Vcd = distribution(F, cd);
            for (uint32_t i = 0; i < q; ++i) CHECK(Vcd[i] == Vc[i] + Vd[i]);

            // c[0] = n - w(c); c[beta] = n - w(c - beta e); entries sum to n
            CHECK(V.back() == n - weight(c));
            std::int64_t c_at_beta = dist_at_exp(V, j == 0 ? q - 1 : j);
            CHECK(c_at_beta == n - weight(add_const(F, c, F.neg(beta))));
            std::int64_t sum = 0;
            for (auto v : V) sum += v;
            CHECK(sum == n);
        }
    }
}

TEST_CASE("repetition code identities on randomized instances") {
    for (uint32_t q : {3u, 4u, 5u}) {
        Field F(q);
        std::mt19937 rng(9876 + q);
        for (int round = 0; round < kRounds; ++round) {
            LinearCode C = random_code(rng, F);
            RepetitionVector rv = random_r(rng, q);
            std::int64_t R = rv.R();
            LinearCode Cr = repetition_code(C, rv);
            CHECK(Cr.n == R * C.n);
            CHECK(Cr.k == C.k);

            auto msg = random_word(rng, F, C.k);
            auto c = encode_message(C, msg);
            auto cr = encode_message(Cr, msg);
            CHECK(cr == repeat_word(F, c, rv));

            // w(c^r) = R w(c) and c^r[0] = R c[0]
            CHECK(weight(cr) == R * weight(c));
            auto V = distribution(F, c), Vr = distribution(F, cr);
            CHECK(Vr.back() == R * V.back());

            // convolution identity for the nonzero entries
            for (std::int64_t i = 1; i < q; ++i) {
                std::int64_t expect = 0;
                for (std::int64_t j = 1; j < q; ++j) expect += rv.r[static_cast<std::size_t>(j - 1)] * dist_at_exp(V, i - j);
                CHECK(dist_at_exp(Vr, i) == expect);
            }

            // |w(C)| = |w(C(r))|
            CHECK(weight_set(C).size() == weight_set(Cr).size());
        }
    }
}

TEST_CASE("weight set cardinality never exceeds theta_q(k-1)") {
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        Field F(q);
        std::mt19937 rng(42 + q);
        for (int round = 0; round < 200; ++round) {
            LinearCode C = random_code(rng, F);
            CHECK(BigInt(weight_set(C).size()) <= theta(q, C.k - 1));
        }
    }
}

TEST_CASE("double counting over random systems") {
    for (uint32_t q : {2u, 3u, 4u}) {
        Field F(q);
        std::mt19937 rng(7 + q);
        for (int round = 0; round < 100; ++round) {
            int k = 2 + static_cast<int>(rng() % 2);
            ProjectiveSystem sys(F, k);
            for (const auto& pt : enumerate_points(F, k))
                if (rng() % 2) sys.add_point(pt, BigInt(1 + rng() % 1000));
            if (sys.mults().empty()) continue;
            BigInt total = 0;
            for (const auto& H : enumerate_hyperplanes(F, k)) total += character(sys, H);
            CHECK(total == sys.n() * theta(q, k - 2));
        }
    }
}

TEST_CASE("character weights agree with enumeration on random systems") {
    for (uint32_t q : {2u, 3u}) {
        Field F(q);
        std::mt19937 rng(99 + q);
        for (int round = 0; round < 50; ++round) {
            ProjectiveSystem sys(F, 2);
            for (const auto& pt : enumerate_points(F, 2))
                if (rng() % 2) sys.add_point(pt, BigInt(1 + rng() % 20));
            if (sys.mults().size() < 2) continue;  // need a spanning support
            auto verdict = mws_via_characters(sys);
            std::multiset<BigInt> via_chars;
            for (const auto& H : enumerate_hyperplanes(F, 2)) via_chars.insert(sys.n() - character(sys, H));
            std::multiset<BigInt> via_words;
            for_each_representative(code_from_system(sys), [&](const Codeword& c) { via_words.insert(weight(c)); });
            CHECK(via_chars == via_words);
            CHECK(verdict.mws == (std::set<BigInt>(via_words.begin(), via_words.end()).size() == via_words.size()));
        }
    }
}
