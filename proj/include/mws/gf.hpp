#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "mws/errors.hpp"

namespace mws {

// Element of GF(q), tagged with q so cross-field operations can be rejected.
// The encoding is the base-p packing of the polynomial-basis coefficient
// vector (for m = 1 simply the residue mod p).
struct FieldElement {
    uint32_t v = 0;
    uint32_t q = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

inline std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline uint32_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t acc = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
inline std::vector<uint32_t> poly_mul_mod(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b,
                                          const std::vector<uint32_t>& modulus, uint32_t p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<uint64_t>(a[i]) * b[j] % p;
    // reduce: modulus is monic, x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
    for (std::size_t d = prod.size(); d-- > m;) {
        uint64_t c = prod[d] % p;
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            uint64_t sub = c * (modulus[i] % p) % p;
            prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
        }
    }
    std::vector<uint32_t> out(m, 0);
    for (std::size_t i = 0; i < m && i < prod.size(); ++i) out[i] = static_cast<uint32_t>(prod[i] % p);
    return out;
}

inline std::vector<uint32_t> poly_pow_mod(std::vector<uint32_t> base, uint64_t exp,
                                          const std::vector<uint32_t>& modulus, uint32_t p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<uint32_t> acc(m, 0);
    acc[0] = 1;
    while (exp) {
        if (exp & 1) acc = poly_mul_mod(acc, base, modulus, p);
        base = poly_mul_mod(base, base, modulus, p);
        exp >>= 1;
    }
    return acc;
}

inline bool is_one_poly(const std::vector<uint32_t>& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

}  // namespace detail

// A concrete realization of GF(q), q = p^m, with the canonical primitive
// element alpha and log/exp tables. Immutable after construction.
class Field {
  public:
    explicit Field(uint32_t q_) { build(q_); }

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    // Coefficients of the chosen primitive polynomial, constant term first,
    // monic of degree m. Empty when m = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    FieldElement alpha() const { return element(alpha_); }

    FieldElement zero() const { return {0, q_}; }
    FieldElement one() const { return {1, q_}; }

    FieldElement element(uint32_t encoding) const {
        if (encoding >= q_) throw EncodingOutOfRange("element encoding " + std::to_string(encoding) + " out of range for q=" + std::to_string(q_));
        return {encoding, q_};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        check(a), check(b);
        if (m_ == 1) return {(a.v + b.v) % p_, q_};
        uint32_t out = 0, mul = 1;
        uint32_t av = a.v, bv = b.v;
        for (uint32_t i = 0; i < m_; ++i) {
            out += (av % p_ + bv % p_) % p_ * mul;
            av /= p_, bv /= p_, mul *= p_;
        }
        return {out, q_};
    }

    FieldElement neg(FieldElement a) const {
        check(a);
        if (m_ == 1) return {(p_ - a.v) % p_, q_};
        uint32_t out = 0, mul = 1;
        uint32_t av = a.v;
        for (uint32_t i = 0; i < m_; ++i) {
            out += (p_ - av % p_) % p_ * mul;
            av /= p_, mul *= p_;
        }
        return {out, q_};
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        check(a), check(b);
        if (a.v == 0 || b.v == 0) return zero();
        return {exp_[(log_[a.v] + log_[b.v]) % (q_ - 1)], q_};
    }

    FieldElement inv(FieldElement a) const {
        check(a);
        if (a.v == 0) throw DivisionByZero("inv(0) in GF(" + std::to_string(q_) + ")");
        return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)], q_};
    }

    FieldElement pow(FieldElement a, uint64_t e) const {
        check(a);
        if (a.v == 0) return e == 0 ? one() : zero();
        return {exp_[static_cast<std::size_t>(log_[a.v] * (e % (q_ - 1)) % (q_ - 1))], q_};
    }

    // alpha^j, exponent taken mod q-1
    FieldElement exp_of(uint64_t j) const { return {exp_[j % (q_ - 1)], q_}; }

    // discrete log base alpha, in [0, q-2]; undefined for 0
    uint32_t log_of(FieldElement a) const {
        check(a);
        if (a.v == 0) throw DivisionByZero("log(0)");
        return log_[a.v];
    }

    const std::vector<uint32_t>& exp_table() const { return exp_; }
    const std::vector<uint32_t>& log_table() const { return log_; }

  private:
    void check(FieldElement a) const {
        if (a.q != q_) throw FieldMismatch("operand from GF(" + std::to_string(a.q) + ") used in GF(" + std::to_string(q_) + ")");
        if (a.v >= q_) throw EncodingOutOfRange("element encoding out of range");
    }

    void build(uint32_t q) {
        if (q < 2) throw NotPrimePower("q must be at least 2");
        if (q > (1u << 16)) throw TooLarge("q exceeds 2^16");
        auto primes = detail::prime_factors(q);
        if (primes.size() != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
        p_ = primes[0];
        m_ = 0;
        for (uint32_t t = q; t > 1; t /= p_) ++m_;
        q_ = q;

        if (m_ == 1) {
            alpha_ = smallest_primitive_root(p_);
            exp_.assign(q_ - 1, 0);
            log_.assign(q_, 0);
            uint32_t acc = 1;
            for (uint32_t j = 0; j + 1 < q_; ++j) {
                exp_[j] = acc;
                log_[acc] = j;
                acc = static_cast<uint32_t>(static_cast<uint64_t>(acc) * alpha_ % p_);
            }
            return;
        }

        modulus_ = smallest_primitive_polynomial(p_, m_);
        // alpha is the class of the indeterminate: encoding p
        alpha_ = p_;
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::vector<uint32_t> acc(m_, 0);
        acc[0] = 1;
        std::vector<uint32_t> x(m_, 0);
        if (m_ > 1) x[1] = 1;
        for (uint32_t j = 0; j + 1 < q_; ++j) {
            uint32_t enc = encode_poly(acc);
            exp_[j] = enc;
            log_[enc] = j;
            acc = detail::poly_mul_mod(acc, x, modulus_, p_);
        }
    }

    uint32_t encode_poly(const std::vector<uint32_t>& coeffs) const {
        uint32_t out = 0, mul = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            out += coeffs[i] * mul;
            mul *= p_;
        }
        return out;
    }

    static uint32_t smallest_primitive_root(uint32_t p) {
        if (p == 2) return 1;
        auto factors = detail::prime_factors(p - 1);
        for (uint32_t g = 2; g < p; ++g) {
            bool ok = true;
            for (uint32_t f : factors)
                if (detail::mod_pow(g, (p - 1) / f, p) == 1) { ok = false; break; }
            if (ok) return g;
        }
        throw Error("no primitive root found (unreachable for prime p)");
    }

    // Lexicographically smallest (constant term first) monic primitive
    // polynomial of degree m over GF(p). A monic f is primitive iff the class
    // of x in GF(p)[x]/(f) has multiplicative order exactly p^m - 1: only a
    // field has a unit group that large.
    static std::vector<uint32_t> smallest_primitive_polynomial(uint32_t p, uint32_t m) {
        uint64_t qm1 = 1;
        for (uint32_t i = 0; i < m; ++i) qm1 *= p;
        --qm1;
        auto factors = detail::prime_factors(static_cast<uint32_t>(qm1));
        std::vector<uint32_t> coeffs(m + 1, 0);
        coeffs[m] = 1;
        // odometer over (c_0, ..., c_{m-1}) in lex order, c_0 most significant
        std::vector<uint32_t> c(m, 0);
        while (true) {
            for (uint32_t i = 0; i < m; ++i) coeffs[i] = c[i];
            if (coeffs[0] != 0) {  // x must be invertible
                std::vector<uint32_t> x(m, 0);
                if (m > 1)
                    x[1] = 1;
                else
                    x[0] = (p - coeffs[0]) % p;  // degenerate, m >= 2 here in practice
                bool primitive = detail::is_one_poly(detail::poly_pow_mod(x, qm1, coeffs, p));
                for (uint32_t f : factors)
                    if (primitive && detail::is_one_poly(detail::poly_pow_mod(x, qm1 / f, coeffs, p))) primitive = false;
                if (primitive) return coeffs;
            }
            // increment odometer, last coordinate fastest
            int i = static_cast<int>(m) - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
        throw Error("no primitive polynomial found (unreachable for prime powers)");
    }

    uint32_t p_ = 0;
    uint32_t m_ = 0;
    uint32_t q_ = 0;
    uint32_t alpha_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

inline Field make_field(uint32_t q) { return Field(q); }

}  // namespace mws
