#pragma once

// Exact arithmetic in F_p and F_{p^r} for odd primes p at desk scale.
//
// A FieldCtx fixes (p, r, modulus); elements are coefficient vectors in the
// power basis of the modulus.  When no modulus is supplied the
// lexicographically smallest monic irreducible of degree r over Z/p is
// selected, so a given (p, r) always names the same field presentation.

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrca/errors.hpp"

namespace rrca {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldCtxPtr ctx, std::vector<uint32_t> coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Coefficient-lexicographic order; elements must share a ctx.  Used for
    // deterministic multiset keys.
    bool operator<(const FieldElement& o) const;

    FieldElement pow(uint64_t e) const;
    FieldElement inverse() const;

    // a^p, the absolute Frobenius.
    FieldElement frobenius() const;

    // Multiply by an integer scalar (reduced mod p; negatives allowed).
    FieldElement scaled(int64_t k) const;

    std::string str() const;

private:
    FieldCtxPtr ctx_;
    std::vector<uint32_t> coeffs_;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint64_t q() const { return q_; }
    // Monic modulus of degree r, coefficient i of t^i, size r+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(int64_t v) const;
    FieldElement from_coeffs(std::vector<uint32_t> coeffs) const;

    // Element with index k in the enumeration by base-p digit vectors,
    // 0 <= k < q.  Index 0 is zero, 1 is one, p is t, and so on.
    FieldElement element_at(uint64_t k) const;
    uint64_t index_of(const FieldElement& a) const;

    // Parses a polynomial in t, e.g. "2*t+1", "t^2+1", "0".
    FieldElement parse(const std::string& text) const;

    // Smallest multiplicative generator in element_at order (cached).
    FieldElement generator() const;

    bool same_field(const FieldCtx& o) const;

private:
    friend FieldCtxPtr ctx_create(uint32_t p, uint32_t r,
                                  const std::optional<std::vector<uint32_t>>& modulus);
    FieldCtx() = default;

    uint32_t p_ = 0;
    uint32_t r_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;
    // 0 until computed; the computed value is deterministic, so a racing
    // second writer stores the same index
    mutable std::atomic<uint64_t> generator_index_{0};
};

FieldCtxPtr ctx_create(uint32_t p, uint32_t r,
                       const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);
FieldCtxPtr ctx_create(uint32_t p, uint32_t r, const std::string& modulus_text);

// a^p - a.  Additive with kernel exactly F_p.
FieldElement artin_schreier(const FieldElement& a);

// True iff a lies in the prime subfield, tested via artin_schreier(a) == 0.
bool in_prime_subfield(const FieldElement& a);

// Deterministic primitive m-th root of unity; requires m | p^r - 1.
FieldElement primitive_root_of_unity(const FieldCtxPtr& ctx, uint64_t m);

// Least r with m | p^r - 1 (requires gcd(m, p) = 1).
uint32_t min_extension_degree(uint32_t p, uint64_t m);

// Multiplicative order of a nonzero element.
uint64_t multiplicative_order(const FieldElement& a);

// Parses just the polynomial syntax without reducing into a ctx; used for
// modulus flags.  Returns coefficients, index i = coefficient of t^i.
std::vector<uint32_t> parse_poly_text(const std::string& text, uint32_t p);

std::string poly_text(const std::vector<uint32_t>& coeffs);

} // namespace rrca
