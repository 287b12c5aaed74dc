#pragma once

// Integer Laurent polynomials in one variable t, exact coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace rrca {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const BigInt& c, int32_t e);
    static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }
    static LaurentPoly one() { return constant(1); }

    // 1 + t^s + t^{2s} + ... + t^{(d-1)s}
    static LaurentPoly bracket(uint32_t d, int32_t s = 1);

    const std::map<int32_t, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(int32_t e) const;      // multiply by t^e
    LaurentPoly substitute(uint32_t k) const;  // t -> t^k
    BigInt coeff(int32_t e) const;
    BigInt eval_one() const; // value at t = 1

    int32_t valuation() const;  // smallest exponent; 0 for the zero polynomial
    int32_t degree() const;     // largest exponent; 0 for the zero polynomial

    // Exact division up to a monomial unit: both operands are shifted to
    // valuation zero first.  nullopt when the division leaves a remainder.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    std::string str() const;

private:
    std::map<int32_t, BigInt> terms_; // exponent -> nonzero coefficient
    void prune();
};

} // namespace rrca
