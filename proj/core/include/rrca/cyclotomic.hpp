#pragma once

// Exact arithmetic in Z[zeta_M]: integer coordinate vectors over the power
// basis of a primitive M-th root of unity, reduced modulo the M-th
// cyclotomic polynomial.  Character values, Molien series coefficients and
// Brauer character values all live here; the only divisions that occur are
// by plain integers and are checked for exactness.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rrca/errors.hpp"

namespace rrca {

using BigInt = boost::multiprecision::cpp_int;

class CyclotomicField;
using CycFieldPtr = std::shared_ptr<const CyclotomicField>;

class CyclotomicNumber {
public:
    CyclotomicNumber() = default;
    CyclotomicNumber(CycFieldPtr field, std::vector<BigInt> coords);

    const CycFieldPtr& field() const { return field_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_integer() const; // only the constant coordinate may be nonzero
    BigInt integer_value() const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    CyclotomicNumber scaled(const BigInt& k) const;
    CyclotomicNumber conj() const; // zeta -> zeta^{-1}

    // Exact division by an integer; throws InternalError when not exact.
    CyclotomicNumber divided_by(const BigInt& k) const;

    std::string str() const;

private:
    CycFieldPtr field_;
    std::vector<BigInt> coords_; // size = deg Phi_M
};

class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    static CycFieldPtr create(uint32_t M);

    uint32_t M() const { return M_; }
    uint32_t degree() const { return static_cast<uint32_t>(phi_.size()) - 1; }
    const std::vector<BigInt>& cyclotomic_polynomial() const { return phi_; }

    CyclotomicNumber zero() const;
    CyclotomicNumber one() const;
    CyclotomicNumber from_int(const BigInt& v) const;
    // zeta_M^e, e taken mod M
    CyclotomicNumber root(int64_t e) const;

private:
    CyclotomicField() = default;
    uint32_t M_ = 1;
    std::vector<BigInt> phi_;                    // Phi_M, index = degree
    std::vector<std::vector<BigInt>> power_red_; // x^k mod Phi_M for k < 2M
    friend class CyclotomicNumber;
};

} // namespace rrca
