#pragma once

#include <stdexcept>
#include <string>

namespace rrca {

enum class errc {
    non_prime,
    reducible_modulus,
    order_not_dividing,
    ctx_mismatch,
    size_mismatch,
    bad_characteristic,
    budget_exceeded,
    not_central,
    not_single_eigenvalue,
    split_failure,
    radical_check_failed,
    identity_violated,
    division_by_zero,
    parse_error,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::order_not_dividing: return "OrderNotDividing";
        case errc::ctx_mismatch: return "CtxMismatch";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_central: return "NotCentral";
        case errc::not_single_eigenvalue: return "NotSingleEigenvalue";
        case errc::split_failure: return "SplitFailure";
        case errc::radical_check_failed: return "RadicalCheckFailed";
        case errc::identity_violated: return "IdentityViolated";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::parse_error: return "ParseError";
        case errc::internal_error: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace rrca
