#include "rrca/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace rrca {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_divide(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> n = num;
    if (den.empty() || den.back() == 0) fail(errc::internal_error, "bad divisor");
    int nd = static_cast<int>(n.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (nd < dd) fail(errc::internal_error, "bad cyclotomic division");
    std::vector<BigInt> q(nd - dd + 1);
    for (int e = nd - dd; e >= 0; --e) {
        BigInt c = n[e + dd];
        if (c % den[dd] != 0) fail(errc::internal_error, "non-exact cyclotomic division");
        BigInt qe = c / den[dd];
        q[e] = qe;
        if (qe != 0)
            for (int i = 0; i <= dd; ++i) n[e + i] -= qe * den[i];
    }
    for (const auto& c : n)
        if (c != 0) fail(errc::internal_error, "cyclotomic division left a remainder");
    return q;
}

std::vector<BigInt> cyclotomic_poly(uint32_t M) {
    // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d, computed bottom-up
    std::vector<std::vector<BigInt>> memo(M + 1);
    for (uint32_t m = 1; m <= M; ++m) {
        if (M % m != 0) continue;
        std::vector<BigInt> num(m + 1);
        num[0] = -1;
        num[m] = 1;
        for (uint32_t d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divide(num, memo[d]);
        memo[m] = std::move(num);
    }
    return memo[M];
}

} // namespace

CycFieldPtr CyclotomicField::create(uint32_t M) {
    if (M == 0) fail(errc::internal_error, "conductor must be positive");
    if (M > 600) fail(errc::budget_exceeded, "cyclotomic conductor beyond desk scale");
    auto f = std::shared_ptr<CyclotomicField>(new CyclotomicField());
    f->M_ = M;
    f->phi_ = cyclotomic_poly(M);
    const uint32_t deg = f->degree();
    // x^k mod Phi_M for k < 2M, enough for products of basis powers
    f->power_red_.resize(2 * M);
    for (uint32_t k = 0; k < 2 * M; ++k) {
        std::vector<BigInt> v(deg, 0);
        if (k < deg) {
            v[k] = 1;
        } else {
            const auto& prev = f->power_red_[k - 1];
            std::vector<BigInt> shifted(deg + 1, 0);
            for (uint32_t i = 0; i < deg; ++i) shifted[i + 1] = prev[i];
            // x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1}), Phi_M is monic
            BigInt top = shifted[deg];
            for (uint32_t i = 0; i < deg; ++i) v[i] = shifted[i] - top * f->phi_[i];
        }
        f->power_red_[k] = std::move(v);
    }
    return f;
}

CyclotomicNumber CyclotomicField::zero() const {
    return CyclotomicNumber(shared_from_this(), std::vector<BigInt>(degree(), 0));
}

CyclotomicNumber CyclotomicField::one() const { return from_int(1); }

CyclotomicNumber CyclotomicField::from_int(const BigInt& v) const {
    std::vector<BigInt> c(degree(), 0);
    if (degree() > 0) c[0] = v;
    return CyclotomicNumber(shared_from_this(), std::move(c));
}

CyclotomicNumber CyclotomicField::root(int64_t e) const {
    int64_t m = static_cast<int64_t>(M_);
    int64_t k = ((e % m) + m) % m;
    std::vector<BigInt> c = power_red_[static_cast<size_t>(k)];
    return CyclotomicNumber(shared_from_this(), std::move(c));
}

CyclotomicNumber::CyclotomicNumber(CycFieldPtr field, std::vector<BigInt> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != field_->degree()) fail(errc::internal_error, "bad coordinate size");
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_integer() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

BigInt CyclotomicNumber::integer_value() const {
    if (!is_integer()) fail(errc::internal_error, "cyclotomic value is not a rational integer");
    return coords_.empty() ? BigInt(0) : coords_[0];
}

static void check_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field()->M() != b.field()->M())
        fail(errc::ctx_mismatch, "cyclotomic numbers from different conductors");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    check_same_field(*this, o);
    std::vector<BigInt> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    check_same_field(*this, o);
    std::vector<BigInt> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
    return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<BigInt> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    check_same_field(*this, o);
    const uint32_t deg = field_->degree();
    std::vector<BigInt> prod(2 * deg > 0 ? 2 * deg - 1 : 1, 0);
    for (uint32_t i = 0; i < deg; ++i) {
        if (coords_[i] == 0) continue;
        for (uint32_t j = 0; j < deg; ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    std::vector<BigInt> out(deg, 0);
    for (uint32_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out[k] += prod[k];
        } else {
            const auto& red = field_->power_red_[k];
            for (uint32_t i = 0; i < deg; ++i) out[i] += prod[k] * red[i];
        }
    }
    return CyclotomicNumber(field_, std::move(out));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    check_same_field(*this, o);
    return coords_ == o.coords_;
}

CyclotomicNumber CyclotomicNumber::scaled(const BigInt& k) const {
    std::vector<BigInt> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * k;
    return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::conj() const {
    // zeta^i -> zeta^{M-i}
    auto out = field_->zero();
    const uint32_t M = field_->M();
    for (uint32_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        out += field_->root(static_cast<int64_t>(M) - i).scaled(coords_[i]);
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::divided_by(const BigInt& k) const {
    if (k == 0) fail(errc::division_by_zero, "division by zero integer");
    std::vector<BigInt> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (coords_[i] % k != 0) fail(errc::internal_error, "cyclotomic coordinate not divisible");
        c[i] = coords_[i] / k;
    }
    return CyclotomicNumber(field_, std::move(c));
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (any && coords_[i] > 0) os << "+";
        os << coords_[i].str();
        if (i >= 1) {
            os << "*z";
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

} // namespace rrca
