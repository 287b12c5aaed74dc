#include "rrca/laurent.hpp"

#include <sstream>
#include <vector>

#include "rrca/errors.hpp"

namespace rrca {

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int32_t e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::bracket(uint32_t d, int32_t s) {
    LaurentPoly p;
    for (uint32_t i = 0; i < d; ++i) p.terms_[static_cast<int32_t>(i) * s] += 1;
    p.prune();
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.terms_[e] += c;
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.terms_[e] -= c;
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.terms_[e1 + e2] += c1 * c2;
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int32_t e) const {
    LaurentPoly out;
    for (const auto& [ex, v] : terms_) out.terms_[ex + e] = v;
    return out;
}

LaurentPoly LaurentPoly::substitute(uint32_t k) const {
    LaurentPoly out;
    for (const auto& [e, v] : terms_) out.terms_[e * static_cast<int32_t>(k)] = v;
    return out;
}

BigInt LaurentPoly::coeff(int32_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& [e, v] : terms_) s += v;
    return s;
}

int32_t LaurentPoly::valuation() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int32_t LaurentPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) fail(errc::division_by_zero, "division by zero polynomial");
    if (is_zero()) return LaurentPoly{};
    LaurentPoly num = shifted(-valuation());
    LaurentPoly den = divisor.shifted(-divisor.valuation());

    // dense schoolbook division, highest exponent first
    int32_t ndeg = num.degree(), ddeg = den.degree();
    if (ndeg < ddeg) return std::nullopt;
    std::vector<BigInt> n(ndeg + 1), d(ddeg + 1);
    for (const auto& [e, c] : num.terms()) n[e] = c;
    for (const auto& [e, c] : den.terms()) d[e] = c;
    const BigInt lead = d[ddeg];
    std::vector<BigInt> q(ndeg - ddeg + 1);
    for (int32_t e = ndeg - ddeg; e >= 0; --e) {
        BigInt c = n[e + ddeg];
        if (c % lead != 0) return std::nullopt;
        BigInt qe = c / lead;
        q[e] = qe;
        if (qe != 0)
            for (int32_t i = 0; i <= ddeg; ++i) n[e + i] -= qe * d[i];
    }
    for (const auto& c : n)
        if (c != 0) return std::nullopt;
    LaurentPoly quot;
    const int32_t shift = valuation() - divisor.valuation();
    for (size_t e = 0; e < q.size(); ++e)
        if (q[e] != 0) quot.terms_[static_cast<int32_t>(e) + shift] = q[e];
    return quot;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace rrca
