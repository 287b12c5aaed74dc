#include "rrca/gf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rrca {

namespace {

using Poly = std::vector<uint32_t>; // coefficient i of t^i, reduced mod p

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t v = (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
        out[i] = static_cast<uint32_t>(v % p);
    }
    trim(out);
    return out;
}

Poly poly_scale(const Poly& a, uint64_t k, uint32_t p) {
    Poly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint32_t>((a[i] * k) % p);
    trim(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t v = out[i + j] + static_cast<uint64_t>(a[i]) * b[j];
            out[i + j] = static_cast<uint32_t>(v % p);
        }
    }
    trim(out);
    return out;
}

uint64_t inv_mod_p(uint64_t a, uint32_t p) {
    // Fermat
    uint64_t e = p - 2, r = 1, x = a % p;
    while (e) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return r;
}

// in-place remainder of a by monic-normalized f (f need not be monic)
Poly poly_rem(Poly a, const Poly& f, uint32_t p) {
    trim(a);
    if (f.empty()) fail(errc::internal_error, "remainder by zero polynomial");
    uint64_t lead_inv = inv_mod_p(f.back(), p);
    while (a.size() >= f.size()) {
        uint64_t c = a.back() * lead_inv % p;
        if (c != 0) {
            size_t off = a.size() - f.size();
            for (size_t i = 0; i < f.size(); ++i) {
                uint64_t sub = c * f[i] % p;
                uint64_t v = (a[off + i] + p - sub) % p;
                a[off + i] = static_cast<uint32_t>(v);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < f.size()) break;
    }
    trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t inv = inv_mod_p(a.back(), p);
        for (auto& c : a) c = static_cast<uint32_t>(c * inv % p);
    }
    return a;
}

// x^(p^s) mod f by s-fold exponentiation
Poly frob_power_of_x(const Poly& f, uint32_t p, uint32_t s) {
    Poly x{0, 1};
    Poly cur = poly_rem(x, f, p);
    for (uint32_t i = 0; i < s; ++i) cur = poly_powmod(cur, p, f, p);
    return cur;
}

bool is_irreducible(const Poly& f, uint32_t p) {
    const uint32_t r = static_cast<uint32_t>(f.size()) - 1;
    if (r == 0) return false;
    if (r == 1) return true;
    // x^(p^r) == x mod f
    Poly xr = frob_power_of_x(f, p, r);
    Poly x{0, 1};
    if (poly_rem(poly_add(xr, poly_scale(x, p - 1, p), p), f, p) != Poly{}) return false;
    // gcd(x^(p^(r/l)) - x, f) = 1 for each prime l | r
    for (uint32_t l = 2; l <= r; ++l) {
        if (r % l != 0 || !is_prime_u32(l)) continue;
        Poly xs = frob_power_of_x(f, p, r / l);
        Poly diff = poly_add(xs, poly_scale(x, p - 1, p), p);
        Poly g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

FieldElement::FieldElement(FieldCtxPtr ctx, std::vector<uint32_t> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

static void require_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (!a.ctx() || !b.ctx()) fail(errc::ctx_mismatch, "uninitialized field element");
    if (a.ctx().get() == b.ctx().get()) return;
    if (!a.ctx()->same_field(*b.ctx()))
        fail(errc::ctx_mismatch, "elements of different field contexts");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_ctx(*this, o);
    const uint32_t p = ctx_->p();
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + o.coeffs_[i]) % p;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_ctx(*this, o);
    const uint32_t p = ctx_->p();
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    const uint32_t p = ctx_->p();
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (p - coeffs_[i]) % p;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_ctx(*this, o);
    const uint32_t p = ctx_->p();
    Poly prod = poly_mul(coeffs_, o.coeffs_, p);
    Poly red = poly_rem(std::move(prod), ctx_->modulus(), p);
    red.resize(ctx_->r(), 0);
    return FieldElement(ctx_, std::move(red));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    const uint32_t p = ctx_->p();
    // extended Euclid in F_p[t] against the modulus
    Poly a = coeffs_, m = ctx_->modulus();
    trim(a);
    Poly r0 = m, r1 = a;
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly q;
        {
            Poly rem = r0;
            uint64_t lead_inv = inv_mod_p(r1.back(), p);
            q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                uint64_t c = rem.back() * lead_inv % p;
                size_t off = rem.size() - r1.size();
                if (c != 0) {
                    q[off] = static_cast<uint32_t>(c);
                    for (size_t i = 0; i < r1.size(); ++i) {
                        uint64_t sub = c * r1[i] % p;
                        rem[off + i] = static_cast<uint32_t>((rem[off + i] + p - sub) % p);
                    }
                }
                rem.pop_back();
                trim(rem);
            }
            trim(q);
            r0 = std::move(rem);
        }
        std::swap(r0, r1);
        Poly s2 = poly_add(s0, poly_scale(poly_mul(q, s1, p), p - 1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) fail(errc::internal_error, "gcd with modulus not constant");
    uint64_t inv = inv_mod_p(r0[0], p);
    Poly out = poly_scale(s0, inv, p);
    out = poly_rem(std::move(out), ctx_->modulus(), p);
    out.resize(ctx_->r(), 0);
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_ctx(*this, o);
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_ctx(*this, o);
    return coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    require_same_ctx(*this, o);
    return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(),
                                        o.coeffs_.rend());
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = ctx_->one();
    FieldElement x = *this;
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const { return pow(ctx_->p()); }

FieldElement FieldElement::scaled(int64_t k) const {
    const uint32_t p = ctx_->p();
    int64_t kk = k % static_cast<int64_t>(p);
    if (kk < 0) kk += p;
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint32_t>(coeffs_[i] * static_cast<uint64_t>(kk) % p);
    return FieldElement(ctx_, std::move(out));
}

std::string FieldElement::str() const { return poly_text(coeffs_); }

FieldElement FieldCtx::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(r_, 0));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    std::vector<uint32_t> c(r_, 0);
    c[0] = static_cast<uint32_t>(m);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<uint32_t> coeffs) const {
    Poly c = std::move(coeffs);
    for (auto& x : c) x %= p_;
    c = poly_rem(std::move(c), modulus_, p_);
    c.resize(r_, 0);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::element_at(uint64_t k) const {
    if (k >= q_) fail(errc::internal_error, "element index out of range");
    std::vector<uint32_t> c(r_, 0);
    for (uint32_t i = 0; i < r_ && k; ++i) {
        c[i] = static_cast<uint32_t>(k % p_);
        k /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

uint64_t FieldCtx::index_of(const FieldElement& a) const {
    uint64_t k = 0;
    for (uint32_t i = r_; i-- > 0;) k = k * p_ + a.coeffs()[i];
    return k;
}

FieldElement FieldCtx::parse(const std::string& text) const {
    return from_coeffs(parse_poly_text(text, p_));
}

FieldElement FieldCtx::generator() const {
    uint64_t cached = generator_index_.load(std::memory_order_relaxed);
    if (cached == 0) {
        auto factors = prime_factors(q_ - 1);
        for (uint64_t k = 1; k < q_ && cached == 0; ++k) {
            FieldElement g = element_at(k);
            bool ok = true;
            for (uint64_t f : factors) {
                if (g.pow((q_ - 1) / f) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) cached = k;
        }
        if (cached == 0) fail(errc::internal_error, "no multiplicative generator found");
        generator_index_.store(cached, std::memory_order_relaxed);
    }
    return element_at(cached);
}

bool FieldCtx::same_field(const FieldCtx& o) const {
    return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
}

FieldCtxPtr ctx_create(uint32_t p, uint32_t r, const std::optional<std::vector<uint32_t>>& modulus) {
    if (!is_prime_u32(p) || p < 3) fail(errc::non_prime, "p must be an odd prime, got " + std::to_string(p));
    if (r < 1) fail(errc::internal_error, "extension degree must be >= 1");
    if (r > 20) fail(errc::budget_exceeded, "extension degree beyond desk scale");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->r_ = r;
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > (1ull << 40)) fail(errc::budget_exceeded, "field size beyond desk scale");
    }
    ctx->q_ = q;

    if (modulus) {
        Poly f = *modulus;
        for (auto& c : f) c %= p;
        trim(f);
        if (f.size() != r + 1 || f.back() != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree r");
        if (!is_irreducible(f, p)) fail(errc::reducible_modulus, "modulus is reducible over F_p");
        ctx->modulus_ = f;
    } else {
        // lexicographically smallest monic irreducible: scan coefficient
        // vectors (c_{r-1}, ..., c_0) as ascending base-p integers
        uint64_t count = 1;
        for (uint32_t i = 0; i < r; ++i) count *= p;
        Poly f(r + 1, 0);
        f[r] = 1;
        bool found = false;
        for (uint64_t k = 0; k < count; ++k) {
            // digits of k base p, least significant = constant term, so k
            // ascends the tuples (c_{r-1}, ..., c_0) lexicographically
            uint64_t kk = k;
            for (uint32_t i = 0; i < r; ++i) {
                f[i] = static_cast<uint32_t>(kk % p);
                kk /= p;
            }
            Poly g = f;
            trim(g);
            if (is_irreducible(g, p)) {
                ctx->modulus_ = g;
                found = true;
                break;
            }
        }
        if (!found) fail(errc::internal_error, "no irreducible polynomial found");
    }
    return ctx;
}

FieldCtxPtr ctx_create(uint32_t p, uint32_t r, const std::string& modulus_text) {
    return ctx_create(p, r, parse_poly_text(modulus_text, p));
}

FieldElement artin_schreier(const FieldElement& a) { return a.frobenius() - a; }

bool in_prime_subfield(const FieldElement& a) { return artin_schreier(a).is_zero(); }

FieldElement primitive_root_of_unity(const FieldCtxPtr& ctx, uint64_t m) {
    if (m == 0) fail(errc::internal_error, "order must be positive");
    uint64_t q1 = ctx->q() - 1;
    if (q1 % m != 0)
        fail(errc::order_not_dividing,
             std::to_string(m) + " does not divide p^r - 1 = " + std::to_string(q1) +
                 "; enlarge r (min_extension_degree)");
    FieldElement g = ctx->generator();
    return g.pow(q1 / m);
}

uint32_t min_extension_degree(uint32_t p, uint64_t m) {
    if (m == 0) fail(errc::internal_error, "order must be positive");
    if (m == 1) return 1;
    if (std::gcd(static_cast<uint64_t>(p), m) != 1)
        fail(errc::order_not_dividing, "no extension contains roots of unity of order divisible by p");
    uint64_t v = 1;
    for (uint32_t r = 1; r <= 64; ++r) {
        v = v * p % m;
        if (v == 1) return r;
    }
    fail(errc::budget_exceeded, "min_extension_degree beyond desk scale");
}

uint64_t multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) fail(errc::division_by_zero, "order of zero");
    uint64_t n = a.ctx()->q() - 1;
    uint64_t ord = n;
    for (uint64_t f : prime_factors(n)) {
        while (ord % f == 0 && a.pow(ord / f) == a.ctx()->one()) ord /= f;
    }
    return ord;
}

std::vector<uint32_t> parse_poly_text(const std::string& text, uint32_t p) {
    // grammar: term (('+'|'-') term)*, term = coeff | coeff '*'? var | var,
    // var = 't' ('^' exp)?
    std::vector<uint32_t> coeffs;
    auto add_term = [&](int64_t coeff, uint32_t exp) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        int64_t v = (static_cast<int64_t>(coeffs[exp]) + coeff) % static_cast<int64_t>(p);
        if (v < 0) v += p;
        coeffs[exp] = static_cast<uint32_t>(v);
    };
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) fail(errc::parse_error, "empty field element");
    bool first = true;
    while (i < n) {
        skip_ws();
        int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail(errc::parse_error, "expected '+' or '-' in '" + text + "'");
        }
        first = false;
        if (i >= n) fail(errc::parse_error, "dangling sign in '" + text + "'");
        int64_t coeff = 1;
        bool saw_digit = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                if (coeff > (1ll << 40)) fail(errc::parse_error, "coefficient too large");
                ++i;
            }
            saw_digit = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
                if (i >= n || text[i] != 't')
                    fail(errc::parse_error, "expected 't' after '*' in '" + text + "'");
            }
        }
        uint32_t exp = 0;
        if (i < n && text[i] == 't') {
            ++i;
            exp = 1;
            if (i < n && text[i] == '^') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(errc::parse_error, "bad exponent in '" + text + "'");
                uint64_t e = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 64) fail(errc::parse_error, "exponent too large");
                    ++i;
                }
                exp = static_cast<uint32_t>(e);
            }
        } else if (!saw_digit) {
            fail(errc::parse_error, "unexpected character in '" + text + "'");
        }
        add_term(sign * coeff, exp);
        skip_ws();
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::string poly_text(const std::vector<uint32_t>& coeffs) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = coeffs.size(); i-- > 0;) {
        uint32_t c = coeffs[i];
        if (c == 0) continue;
        if (any) os << "+";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

} // namespace rrca
