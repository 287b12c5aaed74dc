#include "rrca/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace rrca {

namespace {

// deterministic generator for splitting and spot checks
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }
};

} // namespace

// ---------------------------------------------------------------------------
// construction

std::shared_ptr<OracleAlgebra> OracleAlgebra::build_rank1(const FqTablePtr& F, uint32_t m,
                                                          const std::vector<FieldElement>& c) {
    if (m < 1) fail(errc::internal_error, "m must be >= 1");
    if (c.size() != m - 1) fail(errc::size_mismatch, "need m-1 parameters c_1..c_{m-1}");
    auto A = std::shared_ptr<OracleAlgebra>(new OracleAlgebra());
    A->F_ = F;
    A->rank_ = 1;
    A->p_ = F->p();
    if (m % A->p_ == 0) fail(errc::bad_characteristic, "p divides |C_m|");
    A->gcard_ = m;
    A->eta_ = F->to_index(primitive_root_of_unity(F->ctx(), m));
    A->xmax_ = {A->p_ * m, 1};
    for (const auto& cl : c) A->cpar_.push_back(F->to_index(cl));
    // [y, x] = 1 - sum c_l (1 - eta^{-l}) g^l
    std::vector<std::pair<uint32_t, Elt>> R;
    R.emplace_back(0u, F->one());
    for (uint32_t l = 1; l < m; ++l) {
        Elt etainv = F->pow(A->eta_, m - l);
        Elt w = F->mul(A->cpar_[l - 1], F->sub(F->one(), etainv));
        if (w != 0) R.emplace_back(l, F->neg(w));
    }
    A->comm_[0][0] = R;
    A->init_common();
    return A;
}

std::shared_ptr<OracleAlgebra> OracleAlgebra::build_s2(const FqTablePtr& F,
                                                       const FieldElement& kappa) {
    auto A = std::shared_ptr<OracleAlgebra>(new OracleAlgebra());
    A->F_ = F;
    A->rank_ = 2;
    A->p_ = F->p();
    A->gcard_ = 2;
    A->kappa_ = F->to_index(kappa);
    A->xmax_ = {2 * A->p_, A->p_};
    // [y_i, x_i] = 1 - kappa s, [y_i, x_j] = kappa s
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) {
            std::vector<std::pair<uint32_t, Elt>> R;
            if (i == j) R.emplace_back(0u, F->one());
            Elt k = (i == j) ? F->neg(A->kappa_) : A->kappa_;
            if (k != 0) R.emplace_back(1u, k);
            A->comm_[i][j] = R;
        }
    A->init_common();
    return A;
}

void OracleAlgebra::init_common() {
    half_ = F_->mul(F_->from_int(1), F_->inv(F_->from_int(2)));
    xcard_ = xmax_[0] * xmax_[1];
    dim_ = xcard_ * gcard_ * xcard_;
    xtop_ = xmax_[0] - 1 + (rank_ == 2 ? xmax_[1] - 1 : 0);
    if (dim_ > 200000) fail(errc::budget_exceeded, "restricted algebra beyond desk scale");
    self_check();
}

void OracleAlgebra::self_check() const {
    // x-side graded dimensions match prod_i [p d_i]_t
    LaurentPoly expect = LaurentPoly::one();
    if (rank_ == 1) {
        expect = LaurentPoly::bracket(p_ * gcard_);
    } else {
        expect = LaurentPoly::bracket(p_) * LaurentPoly::bracket(2 * p_);
    }
    std::vector<BigInt> counts(xtop_ + 1, 0);
    for (uint32_t code = 0; code < xcard_; ++code) {
        auto a = unpack_x(code);
        counts[a[0] + a[1]] += 1;
    }
    for (uint32_t d = 0; d <= xtop_; ++d)
        if (counts[d] != expect.coeff(static_cast<int32_t>(d)))
            fail(errc::internal_error, "monomial basis misses the graded certificate");

    // expected total dimension p^{2n} |W|^3
    uint64_t want = 1;
    uint64_t W = (rank_ == 1) ? gcard_ : 2;
    for (uint32_t i = 0; i < 2 * rank_; ++i) want *= p_;
    want = want * W * W * W;
    if (want != dim_) fail(errc::internal_error, "dimension formula violated");

    // associativity on deterministic pseudo-random triples
    Lcg rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t i1 = rng.below(dim_), i2 = rng.below(dim_), i3 = rng.below(dim_);
        Element a, b, cc;
        a.terms[i1] = F_->one();
        b.terms[i2] = F_->one();
        cc.terms[i3] = F_->one();
        if (!(mul(mul(a, b), cc) == mul(a, mul(b, cc))))
            fail(errc::internal_error, "associativity check failed");
    }
}

// ---------------------------------------------------------------------------
// monomial geometry

uint32_t OracleAlgebra::pack_x(const std::array<uint32_t, 2>& a) const {
    return a[0] + a[1] * xmax_[0];
}

std::array<uint32_t, 2> OracleAlgebra::unpack_x(uint32_t code) const {
    return {code % xmax_[0], code / xmax_[0]};
}

uint32_t OracleAlgebra::pack_mono(const std::array<uint32_t, 2>& xe, uint32_t w,
                                  const std::array<uint32_t, 2>& ye) const {
    return (pack_x(xe) * gcard_ + w) * xcard_ + pack_x(ye);
}

void OracleAlgebra::unpack_mono(uint32_t idx, std::array<uint32_t, 2>& xe, uint32_t& w,
                                std::array<uint32_t, 2>& ye) const {
    ye = unpack_x(idx % xcard_);
    idx /= xcard_;
    w = idx % gcard_;
    xe = unpack_x(idx / gcard_);
}

int32_t OracleAlgebra::mono_degree(uint32_t idx) const {
    std::array<uint32_t, 2> xe, ye;
    uint32_t w;
    unpack_mono(idx, xe, w, ye);
    return static_cast<int32_t>(xe[0] + xe[1]) - static_cast<int32_t>(ye[0] + ye[1]);
}

uint32_t OracleAlgebra::graded_dim(int32_t d) const {
    uint32_t count = 0;
    for (uint32_t idx = 0; idx < dim_; ++idx)
        if (mono_degree(idx) == d) ++count;
    return count;
}

bool OracleAlgebra::reduce_exponents(std::array<uint32_t, 2>& e, Elt& coeff) const {
    if (rank_ == 1) return e[0] < xmax_[0];
    // x_2^p = -x_1^p, then x_1^{2p} = 0
    while (e[1] >= p_) {
        e[1] -= p_;
        e[0] += p_;
        coeff = F_->neg(coeff);
    }
    return e[0] < 2 * p_;
}

uint32_t OracleAlgebra::gmul(uint32_t a, uint32_t b) const {
    return rank_ == 1 ? (a + b) % gcard_ : (a ^ b);
}

uint32_t OracleAlgebra::ginv(uint32_t a) const { return rank_ == 1 ? (gcard_ - a) % gcard_ : a; }

void OracleAlgebra::conj_x(uint32_t w, std::array<uint32_t, 2>& a, Elt& scalar) const {
    if (rank_ == 1) {
        // g^w x^a g^{-w} = eta^{-wa} x^a
        uint32_t e = (w * a[0]) % gcard_;
        if (e) scalar = F_->mul(scalar, F_->pow(eta_, gcard_ - e));
    } else if (w == 1) {
        std::swap(a[0], a[1]);
    }
}

void OracleAlgebra::conj_y(uint32_t w, std::array<uint32_t, 2>& a, Elt& scalar) const {
    if (rank_ == 1) {
        uint32_t e = (w * a[0]) % gcard_;
        if (e) scalar = F_->mul(scalar, F_->pow(eta_, e));
    } else if (w == 1) {
        std::swap(a[0], a[1]);
    }
}

void OracleAlgebra::add_mono(Element& out, std::array<uint32_t, 2> xe, uint32_t w,
                             std::array<uint32_t, 2> ye, Elt coeff) const {
    if (coeff == 0) return;
    if (!reduce_exponents(xe, coeff)) return;
    if (!reduce_exponents(ye, coeff)) return;
    uint32_t idx = pack_mono(xe, w, ye);
    auto [it, inserted] = out.terms.try_emplace(idx, coeff);
    if (!inserted) {
        it->second = F_->add(it->second, coeff);
        if (it->second == 0) out.terms.erase(it);
    }
}

// ---------------------------------------------------------------------------
// normal form

const OracleAlgebra::Element& OracleAlgebra::single_yx(uint32_t i,
                                                       const std::array<uint32_t, 2>& a) const {
    uint64_t key = static_cast<uint64_t>(i) * xcard_ + pack_x(a);
    auto it = single_cache_.find(key);
    if (it != single_cache_.end()) return it->second;

    Element out;
    if (a[0] == 0 && a[1] == 0) {
        std::array<uint32_t, 2> ye{0, 0};
        ye[i] = 1;
        add_mono(out, {0, 0}, 0, ye, F_->one());
    } else {
        uint32_t j = a[0] > 0 ? 0 : 1;
        std::array<uint32_t, 2> rest = a;
        rest[j] -= 1;
        // y_i x^a = x_j (y_i x^{a - e_j}) + [y_i, x_j] x^{a - e_j}
        const Element& E = single_yx(i, rest);
        for (const auto& [idx, cf] : E.terms) {
            std::array<uint32_t, 2> xe, ye;
            uint32_t w;
            unpack_mono(idx, xe, w, ye);
            xe[j] += 1;
            add_mono(out, xe, w, ye, cf);
        }
        for (const auto& [w, cf] : comm_[i][j]) {
            std::array<uint32_t, 2> xe = rest;
            Elt s = cf;
            conj_x(w, xe, s);
            add_mono(out, xe, w, {0, 0}, s);
        }
    }
    return single_cache_.emplace(key, std::move(out)).first->second;
}

const OracleAlgebra::Element& OracleAlgebra::reduce_yx(const std::array<uint32_t, 2>& c,
                                                       const std::array<uint32_t, 2>& a) const {
    uint64_t key = static_cast<uint64_t>(pack_x(c)) * xcard_ + pack_x(a);
    auto it = yx_cache_.find(key);
    if (it != yx_cache_.end()) return it->second;

    Element out;
    if (c[0] == 0 && c[1] == 0) {
        add_mono(out, a, 0, {0, 0}, F_->one());
    } else {
        uint32_t i = c[1] > 0 ? 1 : 0; // rightmost y factor
        std::array<uint32_t, 2> crest = c;
        crest[i] -= 1;
        const Element& E1 = single_yx(i, a);
        for (const auto& [idx1, k1] : E1.terms) {
            std::array<uint32_t, 2> alpha, delta;
            uint32_t u;
            unpack_mono(idx1, alpha, u, delta);
            const Element& R = reduce_yx(crest, alpha);
            for (const auto& [idx2, k2] : R.terms) {
                std::array<uint32_t, 2> beta, eps;
                uint32_t v;
                unpack_mono(idx2, beta, v, eps);
                // x^beta v y^eps u y^delta = x^beta (v u) s y^{eps' + delta}
                Elt s = F_->mul(k1, k2);
                conj_y(ginv(u), eps, s);
                std::array<uint32_t, 2> ye{eps[0] + delta[0], eps[1] + delta[1]};
                add_mono(out, beta, gmul(v, u), ye, s);
            }
        }
    }
    return yx_cache_.emplace(key, std::move(out)).first->second;
}

OracleAlgebra::Element OracleAlgebra::mono_mul(uint32_t idx1, uint32_t idx2) const {
    std::array<uint32_t, 2> xe1, ye1, xe2, ye2;
    uint32_t w1, w2;
    unpack_mono(idx1, xe1, w1, ye1);
    unpack_mono(idx2, xe2, w2, ye2);

    Element out;
    const Element& mid = reduce_yx(ye1, xe2);
    for (const auto& [idx, cf] : mid.terms) {
        std::array<uint32_t, 2> beta, eps;
        uint32_t v;
        unpack_mono(idx, beta, v, eps);
        Elt s = cf;
        conj_x(w1, beta, s);
        std::array<uint32_t, 2> xe{xe1[0] + beta[0], xe1[1] + beta[1]};
        conj_y(ginv(w2), eps, s);
        std::array<uint32_t, 2> ye{eps[0] + ye2[0], eps[1] + ye2[1]};
        add_mono(out, xe, gmul(gmul(w1, v), w2), ye, s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// element operations

OracleAlgebra::Element OracleAlgebra::x_gen(uint32_t i) const {
    if (i >= rank_) fail(errc::internal_error, "generator index out of range");
    Element e;
    std::array<uint32_t, 2> xe{0, 0};
    xe[i] = 1;
    e.terms[pack_mono(xe, 0, {0, 0})] = F_->one();
    return e;
}

OracleAlgebra::Element OracleAlgebra::y_gen(uint32_t i) const {
    if (i >= rank_) fail(errc::internal_error, "generator index out of range");
    Element e;
    std::array<uint32_t, 2> ye{0, 0};
    ye[i] = 1;
    e.terms[pack_mono({0, 0}, 0, ye)] = F_->one();
    return e;
}

OracleAlgebra::Element OracleAlgebra::group_elt(uint32_t w) const {
    Element e;
    e.terms[pack_mono({0, 0}, w % gcard_, {0, 0})] = F_->one();
    return e;
}

OracleAlgebra::Element OracleAlgebra::scalar(Elt v) const {
    Element e;
    if (v != 0) e.terms[pack_mono({0, 0}, 0, {0, 0})] = v;
    return e;
}

OracleAlgebra::Element OracleAlgebra::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [idx, c] : b.terms) {
        auto [it, inserted] = out.terms.try_emplace(idx, c);
        if (!inserted) {
            it->second = F_->add(it->second, c);
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

OracleAlgebra::Element OracleAlgebra::sub(const Element& a, const Element& b) const {
    return add(a, scale(b, F_->neg(F_->one())));
}

OracleAlgebra::Element OracleAlgebra::scale(const Element& a, Elt v) const {
    Element out;
    if (v == 0) return out;
    for (const auto& [idx, c] : a.terms) out.terms[idx] = F_->mul(c, v);
    return out;
}

OracleAlgebra::Element OracleAlgebra::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [i1, c1] : a.terms) {
        for (const auto& [i2, c2] : b.terms) {
            Element prod = mono_mul(i1, i2);
            Elt c = F_->mul(c1, c2);
            for (const auto& [idx, cf] : prod.terms) {
                Elt vc = F_->mul(cf, c);
                if (vc == 0) continue;
                auto [it, inserted] = out.terms.try_emplace(idx, vc);
                if (!inserted) {
                    it->second = F_->add(it->second, vc);
                    if (it->second == 0) out.terms.erase(it);
                }
            }
        }
    }
    return out;
}

OracleAlgebra::Element OracleAlgebra::commutator(const Element& a, const Element& b) const {
    return sub(mul(a, b), mul(b, a));
}

OracleAlgebra::Element OracleAlgebra::power(const Element& a, uint64_t e) const {
    Element r = one();
    Element x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::vector<OracleAlgebra::Elt> OracleAlgebra::to_vector(const Element& a) const {
    std::vector<Elt> v(dim_, 0);
    for (const auto& [idx, c] : a.terms) v[idx] = c;
    return v;
}

OracleAlgebra::Element OracleAlgebra::from_vector(const std::vector<Elt>& v) const {
    Element e;
    for (uint32_t i = 0; i < dim_; ++i)
        if (v[i] != 0) e.terms[i] = v[i];
    return e;
}

la::Matrix<FqTable> OracleAlgebra::left_mult_matrix(const Element& a) const {
    la::Matrix<FqTable> M(dim_, dim_, 0);
    for (uint32_t b = 0; b < dim_; ++b) {
        for (const auto& [i1, c1] : a.terms) {
            Element prod = mono_mul(i1, b);
            for (const auto& [idx, cf] : prod.terms) {
                M.at(idx, b) = F_->add(M.at(idx, b), F_->mul(c1, cf));
            }
        }
    }
    return M;
}

// ---------------------------------------------------------------------------
// Dunkl-Opdam elements

OracleAlgebra::Element OracleAlgebra::dunkl_opdam(uint32_t i) const {
    // z_i = y_i x_i - 1/2 + kappa sum_{j<i} s_{ij} - sum_l c_l eta^{-l} g^l
    Element z = mul(y_gen(i), x_gen(i));
    z = sub(z, scalar(half_));
    if (rank_ == 2 && i == 1) z = add(z, scale(group_elt(1), kappa_));
    if (rank_ == 1) {
        for (uint32_t l = 1; l < gcard_; ++l) {
            Elt c = F_->mul(cpar_[l - 1], F_->pow(eta_, gcard_ - l));
            z = sub(z, scale(group_elt(l), c));
        }
    }
    return z;
}

OracleAlgebra::Element OracleAlgebra::dunkl_opdam_alt(uint32_t i) const {
    // z_i = x_i y_i + 1/2 - kappa sum_{j>i} s_{ij} - sum_l c_l g^l
    Element z = mul(x_gen(i), y_gen(i));
    z = add(z, scalar(half_));
    if (rank_ == 2 && i == 0) z = sub(z, scale(group_elt(1), kappa_));
    if (rank_ == 1)
        for (uint32_t l = 1; l < gcard_; ++l) z = sub(z, scale(group_elt(l), cpar_[l - 1]));
    return z;
}

OracleAlgebra::Element OracleAlgebra::euler_element() const {
    Element h;
    for (uint32_t i = 0; i < rank_; ++i) h = add(h, mul(x_gen(i), y_gen(i)));
    if (rank_ == 2) {
        h = sub(h, scale(group_elt(1), kappa_));
    } else {
        for (uint32_t l = 1; l < gcard_; ++l) h = sub(h, scale(group_elt(l), cpar_[l - 1]));
    }
    return h;
}

OracleAlgebra::Element OracleAlgebra::power_sum_central(uint32_t r) const {
    Element out;
    for (uint32_t i = 0; i < rank_; ++i) {
        Element z = dunkl_opdam(i);
        Element zp = sub(power(z, p_), z);
        out = add(out, power(zp, r));
    }
    return out;
}

bool OracleAlgebra::commutes_with_generators(const Element& z) const {
    std::vector<Element> gens;
    for (uint32_t i = 0; i < rank_; ++i) {
        gens.push_back(x_gen(i));
        gens.push_back(y_gen(i));
    }
    gens.push_back(group_elt(1));
    for (const auto& g : gens)
        if (!commutator(z, g).is_zero()) return false;
    return true;
}

DOReport OracleAlgebra::verify_identities(bool must_hold) const {
    DOReport rep;
    auto ensure = [&](bool ok, const std::string& what) {
        if (!ok && must_hold) fail(errc::identity_violated, what);
        return ok;
    };

    std::vector<Element> z, zalt;
    for (uint32_t i = 0; i < rank_; ++i) {
        z.push_back(dunkl_opdam(i));
        zalt.push_back(dunkl_opdam_alt(i));
    }

    rep.do_forms_agree = true;
    for (uint32_t i = 0; i < rank_; ++i) rep.do_forms_agree &= (z[i] == zalt[i]);
    ensure(rep.do_forms_agree, "the two Dunkl-Opdam normal forms disagree");

    rep.z_commute = rank_ == 1 || commutator(z[0], z[1]).is_zero();
    ensure(rep.z_commute, "[z_1, z_2] != 0");

    // [E_r, x_1] = sum over r-1 subsets of {2..n} of x_1 z_{j_2} ... z_{j_r}
    rep.elementary_comm = true;
    {
        Element E1;
        for (uint32_t i = 0; i < rank_; ++i) E1 = add(E1, z[i]);
        rep.elementary_comm &= (commutator(E1, x_gen(0)) == x_gen(0));
        if (rank_ == 2) {
            Element E2 = mul(z[0], z[1]);
            rep.elementary_comm &= (commutator(E2, x_gen(0)) == mul(x_gen(0), z[1]));
        }
    }
    ensure(rep.elementary_comm, "[E_r, x_1] identity failed");

    // [P_r, x_1] = x_1 ((z_1 + 1)^r - z_1^r)
    rep.power_comm = true;
    for (uint32_t r = 1; r <= 2; ++r) {
        Element Pr;
        for (uint32_t i = 0; i < rank_; ++i) Pr = add(Pr, power(z[i], r));
        Element q = sub(power(add(z[0], one()), r), power(z[0], r));
        rep.power_comm &= (commutator(Pr, x_gen(0)) == mul(x_gen(0), q));
    }
    ensure(rep.power_comm, "[P_r, x_1] identity failed");

    rep.power_sums_central = true;
    for (uint32_t r = 1; r <= 2; ++r)
        rep.power_sums_central &= commutes_with_generators(power_sum_central(r));
    ensure(rep.power_sums_central, "power sums of z_i^p - z_i are not central");

    Element h = euler_element();
    rep.euler_relations = true;
    for (uint32_t i = 0; i < rank_; ++i) {
        rep.euler_relations &= (commutator(h, x_gen(i)) == x_gen(i));
        rep.euler_relations &= (commutator(h, y_gen(i)) == scale(y_gen(i), F_->neg(F_->one())));
    }
    rep.euler_relations &= commutator(h, group_elt(1)).is_zero();
    ensure(rep.euler_relations, "Euler element grading relations failed");

    rep.euler_power_central = commutes_with_generators(sub(power(h, p_), h));
    ensure(rep.euler_power_central, "h^p - h is not central");

    return rep;
}

// ---------------------------------------------------------------------------
// labels and Verma modules

uint32_t OracleAlgebra::label_count() const { return rank_ == 1 ? gcard_ : 2; }

Multipartition OracleAlgebra::label_multipartition(uint32_t label) const {
    if (rank_ == 1) {
        std::vector<Partition> comps(gcard_);
        comps[label] = Partition({1});
        return Multipartition(std::move(comps));
    }
    return label == 0 ? Multipartition({Partition({2})}) : Multipartition({Partition({1, 1})});
}

std::shared_ptr<const VermaModule> OracleAlgebra::verma(uint32_t label) const {
    return std::make_shared<VermaModule>(shared_from_this(), label);
}

VermaModule::VermaModule(std::shared_ptr<const OracleAlgebra> alg, uint32_t label)
    : alg_(std::move(alg)), label_(label) {
    if (label_ >= alg_->label_count()) fail(errc::internal_error, "no such label");
    dim_ = alg_->xcard_;
    build_actions();
}

int32_t VermaModule::degree_of(uint32_t basis_idx) const {
    auto a = alg_->unpack_x(basis_idx);
    return static_cast<int32_t>(a[0] + a[1]);
}

void VermaModule::build_actions() {
    const auto& F = *alg_->F_;
    // character of the group on the lowest weight
    auto chi = [&](uint32_t w) -> FqTable::Elt {
        if (alg_->rank_ == 1) return F.pow(alg_->eta_, (static_cast<uint64_t>(label_) * w) % alg_->gcard_);
        return (w == 1 && label_ == 1) ? F.neg(F.one()) : F.one();
    };

    std::vector<OracleAlgebra::Element> gens;
    for (uint32_t i = 0; i < alg_->rank_; ++i) gens.push_back(alg_->x_gen(i));
    for (uint32_t i = 0; i < alg_->rank_; ++i) gens.push_back(alg_->y_gen(i));
    gens.push_back(alg_->group_elt(1));

    for (const auto& g : gens) {
        la::Matrix<FqTable> M(dim_, dim_, 0);
        for (uint32_t b = 0; b < dim_; ++b) {
            OracleAlgebra::Element mono;
            mono.terms[alg_->pack_mono(alg_->unpack_x(b), 0, {0, 0})] = F.one();
            auto prod = alg_->mul(g, mono);
            for (const auto& [idx, c] : prod.terms) {
                std::array<uint32_t, 2> xe, ye;
                uint32_t w;
                alg_->unpack_mono(idx, xe, w, ye);
                if (ye[0] || ye[1]) continue; // V acts by zero on the lowest weight
                uint32_t row = alg_->pack_x(xe);
                M.at(row, b) = F.add(M.at(row, b), F.mul(c, chi(w)));
            }
        }
        gen_actions_.push_back(std::move(M));
    }
    mono_actions_.assign(alg_->dim_, std::nullopt);

    // the defining commutators must hold on the module
    const uint32_t r = alg_->rank_;
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < r; ++j) {
            auto lhs = la::mat_mul(F, gen_actions_[r + i], gen_actions_[j]);
            auto rhs = la::mat_mul(F, gen_actions_[j], gen_actions_[r + i]);
            for (size_t a = 0; a < lhs.data.size(); ++a)
                lhs.data[a] = F.sub(lhs.data[a], rhs.data[a]);
            OracleAlgebra::Element R;
            for (const auto& [w, c] : alg_->comm_[i][j])
                R = alg_->add(R, alg_->scale(alg_->group_elt(w), c));
            auto expect = action(R);
            if (!(lhs.data == expect.data))
                fail(errc::internal_error, "module violates a defining relation");
        }
}

const la::Matrix<FqTable>& VermaModule::mono_action(uint32_t mono_idx) const {
    if (mono_actions_[mono_idx]) return *mono_actions_[mono_idx];
    const auto& F = *alg_->F_;
    std::array<uint32_t, 2> xe, ye;
    uint32_t w;
    alg_->unpack_mono(mono_idx, xe, w, ye);
    la::Matrix<FqTable> M;
    const uint32_t r = alg_->rank_;
    if (ye[0] || ye[1]) {
        uint32_t i = ye[1] > 0 ? 1 : 0;
        std::array<uint32_t, 2> yrest = ye;
        yrest[i] -= 1;
        M = la::mat_mul(F, mono_action(alg_->pack_mono(xe, w, yrest)), gen_actions_[r + i]);
    } else if (w != 0) {
        uint32_t wprev = alg_->rank_ == 1 ? w - 1 : 0;
        M = la::mat_mul(F, mono_action(alg_->pack_mono(xe, wprev, {0, 0})),
                        gen_actions_[2 * r]);
    } else if (xe[0] || xe[1]) {
        uint32_t j = xe[0] > 0 ? 0 : 1;
        std::array<uint32_t, 2> xrest = xe;
        xrest[j] -= 1;
        M = la::mat_mul(F, gen_actions_[j], mono_action(alg_->pack_mono(xrest, 0, {0, 0})));
    } else {
        M = la::identity(F, dim_);
    }
    mono_actions_[mono_idx] = std::move(M);
    return *mono_actions_[mono_idx];
}

la::Matrix<FqTable> VermaModule::action(const OracleAlgebra::Element& a) const {
    const auto& F = *alg_->F_;
    la::Matrix<FqTable> M(dim_, dim_, 0);
    for (const auto& [idx, c] : a.terms) {
        const auto& Mm = mono_action(idx);
        for (size_t k = 0; k < M.data.size(); ++k)
            M.data[k] = F.add(M.data[k], F.mul(c, Mm.data[k]));
    }
    return M;
}

namespace {

// rows of a reduced row-echelon basis for a list of vectors
template <class K>
struct Subspace {
    const K& k;
    size_t n;
    std::vector<std::vector<typename K::value_type>> rows; // rref
    std::vector<size_t> leads;

    Subspace(const K& k_, size_t n_) : k(k_), n(n_) {}

    // reduces v against the rows in place; returns true if v was absorbed
    bool reduce(std::vector<typename K::value_type>& v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (k.is_zero(v[leads[i]])) continue;
            auto f = v[leads[i]];
            for (size_t j = 0; j < n; ++j) v[j] = k.sub(v[j], k.mul(f, rows[i][j]));
        }
        for (const auto& x : v)
            if (!k.is_zero(x)) return false;
        return true;
    }

    bool insert(std::vector<typename K::value_type> v) {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (k.is_zero(v[leads[i]])) continue;
            auto f = v[leads[i]];
            for (size_t j = 0; j < n; ++j) v[j] = k.sub(v[j], k.mul(f, rows[i][j]));
        }
        size_t lead = 0;
        while (lead < n && k.is_zero(v[lead])) ++lead;
        if (lead == n) return false;
        auto inv = k.inv(v[lead]);
        for (auto& x : v) x = k.mul(x, inv);
        // back-substitute into existing rows
        for (size_t i = 0; i < rows.size(); ++i) {
            if (k.is_zero(rows[i][lead])) continue;
            auto f = rows[i][lead];
            for (size_t j = 0; j < n; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, v[j]));
        }
        rows.push_back(std::move(v));
        leads.push_back(lead);
        return true;
    }

    size_t dim() const { return rows.size(); }
};

} // namespace

std::vector<std::vector<FqTable::Elt>> VermaModule::radical_basis() const {
    const auto& F = *alg_->F_;
    // start from the positive-degree part and shrink to the largest submodule
    std::vector<std::vector<FqTable::Elt>> basis;
    for (uint32_t b = 0; b < dim_; ++b) {
        if (degree_of(b) == 0) continue;
        std::vector<FqTable::Elt> v(dim_, 0);
        v[b] = F.one();
        basis.push_back(std::move(v));
    }
    while (!basis.empty()) {
        Subspace<FqTable> span(F, dim_);
        for (const auto& v : basis) span.insert(v);
        // residuals of generator images, stacked per generator
        size_t k = basis.size();
        la::Matrix<FqTable> R(gen_actions_.size() * dim_, k, 0);
        bool closed = true;
        for (size_t gi = 0; gi < gen_actions_.size(); ++gi) {
            for (size_t c = 0; c < k; ++c) {
                auto img = la::mat_vec(F, gen_actions_[gi], basis[c]);
                // residual after reduction by the span
                for (size_t i = 0; i < span.rows.size(); ++i) {
                    if (F.is_zero(img[span.leads[i]])) continue;
                    auto f = img[span.leads[i]];
                    for (size_t j = 0; j < dim_; ++j)
                        img[j] = F.sub(img[j], F.mul(f, span.rows[i][j]));
                }
                for (size_t j = 0; j < dim_; ++j) {
                    if (!F.is_zero(img[j])) closed = false;
                    R.at(gi * dim_ + j, c) = img[j];
                }
            }
        }
        if (closed) break;
        auto ker = la::kernel_basis(F, R);
        std::vector<std::vector<FqTable::Elt>> next;
        for (const auto& combo : ker) {
            std::vector<FqTable::Elt> v(dim_, 0);
            for (size_t c = 0; c < k; ++c) {
                if (F.is_zero(combo[c])) continue;
                for (size_t j = 0; j < dim_; ++j)
                    v[j] = F.add(v[j], F.mul(combo[c], basis[c][j]));
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    // normalize to an rref basis
    Subspace<FqTable> out(F, dim_);
    for (const auto& v : basis) out.insert(v);
    return out.rows;
}

// ---------------------------------------------------------------------------
// central characters

OracleAlgebra::Elt OracleAlgebra::central_character(const VermaModule& mod,
                                                    const Element& z) const {
    if (!commutes_with_generators(z)) fail(errc::not_central, "element is not central");
    auto M = mod.action(z);
    auto cp = la::char_poly(*F_, M);
    const uint32_t n = mod.dim();
    // char poly must be (x - zeta)^n; peel the p-part of n to read off zeta
    uint32_t e = 0, kprime = n;
    while (kprime % p_ == 0) {
        kprime /= p_;
        ++e;
    }
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) pe *= p_;
    // coefficient of x^{p^e (k'-1)} in (x^{p^e} - zeta^{p^e})^{k'} is -k' zeta^{p^e}
    Elt c = cp[pe * (kprime - 1)];
    Elt zeta_pe = F_->mul(F_->neg(c), F_->inv(F_->from_int(kprime)));
    // invert Frobenius e times
    uint32_t r = F_->ctx()->r();
    Elt zeta = zeta_pe;
    uint32_t back = (r - (e % r)) % r;
    for (uint32_t i = 0; i < back; ++i) zeta = F_->frob(zeta);
    // verify cp == (x - zeta)^n
    std::vector<Elt> acc{F_->one()};
    std::vector<Elt> base{F_->neg(zeta), F_->one()};
    uint64_t ee = n;
    auto polymul = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) {
        std::vector<Elt> out(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                out[i + j] = F_->add(out[i + j], F_->mul(a[i], b[j]));
        }
        return out;
    };
    while (ee) {
        if (ee & 1) acc = polymul(acc, base);
        base = polymul(base, base);
        ee >>= 1;
    }
    if (acc != cp)
        fail(errc::not_single_eigenvalue,
             "central element acts with more than one eigenvalue on the Verma module");
    return zeta;
}

// ---------------------------------------------------------------------------
// centre and blocks

std::vector<OracleAlgebra::Element> OracleAlgebra::centre_basis() const {
    // central elements are concentrated in degrees divisible by p, since
    // [h, -] acts on a homogeneous element by its degree
    std::vector<uint32_t> cand;
    for (uint32_t idx = 0; idx < dim_; ++idx) {
        int32_t d = mono_degree(idx);
        if (((d % static_cast<int32_t>(p_)) + static_cast<int32_t>(p_)) % static_cast<int32_t>(p_) == 0)
            cand.push_back(idx);
    }
    std::vector<Element> gens;
    for (uint32_t i = 0; i < rank_; ++i) {
        gens.push_back(x_gen(i));
        gens.push_back(y_gen(i));
    }
    gens.push_back(group_elt(1));

    la::Matrix<FqTable> A(gens.size() * dim_, cand.size(), 0);
    for (size_t cj = 0; cj < cand.size(); ++cj) {
        Element mono;
        mono.terms[cand[cj]] = F_->one();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Element cm = commutator(gens[gi], mono);
            for (const auto& [idx, c] : cm.terms) A.at(gi * dim_ + idx, cj) = c;
        }
    }
    auto ker = la::kernel_basis(*F_, A);
    std::vector<Element> out;
    for (const auto& combo : ker) {
        Element z;
        for (size_t cj = 0; cj < cand.size(); ++cj)
            if (combo[cj] != 0) z.terms[cand[cj]] = combo[cj];
        if (!commutes_with_generators(z)) fail(errc::internal_error, "centre kernel is wrong");
        out.push_back(std::move(z));
    }
    return out;
}

namespace {

using Elt = FqTable::Elt;
using EltVec = std::vector<Elt>;

// dense polynomial helpers over the table field, index = degree
EltVec poly_trim(EltVec f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

EltVec poly_mul_fq(const FqTable& F, const EltVec& a, const EltVec& b) {
    if (a.empty() || b.empty()) return {};
    EltVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

EltVec poly_rem_fq(const FqTable& F, EltVec a, const EltVec& f) {
    a = poly_trim(std::move(a));
    while (a.size() >= f.size()) {
        Elt c = F.mul(a.back(), F.inv(f.back()));
        size_t off = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i)
            a[off + i] = F.sub(a[off + i], F.mul(c, f[i]));
        a = poly_trim(std::move(a));
    }
    return a;
}

EltVec poly_gcd_fq(const FqTable& F, EltVec a, EltVec b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        EltVec r = poly_rem_fq(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Elt inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

EltVec poly_powmod_fq(const FqTable& F, EltVec base, uint64_t e, const EltVec& f) {
    EltVec r{F.one()};
    base = poly_rem_fq(F, std::move(base), f);
    while (e) {
        if (e & 1) r = poly_rem_fq(F, poly_mul_fq(F, r, base), f);
        base = poly_rem_fq(F, poly_mul_fq(F, base, base), f);
        e >>= 1;
    }
    return r;
}

EltVec poly_deriv_fq(const FqTable& F, const EltVec& f) {
    EltVec out;
    for (size_t i = 1; i < f.size(); ++i)
        out.push_back(F.mul(f[i], F.from_int(static_cast<int64_t>(i))));
    return poly_trim(std::move(out));
}

// distinct-degree then Cantor-Zassenhaus equal-degree factorization of a
// squarefree monic polynomial
void factor_squarefree(const FqTable& F, EltVec f, std::vector<EltVec>& out, Lcg& rng) {
    f = poly_trim(std::move(f));
    if (f.size() <= 1) fail(errc::internal_error, "factoring a constant");
    {
        Elt inv = F.inv(f.back());
        for (auto& c : f) c = F.mul(c, inv);
    }
    uint64_t q = F.q();
    EltVec x{0, F.one()};
    uint32_t d = 0;
    EltVec rest = f;
    std::vector<std::pair<EltVec, uint32_t>> same_degree; // (product, degree)
    EltVec xq = x;
    while (rest.size() > 1) {
        ++d;
        if (2 * d + 1 > rest.size()) {
            same_degree.emplace_back(rest, static_cast<uint32_t>(rest.size() - 1));
            break;
        }
        xq = poly_powmod_fq(F, xq, q, rest);
        EltVec diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = F.sub(diff[1], F.one());
        EltVec g = poly_gcd_fq(F, diff, rest);
        if (g.size() > 1) {
            same_degree.emplace_back(g, d);
            // rest /= g by repeated remainder-free division
            EltVec quot;
            {
                EltVec num = rest;
                quot.assign(num.size() - g.size() + 1, 0);
                for (size_t e = num.size() - g.size() + 1; e-- > 0;) {
                    Elt c = F.mul(num[e + g.size() - 1], F.inv(g.back()));
                    quot[e] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        num[e + i] = F.sub(num[e + i], F.mul(c, g[i]));
                }
            }
            rest = poly_trim(std::move(quot));
            xq = poly_rem_fq(F, xq, rest);
        }
    }
    // split each same-degree part with Cantor-Zassenhaus
    std::vector<std::pair<EltVec, uint32_t>> work = std::move(same_degree);
    while (!work.empty()) {
        auto [g, deg] = work.back();
        work.pop_back();
        if (g.size() - 1 == deg) {
            out.push_back(g);
            continue;
        }
        // random element, power (q^deg - 1)/2
        uint64_t qd = 1;
        for (uint32_t i = 0; i < deg; ++i) qd *= q;
        for (int attempt = 0; attempt < 100; ++attempt) {
            EltVec r(g.size() - 1);
            for (auto& c : r) c = static_cast<Elt>(rng.below(static_cast<uint32_t>(q)));
            EltVec h = poly_powmod_fq(F, r, (qd - 1) / 2, g);
            if (h.empty()) continue;
            h[0] = F.sub(h[0], F.one());
            EltVec gg = poly_gcd_fq(F, h, g);
            if (gg.size() > 1 && gg.size() < g.size()) {
                work.emplace_back(gg, deg);
                // g / gg
                EltVec num = g, quot(g.size() - gg.size() + 1, 0);
                for (size_t e = g.size() - gg.size() + 1; e-- > 0;) {
                    Elt c = F.mul(num[e + gg.size() - 1], F.inv(gg.back()));
                    quot[e] = c;
                    for (size_t i = 0; i < gg.size(); ++i)
                        num[e + i] = F.sub(num[e + i], F.mul(c, gg[i]));
                }
                work.emplace_back(poly_trim(std::move(quot)), deg);
                goto split_found;
            }
        }
        fail(errc::split_failure, "equal-degree factorization did not split");
    split_found:;
    }
}

} // namespace

OracleBlocks OracleAlgebra::block_decomposition(uint64_t seed) const {
    const FqTable& F = *F_;
    auto Z = centre_basis();
    const size_t k = Z.size();
    if (k == 0) fail(errc::internal_error, "centre is zero");

    OracleBlocks out;
    out.centre_dim = k;

    // express central vectors in the Z basis
    std::vector<EltVec> zvec;
    for (const auto& z : Z) zvec.push_back(to_vector(z));
    Subspace<FqTable> zspan(F, dim_);
    std::vector<EltVec> ztrans; // row i of zspan expressed in Z coordinates
    for (size_t i = 0; i < k; ++i) {
        EltVec v = zvec[i];
        EltVec combo(k, 0);
        combo[i] = F.one();
        // reduce against existing rows, tracking the combination
        for (size_t r0 = 0; r0 < zspan.rows.size(); ++r0) {
            if (F.is_zero(v[zspan.leads[r0]])) continue;
            Elt f = v[zspan.leads[r0]];
            for (size_t j = 0; j < dim_; ++j) v[j] = F.sub(v[j], F.mul(f, zspan.rows[r0][j]));
            for (size_t j = 0; j < k; ++j) combo[j] = F.sub(combo[j], F.mul(f, ztrans[r0][j]));
        }
        size_t lead = 0;
        while (lead < dim_ && F.is_zero(v[lead])) ++lead;
        if (lead == dim_) fail(errc::internal_error, "centre basis is dependent");
        Elt inv = F.inv(v[lead]);
        for (auto& x : v) x = F.mul(x, inv);
        for (auto& x : combo) x = F.mul(x, inv);
        for (size_t r0 = 0; r0 < zspan.rows.size(); ++r0) {
            if (F.is_zero(zspan.rows[r0][lead])) continue;
            Elt f = zspan.rows[r0][lead];
            for (size_t j = 0; j < dim_; ++j)
                zspan.rows[r0][j] = F.sub(zspan.rows[r0][j], F.mul(f, v[j]));
            for (size_t j = 0; j < k; ++j)
                ztrans[r0][j] = F.sub(ztrans[r0][j], F.mul(f, combo[j]));
        }
        zspan.rows.push_back(std::move(v));
        zspan.leads.push_back(lead);
        ztrans.push_back(std::move(combo));
    }
    auto express = [&](const EltVec& v) -> EltVec {
        EltVec w = v, coords(k, 0);
        for (size_t i = 0; i < zspan.rows.size(); ++i) {
            if (F.is_zero(w[zspan.leads[i]])) continue;
            Elt f = w[zspan.leads[i]];
            for (size_t j = 0; j < dim_; ++j) w[j] = F.sub(w[j], F.mul(f, zspan.rows[i][j]));
            for (size_t j = 0; j < k; ++j) coords[j] = F.add(coords[j], F.mul(f, ztrans[i][j]));
        }
        for (const auto& x : w)
            if (!F.is_zero(x)) fail(errc::internal_error, "vector is not central");
        return coords;
    };

    // multiplication table of the centre via left-multiplication matrices
    std::vector<la::Matrix<FqTable>> Lmat;
    for (size_t i = 0; i < k; ++i) Lmat.push_back(left_mult_matrix(Z[i]));
    std::vector<std::vector<EltVec>> T(k, std::vector<EltVec>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) T[i][j] = express(la::mat_vec(F, Lmat[i], zvec[j]));

    auto zmul = [&](const EltVec& a, const EltVec& b) -> EltVec {
        EltVec out_(k, 0);
        for (size_t i = 0; i < k; ++i) {
            if (F.is_zero(a[i])) continue;
            for (size_t j = 0; j < k; ++j) {
                if (F.is_zero(b[j])) continue;
                Elt c = F.mul(a[i], b[j]);
                for (size_t l = 0; l < k; ++l)
                    out_[l] = F.add(out_[l], F.mul(c, T[i][j][l]));
            }
        }
        return out_;
    };

    // z_i^p in Z coordinates
    la::Matrix<FqTable> P1(k, k, 0);
    for (size_t i = 0; i < k; ++i) {
        EltVec w = zvec[i];
        for (uint32_t e = 1; e < p_; ++e) w = la::mat_vec(F, Lmat[i], w);
        EltVec coords = express(w);
        for (size_t j = 0; j < k; ++j) P1.at(j, i) = coords[j];
    }

    // nilradical as the kernel of enough iterates of the p-power map
    uint32_t E = 0;
    {
        uint64_t pe = 1;
        while (pe < k) {
            pe *= p_;
            ++E;
        }
        if (E == 0) E = 1;
    }
    const uint32_t r_ext = F.ctx()->r();
    auto frob_vec = [&](EltVec v, uint32_t times) {
        for (auto& c : v)
            for (uint32_t t = 0; t < times; ++t) c = F.frob(c);
        return v;
    };
    // M_e = P1 frob(P1) ... frob^{e-1}(P1); kernel of phi^e = frob^{-e}(ker M_e)
    la::Matrix<FqTable> Me = P1;
    for (uint32_t e = 1; e < E; ++e) {
        la::Matrix<FqTable> Pf(k, k, 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Elt c = P1.at(i, j);
                for (uint32_t t = 0; t < e; ++t) c = F.frob(c);
                Pf.at(i, j) = c;
            }
        Me = la::mat_mul(F, Me, Pf);
    }
    auto nilker = la::kernel_basis(F, Me);
    uint32_t backsteps = (r_ext - (E % r_ext)) % r_ext;
    Subspace<FqTable> nil(F, k);
    for (auto& b : nilker) nil.insert(frob_vec(b, backsteps * 1));
    out.nilradical_dim = nil.dim();

    auto reduce_mod_nil = [&](EltVec v) {
        for (size_t i = 0; i < nil.rows.size(); ++i) {
            if (F.is_zero(v[nil.leads[i]])) continue;
            Elt f = v[nil.leads[i]];
            for (size_t j = 0; j < k; ++j) v[j] = F.sub(v[j], F.mul(f, nil.rows[i][j]));
        }
        return v;
    };
    auto amul = [&](const EltVec& a, const EltVec& b) { return reduce_mod_nil(zmul(a, b)); };

    // quotient algebra basis: canonical representatives of Z coordinate
    // vectors modulo the nilradical
    Subspace<FqTable> aspan(F, k);
    std::vector<EltVec> abasis;
    for (size_t i = 0; i < k; ++i) {
        EltVec v(k, 0);
        v[i] = F.one();
        v = reduce_mod_nil(std::move(v));
        if (aspan.insert(v)) abasis.push_back(v);
    }
    if (abasis.size() + nil.dim() != k) fail(errc::internal_error, "quotient dimension mismatch");
    EltVec unitA = reduce_mod_nil(express(to_vector(one())));

    // split the semisimple quotient into fields
    struct Factor {
        std::vector<EltVec> basis; // in Z coordinates, reduced mod nil
        EltVec unit;
    };
    std::vector<Factor> fields;
    std::vector<Factor> work{{abasis, unitA}};
    Lcg rng(seed);
    int safety = 0;
    while (!work.empty()) {
        if (++safety > 1000) fail(errc::split_failure, "splitting did not terminate");
        Factor f = std::move(work.back());
        work.pop_back();
        if (f.basis.size() == 1) {
            fields.push_back(std::move(f));
            continue;
        }
        bool done = false;
        for (int attempt = 0; attempt < 60 && !done; ++attempt) {
            EltVec u(k, 0);
            for (const auto& b : f.basis) {
                Elt c = static_cast<Elt>(rng.below(F.q()));
                for (size_t j = 0; j < k; ++j) u[j] = F.add(u[j], F.mul(c, b[j]));
            }
            // minimal polynomial of u on the unital algebra (f, unit)
            Subspace<FqTable> span(F, k);
            std::vector<EltVec> iterates;
            std::vector<EltVec> combos;
            EltVec cur = f.unit;
            EltVec mu; // monic coefficients once found
            while (true) {
                EltVec v = cur;
                EltVec combo(iterates.size() + 1, 0);
                combo.back() = F.one();
                for (size_t i = 0; i < span.rows.size(); ++i) {
                    if (F.is_zero(v[span.leads[i]])) continue;
                    Elt ff = v[span.leads[i]];
                    for (size_t j = 0; j < k; ++j) v[j] = F.sub(v[j], F.mul(ff, span.rows[i][j]));
                    for (size_t j = 0; j < combos[i].size(); ++j)
                        combo[j] = F.sub(combo[j], F.mul(ff, combos[i][j]));
                }
                bool zero = true;
                for (const auto& x : v)
                    if (!F.is_zero(x)) {
                        zero = false;
                        break;
                    }
                if (zero) {
                    Elt inv = F.inv(combo.back());
                    for (auto& c : combo) c = F.mul(c, inv);
                    mu = combo;
                    break;
                }
                size_t lead = 0;
                while (F.is_zero(v[lead])) ++lead;
                Elt inv = F.inv(v[lead]);
                for (auto& x : v) x = F.mul(x, inv);
                for (auto& x : combo) x = F.mul(x, inv);
                // forward-reduced rows with distinct leads; no back
                // substitution so the stored combinations stay valid
                span.rows.push_back(v);
                span.leads.push_back(lead);
                combos.push_back(combo);
                iterates.push_back(cur);
                cur = amul(u, cur);
                if (iterates.size() > f.basis.size() + 1)
                    fail(errc::internal_error, "minimal polynomial exceeded dimension");
            }

            // mu must be squarefree on a semisimple algebra
            EltVec dmu = poly_deriv_fq(F, mu);
            if (dmu.empty() || poly_gcd_fq(F, mu, dmu).size() != 1) continue;

            if (mu.size() - 1 == f.basis.size()) {
                // u generates: irreducible mu means a field
                std::vector<EltVec> factors;
                factor_squarefree(F, mu, factors, rng);
                if (factors.size() == 1) {
                    fields.push_back(std::move(f));
                    done = true;
                    break;
                }
                // otherwise fall through to CRT splitting below with these factors
                std::vector<EltVec> idems;
                for (const auto& fac : factors) {
                    // h = mu / fac, e = h * (h^{-1} mod fac) evaluated at u
                    EltVec h(mu.size() - fac.size() + 1, 0);
                    {
                        EltVec num = mu;
                        for (size_t e2 = mu.size() - fac.size() + 1; e2-- > 0;) {
                            Elt c = F.mul(num[e2 + fac.size() - 1], F.inv(fac.back()));
                            h[e2] = c;
                            for (size_t i2 = 0; i2 < fac.size(); ++i2)
                                num[e2 + i2] = F.sub(num[e2 + i2], F.mul(c, fac[i2]));
                        }
                    }
                    // invert h mod fac by brute Euclid: compute h^{q^d-2}? use gcd-based inverse
                    // extended Euclid over F_q[x]
                    EltVec r0 = fac, r1 = poly_rem_fq(F, h, fac);
                    EltVec s0, s1{F.one()};
                    while (!r1.empty()) {
                        // r0 = q r1 + r2
                        EltVec quot(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
                        EltVec num = r0;
                        while (num.size() >= r1.size() && !num.empty()) {
                            Elt c = F.mul(num.back(), F.inv(r1.back()));
                            size_t off = num.size() - r1.size();
                            quot[off] = c;
                            for (size_t i2 = 0; i2 < r1.size(); ++i2)
                                num[off + i2] = F.sub(num[off + i2], F.mul(c, r1[i2]));
                            num = poly_trim(std::move(num));
                        }
                        EltVec s2 = s0;
                        EltVec qs = poly_mul_fq(F, poly_trim(std::move(quot)), s1);
                        s2.resize(std::max(s2.size(), qs.size()), 0);
                        for (size_t i2 = 0; i2 < qs.size(); ++i2) s2[i2] = F.sub(s2[i2], qs[i2]);
                        s0 = s1;
                        s1 = poly_trim(std::move(s2));
                        r0 = r1;
                        r1 = poly_trim(std::move(num));
                    }
                    // r0 is the gcd (a nonzero constant since fac is irreducible)
                    Elt ginv_ = F.inv(r0[0]);
                    EltVec hinv;
                    for (auto& c : s0) hinv.push_back(F.mul(c, ginv_));
                    EltVec g = poly_rem_fq(F, poly_mul_fq(F, h, hinv), mu);
                    // evaluate at u by Horner
                    EltVec acc(k, 0);
                    for (size_t ci = g.size(); ci-- > 0;) {
                        acc = amul(acc, u);
                        for (size_t j = 0; j < k; ++j)
                            acc[j] = F.add(acc[j], F.mul(g[ci], f.unit[j]));
                    }
                    idems.push_back(acc);
                }
                // sanity and split
                EltVec total(k, 0);
                for (const auto& e2 : idems)
                    for (size_t j = 0; j < k; ++j) total[j] = F.add(total[j], e2[j]);
                if (!(total == f.unit)) fail(errc::split_failure, "idempotents do not sum to 1");
                for (const auto& e2 : idems) {
                    if (!(amul(e2, e2) == e2)) fail(errc::split_failure, "non-idempotent split");
                    Factor nf;
                    nf.unit = e2;
                    Subspace<FqTable> sub(F, k);
                    for (const auto& b : f.basis) {
                        EltVec w = amul(e2, b);
                        if (sub.insert(w)) nf.basis.push_back(w);
                    }
                    work.push_back(std::move(nf));
                }
                done = true;
            }
            // mu of smaller degree: try another u
        }
        if (!done) fail(errc::split_failure, "no splitting element found");
    }

    // every factor must be one-dimensional over F_q (its character is F_q-valued)
    std::vector<EltVec> chars; // per factor: value on each z basis element
    for (const auto& f : fields) {
        if (f.basis.size() != 1)
            fail(errc::internal_error, "field factor of degree > 1 in the centre");
        EltVec chi(k, 0);
        size_t lead = 0;
        while (F.is_zero(f.unit[lead])) ++lead;
        for (size_t b = 0; b < k; ++b) {
            EltVec zb(k, 0);
            zb[b] = F.one();
            EltVec w = amul(reduce_mod_nil(std::move(zb)), f.unit);
            Elt val = F.mul(w[lead], F.inv(f.unit[lead]));
            for (size_t j = 0; j < k; ++j)
                if (!(w[j] == F.mul(val, f.unit[j])))
                    fail(errc::internal_error, "centre factor does not act by a scalar");
            chi[b] = val;
        }
        chars.push_back(std::move(chi));
    }

    // match labels to factors through the Verma eigenvalues
    const uint32_t L = label_count();
    out.block_count = fields.size();
    out.classes.assign(fields.size(), {});
    for (uint32_t la = 0; la < L; ++la) {
        auto mod = verma(la);
        EltVec eig(k, 0);
        for (size_t b = 0; b < k; ++b) eig[b] = central_character(*mod, Z[b]);
        out.central_characters.push_back(eig);
        std::optional<size_t> match;
        for (size_t fi = 0; fi < chars.size(); ++fi) {
            if (chars[fi] == eig) {
                if (match) fail(errc::internal_error, "label matches two centre factors");
                match = fi;
            }
        }
        if (!match) fail(errc::internal_error, "label matches no centre factor");
        out.classes[*match].push_back(la);
    }
    for (const auto& cls : out.classes)
        if (cls.empty()) fail(errc::internal_error, "centre factor carries no label");
    return out;
}

// ---------------------------------------------------------------------------
// radical and simple heads

RadicalReport OracleAlgebra::simple_head_dims() const {
    const FqTable& F = *F_;
    RadicalReport rep;
    const uint32_t L = label_count();

    struct HeadData {
        std::shared_ptr<const VermaModule> mod;
        std::vector<std::vector<Elt>> rad; // rref rows
        std::vector<size_t> rad_leads;
        std::vector<size_t> rep_cols; // complement positions = coset basis
    };
    std::vector<HeadData> heads;
    for (uint32_t la = 0; la < L; ++la) {
        HeadData hd;
        hd.mod = verma(la);
        hd.rad = hd.mod->radical_basis();
        for (const auto& row : hd.rad) {
            size_t lead = 0;
            while (lead < hd.mod->dim() && F.is_zero(row[lead])) ++lead;
            hd.rad_leads.push_back(lead);
        }
        std::vector<bool> is_lead(hd.mod->dim(), false);
        for (size_t l : hd.rad_leads) is_lead[l] = true;
        for (uint32_t j = 0; j < hd.mod->dim(); ++j)
            if (!is_lead[j]) hd.rep_cols.push_back(j);
        rep.head_dims.push_back(static_cast<uint32_t>(hd.rep_cols.size()));
        heads.push_back(std::move(hd));
    }

    // project a module vector to head coordinates
    auto project = [&](const HeadData& hd, std::vector<Elt> v) {
        for (size_t i = 0; i < hd.rad.size(); ++i) {
            if (F.is_zero(v[hd.rad_leads[i]])) continue;
            Elt f = v[hd.rad_leads[i]];
            for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, hd.rad[i][j]));
        }
        std::vector<Elt> out;
        out.reserve(hd.rep_cols.size());
        for (size_t c : hd.rep_cols) out.push_back(v[c]);
        return out;
    };

    // J = joint annihilator of the simple heads
    size_t rows = 0;
    for (const auto& hd : heads) rows += hd.rep_cols.size() * hd.rep_cols.size();
    la::Matrix<FqTable> Ann(rows, dim_, 0);
    for (uint32_t mono = 0; mono < dim_; ++mono) {
        size_t row0 = 0;
        for (const auto& hd : heads) {
            const auto& M = hd.mod->mono_action(mono);
            size_t l = hd.rep_cols.size();
            for (size_t cj = 0; cj < l; ++cj) {
                std::vector<Elt> col(hd.mod->dim());
                for (size_t i = 0; i < hd.mod->dim(); ++i) col[i] = M.at(i, hd.rep_cols[cj]);
                auto pc = project(hd, std::move(col));
                for (size_t i = 0; i < l; ++i) Ann.at(row0 + i * l + cj, mono) = pc[i];
            }
            row0 += l * l;
        }
    }
    auto jbasis = la::kernel_basis(F, Ann);
    rep.radical_dim = jbasis.size();

    // endomorphism algebras of the heads
    for (const auto& hd : heads) {
        size_t l = hd.rep_cols.size();
        std::vector<la::Matrix<FqTable>> rho;
        for (const auto& G : hd.mod->gen_actions_) {
            la::Matrix<FqTable> R(l, l, 0);
            for (size_t cj = 0; cj < l; ++cj) {
                std::vector<Elt> col(hd.mod->dim());
                for (size_t i = 0; i < hd.mod->dim(); ++i) col[i] = G.at(i, hd.rep_cols[cj]);
                auto pc = project(hd, std::move(col));
                for (size_t i = 0; i < l; ++i) R.at(i, cj) = pc[i];
            }
            rho.push_back(std::move(R));
        }
        // solve X rho(G) = rho(G) X for all generators
        la::Matrix<FqTable> Sys(rho.size() * l * l, l * l, 0);
        for (size_t gi = 0; gi < rho.size(); ++gi)
            for (size_t a = 0; a < l; ++a)
                for (size_t b = 0; b < l; ++b)
                    for (size_t c = 0; c < l; ++c) {
                        // (X R - R X)[a][b] = sum_c X[a][c] R[c][b] - R[a][c] X[c][b]
                        size_t row = gi * l * l + a * l + b;
                        Sys.at(row, a * l + c) =
                            F.add(Sys.at(row, a * l + c), rho[gi].at(c, b));
                        Sys.at(row, c * l + b) =
                            F.sub(Sys.at(row, c * l + b), rho[gi].at(a, c));
                    }
        rep.endo_dims.push_back(static_cast<uint32_t>(la::kernel_basis(F, Sys).size()));
    }

    // Wedderburn count: dim A = dim J + sum (dim L)^2 / dim End(L)
    uint64_t ss = 0;
    bool counts_ok = true;
    for (size_t i = 0; i < heads.size(); ++i) {
        uint64_t d = rep.head_dims[i];
        if (rep.endo_dims[i] == 0 || (d * d) % rep.endo_dims[i] != 0) counts_ok = false;
        else ss += d * d / rep.endo_dims[i];
    }
    rep.wedderburn_ok = counts_ok && (rep.radical_dim + ss == dim_);

    // J Verma = rad Verma, and J acts nilpotently
    rep.radical_acts_as_module_rad = true;
    rep.nilpotent_on_modules = true;
    for (const auto& hd : heads) {
        std::vector<la::Matrix<FqTable>> jacts;
        for (const auto& u : jbasis) jacts.push_back(hd.mod->action(from_vector(u)));
        Subspace<FqTable> jv(F, hd.mod->dim());
        for (const auto& M : jacts)
            for (uint32_t cj = 0; cj < hd.mod->dim(); ++cj) {
                std::vector<Elt> col(hd.mod->dim());
                for (size_t i = 0; i < hd.mod->dim(); ++i) col[i] = M.at(i, cj);
                jv.insert(std::move(col));
            }
        Subspace<FqTable> radspan(F, hd.mod->dim());
        for (const auto& row : hd.rad) radspan.insert(row);
        bool same = jv.dim() == radspan.dim();
        if (same)
            for (const auto& row : jv.rows) {
                auto v = row;
                if (!radspan.reduce(v)) same = false;
            }
        rep.radical_acts_as_module_rad &= same;

        // chain J^k Verma must shrink strictly to zero
        std::vector<std::vector<Elt>> cur = jv.rows;
        size_t steps = 0;
        while (!cur.empty()) {
            if (++steps > hd.mod->dim() + 1) {
                rep.nilpotent_on_modules = false;
                break;
            }
            Subspace<FqTable> next(F, hd.mod->dim());
            for (const auto& M : jacts)
                for (const auto& v : cur) next.insert(la::mat_vec(F, M, v));
            if (next.dim() == cur.size()) {
                rep.nilpotent_on_modules = false;
                break;
            }
            cur = next.rows;
        }
    }

    if (!rep.wedderburn_ok || !rep.radical_acts_as_module_rad || !rep.nilpotent_on_modules)
        fail(errc::radical_check_failed, "radical verification gates failed");
    return rep;
}

// ---------------------------------------------------------------------------
// parameter-side helpers

std::vector<FieldElement> verma_shifts(const ParameterSet& ps) {
    FieldElement eta = ps.eta();
    std::vector<FieldElement> out;
    for (uint32_t j = 0; j < ps.m; ++j) {
        FieldElement s = ps.ctx->zero();
        for (uint32_t l = 1; l < ps.m; ++l)
            s += ps.c[l - 1] * eta.pow(static_cast<uint64_t>(j) * l % ps.m);
        out.push_back(-s);
    }
    return out;
}

bool qr_polynomial_identity(uint32_t rmax) {
    using Poly = std::vector<BigInt>;
    auto qpoly = [](uint32_t n) {
        // (z+1)^n - z^n
        Poly out(n, 0);
        BigInt binom = 1;
        for (uint32_t i = 0; i < n; ++i) {
            // binomial(n, i)
            out[i] = binom * 1;
            binom = binom * (n - i) / (i + 1);
        }
        return out; // degree n-1: coefficients of z^i are binom(n, i) for i < n
    };
    for (uint32_t r = 1; r <= rmax; ++r) {
        Poly lhs = qpoly(r + 1);
        Poly rhs(r + 1, 0);
        for (uint32_t i = 1; i <= r; ++i) {
            Poly qi = qpoly(i);
            for (size_t d = 0; d < qi.size(); ++d) rhs[d + r - i] += qi[d];
        }
        rhs[r] += BigInt(r + 1);
        lhs.resize(r + 1, 0);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace rrca
