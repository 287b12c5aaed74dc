#include "rrca/fq_table.hpp"

namespace rrca {

FqTable::FqTable(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
    if (ctx_->q() > 4096) fail(errc::budget_exceeded, "table field beyond desk scale");
    q_ = static_cast<uint32_t>(ctx_->q());
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);

    std::vector<FieldElement> elts;
    elts.reserve(q_);
    for (uint32_t i = 0; i < q_; ++i) elts.push_back(ctx_->element_at(i));
    one_ = static_cast<Elt>(ctx_->index_of(ctx_->one()));
    for (uint32_t a = 0; a < q_; ++a) {
        neg_[a] = static_cast<Elt>(ctx_->index_of(-elts[a]));
        frob_[a] = static_cast<Elt>(ctx_->index_of(elts[a].frobenius()));
        if (a != 0) inv_[a] = static_cast<Elt>(ctx_->index_of(elts[a].inverse()));
        for (uint32_t b = 0; b < q_; ++b) {
            add_[a * q_ + b] = static_cast<Elt>(ctx_->index_of(elts[a] + elts[b]));
            mul_[a * q_ + b] = static_cast<Elt>(ctx_->index_of(elts[a] * elts[b]));
        }
    }
}

FqTable::Elt FqTable::inv(Elt a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return inv_[a];
}

FqTable::Elt FqTable::from_int(int64_t v) const {
    return static_cast<Elt>(ctx_->index_of(ctx_->from_int(v)));
}

FqTable::Elt FqTable::pow(Elt a, uint64_t e) const {
    Elt r = one_, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

FqTable::Elt FqTable::to_index(const FieldElement& a) const {
    if (!a.ctx()->same_field(*ctx_)) fail(errc::ctx_mismatch, "element from another ctx");
    return static_cast<Elt>(ctx_->index_of(a));
}

FieldElement FqTable::to_element(Elt a) const { return ctx_->element_at(a); }

FqTablePtr make_fq_table(const FieldCtxPtr& ctx) { return std::make_shared<FqTable>(ctx); }

} // namespace rrca
