#pragma once

// Table-backed arithmetic for a small F_q, built from a FieldCtx so both
// representations agree element-for-element.  Elements are indices
// 0..q-1 in the FieldCtx::element_at order; 0 is zero, 1 is one.

#include <cstdint>
#include <memory>
#include <vector>

#include "rrca/gf.hpp"

namespace rrca {

class FqTable {
public:
    using Elt = uint16_t;

    explicit FqTable(FieldCtxPtr ctx);

    const FieldCtxPtr& ctx() const { return ctx_; }
    uint32_t q() const { return q_; }
    uint32_t p() const { return ctx_->p(); }

    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt inv(Elt a) const;
    Elt frob(Elt a) const { return frob_[a]; } // a^p
    Elt from_int(int64_t v) const;
    Elt pow(Elt a, uint64_t e) const;

    Elt to_index(const FieldElement& a) const;
    FieldElement to_element(Elt a) const;

    bool is_zero(Elt a) const { return a == 0; }

    // field-object interface for rrca::la templates
    using value_type = Elt;
    Elt zero() const { return 0; }
    Elt one() const { return one_; }

private:
    FieldCtxPtr ctx_;
    uint32_t q_;
    Elt one_;
    std::vector<Elt> add_, mul_, neg_, inv_, frob_;
};

using FqTablePtr = std::shared_ptr<const FqTable>;

FqTablePtr make_fq_table(const FieldCtxPtr& ctx);

} // namespace rrca
