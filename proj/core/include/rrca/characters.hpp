#pragma once

// Exact character theory for G(m,1,n) at desk scale: the character table
// over Z[zeta_M], fake polynomials by Molien projection, p-coinvariant
// graded characters, the Brauer character of the p-truncated polynomial
// module, and the graded divisibility tests behind the generic-smoothness
// classification.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rrca/cyclotomic.hpp"
#include "rrca/laurent.hpp"
#include "rrca/wreath.hpp"

namespace rrca {

// default cap on m^n n!; override with environment RRCA_MAX_GROUP_ORDER
uint64_t group_order_budget();

class CharacterTable {
public:
    // Murnaghan-Nakayama for the symmetric factors, induction from the
    // colored Young subgroup for the rest.  Throws BudgetExceeded when
    // m^n n! exceeds the budget.
    static std::shared_ptr<const CharacterTable> build(uint32_t m, uint32_t n);

    uint32_t m() const { return m_; }
    uint32_t n() const { return n_; }
    const WreathGroup& group() const { return group_; }
    const CycFieldPtr& field() const { return field_; } // Z[zeta_M], M = m * lcm(1..n)

    const std::vector<Multipartition>& labels() const { return labels_; }
    const std::vector<Multipartition>& class_labels() const { return class_labels_; }
    const std::vector<uint64_t>& class_sizes() const { return class_sizes_; }
    const std::vector<GroupElement>& class_reps() const { return class_reps_; }

    const CyclotomicNumber& value(size_t label_idx, size_t class_idx) const {
        return values_[label_idx][class_idx];
    }
    uint64_t dim(size_t label_idx) const { return dims_[label_idx]; }
    size_t label_index(const Multipartition& la) const;

    // reflection degrees m, 2m, ..., nm
    std::vector<uint32_t> degrees() const;

    // graded multiplicity of the label in the coinvariant ring
    const LaurentPoly& fake_polynomial(size_t label_idx) const;

    // fake_polynomial * prod_i (1 + t^{d_i} + ... + t^{(p-1) d_i})
    LaurentPoly pcoinvariant_character(size_t label_idx, uint32_t p) const;

    // label of the complex-conjugate character
    size_t dual_label(size_t label_idx) const;

    // trace of g on k[V]/<p-th powers>, as a product over eigenvalues of
    // (1 - lambda^p)/(1 - lambda) = 1 + lambda + ... + lambda^{p-1}
    CyclotomicNumber brauer_char_V0(const GroupElement& g, uint32_t p) const;

    // dim(la) t^{p b} P(coinv, t^p) I(t) / f_{dual}(t^p); nullopt when the
    // division leaves a remainder
    std::optional<LaurentPoly> poincare_candidate(size_t label_idx, uint32_t p) const;

    // f_{dual}(s) divides prod [d_i]_s up to a monomial unit
    bool divisibility_check(size_t label_idx, uint32_t p) const;

    // graded dimension of the coinvariant ring, prod [d_i]_t
    LaurentPoly coinvariant_series() const;

private:
    CharacterTable(uint32_t m, uint32_t n);
    void build_table();
    void build_fakes() const;

    uint32_t m_, n_;
    WreathGroup group_;
    CycFieldPtr field_;
    std::vector<Multipartition> labels_;
    std::vector<Multipartition> class_labels_;
    std::vector<GroupElement> class_reps_;
    std::vector<uint64_t> class_sizes_;
    std::vector<std::vector<CyclotomicNumber>> values_;
    std::vector<uint64_t> dims_;
    mutable std::vector<LaurentPoly> fakes_; // lazily built, all at once
};

using CharTablePtr = std::shared_ptr<const CharacterTable>;

// ((1 - t^p)/(1 - t))^n = (1 + t + ... + t^{p-1})^n
LaurentPoly I_poly(uint32_t p, uint32_t n);

} // namespace rrca
