#pragma once

// Parameters (kappa, c_1..c_{m-1}) for the wreath product G(m,1,n), the
// derived (H_j) and (a_i) vectors, and the partition of the simple labels
// P(m,n) by equality of shifted residues.

#include <cstdint>
#include <vector>

#include "rrca/combinatorics.hpp"
#include "rrca/gf.hpp"

namespace rrca {

struct ParameterSet {
    uint32_t m = 1;
    uint32_t n = 1;
    FieldElement kappa;
    std::vector<FieldElement> c; // c_1..c_{m-1}
    FieldCtxPtr ctx;

    // Checks p coprime to |G(m,1,n)| = m^n n! (p does not divide m, p > n)
    // and that a primitive m-th root of unity exists in ctx.
    static ParameterSet create(uint32_t m, uint32_t n, FieldElement kappa,
                               std::vector<FieldElement> c);

    FieldElement eta() const; // primitive m-th root of unity
};

struct DerivedParams {
    std::vector<FieldElement> H; // H_0..H_{m-1}, normalized to sum to zero
    std::vector<FieldElement> a; // a_0 = 0, a_i = H_1 + ... + H_i
};

// Solves the m x m system  sum_j eta^{-lj} H_j = rhs_l  with rhs_0 = 0 and
// rhs_l = -c_l (1 - eta^{-l}) for l >= 1, then takes partial sums.
DerivedParams derive_params(const ParameterSet& ps);

struct BlockPartition {
    std::vector<std::vector<Multipartition>> classes;
    std::vector<ResidueMultiset> fingerprints; // one per class
    size_t size() const { return classes.size(); }
    bool all_singletons() const;
};

// Groups P(m,n) by equality of shifted_residue(lambda, a, kappa); classes
// ordered by their first member in enumeration order.
BlockPartition block_partition(const ParameterSet& ps);

bool same_block(const Multipartition& la, const Multipartition& mu, const ParameterSet& ps);

} // namespace rrca
