#pragma once

// Hyperplane criterion for smoothness of the centre, the parabolic subgroup
// types of G(m,1,n), and the Euler-element separation check for G_4.

#include <cstdint>
#include <string>
#include <vector>

#include "rrca/blocks.hpp"

namespace rrca {

struct HyperplaneViolation {
    uint32_t i = 0, j = 0; // component indices, i != j
    uint32_t C = 0;        // 0 <= C <= n-1
    int sign = +1;         // tested a_i - a_j + sign*C*kappa
};

struct HyperplaneReport {
    // True when the kappa-hyperplane condition applies (n >= 2, so that
    // reflections of transposition type exist) and kappa lies in F_p.
    bool kappa_in_Fp = false;
    std::vector<HyperplaneViolation> violations;
    bool smooth = false;
};

// Tests kappa in F_p (for n >= 2) and a_i - a_j +- C kappa in F_p over all
// ordered pairs i != j, 0 <= C <= n-1; smooth iff nothing holds.
HyperplaneReport singular_locus_report(const ParameterSet& ps);

struct ParabolicType {
    std::vector<uint32_t> sym_factors; // descending, each >= 2
    uint32_t wreath_rank = 0;          // n' in G(m,1,n'); always 0 when m = 1

    std::string str() const;
};

// All parabolic types S_{k_1} x ... x S_{k_t} x G(m,1,n') with
// sum k_i + n' <= n, one per unordered multiset.  For m = 1 the wreath
// factor is itself a symmetric group and is folded into sym_factors.
std::vector<ParabolicType> parabolic_types(uint32_t m, uint32_t n);

struct SmoothBlocksVerdict {
    bool hyperplane_smooth = false;
    bool parabolic_singletons = false;
};

// Left: hyperplane verdict; right: every parabolic factor has singleton
// blocks (S_k factors via m = 1 with parameter kappa, wreath factors via
// (m, n', kappa, c)).
SmoothBlocksVerdict smooth_iff_singleton_blocks(const ParameterSet& ps);

struct G4Pair {
    std::string group; // "G4" or "Z3"
    std::string mu, rho;
    FieldElement value; // d_1 (mu_1 - rho_1) + d_2 (mu_2 - rho_2)
    bool in_Fp = false;
};

struct G4Verdict {
    std::vector<G4Pair> separated_pairs;
    std::vector<G4Pair> unseparated_pairs;
    bool singleton_blocks = false; // false means inconclusive, not "same block"
};

// Euler-element separation for G_4 and its parabolic Z_3.  Requires p >= 5
// and a primitive cube root of unity in ctx.
G4Verdict g4_generic_check(const FieldCtxPtr& ctx, const FieldElement& c1, const FieldElement& c2);

// The seven (z_1, z_2) scalar pairs on Irr G_4, in a fixed row order
// T, V1, V2, W, h, h*, U.  Exposed for the table sanity check.
std::vector<std::pair<std::string, std::pair<FieldElement, FieldElement>>>
g4_scalar_table(const FieldCtxPtr& ctx);

// Sum of AS(d_i mu_i); vectors of equal length over one ctx.
FieldElement euler_scalar_shift(const std::vector<FieldElement>& d,
                                const std::vector<FieldElement>& mu);

} // namespace rrca
