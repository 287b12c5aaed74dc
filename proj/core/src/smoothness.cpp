#include "rrca/smoothness.hpp"

#include <sstream>

namespace rrca {

HyperplaneReport singular_locus_report(const ParameterSet& ps) {
    if (ps.n < 1) fail(errc::internal_error, "singular_locus_report needs n >= 1");
    HyperplaneReport rep;
    // The kappa condition comes from the transposition-type reflections,
    // which exist only for n >= 2.
    rep.kappa_in_Fp = ps.n >= 2 && in_prime_subfield(ps.kappa);
    DerivedParams dp = derive_params(ps);
    for (uint32_t i = 0; i < ps.m; ++i) {
        for (uint32_t j = 0; j < ps.m; ++j) {
            if (i == j) continue;
            for (uint32_t C = 0; C < ps.n; ++C) {
                for (int sign : {+1, -1}) {
                    FieldElement v = dp.a[i] - dp.a[j] + ps.kappa.scaled(sign * static_cast<int64_t>(C));
                    if (in_prime_subfield(v))
                        rep.violations.push_back({i, j, C, sign});
                }
            }
        }
    }
    rep.smooth = !rep.kappa_in_Fp && rep.violations.empty();
    return rep;
}

std::string ParabolicType::str() const {
    std::ostringstream os;
    bool any = false;
    for (uint32_t k : sym_factors) {
        if (any) os << " x ";
        os << "S" << k;
        any = true;
    }
    if (wreath_rank > 0) {
        if (any) os << " x ";
        os << "G(m,1," << wreath_rank << ")";
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

namespace {

void gen_factor_multisets(uint32_t budget, uint32_t maxk, std::vector<uint32_t>& cur,
                          std::vector<std::vector<uint32_t>>& out) {
    out.push_back(cur);
    for (uint32_t k = std::min(budget, maxk); k >= 2; --k) {
        cur.push_back(k);
        gen_factor_multisets(budget - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ParabolicType> parabolic_types(uint32_t m, uint32_t n) {
    if (m < 1 || n < 1) fail(errc::internal_error, "parabolic_types needs m, n >= 1");
    std::vector<std::vector<uint32_t>> multisets;
    std::vector<uint32_t> cur;
    gen_factor_multisets(n, n, cur, multisets);
    std::vector<ParabolicType> out;
    for (const auto& ks : multisets) {
        uint32_t used = 0;
        for (uint32_t k : ks) used += k;
        if (m == 1) {
            out.push_back({ks, 0});
        } else {
            for (uint32_t np = 0; np + used <= n; ++np) out.push_back({ks, np});
        }
    }
    return out;
}

SmoothBlocksVerdict smooth_iff_singleton_blocks(const ParameterSet& ps) {
    SmoothBlocksVerdict v;
    v.hyperplane_smooth = singular_locus_report(ps).smooth;
    v.parabolic_singletons = true;
    for (const auto& pt : parabolic_types(ps.m, ps.n)) {
        for (uint32_t k : pt.sym_factors) {
            ParameterSet sub = ParameterSet::create(1, k, ps.kappa, {});
            if (!block_partition(sub).all_singletons()) v.parabolic_singletons = false;
        }
        if (pt.wreath_rank > 0) {
            ParameterSet sub = ParameterSet::create(ps.m, pt.wreath_rank, ps.kappa, ps.c);
            if (!block_partition(sub).all_singletons()) v.parabolic_singletons = false;
        }
        if (!v.parabolic_singletons) break;
    }
    return v;
}

std::vector<std::pair<std::string, std::pair<FieldElement, FieldElement>>>
g4_scalar_table(const FieldCtxPtr& ctx) {
    FieldElement w = primitive_root_of_unity(ctx, 3);
    FieldElement w2 = w * w;
    auto i4 = ctx->from_int(4);
    auto i2 = ctx->from_int(-2);
    return {
        {"T", {i4, i4}},
        {"V1", {i4 * w2, i4 * w}},
        {"V2", {i4 * w, i4 * w2}},
        {"W", {i2, i2}},
        {"h", {i2 * w2, i2 * w}},
        {"h*", {i2 * w, i2 * w2}},
        {"U", {ctx->zero(), ctx->zero()}},
    };
}

G4Verdict g4_generic_check(const FieldCtxPtr& ctx, const FieldElement& c1, const FieldElement& c2) {
    if (ctx->p() < 5) fail(errc::bad_characteristic, "G_4 needs p >= 5");
    if (!c1.ctx()->same_field(*ctx) || !c2.ctx()->same_field(*ctx))
        fail(errc::ctx_mismatch, "parameters must live in the given ctx");
    FieldElement w = primitive_root_of_unity(ctx, 3);
    FieldElement w2 = w * w;
    FieldElement one = ctx->one();
    FieldElement d1 = (-c1) / (one - w2);
    FieldElement d2 = (-c2) / (one - w);

    auto table = g4_scalar_table(ctx);
    G4Verdict out;
    auto run = [&](const std::string& group, size_t nrows) {
        for (size_t i = 0; i < nrows; ++i) {
            for (size_t j = i + 1; j < nrows; ++j) {
                FieldElement val = d1 * (table[i].second.first - table[j].second.first) +
                                   d2 * (table[i].second.second - table[j].second.second);
                G4Pair pr{group, table[i].first, table[j].first, val, in_prime_subfield(val)};
                (pr.in_Fp ? out.unseparated_pairs : out.separated_pairs).push_back(pr);
            }
        }
    };
    run("G4", table.size());
    run("Z3", 3); // Irr Z_3 comes from restricting T, V1, V2
    out.singleton_blocks = out.unseparated_pairs.empty();
    return out;
}

FieldElement euler_scalar_shift(const std::vector<FieldElement>& d,
                                const std::vector<FieldElement>& mu) {
    if (d.size() != mu.size()) fail(errc::size_mismatch, "vectors of equal length required");
    if (d.empty()) fail(errc::size_mismatch, "empty input");
    FieldElement acc = d[0].ctx()->zero();
    for (size_t i = 0; i < d.size(); ++i) {
        if (!d[i].ctx()->same_field(*mu[i].ctx()))
            fail(errc::ctx_mismatch, "vectors over different contexts");
        acc += artin_schreier(d[i] * mu[i]);
    }
    return acc;
}

} // namespace rrca
