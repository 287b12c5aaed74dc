#include "rrca/blocks.hpp"

#include <map>

#include "rrca/linalg.hpp"

namespace rrca {

namespace {

// field object over FieldElement for the generic linear algebra
struct GfK {
    using value_type = FieldElement;
    FieldCtxPtr ctx;
    value_type zero() const { return ctx->zero(); }
    value_type one() const { return ctx->one(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
};

} // namespace

ParameterSet ParameterSet::create(uint32_t m, uint32_t n, FieldElement kappa,
                                  std::vector<FieldElement> c) {
    if (m < 1) fail(errc::internal_error, "m must be >= 1");
    if (!kappa.ctx()) fail(errc::ctx_mismatch, "kappa carries no field context");
    if (c.size() != m - 1) fail(errc::size_mismatch, "need exactly m-1 parameters c_1..c_{m-1}");
    for (const auto& cl : c)
        if (!cl.ctx()->same_field(*kappa.ctx()))
            fail(errc::ctx_mismatch, "c parameters and kappa in different contexts");
    FieldCtxPtr ctx = kappa.ctx();
    uint32_t p = ctx->p();
    if (m % p == 0 || n >= p)
        fail(errc::bad_characteristic, "p must not divide |G(m,1,n)| = m^n n!");
    // existence of a primitive m-th root of unity
    primitive_root_of_unity(ctx, m);
    ParameterSet ps;
    ps.m = m;
    ps.n = n;
    ps.kappa = std::move(kappa);
    ps.c = std::move(c);
    ps.ctx = std::move(ctx);
    return ps;
}

FieldElement ParameterSet::eta() const { return primitive_root_of_unity(ctx, m); }

DerivedParams derive_params(const ParameterSet& ps) {
    const uint32_t m = ps.m;
    GfK k{ps.ctx};
    FieldElement eta = ps.eta();
    FieldElement eta_inv = eta.inverse();

    la::Matrix<GfK> A(m, m, k.zero());
    std::vector<FieldElement> rhs(m, k.zero());
    for (uint32_t l = 0; l < m; ++l) {
        for (uint32_t j = 0; j < m; ++j) A.at(l, j) = eta_inv.pow(static_cast<uint64_t>(l) * j);
        if (l >= 1) rhs[l] = -(ps.c[l - 1] * (ps.ctx->one() - eta_inv.pow(l)));
    }
    auto sol = la::solve(k, A, rhs);
    if (!sol) fail(errc::internal_error, "parameter system is singular");
    DerivedParams dp;
    dp.H = *sol;
    dp.a.resize(m, ps.ctx->zero());
    for (uint32_t i = 1; i < m; ++i) dp.a[i] = dp.a[i - 1] + dp.H[i];
    return dp;
}

bool BlockPartition::all_singletons() const {
    for (const auto& cl : classes)
        if (cl.size() != 1) return false;
    return true;
}

BlockPartition block_partition(const ParameterSet& ps) {
    DerivedParams dp = derive_params(ps);
    auto labels = enumerate_multipartitions(ps.m, ps.n);
    BlockPartition out;
    std::map<ResidueMultiset, size_t> index;
    for (const auto& la : labels) {
        ResidueMultiset res = shifted_residue(la, dp.a, ps.kappa);
        auto it = index.find(res);
        if (it == index.end()) {
            index.emplace(res, out.classes.size());
            out.classes.push_back({la});
            out.fingerprints.push_back(res);
        } else {
            out.classes[it->second].push_back(la);
        }
    }
    return out;
}

bool same_block(const Multipartition& la, const Multipartition& mu, const ParameterSet& ps) {
    if (la.m() != ps.m || mu.m() != ps.m)
        fail(errc::size_mismatch, "labels must have m components");
    if (la.size() != ps.n || mu.size() != ps.n)
        fail(errc::size_mismatch, "labels must be multipartitions of n");
    DerivedParams dp = derive_params(ps);
    return shifted_residue(la, dp.a, ps.kappa) == shifted_residue(mu, dp.a, ps.kappa);
}

} // namespace rrca
