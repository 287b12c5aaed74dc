#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrca/blocks.hpp"

using namespace rrca;

static ParameterSet make_ps(uint32_t m, uint32_t n, const std::string& kappa,
                            const std::vector<std::string>& c, FieldCtxPtr ctx) {
    std::vector<FieldElement> cv;
    for (const auto& s : c) cv.push_back(ctx->parse(s));
    return ParameterSet::create(m, n, ctx->parse(kappa), cv);
}

TEST_CASE("parameter validation") {
    auto f9 = ctx_create(3, 2);
    CHECK_THROWS_AS(ParameterSet::create(3, 1, f9->one(), {f9->one(), f9->one()}), Error); // p | m
    CHECK_THROWS_AS(ParameterSet::create(1, 3, f9->one(), {}), Error);                     // p <= n
    CHECK_THROWS_AS(ParameterSet::create(2, 1, f9->one(), {}), Error); // needs m-1 c values
    auto f7 = ctx_create(7, 1);
    CHECK_THROWS_AS(ParameterSet::create(4, 1, f7->one(), {f7->one(), f7->one(), f7->one()}),
                    Error); // 4 does not divide 7 - 1 = 6
}

TEST_CASE("derived parameters solve the eta system") {
    auto f9 = ctx_create(3, 2);

    SUBCASE("m = 1 has no c parameters") {
        auto ps = make_ps(1, 2, "t", {}, f9);
        auto dp = derive_params(ps);
        REQUIRE(dp.H.size() == 1);
        CHECK(dp.H[0].is_zero());
        CHECK(dp.a[0].is_zero());
    }

    SUBCASE("m = 2 gives H = (-c1, c1), a = (0, c1)") {
        auto c1 = f9->parse("t+1");
        auto ps = ParameterSet::create(2, 1, f9->zero(), {c1});
        auto dp = derive_params(ps);
        CHECK(dp.H[0] == -c1);
        CHECK(dp.H[1] == c1);
        CHECK(dp.a[0].is_zero());
        CHECK(dp.a[1] == c1);
    }

    SUBCASE("zero c gives zero H and a") {
        auto ps = ParameterSet::create(2, 1, f9->zero(), {f9->zero()});
        auto dp = derive_params(ps);
        CHECK(dp.H[0].is_zero());
        CHECK(dp.H[1].is_zero());
        CHECK(dp.a[1].is_zero());
    }

    SUBCASE("H sums to zero and the defining rows hold for larger m") {
        auto f81 = ctx_create(3, 4);
        std::vector<FieldElement> c = {f81->parse("t"), f81->parse("t^2+1"), f81->parse("2*t^3")};
        auto ps = ParameterSet::create(4, 1, f81->zero(), c);
        auto dp = derive_params(ps);
        auto eta = ps.eta();
        auto sum = f81->zero();
        for (const auto& h : dp.H) sum += h;
        CHECK(sum.is_zero());
        auto etai = eta.inverse();
        for (uint32_t l = 1; l < 4; ++l) {
            auto lhs = f81->zero();
            for (uint32_t j = 0; j < 4; ++j) lhs += etai.pow(uint64_t(l) * j) * dp.H[j];
            auto rhs = -(c[l - 1] * (f81->one() - etai.pow(l)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("block partitions at rank one and two") {
    auto f9 = ctx_create(3, 2);

    SUBCASE("symmetric group S_2, kappa in the prime field merges") {
        auto ps = make_ps(1, 2, "2", {}, f9);
        auto bp = block_partition(ps);
        REQUIRE(bp.size() == 1);
        CHECK(bp.classes[0].size() == 2);
    }

    SUBCASE("symmetric group S_2, kappa outside F_3 separates") {
        auto ps = make_ps(1, 2, "t", {}, f9);
        auto bp = block_partition(ps);
        CHECK(bp.size() == 2);
        CHECK(bp.all_singletons());
    }

    SUBCASE("cyclic m=2, n=1 merges exactly when c_1 is in F_p") {
        for (uint64_t k = 0; k < 9; ++k) {
            auto c1 = f9->element_at(k);
            auto ps = ParameterSet::create(2, 1, f9->zero(), {c1});
            auto bp = block_partition(ps);
            bool merged = bp.size() == 1;
            CHECK(merged == in_prime_subfield(c1));
        }
    }

    SUBCASE("n = 0 gives the single empty label") {
        auto ps = ParameterSet::create(2, 0, f9->zero(), {f9->parse("t")});
        auto bp = block_partition(ps);
        REQUIRE(bp.size() == 1);
        CHECK(bp.classes[0][0].str() == "[|]");
    }
}

TEST_CASE("same_block agrees with the partition and validates input") {
    auto f9 = ctx_create(3, 2);
    auto ps = make_ps(2, 2, "t", {"t"}, f9);
    auto labels = enumerate_multipartitions(2, 2);
    auto bp = block_partition(ps);
    for (const auto& la : labels) CHECK(same_block(la, la, ps));
    // symmetry + agreement with fingerprint classes
    for (const auto& la : labels)
        for (const auto& mu : labels) {
            bool s1 = same_block(la, mu, ps);
            CHECK(s1 == same_block(mu, la, ps));
            bool same_class = false;
            for (const auto& cl : bp.classes) {
                bool a = std::find(cl.begin(), cl.end(), la) != cl.end();
                bool b = std::find(cl.begin(), cl.end(), mu) != cl.end();
                if (a && b) same_class = true;
            }
            CHECK(s1 == same_class);
        }
    CHECK_THROWS_AS(same_block(labels[0], Multipartition({Partition({1})}), ps), Error);
}

TEST_CASE("hand-checked separation at a_1 = kappa") {
    // contents of (2) shift to {0, -AS(k)}; contents of (1,1) wear AS(k)
    // giving {AS(k), 2 AS(k)}; equal only when AS(k) = 0
    auto f9 = ctx_create(3, 2);
    auto kappa = f9->parse("t");
    auto eta = primitive_root_of_unity(f9, 2);
    // choose c_1 so that a_1 = c_1 = kappa
    auto ps = ParameterSet::create(2, 2, kappa, {kappa});
    Multipartition la({Partition({2}), Partition{}});
    Multipartition mu({Partition{}, Partition({1, 1})});
    CHECK_FALSE(same_block(la, mu, ps));
    (void)eta;
}

TEST_CASE("partition is stable under field extension") {
    auto f9 = ctx_create(3, 2);
    auto f81 = ctx_create(3, 4);
    // embed F_9 into F_81 via a root of t^2 + 1
    FieldElement root81 = f81->zero();
    bool found = false;
    for (uint64_t k = 0; k < 81 && !found; ++k) {
        auto x = f81->element_at(k);
        if ((x * x + f81->one()).is_zero() && !x.is_zero()) {
            root81 = x;
            found = true;
        }
    }
    REQUIRE(found);
    auto embed = [&](const FieldElement& a) {
        return f81->from_int(a.coeffs()[0]) + root81.scaled(a.coeffs()[1]);
    };
    for (uint64_t kk = 0; kk < 9; ++kk)
        for (uint64_t cc = 0; cc < 9; ++cc) {
            auto kappa = f9->element_at(kk);
            auto c1 = f9->element_at(cc);
            auto ps9 = ParameterSet::create(2, 2, kappa, {c1});
            auto ps81 = ParameterSet::create(2, 2, embed(kappa), {embed(c1)});
            auto b9 = block_partition(ps9);
            auto b81 = block_partition(ps81);
            REQUIRE(b9.size() == b81.size());
            for (size_t i = 0; i < b9.classes.size(); ++i)
                CHECK(b9.classes[i] == b81.classes[i]);
        }
}

TEST_CASE("uniform shift of the component vector does not change verdicts") {
    auto f9 = ctx_create(3, 2);
    auto labels = enumerate_multipartitions(2, 2);
    for (uint64_t kk : {3ull, 4ull})
        for (uint64_t cc = 0; cc < 9; ++cc)
            for (uint64_t dd = 0; dd < 9; ++dd) {
                auto kappa = f9->element_at(kk);
                auto ps = ParameterSet::create(2, 2, kappa, {f9->element_at(cc)});
                auto dp = derive_params(ps);
                auto delta = f9->element_at(dd);
                std::vector<FieldElement> shifted = dp.a;
                for (auto& x : shifted) x += delta;
                for (const auto& la : labels)
                    for (const auto& mu : labels) {
                        bool v1 = shifted_residue(la, dp.a, kappa) == shifted_residue(mu, dp.a, kappa);
                        bool v2 = shifted_residue(la, shifted, kappa) ==
                                  shifted_residue(mu, shifted, kappa);
                        CHECK(v1 == v2);
                    }
            }
}
