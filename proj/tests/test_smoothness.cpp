#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rrca/smoothness.hpp"

using namespace rrca;

TEST_CASE("symmetric group case: singular exactly on the prime field") {
    auto f9 = ctx_create(3, 2);
    for (uint64_t k = 0; k < 9; ++k) {
        auto kappa = f9->element_at(k);
        auto ps = ParameterSet::create(1, 2, kappa, {});
        auto rep = singular_locus_report(ps);
        CHECK(rep.smooth == !in_prime_subfield(kappa));
        CHECK(rep.violations.empty()); // m = 1 has no (i, j) conditions
    }
}

TEST_CASE("rank one wreath case ignores kappa and tests c_1 only") {
    auto f9 = ctx_create(3, 2);
    for (uint64_t kk = 0; kk < 9; ++kk)
        for (uint64_t cc = 0; cc < 9; ++cc) {
            auto ps = ParameterSet::create(2, 1, f9->element_at(kk), {f9->element_at(cc)});
            auto rep = singular_locus_report(ps);
            CHECK(rep.kappa_in_Fp == false);
            bool c_in = in_prime_subfield(f9->element_at(cc));
            CHECK(rep.smooth == !c_in);
            for (const auto& v : rep.violations) CHECK(v.C == 0);
        }
}

TEST_CASE("parabolic type enumeration") {
    auto names = [](const std::vector<ParabolicType>& ts) {
        std::multiset<std::string> out;
        for (const auto& t : ts) out.insert(t.str());
        return out;
    };

    SUBCASE("any m, n = 1") {
        auto ts = parabolic_types(5, 1);
        CHECK(names(ts) == std::multiset<std::string>{"1", "G(m,1,1)"});
    }

    SUBCASE("m = 1, n = 3 folds the wreath factor into symmetric factors") {
        auto ts = parabolic_types(1, 3);
        CHECK(names(ts) == std::multiset<std::string>{"1", "S2", "S3"});
    }

    SUBCASE("m = 2, n = 2") {
        auto ts = parabolic_types(2, 2);
        CHECK(names(ts) ==
              std::multiset<std::string>{"1", "S2", "G(m,1,1)", "G(m,1,2)"});
    }

    SUBCASE("m = 2, n = 4 mixes factors") {
        auto ts = parabolic_types(2, 4);
        // {} with n'=0..4; {2} with n'=0..2; {2,2} n'=0; {3} n'=0,1; {4} n'=0
        CHECK(ts.size() == 5 + 3 + 1 + 2 + 1);
    }
}

TEST_CASE("hyperplane verdict equals singleton-block verdicts, exhaustively over F_9") {
    auto f9 = ctx_create(3, 2);

    auto run = [&](uint32_t m, uint32_t n) {
        uint64_t cpoints = m == 1 ? 1 : 9;
        for (uint64_t kk = 0; kk < 9; ++kk) {
            for (uint64_t cc = 0; cc < cpoints; ++cc) {
                std::vector<FieldElement> c;
                if (m == 2) c.push_back(f9->element_at(cc));
                auto ps = ParameterSet::create(m, n, f9->element_at(kk), c);
                auto v = smooth_iff_singleton_blocks(ps);
                CHECK(v.hyperplane_smooth == v.parabolic_singletons);
                // the top group alone already decides
                CHECK(v.hyperplane_smooth == block_partition(ps).all_singletons());
            }
        }
    };
    run(1, 2);
    run(2, 1);
    run(2, 2);
}

TEST_CASE("singularity is monotone under parameter restriction") {
    auto f9 = ctx_create(3, 2);
    for (uint64_t kk = 0; kk < 9; ++kk)
        for (uint64_t cc = 0; cc < 9; ++cc) {
            auto kappa = f9->element_at(kk);
            auto c1 = f9->element_at(cc);
            auto top = ParameterSet::create(2, 2, kappa, {c1});
            auto sym = ParameterSet::create(1, 2, kappa, {});
            auto small = ParameterSet::create(2, 1, kappa, {c1});
            bool top_singular = !singular_locus_report(top).smooth;
            if (!singular_locus_report(sym).smooth) CHECK(top_singular);
            if (!singular_locus_report(small).smooth) CHECK(top_singular);
        }
}

TEST_CASE("G_4 scalar table has no coinciding rows") {
    auto f49 = ctx_create(7, 2);
    auto table = g4_scalar_table(f49);
    REQUIRE(table.size() == 7);
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = i + 1; j < table.size(); ++j) {
            bool both = table[i].second.first == table[j].second.first &&
                        table[i].second.second == table[j].second.second;
            CHECK_FALSE(both);
        }
}

TEST_CASE("G_4 check edge cases") {
    auto f49 = ctx_create(7, 2);

    SUBCASE("zero parameters are inconclusive") {
        auto v = g4_generic_check(f49, f49->zero(), f49->zero());
        CHECK_FALSE(v.singleton_blocks);
        CHECK(v.separated_pairs.empty());
        CHECK(v.unseparated_pairs.size() == 21 + 3);
    }

    SUBCASE("small characteristic is rejected") {
        auto f9 = ctx_create(3, 2);
        CHECK_THROWS_AS(g4_generic_check(f9, f9->one(), f9->one()), Error);
    }

    SUBCASE("missing cube root is reported") {
        auto f5 = ctx_create(5, 1); // 3 does not divide 4
        CHECK_THROWS_AS(g4_generic_check(f5, f5->one(), f5->one()), Error);
    }

    SUBCASE("verdict is invariant under prime-field scaling") {
        for (uint64_t a = 1; a < 20; a += 3)
            for (uint64_t b = 2; b < 20; b += 5) {
                auto c1 = f49->element_at(a);
                auto c2 = f49->element_at(b);
                auto v1 = g4_generic_check(f49, c1, c2);
                for (int64_t u = 1; u < 7; ++u) {
                    auto v2 = g4_generic_check(f49, c1.scaled(u), c2.scaled(u));
                    CHECK(v1.singleton_blocks == v2.singleton_blocks);
                    CHECK(v1.unseparated_pairs.size() == v2.unseparated_pairs.size());
                }
            }
    }

    SUBCASE("Z3 pairs are the restriction of the G4 pairs to T, V1, V2") {
        auto c1 = f49->parse("t");
        auto c2 = f49->parse("t+1");
        auto v = g4_generic_check(f49, c1, c2);
        size_t z3 = 0;
        for (const auto& pr : v.separated_pairs)
            if (pr.group == "Z3") ++z3;
        for (const auto& pr : v.unseparated_pairs)
            if (pr.group == "Z3") ++z3;
        CHECK(z3 == 3);
    }
}

TEST_CASE("euler scalar shift") {
    auto f49 = ctx_create(7, 2);
    auto t = f49->parse("t");

    SUBCASE("zero d gives zero") {
        CHECK(euler_scalar_shift({f49->zero(), f49->zero()}, {t, t}).is_zero());
    }

    SUBCASE("additivity on the T row") {
        auto d1 = t, d2 = t + f49->one();
        auto four = f49->from_int(4);
        auto lhs = euler_scalar_shift({d1, d2}, {four, four});
        CHECK(lhs == artin_schreier(d1.scaled(4) + d2.scaled(4)));
    }

    SUBCASE("prime-field inputs vanish") {
        CHECK(euler_scalar_shift({f49->from_int(3), f49->from_int(5)},
                                 {f49->from_int(2), f49->from_int(6)})
                  .is_zero());
    }

    SUBCASE("length mismatch is an error") {
        CHECK_THROWS_AS(euler_scalar_shift({t}, {t, t}), Error);
    }
}
