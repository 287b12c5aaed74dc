#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rrca/combinatorics.hpp"

using namespace rrca;

TEST_CASE("partition enumeration is reverse-lexicographic") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<uint32_t>{4});
    CHECK(p4[1].parts() == std::vector<uint32_t>{3, 1});
    CHECK(p4[2].parts() == std::vector<uint32_t>{2, 2});
    CHECK(p4[3].parts() == std::vector<uint32_t>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<uint32_t>{1, 1, 1, 1});
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
}

TEST_CASE("multipartition enumeration matches the documented order") {
    auto one_two = enumerate_multipartitions(1, 2);
    REQUIRE(one_two.size() == 2);
    CHECK(one_two[0].str() == "[2]");
    CHECK(one_two[1].str() == "[1,1]");

    auto two_two = enumerate_multipartitions(2, 2);
    REQUIRE(two_two.size() == 5);
    CHECK(two_two[0].str() == "[2|]");
    CHECK(two_two[1].str() == "[1,1|]");
    CHECK(two_two[2].str() == "[1|1]");
    CHECK(two_two[3].str() == "[|2]");
    CHECK(two_two[4].str() == "[|1,1]");

    auto two_zero = enumerate_multipartitions(2, 0);
    REQUIRE(two_zero.size() == 1);
    CHECK(two_zero[0].str() == "[|]");

    // no duplicates at a bigger size
    auto big = enumerate_multipartitions(3, 4);
    auto copy = big;
    std::sort(copy.begin(), copy.end());
    CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
}

TEST_CASE("multipartition text syntax round trips") {
    auto mp = Multipartition::parse("[2,1|1|]");
    CHECK(mp.m() == 3);
    CHECK(mp.size() == 4);
    CHECK(mp.str() == "[2,1|1|]");
    CHECK_THROWS_AS(Multipartition::parse("2,1|1"), Error);
    CHECK_THROWS_AS(Multipartition::parse("[1,2]"), Error);
}

TEST_CASE("box contents") {
    auto sorted = [](std::vector<int32_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(Partition({2, 1}).contents()) == std::vector<int32_t>{-1, 0, 1});
    CHECK(sorted(Partition({5}).contents()) == std::vector<int32_t>{0, 1, 2, 3, 4});
    CHECK(Partition{}.contents().empty());
}

TEST_CASE("transpose is an involution and negates contents") {
    CHECK(Partition({3}).transpose() == Partition({1, 1, 1}));
    CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
    CHECK(Partition{}.transpose() == Partition{});
    for (const auto& la : partitions_of(6)) {
        CHECK(la.transpose().transpose() == la);
        auto a = la.contents();
        auto b = la.transpose().contents();
        for (auto& x : b) x = -x;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("shifted residues") {
    auto f9 = ctx_create(3, 2);
    auto t = f9->parse("t");

    SUBCASE("single row with a nontrivial kappa shift") {
        Multipartition la({Partition({2})});
        auto res = shifted_residue(la, {f9->zero()}, t);
        auto s = artin_schreier(t);
        ResidueMultiset want;
        want.add(f9->zero());
        want.add(-s);
        CHECK(res == want);
    }

    SUBCASE("kappa in the prime field collapses everything") {
        Multipartition la({Partition({2, 1}), Partition({1})});
        auto res = shifted_residue(la, {f9->zero(), f9->zero()}, f9->from_int(2));
        REQUIRE(res.entries().size() == 1);
        CHECK(res.entries().begin()->first == f9->zero());
        CHECK(res.total() == 4);
    }

    SUBCASE("single boxes pick out the component shifts") {
        auto a1 = f9->parse("t+1");
        Multipartition e0({Partition({1}), Partition{}});
        Multipartition e1({Partition{}, Partition({1})});
        auto r0 = shifted_residue(e0, {f9->zero(), a1}, t);
        auto r1 = shifted_residue(e1, {f9->zero(), a1}, t);
        CHECK(r0.entries().begin()->first == f9->zero());
        CHECK(r1.entries().begin()->first == artin_schreier(a1));
    }

    SUBCASE("total multiplicity is the total size") {
        for (const auto& la : enumerate_multipartitions(2, 3)) {
            auto res = shifted_residue(la, {t, f9->parse("2*t")}, t);
            CHECK(res.total() == 3);
        }
    }

    SUBCASE("wrong shift vector length is rejected") {
        Multipartition la({Partition({1}), Partition{}});
        CHECK_THROWS_AS(shifted_residue(la, {t}, t), Error);
    }
}

TEST_CASE("residues for prime-subfield kappa depend only on component sizes") {
    auto f9 = ctx_create(3, 2);
    auto kappa = f9->from_int(1);
    std::vector<FieldElement> a = {f9->parse("t"), f9->parse("t+2")};
    auto labels = enumerate_multipartitions(2, 3);
    for (const auto& la : labels)
        for (const auto& mu : labels) {
            bool same_sizes = true;
            for (uint32_t i = 0; i < 2; ++i)
                same_sizes &= la.components()[i].size() == mu.components()[i].size();
            if (same_sizes)
                CHECK(shifted_residue(la, a, kappa) == shifted_residue(mu, a, kappa));
        }
}
