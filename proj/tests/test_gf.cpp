#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rrca/gf.hpp"

using namespace rrca;

TEST_CASE("context selection picks the smallest irreducible modulus") {
    auto f3 = ctx_create(3, 1);
    CHECK(f3->modulus() == std::vector<uint32_t>{0, 1}); // t
    auto f9 = ctx_create(3, 2);
    CHECK(f9->modulus() == std::vector<uint32_t>{1, 0, 1}); // t^2 + 1
    auto f25 = ctx_create(5, 2);
    // t^2 + c has no root first for c = 2 over F_5 (squares are 0,1,4)
    CHECK(f25->modulus() == std::vector<uint32_t>{2, 0, 1});
}

TEST_CASE("non-prime and even characteristics are rejected") {
    CHECK_THROWS_AS(ctx_create(4, 1), Error);
    CHECK_THROWS_AS(ctx_create(2, 3), Error);
    try {
        ctx_create(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime);
    }
}

TEST_CASE("user modulus must be monic irreducible of the right degree") {
    CHECK_THROWS_AS(ctx_create(3, 2, std::string("t^2+2")), Error); // t^2-1 = (t-1)(t+1)
    auto ok = ctx_create(3, 2, std::string("t^2+t+2"));
    CHECK(ok->q() == 9);
}

TEST_CASE("arithmetic and parsing round trip") {
    auto f9 = ctx_create(3, 2);
    auto t = f9->parse("t");
    auto e = f9->parse("2*t+1");
    CHECK(e == t.scaled(2) + f9->one());
    CHECK(e.str() == "2*t+1");
    CHECK((t * t).str() == "2"); // t^2 = -1
    CHECK((e / e) == f9->one());
    CHECK_THROWS_AS(f9->parse("2*+1"), Error);
    CHECK_THROWS_AS(f9->parse(""), Error);
    CHECK(f9->parse("t^2") == f9->from_int(-1));
}

TEST_CASE("artin-schreier examples") {
    auto f3 = ctx_create(3, 1);
    CHECK(artin_schreier(f3->from_int(2)).is_zero());
    auto f9 = ctx_create(3, 2);
    auto t = f9->parse("t");
    CHECK(artin_schreier(t) == t); // t^3 - t = t over F_9 with t^2 = -1
    CHECK(artin_schreier(f9->zero()).is_zero());
}

TEST_CASE("prime subfield membership") {
    auto f9 = ctx_create(3, 2);
    CHECK(in_prime_subfield(f9->from_int(2)));
    CHECK_FALSE(in_prime_subfield(f9->parse("t")));
    auto f3 = ctx_create(3, 1);
    for (int v = 0; v < 3; ++v) CHECK(in_prime_subfield(f3->from_int(v)));
}

TEST_CASE("primitive roots of unity") {
    auto f3 = ctx_create(3, 1);
    CHECK(primitive_root_of_unity(f3, 2) == f3->from_int(2));
    CHECK_THROWS_AS(primitive_root_of_unity(f3, 4), Error);

    auto f9 = ctx_create(3, 2);
    auto eta = primitive_root_of_unity(f9, 4);
    CHECK(eta * eta == f9->from_int(-1));
    CHECK(multiplicative_order(eta) == 4);

    // powers pairwise distinct
    for (uint64_t m : {2ull, 4ull, 8ull}) {
        auto z = primitive_root_of_unity(f9, m);
        std::set<std::vector<uint32_t>> seen;
        for (uint64_t j = 0; j < m; ++j) seen.insert(z.pow(j).coeffs());
        CHECK(seen.size() == m);
    }
}

TEST_CASE("min_extension_degree finds the least field with the roots") {
    CHECK(min_extension_degree(3, 2) == 1);
    CHECK(min_extension_degree(3, 4) == 2);
    CHECK(min_extension_degree(3, 5) == 4);  // ord of 3 mod 5
    CHECK(min_extension_degree(7, 3) == 1);  // 3 | 6
    CHECK_THROWS_AS(min_extension_degree(3, 9), Error);
}

TEST_CASE("artin-schreier is additive with kernel F_p, exhaustively") {
    for (uint32_t r : {1u, 2u, 4u}) {
        auto ctx = ctx_create(3, r);
        uint64_t q = ctx->q();
        uint32_t kernel = 0;
        for (uint64_t i = 0; i < q; ++i) {
            auto a = ctx->element_at(i);
            if (artin_schreier(a).is_zero()) ++kernel;
        }
        CHECK(kernel == 3);
        if (q <= 81) {
            for (uint64_t i = 0; i < q; ++i)
                for (uint64_t j = 0; j < q; ++j) {
                    auto a = ctx->element_at(i), b = ctx->element_at(j);
                    CHECK(artin_schreier(a + b) == artin_schreier(a) + artin_schreier(b));
                }
        }
    }
}

TEST_CASE("frobenius is a ring map fixing exactly the prime subfield") {
    auto ctx = ctx_create(3, 2);
    uint64_t q = ctx->q();
    uint32_t fixed = 0;
    for (uint64_t i = 0; i < q; ++i) {
        auto a = ctx->element_at(i);
        if (a.frobenius() == a) ++fixed;
        for (uint64_t j = 0; j < q; ++j) {
            auto b = ctx->element_at(j);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
    }
    CHECK(fixed == 3);
}

TEST_CASE("formatting and parsing are inverse over all of F_81") {
    auto ctx = ctx_create(3, 4);
    for (uint64_t k = 0; k < ctx->q(); ++k) {
        auto a = ctx->element_at(k);
        CHECK(ctx->parse(a.str()) == a);
    }
}

TEST_CASE("mixing contexts is an error") {
    auto f9a = ctx_create(3, 2);
    auto f9b = ctx_create(3, 2, std::string("t^2+t+2"));
    CHECK_THROWS_AS((void)(f9a->one() + f9b->one()), Error);
    // same presentation created twice is compatible
    auto f9c = ctx_create(3, 2);
    CHECK(f9a->one() + f9c->one() == f9a->from_int(2));
}
