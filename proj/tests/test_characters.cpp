#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rrca/characters.hpp"

using namespace rrca;

namespace {

size_t find_label(const CharTablePtr& t, const std::string& text) {
    return t->label_index(Multipartition::parse(text));
}

void check_orthogonality(const CharTablePtr& t) {
    const auto& F = t->field();
    size_t L = t->labels().size();
    for (size_t a = 0; a < L; ++a)
        for (size_t b = 0; b < L; ++b) {
            CyclotomicNumber s = F->zero();
            for (size_t c = 0; c < L; ++c)
                s += (t->value(a, c) * t->value(b, c).conj()).scaled(BigInt(t->class_sizes()[c]));
            BigInt expect = (a == b) ? BigInt(t->group().order()) : BigInt(0);
            CHECK(s == F->from_int(expect));
        }
}

} // namespace

TEST_CASE("S_2 character table") {
    auto t = CharacterTable::build(1, 2);
    REQUIRE(t->labels().size() == 2);
    size_t triv = find_label(t, "[2]");
    size_t sgn = find_label(t, "[1,1]");
    size_t id_class = 0, swap_class = 1; // classes labeled [1,1] (identity) and [2]
    if (t->class_labels()[0] != Multipartition::parse("[1,1]")) std::swap(id_class, swap_class);
    CHECK(t->value(triv, id_class) == t->field()->one());
    CHECK(t->value(triv, swap_class) == t->field()->one());
    CHECK(t->value(sgn, swap_class) == -t->field()->one());
    CHECK(t->dim(triv) == 1);
    CHECK(t->dim(sgn) == 1);
    check_orthogonality(t);
}

TEST_CASE("C_2 character table") {
    auto t = CharacterTable::build(2, 1);
    REQUIRE(t->labels().size() == 2);
    check_orthogonality(t);
    for (size_t li = 0; li < 2; ++li) CHECK(t->dim(li) == 1);
}

TEST_CASE("S_3 standard character by Murnaghan-Nakayama") {
    auto t = CharacterTable::build(1, 3);
    size_t std_label = find_label(t, "[2,1]");
    CHECK(t->dim(std_label) == 2);
    size_t transp = 0, threecycle = 0;
    for (size_t c = 0; c < 3; ++c) {
        if (t->class_labels()[c] == Multipartition::parse("[2,1]")) transp = c;
        if (t->class_labels()[c] == Multipartition::parse("[3]")) threecycle = c;
    }
    CHECK(t->value(std_label, transp).is_zero());
    CHECK(t->value(std_label, threecycle) == t->field()->from_int(-1));
    check_orthogonality(t);
}

TEST_CASE("S_4 table matches the classical values") {
    auto t = CharacterTable::build(1, 4);
    // rows by partition, columns by class cycle type
    const std::vector<std::pair<std::string, std::vector<int>>> known = {
        {"[4]", {1, 1, 1, 1, 1}},        {"[3,1]", {3, 1, -1, 0, -1}},
        {"[2,2]", {2, 0, 2, -1, 0}},     {"[2,1,1]", {3, -1, -1, 0, 1}},
        {"[1,1,1,1]", {1, -1, 1, 1, -1}}};
    const std::vector<std::string> class_order = {"[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"};
    for (const auto& [label, vals] : known) {
        size_t li = t->label_index(Multipartition::parse(label));
        for (size_t c = 0; c < class_order.size(); ++c) {
            size_t ci = 0;
            while (t->class_labels()[ci] != Multipartition::parse(class_order[c])) ++ci;
            CHECK(t->value(li, ci) == t->field()->from_int(vals[c]));
        }
    }
}

TEST_CASE("fake degrees of the hyperoctahedral group B_2") {
    auto t = CharacterTable::build(2, 2);
    // known multiset: 1, t^2, t^2, t^4 on the linear labels, t + t^3 on
    // the two-dimensional one
    std::multiset<std::string> got;
    for (size_t li = 0; li < t->labels().size(); ++li) got.insert(t->fake_polynomial(li).str());
    std::multiset<std::string> want = {"1", "t^2", "t^2", "t^4", "t + t^3"};
    CHECK(got == want);
    for (size_t li = 0; li < t->labels().size(); ++li)
        if (t->dim(li) == 2) CHECK(t->fake_polynomial(li).str() == "t + t^3");
}

TEST_CASE("wreath table G(3,1,2) is consistent") {
    auto t = CharacterTable::build(3, 2);
    CHECK(t->labels().size() == 9);
    check_orthogonality(t);
    BigInt total = 0;
    for (size_t i = 0; i < 9; ++i) total += BigInt(t->dim(i)) * BigInt(t->dim(i));
    CHECK(total == 18);
}

TEST_CASE("fake polynomials at small rank") {
    SUBCASE("S_2") {
        auto t = CharacterTable::build(1, 2);
        CHECK(t->fake_polynomial(find_label(t, "[2]")) == LaurentPoly::one());
        CHECK(t->fake_polynomial(find_label(t, "[1,1]")) == LaurentPoly::monomial(1, 1));
    }
    SUBCASE("S_3 hook") {
        auto t = CharacterTable::build(1, 3);
        CHECK(t->fake_polynomial(find_label(t, "[2,1]")) ==
              LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, 2));
        CHECK(t->fake_polynomial(find_label(t, "[1,1,1]")) == LaurentPoly::monomial(1, 3));
    }
    SUBCASE("C_2 sign") {
        auto t = CharacterTable::build(2, 1);
        // nontrivial character of C_2 sits in degree 1 of k[x]/(x^2)
        size_t nontriv = find_label(t, "[|1]");
        CHECK(t->fake_polynomial(nontriv) == LaurentPoly::monomial(1, 1));
    }
    SUBCASE("molien consistency for G(2,1,2)") {
        auto t = CharacterTable::build(2, 2);
        LaurentPoly sum;
        for (size_t li = 0; li < t->labels().size(); ++li)
            sum += t->fake_polynomial(li).scaled(BigInt(t->dim(li)));
        CHECK(sum == t->coinvariant_series());
    }
}

TEST_CASE("p-coinvariant characters") {
    auto t = CharacterTable::build(1, 2);
    size_t triv = find_label(t, "[2]");
    auto pc = t->pcoinvariant_character(triv, 3);
    CHECK(pc == LaurentPoly::bracket(3) * LaurentPoly::bracket(3, 2));
    CHECK(pc.eval_one() == 9); // dim * p^n

    BigInt weighted = 0;
    for (size_t li = 0; li < t->labels().size(); ++li)
        weighted += t->pcoinvariant_character(li, 3).eval_one() * BigInt(t->dim(li));
    CHECK(weighted == BigInt(9 * 2)); // p^n |W|
}

TEST_CASE("I polynomial") {
    CHECK(I_poly(3, 1) == LaurentPoly::bracket(3));
    auto sq = I_poly(3, 2);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 3);
    CHECK(sq.coeff(3) == 2);
    CHECK(sq.coeff(4) == 1);
    CHECK(I_poly(5, 3).eval_one() == 125);
}

TEST_CASE("dual labels") {
    SUBCASE("symmetric groups are self-dual") {
        auto t = CharacterTable::build(1, 3);
        for (size_t li = 0; li < t->labels().size(); ++li) CHECK(t->dual_label(li) == li);
    }
    SUBCASE("C_3 swaps the two faithful characters") {
        auto t = CharacterTable::build(3, 1);
        size_t g1 = find_label(t, "[|1|]");
        size_t g2 = find_label(t, "[||1]");
        CHECK(t->dual_label(g1) == g2);
        CHECK(t->dual_label(g2) == g1);
        CHECK(t->dual_label(find_label(t, "[1||]")) == find_label(t, "[1||]"));
    }
    SUBCASE("dual is an involution on G(3,1,2)") {
        auto t = CharacterTable::build(3, 2);
        for (size_t li = 0; li < t->labels().size(); ++li)
            CHECK(t->dual_label(t->dual_label(li)) == li);
    }
}

TEST_CASE("brauer character of the p-truncated module") {
    auto t = CharacterTable::build(2, 1);
    auto g = t->group().identity();
    CHECK(t->brauer_char_V0(g, 3) == t->field()->from_int(3)); // p^n at the identity

    GroupElement refl{{0}, {1}};
    CHECK(t->brauer_char_V0(refl, 3) == t->field()->one());
    CHECK(t->brauer_char_V0(refl, 7) == t->field()->one());

    auto s2 = CharacterTable::build(1, 2);
    GroupElement transp{{1, 0}, {0, 0}};
    CHECK(s2->brauer_char_V0(s2->group().identity(), 3) == s2->field()->from_int(9));
    CHECK(s2->brauer_char_V0(transp, 3) == s2->field()->from_int(3));
}

TEST_CASE("poincare candidates and divisibility") {
    SUBCASE("trivial label is the full p-coinvariant series") {
        auto t = CharacterTable::build(2, 2);
        size_t triv = find_label(t, "[2|]");
        auto q = t->poincare_candidate(triv, 5);
        REQUIRE(q.has_value());
        CHECK(q->eval_one() == BigInt(8 * 25)); // |W| p^n
    }
    SUBCASE("S_3 hook at p = 5 divides with quotient polynomial") {
        auto t = CharacterTable::build(1, 3);
        size_t hook = find_label(t, "[2,1]");
        CHECK(t->divisibility_check(hook, 5));
        auto q = t->poincare_candidate(hook, 5);
        REQUIRE(q.has_value());
        CHECK(q->eval_one() == BigInt(6 * 125));
        CHECK(q->valuation() >= 0);
    }
    SUBCASE("sign labels are monomial and always divide") {
        auto t = CharacterTable::build(1, 4);
        size_t sgn = find_label(t, "[1,1,1,1]");
        CHECK(t->fake_polynomial(sgn) == LaurentPoly::monomial(1, 6));
        CHECK(t->divisibility_check(sgn, 5));
    }
}

TEST_CASE("budget cap rejects huge groups") {
    CHECK_THROWS_AS(CharacterTable::build(100, 3), Error);
}
