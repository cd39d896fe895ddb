#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "carlitz/field.hpp"

using namespace carlitz;

TEST_CASE("build_field picks the lexicographically smallest modulus")
{
    CHECK(build_field(3, 1)->modulus == std::vector<int>{0, 1});
    CHECK(build_field(2, 2, true)->modulus == std::vector<int>{1, 1, 1});
    CHECK(build_field(3, 2)->modulus == std::vector<int>{1, 0, 1}); // u^2 + 1
}

TEST_CASE("build_field rejects bad input")
{
    CHECK_THROWS_AS(build_field(4, 1), error);
    CHECK_THROWS_AS(build_field(2, 1), error); // q = 2 without the flag
    CHECK(build_field(2, 1, true)->outside_standard_hypotheses);
}

TEST_CASE("rebuilds are identical")
{
    auto a = build_field(5, 2);
    auto b = build_field(5, 2);
    CHECK(a->modulus == b->modulus);
    CHECK(a->size == 25);
}

TEST_CASE("field axioms and Fermat on exhaustive small fields")
{
    for (auto [p, e] : {std::pair{3, 1}, {3, 2}, {2, 2}, {5, 1}}) {
        auto f = build_field(p, e, true);
        for (std::int64_t i = 0; i < f->size; ++i) {
            FieldElement x = fe_from_index(f, i);
            CHECK(fe_pow(x, f->size) == x); // x^q = x
            CHECK(fe_add(x, fe_neg(x)).is_zero());
            if (!x.is_zero()) CHECK(fe_mul(x, fe_inv(x)).is_one());
        }
    }
}

TEST_CASE("frobenius")
{
    auto f4 = build_field(2, 2, true);
    FieldElement w = fe_from_coords(f4, {0, 1}); // omega
    CHECK(frobenius(w, 1) == fe_add(w, fe_one(f4))); // omega^2 = omega + 1

    auto f9 = build_field(3, 2);
    for (std::int64_t i = 0; i < 9; ++i) {
        FieldElement x = fe_from_index(f9, i);
        CHECK(frobenius(x, 2) == x); // full q-power fixes F_9
        // t = 4 wraps: x^81 = x, oracle by repeated squaring
        FieldElement y = x;
        for (int k = 0; k < 4; ++k) y = fe_pow(y, 3);
        CHECK(frobenius(x, 4) == y);
    }
}

TEST_CASE("embed into F_9")
{
    auto f3 = build_field(3, 1);
    auto f9 = build_field(3, 2);
    CHECK(embed(fe_one(f3), f9).is_one());
    CHECK(embed(fe_zero(f3), f9).is_zero());
    // generator of F_3^* has order 2 upstairs too
    FieldElement g = embed(fe_from_int(f3, 2), f9);
    CHECK(!g.is_one());
    CHECK(fe_mul(g, g).is_one());

    // homomorphism on the exhaustive source
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) {
            FieldElement a = fe_from_index(f3, i), b = fe_from_index(f3, j);
            CHECK(embed(fe_add(a, b), f9) == fe_add(embed(a, f9), embed(b, f9)));
            CHECK(embed(fe_mul(a, b), f9) == fe_mul(embed(a, f9), embed(b, f9)));
        }
}

TEST_CASE("embed commutes with frobenius by e steps")
{
    auto f9 = build_field(3, 2);
    auto f81 = build_field(3, 4);
    for (std::int64_t i = 0; i < 9; ++i) {
        FieldElement x = fe_from_index(f9, i);
        CHECK(embed(frobenius(x, 2), f81) == frobenius(embed(x, f81), 2));
    }
}

TEST_CASE("descend inverts embed and flags non-members")
{
    auto f3 = build_field(3, 1);
    auto f9 = build_field(3, 2);
    for (std::int64_t i = 0; i < 3; ++i) {
        FieldElement x = fe_from_index(f3, i);
        CHECK(descend(embed(x, f9), f3) == x);
    }
    // an element of F_9 outside F_3 cannot descend
    for (std::int64_t i = 0; i < 9; ++i) {
        FieldElement x = fe_from_index(f9, i);
        if (!in_subfield(x, f3)) {
            CHECK_THROWS_AS(descend(x, f3), error);
            return;
        }
    }
    FAIL("no element outside F_3 found");
}

TEST_CASE("roots_of_unity")
{
    auto f3 = build_field(3, 1);

    auto r1 = roots_of_unity(1, f3);
    CHECK(r1.roots.size() == 1);
    CHECK(r1.roots[0].is_one());

    auto r2 = roots_of_unity(2, f3);
    CHECK(r2.field->size == 3);
    REQUIRE(r2.roots.size() == 2);
    CHECK(r2.roots[0].is_one());
    CHECK(r2.roots[1] == fe_from_int(f3, 2));

    auto r4 = roots_of_unity(4, f3); // N = ord_4(3) = 2
    CHECK(r4.field->size == 9);
    REQUIRE(r4.roots.size() == 4);
    std::set<std::int64_t> seen;
    for (auto& z : r4.roots) {
        FieldElement z2 = fe_mul(z, z);
        CHECK(fe_mul(z2, z2).is_one());
        seen.insert(fe_to_index(z));
    }
    CHECK(seen.size() == 4);
    // closed under multiplication
    for (auto& a : r4.roots)
        for (auto& b : r4.roots)
            CHECK(seen.count(fe_to_index(fe_mul(a, b))) == 1);

    CHECK_THROWS_AS(roots_of_unity(3, f3), error); // gcd(m, p) != 1
}

TEST_CASE("index round trip is the lexicographic order")
{
    auto f9 = build_field(3, 2);
    for (std::int64_t i = 0; i < 9; ++i)
        CHECK(fe_to_index(fe_from_index(f9, i)) == i);
    // c0 is the most significant digit
    CHECK(fe_from_index(f9, 1).coords == std::vector<int>{0, 1});
    CHECK(fe_from_index(f9, 3).coords == std::vector<int>{1, 0});
}
