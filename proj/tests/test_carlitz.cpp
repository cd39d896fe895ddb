#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carlitz/carlitz.hpp"

using namespace carlitz;

namespace {

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng)
{
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(fe_from_index(f, (std::int64_t)(rng() % (std::uint64_t)f->size)));
    return poly_from_coeffs(f, std::move(c));
}

// independent construction of phi_a(x): iterate phi_T along the digits of a
Poly phi_by_composition(const Poly& a, const Poly& x)
{
    const FieldPtr& f = a.field;
    Poly acc = poly_zero(f);
    Poly y = x; // phi_{T^i}(x)
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i > 0) y = poly_add(poly_mul(poly_T(f), y), poly_pow(y, f->size));
        acc = poly_add(acc, poly_scale(y, a.coeffs[i]));
    }
    return acc;
}

} // namespace

TEST_CASE("basic sequences")
{
    auto f3 = build_field(3, 1);
    CHECK(seq_D(f3, 0) == poly_one(f3));
    CHECK(seq_L(f3, 0) == poly_one(f3));
    CHECK(seq_D(f3, 1) == poly_from_ints(f3, {0, 2, 0, 1})); // T^3 - T
    CHECK(seq_L(f3, 1) == poly_from_ints(f3, {0, 1, 0, 2})); // T - T^3
    CHECK(seq_L(f3, 2).degree() == 12);
    for (int i = 0; i <= 3; ++i) {
        CHECK(seq_D(f3, i).degree() == deg_D(3, i));
        CHECK(seq_L(f3, i).degree() == deg_L(3, i));
    }
}

TEST_CASE("phi_coeffs examples")
{
    auto f3 = build_field(3, 1);
    auto ct = phi_coeffs(poly_T(f3));
    REQUIRE(ct.coeffs.size() == 2);
    CHECK(ct.coeffs[0] == poly_T(f3));
    CHECK(ct.coeffs[1] == poly_one(f3));

    auto c2 = phi_coeffs(poly_from_ints(f3, {1, 0, 1})); // T^2 + 1
    REQUIRE(c2.coeffs.size() == 3);
    CHECK(c2.coeffs[0] == poly_from_ints(f3, {1, 0, 1}));
    CHECK(c2.coeffs[1] == poly_from_ints(f3, {0, 1, 0, 1})); // T^3 + T
    CHECK(c2.coeffs[2] == poly_one(f3));

    auto cc = phi_coeffs(poly_from_ints(f3, {2}));
    REQUIRE(cc.coeffs.size() == 1);
    CHECK(cc.coeffs[0] == poly_from_ints(f3, {2}));
}

TEST_CASE("closed-form oracle for Psi_k")
{
    // D_k Psi_k(a) = sum_i (D_k / (D_i L_{k-i}^{q^i})) a^{q^i}, the expansion
    // of prod_{deg b<k}(X - b) (the signs sit inside L); exact divisions
    // throughout
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(37);
    for (int k = 1; k <= 3; ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            Poly a = random_poly(f3, k + (int)(rng() % 2), rng);
            if (a.degree() < k) continue;
            Poly lhs = poly_mul(seq_D(f3, k), phi_coeffs(a).coeffs[(size_t)k]);
            Poly rhs = poly_zero(f3);
            for (int i = 0; i <= k; ++i) {
                std::int64_t qi = 1;
                for (int t = 0; t < i; ++t) qi *= 3;
                Poly den = poly_mul(seq_D(f3, i), poly_pow(seq_L(f3, k - i), qi));
                Poly term = poly_mul(poly_div_exact(seq_D(f3, k), den), poly_pow(a, qi));
                rhs = poly_add(rhs, term);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("phi_apply examples")
{
    auto f3 = build_field(3, 1);
    CHECK(phi_apply_poly(poly_T(f3), poly_one(f3)) == poly_from_ints(f3, {1, 1}));
    CHECK(phi_apply_poly(poly_shift(poly_one(f3), 2), poly_one(f3)) ==
          poly_from_ints(f3, {1, 1, 1, 1}));

    Poly P = poly_from_ints(f3, {1, 0, 1});
    Poly P2 = poly_mul(P, P);
    Poly w = phi_apply_mod(poly_sub(P, poly_one(f3)), poly_one(f3), P2);
    CHECK(w == poly_mod(poly_mul(poly_from_ints(f3, {1, 1}), P), P2));
}

TEST_CASE("phi_at_one_mod equals the generic evaluation")
{
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(3);
    Poly m = poly_from_ints(f3, {1, 0, 0, 2, 1});
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(f3, (int)(rng() % 5), rng);
        if (a.is_zero()) continue;
        CHECK(phi_at_one_mod(a, m) == phi_apply_mod(a, poly_one(f3), m));
    }
}

TEST_CASE("multiplicativity of the coefficients")
{
    // Psi_k(ab) = sum_i Psi_i(a) Psi_{k-i}(b)^{q^i}
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 100) {
        Poly a = random_poly(f3, (int)(rng() % 4), rng);
        Poly b = random_poly(f3, (int)(rng() % 4), rng);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        auto ca = phi_coeffs(a), cb = phi_coeffs(b), cab = phi_coeffs(poly_mul(a, b));
        for (int k = 0; k <= a.degree() + b.degree(); ++k) {
            Poly sum = poly_zero(f3);
            for (int i = 0; i <= k; ++i) {
                if (i > a.degree() || k - i > b.degree()) continue;
                Poly term = cb.coeffs[(size_t)(k - i)];
                for (int t = 0; t < i; ++t) term = poly_q_power(term);
                sum = poly_add(sum, poly_mul(ca.coeffs[(size_t)i], term));
            }
            CHECK(cab.coeffs[(size_t)k] == sum);
        }
    }
}

TEST_CASE("composition oracle for phi_apply")
{
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(f3, (int)(rng() % 4), rng);
        Poly x = random_poly(f3, (int)(rng() % 3), rng);
        if (a.is_zero()) continue;
        CHECK(phi_apply_poly(a, x) == phi_by_composition(a, x));
    }
}

TEST_CASE("product formula for Psi_k")
{
    // D_k Psi_k(x) = prod over the q^k polynomials a of degree < k of (x - a)
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(29);
    for (int k = 1; k <= 2; ++k) {
        for (int sample = 0; sample < 20; ++sample) {
            Poly x = random_poly(f3, k + (int)(rng() % 2), rng);
            if (x.degree() < k) continue;
            Poly lhs = poly_mul(seq_D(f3, k), phi_coeffs(x).coeffs[(size_t)k]);
            std::int64_t qk = 1;
            for (int t = 0; t < k; ++t) qk *= 3;
            Poly rhs = poly_one(f3);
            for (std::int64_t idx = 0; idx < qk; ++idx) {
                // all polynomials of degree < k, via base-q digits
                std::vector<FieldElement> c;
                std::int64_t v = idx;
                for (int t = 0; t < k; ++t) {
                    c.push_back(fe_from_index(f3, v % 3));
                    v /= 3;
                }
                rhs = poly_mul(rhs, poly_sub(x, poly_from_coeffs(f3, std::move(c))));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("additivity")
{
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(f3, (int)(rng() % 4), rng);
        Poly x = random_poly(f3, (int)(rng() % 3), rng);
        Poly y = random_poly(f3, (int)(rng() % 3), rng);
        if (a.is_zero()) continue;
        CHECK(phi_apply_poly(a, poly_add(x, y)) ==
              poly_add(phi_apply_poly(a, x), phi_apply_poly(a, y)));
    }
}

TEST_CASE("lemma3_report")
{
    auto f3 = build_field(3, 1);

    auto rT = lemma3_report(poly_T(f3));
    CHECK(rT.pass);
    CHECK(rT.head_ok);

    Poly P = poly_from_ints(f3, {1, 0, 1});
    auto rP = lemma3_report(P);
    CHECK(rP.pass);
    REQUIRE(rP.rows.size() == 2); // k = 0, 1
    for (auto& row : rP.rows) {
        CHECK(row.divisible);
        CHECK(row.congruence);
    }
    // [P,1] = T^3 + T = T * P
    CHECK(phi_coeffs(P).coeffs[1] == poly_mul(poly_T(f3), P));

    for (int d = 1; d <= 3; ++d)
        for (auto& prime : monic_irreducibles(f3, d))
            CHECK(lemma3_report(prime).pass);

    CHECK_THROWS_AS(lemma3_report(poly_from_ints(f3, {2, 0, 1})), error); // reducible
}
