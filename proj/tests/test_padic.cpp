#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carlitz/padic.hpp"
#include "carlitz/wieferich.hpp"

using namespace carlitz;

namespace {

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng)
{
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(fe_from_index(f, (std::int64_t)(rng() % (std::uint64_t)f->size)));
    return poly_from_coeffs(f, std::move(c));
}

} // namespace

TEST_CASE("closed-form valuations of L_i and D_i")
{
    auto f3 = build_field(3, 1);
    for (int d : {1, 2, 3}) {
        // the closed forms against direct division by cached primes
        Poly P = monic_irreducibles(f3, d)[0];
        for (int i = 0; i <= 3 * d; ++i) {
            auto v = vP_of_sequences(3, i, d);
            auto count = [&](Poly x) {
                long n = 0;
                while (!x.is_zero() && poly_mod(x, P).is_zero()) {
                    x = poly_div_exact(x, P);
                    ++n;
                }
                return n;
            };
            CHECK(v.vL == count(seq_L(f3, i)));
            CHECK(v.vD == count(seq_D(f3, i)));
            CHECK(v.vD_num % v.vD_den == 0); // always integral
        }
    }
    auto v = vP_of_sequences(3, 1, 2);
    CHECK(v.vL == 0);
    CHECK(v.vD == 0);
    CHECK(vP_of_sequences(3, 2, 2).vL == 1);
    CHECK(vP_of_sequences(3, 4, 2).vL == 2);
}

TEST_CASE("padic arithmetic and valuation bookkeeping")
{
    auto f3 = build_field(3, 1);
    Poly P = poly_from_ints(f3, {1, 0, 1});
    auto ctx = PadicCtx::make(P, 4);

    PadicElement p1 = padic_make(ctx, P);
    CHECK(p1.val == 1);
    PadicElement p2 = padic_mul(p1, p1);
    CHECK(p2.val == 2);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(f3, (int)(rng() % 6), rng);
        Poly b = random_poly(f3, (int)(rng() % 6), rng);
        PadicElement x = padic_make(ctx, a), y = padic_make(ctx, b);
        PadicElement xy = padic_mul(x, y);
        if (x.val + y.val < 4) CHECK(xy.val == x.val + y.val);
        CHECK(padic_sub(padic_add(x, y), y).residue == x.residue);
    }

    // exact division by P^k drops precision
    PadicElement q = padic_div_Pk(p2, 1);
    CHECK(q.val == 1);
    CHECK(q.ctx->n == 3);
    CHECK_THROWS_AS(padic_div_Pk(padic_make(ctx, poly_one(f3)), 1), error);
}

TEST_CASE("inv_mod")
{
    auto f3 = build_field(3, 1);
    Poly m = poly_from_ints(f3, {1, 0, 0, 0, 1});
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(f3, (int)(rng() % 4), rng);
        if (a.is_zero() || !poly_gcd(a, m).is_constant()) continue;
        CHECK(poly_mod(poly_mul(a, inv_mod(a, m)), m) == poly_one(f3));
    }
}

TEST_CASE("log_C_P and e_C_P")
{
    auto f3 = build_field(3, 1);
    Poly P = poly_from_ints(f3, {1, 0, 1});
    auto ctx = PadicCtx::make(P, 3);

    CHECK(log_C_P(padic_zero(ctx)).is_zero());
    CHECK(e_C_P(padic_zero(ctx)).is_zero());

    // x = P mod P^3: log is P times a unit
    PadicElement lp = log_C_P(padic_make(ctx, P));
    CHECK(lp.val == 1);

    CHECK_THROWS_AS(log_C_P(padic_make(ctx, poly_one(f3))), error); // val 0

    // round trips and valuation preservation on random val-1 elements
    auto ctx4 = PadicCtx::make(P, 4);
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 50) {
        Poly a = random_poly(f3, (int)(rng() % 5), rng);
        PadicElement x = padic_make(ctx4, poly_mul(P, poly_add(poly_one(f3), poly_mul(P, a))));
        if (x.val != 1) continue;
        ++done;
        CHECK(log_C_P(x).val == 1);
        CHECK(e_C_P(x).val == 1);
        CHECK(e_C_P(log_C_P(x)).residue == x.residue);
        CHECK(log_C_P(e_C_P(x)).residue == x.residue);
    }
}

TEST_CASE("lemma4_solve")
{
    auto f3 = build_field(3, 1);

    // P = T^2 + 1 is not Wieferich: Eisenstein obstruction at valuation 1
    auto r1 = lemma4_solve(poly_from_ints(f3, {1, 0, 1}), 4);
    CHECK(!r1.solvable);
    CHECK(r1.w_valuation == 1);
    CHECK(r1.eisenstein);

    // P = T: w = T, valuation 1
    auto rT = lemma4_solve(poly_T(f3), 3);
    CHECK(!rT.solvable);
    CHECK(rT.w_valuation == 1);

    // q = 4, P = T^2 + T + w is Wieferich: solver returns a verified solution
    auto f4 = build_field(2, 2, true);
    FieldElement w = fe_from_coords(f4, {0, 1});
    Poly P = poly_from_coeffs(f4, {w, fe_one(f4), fe_one(f4)});
    auto r2 = lemma4_solve(P, 4);
    CHECK(r2.solvable);
    CHECK(r2.w_valuation >= 2);
    REQUIRE(r2.solution.has_value());
    CHECK(r2.substitution_verified);
    Poly P4 = poly_pow(P, 4);
    CHECK(poly_mod(poly_sub(phi_apply_mod(P, *r2.solution, P4), r2.w), P4).is_zero());
}

TEST_CASE("lemma4 biconditional against V(d) divisibility")
{
    for (auto [p, e] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
        auto f = build_field(p, e, true);
        for (int d = 1; d <= 2; ++d) {
            Poly v = V_poly(f, d);
            for (auto& P : monic_irreducibles(f, d)) {
                bool divides = poly_mod(v, P).is_zero();
                auto r = lemma4_solve(P, 3);
                CHECK(r.solvable == divides);
            }
        }
    }
}

TEST_CASE("module_structure_check")
{
    auto f3 = build_field(3, 1);

    auto r1 = module_structure_check(poly_T(f3), 1);
    CHECK(r1.pass);
    CHECK(r1.annihilator == poly_from_ints(f3, {2, 1})); // T - 1

    auto r2 = module_structure_check(poly_T(f3), 2);
    CHECK(r2.pass);
    CHECK(r2.annihilator == poly_mul(poly_T(f3), poly_from_ints(f3, {2, 1})));

    auto r3 = module_structure_check(poly_from_ints(f3, {1, 0, 1}), 1);
    CHECK(r3.pass);
    CHECK(r3.annihilator == poly_from_ints(f3, {0, 0, 1})); // P - 1 = T^2
    CHECK(r3.exhaustive);

    for (int d = 1; d <= 2; ++d)
        for (auto& P : monic_irreducibles(f3, d))
            for (int n = 1; n <= 3; ++n)
                CHECK(module_structure_check(P, n).pass);
}

TEST_CASE("lemma 8 proof step: v_P(phi_P(a)) = 1 + v_P(a) on PA")
{
    auto f3 = build_field(3, 1);
    std::mt19937_64 rng(31);
    for (int d = 1; d <= 3; ++d) {
        for (auto& P : monic_irreducibles(f3, d)) {
            auto ctx = PadicCtx::make(P, 5);
            int done = 0;
            while (done < 100) {
                Poly a = poly_mul(P, random_poly(f3, (int)(rng() % 5), rng));
                PadicElement x = padic_make(ctx, a);
                if (x.val < 1 || x.val >= 4) continue;
                ++done;
                PadicElement y = padic_make(ctx, phi_apply_poly(P, a));
                CHECK(y.val == x.val + 1);
            }
        }
    }
}

TEST_CASE("corollary3_search")
{
    auto f3 = build_field(3, 1);
    CHECK(!corollary3_search(poly_from_ints(f3, {1, 0, 1}), 4).has_value());
    CHECK(!corollary3_search(poly_T(f3), 3).has_value());

    auto f4 = build_field(2, 2, true);
    FieldElement w = fe_from_coords(f4, {0, 1});
    Poly P = poly_from_coeffs(f4, {w, fe_one(f4), fe_one(f4)});
    auto a = corollary3_search(P, 2);
    REQUIRE(a.has_value());
    CHECK(!poly_mod(*a, P).is_zero()); // a not in PA
    Poly P2 = poly_mul(P, P);
    CHECK(phi_apply_mod(*a, poly_one(f4), P2).is_zero());
}
