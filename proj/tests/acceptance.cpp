// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>
#include <exception>

#include "carlitz/laurent.hpp"
#include "carlitz/padic.hpp"
#include "carlitz/power_sums.hpp"
#include "carlitz/wieferich.hpp"

using namespace carlitz;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok)
{
    std::printf("criterion %2d %-34s %s\n", id, name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

FieldPtr field_q(int q)
{
    switch (q) {
    case 3: return build_field(3, 1);
    case 4: return build_field(2, 2, true);
    case 5: return build_field(5, 1);
    case 8: return build_field(2, 3, true);
    case 9: return build_field(3, 2);
    default: fail(errc::usage_error, "unsupported q");
    }
}

// 1 + T - T^q
Poly v2_expected(const FieldPtr& f)
{
    Poly r = poly_add(poly_one(f), poly_T(f));
    return poly_sub(r, poly_shift(poly_one(f), (int)f->size));
}

bool c1_v2_identity()
{
    for (int q : {3, 4, 5})
        if (V_poly(field_q(q), 2) != v2_expected(field_q(q))) return false;
    return true;
}

bool c2_degree2_census()
{
    for (int q : {3, 5, 9, 4, 8}) {
        auto rep = wieferich_primes(field_q(q), 2, 7, true);
        std::int64_t expect = (q % 2 == 0) ? q / 2 : 0;
        if (rep.M != expect) return false;
        for (auto& cert : rep.primes)
            if (!cert.direct_ok || !cert.bernoulli_ok) return false;
    }
    return true;
}

bool c3_lemma3()
{
    auto f3 = field_q(3);
    for (int d = 1; d <= 4; ++d)
        for (auto& P : monic_irreducibles(f3, d))
            if (!lemma3_report(P).pass) return false;
    auto f5 = field_q(5);
    for (int d = 1; d <= 2; ++d)
        for (auto& P : monic_irreducibles(f5, d))
            if (!lemma3_report(P).pass) return false;
    return true;
}

bool c4_corollary1()
{
    for (int q : {3, 4}) {
        auto f = field_q(q);
        for (int d = 1; d <= 3; ++d)
            for (auto& P : monic_irreducibles(f, d))
                if (!corollary1_check(P)) return false;
    }
    return true;
}

bool c5_lemma1()
{
    for (int q : {3, 5}) {
        auto f = field_q(q);
        for (int d = 1; d <= 3; ++d)
            for (auto& P : monic_irreducibles(f, d))
                for (long c = 2; c <= q - 1; ++c)
                    if (!lemma1_check(P, c)) return false;
    }
    return true;
}

bool c6_power_sum_closed_forms()
{
    auto f3 = field_q(3);
    for (int k = 0; k <= 2; ++k) {
        long qk = 1;
        for (int t = 0; t < k; ++t) qk *= 3;
        for (long c = 1; c <= 2; ++c) {
            Rational expect = (k == 0) ? rat_from_poly(poly_one(f3))
                                       : rat_inv(rat_pow(rat_from_poly(seq_L(f3, k)), c));
            if (power_sum(f3, k, -c) != expect) return false;
            if (power_sum_bruteforce(f3, k, -c) != expect) return false;
        }
        if (k == 0) continue;
        for (long i = 0; i <= qk - 2; ++i)
            if (!power_sum_bruteforce(f3, k, i).is_zero()) return false;
    }
    return true;
}

bool c7_zeta_a1()
{
    auto f3 = field_q(3);
    for (int j = 0; j <= 3; ++j)
        if (power_sum_bruteforce(f3, j, -1) != rat_inv(rat_from_poly(seq_L(f3, j))))
            return false;
    return laurent_eq(zeta_A1(f3, 40), log_C_eval(laurent_const(fe_one(f3), 40)), 40);
}

bool c8_zeta_an_regulator()
{
    struct Case {
        int q, n;
    };
    for (auto [q, n] : {Case{3, 2}, {3, 3}, {4, 2}}) {
        auto f = field_q(q);
        auto z = zeta_An(f, n, 20, 3);
        Laurent r = regulator_An(f, n, 20); // descent asserted inside
        if (!laurent_eq(z.value, r, 20)) return false;
    }
    return true;
}

bool c9_lemma4()
{
    auto f4 = field_q(4);
    FieldElement w = fe_from_coords(f4, {0, 1});
    Poly P = poly_from_coeffs(f4, {w, fe_one(f4), fe_one(f4)});
    auto sol = lemma4_solve(P, 4);
    if (!sol.solvable || !sol.solution || !sol.substitution_verified) return false;
    Poly P4 = poly_pow(P, 4);
    if (!poly_mod(poly_sub(phi_apply_mod(P, *sol.solution, P4), sol.w), P4).is_zero())
        return false;

    auto f3 = field_q(3);
    auto obs = lemma4_solve(poly_from_ints(f3, {1, 0, 1}), 4);
    return !obs.solvable && obs.eisenstein && obs.w_valuation == 1;
}

bool c10_lemma8()
{
    auto f3 = field_q(3);
    for (int d = 1; d <= 2; ++d)
        for (auto& P : monic_irreducibles(f3, d))
            for (int n = 1; n <= 3; ++n) {
                auto rep = module_structure_check(P, n, 6561);
                if (!rep.pass) return false;
            }
    return true;
}

bool c11_lemma7_bounds()
{
    auto table = counts_table(field_q(3), 5, 11);
    for (auto& row : table)
        if (!row.bound_ok || !row.m_bound_ok) return false;
    return true;
}

bool c12_cross_test()
{
    for (int q : {3, 4}) {
        auto f = field_q(q);
        for (int d = 1; d <= 3; ++d) {
            Poly v = V_poly(f, d);
            std::int64_t qd = 1;
            for (int t = 0; t < d; ++t) qd *= q;
            for (auto& P : monic_irreducibles(f, d)) {
                bool via_v = poly_mod(v, P).is_zero();
                bool direct = is_wieferich(P);
                bool via_b = bernoulli_goss_mod(f, (long)(qd - 2), P).is_zero();
                if (via_v != direct || direct != via_b) return false;
            }
        }
    }
    return true;
}

bool c13_degree_p_remark()
{
    auto r9 = degree_p_construction(field_q(9), 5);
    if (!r9.roots_in_Fq || !r9.count_ok || !r9.lemma_congruences_ok) return false;
    if ((std::int64_t)r9.primes.size() < 6) return false;
    for (auto& cert : r9.primes)
        if (cert.prime.degree() != 3 || !cert.direct_ok || !cert.bernoulli_ok) return false;

    auto r3 = degree_p_construction(field_q(3), 5);
    return !r3.roots_in_Fq && r3.primes.empty();
}

bool guard(bool (*fn)())
{
    try {
        return fn();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "  exception: %s\n", e.what());
        return false;
    }
}

} // namespace

int main()
{
    report(1, "V(2) identity", guard(c1_v2_identity));
    report(2, "degree-2 Wieferich census", guard(c2_degree2_census));
    report(3, "Lemma 3 congruences", guard(c3_lemma3));
    report(4, "Corollary 1", guard(c4_corollary1));
    report(5, "Lemma 1", guard(c5_lemma1));
    report(6, "power-sum closed forms", guard(c6_power_sum_closed_forms));
    report(7, "zeta_A(1) = log_C(1)", guard(c7_zeta_a1));
    report(8, "zeta_An = regulator_An", guard(c8_zeta_an_regulator));
    report(9, "Lemma 4 solver/obstruction", guard(c9_lemma4));
    report(10, "Lemma 8 module structure", guard(c10_lemma8));
    report(11, "Lemma 7 count bounds", guard(c11_lemma7_bounds));
    report(12, "Wieferich cross-test", guard(c12_cross_test));
    report(13, "degree-p construction", guard(c13_degree_p_remark));
    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures ? 1 : 0;
}
