#include "carlitz/power_sums.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carlitz {

namespace {

std::int64_t pow64(std::int64_t b, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Rational sum_range(const FieldPtr& f, int j, long i, std::int64_t lo, std::int64_t hi)
{
    if (i >= 0) {
        Poly acc = poly_zero(f);
        for (std::int64_t idx = lo; idx < hi; ++idx)
            acc = poly_add(acc, poly_pow(monic_from_index(f, j, idx), i));
        return rat_from_poly(acc);
    }
    Rational acc = rat_from_poly(poly_zero(f));
    for (std::int64_t idx = lo; idx < hi; ++idx) {
        Poly a = poly_pow(monic_from_index(f, j, idx), -i);
        acc = rat_add(acc, rat_make(poly_one(f), a));
    }
    return acc;
}

} // namespace

Rational power_sum_bruteforce(const FieldPtr& f, int j, long i, std::int64_t budget, bool parallel)
{
    std::int64_t count = pow64(f->size, j);
    if (count > budget)
        fail(errc::budget_exceeded,
             "q^j = " + std::to_string(count) + " exceeds the term budget " + std::to_string(budget));
#ifdef _OPENMP
    if (parallel && count >= 64) {
        int nthreads = omp_get_max_threads();
        std::vector<Rational> partial((size_t)nthreads, rat_from_poly(poly_zero(f)));
#pragma omp parallel num_threads(nthreads)
        {
            int t = omp_get_thread_num();
            std::int64_t lo = count * t / nthreads;
            std::int64_t hi = count * (t + 1) / nthreads;
            partial[(size_t)t] = sum_range(f, j, i, lo, hi);
        }
        // ordered merge keeps the result independent of scheduling
        Rational acc = partial[0];
        for (size_t t = 1; t < partial.size(); ++t) acc = rat_add(acc, partial[t]);
        return acc;
    }
#else
    (void)parallel;
#endif
    return sum_range(f, j, i, 0, count);
}

Rational power_sum(const FieldPtr& f, int j, long i, std::int64_t budget)
{
    std::int64_t q = f->size;
    if (j == 0) return rat_from_poly(poly_one(f)); // only a = 1
    if (i >= 0 && i <= pow64(q, j) - 2)
        return rat_from_poly(poly_zero(f));
    if (i < 0 && -i <= q - 1)
        return rat_make(poly_one(f), poly_pow(seq_L(f, j), -i));
    return power_sum_bruteforce(f, j, i, budget);
}

Poly bernoulli_goss(const FieldPtr& f, long i, std::int64_t budget)
{
    if (i < 0) fail(errc::usage_error, "B(i) needs i >= 0");
    if (i == 0) return poly_one(f);
    std::int64_t q = f->size;
    bool weighted = (i % (q - 1) == 0);
    Rational acc = rat_from_poly(poly_zero(f));
    std::int64_t qj = 1;
    for (int j = 0; qj - 2 < i; ++j, qj *= q) {
        Rational s = power_sum(f, j, i, budget);
        if (weighted) {
            // weight j enters as an element of F_p
            s = rat_mul(s, rat_from_poly(poly_from_ints(f, {j})));
        }
        acc = rat_add(acc, s);
    }
    if (!acc.is_polynomial())
        fail(errc::non_integral_result, "B(i) evaluated to a non-polynomial: " + rat_to_string(acc));
    return acc.num;
}

Poly bernoulli_goss_mod(const FieldPtr& f, long i, const Poly& modulus)
{
    if (i < 0) fail(errc::usage_error, "B(i) needs i >= 0");
    if (i == 0) return poly_mod(poly_one(f), modulus);
    std::int64_t q = f->size;
    bool weighted = (i % (q - 1) == 0);
    Poly acc = poly_zero(f);
    std::int64_t qj = 1;
    for (int j = 0; qj - 2 < i; ++j, qj *= q) {
        // S_j(i) mod M, term by term via powmod
        Poly layer = poly_zero(f);
        std::int64_t count = pow64(q, j);
        for (std::int64_t idx = 0; idx < count; ++idx)
            layer = poly_add(layer, powmod(monic_from_index(f, j, idx), i, modulus));
        layer = poly_mod(layer, modulus);
        if (weighted) layer = poly_scale(layer, fe_from_int(f, j));
        acc = poly_mod(poly_add(acc, layer), modulus);
    }
    return acc;
}

bool lemma1_check(const Poly& prime, long c)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    const FieldPtr& f = prime.field;
    std::int64_t q = f->size;
    if (c < 2 || c > q - 1)
        fail(errc::c_out_of_range, "c must lie in {2, .., q-1}");
    int d = prime.degree();
    long i = (long)(pow64(q, d) - c);
    Poly lhs = poly_mod(bernoulli_goss(f, i), prime);
    Poly rhs = poly_zero(f);
    for (int k = 0; k < d; ++k) {
        Poly lk = poly_mod(seq_L(f, k), prime);
        Poly inv = powmod(lk, pow64(q, d) - 2, prime); // modular inverse
        rhs = poly_mod(poly_add(rhs, powmod(inv, c - 1, prime)), prime);
    }
    return lhs == rhs;
}

bool corollary1_check(const Poly& prime)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    const FieldPtr& f = prime.field;
    int d = prime.degree();
    Poly p2 = poly_mul(prime, prime);
    Poly pm1 = poly_sub(prime, poly_one(f));
    Poly lhs = phi_apply_mod(pm1, poly_one(f), p2);
    long i = (long)(pow64(f->size, d) - 2);
    Poly b = bernoulli_goss(f, i);
    Poly rhs = poly_mod(poly_mul(prime, b), p2);
    return lhs == rhs;
}

} // namespace carlitz
