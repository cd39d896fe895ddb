#include "carlitz/carlitz.hpp"

#include <map>
#include <mutex>

namespace carlitz {

namespace {

struct SeqCache {
    std::vector<Poly> D;
    std::vector<Poly> L;
};

// append-only cache behind a single lock, keyed by (p, e)
SeqCache& seq_cache(const FieldPtr& f, std::unique_lock<std::mutex>& lock)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, SeqCache> caches;
    lock = std::unique_lock<std::mutex>(mu);
    auto& c = caches[{f->p, f->e}];
    if (c.D.empty()) {
        c.D.push_back(poly_one(f));
        c.L.push_back(poly_one(f));
    }
    return c;
}

void grow(SeqCache& c, const FieldPtr& f, int i)
{
    std::int64_t q = f->size;
    while ((int)c.D.size() <= i) {
        int k = (int)c.D.size();
        // T^{q^k} - T
        std::int64_t qk = 1;
        for (int j = 0; j < k; ++j) qk *= q;
        Poly tqk = poly_shift(poly_one(f), (int)qk);
        Poly diff = poly_sub(tqk, poly_T(f));
        c.D.push_back(poly_mul(diff, poly_q_power(c.D.back())));
        c.L.push_back(poly_mul(poly_neg(diff), c.L.back()));
    }
}

} // namespace

Poly seq_D(const FieldPtr& f, int i)
{
    std::unique_lock<std::mutex> lock;
    auto& c = seq_cache(f, lock);
    grow(c, f, i);
    return c.D[i];
}

Poly seq_L(const FieldPtr& f, int i)
{
    std::unique_lock<std::mutex> lock;
    auto& c = seq_cache(f, lock);
    grow(c, f, i);
    return c.L[i];
}

std::int64_t deg_D(std::int64_t q, int i)
{
    std::int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= q;
    return i * qi;
}

std::int64_t deg_L(std::int64_t q, int i)
{
    std::int64_t qi1 = q;
    for (int j = 0; j < i; ++j) qi1 *= q;
    return (qi1 - q) / (q - 1);
}

CarlitzCoeffs phi_coeffs(const Poly& a)
{
    if (a.is_zero()) fail(errc::divide_by_zero_poly, "phi coefficients of zero");
    const FieldPtr& f = a.field;
    std::int64_t q = f->size;
    CarlitzCoeffs cc{a, {a}};
    std::int64_t qk1 = q; // q^{k+1}
    for (int k = 0; k < a.degree(); ++k) {
        const Poly& psi = cc.coeffs.back();
        Poly num = poly_sub(poly_q_power(psi), psi);
        Poly den = poly_sub(poly_shift(poly_one(f), (int)qk1), poly_T(f));
        cc.coeffs.push_back(poly_div_exact(num, den));
        qk1 *= q;
    }
    return cc;
}

Poly phi_apply_poly(const Poly& a, const Poly& x)
{
    return phi_apply(phi_coeffs(a), x, PolyAlgebra{a.field});
}

Poly phi_apply_mod(const Poly& a, const Poly& x, const Poly& modulus)
{
    ModAlgebra alg{modulus};
    return phi_apply(phi_coeffs(a), alg.from_poly(x), alg);
}

Poly phi_at_one_mod(const Poly& a, const Poly& modulus)
{
    if (a.field != modulus.field) fail(errc::algebra_mismatch, "field mismatch");
    Poly t = poly_mod(poly_one(a.field), modulus); // phi_{T^i}(1)
    Poly acc = poly_zero(a.field);
    for (int i = 0; i <= a.degree(); ++i) {
        if (i > 0) {
            Poly tq = powmod(t, a.field->size, modulus);
            t = poly_mod(poly_add(poly_mul(poly_T(a.field), t), tq), modulus);
        }
        if (!a.coeffs[i].is_zero())
            acc = poly_add(acc, poly_scale(t, a.coeffs[i]));
    }
    return poly_mod(acc, modulus);
}

Lemma3Report lemma3_report(const Poly& prime)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    int d = prime.degree();
    CarlitzCoeffs cc = phi_coeffs(prime);
    Lemma3Report rep{prime, true, {}, true};
    rep.head_ok = cc.coeffs[0] == prime && cc.coeffs[d] == poly_one(prime.field);
    rep.pass = rep.head_ok;
    for (int k = 0; k < d; ++k) {
        Lemma3Row row{k, false, false};
        auto [quot, rem] = divmod(cc.coeffs[k], prime);
        row.divisible = rem.is_zero();
        if (row.divisible) {
            Poly lhs = poly_mod(poly_mul(quot, seq_L(prime.field, k)), prime);
            row.congruence = lhs == poly_mod(poly_one(prime.field), prime);
        }
        rep.pass = rep.pass && row.divisible && row.congruence;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace carlitz
