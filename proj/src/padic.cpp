#include "carlitz/padic.hpp"

#include <random>

namespace carlitz {

std::shared_ptr<const PadicCtx> PadicCtx::make(const Poly& prime, int n)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    if (n < 1) fail(errc::usage_error, "precision exponent must be >= 1");
    auto ctx = std::make_shared<PadicCtx>();
    ctx->P = prime;
    ctx->d = prime.degree();
    ctx->n = n;
    ctx->Pn = poly_pow(prime, n);
    return ctx;
}

namespace {

int residue_valuation(const PadicCtx& ctx, const Poly& residue)
{
    if (residue.is_zero()) return ctx.n;
    int v = 0;
    Poly r = residue;
    while (true) {
        auto [q, rem] = divmod(r, ctx.P);
        if (!rem.is_zero()) return v;
        r = q;
        ++v;
        if (v >= ctx.n) return ctx.n;
    }
}

} // namespace

PadicElement padic_make(const PadicCtxPtr& ctx, const Poly& value)
{
    Poly r = poly_mod(value, ctx->Pn);
    int v = residue_valuation(*ctx, r);
    return {ctx, std::move(r), v};
}

PadicElement padic_zero(const PadicCtxPtr& ctx)
{
    return {ctx, poly_zero(ctx->P.field), ctx->n};
}

namespace {

PadicCtxPtr common_ctx(const PadicElement& a, const PadicElement& b)
{
    if (a.ctx == b.ctx) return a.ctx;
    if (a.ctx->P != b.ctx->P) fail(errc::algebra_mismatch, "P-adic elements over different primes");
    // mixed precision truncates to the minimum
    return a.ctx->n <= b.ctx->n ? a.ctx : b.ctx;
}

} // namespace

PadicElement padic_truncate(const PadicElement& a, int n)
{
    if (n == a.ctx->n) return a;
    if (n > a.ctx->n) fail(errc::usage_error, "cannot raise P-adic precision");
    auto ctx = PadicCtx::make(a.ctx->P, n);
    return padic_make(ctx, a.residue);
}

PadicElement padic_add(const PadicElement& a, const PadicElement& b)
{
    auto ctx = common_ctx(a, b);
    return padic_make(ctx, poly_add(a.residue, b.residue));
}

PadicElement padic_sub(const PadicElement& a, const PadicElement& b)
{
    auto ctx = common_ctx(a, b);
    return padic_make(ctx, poly_sub(a.residue, b.residue));
}

PadicElement padic_mul(const PadicElement& a, const PadicElement& b)
{
    auto ctx = common_ctx(a, b);
    return padic_make(ctx, poly_mul(a.residue, b.residue));
}

PadicElement padic_q_power(const PadicElement& a)
{
    return padic_make(a.ctx, powmod(a.residue, a.ctx->P.field->size, a.ctx->Pn));
}

PadicElement padic_div_Pk(const PadicElement& a, int k)
{
    if (k == 0) return a;
    if (a.val < k) fail(errc::unexpected_valuation, "exact division by P^k needs v_P >= k");
    auto ctx = PadicCtx::make(a.ctx->P, a.ctx->n - k);
    if (a.residue.is_zero()) return padic_zero(ctx);
    return padic_make(ctx, poly_div_exact(a.residue, poly_pow(a.ctx->P, k)));
}

Poly inv_mod(const Poly& u, const Poly& modulus)
{
    // extended Euclid: r0 = modulus, r1 = u
    Poly r0 = modulus, r1 = poly_mod(u, modulus);
    Poly s0 = poly_zero(u.field), s1 = poly_one(u.field);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r0.degree() != 0)
        fail(errc::divide_by_zero_poly, "element is not a unit modulo the given modulus");
    return poly_mod(poly_scale(s0, fe_inv(r0.coeffs[0])), modulus);
}

SeqValuations vP_of_sequences(std::int64_t q, int i, int d)
{
    if (i < 0 || d < 1) fail(errc::usage_error, "need i >= 0, d >= 1");
    SeqValuations out{};
    out.vL = i / d;
    std::int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= q;
    std::int64_t qr = 1;
    for (int j = 0; j < i - (i / d) * d; ++j) qr *= q;
    std::int64_t qd = 1;
    for (int j = 0; j < d; ++j) qd *= q;
    out.vD_num = qi - qr;
    out.vD_den = qd - 1;
    if (out.vD_num % out.vD_den != 0)
        fail(errc::unexpected_valuation, "v_P(D_i) failed to be integral");
    out.vD = out.vD_num / out.vD_den;
    return out;
}

namespace {

// shared implementation of the two P-adic series, differing only in the
// denominator sequence and its valuation
PadicElement padic_series(const PadicElement& x, bool is_log)
{
    const auto& ctx = *x.ctx;
    if (x.val < 1) fail(errc::not_in_domain, "series argument needs v_P >= 1");
    const FieldPtr& f = ctx.P.field;
    std::int64_t q = f->size;
    int n = ctx.n;

    // find the included indices and the valuation headroom we need
    std::vector<int> included;
    int max_shift = 0;
    std::int64_t qi = 1;
    for (int i = 0;; ++i) {
        auto vals = vP_of_sequences(q, i, ctx.d);
        long shift = is_log ? vals.vL : vals.vD;
        long term_val = qi * x.val - shift;
        if (term_val < n) {
            included.push_back(i);
            max_shift = std::max(max_shift, (int)shift);
        } else if (qi * x.val >= n + shift || i > 64) {
            break;
        }
        qi *= q;
    }

    int work = n + max_shift;
    auto wctx = PadicCtx::make(ctx.P, work);
    PadicElement xw = padic_make(wctx, x.residue); // valid: residue known mod P^n only...
    // The caller's residue is only known mod P^n; every term we keep has the
    // unknown part multiplied into valuation >= n, so computing in A/P^work
    // and truncating back to n at the end is sound.
    PadicElement acc = padic_zero(wctx);
    PadicElement xq = xw;
    for (size_t idx = 0; idx < included.size(); ++idx) {
        int i = included[idx];
        if (idx > 0) {
            int steps = i - included[idx - 1];
            for (int s = 0; s < steps; ++s) xq = padic_q_power(xq);
        }
        Poly seq = is_log ? seq_L(f, i) : seq_D(f, i);
        auto vals = vP_of_sequences(q, i, ctx.d);
        int shift = (int)(is_log ? vals.vL : vals.vD);
        Poly unit = seq;
        for (int s = 0; s < shift; ++s) unit = poly_div_exact(unit, ctx.P);
        Poly unit_inv = inv_mod(unit, wctx->Pn);
        PadicElement term = padic_mul(xq, padic_make(wctx, unit_inv));
        if (shift > 0) {
            // divide by P^shift inside A/P^work, then renormalize precision
            if (term.val < shift) fail(errc::unexpected_valuation, "series term lost divisibility");
            Poly div = poly_div_exact(term.residue, poly_pow(ctx.P, shift));
            term = padic_make(wctx, div);
        }
        acc = padic_add(acc, term);
    }
    return padic_truncate(acc, n);
}

} // namespace

PadicElement log_C_P(const PadicElement& x)
{
    return padic_series(x, true);
}

PadicElement e_C_P(const PadicElement& x)
{
    return padic_series(x, false);
}

Lemma4Result lemma4_solve(const Poly& prime, int n)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    if (n < 2) fail(errc::usage_error, "lemma4_solve needs precision >= 2");
    const FieldPtr& f = prime.field;
    int work = n + 4; // headroom for the log/exp round trip
    auto wctx = PadicCtx::make(prime, work);
    Poly pm1 = poly_sub(prime, poly_one(f));
    PadicElement w = padic_make(wctx, phi_at_one_mod(pm1, wctx->Pn));

    Lemma4Result res{};
    res.w_valuation = w.val;
    res.w = poly_mod(w.residue, poly_pow(prime, n));
    if (w.val == 0)
        fail(errc::unexpected_valuation, "v_P(phi_{P-1}(1)) = 0 contradicts the divisibility of [P,k]");
    if (w.val == 1) {
        res.solvable = false;
        res.eisenstein = true;
        return res;
    }

    // the proof's construction: P y = log_C(w), x = e_C(y)
    PadicElement logw = log_C_P(w);
    PadicElement y = padic_div_Pk(logw, 1);
    PadicElement x = e_C_P(y);

    auto nctx = PadicCtx::make(prime, n);
    PadicElement xn = padic_make(nctx, x.residue);
    Poly check = phi_apply_mod(prime, xn.residue, nctx->Pn);
    Poly wn = poly_mod(w.residue, nctx->Pn);
    res.substitution_verified = (check == wn);
    if (!res.substitution_verified)
        fail(errc::unexpected_valuation, "lemma 4 solution failed its substitution check");
    res.solvable = true;
    res.solution = xn.residue;
    return res;
}

namespace {

Poly poly_from_digits(const FieldPtr& f, int max_deg, std::int64_t idx)
{
    std::vector<FieldElement> c;
    c.reserve((size_t)max_deg + 1);
    for (int i = 0; i <= max_deg; ++i) {
        c.push_back(fe_from_index(f, idx % f->size));
        idx /= f->size;
    }
    return poly_from_coeffs(f, std::move(c));
}

} // namespace

ModuleStructureReport module_structure_check(const Poly& prime, int n,
                                             std::int64_t budget, std::uint64_t seed)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    const FieldPtr& f = prime.field;
    int d = prime.degree();
    Poly pn = poly_pow(prime, n);
    Poly pm1 = poly_sub(prime, poly_one(f));
    Poly annihilator = poly_mul(poly_pow(prime, n - 1), pm1);
    ModAlgebra alg{pn};
    CarlitzCoeffs ann_coeffs = phi_coeffs(annihilator);

    std::int64_t ring_size = 1;
    bool exhaustive = true;
    for (int i = 0; i < n * d; ++i) {
        ring_size *= f->size;
        if (ring_size > budget) {
            exhaustive = false;
            break;
        }
    }

    ModuleStructureReport rep{annihilator, exhaustive, true, poly_zero(f), false, false};

    std::mt19937_64 rng(seed);
    auto sample = [&](std::int64_t k) {
        if (exhaustive) return poly_from_digits(f, n * d - 1, k);
        std::int64_t idx = 0;
        for (int i = 0; i < n * d; ++i) idx = idx * f->size + (std::int64_t)(rng() % (std::uint64_t)f->size);
        return poly_from_digits(f, n * d - 1, idx);
    };
    std::int64_t trials = exhaustive ? ring_size : 200;
    for (std::int64_t k = 0; k < trials; ++k) {
        Poly x = sample(k);
        if (!phi_apply(ann_coeffs, alg.from_poly(x), alg).is_zero()) {
            rep.annihilator_ok = false;
            break;
        }
    }

    // witness of full order: phi_{M/l}(x) != 0 for every maximal divisor
    std::vector<Poly> maximal;
    if (n > 1) maximal.push_back(poly_div_exact(annihilator, prime));
    for (auto& fac : factor(pm1, seed).factors)
        maximal.push_back(poly_div_exact(annihilator, fac.prime));
    std::vector<CarlitzCoeffs> max_coeffs;
    max_coeffs.reserve(maximal.size());
    for (auto& m : maximal) max_coeffs.push_back(phi_coeffs(m));

    std::int64_t search_space = 1;
    for (int i = 0; i < n * d; ++i) search_space *= f->size;
    for (std::int64_t k = 0; k < search_space; ++k) {
        Poly x = poly_from_digits(f, n * d - 1, k);
        bool full = true;
        for (auto& mc : max_coeffs) {
            if (phi_apply(mc, alg.from_poly(x), alg).is_zero()) {
                full = false;
                break;
            }
        }
        if (full) {
            rep.witness = x;
            rep.witness_ok = true;
            break;
        }
    }
    rep.pass = rep.annihilator_ok && rep.witness_ok;
    return rep;
}

std::optional<Poly> corollary3_search(const Poly& prime, int degree_cap)
{
    if (!prime.is_monic() || !is_irreducible(prime)) fail(errc::not_prime, "P must be a prime of A");
    const FieldPtr& f = prime.field;
    Poly p2 = poly_mul(prime, prime);

    // phi_{T^i}(1) mod P^2 chain; each candidate is then a linear combination
    std::vector<Poly> chain;
    Poly t = poly_mod(poly_one(f), p2);
    for (int i = 0; i <= degree_cap; ++i) {
        if (i > 0) {
            Poly tq = powmod(t, f->size, p2);
            t = poly_mod(poly_add(poly_mul(poly_T(f), t), tq), p2);
        }
        chain.push_back(t);
    }

    std::optional<Poly> found;
    std::int64_t space = 1;
    for (int i = 0; i <= degree_cap; ++i) space *= f->size;
    for (std::int64_t idx = 1; idx < space && !found; ++idx) {
        Poly a = poly_from_digits(f, degree_cap, idx);
        if (poly_mod(a, prime).is_zero()) continue; // a in PA
        Poly acc = poly_zero(f);
        for (int i = 0; i <= a.degree(); ++i)
            if (!a.coeffs[(size_t)i].is_zero())
                acc = poly_add(acc, poly_scale(chain[(size_t)i], a.coeffs[(size_t)i]));
        if (poly_mod(acc, p2).is_zero()) found = a;
    }

    // Corollary 3 cross-check: when the cap covers a = P - 1, the search must
    // agree with the direct Wieferich test
    Poly pm1 = poly_sub(prime, poly_one(f));
    bool wieferich = poly_mod(phi_at_one_mod(pm1, p2), p2).is_zero();
    if (degree_cap >= prime.degree()) {
        if (wieferich != found.has_value())
            fail(errc::unexpected_valuation, "corollary 3 search disagrees with the Wieferich test");
    } else if (found.has_value() && !wieferich) {
        fail(errc::unexpected_valuation, "corollary 3 witness for a non-Wieferich prime");
    }
    return found;
}

} // namespace carlitz
