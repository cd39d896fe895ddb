#include "carlitz/laurent.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carlitz {

namespace {

void normalize(Laurent& a)
{
    size_t lead = 0;
    while (lead < a.coeffs.size() && a.coeffs[lead].is_zero()) ++lead;
    if (lead > 0) {
        a.coeffs.erase(a.coeffs.begin(), a.coeffs.begin() + (long)lead);
        a.start += (int)lead;
    }
    while (!a.coeffs.empty() && a.start + (int)a.coeffs.size() > a.prec)
        a.coeffs.pop_back();
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
    if (a.coeffs.empty()) a.start = 0;
}

void check_same_field(const Laurent& a, const Laurent& b)
{
    if (a.field != b.field) fail(errc::algebra_mismatch, "series coefficient field mismatch");
}

} // namespace

FieldElement Laurent::coeff(int exponent) const
{
    if (exponent < start || exponent >= start + (int)coeffs.size()) return fe_zero(field);
    return coeffs[(size_t)(exponent - start)];
}

Laurent laurent_zero(const FieldPtr& f, int prec)
{
    return {f, 0, {}, prec};
}

Laurent laurent_const(const FieldElement& c, int prec)
{
    Laurent a{c.field, 0, {c}, prec};
    normalize(a);
    return a;
}

Laurent laurent_monomial(const FieldElement& c, int exponent, int prec)
{
    Laurent a{c.field, exponent, {c}, prec};
    normalize(a);
    return a;
}

Laurent laurent_from_poly(const Poly& a, int prec)
{
    Laurent r{a.field, -a.degree(), {}, prec};
    if (a.is_zero()) return laurent_zero(a.field, prec);
    r.coeffs.reserve(a.coeffs.size());
    for (int i = a.degree(); i >= 0; --i) r.coeffs.push_back(a.coeffs[(size_t)i]);
    normalize(r);
    return r;
}

Laurent laurent_add(const Laurent& a, const Laurent& b)
{
    check_same_field(a, b);
    Laurent r{a.field, 0, {}, std::min(a.prec, b.prec)};
    if (a.known_zero() && b.known_zero()) return r;
    int lo = std::min(a.known_zero() ? b.start : a.start, b.known_zero() ? a.start : b.start);
    r.start = lo;
    r.coeffs.assign((size_t)std::max(0, r.prec - lo), fe_zero(a.field));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        int e = a.start + (int)i;
        if (e >= r.prec) break;
        r.coeffs[(size_t)(e - lo)] = fe_add(r.coeffs[(size_t)(e - lo)], a.coeffs[i]);
    }
    for (size_t i = 0; i < b.coeffs.size(); ++i) {
        int e = b.start + (int)i;
        if (e >= r.prec) break;
        r.coeffs[(size_t)(e - lo)] = fe_add(r.coeffs[(size_t)(e - lo)], b.coeffs[i]);
    }
    normalize(r);
    return r;
}

Laurent laurent_neg(const Laurent& a)
{
    Laurent r = a;
    for (auto& c : r.coeffs) c = fe_neg(c);
    return r;
}

Laurent laurent_sub(const Laurent& a, const Laurent& b)
{
    return laurent_add(a, laurent_neg(b));
}

Laurent laurent_mul(const Laurent& a, const Laurent& b)
{
    check_same_field(a, b);
    // pessimistic rule: error terms sit at val(a)+prec(b) and val(b)+prec(a)
    int prec = std::min(a.valuation() + b.prec, b.valuation() + a.prec);
    Laurent r{a.field, 0, {}, prec};
    if (a.known_zero() || b.known_zero()) return r;
    r.start = a.start + b.start;
    int len = std::max(0, prec - r.start);
    r.coeffs.assign((size_t)len, fe_zero(a.field));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            int e = a.start + (int)i + b.start + (int)j;
            if (e >= prec) break;
            r.coeffs[(size_t)(e - r.start)] =
                fe_add(r.coeffs[(size_t)(e - r.start)], fe_mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    normalize(r);
    return r;
}

Laurent laurent_scale(const Laurent& a, const FieldElement& c)
{
    Laurent r = a;
    for (auto& x : r.coeffs) x = fe_mul(x, c);
    normalize(r);
    return r;
}

Laurent laurent_inv(const Laurent& a)
{
    if (a.known_zero()) fail(errc::divide_by_zero_poly, "inverse of a series with no known terms");
    int v = a.start;
    int rel = a.prec - v; // relative precision of the unit part
    if (rel <= 0) fail(errc::divide_by_zero_poly, "no relative precision left for inversion");
    // invert the unit part w = a / u^v to relative precision rel
    std::vector<FieldElement> w(a.coeffs.begin(), a.coeffs.end());
    w.resize((size_t)rel, fe_zero(a.field));
    std::vector<FieldElement> b((size_t)rel, fe_zero(a.field));
    FieldElement w0inv = fe_inv(w[0]);
    b[0] = w0inv;
    for (int k = 1; k < rel; ++k) {
        FieldElement s = fe_zero(a.field);
        for (int j = 1; j <= k; ++j) s = fe_add(s, fe_mul(w[(size_t)j], b[(size_t)(k - j)]));
        b[(size_t)k] = fe_neg(fe_mul(s, w0inv));
    }
    Laurent r{a.field, -v, std::move(b), rel - v};
    normalize(r);
    return r;
}

Laurent laurent_truncate(const Laurent& a, int prec)
{
    Laurent r = a;
    r.prec = std::min(r.prec, prec);
    normalize(r);
    return r;
}

Laurent laurent_p_power(const Laurent& a, int cap)
{
    // (sum c_j u^j)^p = sum c_j^p u^{jp}; cross terms vanish in char p,
    // so precision improves to p * prec
    int p = a.field->p;
    Laurent r{a.field, 0, {}, std::min(a.prec * p, cap)};
    if (a.known_zero()) return r;
    r.start = a.start * p;
    r.coeffs.assign(a.coeffs.empty() ? 0 : (size_t)((a.coeffs.size() - 1) * (size_t)p + 1),
                    fe_zero(a.field));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        r.coeffs[i * (size_t)p] = fe_pow(a.coeffs[i], p);
    normalize(r);
    return r;
}

Laurent laurent_q_power(const Laurent& a, int cap)
{
    Laurent r = a;
    for (int i = 0; i < a.field->e; ++i) r = laurent_p_power(r, cap);
    return r;
}

Laurent laurent_lift(const Laurent& a, const FieldPtr& target)
{
    Laurent r{target, a.start, {}, a.prec};
    r.coeffs.reserve(a.coeffs.size());
    for (auto& c : a.coeffs) r.coeffs.push_back(embed(c, target));
    return r;
}

Laurent laurent_descend(const Laurent& a, const FieldPtr& target)
{
    Laurent r{target, a.start, {}, a.prec};
    r.coeffs.reserve(a.coeffs.size());
    for (auto& c : a.coeffs) {
        if (!in_subfield(c, target))
            fail(errc::descent_failure,
                 "coefficient " + fe_to_string(c) + " is not in the base field");
        r.coeffs.push_back(descend(c, target));
    }
    return r;
}

bool laurent_eq(const Laurent& a, const Laurent& b, int prec)
{
    if (a.prec < prec || b.prec < prec) return false;
    int lo = std::min(a.valuation(), b.valuation());
    for (int e = lo; e < prec; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

std::string laurent_to_string(const Laurent& a, int max_terms)
{
    if (a.known_zero()) return "O(T^-" + std::to_string(a.prec) + ")";
    std::ostringstream os;
    int shown = 0;
    for (size_t i = 0; i < a.coeffs.size() && shown < max_terms; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        if (shown) os << " + ";
        int e = a.start + (int)i;
        os << fe_to_string(a.coeffs[i]);
        if (e != 0) os << "*T^" << -e;
        ++shown;
    }
    os << " + O(T^-" << a.prec << ")";
    return os.str();
}

Laurent inv_L_series(const FieldPtr& f, int i, int prec)
{
    Poly l = seq_L(f, i);
    // exact input: give it enough slack that the inverse is known to prec
    return laurent_truncate(laurent_inv(laurent_from_poly(l, prec + 2 * l.degree() + 1)), prec);
}

Laurent inv_D_series(const FieldPtr& f, int i, int prec)
{
    Poly d = seq_D(f, i);
    return laurent_truncate(laurent_inv(laurent_from_poly(d, prec + 2 * d.degree() + 1)), prec);
}

Laurent log_C_eval(const Laurent& x)
{
    const FieldPtr& f = x.field;
    std::int64_t q = f->size;
    int prec = x.prec;
    if (x.known_zero()) return laurent_zero(f, prec);
    long v = x.valuation();
    if ((q - 1) * v <= -q)
        fail(errc::outside_convergence_domain,
             "v_inf(x) = " + std::to_string(-v) + " is outside the log_C domain");
    Laurent acc = laurent_zero(f, prec);
    Laurent xq = x;
    std::int64_t qi = 1;
    for (int i = 0;; ++i) {
        if (i > 0) {
            xq = laurent_q_power(xq, prec + (int)deg_L(q, i) + 1);
            qi *= q;
        }
        long term_val = qi * v + deg_L(q, i);
        if (term_val >= prec) break;
        acc = laurent_add(acc, laurent_truncate(laurent_mul(xq, inv_L_series(f, i, prec + (int)deg_L(q, i))), prec));
    }
    return laurent_truncate(acc, prec);
}

Laurent e_C_eval(const Laurent& x)
{
    const FieldPtr& f = x.field;
    std::int64_t q = f->size;
    int prec = x.prec;
    if (x.known_zero()) return laurent_zero(f, prec);
    long v = x.valuation();
    Laurent acc = laurent_zero(f, prec);
    Laurent xq = x;
    std::int64_t qi = 1;
    for (int i = 0;; ++i) {
        if (i > 0) {
            xq = laurent_q_power(xq, prec + (int)deg_D(q, i) + 1);
            qi *= q;
        }
        long term_val = qi * v + deg_D(q, i);
        if (term_val < prec)
            acc = laurent_add(acc, laurent_truncate(laurent_mul(xq, inv_D_series(f, i, prec + (int)deg_D(q, i))), prec));
        // term valuations q^i (v + i) are eventually increasing
        if (term_val >= prec && v + i > 0) break;
    }
    return laurent_truncate(acc, prec);
}

Laurent zeta_A1(const FieldPtr& f, int prec)
{
    Laurent acc = laurent_zero(f, prec);
    for (int j = 0; deg_L(f->size, j) < prec; ++j)
        acc = laurent_add(acc, inv_L_series(f, j, prec));
    return acc;
}

namespace {

bool is_normal_basis(const FieldPtr& base, const FieldPtr& big, const FieldElement& alpha, int n)
{
    // exhaustive F_q-independence of {alpha^{q^i}}; the fields at hand are tiny
    std::vector<FieldElement> conj;
    FieldElement cur = alpha;
    for (int i = 0; i < n; ++i) {
        conj.push_back(cur);
        cur = frobenius(cur, base->e);
    }
    std::vector<FieldElement> scalars;
    for (std::int64_t idx = 0; idx < base->size; ++idx)
        scalars.push_back(embed(fe_from_index(base, idx), big));
    std::int64_t combos = 1;
    for (int i = 0; i < n; ++i) combos *= base->size;
    for (std::int64_t c = 1; c < combos; ++c) {
        FieldElement acc = fe_zero(big);
        std::int64_t t = c;
        for (int i = 0; i < n; ++i) {
            acc = fe_add(acc, fe_mul(scalars[(size_t)(t % base->size)], conj[(size_t)i]));
            t /= base->size;
        }
        if (acc.is_zero()) return false;
    }
    return true;
}

} // namespace

FieldElement normal_basis_element(const FieldPtr& base, int n)
{
    if (n < 1) fail(errc::usage_error, "n must be >= 1");
    if (n == 1) return fe_one(base);
    FieldPtr big = build_field(base->p, base->e * n, true);
    for (std::int64_t idx = 1; idx < big->size; ++idx) {
        FieldElement alpha = fe_from_index(big, idx);
        if (is_normal_basis(base, big, alpha, n)) return alpha;
    }
    fail(errc::descent_failure, "no normal basis element found"); // unreachable
}

bool log_alpha_unit_check(const FieldPtr& base, int n, int prec)
{
    FieldPtr big = n == 1 ? base : build_field(base->p, base->e * n, true);
    FieldElement alpha = normal_basis_element(base, n);
    // log_C over F_{q^n}((1/T)) still uses the base-field q-power
    Laurent x = laurent_const(n == 1 ? alpha : alpha, prec);
    if (x.field != big) x = laurent_lift(x, big);
    // evaluate with q = |F_q| Frobenius: build the series by hand
    const FieldPtr& f = big;
    std::int64_t q = base->size;
    Laurent acc = laurent_zero(f, prec);
    Laurent xq = x;
    std::int64_t qi = 1;
    for (int i = 0;; ++i) {
        if (i > 0) {
            for (int s = 0; s < base->e; ++s) xq = laurent_p_power(xq, prec + (int)deg_L(q, i) + 1);
            qi *= q;
        }
        if (deg_L(q, i) >= prec) break;
        Poly l = poly_lift(seq_L(base, i), f);
        Laurent invl = laurent_truncate(
            laurent_inv(laurent_from_poly(l, prec + 2 * l.degree() + 1)), prec);
        acc = laurent_add(acc, laurent_truncate(laurent_mul(xq, invl), prec));
    }
    return acc.valuation() == 0 && !acc.coeff(0).is_zero();
}

namespace {

Laurent zeta_an_layer(const FieldPtr& base, const FieldPtr& big, int j, int prec,
                      std::int64_t count, bool parallel)
{
    auto one_term = [&](std::int64_t idx) {
        Poly f = monic_from_index(big, j, idx);
        Poly nrm = norm_to_base(f, base);
        return laurent_truncate(laurent_inv(laurent_from_poly(nrm, prec + 2 * nrm.degree() + 1)), prec);
    };
#ifdef _OPENMP
    if (parallel && count >= 256) {
        int nthreads = omp_get_max_threads();
        std::vector<Laurent> partial((size_t)nthreads, laurent_zero(base, prec));
#pragma omp parallel num_threads(nthreads)
        {
            int t = omp_get_thread_num();
            std::int64_t lo = count * t / nthreads;
            std::int64_t hi = count * (t + 1) / nthreads;
            Laurent acc = laurent_zero(base, prec);
            for (std::int64_t idx = lo; idx < hi; ++idx) acc = laurent_add(acc, one_term(idx));
            partial[(size_t)t] = acc;
        }
        Laurent acc = partial[0];
        for (size_t t = 1; t < partial.size(); ++t) acc = laurent_add(acc, partial[t]);
        return acc;
    }
#else
    (void)parallel;
#endif
    Laurent acc = laurent_zero(base, prec);
    for (std::int64_t idx = 0; idx < count; ++idx) acc = laurent_add(acc, one_term(idx));
    return acc;
}

} // namespace

ZetaAnReport zeta_An(const FieldPtr& base, int n, int prec, int degree_cap,
                     std::int64_t budget, bool parallel)
{
    FieldPtr big = n == 1 ? base : build_field(base->p, base->e * n, true);
    ZetaAnReport rep{laurent_zero(base, prec), {}, -1};
    for (int j = 0; j <= degree_cap; ++j) {
        std::int64_t count = 1;
        for (int i = 0; i < j; ++i) {
            count *= big->size;
            if (count > budget)
                fail(errc::budget_exceeded, "layer " + std::to_string(j) + " exceeds the term budget");
        }
        Laurent layer = zeta_an_layer(base, big, j, prec, count, parallel);
        rep.layer_valuations.push_back(layer.valuation());
        if (!layer.known_zero()) rep.last_contributing_degree = j;
        rep.value = laurent_add(rep.value, layer);
    }
    return rep;
}

Laurent regulator_An(const FieldPtr& base, int n, int prec)
{
    if (n < 1) fail(errc::usage_error, "n must be >= 1");
    int p = base->p;
    int ell = 0;
    int m = n;
    while (m % p == 0) {
        m /= p;
        ++ell;
    }
    // c_i = sum_{j == i mod n} 1/L_j over F_q
    std::vector<Laurent> c((size_t)n, laurent_zero(base, prec));
    for (int j = 0; deg_L(base->size, j) < prec; ++j)
        c[(size_t)(j % n)] = laurent_add(c[(size_t)(j % n)], inv_L_series(base, j, prec));

    Laurent result = laurent_zero(base, prec);
    if (m == 1) {
        Laurent sum = laurent_zero(base, prec);
        for (auto& ci : c) sum = laurent_add(sum, ci);
        result = sum;
    } else {
        RootsOfUnity mu = roots_of_unity(m, base);
        const FieldPtr& big = mu.field;
        std::vector<Laurent> clift;
        clift.reserve(c.size());
        for (auto& ci : c) clift.push_back(big == base ? ci : laurent_lift(ci, big));
        Laurent prod = laurent_const(fe_one(big), prec);
        for (auto& zeta : mu.roots) {
            Laurent factor = laurent_zero(big, prec);
            FieldElement zi = fe_one(big);
            for (int i = 0; i < n; ++i) {
                factor = laurent_add(factor, laurent_scale(clift[(size_t)i], zi));
                zi = fe_mul(zi, zeta);
            }
            prod = laurent_mul(prod, factor);
        }
        // The index is only defined up to F_q^*; normalize to a 1-unit (the
        // zeta sum starts with the layer-0 term 1), asserting the constant
        // coefficient is a nonzero scalar.
        FieldElement c0 = prod.coeff(0);
        if (c0.is_zero() || prod.valuation() != 0)
            fail(errc::unexpected_valuation, "regulator is not a unit series");
        if (!c0.is_one()) prod = laurent_scale(prod, fe_inv(c0));
        result = big == base ? prod : laurent_descend(laurent_truncate(prod, prec), base);
    }
    for (int i = 0; i < ell; ++i) result = laurent_p_power(result, prec);
    return laurent_truncate(result, prec);
}

} // namespace carlitz
