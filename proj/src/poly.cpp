#include "carlitz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace carlitz {

namespace {

void trim(Poly& a)
{
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

void check_same_field(const Poly& a, const Poly& b, const char* op)
{
    if (a.field != b.field)
        fail(errc::algebra_mismatch, std::string("coefficient field mismatch in ") + op);
}

bool poly_less(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs[i].coords != b.coeffs[i].coords)
            return a.coeffs[i].coords < b.coeffs[i].coords;
    }
    return false;
}

} // namespace

bool Poly::operator==(const Poly& other) const
{
    if (coeffs.size() != other.coeffs.size()) return false;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != other.coeffs[i]) return false;
    return true;
}

Poly poly_zero(const FieldPtr& f) { return {f, {}}; }

Poly poly_one(const FieldPtr& f) { return {f, {fe_one(f)}}; }

Poly poly_T(const FieldPtr& f) { return {f, {fe_zero(f), fe_one(f)}}; }

Poly poly_const(const FieldElement& c)
{
    Poly a{c.field, {c}};
    trim(a);
    return a;
}

Poly poly_from_ints(const FieldPtr& f, const std::vector<long>& coeffs)
{
    Poly a{f, {}};
    a.coeffs.reserve(coeffs.size());
    for (long c : coeffs) a.coeffs.push_back(fe_from_int(f, c));
    trim(a);
    return a;
}

Poly poly_from_coeffs(const FieldPtr& f, std::vector<FieldElement> coeffs)
{
    Poly a{f, std::move(coeffs)};
    trim(a);
    return a;
}

Poly poly_add(const Poly& a, const Poly& b)
{
    check_same_field(a, b, "add");
    Poly r = a.coeffs.size() >= b.coeffs.size() ? a : b;
    const Poly& s = a.coeffs.size() >= b.coeffs.size() ? b : a;
    for (size_t i = 0; i < s.coeffs.size(); ++i) r.coeffs[i] = fe_add(r.coeffs[i], s.coeffs[i]);
    trim(r);
    return r;
}

Poly poly_neg(const Poly& a)
{
    Poly r = a;
    for (auto& c : r.coeffs) c = fe_neg(c);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b)
{
    check_same_field(a, b, "mul");
    if (a.is_zero() || b.is_zero()) return poly_zero(a.field);
    Poly r{a.field, std::vector<FieldElement>(a.coeffs.size() + b.coeffs.size() - 1, fe_zero(a.field))};
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            r.coeffs[i + j] = fe_add(r.coeffs[i + j], fe_mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return r;
}

Poly poly_scale(const Poly& a, const FieldElement& c)
{
    Poly r = a;
    for (auto& x : r.coeffs) x = fe_mul(x, c);
    trim(r);
    return r;
}

Poly poly_pow(const Poly& a, std::int64_t n)
{
    Poly r = poly_one(a.field);
    Poly base = a;
    while (n > 0) {
        if (n & 1) r = poly_mul(r, base);
        n >>= 1;
        if (n) base = poly_mul(base, base);
    }
    return r;
}

Poly poly_shift(const Poly& a, int k)
{
    if (a.is_zero()) return a;
    Poly r{a.field, std::vector<FieldElement>(a.coeffs.size() + k, fe_zero(a.field))};
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i + k] = a.coeffs[i];
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    check_same_field(a, b, "divmod");
    if (b.is_zero()) fail(errc::divide_by_zero_poly, "division by the zero polynomial");
    Poly rem = a;
    if (a.degree() < b.degree()) return {poly_zero(a.field), rem};
    Poly quot{a.field, std::vector<FieldElement>(a.degree() - b.degree() + 1, fe_zero(a.field))};
    FieldElement lead_inv = fe_inv(b.lead());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        FieldElement c = fe_mul(rem.lead(), lead_inv);
        quot.coeffs[shift] = c;
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeffs[shift + i] = fe_sub(rem.coeffs[shift + i], fe_mul(c, b.coeffs[i]));
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_div_exact(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        fail(errc::inexact_division, "expected exact division, remainder " + poly_to_string(r));
    return q;
}

Poly make_monic(const Poly& a)
{
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(a, fe_inv(a.lead()));
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return make_monic(x);
}

Poly poly_derivative(const Poly& a)
{
    if (a.coeffs.size() <= 1) return poly_zero(a.field);
    Poly r{a.field, {}};
    r.coeffs.reserve(a.coeffs.size() - 1);
    for (size_t i = 1; i < a.coeffs.size(); ++i) {
        FieldElement c = fe_zero(a.field);
        long k = (long)(i % a.field->p);
        for (long j = 0; j < k; ++j) c = fe_add(c, a.coeffs[i]);
        r.coeffs.push_back(c);
    }
    trim(r);
    return r;
}

Poly powmod(const Poly& base, std::int64_t exp, const Poly& mod)
{
    Poly r = poly_mod(poly_one(base.field), mod);
    Poly b = poly_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) r = poly_mod(poly_mul(r, b), mod);
        exp >>= 1;
        if (exp) b = poly_mod(poly_mul(b, b), mod);
    }
    return r;
}

Poly poly_q_power(const Poly& a)
{
    // (sum c_i T^i)^q = sum c_i^q T^{iq} in characteristic p
    std::int64_t q = a.field->size;
    if (a.is_zero()) return a;
    Poly r{a.field, std::vector<FieldElement>((size_t)(a.degree() * q + 1), fe_zero(a.field))};
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        r.coeffs[i * q] = fe_pow(a.coeffs[i], q);
    return r;
}

FieldElement poly_eval(const Poly& a, const FieldElement& x)
{
    FieldElement r = fe_zero(x.field);
    for (int i = a.degree(); i >= 0; --i) {
        r = fe_mul(r, x);
        FieldElement c = a.coeffs[i].field == x.field ? a.coeffs[i] : embed(a.coeffs[i], x.field);
        r = fe_add(r, c);
    }
    return r;
}

namespace {

std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// T^{q^k} mod f by k successive q-power maps
Poly t_qpow_mod(const Poly& f, int k)
{
    Poly s = poly_mod(poly_T(f.field), f);
    for (int i = 0; i < k; ++i) s = powmod(s, f.field->size, f);
    return s;
}

} // namespace

bool is_irreducible(const Poly& f)
{
    if (f.degree() < 1) fail(errc::constant_polynomial, "irreducibility of a constant");
    int d = f.degree();
    if (d == 1) return true;
    // Rabin: T^{q^d} == T mod f and gcd(T^{q^{d/l}} - T, f) = 1 for primes l | d
    Poly t = poly_mod(poly_T(f.field), f);
    if (t_qpow_mod(f, d) != t) return false;
    for (int l : prime_divisors(d)) {
        Poly s = poly_sub(t_qpow_mod(f, d / l), t);
        if (poly_gcd(s, f).degree() != 0) return false;
    }
    return true;
}

bool is_squarefree(const Poly& f)
{
    if (f.is_zero()) fail(errc::divide_by_zero_poly, "squarefreeness of zero");
    if (f.degree() == 0) return true;
    Poly d = poly_derivative(f);
    if (d.is_zero()) return false; // p-th power of a non-constant
    return poly_gcd(f, d).degree() == 0;
}

Poly monic_from_index(const FieldPtr& f, int d, std::int64_t idx)
{
    std::vector<FieldElement> c;
    c.reserve(d + 1);
    std::int64_t w = 1;
    for (int i = 0; i < d - 1; ++i) w *= f->size;
    // constant coefficient is the most significant lexicographic slot
    for (int i = 0; i < d; ++i) {
        c.push_back(fe_from_index(f, idx / w));
        idx %= w;
        if (w > 1) w /= f->size;
    }
    c.push_back(fe_one(f));
    return poly_from_coeffs(f, std::move(c));
}

std::vector<Poly> monic_polys(const FieldPtr& f, int d)
{
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f->size;
    std::vector<Poly> out;
    out.reserve((size_t)count);
    for (std::int64_t idx = 0; idx < count; ++idx)
        out.push_back(monic_from_index(f, d, idx));
    return out;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& f, int d)
{
    if (d < 1) fail(errc::constant_polynomial, "degree must be >= 1");
    std::vector<Poly> out;
    for (auto& g : monic_polys(f, d))
        if (is_irreducible(g)) out.push_back(g);
    return out;
}

std::int64_t necklace_count(std::int64_t q, int d)
{
    auto mobius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    std::int64_t total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        std::int64_t pw = 1;
        for (int i = 0; i < d / e; ++i) pw *= q;
        total += mobius(e) * pw;
    }
    return total / d;
}

namespace {

// squarefree part list: (g, multiplicity) with g squarefree, pairwise coprime
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f)
{
    std::vector<std::pair<Poly, int>> out;
    Poly cur = f;
    int p = f.field->p;
    int outer = 1; // multiplicity scale from p-th root steps
    while (cur.degree() > 0) {
        Poly d = poly_derivative(cur);
        if (d.is_zero()) {
            // cur = g(T^p); take the p-th root of the coefficients
            Poly root{cur.field, {}};
            for (int i = 0; i <= cur.degree(); i += p) {
                // c^{p^{e-1}} is the p-th root in F_{p^e}
                FieldElement c = cur.coeffs[i];
                for (int j = 0; j < cur.field->e - 1; ++j) c = fe_pow(c, p);
                root.coeffs.push_back(c);
            }
            trim(root);
            cur = root;
            outer *= p;
            continue;
        }
        // Yun-style pass
        Poly g = poly_gcd(cur, d);
        Poly w = poly_div_exact(cur, g);
        int mult = 1;
        while (w.degree() > 0) {
            Poly y = poly_gcd(w, g);
            Poly part = poly_div_exact(w, y);
            if (part.degree() > 0) out.push_back({make_monic(part), mult * outer});
            ++mult;
            w = y;
            if (!g.is_zero()) g = poly_div_exact(g, y);
        }
        if (g.degree() == 0) break;
        // remaining g is a p-th power times units
        cur = g;
    }
    return out;
}

// distinct-degree split of a squarefree monic polynomial
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f)
{
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly t = poly_mod(poly_T(f.field), rest);
    Poly s = t;
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back({rest, rest.degree()});
            break;
        }
        s = powmod(s, f.field->size, rest);
        Poly g = poly_gcd(poly_sub(s, poly_mod(poly_T(f.field), rest)), rest);
        if (g.degree() > 0) {
            out.push_back({g, d});
            rest = poly_div_exact(rest, g);
            s = poly_mod(s, rest);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree split of a product of degree-d primes
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldPtr& F = f.field;
    std::int64_t q = F->size;
    for (;;) {
        // random polynomial of degree < deg f
        std::vector<FieldElement> c;
        for (int i = 0; i < f.degree(); ++i)
            c.push_back(fe_from_index(F, (std::int64_t)(rng() % (std::uint64_t)q)));
        Poly h = poly_from_coeffs(F, std::move(c));
        if (h.degree() < 1) continue;
        Poly g = poly_gcd(h, f);
        if (g.degree() == 0) {
            if (F->p == 2) {
                // trace map sum_{i<e*d} h^{2^i} mod f
                Poly tr = poly_zero(F);
                Poly cur = poly_mod(h, f);
                int steps = d;
                // e*d doublings cover F_{q^d} over F_2
                for (int i = 0; i < F->e * steps; ++i) {
                    tr = poly_add(tr, cur);
                    cur = poly_mod(poly_mul(cur, cur), f);
                }
                g = poly_gcd(tr, f);
            } else {
                std::int64_t exp = 1;
                for (int i = 0; i < d; ++i) exp *= q;
                exp = (exp - 1) / 2;
                Poly s = powmod(h, exp, f);
                g = poly_gcd(poly_sub(s, poly_one(F)), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(poly_div_exact(f, g), d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization factor(const Poly& f, std::uint64_t seed)
{
    if (f.is_zero()) fail(errc::divide_by_zero_poly, "factorization of zero");
    Factorization result;
    result.unit = f.is_zero() ? fe_one(f.field) : f.lead();
    Poly mon = make_monic(f);
    if (mon.degree() < 1) return result;

    std::mt19937_64 rng(seed);
    for (auto& [sf, mult] : squarefree_decompose(mon)) {
        for (auto& [prod, d] : distinct_degree(sf)) {
            std::vector<Poly> primes;
            equal_degree(prod, d, rng, primes);
            for (auto& p : primes) result.factors.push_back({make_monic(p), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return poly_less(a.prime, b.prime); });
    return result;
}

Poly norm_to_base(const Poly& f, const FieldPtr& base)
{
    if (!f.is_monic()) fail(errc::not_monic, "norm of a non-monic polynomial");
    const FieldPtr& big = f.field;
    if (big->p != base->p || big->e % base->e != 0)
        fail(errc::no_embedding, "base field is not a subfield");
    int n = big->e / base->e;
    Poly prod = f;
    Poly conj = f;
    for (int i = 1; i < n; ++i) {
        for (auto& c : conj.coeffs) c = frobenius(c, base->e);
        prod = poly_mul(prod, conj);
    }
    return poly_descend(prod, base);
}

Poly poly_lift(const Poly& a, const FieldPtr& target)
{
    Poly r{target, {}};
    r.coeffs.reserve(a.coeffs.size());
    for (auto& c : a.coeffs) r.coeffs.push_back(embed(c, target));
    return r;
}

Poly poly_descend(const Poly& a, const FieldPtr& target)
{
    Poly r{target, {}};
    r.coeffs.reserve(a.coeffs.size());
    for (auto& c : a.coeffs) r.coeffs.push_back(descend(c, target));
    return r;
}

std::string poly_to_string(const Poly& a)
{
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        const auto& c = a.coeffs[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool unit_coeff = c.is_one() && i > 0;
        if (!unit_coeff) os << fe_to_string(c);
        if (i >= 1) {
            if (!unit_coeff) os << "*";
            os << "T";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i)
{
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

FieldElement parse_coeff(const std::string& s, size_t& i, const FieldPtr& f)
{
    skip_ws(s, i);
    if (i < s.size() && s[i] == '[') {
        ++i;
        std::vector<int> coords;
        while (true) {
            skip_ws(s, i);
            bool neg = false;
            if (i < s.size() && s[i] == '-') { neg = true; ++i; }
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (start == i) fail(errc::usage_error, "bad coordinate literal in '" + s + "'");
            int v = std::stoi(s.substr(start, i - start));
            coords.push_back(neg ? -v : v);
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            if (i < s.size() && s[i] == ']') { ++i; break; }
            fail(errc::usage_error, "unterminated coordinate list in '" + s + "'");
        }
        return fe_from_coords(f, coords);
    }
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (start == i) fail(errc::usage_error, "expected coefficient in '" + s + "'");
    long v = std::stol(s.substr(start, i - start));
    return fe_from_int(f, neg ? -v : v);
}

} // namespace

Poly poly_parse(const std::string& text, const FieldPtr& f)
{
    std::vector<FieldElement> coeffs;
    auto add_term = [&](const FieldElement& c, int deg) {
        if ((int)coeffs.size() <= deg) coeffs.resize(deg + 1, fe_zero(f));
        coeffs[deg] = fe_add(coeffs[deg], c);
    };
    size_t i = 0;
    bool negate_next = false;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '-') { negate_next = true; ++i; }
    while (i < text.size()) {
        FieldElement c = fe_one(f);
        bool saw_coeff = false;
        skip_ws(text, i);
        if (i < text.size() && (std::isdigit((unsigned char)text[i]) || text[i] == '[')) {
            c = parse_coeff(text, i, f);
            saw_coeff = true;
        }
        skip_ws(text, i);
        int deg = 0;
        if (i < text.size() && (text[i] == '*' || text[i] == 'T')) {
            if (text[i] == '*') { ++i; skip_ws(text, i); }
            if (i >= text.size() || text[i] != 'T')
                fail(errc::usage_error, "expected T in '" + text + "'");
            ++i;
            deg = 1;
            skip_ws(text, i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws(text, i);
                size_t start = i;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
                if (start == i) fail(errc::usage_error, "expected exponent in '" + text + "'");
                deg = std::stoi(text.substr(start, i - start));
            }
        } else if (!saw_coeff) {
            fail(errc::usage_error, "expected term in '" + text + "'");
        }
        if (negate_next) c = fe_neg(c);
        add_term(c, deg);
        skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] == '+') { negate_next = false; ++i; }
        else if (text[i] == '-') { negate_next = true; ++i; }
        else fail(errc::usage_error, "unexpected character '" + std::string(1, text[i]) + "' in '" + text + "'");
    }
    return poly_from_coeffs(f, std::move(coeffs));
}

std::string poly_to_json(const Poly& a)
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (int j = 0; j < a.field->e; ++j) {
            if (j) os << ',';
            os << a.coeffs[i].coords[j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace carlitz
