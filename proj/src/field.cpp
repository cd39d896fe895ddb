#include "carlitz/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace carlitz {

const char* errc_name(errc code)
{
    switch (code) {
    case errc::non_prime_p: return "NonPrimeP";
    case errc::q_too_small: return "QTooSmall";
    case errc::no_embedding: return "NoEmbedding";
    case errc::m_not_coprime_to_p: return "MNotCoprimeToP";
    case errc::divide_by_zero_poly: return "DivideByZeroPoly";
    case errc::constant_polynomial: return "ConstantPolynomial";
    case errc::not_monic: return "NotMonic";
    case errc::inexact_division: return "InexactDivision";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::not_prime: return "NotPrime";
    case errc::non_integral_result: return "NonIntegralResult";
    case errc::c_out_of_range: return "COutOfRange";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::outside_convergence_domain: return "OutsideConvergenceDomain";
    case errc::descent_failure: return "DescentFailure";
    case errc::not_in_domain: return "NotInDomain";
    case errc::unexpected_valuation: return "UnexpectedValuation";
    case errc::usage_error: return "UsageError";
    }
    return "UnknownError";
}

namespace {

bool is_prime_int(int n)
{
    if (n < 2) return false;
    for (int d = 2; (long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[u] arithmetic on plain int vectors, used only for modulus
// selection. Ascending coefficients, no trailing zeros.
using UPoly = std::vector<int>;

void utrim(UPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& b, int p)
{
    // b monic
    while (a.size() >= b.size() && !a.empty()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = ((a[shift + i] - (long)lead * b[i]) % p + p) % p;
        }
        utrim(a);
    }
    return a;
}

bool udivides(const UPoly& b, const UPoly& a, int p)
{
    return umod(a, b, p).empty();
}

bool uirreducible(const UPoly& f, int p)
{
    // trial division by all monic polynomials of degree <= deg f / 2
    int d = (int)f.size() - 1;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        // odometer over dd low coefficients
        UPoly g(dd + 1, 0);
        g[dd] = 1;
        std::int64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::int64_t t = idx;
            for (int i = dd - 1; i >= 0; --i) {
                std::int64_t w = 1;
                for (int j = 0; j < i; ++j) w *= p;
                g[i] = (int)(t / w);
                t %= w;
            }
            if (udivides(g, f, p)) return false;
        }
    }
    return true;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<int, int>, FieldPtr> fields;
    // (p, e_src, e_tgt) -> image of source generator in target, plus the
    // descent table image-coords -> source element coords
    struct EmbedData {
        std::vector<int> gen_image;
        std::map<std::vector<int>, std::vector<int>> down;
    };
    std::map<std::tuple<int, int, int>, EmbedData> embeds;
};

Registry& registry()
{
    static Registry r;
    return r;
}

std::vector<int> coords_from_index(int p, int e, std::int64_t index)
{
    // c0 is the most significant digit so ascending index = ascending
    // lexicographic coordinate order
    std::vector<int> c(e, 0);
    std::int64_t w = 1;
    for (int i = 0; i < e - 1; ++i) w *= p;
    for (int i = 0; i < e; ++i) {
        c[i] = (int)(index / w);
        index %= w;
        if (w > 1) w /= p;
    }
    return c;
}

} // namespace

FieldPtr build_field(int p, int e, bool allow_q2)
{
    if (!is_prime_int(p)) fail(errc::non_prime_p, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(errc::q_too_small, "extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q < 3 && !allow_q2)
        fail(errc::q_too_small, "q = 2 is outside the standing hypothesis q >= 3 (pass allow_q2 to override)");

    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, e);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second;

    auto desc = std::make_shared<FieldDescriptor>();
    desc->p = p;
    desc->e = e;
    desc->size = q;
    desc->outside_standard_hypotheses = (q < 3);
    if (e == 1) {
        desc->modulus = {0, 1}; // u
    } else {
        // lexicographically smallest monic irreducible of degree e
        std::int64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        UPoly f(e + 1, 0);
        f[e] = 1;
        bool found = false;
        for (std::int64_t idx = 0; idx < count && !found; ++idx) {
            auto low = coords_from_index(p, e, idx);
            for (int i = 0; i < e; ++i) f[i] = low[i];
            if (uirreducible(f, p)) {
                desc->modulus = f;
                found = true;
            }
        }
        if (!found) fail(errc::non_prime_p, "internal: no irreducible modulus found");
    }
    FieldPtr ptr = desc;
    reg.fields.emplace(key, ptr);
    return ptr;
}

bool FieldElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool FieldElement::is_one() const
{
    if (coords.empty() || coords[0] != 1) return false;
    return std::all_of(coords.begin() + 1, coords.end(), [](int c) { return c == 0; });
}

FieldElement fe_zero(const FieldPtr& f)
{
    return {f, std::vector<int>(f->e, 0)};
}

FieldElement fe_one(const FieldPtr& f)
{
    auto x = fe_zero(f);
    x.coords[0] = 1;
    return x;
}

FieldElement fe_from_int(const FieldPtr& f, long v)
{
    auto x = fe_zero(f);
    x.coords[0] = (int)((v % f->p + f->p) % f->p);
    return x;
}

FieldElement fe_from_coords(const FieldPtr& f, std::vector<int> coords)
{
    if ((int)coords.size() > f->e) fail(errc::algebra_mismatch, "coordinate vector too long");
    coords.resize(f->e, 0);
    for (auto& c : coords) c = (c % f->p + f->p) % f->p;
    return {f, std::move(coords)};
}

FieldElement fe_from_index(const FieldPtr& f, std::int64_t index)
{
    return {f, coords_from_index(f->p, f->e, index)};
}

std::int64_t fe_to_index(const FieldElement& x)
{
    std::int64_t idx = 0;
    for (int c : x.coords) idx = idx * x.field->p + c;
    return idx;
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b)
{
    if (a.field != b.field) fail(errc::algebra_mismatch, "field mismatch in add");
    FieldElement r = a;
    for (int i = 0; i < a.field->e; ++i) r.coords[i] = (r.coords[i] + b.coords[i]) % a.field->p;
    return r;
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b)
{
    if (a.field != b.field) fail(errc::algebra_mismatch, "field mismatch in sub");
    FieldElement r = a;
    int p = a.field->p;
    for (int i = 0; i < a.field->e; ++i) r.coords[i] = (r.coords[i] - b.coords[i] + p) % p;
    return r;
}

FieldElement fe_neg(const FieldElement& a)
{
    FieldElement r = a;
    int p = a.field->p;
    for (auto& c : r.coords) c = (p - c) % p;
    return r;
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b)
{
    if (a.field != b.field) fail(errc::algebra_mismatch, "field mismatch in mul");
    const auto& f = *a.field;
    int p = f.p, e = f.e;
    if (e == 1) return {a.field, {(int)(((long)a.coords[0] * b.coords[0]) % p)}};
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = (int)((prod[i + j] + (long)a.coords[i] * b.coords[j]) % p);
    }
    // reduce by the monic modulus
    for (int k = 2 * e - 2; k >= e; --k) {
        int lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < e; ++i)
            prod[k - e + i] = (int)(((prod[k - e + i] - (long)lead * f.modulus[i]) % p + p) % p);
    }
    prod.resize(e);
    return {a.field, std::move(prod)};
}

FieldElement fe_pow(const FieldElement& a, std::int64_t n)
{
    if (n < 0) return fe_pow(fe_inv(a), -n);
    FieldElement r = fe_one(a.field);
    FieldElement base = a;
    while (n > 0) {
        if (n & 1) r = fe_mul(r, base);
        n >>= 1;
        if (n) base = fe_mul(base, base);
    }
    return r;
}

FieldElement fe_inv(const FieldElement& a)
{
    if (a.is_zero()) fail(errc::divide_by_zero_poly, "inverse of zero field element");
    return fe_pow(a, a.field->size - 2);
}

FieldElement frobenius(const FieldElement& x, long t)
{
    if (t < 0) fail(errc::algebra_mismatch, "negative Frobenius step");
    FieldElement r = x;
    t %= x.field->e; // x^{p^e} = x
    for (long i = 0; i < t; ++i) r = fe_pow(r, x.field->p);
    return r;
}

namespace {

const Registry::EmbedData& embed_data(const FieldPtr& src, const FieldPtr& tgt)
{
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(src->p, src->e, tgt->e);
    auto it = reg.embeds.find(key);
    if (it != reg.embeds.end()) return it->second;

    Registry::EmbedData data;
    // image of the source generator u: smallest root of the source modulus in
    // the target, lexicographic coordinate order
    bool found = false;
    for (std::int64_t idx = 0; idx < tgt->size && !found; ++idx) {
        FieldElement cand = fe_from_index(tgt, idx);
        FieldElement acc = fe_zero(tgt);
        FieldElement pw = fe_one(tgt);
        for (int i = 0; i <= src->e; ++i) {
            if (src->modulus[i] != 0)
                acc = fe_add(acc, fe_mul(fe_from_int(tgt, src->modulus[i]), pw));
            if (i < src->e) pw = fe_mul(pw, cand);
        }
        if (acc.is_zero()) {
            data.gen_image = cand.coords;
            found = true;
        }
    }
    if (!found) fail(errc::no_embedding, "source modulus has no root in target field");

    // descent table over the whole source field (source fields are tiny)
    FieldElement g = {tgt, data.gen_image};
    for (std::int64_t idx = 0; idx < src->size; ++idx) {
        FieldElement x = fe_from_index(src, idx);
        FieldElement acc = fe_zero(tgt);
        FieldElement pw = fe_one(tgt);
        for (int i = 0; i < src->e; ++i) {
            if (x.coords[i] != 0)
                acc = fe_add(acc, fe_mul(fe_from_int(tgt, x.coords[i]), pw));
            pw = fe_mul(pw, g);
        }
        data.down[acc.coords] = x.coords;
    }
    auto [pos, ok] = reg.embeds.emplace(key, std::move(data));
    (void)ok;
    return pos->second;
}

} // namespace

FieldElement embed(const FieldElement& x, const FieldPtr& target)
{
    const auto& src = x.field;
    if (src == target) return x;
    if (src->p != target->p || target->e % src->e != 0)
        fail(errc::no_embedding, "incompatible field degrees");
    const auto& data = embed_data(src, target);
    FieldElement g = {target, data.gen_image};
    FieldElement acc = fe_zero(target);
    FieldElement pw = fe_one(target);
    for (int i = 0; i < src->e; ++i) {
        if (x.coords[i] != 0)
            acc = fe_add(acc, fe_mul(fe_from_int(target, x.coords[i]), pw));
        pw = fe_mul(pw, g);
    }
    return acc;
}

FieldElement descend(const FieldElement& x, const FieldPtr& target)
{
    if (x.field == target) return x;
    if (x.field->p != target->p || x.field->e % target->e != 0)
        fail(errc::no_embedding, "incompatible field degrees");
    const auto& data = embed_data(target, x.field);
    auto it = data.down.find(x.coords);
    if (it == data.down.end())
        fail(errc::no_embedding, "element " + fe_to_string(x) + " is not in the subfield");
    return {target, it->second};
}

bool in_subfield(const FieldElement& x, const FieldPtr& sub)
{
    if (x.field == sub) return true;
    if (x.field->p != sub->p || x.field->e % sub->e != 0) return false;
    const auto& data = embed_data(sub, x.field);
    return data.down.count(x.coords) > 0;
}

RootsOfUnity roots_of_unity(long m, const FieldPtr& base)
{
    if (m < 1) fail(errc::m_not_coprime_to_p, "m must be >= 1");
    if (m % base->p == 0) fail(errc::m_not_coprime_to_p, "m must be coprime to the characteristic");
    // N = multiplicative order of q modulo m
    std::int64_t q = base->size;
    int big_n = 1;
    std::int64_t r = q % m;
    while (r != 1 % m) {
        r = (r * (q % m)) % m;
        ++big_n;
        if (big_n > 64) fail(errc::m_not_coprime_to_p, "order computation failed");
    }
    FieldPtr big = build_field(base->p, base->e * big_n, true);
    RootsOfUnity out{big, {}};
    for (std::int64_t idx = 0; idx < big->size; ++idx) {
        FieldElement x = fe_from_index(big, idx);
        if (x.is_zero()) continue;
        if (fe_pow(x, m).is_one()) out.roots.push_back(x);
    }
    return out;
}

std::string fe_to_string(const FieldElement& x)
{
    if (x.field->e == 1) return std::to_string(x.coords[0]);
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < x.field->e; ++i) {
        if (i) os << ',';
        os << x.coords[i];
    }
    os << ']';
    return os.str();
}

std::string field_to_string(const FieldPtr& f)
{
    std::ostringstream os;
    os << "F_" << f->size << " (p=" << f->p << ", e=" << f->e << ", modulus=[";
    for (size_t i = 0; i < f->modulus.size(); ++i) {
        if (i) os << ',';
        os << f->modulus[i];
    }
    os << "])";
    return os.str();
}

} // namespace carlitz
