#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

// Dense polynomial over a described field, ascending coefficients, canonical
// form (no trailing zeros; the zero polynomial has an empty list).
struct Poly {
    FieldPtr field;
    std::vector<FieldElement> coeffs;

    int degree() const { return (int)coeffs.size() - 1; } // -1 for zero
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back().is_one(); }
    bool is_constant() const { return coeffs.size() <= 1; }
    const FieldElement& lead() const { return coeffs.back(); }

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }
};

Poly poly_zero(const FieldPtr& f);
Poly poly_one(const FieldPtr& f);
Poly poly_T(const FieldPtr& f);
Poly poly_const(const FieldElement& c);
Poly poly_from_ints(const FieldPtr& f, const std::vector<long>& coeffs);
Poly poly_from_coeffs(const FieldPtr& f, std::vector<FieldElement> coeffs);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const FieldElement& c);
Poly poly_pow(const Poly& a, std::int64_t n);
Poly poly_shift(const Poly& a, int k); // multiply by T^k

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_div_exact(const Poly& a, const Poly& b); // errc::inexact_division on remainder
Poly poly_gcd(const Poly& a, const Poly& b);       // monic
Poly poly_derivative(const Poly& a);
Poly make_monic(const Poly& a);
Poly powmod(const Poly& base, std::int64_t exp, const Poly& mod);
Poly poly_q_power(const Poly& a); // a(T)^q via coefficientwise q-power

FieldElement poly_eval(const Poly& a, const FieldElement& x);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

// All monic polynomials of degree d in lexicographic order (constant
// coefficient compared first, field elements by coordinate order).
std::vector<Poly> monic_polys(const FieldPtr& f, int d);
Poly monic_from_index(const FieldPtr& f, int d, std::int64_t idx);
std::vector<Poly> monic_irreducibles(const FieldPtr& f, int d);
std::int64_t necklace_count(std::int64_t q, int d); // (1/d) sum_{e|d} mu(e) q^{d/e}

struct Factor {
    Poly prime;
    int multiplicity;
};

// Complete factorization into monic irreducibles; the leading unit is
// returned separately. Equal-degree splitting is randomized, driven only by
// the seed.
struct Factorization {
    FieldElement unit;
    std::vector<Factor> factors; // sorted lexicographically
};

Factorization factor(const Poly& f, std::uint64_t seed);

// prod_{i=0}^{n-1} phi^i(f) with phi the q-power Frobenius on coefficients;
// f lives over F_{q^n} given as a degree e*n extension containing base = F_q.
Poly norm_to_base(const Poly& f, const FieldPtr& base);

// coefficientwise embed into a bigger field
Poly poly_lift(const Poly& a, const FieldPtr& target);
Poly poly_descend(const Poly& a, const FieldPtr& target);

std::string poly_to_string(const Poly& a);
Poly poly_parse(const std::string& text, const FieldPtr& f);

// compact JSON array-of-coordinate-lists form
std::string poly_to_json(const Poly& a);

} // namespace carlitz
