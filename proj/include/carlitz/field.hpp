#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

struct FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// F_{p^e} in the power basis of a fixed monic irreducible modulus over F_p.
// Descriptors are immutable once built; build_field(p, e) always returns the
// same modulus (lexicographically smallest, ascending-degree coefficient
// tuples), so rebuilds are bit-identical.
struct FieldDescriptor {
    int p;                    // characteristic, prime
    int e;                    // degree over F_p
    std::vector<int> modulus; // ascending coefficients, length e+1, monic
    std::int64_t size;        // p^e
    bool outside_standard_hypotheses = false; // set when q = 2 was forced; the
                                              // identities here assume q >= 3

    std::int64_t generator_order() const { return size - 1; }
};

struct FieldElement {
    FieldPtr field;
    std::vector<int> coords; // length e, entries in [0, p)

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElement& other) const
    {
        return coords == other.coords;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }
};

FieldPtr build_field(int p, int e, bool allow_q2 = false);

FieldElement fe_zero(const FieldPtr& f);
FieldElement fe_one(const FieldPtr& f);
FieldElement fe_from_int(const FieldPtr& f, long v); // constant, reduced mod p
FieldElement fe_from_coords(const FieldPtr& f, std::vector<int> coords);

// Elements in lexicographic coordinate order (c0 compared first); index runs
// over [0, size).
FieldElement fe_from_index(const FieldPtr& f, std::int64_t index);
std::int64_t fe_to_index(const FieldElement& x);

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_inv(const FieldElement& a);
FieldElement fe_pow(const FieldElement& a, std::int64_t n); // n >= 0 or a != 0

// x^{p^t}
FieldElement frobenius(const FieldElement& x, long t);

// Deterministic embedding F_{p^{e1}} -> F_{p^{e2}}, e1 | e2: the source
// generator maps to the root of the source modulus with lexicographically
// smallest coordinate vector.
FieldElement embed(const FieldElement& x, const FieldPtr& target);

// Inverse of embed on its image; errc::no_embedding if x is not in the image.
FieldElement descend(const FieldElement& x, const FieldPtr& target);
bool in_subfield(const FieldElement& x, const FieldPtr& sub);

struct RootsOfUnity {
    FieldPtr field; // F_{q^N}, N = ord of q modulo m
    std::vector<FieldElement> roots;
};

// All m-th roots of unity over the given base field, gcd(m, p) = 1.
RootsOfUnity roots_of_unity(long m, const FieldPtr& base);

std::string fe_to_string(const FieldElement& x);
std::string field_to_string(const FieldPtr& f);

} // namespace carlitz
