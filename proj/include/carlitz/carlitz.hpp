#pragma once

#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

// D_0 = 1, D_i = (T^{q^i} - T) D_{i-1}^q and L_0 = 1, L_i = (T - T^{q^i}) L_{i-1},
// cached per coefficient field (they depend only on q).
Poly seq_D(const FieldPtr& f, int i);
Poly seq_L(const FieldPtr& f, int i);

// closed-form degrees: deg D_i = i q^i, deg L_i = (q^{i+1} - q)/(q - 1)
std::int64_t deg_D(std::int64_t q, int i);
std::int64_t deg_L(std::int64_t q, int i);

// Coefficients [a,k] of phi_a(X) = sum_k [a,k] X^{q^k}, k = 0..deg a,
// computed by the exact recurrence
// Psi_{k+1}(a) = (Psi_k(a)^q - Psi_k(a)) / (T^{q^{k+1}} - T).
struct CarlitzCoeffs {
    Poly a;
    std::vector<Poly> coeffs;
};

CarlitzCoeffs phi_coeffs(const Poly& a);

// phi_a evaluated in any F_q-algebra that supplies the four hooks below.
// Algebras: the ring A itself, A/M, truncated Laurent series, truncated
// P-adics (the latter two live in their own headers and model the same
// concept).
template <class Alg>
typename Alg::Elem phi_apply(const CarlitzCoeffs& cc, const typename Alg::Elem& x, const Alg& alg)
{
    typename Alg::Elem acc = alg.zero();
    typename Alg::Elem xq = x; // x^{q^k}
    for (size_t k = 0; k < cc.coeffs.size(); ++k) {
        if (k > 0) xq = alg.q_power(xq);
        acc = alg.add(acc, alg.mul(alg.from_poly(cc.coeffs[k]), xq));
    }
    return acc;
}

struct PolyAlgebra {
    using Elem = Poly;
    FieldPtr field;

    Elem zero() const { return poly_zero(field); }
    Elem from_poly(const Poly& a) const { return a; }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(a, b); }
    Elem q_power(const Elem& a) const { return poly_q_power(a); }
};

struct ModAlgebra {
    using Elem = Poly;
    Poly modulus;

    Elem zero() const { return poly_zero(modulus.field); }
    Elem from_poly(const Poly& a) const { return poly_mod(a, modulus); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mod(poly_mul(a, b), modulus); }
    Elem q_power(const Elem& a) const { return powmod(a, modulus.field->size, modulus); }
};

// phi_a(x) in A, or mod M when a modulus is given
Poly phi_apply_poly(const Poly& a, const Poly& x);
Poly phi_apply_mod(const Poly& a, const Poly& x, const Poly& modulus);

// phi_a(1) mod M through the chain t_0 = 1, t_{i+1} = T t_i + t_i^q; cheap
// when many a share one modulus
Poly phi_at_one_mod(const Poly& a, const Poly& modulus);

// Per-k verification of [P,0] = P, [P,d] = 1, P | [P,k] and
// ([P,k]/P) L_k == 1 mod P.
struct Lemma3Row {
    int k;
    bool divisible;
    bool congruence;
};

struct Lemma3Report {
    Poly prime;
    bool head_ok; // [P,0] = P and [P,d] = 1
    std::vector<Lemma3Row> rows;
    bool pass;
};

Lemma3Report lemma3_report(const Poly& prime);

} // namespace carlitz
