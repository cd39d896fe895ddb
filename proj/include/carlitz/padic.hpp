#pragma once

#include <memory>
#include <optional>

#include "carlitz/carlitz.hpp"

namespace carlitz {

// Working ring A/P^n with tracked exact P-adic valuation, v_P(P) = 1.
struct PadicCtx {
    Poly P;
    int d; // deg P
    int n; // precision exponent
    Poly Pn;

    static std::shared_ptr<const PadicCtx> make(const Poly& prime, int n);
};

using PadicCtxPtr = std::shared_ptr<const PadicCtx>;

struct PadicElement {
    PadicCtxPtr ctx;
    Poly residue; // reduced mod P^n
    int val;      // exact valuation in [0, n]; val == n means residue == 0

    bool is_zero() const { return residue.is_zero(); }
};

PadicElement padic_make(const PadicCtxPtr& ctx, const Poly& value);
PadicElement padic_zero(const PadicCtxPtr& ctx);
PadicElement padic_add(const PadicElement& a, const PadicElement& b);
PadicElement padic_sub(const PadicElement& a, const PadicElement& b);
PadicElement padic_mul(const PadicElement& a, const PadicElement& b);
PadicElement padic_q_power(const PadicElement& a);
// exact division by P^k; requires val >= k, drops precision to n - k
PadicElement padic_div_Pk(const PadicElement& a, int k);
PadicElement padic_truncate(const PadicElement& a, int n);

// inverse of a unit modulo an arbitrary modulus, by extended Euclid
Poly inv_mod(const Poly& u, const Poly& modulus);

struct PadicAlgebra {
    using Elem = PadicElement;
    PadicCtxPtr ctx;

    Elem zero() const { return padic_zero(ctx); }
    Elem from_poly(const Poly& a) const { return padic_make(ctx, a); }
    Elem add(const Elem& a, const Elem& b) const { return padic_add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return padic_mul(a, b); }
    Elem q_power(const Elem& a) const { return padic_q_power(a); }
};

// closed-form valuations v_P(L_i) = floor(i/d) and
// v_P(D_i) = (q^i - q^{i - floor(i/d) d}) / (q^d - 1), the latter as an exact
// (always integral) rational
struct SeqValuations {
    long vL;
    long long vD_num;
    long long vD_den;
    long long vD; // the integer value
};

SeqValuations vP_of_sequences(std::int64_t q, int i, int d);

// log_C on v_P(x) >= 1, terms while q^i v - floor(i/d) < n
PadicElement log_C_P(const PadicElement& x);
// e_C on v_P(x) >= 1; inverse to log_C_P there
PadicElement e_C_P(const PadicElement& x);

struct Lemma4Result {
    bool solvable;
    int w_valuation;                    // v_P(phi_{P-1}(1))
    Poly w;                             // phi_{P-1}(1) mod P^n
    std::optional<Poly> solution;       // x with phi_P(x) == w mod P^n
    bool substitution_verified = false; // set on the Solution branch
    // obstruction facts: phi_P(X) - w is Eisenstein
    bool eisenstein = false;
};

Lemma4Result lemma4_solve(const Poly& prime, int n);

struct ModuleStructureReport {
    Poly annihilator; // P^{n-1}(P-1)
    bool exhaustive;  // whole ring tested, else 200 random samples
    bool annihilator_ok;
    Poly witness; // full-order element
    bool witness_ok;
    bool pass;
};

ModuleStructureReport module_structure_check(const Poly& prime, int n,
                                             std::int64_t budget = 6561,
                                             std::uint64_t seed = 1);

// smallest a (not in PA, deg <= cap) with P^2 | phi_a(1); empty when none.
// Agreement with the Wieferich status of P is asserted when the cap admits
// the guaranteed witness a = P - 1.
std::optional<Poly> corollary3_search(const Poly& prime, int degree_cap);

} // namespace carlitz
