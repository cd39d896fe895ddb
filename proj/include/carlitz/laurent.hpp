#pragma once

#include "carlitz/carlitz.hpp"

namespace carlitz {

// Truncated series in u = 1/T over a tower field. Exponents are 1/T-orders,
// matching v_inf(T) = -1; coefficients of u^j are stored for
// j = start .. start+len-1 and are exact for every j < prec.
struct Laurent {
    FieldPtr field;
    int start = 0;
    std::vector<FieldElement> coeffs;
    int prec = 0;

    bool known_zero() const { return coeffs.empty(); }
    // valuation of the known part; prec when nothing nonzero is known
    int valuation() const { return coeffs.empty() ? prec : start; }
    FieldElement coeff(int exponent) const; // zero outside the stored window
};

Laurent laurent_zero(const FieldPtr& f, int prec);
Laurent laurent_const(const FieldElement& c, int prec);
Laurent laurent_monomial(const FieldElement& c, int exponent, int prec);
// polynomial in T becomes exponents -deg..0
Laurent laurent_from_poly(const Poly& a, int prec);

Laurent laurent_add(const Laurent& a, const Laurent& b);
Laurent laurent_sub(const Laurent& a, const Laurent& b);
Laurent laurent_neg(const Laurent& a);
Laurent laurent_mul(const Laurent& a, const Laurent& b);
Laurent laurent_scale(const Laurent& a, const FieldElement& c);
Laurent laurent_inv(const Laurent& a);            // leading coefficient must be known
Laurent laurent_p_power(const Laurent& a, int cap);
Laurent laurent_q_power(const Laurent& a, int cap);
Laurent laurent_truncate(const Laurent& a, int prec);
Laurent laurent_lift(const Laurent& a, const FieldPtr& target);
Laurent laurent_descend(const Laurent& a, const FieldPtr& target); // errc::descent_failure

bool laurent_eq(const Laurent& a, const Laurent& b, int prec);
std::string laurent_to_string(const Laurent& a, int max_terms = 12);

// 1/L_i and 1/D_i as series known to the given precision
Laurent inv_L_series(const FieldPtr& f, int i, int prec);
Laurent inv_D_series(const FieldPtr& f, int i, int prec);

// log_C(x) = sum x^{q^i}/L_i on v_inf(x) > -q/(q-1)
Laurent log_C_eval(const Laurent& x);
// e_C(x) = sum x^{q^i}/D_i
Laurent e_C_eval(const Laurent& x);

// zeta_A(1) = sum_j 1/L_j, truncated to precision N
Laurent zeta_A1(const FieldPtr& f, int prec);

// smallest alpha in coordinate order generating a normal basis of
// F_{q^n}/F_q, with the rank certificate rechecked before returning
FieldElement normal_basis_element(const FieldPtr& base, int n);

// v_inf(log_C(alpha)) == 0 for the normal basis element
bool log_alpha_unit_check(const FieldPtr& base, int n, int prec);

struct ZetaAnReport {
    Laurent value;
    std::vector<int> layer_valuations; // valuation of each degree layer
    int last_contributing_degree;      // largest j whose layer is visible below prec
};

// sum over monic f in F_{q^n}[T] of degree <= cap of 1/norm(f); OpenMP over
// each degree layer, serial path available for the reference comparison
ZetaAnReport zeta_An(const FieldPtr& base, int n, int prec, int degree_cap,
                     std::int64_t budget = 4000000, bool parallel = true);

// ((-1)^{m-1} prod_{zeta in mu_m} sum_i c_i zeta^i)^{p^l}, n = m p^l,
// c_i = sum_{j == i mod n} 1/L_j; the F_q-descent of the result is asserted
Laurent regulator_An(const FieldPtr& base, int n, int prec);

} // namespace carlitz
