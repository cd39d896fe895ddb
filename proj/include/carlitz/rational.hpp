#pragma once

#include "carlitz/poly.hpp"

namespace carlitz {

// Reduced fraction of polynomials; denominator monic and coprime to the
// numerator.
struct Rational {
    Poly num;
    Poly den;

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    bool operator==(const Rational& other) const { return num == other.num && den == other.den; }
    bool operator!=(const Rational& other) const { return !(*this == other); }
};

Rational rat_from_poly(const Poly& p);
Rational rat_make(const Poly& num, const Poly& den);
Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_inv(const Rational& a);
Rational rat_pow(const Rational& a, long n); // any sign

std::string rat_to_string(const Rational& a);

} // namespace carlitz
