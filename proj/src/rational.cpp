#include "carlitz/rational.hpp"

namespace carlitz {

Rational rat_from_poly(const Poly& p)
{
    return {p, poly_one(p.field)};
}

Rational rat_make(const Poly& num, const Poly& den)
{
    if (den.is_zero()) fail(errc::divide_by_zero_poly, "zero denominator");
    if (num.is_zero()) return {poly_zero(num.field), poly_one(num.field)};
    Poly g = poly_gcd(num, den);
    Poly n = poly_div_exact(num, g);
    Poly d = poly_div_exact(den, g);
    // make denominator monic, pushing the unit into the numerator
    FieldElement u = fe_inv(d.lead());
    return {poly_scale(n, u), poly_scale(d, u)};
}

Rational rat_add(const Rational& a, const Rational& b)
{
    return rat_make(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                    poly_mul(a.den, b.den));
}

Rational rat_sub(const Rational& a, const Rational& b)
{
    return rat_make(poly_sub(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                    poly_mul(a.den, b.den));
}

Rational rat_mul(const Rational& a, const Rational& b)
{
    return rat_make(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

Rational rat_inv(const Rational& a)
{
    return rat_make(a.den, a.num);
}

Rational rat_pow(const Rational& a, long n)
{
    if (n < 0) return rat_pow(rat_inv(a), -n);
    Rational r = rat_from_poly(poly_one(a.num.field));
    Rational base = a;
    while (n > 0) {
        if (n & 1) r = rat_mul(r, base);
        n >>= 1;
        if (n) base = rat_mul(base, base);
    }
    return r;
}

std::string rat_to_string(const Rational& a)
{
    if (a.is_polynomial()) return poly_to_string(a.num);
    return "(" + poly_to_string(a.num) + ") / (" + poly_to_string(a.den) + ")";
}

} // namespace carlitz
