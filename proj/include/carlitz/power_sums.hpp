#pragma once

#include "carlitz/carlitz.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

inline constexpr std::int64_t kDefaultTermBudget = 100000;

// S_j(i) = sum over monic a of degree j of a^i, summed term by term.
// Parallelized over the enumeration; set parallel = false for the serial
// reference path.
Rational power_sum_bruteforce(const FieldPtr& f, int j, long i,
                              std::int64_t budget = kDefaultTermBudget,
                              bool parallel = true);

// Closed form where one is known (the vanishing range 0 <= i <= q^j-2
// and S_j(-c) = 1/L_j^c for 1 <= c <= q-1), brute force otherwise.
Rational power_sum(const FieldPtr& f, int j, long i,
                   std::int64_t budget = kDefaultTermBudget);

// Bernoulli-Goss number B(i) as an exact element of A. The j-range includes
// j = 0 and every j with q^j - 2 < i; later layers vanish.
Poly bernoulli_goss(const FieldPtr& f, long i, std::int64_t budget = kDefaultTermBudget);

// B(i) mod M, summing S_j(i) mod M with modular exponentiation; valid for
// i >= 0 since each layer is then a polynomial. Cheap even for huge i.
Poly bernoulli_goss_mod(const FieldPtr& f, long i, const Poly& modulus);

// B(q^d - c) == sum_{k<d} 1/L_k^{c-1} mod P, both sides computed
// independently; c in {2, .., q-1}.
bool lemma1_check(const Poly& prime, long c);

// phi_{P-1}(1) == P * B(q^d - 2) mod P^2, both sides independent.
bool corollary1_check(const Poly& prime);

} // namespace carlitz
