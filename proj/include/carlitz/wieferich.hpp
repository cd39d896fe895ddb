#pragma once

#include <optional>

#include "carlitz/power_sums.hpp"

namespace carlitz {

// exact rational a/b over int64, used for the Lemma 7 bound bookkeeping
struct Frac {
    long long num = 0;
    long long den = 1;

    bool operator==(const Frac& other) const = default;
};

Frac frac_make(long long num, long long den);
Frac frac_sub(Frac a, Frac b);
bool frac_less(Frac a, Frac b);
std::string frac_to_string(Frac a);

// V(d) = sum_{i<d} L_{d-1}/L_i, of degree deg L_{d-1}; its degree-d prime
// divisors are exactly the Wieferich primes of degree d
Poly V_poly(const FieldPtr& f, int d);

struct WieferichCertificate {
    Poly prime;
    Poly phi_pm1_mod_p2;   // == 0
    Poly bernoulli_mod_p;  // B(q^d - 2) mod P == 0
    bool direct_ok;
    bool bernoulli_ok;
};

struct WieferichReport {
    std::int64_t q = 0;
    int d = 0;
    std::int64_t Nq = 0; // primes of degree d (necklace count)
    std::int64_t M = 0;  // Wieferich primes of degree d
    std::int64_t N = 0;  // Nq - M
    Frac bound_main;     // (1/d)(q-1)q^{d-1}
    Frac bound_coeff;    // q/(d(q-1)), multiplying q^{d/2}
    bool bound_ok;       // N > bound_main - bound_coeff sqrt(q^d), exactly
    bool m_bound_ok;     // M d <= q^{d-1}
    std::vector<WieferichCertificate> primes;
    std::uint64_t seed = 0;
    bool exhaustive = false; // every degree-d prime was tested directly
};

// gcd-with-(T^{q^d} - T) route, factored with the given seed; every hit is
// double-certified (direct congruence and Bernoulli-Goss indicator)
WieferichReport wieferich_primes(const FieldPtr& f, int d, std::uint64_t seed,
                                 bool exhaustive = false,
                                 std::int64_t exhaustive_budget = 10000);

std::vector<WieferichReport> counts_table(const FieldPtr& f, int dmax, std::uint64_t seed);

// direct test P^2 | phi_{P-1}(1)
bool is_wieferich(const Poly& prime);

struct DegreePConstruction {
    Poly H;                    // sum_{i<p} X^i / i!
    bool roots_in_Fq;          // S subset of F_q
    std::vector<FieldElement> roots; // the roots found in F_q
    std::vector<WieferichCertificate> primes; // certified degree-p Wieferich primes
    bool count_ok;             // |primes| >= (p-1) q / p, when roots_in_Fq
    bool lemma_congruences_ok; // L_k == (1/k!)(-alpha)^k mod P on each hit
};

DegreePConstruction degree_p_construction(const FieldPtr& f, std::uint64_t seed);

struct Question1Hit {
    Poly Q;
    Poly P;          // repeated prime factor of phi_Q(1)
    bool certified;  // P^2 | phi_Q(1) and P does not divide Q
};

std::vector<Question1Hit> question1_search(const Poly& b, int dmin, int dmax,
                                           std::uint64_t seed,
                                           std::int64_t budget = 1000000);

} // namespace carlitz
