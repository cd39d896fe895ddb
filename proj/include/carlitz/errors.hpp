#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

enum class errc {
    non_prime_p,
    q_too_small,
    no_embedding,
    m_not_coprime_to_p,
    divide_by_zero_poly,
    constant_polynomial,
    not_monic,
    inexact_division,
    algebra_mismatch,
    not_prime,
    non_integral_result,
    c_out_of_range,
    budget_exceeded,
    outside_convergence_domain,
    descent_failure,
    not_in_domain,
    unexpected_valuation,
    usage_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

const char* errc_name(errc code);

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw error(code, what);
}

} // namespace carlitz
