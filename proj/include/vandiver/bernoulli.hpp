#pragma once

/**
 * @file bernoulli.hpp
 * @brief Generalized Bernoulli numbers B_{1, omega^m} mod p, where omega is
 * the Teichmuller character, and the irregular exponents derived from them.
 *
 * B_{1, omega^{n-1}} = (1/p) sum_{a=1}^{p-1} omega(a)^{n-1} a is congruent to
 * B_n / n mod p for even n in [2, p-3]. Only p^2-precision lifts are needed,
 * so everything stays in 64-bit arithmetic.
 */

#include <cstdint>
#include <map>

#include "vandiver/jacobi.hpp"

namespace vandiver {

/// The (p-1)-th root of unity mod p^2 congruent to a mod p, computed as
/// a^p mod p^2. Throws InvalidArgument when p | a.
std::uint64_t teichmuller(std::uint64_t a, std::uint32_t p);

/// B_{1, omega^m} mod p for m in [0, p-2]. Throws InternalError if the
/// defining sum is not divisible by p.
std::uint32_t b1_omega(std::uint32_t p, std::uint32_t m);

struct IrregularityReport {
    std::uint32_t p;
    ExponentSet set;                              // n with B_{1,omega^{n-1}} = 0 mod p
    std::uint32_t index;                          // i(p) = |set|
    std::map<std::uint32_t, std::uint32_t> residues;  // n -> B_{1,omega^{n-1}} mod p
};

/// Evaluates b1_omega for every even n in [2, p-3]. p = 3 gives an empty
/// report.
IrregularityReport irregularity_report(std::uint32_t p);

/// (c - omega^{p-n}(c)) * B_{1, omega^{n-1}} mod p.
std::uint32_t b_c_factor(std::uint32_t p, std::uint32_t c, std::uint32_t n);

}  // namespace vandiver
