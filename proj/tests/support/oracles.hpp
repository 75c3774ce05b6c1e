#pragma once

// Slow, independent reference computations used only by the tests. None of
// them touch the library's log tables, histograms or logarithm route.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// B_0, ..., B_n as exact rationals (Akiyama-Tanigawa).
std::vector<mpq_class> bernoulli_numbers(unsigned n);

/// Even n in [2, p-3] with p | numerator(B_n).
std::vector<std::uint32_t> irregular_exponents(std::uint32_t p, const std::vector<mpq_class>& bern);

/// Discrete logs mod l by walking powers of g; log[0] is unused.
std::vector<std::uint64_t> discrete_logs(std::uint64_t l, std::uint64_t g);

/// Exact J_i = -sum_{x != 0, 1} zeta^{i log x + log(1-x)} in Z[zeta_p],
/// coefficients on 1, ..., zeta^{p-2}.
std::vector<mpz_class> jacobi_exact(std::uint32_t p, std::uint64_t l, std::uint64_t g, std::uint32_t i);

/// Schoolbook product in Z[x]/Phi_p.
std::vector<mpz_class> mul_exact(std::uint32_t p, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

/// x -> x^a on Z[x]/Phi_p.
std::vector<mpz_class> galois_exact(std::uint32_t p, const std::vector<mpz_class>& a, std::uint32_t k);

/// E_l(p) by literal half-range products mod p on plain integer vectors.
std::vector<std::uint32_t> exponent_set_naive(std::uint32_t p, std::uint64_t l, std::uint32_t c, std::uint64_t g);

/// The heuristic double sum in exact rational arithmetic.
mpq_class heuristic_exact(std::uint32_t p);

/// R_l mod p from periods evaluated as complex numbers (small l only).
std::vector<std::uint32_t> trace_polynomial_complex(std::uint32_t p, std::uint64_t l, std::uint64_t g);

/// F_p-rank of a list of rows by plain Gaussian elimination.
std::uint32_t rank_mod_p(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

}  // namespace oracle
