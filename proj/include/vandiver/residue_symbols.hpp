#pragma once

/**
 * @file residue_symbols.hpp
 * @brief Exact components in Z[zeta_p] and p-th power residue symbols.
 *
 * The mod-p exponent test only sees S_n modulo p. Deciding whether a
 * p-primary component is a global p-th power needs the integer itself: its
 * l-content, its residue symbol at a prime L above l, and its p-adic
 * distance from 1. Coefficients are GMP integers in the same power basis as
 * CycModP.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "vandiver/cycring.hpp"
#include "vandiver/jacobi.hpp"

namespace vandiver {

class CycBigInt {
public:
    explicit CycBigInt(std::uint32_t p);
    static CycBigInt one(std::uint32_t p);
    /// Integer constant k.
    static CycBigInt constant(std::uint32_t p, const mpz_class& k);
    /// sum_k counts[k] x^k for a signed length-p cyclic vector.
    static CycBigInt from_cyclic(std::uint32_t p, std::vector<mpz_class> cyclic);

    std::uint32_t p() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    CycBigInt& operator*=(const CycBigInt& other);
    CycBigInt& operator-=(const CycBigInt& other);
    friend CycBigInt operator*(CycBigInt a, const CycBigInt& b) { return a *= b; }
    friend CycBigInt operator-(CycBigInt a, const CycBigInt& b) { return a -= b; }
    friend bool operator==(const CycBigInt&, const CycBigInt&) = default;

    bool is_zero() const;
    /// Total bits over all coefficients.
    std::size_t bit_size() const;
    /// Largest coefficient bit length.
    std::size_t max_bits() const;

    CycModP reduce_mod_p() const;

    /// PARI rendering of the lifted polynomial.
    std::string to_string() const;

private:
    std::uint32_t p_;
    std::vector<mpz_class> coeffs_;
};

CycBigInt galois(const CycBigInt& u, std::uint64_t a);
CycBigInt pow(const CycBigInt& u, std::uint64_t e);

/// Exact J_i in Z[zeta_p], i in [1, c-1].
CycBigInt exact_jacobi_sum(const TwistContext& ctx, std::uint32_t i);

/// Exact J = J_1 ... J_{c-1}.
CycBigInt exact_twist_product(const TwistContext& ctx);

struct ExactOptions {
    /// Abort once the operands of a product would exceed this many bytes.
    std::size_t memory_cap_bytes = std::size_t{1} << 30;
};

/// Full-range component prod_{a=1}^{p-1} s_a(J^{a^{n-1} mod p}) with exact
/// coefficients. Throws ResourceLimit above the memory cap.
CycBigInt exact_twist_component(const TwistContext& ctx, std::uint32_t n, const ExactOptions& opts = {});

struct LContent {
    std::uint64_t v;     // min over coefficients of the l-adic valuation
    CycBigInt reduced;   // input / l^v
};

/// Throws InvalidArgument on zero input.
LContent l_content(const CycBigInt& sn, std::uint64_t l);

/// Min over coefficients of the p-adic valuation of sn - 1; nullopt when
/// sn = 1 exactly.
std::optional<std::uint64_t> p_valuation_of_difference(const CycBigInt& sn);

/// u = R^{(l-1)/p} mod l, where R is `reduced` evaluated at the first
/// r = g^{b(l-1)/p}, b = 1, 2, ..., that does not make it vanish mod l.
/// Throws InternalError if every p-th root of unity is a zero.
std::uint64_t residue_symbol(const CycBigInt& reduced, std::uint64_t l, std::uint64_t g);

enum class SymbolClass { non_local_at_L, local_at_L, local_at_p, global_pth_power };

const char* symbol_class_name(SymbolClass c);

struct SymbolReport {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint64_t l = 0;
    std::uint64_t g = 0;
    std::uint64_t v = 0;
    std::uint64_t s = 0;   // p-adic valuation of S_n - 1 (min over coefficients)
    std::uint64_t u = 0;
    bool local_at_p = false;  // s >= 1
    bool local_at_L = false;  // v = 0 mod p and u = 1
    SymbolClass classification = SymbolClass::non_local_at_L;

    nlohmann::json to_json() const;
    /// The lines the reference GP program prints for this (l, n).
    std::vector<std::string> text_lines() const;
};

SymbolReport classify(const TwistContext& ctx, std::uint32_t n, const ExactOptions& opts = {});

/// N_{K/Q}(u) as an exact integer, by evaluating u at the p-th roots of unity
/// modulo enough primes q = 1 mod p and recombining with CRT.
mpz_class norm(const CycBigInt& u);

struct PrimePower {
    int sign;               // +1 or -1
    std::uint64_t exponent;
};

/// When |N(u)| is a pure power of the prime l, returns its sign and exponent.
std::optional<PrimePower> norm_as_power(const CycBigInt& u, std::uint64_t l);

}  // namespace vandiver
