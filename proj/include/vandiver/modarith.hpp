#pragma once

/**
 * @file modarith.hpp
 * @brief Word-size modular arithmetic: primality, primitive roots, discrete
 * logarithm tables, and the stream of primes l = 1 + 2ip.
 *
 * Everything here works on 64-bit integers. Products go through unsigned
 * __int128 so moduli up to 2^64 are safe.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vandiver {

inline constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Inverse of a modulo a prime m (Fermat). a must be nonzero mod m.
inline constexpr std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    return pow_mod(a, m - 2, m);
}

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Multiplicative order of a modulo the prime q.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

/// Smallest positive primitive root modulo the prime q (1 for q = 2).
std::uint64_t primitive_root(std::uint64_t q);

/// True when g generates (Z/qZ)^x.
bool is_primitive_root(std::uint64_t g, std::uint64_t q);

/// Exponent of the largest power of p dividing n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

// Discrete logarithms in F_l^x to a fixed primitive root, one table entry per
// residue. Immutable once built; share it freely across threads.
class LogTable {
public:
    /// Largest modulus a table will be built for (256 MiB of entries).
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 26;

    /// Builds the table with one pass g^0, g^1, ... Throws InvalidArgument
    /// when l is not prime or g is not a primitive root, ResourceLimit above
    /// max_modulus.
    LogTable(std::uint64_t l, std::uint64_t g);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t base() const { return base_; }

    /// k in [0, l-2] with g^k = residue. residue must be nonzero mod l.
    std::uint32_t log(std::uint64_t residue) const;

    /// Raw view indexed by residue; entry 0 is unused.
    std::span<const std::uint32_t> entries() const { return table_; }

private:
    std::uint64_t modulus_;
    std::uint64_t base_;
    std::vector<std::uint32_t> table_;
};

// Primes l = 1 + 2ip, i = 1, 2, ..., in increasing order. These are exactly
// the primes that split completely in Q(zeta_p).
class SplitPrimeStream {
public:
    /// p must be an odd prime. l_max bounds the emitted primes (inclusive).
    explicit SplitPrimeStream(std::uint64_t p, std::optional<std::uint64_t> l_max = std::nullopt);

    /// Next split prime, or nullopt once l_max is passed.
    std::optional<std::uint64_t> next();

    /// Up to count further primes.
    std::vector<std::uint64_t> take(std::size_t count);

    std::uint64_t p() const { return p_; }
    std::uint64_t cursor() const { return cursor_; }

private:
    std::uint64_t p_;
    std::uint64_t cursor_ = 0;
    std::optional<std::uint64_t> l_max_;
};

/// Convenience: the first `count` split primes for p.
std::vector<std::uint64_t> split_primes(std::uint64_t p, std::size_t count);

/// All split primes l <= l_max.
std::vector<std::uint64_t> split_primes_upto(std::uint64_t p, std::uint64_t l_max);

}  // namespace vandiver
