#pragma once

/**
 * @file cycring.hpp
 * @brief The ring F_p[x]/(Phi_p(x)), the reduction mod p of Z[zeta_p].
 *
 * Elements are stored in the power basis 1, x, ..., x^{p-2}; x^{p-1} is
 * eliminated with x^{p-1} = -(x^{p-2} + ... + x + 1). This is the basis PARI
 * uses for lift(Mod(f, polcyclo(p))), so printed polynomials compare
 * character for character.
 *
 * Internally most operations go through Z[x]/(x^p - 1): a length-p cyclic
 * vector c is canonicalised by subtracting c[p-1] from every other slot.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vandiver {

class CycModP {
public:
    /// Zero element of F_p[x]/Phi_p. p must be an odd prime < 2^16.
    explicit CycModP(std::uint32_t p);

    /// From coefficients of x^0, x^1, ...; any length, any sign. Reduced mod
    /// Phi_p and mod p.
    static CycModP from_coeffs(std::uint32_t p, std::span<const std::int64_t> coeffs);
    static CycModP one(std::uint32_t p);
    /// x^k for any k >= 0 (exponents taken mod p).
    static CycModP monomial(std::uint32_t p, std::uint64_t k);
    /// sum_k counts[k] * x^k for a length-p cyclic vector.
    static CycModP from_cyclic(std::uint32_t p, std::span<const std::uint64_t> counts);

    std::uint32_t p() const { return p_; }
    /// p-1 canonical coefficients in [0, p).
    std::span<const std::uint32_t> coeffs() const { return coeffs_; }
    std::uint32_t coeff(std::size_t k) const { return coeffs_[k]; }

    CycModP& operator+=(const CycModP& other);
    CycModP& operator-=(const CycModP& other);
    CycModP& operator*=(const CycModP& other);
    CycModP& scale(std::uint32_t s);

    friend CycModP operator+(CycModP a, const CycModP& b) { return a += b; }
    friend CycModP operator-(CycModP a, const CycModP& b) { return a -= b; }
    friend CycModP operator*(CycModP a, const CycModP& b) { return a *= b; }
    friend bool operator==(const CycModP&, const CycModP&) = default;

    /// PARI rendering of the lifted polynomial, e.g. "2*x^3 + x + 1".
    std::string to_string() const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> coeffs_;
};

/// Canonical product. Throws InvalidArgument on mismatched p.
CycModP mul(const CycModP& u, const CycModP& v);

/// Square-and-multiply; pow(u, 0) = 1.
CycModP pow(const CycModP& u, std::uint64_t e);

/// Image under s_a: x -> x^a. a must be nonzero mod p.
CycModP galois(const CycModP& u, std::uint64_t a);

/// Image of u under x -> 1, i.e. the residue modulo (1 - zeta_p).
std::uint32_t augmentation(const CycModP& u);

bool is_one(const CycModP& u);

}  // namespace vandiver
