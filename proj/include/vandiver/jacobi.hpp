#pragma once

/**
 * @file jacobi.hpp
 * @brief Jacobi sums of order-p characters of F_l^x reduced mod p, their
 * product J = J_1 ... J_{c-1} (the twist tau(psi)^{c - sigma_c} up to a root
 * of unity), odd isotypic components, and the exponent set E_l(p).
 *
 * The character psi is fixed by psi(g) = zeta_p for the primitive root g of
 * the context, and
 *
 *     J_i = - sum_{x != 0, 1} psi(x)^i psi(1 - x).
 *
 * The component attached to an even n in [2, p-3] is the half-range product
 *
 *     S_n = prod_{a=1}^{(p-1)/2} s_a(J^{a^{n-1} mod p}),
 *
 * which represents the omega^{p-n}-part of the twist to the power -1/2, up
 * to p-th powers. n lies in E_l(p) exactly when S_n = 1 mod p.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vandiver/cycring.hpp"
#include "vandiver/modarith.hpp"

namespace vandiver {

// Sorted set of even exponents in [2, p-3].
class ExponentSet {
public:
    explicit ExponentSet(std::uint32_t p) : p_(p) {}
    ExponentSet(std::uint32_t p, std::vector<std::uint32_t> members);

    /// Every admissible exponent: all even n in [2, p-3].
    static ExponentSet full(std::uint32_t p);

    void insert(std::uint32_t n);
    bool contains(std::uint32_t n) const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    std::uint32_t p() const { return p_; }
    const std::vector<std::uint32_t>& members() const { return members_; }

    ExponentSet intersect(const ExponentSet& other) const;

    /// "10,34" (ascending, comma separated, empty string for the empty set).
    std::string join(const std::string& sep = ",") const;

    friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> members_;
};

/// Throws InvalidArgument unless n is even and 2 <= n <= p-3.
void check_exponent(std::uint32_t p, std::uint32_t n);

class TwistContext {
public:
    /// c = 0 picks the smallest primitive root mod p, g = 0 the smallest
    /// primitive root mod l. A prebuilt log table for (l, g) may be passed in.
    TwistContext(std::uint32_t p, std::uint64_t l, std::uint32_t c = 0, std::uint64_t g = 0,
                 std::shared_ptr<const LogTable> logs = nullptr);

    std::uint32_t p() const { return p_; }
    std::uint64_t l() const { return l_; }
    std::uint32_t c() const { return c_; }
    std::uint64_t g() const { return g_; }
    const LogTable& logs() const { return *logs_; }
    std::shared_ptr<const LogTable> shared_logs() const { return logs_; }

private:
    std::uint32_t p_;
    std::uint64_t l_;
    std::uint32_t c_;
    std::uint64_t g_;
    std::shared_ptr<const LogTable> logs_;
};

// Joint distribution of (log x mod p, log(1-x) mod p) over x in F_l \ {0, 1}.
// Every J_i is a linear image of it, so one O(l) pass serves all i.
class LogPairHistogram {
public:
    explicit LogPairHistogram(const TwistContext& ctx);

    std::uint32_t p() const { return p_; }
    /// Number of x with log x = a and log(1-x) = b (mod p).
    std::uint32_t count(std::uint32_t a, std::uint32_t b) const { return counts_[a * p_ + b]; }

    /// Length-p vector N with N[e] = #{x : i log x + log(1-x) = e mod p},
    /// so that J_i = -sum_e N[e] x^e.
    std::vector<std::uint64_t> exponent_counts(std::uint32_t i) const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> counts_;
};

/// J_i reduced mod p, i in [1, c-1].
CycModP jacobi_sum(const TwistContext& ctx, std::uint32_t i);

/// J = J_1 ... J_{c-1} mod p.
CycModP twist_product(const TwistContext& ctx);

/// J^1, ..., J^{p-1}; entry j-1 holds J^j.
std::vector<CycModP> twist_powers(const CycModP& J);

/// Literal half-range component S_n from a precomputed powers list.
CycModP component(const std::vector<CycModP>& powers, std::uint32_t n);

/// Literal half-range component S_n of J = twist_product(ctx).
CycModP component(const TwistContext& ctx, const CycModP& J, std::uint32_t n);

/// E_l(p) through the truncated logarithm (see jacobi.cpp); O(p^2) per l
/// once J is known.
ExponentSet exponent_set(const TwistContext& ctx);
ExponentSet exponent_set_of(const CycModP& J);

/// E_l(p) by forming every S_n with the powers list and testing S_n == 1.
/// Quadratic in the number of exponents times p^2; the reference route.
ExponentSet exponent_set_by_products(const TwistContext& ctx);

/// The truncated logarithm of a unit u = 1 mod (x - 1), returned in the
/// x-power basis. log(uv) = log(u) + log(v); log(u) = 0 iff u = 1.
CycModP one_unit_log(const CycModP& u);

/// Inverse of one_unit_log on the augmentation ideal.
CycModP one_unit_exp(const CycModP& y);

}  // namespace vandiver
