#include "vandiver/bernoulli.hpp"

#include <string>

#include "vandiver/error.hpp"
#include "vandiver/modarith.hpp"

namespace vandiver {

namespace {

void check_prime(std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

std::uint64_t teichmuller(std::uint64_t a, std::uint32_t p) {
    check_prime(p);
    if (a % p == 0) throw InvalidArgument("teichmuller: a is divisible by p");
    const std::uint64_t p2 = std::uint64_t{p} * p;
    return pow_mod(a % p2, p, p2);
}

std::uint32_t b1_omega(std::uint32_t p, std::uint32_t m) {
    check_prime(p);
    const std::uint64_t p2 = std::uint64_t{p} * p;
    std::uint64_t sum = 0;
    for (std::uint64_t a = 1; a < p; ++a) {
        const std::uint64_t w = pow_mod(teichmuller(a, p), m, p2);
        sum = (sum + mul_mod(w, a, p2)) % p2;
    }
    // For m = 0 the sum is p(p-1)/2, also divisible by p.
    if (sum % p != 0)
        throw InternalError("b1_omega: sum not divisible by p (p=" + std::to_string(p) +
                            ", m=" + std::to_string(m) + ")");
    return static_cast<std::uint32_t>(sum / p);
}

IrregularityReport irregularity_report(std::uint32_t p) {
    check_prime(p);
    IrregularityReport report{p, ExponentSet(p), 0, {}};
    for (std::uint32_t n = 2; n + 3 <= p; n += 2) {
        const std::uint32_t r = b1_omega(p, n - 1);
        report.residues[n] = r;
        if (r == 0) report.set.insert(n);
    }
    report.index = static_cast<std::uint32_t>(report.set.size());
    return report;
}

std::uint32_t b_c_factor(std::uint32_t p, std::uint32_t c, std::uint32_t n) {
    check_prime(p);
    check_exponent(p, n);
    if (!is_primitive_root(c, p)) throw InvalidArgument("b_c_factor: c is not a primitive root mod p");
    const std::uint64_t chi = teichmuller(c, p) % p;  // omega(c) mod p
    const std::uint64_t chi_c = pow_mod(chi, p - n, p);
    const std::uint64_t unit = (c % p + p - chi_c) % p;
    return static_cast<std::uint32_t>(unit * b1_omega(p, n - 1) % p);
}

}  // namespace vandiver
