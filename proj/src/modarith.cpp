#include "vandiver/modarith.hpp"

#include <array>
#include <string>

#include "vandiver/error.hpp"

namespace vandiver {

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : bases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : bases) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
    if (a % q == 0) throw InvalidArgument("multiplicative_order: a is 0 mod q");
    std::uint64_t order = q - 1;
    for (std::uint64_t r : prime_factors(q - 1)) {
        while (order % r == 0 && pow_mod(a, order / r, q) == 1) order /= r;
    }
    return order;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t q) {
    if (q == 2) return g % 2 == 1;
    if (g % q == 0) return false;
    for (std::uint64_t r : prime_factors(q - 1)) {
        if (pow_mod(g, (q - 1) / r, q) == 1) return false;
    }
    return true;
}

std::uint64_t primitive_root(std::uint64_t q) {
    if (!is_prime(q)) throw InvalidArgument("primitive_root: " + std::to_string(q) + " is not prime");
    if (q == 2) return 1;
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (std::uint64_t r : factors) {
            if (pow_mod(g, (q - 1) / r, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
    unsigned v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

LogTable::LogTable(std::uint64_t l, std::uint64_t g) : modulus_(l), base_(g % l) {
    if (l > max_modulus)
        throw ResourceLimit("LogTable: modulus " + std::to_string(l) + " exceeds the 2^26 cap");
    if (!is_prime(l)) throw InvalidArgument("LogTable: modulus " + std::to_string(l) + " is not prime");
    table_.assign(l, 0);
    if (l == 2) return;
    // Entry 0 of the table never holds a log; use 0 as "unseen" and mark
    // residue 1 separately since its log is also 0.
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < l; ++k) {
        if (k > 0 && (x == 1 || table_[x] != 0))
            throw InvalidArgument("LogTable: " + std::to_string(g) + " is not a primitive root mod " +
                                  std::to_string(l));
        table_[x] = static_cast<std::uint32_t>(k);
        x = x * base_ % l;
    }
}

std::uint32_t LogTable::log(std::uint64_t residue) const {
    residue %= modulus_;
    if (residue == 0) throw InvalidArgument("LogTable::log: zero has no logarithm");
    return table_[residue];
}

SplitPrimeStream::SplitPrimeStream(std::uint64_t p, std::optional<std::uint64_t> l_max)
    : p_(p), l_max_(l_max) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("SplitPrimeStream: p must be an odd prime");
}

std::optional<std::uint64_t> SplitPrimeStream::next() {
    for (;;) {
        ++cursor_;
        const std::uint64_t l = 1 + 2 * cursor_ * p_;
        if (l_max_ && l > *l_max_) {
            --cursor_;
            return std::nullopt;
        }
        if (is_prime(l)) return l;
    }
}

std::vector<std::uint64_t> SplitPrimeStream::take(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    while (out.size() < count) {
        auto l = next();
        if (!l) break;
        out.push_back(*l);
    }
    return out;
}

std::vector<std::uint64_t> split_primes(std::uint64_t p, std::size_t count) {
    return SplitPrimeStream(p).take(count);
}

std::vector<std::uint64_t> split_primes_upto(std::uint64_t p, std::uint64_t l_max) {
    SplitPrimeStream s(p, l_max);
    std::vector<std::uint64_t> out;
    while (auto l = s.next()) out.push_back(*l);
    return out;
}

}  // namespace vandiver
