#include "vandiver/cycring.hpp"

#include <string>

#include "vandiver/error.hpp"
#include "vandiver/modarith.hpp"
#include "vandiver/pari_format.hpp"

namespace vandiver {

namespace {

void require_same_ring(const CycModP& a, const CycModP& b) {
    if (a.p() != b.p())
        throw InvalidArgument("CycModP: mismatched primes " + std::to_string(a.p()) + " and " +
                              std::to_string(b.p()));
}

}  // namespace

CycModP::CycModP(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 16) || !is_prime(p))
        throw InvalidArgument("CycModP: p must be an odd prime below 2^16, got " + std::to_string(p));
    coeffs_.assign(p - 1, 0);
}

CycModP CycModP::from_cyclic(std::uint32_t p, std::span<const std::uint64_t> counts) {
    CycModP out(p);
    if (counts.size() != p) throw InvalidArgument("CycModP::from_cyclic: expected p entries");
    const std::uint64_t top = counts[p - 1] % p;
    for (std::uint32_t k = 0; k + 1 < p; ++k)
        out.coeffs_[k] = static_cast<std::uint32_t>((counts[k] % p + p - top) % p);
    return out;
}

CycModP CycModP::from_coeffs(std::uint32_t p, std::span<const std::int64_t> coeffs) {
    std::vector<std::uint64_t> cyclic(p, 0);
    const std::int64_t sp = p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const std::int64_t r = ((coeffs[k] % sp) + sp) % sp;
        cyclic[k % p] += static_cast<std::uint64_t>(r);
    }
    return from_cyclic(p, cyclic);
}

CycModP CycModP::one(std::uint32_t p) {
    CycModP out(p);
    out.coeffs_[0] = 1;
    return out;
}

CycModP CycModP::monomial(std::uint32_t p, std::uint64_t k) {
    std::vector<std::uint64_t> cyclic(p, 0);
    cyclic[k % p] = 1;
    return from_cyclic(p, cyclic);
}

CycModP& CycModP::operator+=(const CycModP& other) {
    require_same_ring(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = (coeffs_[k] + other.coeffs_[k]) % p_;
    return *this;
}

CycModP& CycModP::operator-=(const CycModP& other) {
    require_same_ring(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = (coeffs_[k] + p_ - other.coeffs_[k]) % p_;
    return *this;
}

CycModP& CycModP::scale(std::uint32_t s) {
    s %= p_;
    for (auto& c : coeffs_) c = static_cast<std::uint32_t>(std::uint64_t{c} * s % p_);
    return *this;
}

CycModP& CycModP::operator*=(const CycModP& other) {
    require_same_ring(*this, other);
    const std::uint32_t p = p_;
    const std::size_t n = p - 1;
    // Cyclic convolution mod x^p - 1. Each slot sums at most p-1 products of
    // values < p, so p^3 < 2^48 fits comfortably.
    std::vector<std::uint64_t> acc(p, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = coeffs_[i];
        if (a == 0) continue;
        const std::uint32_t* b = other.coeffs_.data();
        const std::size_t split = p - i;  // j < split lands at i + j, else wraps
        const std::size_t first = split < n ? split : n;
        for (std::size_t j = 0; j < first; ++j) acc[i + j] += a * b[j];
        for (std::size_t j = first; j < n; ++j) acc[i + j - p] += a * b[j];
    }
    *this = from_cyclic(p, acc);
    return *this;
}

std::string CycModP::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(coeffs_.size());
    for (auto c : coeffs_) parts.push_back(std::to_string(c));
    return render_pari_polynomial(parts);
}

CycModP mul(const CycModP& u, const CycModP& v) { return u * v; }

CycModP pow(const CycModP& u, std::uint64_t e) {
    CycModP result = CycModP::one(u.p());
    CycModP base = u;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycModP galois(const CycModP& u, std::uint64_t a) {
    const std::uint32_t p = u.p();
    a %= p;
    if (a == 0) throw InvalidArgument("galois: a must be nonzero mod p");
    std::vector<std::uint64_t> cyclic(p, 0);
    for (std::uint64_t k = 0; k + 1 < p; ++k) cyclic[k * a % p] = u.coeff(k);
    return CycModP::from_cyclic(p, cyclic);
}

std::uint32_t augmentation(const CycModP& u) {
    std::uint64_t s = 0;
    for (auto c : u.coeffs()) s += c;
    return static_cast<std::uint32_t>(s % u.p());
}

bool is_one(const CycModP& u) {
    auto c = u.coeffs();
    if (c[0] != 1) return false;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0) return false;
    return true;
}

}  // namespace vandiver
