#include "vandiver/jacobi.hpp"

#include <algorithm>
#include <string>

#include "vandiver/error.hpp"

namespace vandiver {

// ---------------------------------------------------------------------------
// ExponentSet

ExponentSet::ExponentSet(std::uint32_t p, std::vector<std::uint32_t> members) : p_(p) {
    for (auto n : members) insert(n);
}

ExponentSet ExponentSet::full(std::uint32_t p) {
    ExponentSet out(p);
    for (std::uint32_t n = 2; n + 3 <= p; n += 2) out.members_.push_back(n);
    return out;
}

void check_exponent(std::uint32_t p, std::uint32_t n) {
    if (n % 2 != 0 || n < 2 || n + 3 > p)
        throw InvalidArgument("exponent " + std::to_string(n) + " is not an even integer in [2, " +
                              std::to_string(p) + "-3]");
}

void ExponentSet::insert(std::uint32_t n) {
    check_exponent(p_, n);
    auto it = std::lower_bound(members_.begin(), members_.end(), n);
    if (it == members_.end() || *it != n) members_.insert(it, n);
}

bool ExponentSet::contains(std::uint32_t n) const {
    return std::binary_search(members_.begin(), members_.end(), n);
}

ExponentSet ExponentSet::intersect(const ExponentSet& other) const {
    if (other.p_ != p_) throw InvalidArgument("ExponentSet::intersect: mismatched p");
    ExponentSet out(p_);
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out.members_));
    return out;
}

std::string ExponentSet::join(const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(members_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// TwistContext

TwistContext::TwistContext(std::uint32_t p, std::uint64_t l, std::uint32_t c, std::uint64_t g,
                           std::shared_ptr<const LogTable> logs)
    : p_(p), l_(l), c_(c), g_(g), logs_(std::move(logs)) {
    if (p < 3 || p >= (1u << 16) || !is_prime(p))
        throw InvalidArgument("TwistContext: p must be an odd prime below 2^16, got " + std::to_string(p));
    if (!is_prime(l) || l % p != 1)
        throw InvalidArgument("TwistContext: l=" + std::to_string(l) + " is not a prime = 1 mod " +
                              std::to_string(p));
    if (c_ == 0) c_ = static_cast<std::uint32_t>(primitive_root(p));
    if (c_ < 2 || c_ >= p || !is_primitive_root(c_, p))
        throw InvalidArgument("TwistContext: c=" + std::to_string(c_) + " is not a primitive root mod " +
                              std::to_string(p));
    if (g_ == 0) g_ = logs_ ? logs_->base() : primitive_root(l);
    if (!logs_) {
        logs_ = std::make_shared<const LogTable>(l, g_);
    } else if (logs_->modulus() != l || logs_->base() != g_ % l) {
        throw InvalidArgument("TwistContext: log table does not match (l, g)");
    }
}

// ---------------------------------------------------------------------------
// Jacobi sums

LogPairHistogram::LogPairHistogram(const TwistContext& ctx) : p_(ctx.p()) {
    counts_.assign(std::size_t{p_} * p_, 0);
    const auto logs = ctx.logs().entries();
    const std::uint64_t l = ctx.l();
    // x runs upward while 1 - x = l + 1 - x runs downward: two streaming reads.
    for (std::uint64_t x = 2; x < l; ++x) {
        const std::uint32_t a = logs[x] % p_;
        const std::uint32_t b = logs[l + 1 - x] % p_;
        ++counts_[a * p_ + b];
    }
}

std::vector<std::uint64_t> LogPairHistogram::exponent_counts(std::uint32_t i) const {
    std::vector<std::uint64_t> out(p_, 0);
    const std::uint32_t step = i % p_;
    for (std::uint32_t a = 0; a < p_; ++a) {
        const std::uint32_t shift = static_cast<std::uint32_t>(std::uint64_t{a} * step % p_);
        const std::uint32_t* row = &counts_[a * p_];
        for (std::uint32_t b = 0; b < p_; ++b) {
            std::uint32_t e = shift + b;
            if (e >= p_) e -= p_;
            out[e] += row[b];
        }
    }
    return out;
}

namespace {

CycModP jacobi_from_counts(std::uint32_t p, const std::vector<std::uint64_t>& counts) {
    return CycModP(p) - CycModP::from_cyclic(p, counts);
}

void check_index(const TwistContext& ctx, std::uint32_t i) {
    if (i < 1 || i + 1 > ctx.c())
        throw InvalidArgument("jacobi_sum: index " + std::to_string(i) + " outside [1, c-1]");
}

}  // namespace

CycModP jacobi_sum(const TwistContext& ctx, std::uint32_t i) {
    check_index(ctx, i);
    LogPairHistogram hist(ctx);
    return jacobi_from_counts(ctx.p(), hist.exponent_counts(i));
}

CycModP twist_product(const TwistContext& ctx) {
    LogPairHistogram hist(ctx);
    CycModP J = CycModP::one(ctx.p());
    for (std::uint32_t i = 1; i < ctx.c(); ++i) J *= jacobi_from_counts(ctx.p(), hist.exponent_counts(i));
    return J;
}

std::vector<CycModP> twist_powers(const CycModP& J) {
    std::vector<CycModP> out;
    out.reserve(J.p() - 1);
    out.push_back(J);
    for (std::uint32_t j = 2; j < J.p(); ++j) out.push_back(out.back() * J);
    return out;
}

CycModP component(const std::vector<CycModP>& powers, std::uint32_t n) {
    if (powers.empty()) throw InvalidArgument("component: empty powers list");
    const std::uint32_t p = powers.front().p();
    if (powers.size() != p - 1) throw InvalidArgument("component: powers list must hold J^1..J^{p-1}");
    check_exponent(p, n);
    CycModP Sn = CycModP::one(p);
    for (std::uint32_t a = 1; 2 * a <= p - 1; ++a) {
        const auto an = static_cast<std::uint32_t>(pow_mod(a, n - 1, p));
        Sn *= galois(powers[an - 1], a);
    }
    return Sn;
}

CycModP component(const TwistContext& ctx, const CycModP& J, std::uint32_t n) {
    if (J.p() != ctx.p()) throw InvalidArgument("component: J lives in a different ring");
    check_exponent(ctx.p(), n);
    return component(twist_powers(J), n);
}

ExponentSet exponent_set_by_products(const TwistContext& ctx) {
    const auto powers = twist_powers(twist_product(ctx));
    ExponentSet out(ctx.p());
    for (std::uint32_t n = 2; n + 3 <= ctx.p(); n += 2)
        if (is_one(component(powers, n))) out.insert(n);
    return out;
}

// ---------------------------------------------------------------------------
// Logarithm route.
//
// Mod p, Phi_p(x) = (x - 1)^{p-1}, so with t = x - 1 the ring is the
// truncated power series ring F_p[t]/(t^{p-1}). On units u = 1 + O(t) the
// series log(u) = sum_{k<p-1} (-1)^{k+1} (u-1)^k / k only needs inverses of
// k <= p-2, and it is an isomorphism onto tF_p[t]/(t^{p-1}) with inverse exp.
// Galois automorphisms preserve the t-adic filtration, so
//
//     log S_n = sum_{a <= (p-1)/2} a^{n-1} s_a(log J),
//
// and S_n = 1 iff that linear combination vanishes.

namespace {

using Series = std::vector<std::uint32_t>;  // coefficients of t^0 .. t^{p-2}

Series to_t_basis(const CycModP& u) {
    const std::uint32_t p = u.p();
    const std::size_t n = p - 1;
    Series f(n, 0);
    // Horner in (1 + t): f <- f * (1 + t) + u_k.
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = n - 1; j > 0; --j) f[j] = (f[j] + f[j - 1]) % p;
        f[0] = (f[0] + u.coeff(k)) % p;
    }
    return f;
}

CycModP from_t_basis(std::uint32_t p, const Series& s) {
    const std::size_t n = p - 1;
    std::vector<std::int64_t> r(n, 0);
    // Horner in (x - 1): r <- r * (x - 1) + s_j.
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t k = n - 1; k > 0; --k) r[k] = (r[k - 1] - r[k] + p) % p;
        r[0] = (p - r[0] + s[j]) % p;
    }
    return CycModP::from_coeffs(p, r);
}

}  // namespace

CycModP one_unit_log(const CycModP& u) {
    const std::uint32_t p = u.p();
    if (augmentation(u) != 1) throw InvalidArgument("one_unit_log: argument is not 1 mod (x - 1)");
    const Series f = to_t_basis(u);
    const std::size_t n = p - 1;
    // L' = f'/f, solved from f L' = f' one coefficient at a time.
    Series dL(n, 0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::uint64_t acc = std::uint64_t{f[k + 1]} * (k + 1) % p;
        for (std::size_t j = 1; j <= k; ++j) acc += std::uint64_t{p - f[j]} * dL[k - j] % p;
        dL[k] = static_cast<std::uint32_t>(acc % p);
    }
    Series L(n, 0);
    for (std::size_t k = 0; k + 1 < n; ++k)
        L[k + 1] = static_cast<std::uint32_t>(std::uint64_t{dL[k]} * inv_mod(k + 1, p) % p);
    return from_t_basis(p, L);
}

CycModP one_unit_exp(const CycModP& y) {
    const std::uint32_t p = y.p();
    if (augmentation(y) != 0) throw InvalidArgument("one_unit_exp: argument is not 0 mod (x - 1)");
    const Series s = to_t_basis(y);
    const std::size_t n = p - 1;
    // E' = y' E  =>  k E_k = sum_{j=1}^{k} j y_j E_{k-j}.
    Series E(n, 0);
    E[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += std::uint64_t{s[j]} * j % p * E[k - j] % p;
        E[k] = static_cast<std::uint32_t>(acc % p * inv_mod(k, p) % p);
    }
    return from_t_basis(p, E);
}

ExponentSet exponent_set_of(const CycModP& J) {
    const std::uint32_t p = J.p();
    const std::size_t width = p - 1;
    const std::uint32_t half = (p - 1) / 2;
    const CycModP L = one_unit_log(J);
    std::vector<std::uint32_t> conj(std::size_t{half} * width);
    for (std::uint32_t a = 1; a <= half; ++a) {
        const CycModP img = galois(L, a);
        std::copy(img.coeffs().begin(), img.coeffs().end(), conj.begin() + (a - 1) * width);
    }
    ExponentSet out(p);
    std::vector<std::uint32_t> w(half);
    for (std::uint32_t n = 2; n + 3 <= p; n += 2) {
        for (std::uint32_t a = 1; a <= half; ++a) w[a - 1] = static_cast<std::uint32_t>(pow_mod(a, n - 1, p));
        bool vanishes = true;
        for (std::size_t k = 0; k < width && vanishes; ++k) {
            std::uint64_t acc = 0;
            for (std::uint32_t a = 0; a < half; ++a) acc += std::uint64_t{w[a]} * conj[a * width + k];
            vanishes = acc % p == 0;
        }
        if (vanishes) out.insert(n);
    }
    return out;
}

ExponentSet exponent_set(const TwistContext& ctx) { return exponent_set_of(twist_product(ctx)); }

}  // namespace vandiver
