#include "vandiver/residue_symbols.hpp"

#include <algorithm>
#include <limits>

#include "vandiver/error.hpp"
#include "vandiver/modarith.hpp"
#include "vandiver/pari_format.hpp"

namespace vandiver {

// ---------------------------------------------------------------------------
// CycBigInt

CycBigInt::CycBigInt(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("CycBigInt: p must be an odd prime");
    coeffs_.assign(p - 1, mpz_class(0));
}

CycBigInt CycBigInt::one(std::uint32_t p) { return constant(p, 1); }

CycBigInt CycBigInt::constant(std::uint32_t p, const mpz_class& k) {
    CycBigInt out(p);
    out.coeffs_[0] = k;
    return out;
}

CycBigInt CycBigInt::from_cyclic(std::uint32_t p, std::vector<mpz_class> cyclic) {
    if (cyclic.size() != p) throw InvalidArgument("CycBigInt::from_cyclic: expected p entries");
    CycBigInt out(p);
    const mpz_class& top = cyclic[p - 1];
    for (std::uint32_t k = 0; k + 1 < p; ++k) out.coeffs_[k] = cyclic[k] - top;
    return out;
}

CycBigInt& CycBigInt::operator*=(const CycBigInt& other) {
    if (other.p_ != p_) throw InvalidArgument("CycBigInt: mismatched primes");
    const std::uint32_t p = p_;
    std::vector<mpz_class> acc(p, mpz_class(0));
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j + 1 < p; ++j) {
            std::uint32_t k = i + j;
            if (k >= p) k -= p;
            mpz_addmul(acc[k].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
        }
    }
    *this = from_cyclic(p, std::move(acc));
    return *this;
}

CycBigInt& CycBigInt::operator-=(const CycBigInt& other) {
    if (other.p_ != p_) throw InvalidArgument("CycBigInt: mismatched primes");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

bool CycBigInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

std::size_t CycBigInt::bit_size() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
    return bits;
}

std::size_t CycBigInt::max_bits() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

CycModP CycBigInt::reduce_mod_p() const {
    std::vector<std::int64_t> small(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), coeffs_[k].get_mpz_t(), p_);
        small[k] = r.get_si();
    }
    return CycModP::from_coeffs(p_, small);
}

std::string CycBigInt::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(coeffs_.size());
    for (const auto& c : coeffs_) parts.push_back(c.get_str());
    return render_pari_polynomial(parts);
}

CycBigInt galois(const CycBigInt& u, std::uint64_t a) {
    const std::uint32_t p = u.p();
    a %= p;
    if (a == 0) throw InvalidArgument("galois: a must be nonzero mod p");
    std::vector<mpz_class> cyclic(p, mpz_class(0));
    for (std::uint64_t k = 0; k + 1 < p; ++k) cyclic[k * a % p] = u.coeffs()[k];
    return CycBigInt::from_cyclic(p, std::move(cyclic));
}

CycBigInt pow(const CycBigInt& u, std::uint64_t e) {
    CycBigInt result = CycBigInt::one(u.p());
    CycBigInt base = u;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Exact Jacobi sums and components

namespace {

CycBigInt jacobi_from_counts(std::uint32_t p, const std::vector<std::uint64_t>& counts) {
    std::vector<mpz_class> cyclic(p);
    for (std::uint32_t e = 0; e < p; ++e) cyclic[e] = -mpz_class(static_cast<unsigned long>(counts[e]));
    return CycBigInt::from_cyclic(p, std::move(cyclic));
}

void check_budget(const CycBigInt& a, const CycBigInt& b, const ExactOptions& opts) {
    // A product needs roughly the operands plus a result of their combined size.
    const std::size_t bytes = 2 * (a.bit_size() + b.bit_size()) / 8;
    if (bytes > opts.memory_cap_bytes)
        throw ResourceLimit("exact component exceeds the memory cap of " + std::to_string(opts.memory_cap_bytes) +
                            " bytes");
}

}  // namespace

CycBigInt exact_jacobi_sum(const TwistContext& ctx, std::uint32_t i) {
    if (i < 1 || i + 1 > ctx.c()) throw InvalidArgument("exact_jacobi_sum: index outside [1, c-1]");
    LogPairHistogram hist(ctx);
    return jacobi_from_counts(ctx.p(), hist.exponent_counts(i));
}

CycBigInt exact_twist_product(const TwistContext& ctx) {
    LogPairHistogram hist(ctx);
    CycBigInt J = CycBigInt::one(ctx.p());
    for (std::uint32_t i = 1; i < ctx.c(); ++i) J *= jacobi_from_counts(ctx.p(), hist.exponent_counts(i));
    return J;
}

CycBigInt exact_twist_component(const TwistContext& ctx, std::uint32_t n, const ExactOptions& opts) {
    const std::uint32_t p = ctx.p();
    check_exponent(p, n);
    const CycBigInt J = exact_twist_product(ctx);
    std::vector<CycBigInt> powers;
    powers.reserve(p - 1);
    powers.push_back(J);
    for (std::uint32_t j = 2; j < p; ++j) {
        check_budget(powers.back(), J, opts);
        powers.push_back(powers.back() * J);
    }
    CycBigInt Sn = CycBigInt::one(p);
    for (std::uint32_t a = 1; a < p; ++a) {
        const auto an = static_cast<std::uint32_t>(pow_mod(a, n - 1, p));
        const CycBigInt factor = galois(powers[an - 1], a);
        check_budget(Sn, factor, opts);
        Sn *= factor;
    }
    return Sn;
}

// ---------------------------------------------------------------------------
// Valuations and the residue symbol

LContent l_content(const CycBigInt& sn, std::uint64_t l) {
    if (sn.is_zero()) throw InvalidArgument("l_content: zero has no content");
    const mpz_class ell(static_cast<unsigned long>(l));
    std::uint64_t v = std::numeric_limits<std::uint64_t>::max();
    for (const auto& c : sn.coeffs()) {
        if (c == 0) continue;
        mpz_class rest;
        v = std::min<std::uint64_t>(v, mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), ell.get_mpz_t()));
    }
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ell.get_mpz_t(), v);
    std::vector<mpz_class> cyclic(sn.p(), mpz_class(0));
    for (std::size_t k = 0; k < sn.coeffs().size(); ++k)
        mpz_divexact(cyclic[k].get_mpz_t(), sn.coeffs()[k].get_mpz_t(), scale.get_mpz_t());
    return {v, CycBigInt::from_cyclic(sn.p(), std::move(cyclic))};
}

std::optional<std::uint64_t> p_valuation_of_difference(const CycBigInt& sn) {
    const CycBigInt diff = sn - CycBigInt::one(sn.p());
    if (diff.is_zero()) return std::nullopt;
    const mpz_class prime(sn.p());
    std::uint64_t v = std::numeric_limits<std::uint64_t>::max();
    for (const auto& c : diff.coeffs()) {
        if (c == 0) continue;
        mpz_class rest;
        v = std::min<std::uint64_t>(v, mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), prime.get_mpz_t()));
    }
    return v;
}

std::uint64_t residue_symbol(const CycBigInt& reduced, std::uint64_t l, std::uint64_t g) {
    const std::uint32_t p = reduced.p();
    if (l % p != 1) throw InvalidArgument("residue_symbol: l is not 1 mod p");
    const std::uint64_t M = (l - 1) / p;
    std::vector<std::uint64_t> c(reduced.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = mpz_fdiv_ui(reduced.coeffs()[k].get_mpz_t(), static_cast<unsigned long>(l));
    const std::uint64_t ro = pow_mod(g, M, l);
    std::uint64_t r = 1;
    for (std::uint32_t b = 1; b < p; ++b) {
        r = mul_mod(r, ro, l);
        std::uint64_t value = 0;
        for (std::size_t k = c.size(); k-- > 0;) value = (mul_mod(value, r, l) + c[k]) % l;
        if (value != 0) return pow_mod(value, M, l);
    }
    throw InternalError("residue_symbol: element vanishes at every prime above l");
}

const char* symbol_class_name(SymbolClass c) {
    switch (c) {
        case SymbolClass::non_local_at_L: return "non_local_at_L";
        case SymbolClass::local_at_L: return "local_at_L";
        case SymbolClass::local_at_p: return "local_at_p";
        case SymbolClass::global_pth_power: return "global_pth_power";
    }
    return "unknown";
}

nlohmann::json SymbolReport::to_json() const {
    return {{"p", p},   {"n", n},   {"l", l},
            {"g", g},   {"v", v},   {"s", s},
            {"u", u},   {"local_at_p", local_at_p},
            {"local_at_L", local_at_L}, {"classification", symbol_class_name(classification)}};
}

std::vector<std::string> SymbolReport::text_lines() const {
    std::vector<std::string> lines;
    lines.push_back("p=" + std::to_string(p) + " el=" + std::to_string(l) + " v=" + std::to_string(v) +
                    " u=" + std::to_string(u));
    if (local_at_p) lines.emplace_back("Sn local pth power at P");
    if (local_at_L) lines.emplace_back("Sn local pth power at L");
    if (!local_at_L) lines.emplace_back("Sn NON local pth power at L");
    if (classification == SymbolClass::global_pth_power) lines.emplace_back("Sn GLOBAL pth power");
    return lines;
}

SymbolReport classify(const TwistContext& ctx, std::uint32_t n, const ExactOptions& opts) {
    const CycBigInt Sn = exact_twist_component(ctx, n, opts);
    SymbolReport r;
    r.p = ctx.p();
    r.n = n;
    r.l = ctx.l();
    r.g = ctx.g();
    const auto s = p_valuation_of_difference(Sn);
    r.s = s.value_or(std::numeric_limits<std::uint64_t>::max());
    auto content = l_content(Sn, ctx.l());
    r.v = content.v;
    r.u = residue_symbol(content.reduced, ctx.l(), ctx.g());
    r.local_at_p = r.s >= 1;
    r.local_at_L = r.v % r.p == 0 && r.u == 1;
    if (r.local_at_p && r.local_at_L) {
        r.classification = SymbolClass::global_pth_power;
    } else if (r.local_at_p) {
        r.classification = SymbolClass::local_at_p;
    } else if (r.local_at_L) {
        r.classification = SymbolClass::local_at_L;
    } else {
        r.classification = SymbolClass::non_local_at_L;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Norms

namespace {

// Primes q = 1 mod p just below 2^61, walked downward.
class NormPrimes {
public:
    explicit NormPrimes(std::uint32_t p) : p_(p), k_(((std::uint64_t{1} << 61) - 1) / p) {}
    std::uint64_t next() {
        for (;;) {
            const std::uint64_t q = 1 + k_ * p_;
            --k_;
            if (is_prime(q)) return q;
        }
    }

private:
    std::uint64_t p_;
    std::uint64_t k_;
};

std::uint64_t primitive_pth_root(std::uint32_t p, std::uint64_t q) {
    for (std::uint64_t h = 2;; ++h) {
        const std::uint64_t w = pow_mod(h, (q - 1) / p, q);
        if (w != 1) return w;
    }
}

}  // namespace

mpz_class norm(const CycBigInt& u) {
    const std::uint32_t p = u.p();
    if (u.is_zero()) return 0;
    // |N(u)| <= (sum |c_k|)^{p-1}.
    mpz_class l1 = 0;
    for (const auto& c : u.coeffs()) l1 += abs(c);
    const std::size_t bound_bits = (p - 1) * mpz_sizeinbase(l1.get_mpz_t(), 2) + 2;

    NormPrimes primes(p);
    mpz_class x = 0;        // CRT residue
    mpz_class modulus = 1;  // product of primes so far
    std::vector<std::uint64_t> c(u.coeffs().size());
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bound_bits) {
        const std::uint64_t q = primes.next();
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = mpz_fdiv_ui(u.coeffs()[k].get_mpz_t(), static_cast<unsigned long>(q));
        const std::uint64_t w = primitive_pth_root(p, q);
        std::uint64_t prod = 1;
        std::uint64_t root = 1;
        for (std::uint32_t j = 1; j < p; ++j) {
            root = mul_mod(root, w, q);
            std::uint64_t value = 0;
            for (std::size_t k = c.size(); k-- > 0;) value = (mul_mod(value, root, q) + c[k]) % q;
            prod = mul_mod(prod, value, q);
        }
        // Garner step: x += modulus * ((prod - x) / modulus mod q).
        const std::uint64_t x_mod = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(q));
        const std::uint64_t m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(q));
        const std::uint64_t t = mul_mod((prod + q - x_mod) % q, inv_mod(m_mod, q), q);
        mpz_addmul_ui(x.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
        mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(q));
    }
    if (2 * x > modulus) x -= modulus;
    return x;
}

std::optional<PrimePower> norm_as_power(const CycBigInt& u, std::uint64_t l) {
    const mpz_class N = norm(u);
    if (N == 0) return std::nullopt;
    mpz_class rest;
    const mpz_class ell(static_cast<unsigned long>(l));
    const std::uint64_t e = mpz_remove(rest.get_mpz_t(), N.get_mpz_t(), ell.get_mpz_t());
    if (abs(rest) != 1) return std::nullopt;
    return PrimePower{rest > 0 ? 1 : -1, e};
}

}  // namespace vandiver
