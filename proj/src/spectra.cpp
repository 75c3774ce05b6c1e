#include "vandiver/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "vandiver/error.hpp"
#include "vandiver/jacobi.hpp"
#include "vandiver/parallel.hpp"
#include "vandiver/pari_format.hpp"

namespace vandiver {

// ---------------------------------------------------------------------------
// RankAccumulator

RankAccumulator::RankAccumulator(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("RankAccumulator: p must be an odd prime");
}

bool RankAccumulator::add(std::span<const std::uint32_t> row) {
    if (row.size() != p_ - 1) throw InvalidArgument("RankAccumulator: row length must be p-1");
    std::vector<std::uint32_t> v(row.begin(), row.end());
    for (auto& x : v) x %= p_;
    for (std::uint32_t col = 0; col + 1 < p_; ++col) {
        if (v[col] == 0) continue;
        auto it = pivots_.find(col);
        if (it == pivots_.end()) {
            const std::uint64_t inv = inv_mod(v[col], p_);
            for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
            pivots_.emplace(col, std::move(v));
            return true;
        }
        const std::uint64_t factor = v[col];
        const auto& basis = it->second;
        for (std::uint32_t k = col; k + 1 < p_; ++k)
            v[k] = static_cast<std::uint32_t>((v[k] + (p_ - factor) * basis[k]) % p_);
    }
    return false;
}

std::uint32_t default_rank_target(std::uint32_t p) {
    if (p == 3) return 1;
    if (p == 5) return 2;
    return p - 4;
}

std::string RankScanResult::text_line() const {
    return "p=" + std::to_string(p) + " r=" + std::to_string(rank) + " elp=" + std::to_string(l_p);
}

std::string RankScanResult::history_csv() const {
    std::ostringstream out;
    out << "l,rank\n";
    for (const auto& [l, r] : history) out << l << ',' << r << '\n';
    return out.str();
}

nlohmann::json RankScanResult::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& [l, r] : history) h.push_back({l, r});
    return {{"p", p}, {"target", target}, {"reached", reached}, {"elp", l_p}, {"rank", rank}, {"history", h}};
}

RankScanResult rank_scan(std::uint32_t p, SplitPrimeStream& stream, const RankScanOptions& opts) {
    if (stream.p() != p) throw InvalidArgument("rank_scan: stream belongs to another p");
    RankScanResult result;
    result.p = p;
    result.target = opts.target.value_or(default_rank_target(p));
    RankAccumulator acc(p);
    const std::size_t batch = std::max(1u, opts.jobs);
    std::uint64_t taken = 0;
    while (!result.reached && taken < opts.max_count) {
        const auto ls = stream.take(static_cast<std::size_t>(std::min<std::uint64_t>(batch, opts.max_count - taken)));
        if (ls.empty()) break;
        taken += ls.size();
        const auto rows = parallel_map<CycModP>(ls.size(), opts.jobs, [&](std::size_t i) {
            return twist_product(TwistContext(p, ls[i], opts.c));
        });
        for (std::size_t i = 0; i < ls.size(); ++i) {
            acc.add(rows[i]);
            result.rank = static_cast<std::uint32_t>(acc.rank());
            result.history.emplace_back(ls[i], result.rank);
            if (result.rank >= result.target) {
                result.reached = true;
                result.l_p = ls[i];
                break;
            }
        }
    }
    return result;
}

bool derivation_check(const CycModP& J) {
    const std::uint32_t p = J.p();
    if (p < 7) throw InvalidArgument("derivation_check: requires p >= 7");
    const auto a = J.coeffs();
    for (std::uint64_t d : {1, 2, 4}) {
        std::uint64_t sum = 0;
        for (std::uint64_t k = 1; k + 1 < p; ++k) sum = (sum + pow_mod(k, d, p) * a[k]) % p;
        if (sum != 0) return false;
    }
    return augmentation(J) == 1;
}

std::uint32_t conjugate_rank(std::uint32_t p, std::uint64_t l, std::uint32_t c) {
    const CycModP J = twist_product(TwistContext(p, l, c));
    RankAccumulator acc(p);
    for (std::uint32_t a = 1; a < p; ++a) acc.add(galois(J, a));
    return static_cast<std::uint32_t>(acc.rank());
}

// ---------------------------------------------------------------------------
// Trace polynomials

std::string TracePolynomial::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(coeffs.size());
    for (auto c : coeffs) parts.push_back(std::to_string(c));
    return render_pari_polynomial(parts);
}

std::string TracePolynomial::text_line() const {
    return "el=" + std::to_string(l) + " f=" + std::to_string(f) + " R=" + to_string();
}

nlohmann::json TracePolynomial::to_json() const { return {{"p", p}, {"l", l}, {"f", f}, {"R", coeffs}}; }

TracePolynomial trace_polynomial_from_json(const nlohmann::json& j) {
    try {
        TracePolynomial t;
        t.p = j.at("p").get<std::uint32_t>();
        t.l = j.at("l").get<std::uint64_t>();
        t.f = j.at("f").get<std::uint32_t>();
        t.coeffs = j.at("R").get<std::vector<std::uint32_t>>();
        if (t.coeffs.size() != std::size_t{t.p} + 1 || t.coeffs.back() != 1)
            throw InvalidArgument("R must be monic of degree p");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed trace record: ") + e.what());
    }
}

std::uint32_t residue_degree(std::uint32_t p, std::uint64_t l) {
    if (l % p != 1 || !is_prime(l)) throw InvalidArgument("residue_degree: l must be a prime = 1 mod p");
    const std::uint64_t order = multiplicative_order(p % l, l);
    return valuation(order, p) == valuation(l - 1, p) ? p : 1;
}

namespace {

// period_class[e] = log_g(e) mod p for e in [1, l-1].
std::vector<std::uint32_t> period_classes(std::uint32_t p, std::uint64_t l, std::uint64_t g) {
    std::vector<std::uint32_t> cls(l, 0);
    std::uint64_t e = 1;
    for (std::uint64_t t = 0; t + 1 < l; ++t) {
        cls[e] = static_cast<std::uint32_t>(t % p);
        e = e * g % l;
    }
    return cls;
}

// Expands prod_b (T - roots[b]) modulo q, low to high.
std::vector<std::uint64_t> monic_from_roots(const std::vector<std::uint64_t>& roots, std::uint64_t q) {
    std::vector<std::uint64_t> poly{1};
    for (auto r : roots) {
        std::vector<std::uint64_t> next(poly.size() + 1, 0);
        const std::uint64_t neg = (q - r % q) % q;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = (next[i + 1] + poly[i]) % q;
            next[i] = (next[i] + mul_mod(poly[i], neg, q)) % q;
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<std::uint32_t> trace_multimodular(std::uint32_t p, std::uint64_t l, std::uint64_t g) {
    const auto cls = period_classes(p, l, g);
    const std::uint64_t m = (l - 1) / p;
    // Every period has absolute value at most m, so each coefficient is
    // bounded by (m+1)^p.
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), m + 1, p);
    const mpz_class need = 2 * bound + 1;

    std::vector<mpz_class> x(p + 1, mpz_class(0));
    mpz_class modulus = 1;
    std::uint64_t k = ((std::uint64_t{1} << 61) - 1) / l;
    while (modulus <= need) {
        std::uint64_t q = 0;
        while (k > 0) {
            const std::uint64_t cand = 1 + k * l;
            --k;
            if (is_prime(cand)) {
                q = cand;
                break;
            }
        }
        if (q == 0) throw InternalError("trace_polynomial: ran out of primes = 1 mod l");
        std::uint64_t rho = 1;
        for (std::uint64_t h = 2; rho == 1; ++h) rho = pow_mod(h, (q - 1) / l, q);

        std::vector<std::uint64_t> periods(p, 0);
        std::uint64_t power = 1;
        for (std::uint64_t e = 1; e < l; ++e) {
            power = mul_mod(power, rho, q);
            auto& slot = periods[cls[e]];
            slot += power;
            if (slot >= q) slot -= q;
        }
        const auto poly = monic_from_roots(periods, q);

        const std::uint64_t m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), q);
        const std::uint64_t m_inv = inv_mod(m_mod, q);
        for (std::uint32_t i = 0; i <= p; ++i) {
            const std::uint64_t xi = mpz_fdiv_ui(x[i].get_mpz_t(), q);
            const std::uint64_t t = mul_mod((poly[i] + q - xi) % q, m_inv, q);
            mpz_addmul_ui(x[i].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), q);
    }

    std::vector<std::uint32_t> out(p + 1);
    for (std::uint32_t i = 0; i <= p; ++i) {
        if (2 * x[i] > modulus) x[i] -= modulus;
        out[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(x[i].get_mpz_t(), p));
    }
    return out;
}

std::vector<std::uint32_t> trace_dense(std::uint32_t p, std::uint64_t l, std::uint64_t g) {
    const auto cls = period_classes(p, l, g);
    std::vector<std::vector<std::uint64_t>> supports(p);
    for (std::uint64_t e = 1; e < l; ++e) supports[cls[e]].push_back(e);

    using Elem = std::vector<std::uint32_t>;  // element of F_p[y]/(y^l - 1)
    std::vector<Elem> poly{Elem(l, 0)};
    poly[0][0] = 1;
    for (std::uint32_t b = 0; b < p; ++b) {
        std::vector<Elem> next(poly.size() + 1, Elem(l, 0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            for (std::uint64_t k = 0; k < l; ++k)
                next[i + 1][k] = static_cast<std::uint32_t>((next[i + 1][k] + poly[i][k]) % p);
            std::vector<std::uint64_t> prod(l, 0);
            for (auto s : supports[b])
                for (std::uint64_t k = 0; k < l; ++k) {
                    if (poly[i][k] == 0) continue;
                    std::uint64_t idx = k + s;
                    if (idx >= l) idx -= l;
                    prod[idx] += poly[i][k];
                }
            for (std::uint64_t k = 0; k < l; ++k)
                next[i][k] = static_cast<std::uint32_t>((next[i][k] + (p - prod[k] % p)) % p);
        }
        poly = std::move(next);
    }

    std::vector<std::uint32_t> out(p + 1);
    for (std::uint32_t i = 0; i <= p; ++i) {
        const auto& c = poly[i];
        const std::uint32_t top = c[l - 1];
        for (std::uint64_t k = 1; k + 1 < l; ++k)
            if (c[k] != top) throw InternalError("trace_polynomial: coefficient outside F_p");
        out[i] = (c[0] + p - top) % p;
    }
    return out;
}

}  // namespace

TracePolynomial trace_polynomial(std::uint32_t p, std::uint64_t l, std::uint64_t g, TraceRoute route) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("trace_polynomial: p must be an odd prime");
    if (l % p != 1 || !is_prime(l))
        throw InvalidArgument("trace_polynomial: l=" + std::to_string(l) + " is not a prime = 1 mod p");
    if (l >= (std::uint64_t{1} << 32)) throw InvalidArgument("trace_polynomial: l must be below 2^32");
    if (g == 0) g = primitive_root(l);
    if (!is_primitive_root(g, l)) throw InvalidArgument("trace_polynomial: g is not a primitive root mod l");

    TracePolynomial t;
    t.p = p;
    t.l = l;
    t.f = residue_degree(p, l);
    t.coeffs = route == TraceRoute::dense ? trace_dense(p, l, g) : trace_multimodular(p, l, g);
    if (t.coeffs[p] != 1 || t.coeffs[p - 1] != 1) throw InternalError("trace_polynomial: period sum is not -1");
    return t;
}

TraceCatalog::TraceCatalog(std::filesystem::path path) : path_(std::move(path)) {
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
        if (ec) throw IoError("cannot create catalog directory " + path_.parent_path().string());
    }
    if (std::filesystem::exists(path_)) {
        std::ifstream in(path_);
        if (!in) throw IoError("cannot read catalog " + path_.string());
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                auto t = trace_polynomial_from_json(nlohmann::json::parse(line));
                entries_[{t.p, t.l}] = std::move(t);
            } catch (const std::exception& e) {
                throw IoError(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw IoError("cannot append to catalog " + path_.string());
}

const TracePolynomial* TraceCatalog::find(std::uint32_t p, std::uint64_t l) const {
    auto it = entries_.find({p, l});
    return it == entries_.end() ? nullptr : &it->second;
}

void TraceCatalog::insert(const TracePolynomial& t) {
    auto [it, fresh] = entries_.try_emplace({t.p, t.l}, t);
    (void)it;
    if (fresh && out_.is_open()) {
        out_ << t.to_json().dump() << '\n';
        out_.flush();
        if (!out_) throw IoError("write failed on catalog " + path_.string());
    }
}

nlohmann::json DistinctTraces::to_json() const {
    nlohmann::json seen = nlohmann::json::array();
    for (const auto& t : first_seen) seen.push_back(t.to_json());
    return {{"p", p}, {"bound", bound}, {"processed", processed}, {"count", count()}, {"first_seen", seen}};
}

DistinctTraces distinct_trace_count(std::uint32_t p, std::uint64_t bound, const DistinctTraceOptions& opts) {
    DistinctTraces result;
    result.p = p;
    result.bound = bound;
    std::set<std::vector<std::uint32_t>> seen;
    SplitPrimeStream stream(p, bound);
    const std::size_t batch = 4 * std::max(1u, opts.jobs);
    for (;;) {
        const auto ls = stream.take(batch);
        if (ls.empty()) break;
        std::vector<std::size_t> missing;
        std::vector<TracePolynomial> traces(ls.size());
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const TracePolynomial* hit = opts.catalog ? opts.catalog->find(p, ls[i]) : nullptr;
            if (hit) {
                traces[i] = *hit;
            } else {
                missing.push_back(i);
            }
        }
        auto computed = parallel_map<TracePolynomial>(missing.size(), opts.jobs, [&](std::size_t k) {
            return trace_polynomial(p, ls[missing[k]]);
        });
        for (std::size_t k = 0; k < missing.size(); ++k) {
            if (opts.catalog) opts.catalog->insert(computed[k]);
            traces[missing[k]] = std::move(computed[k]);
        }
        for (const auto& t : traces) {
            ++result.processed;
            if (seen.insert(t.coeffs).second) result.first_seen.push_back(t);
            if (opts.on_trace) opts.on_trace(t);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Heuristic

double heuristic_probability(std::uint32_t p) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("heuristic_probability: p must be a prime >= 5");
    const int n = static_cast<int>((p - 3) / 2);
    const double lq = std::log1p(-1.0 / p);
    const double lp = -std::log(static_cast<double>(p));
    auto lfact = [](int k) { return std::lgamma(static_cast<double>(k) + 1.0); };
    auto lbinom = [&](int k) { return lfact(n) - lfact(k) - lfact(n - k); };

    double total = 0.0;
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            const double weight = std::exp(lbinom(j) + lbinom(k) + (2 * n - j - k) * lq + (j + k) * lp);
            double bracket = 1.0;
            if (j + k <= n) bracket = -std::expm1(lfact(n - k) + lfact(n - j) - lfact(n) - lfact(n - k - j));
            total += weight * bracket;
        }
    }
    return total;
}

}  // namespace vandiver
