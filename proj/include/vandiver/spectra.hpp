#pragma once

/**
 * @file spectra.hpp
 * @brief Statistics over the family J(l): F_p-ranks of coefficient rows,
 * Gaussian-period trace polynomials, and a naive heuristic probability.
 */

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "vandiver/cycring.hpp"
#include "vandiver/modarith.hpp"

namespace vandiver {

// ---------------------------------------------------------------------------
// Ranks

/// Incremental row echelon form over F_p for rows of length p-1.
class RankAccumulator {
public:
    explicit RankAccumulator(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Reduces `row` against the basis and keeps it if independent.
    /// Returns true when the rank went up.
    bool add(std::span<const std::uint32_t> row);
    bool add(const CycModP& u) { return add(u.coeffs()); }

private:
    std::uint32_t p_;
    std::map<std::uint32_t, std::vector<std::uint32_t>> pivots_;  // pivot column -> row with a 1 there
};

/// p-4 for p >= 7; the observed caps 2 and 1 for p = 5 and p = 3.
std::uint32_t default_rank_target(std::uint32_t p);

struct RankScanOptions {
    unsigned jobs = 1;
    std::uint32_t c = 0;
    std::optional<std::uint32_t> target;  // default_rank_target(p) when unset
    std::uint64_t max_count = ~std::uint64_t{0};
};

struct RankScanResult {
    std::uint32_t p = 0;
    std::uint32_t target = 0;
    bool reached = false;
    std::uint64_t l_p = 0;  // first l at which the target was hit, 0 if never
    std::uint32_t rank = 0;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> history;  // (l, rank after l)

    /// "p=7 r=3 elp=113"
    std::string text_line() const;
    std::string history_csv() const;
    nlohmann::json to_json() const;
};

/// Folds the coefficient rows of J(l), l from `stream`, until the rank hits
/// the target or the stream (or max_count) runs out.
RankScanResult rank_scan(std::uint32_t p, SplitPrimeStream& stream, const RankScanOptions& opts = {});

/// The linear relations sum_{k=1}^{p-2} k^d a_k = 0 (d = 1, 2, 4) and the
/// affine one sum_k a_k = 1 on the coefficients of J. Requires p >= 7.
bool derivation_check(const CycModP& J);

/// F_p-rank of the p-1 conjugates s_a(J(l)).
std::uint32_t conjugate_rank(std::uint32_t p, std::uint64_t l, std::uint32_t c = 0);

// ---------------------------------------------------------------------------
// Trace polynomials

struct TracePolynomial {
    std::uint32_t p = 0;
    std::uint64_t l = 0;
    std::uint32_t f = 0;                // residue degree of p in the degree-p subfield of Q(mu_l)
    std::vector<std::uint32_t> coeffs;  // p+1 entries, low to high, monic

    /// PARI rendering, highest degree first.
    std::string to_string() const;
    /// "el=29 f=7 R=x^7 + x^6 + 2*x^5 + 5*x + 1"
    std::string text_line() const;
    nlohmann::json to_json() const;
    friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;
};

TracePolynomial trace_polynomial_from_json(const nlohmann::json& j);

/// f = p when p is not a p-th power mod l, 1 otherwise.
std::uint32_t residue_degree(std::uint32_t p, std::uint64_t l);

enum class TraceRoute {
    multimodular,  // exact integer coefficients via primes q = 1 mod l
    dense,         // products in F_p[y]/(y^l - 1); O(p l^2)
};

/// R_l = prod_b (x - eta_b) mod p, eta_b = sum_j y^{g^{b+jp}}. g = 0 picks
/// the smallest primitive root mod l.
TracePolynomial trace_polynomial(std::uint32_t p, std::uint64_t l, std::uint64_t g = 0,
                                 TraceRoute route = TraceRoute::multimodular);

/// JSON-lines store of trace polynomials keyed by (p, l).
class TraceCatalog {
public:
    TraceCatalog() = default;
    explicit TraceCatalog(std::filesystem::path path);

    const TracePolynomial* find(std::uint32_t p, std::uint64_t l) const;
    void insert(const TracePolynomial& t);
    std::size_t size() const { return entries_.size(); }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::map<std::pair<std::uint32_t, std::uint64_t>, TracePolynomial> entries_;
};

struct DistinctTraceOptions {
    unsigned jobs = 1;
    TraceCatalog* catalog = nullptr;
    std::function<void(const TracePolynomial&)> on_trace;  // every l, in order
};

struct DistinctTraces {
    std::uint32_t p = 0;
    std::uint64_t bound = 0;
    std::uint64_t processed = 0;
    /// First occurrence of each distinct R_l, in order of appearance.
    std::vector<TracePolynomial> first_seen;

    std::size_t count() const { return first_seen.size(); }
    nlohmann::json to_json() const;
};

/// Distinct R_l over the split primes l <= bound.
DistinctTraces distinct_trace_count(std::uint32_t p, std::uint64_t bound, const DistinctTraceOptions& opts = {});

// ---------------------------------------------------------------------------
// Heuristic

/// sum_{j,k=0}^{N} C(N,j) C(N,k) (1-1/p)^{2N-j-k} p^{-j-k} (1 - (N-k)!(N-j)!/(N!(N-k-j)!)),
/// N = (p-3)/2, the bracket being 1 when j+k > N. Requires p >= 5.
double heuristic_probability(std::uint32_t p);

}  // namespace vandiver
