#pragma once

/**
 * @file criteria.hpp
 * @brief The two Vandiver tests built on exponent sets, plus the scans
 * that drive them.
 *
 *  - single-prime test: Vandiver holds for p if E_l(p) and E_0(p) are
 *    disjoint for some split prime l;
 *  - running intersection: it holds if E_{l_1}(p) n ... n E_{l_N}(p) is
 *    empty for some l_1, ..., l_N. No Bernoulli numbers are involved.
 *
 * Both tests are one-sided at finite bounds: a verdict that never empties
 * is reported as "not established", never as a counterexample.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vandiver/jacobi.hpp"
#include "vandiver/modarith.hpp"
#include "vandiver/records.hpp"

namespace vandiver {

struct ScanOptions {
    unsigned jobs = 1;          // mod-p worker threads
    std::uint32_t c = 0;        // twist parameter, 0 = smallest primitive root mod p
    ScanCache* cache = nullptr;
    /// Called once per l, in stream order, after the record is known.
    std::function<void(const ScanRecord&)> on_record;
};

/// Records for the given primes, in order. Uses and fills opts.cache.
std::vector<ScanRecord> scan_records(std::uint32_t p, const std::vector<std::uint64_t>& ls,
                                     const ScanOptions& opts = {});

enum class CriterionMode { single_prime, running_intersection };

struct CriterionVerdict {
    std::uint32_t p = 0;
    CriterionMode mode = CriterionMode::single_prime;
    std::vector<std::uint64_t> witnesses;   // the l used, in order
    std::vector<ExponentSet> sets;          // E_l(p) for each witness
    ExponentSet irregular{3};               // E_0(p); empty in running mode
    ExponentSet intersection{3};
    bool holds = false;
    bool regular_shortcut = false;          // E_0(p) empty, single-prime mode
    std::uint32_t steps = 0;                // N

    nlohmann::json to_json() const;
};

/// E_l(p) n E_0(p) = {} for one split prime l.
CriterionVerdict criterion_a(std::uint32_t p, std::uint64_t l, const ScanOptions& opts = {});

/// Intersects E_l(p) over the stream until the running intersection is
/// empty or max_n primes have been used.
CriterionVerdict criterion_b(std::uint32_t p, SplitPrimeStream& stream, std::uint32_t max_n,
                             const ScanOptions& opts = {});

struct MinimalEmpty {
    std::uint64_t l;
    std::uint32_t index;  // 1-based position of l among the split primes
};

/// First split prime l <= l_max with E_l(p) empty.
std::optional<MinimalEmpty> minimal_empty_l(std::uint32_t p, std::uint64_t l_max, const ScanOptions& opts = {});

struct DensityTable {
    std::uint32_t p = 0;
    std::vector<std::uint64_t> counts;  // counts[n/2 - 1] for even n in [2, p-3]
    std::uint64_t processed = 0;        // split primes examined
    std::uint64_t hits = 0;             // total primarity events
    std::uint64_t last_l = 0;

    explicit DensityTable(std::uint32_t p = 3);
    void add(const ScanRecord& r);
    nlohmann::json to_json() const;
};

/// Processes the first `count` split primes of p.
DensityTable density_scan(std::uint32_t p, std::uint64_t count, const ScanOptions& opts = {});

}  // namespace vandiver
