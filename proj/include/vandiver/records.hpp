#pragma once

/**
 * @file records.hpp
 * @brief Per-(p, l) scan results and their JSON-lines cache.
 *
 * One cache line per result:
 *
 *     {"p":37,"l":1481,"c":2,"g":3,"expp":[30],"ms":0.41}
 *
 * The cache is append-only. A scan consults it before computing an l and
 * appends whatever it computes, so an interrupted scan resumes where it
 * stopped.
 */

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <tuple>

#include "json.hpp"

#include "vandiver/jacobi.hpp"

namespace vandiver {

struct ScanRecord {
    std::uint32_t p = 0;
    std::uint64_t l = 0;
    std::uint32_t c = 0;
    std::uint64_t g = 0;
    ExponentSet expp{3};
    double ms = 0.0;

    std::uint64_t l_mod_p2() const { return l % (std::uint64_t{p} * p); }
};

nlohmann::json to_json(const ScanRecord& r);
/// Throws InvalidArgument on a malformed record.
ScanRecord scan_record_from_json(const nlohmann::json& j);

/// Computes E_l(p) for one split prime and times it. c = 0 selects the
/// smallest primitive root mod p.
ScanRecord compute_scan_record(std::uint32_t p, std::uint64_t l, std::uint32_t c = 0);

class ScanCache {
public:
    using Key = std::tuple<std::uint32_t, std::uint64_t, std::uint32_t, std::uint64_t>;

    /// In-memory only.
    ScanCache() = default;
    /// Loads `path` if it exists and appends new records to it. Throws
    /// IoError when the file cannot be opened or holds a malformed line.
    explicit ScanCache(std::filesystem::path path);

    const ScanRecord* find(std::uint32_t p, std::uint64_t l, std::uint32_t c, std::uint64_t g) const;
    void insert(const ScanRecord& r);
    std::size_t size() const { return records_.size(); }

private:
    std::filesystem::path path_;
    std::map<Key, ScanRecord> records_;
    std::ofstream out_;
};

}  // namespace vandiver
