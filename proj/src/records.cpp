#include "vandiver/records.hpp"

#include <chrono>
#include <cmath>

#include "vandiver/error.hpp"

namespace vandiver {

nlohmann::json to_json(const ScanRecord& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["l"] = r.l;
    j["c"] = r.c;
    j["g"] = r.g;
    j["expp"] = r.expp.members();
    // Millisecond timings are kept to microsecond resolution.
    j["ms"] = std::round(r.ms * 1000.0) / 1000.0;
    return j;
}

ScanRecord scan_record_from_json(const nlohmann::json& j) {
    try {
        ScanRecord r;
        r.p = j.at("p").get<std::uint32_t>();
        r.l = j.at("l").get<std::uint64_t>();
        r.c = j.at("c").get<std::uint32_t>();
        r.g = j.at("g").get<std::uint64_t>();
        r.expp = ExponentSet(r.p, j.at("expp").get<std::vector<std::uint32_t>>());
        r.ms = j.value("ms", 0.0);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed scan record: ") + e.what());
    }
}

ScanRecord compute_scan_record(std::uint32_t p, std::uint64_t l, std::uint32_t c) {
    const auto start = std::chrono::steady_clock::now();
    TwistContext ctx(p, l, c);
    ScanRecord r;
    r.p = p;
    r.l = l;
    r.c = ctx.c();
    r.g = ctx.g();
    r.expp = exponent_set(ctx);
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ScanCache::ScanCache(std::filesystem::path path) : path_(std::move(path)) {
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
        if (ec) throw IoError("cannot create cache directory " + path_.parent_path().string());
    }
    if (std::filesystem::exists(path_)) {
        std::ifstream in(path_);
        if (!in) throw IoError("cannot read cache " + path_.string());
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                const ScanRecord r = scan_record_from_json(nlohmann::json::parse(line));
                records_[{r.p, r.l, r.c, r.g}] = r;
            } catch (const std::exception& e) {
                throw IoError(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw IoError("cannot append to cache " + path_.string());
}

const ScanRecord* ScanCache::find(std::uint32_t p, std::uint64_t l, std::uint32_t c, std::uint64_t g) const {
    auto it = records_.find({p, l, c, g});
    return it == records_.end() ? nullptr : &it->second;
}

void ScanCache::insert(const ScanRecord& r) {
    auto [it, fresh] = records_.insert_or_assign({r.p, r.l, r.c, r.g}, r);
    (void)it;
    if (fresh && out_.is_open()) {
        out_ << to_json(r).dump() << '\n';
        out_.flush();
        if (!out_) throw IoError("write failed on cache " + path_.string());
    }
}

}  // namespace vandiver
