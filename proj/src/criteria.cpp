#include "vandiver/criteria.hpp"

#include <algorithm>

#include "vandiver/bernoulli.hpp"
#include "vandiver/error.hpp"
#include "vandiver/parallel.hpp"

namespace vandiver {

std::vector<ScanRecord> scan_records(std::uint32_t p, const std::vector<std::uint64_t>& ls,
                                     const ScanOptions& opts) {
    const std::uint32_t c = opts.c == 0 ? static_cast<std::uint32_t>(primitive_root(p)) : opts.c;
    std::vector<ScanRecord> out(ls.size());
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const ScanRecord* hit = opts.cache ? opts.cache->find(p, ls[i], c, primitive_root(ls[i])) : nullptr;
        if (hit) {
            out[i] = *hit;
        } else {
            missing.push_back(i);
        }
    }
    auto computed = parallel_map<ScanRecord>(missing.size(), opts.jobs, [&](std::size_t k) {
        return compute_scan_record(p, ls[missing[k]], c);
    });
    for (std::size_t k = 0; k < missing.size(); ++k) {
        out[missing[k]] = computed[k];
        if (opts.cache) opts.cache->insert(computed[k]);
    }
    if (opts.on_record)
        for (const auto& r : out) opts.on_record(r);
    return out;
}

namespace {

// Pulls records from a split-prime stream `jobs` at a time, handing them to
// `visit` in stream order until it returns false or the stream ends.
void fold_stream(std::uint32_t p, SplitPrimeStream& stream, std::uint64_t limit, const ScanOptions& opts,
                 const std::function<bool(const ScanRecord&)>& visit) {
    const std::size_t batch = std::max(1u, opts.jobs);
    std::uint64_t taken = 0;
    ScanOptions inner = opts;
    inner.on_record = nullptr;
    while (taken < limit) {
        const auto ls = stream.take(static_cast<std::size_t>(std::min<std::uint64_t>(batch, limit - taken)));
        if (ls.empty()) return;
        taken += ls.size();
        for (const auto& r : scan_records(p, ls, inner)) {
            if (opts.on_record) opts.on_record(r);
            if (!visit(r)) return;
        }
    }
}

const char* mode_name(CriterionMode m) { return m == CriterionMode::single_prime ? "a" : "b"; }

}  // namespace

nlohmann::json CriterionVerdict::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["mode"] = mode_name(mode);
    j["witnesses"] = witnesses;
    nlohmann::json sets_json = nlohmann::json::array();
    for (const auto& s : sets) sets_json.push_back(s.members());
    j["sets"] = sets_json;
    if (mode == CriterionMode::single_prime) {
        j["irregular_exponents"] = irregular.members();
        j["regular_shortcut"] = regular_shortcut;
    }
    j["intersection"] = intersection.members();
    j["holds"] = holds;
    j["steps"] = steps;
    j["status"] = holds ? "established" : "not established";
    return j;
}

CriterionVerdict criterion_a(std::uint32_t p, std::uint64_t l, const ScanOptions& opts) {
    if (!is_prime(l) || l % p != 1)
        throw InvalidArgument("criterion_a: l=" + std::to_string(l) + " is not a prime = 1 mod p");
    const auto records = scan_records(p, {l}, opts);
    CriterionVerdict v;
    v.p = p;
    v.mode = CriterionMode::single_prime;
    v.witnesses = {l};
    v.sets = {records.front().expp};
    v.irregular = p >= 5 ? irregularity_report(p).set : ExponentSet(p);
    v.intersection = records.front().expp.intersect(v.irregular);
    v.holds = v.intersection.empty();
    v.regular_shortcut = v.irregular.empty();
    v.steps = 1;
    return v;
}

CriterionVerdict criterion_b(std::uint32_t p, SplitPrimeStream& stream, std::uint32_t max_n,
                             const ScanOptions& opts) {
    if (max_n < 1) throw InvalidArgument("criterion_b: max_N must be at least 1");
    if (stream.p() != p) throw InvalidArgument("criterion_b: stream belongs to another p");
    CriterionVerdict v;
    v.p = p;
    v.mode = CriterionMode::running_intersection;
    v.irregular = ExponentSet(p);
    v.intersection = ExponentSet::full(p);
    fold_stream(p, stream, max_n, opts, [&](const ScanRecord& r) {
        v.witnesses.push_back(r.l);
        v.sets.push_back(r.expp);
        v.intersection = v.intersection.intersect(r.expp);
        v.steps = static_cast<std::uint32_t>(v.witnesses.size());
        v.holds = v.intersection.empty();
        return !v.holds;
    });
    return v;
}

std::optional<MinimalEmpty> minimal_empty_l(std::uint32_t p, std::uint64_t l_max, const ScanOptions& opts) {
    SplitPrimeStream stream(p, l_max);
    std::optional<MinimalEmpty> found;
    std::uint32_t index = 0;
    fold_stream(p, stream, ~std::uint64_t{0}, opts, [&](const ScanRecord& r) {
        ++index;
        if (r.expp.empty()) found = MinimalEmpty{r.l, index};
        return !found;
    });
    return found;
}

DensityTable::DensityTable(std::uint32_t p_) : p(p_), counts(p_ >= 5 ? (p_ - 3) / 2 : 0, 0) {}

void DensityTable::add(const ScanRecord& r) {
    ++processed;
    last_l = r.l;
    for (auto n : r.expp.members()) {
        ++counts[n / 2 - 1];
        ++hits;
    }
}

nlohmann::json DensityTable::to_json() const {
    return {{"p", p}, {"Nel", processed}, {"Npp", hits}, {"el", last_l}, {"counts", counts}};
}

DensityTable density_scan(std::uint32_t p, std::uint64_t count, const ScanOptions& opts) {
    if (count < 1) throw InvalidArgument("density_scan: count must be at least 1");
    DensityTable table(p);
    SplitPrimeStream stream(p);
    fold_stream(p, stream, count, opts, [&](const ScanRecord& r) {
        table.add(r);
        return true;
    });
    return table;
}

}  // namespace vandiver
