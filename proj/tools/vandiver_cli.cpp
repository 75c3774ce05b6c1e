// Command-line driver over the C API.
//
// Exit codes: 0 established / ok, 2 invalid input, 3 undetermined at the
// given bounds (or a resource cap was hit), 4 I/O failure, 1 internal error.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vandiver/vandiver.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kInternal = 1, kInvalid = 2, kUndetermined = 3, kIo = 4 };

struct Failure {
    vdv_status status;
    std::string message;
};

void check(vdv_status s) {
    if (s != VDV_OK) throw Failure{s, vdv_last_error()};
}

int exit_code_for(vdv_status s) {
    switch (s) {
        case VDV_INVALID_ARGUMENT: return kInvalid;
        case VDV_RESOURCE_LIMIT: return kUndetermined;
        case VDV_IO_ERROR: return kIo;
        default: return kInternal;
    }
}

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    vdv_string_free(s);
    return out;
}

struct Twist {
    vdv_twist* handle = nullptr;
    Twist(std::uint32_t p, std::uint64_t l, std::uint32_t c) { check(vdv_twist_create(p, l, c, 0, &handle)); }
    ~Twist() { vdv_twist_destroy(handle); }
    Twist(const Twist&) = delete;
    Twist& operator=(const Twist&) = delete;
};

struct Config {
    std::uint32_t p = 0;
    std::uint32_t p_max = 0;
    std::vector<std::uint64_t> ls;
    std::uint64_t l_max = 0;
    std::uint64_t count = 0;
    std::uint32_t c = 0;
    std::uint32_t n = 0;
    std::string mode = "b";
    unsigned jobs = 1;
    unsigned exact_jobs = 1;
    std::string cache_dir;
    std::string format = "text";
    bool resume = false;
    bool distinct = false;
};

std::vector<std::uint32_t> primes_in_range(const Config& cfg) {
    const std::uint32_t hi = cfg.p_max ? cfg.p_max : cfg.p;
    if (hi < cfg.p) throw Failure{VDV_INVALID_ARGUMENT, "--p-max is below --p"};
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = cfg.p; q <= hi; ++q) {
        int prime = 0;
        check(vdv_is_prime(q, &prime));
        if (prime && q > 2) out.push_back(q);
    }
    if (out.empty()) throw Failure{VDV_INVALID_ARGUMENT, "no odd prime in the requested range"};
    if (!cfg.p_max && out.front() != cfg.p) throw Failure{VDV_INVALID_ARGUMENT, "--p must be an odd prime"};
    return out;
}

std::uint64_t first_split_prime(std::uint32_t p) {
    std::uint64_t l = 0;
    std::size_t len = 0;
    check(vdv_split_primes(p, 0, 1, &l, &len));
    return l;
}

// Cache file for one p and kind; cleared unless resuming.
std::string cache_file(const Config& cfg, const std::string& kind, std::uint32_t p) {
    if (cfg.cache_dir.empty()) return {};
    const auto path = std::filesystem::path(cfg.cache_dir) / (kind + "-p" + std::to_string(p) + ".jsonl");
    if (!cfg.resume) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        if (ec) throw Failure{VDV_IO_ERROR, "cannot reset cache " + path.string()};
    }
    return path.string();
}

std::string join(const json& arr, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(arr[i].get<std::uint64_t>());
    }
    return out;
}

// Timings vary between runs; outputs drop them.
json stable(json record) {
    record.erase("ms");
    return record;
}

vdv_scan_options scan_options(const Config& cfg, const std::string& cache_path) {
    vdv_scan_options opts;
    vdv_scan_options_init(&opts);
    opts.jobs = cfg.jobs;
    opts.c = cfg.c;
    opts.cache_path = cache_path.empty() ? nullptr : cache_path.c_str();
    return opts;
}

std::string expp_row(const json& r) {
    std::string line = "p=" + std::to_string(r["p"].get<std::uint32_t>()) + " el=" +
                       std::to_string(r["l"].get<std::uint64_t>()) + " c=" + std::to_string(r["c"].get<std::uint32_t>()) +
                       " g=" + std::to_string(r["g"].get<std::uint64_t>());
    if (!r["expp"].empty()) line += " expp:" + join(r["expp"], ",");
    return line;
}

// ---------------------------------------------------------------------------

int cmd_expp(const Config& cfg) {
    if (cfg.format == "csv") std::cout << "p,l,c,g,expp\n";
    for (auto p : primes_in_range(cfg)) {
        const auto cache = cache_file(cfg, "expp", p);
        auto opts = scan_options(cfg, cache);
        std::vector<std::uint64_t> ls = cfg.ls;
        if (ls.empty()) ls.push_back(first_split_prime(p));
        for (auto l : ls) {
            char* raw = nullptr;
            check(vdv_scan_record(p, l, &opts, &raw));
            const json r = json::parse(take(raw));
            if (cfg.format == "json") {
                std::cout << stable(r).dump() << '\n';
            } else if (cfg.format == "csv") {
                std::cout << r["p"] << ',' << r["l"] << ',' << r["c"] << ',' << r["g"] << ',' << join(r["expp"], " ")
                          << '\n';
            } else {
                std::cout << expp_row(r) << '\n';
            }
        }
    }
    return kOk;
}

int cmd_vandiver(const Config& cfg) {
    if (cfg.mode != "a" && cfg.mode != "b") throw Failure{VDV_INVALID_ARGUMENT, "--mode must be a or b"};
    bool all = true;
    if (cfg.format == "csv") std::cout << "p,mode,holds,steps,witnesses\n";
    for (auto p : primes_in_range(cfg)) {
        const auto cache = cache_file(cfg, "expp", p);
        auto opts = scan_options(cfg, cache);
        int holds = 0;
        char* raw = nullptr;
        if (cfg.mode == "a") {
            const std::uint64_t l = cfg.ls.empty() ? first_split_prime(p) : cfg.ls.front();
            check(vdv_criterion_a(p, l, &opts, &holds, &raw));
        } else {
            const auto max_n = static_cast<std::uint32_t>(cfg.count ? cfg.count : 100);
            check(vdv_criterion_b(p, max_n, cfg.l_max, &opts, &holds, &raw));
        }
        const json v = json::parse(take(raw));
        all = all && holds;
        if (cfg.format == "json") {
            std::cout << v.dump() << '\n';
        } else if (cfg.format == "csv") {
            std::cout << p << ',' << cfg.mode << ',' << (holds ? 1 : 0) << ',' << v["steps"] << ','
                      << join(v["witnesses"], " ") << '\n';
        } else {
            std::string line = "p=" + std::to_string(p) + " mode=" + cfg.mode;
            if (cfg.mode == "a") {
                line += " el=" + std::to_string(v["witnesses"][0].get<std::uint64_t>());
                line += " expp:" + join(v["sets"][0], ",");
                if (v["regular_shortcut"].get<bool>()) {
                    line += " regular";
                } else {
                    line += " irregular:" + join(v["irregular_exponents"], ",");
                }
            } else {
                const auto& w = v["witnesses"];
                line += " N=" + std::to_string(v["steps"].get<std::uint32_t>());
                if (!w.empty()) line += " el=" + std::to_string(w.back().get<std::uint64_t>());
            }
            line += holds ? " established" : " not established";
            std::cout << line << '\n';
        }
    }
    return all ? kOk : kUndetermined;
}

int cmd_minimal(const Config& cfg) {
    if (cfg.l_max == 0) throw Failure{VDV_INVALID_ARGUMENT, "--l-max is required"};
    bool all = true;
    if (cfg.format == "csv") std::cout << "p,l,N\n";
    for (auto p : primes_in_range(cfg)) {
        const auto cache = cache_file(cfg, "expp", p);
        auto opts = scan_options(cfg, cache);
        int found = 0;
        std::uint64_t l = 0;
        std::uint32_t index = 0;
        check(vdv_minimal_empty_l(p, cfg.l_max, &opts, &found, &l, &index));
        all = all && found;
        if (cfg.format == "json") {
            json j = {{"p", p}, {"found", found != 0}, {"l_max", cfg.l_max}};
            if (found) {
                j["l"] = l;
                j["N"] = index;
            }
            std::cout << j.dump() << '\n';
        } else if (cfg.format == "csv") {
            std::cout << p << ',' << (found ? std::to_string(l) : "") << ',' << (found ? std::to_string(index) : "")
                      << '\n';
        } else if (found) {
            std::cout << "p=" << p << " el=" << l << " N=" << index << '\n';
        } else {
            std::cout << "p=" << p << " none up to " << cfg.l_max << '\n';
        }
    }
    return all ? kOk : kUndetermined;
}

struct DensityPrinter {
    const Config* cfg;
    std::uint64_t nel = 0;
    std::uint64_t npp = 0;
    std::vector<std::uint64_t> counts;

    static void on_record(const char* record_json, void* user) {
        auto* self = static_cast<DensityPrinter*>(user);
        const json r = json::parse(record_json);
        ++self->nel;
        if (self->cfg->format == "csv") {
            std::cout << r["l"] << ',' << join(r["expp"], " ") << '\n';
            return;
        }
        for (const auto& n : r["expp"]) {
            const auto k = n.get<std::uint32_t>() / 2 - 1;
            ++self->npp;
            ++self->counts[k];
            if (self->cfg->format == "text") {
                std::cout << self->nel << ' ' << self->npp << ' ' << r["l"].get<std::uint64_t>() << "["
                          << join(json(self->counts), ",") << "]\n";
            }
        }
    }
};

int cmd_scan(const Config& cfg) {
    const std::uint64_t count = cfg.count ? cfg.count : 100;
    if (cfg.format == "csv") std::cout << "l,expp\n";
    for (auto p : primes_in_range(cfg)) {
        const auto cache = cache_file(cfg, "expp", p);
        auto opts = scan_options(cfg, cache);
        DensityPrinter printer{&cfg, 0, 0, std::vector<std::uint64_t>(p >= 5 ? (p - 3) / 2 : 0, 0)};
        opts.on_record = &DensityPrinter::on_record;
        opts.user = &printer;
        char* raw = nullptr;
        check(vdv_density_scan(p, count, &opts, &raw));
        const std::string table = take(raw);
        if (cfg.format == "json") std::cout << table << '\n';
    }
    return kOk;
}

int cmd_rank(const Config& cfg) {
    if (!cfg.ls.empty()) {
        if (cfg.format == "csv") std::cout << "p,l,conjugate_rank\n";
        for (auto l : cfg.ls) {
            std::uint32_t r = 0;
            check(vdv_conjugate_rank(cfg.p, l, cfg.c, &r));
            if (cfg.format == "json") {
                std::cout << json{{"p", cfg.p}, {"l", l}, {"conjugate_rank", r}}.dump() << '\n';
            } else if (cfg.format == "csv") {
                std::cout << cfg.p << ',' << l << ',' << r << '\n';
            } else {
                std::cout << "p=" << cfg.p << " el=" << l << " r=" << r << '\n';
            }
        }
        return kOk;
    }
    bool all = true;
    if (cfg.format == "csv") std::cout << "p,l,rank\n";
    for (auto p : primes_in_range(cfg)) {
        char* raw = nullptr;
        check(vdv_rank_scan(p, 0, cfg.l_max, cfg.count, cfg.jobs, cfg.c, &raw));
        const json r = json::parse(take(raw));
        all = all && r["reached"].get<bool>();
        if (cfg.format == "json") {
            std::cout << r.dump() << '\n';
        } else if (cfg.format == "csv") {
            for (const auto& h : r["history"]) std::cout << p << ',' << h[0] << ',' << h[1] << '\n';
        } else if (r["reached"].get<bool>()) {
            std::cout << r["text"].get<std::string>() << '\n';
        } else {
            std::cout << "p=" << p << " r=" << r["rank"] << " target " << r["target"] << " not reached\n";
        }
    }
    return all ? kOk : kUndetermined;
}

struct TracePrinter {
    const Config* cfg;
    static void on_trace(const char* trace_json, void* user) {
        const auto* self = static_cast<TracePrinter*>(user);
        const json t = json::parse(trace_json);
        if (self->cfg->format == "text") {
            std::cout << t["text"].get<std::string>() << '\n';
        } else if (self->cfg->format == "csv") {
            std::cout << t["l"] << ',' << t["f"] << ',' << join(t["R"], " ") << '\n';
        }
    }
};

int cmd_trace(const Config& cfg) {
    if (cfg.format == "csv") std::cout << "l,f,R\n";
    if (!cfg.ls.empty()) {
        for (auto l : cfg.ls) {
            char* raw = nullptr;
            check(vdv_trace_polynomial_json(cfg.p, l, &raw));
            json t = json::parse(take(raw));
            if (cfg.format == "json") {
                t.erase("text");
                std::cout << t.dump() << '\n';
            } else {
                TracePrinter printer{&cfg};
                TracePrinter::on_trace(t.dump().c_str(), &printer);
            }
        }
        return kOk;
    }
    if (cfg.l_max == 0) throw Failure{VDV_INVALID_ARGUMENT, "trace needs --l or --l-max"};
    const auto cache = cache_file(cfg, "trace", cfg.p);
    TracePrinter printer{&cfg};
    const bool per_l = !cfg.distinct && cfg.format != "json";
    char* raw = nullptr;
    check(vdv_distinct_traces(cfg.p, cfg.l_max, cfg.jobs, cache.empty() ? nullptr : cache.c_str(),
                              per_l ? &TracePrinter::on_trace : nullptr, &printer, &raw));
    const json d = json::parse(take(raw));
    if (cfg.format == "json") {
        std::cout << d.dump() << '\n';
    } else if (cfg.distinct) {
        std::cout << "p=" << cfg.p << " bound=" << cfg.l_max << " processed=" << d["processed"]
                  << " distinct=" << d["count"] << '\n';
    }
    return kOk;
}

int cmd_symbol(const Config& cfg) {
    if (cfg.ls.empty()) throw Failure{VDV_INVALID_ARGUMENT, "symbol needs at least one --l"};
    std::vector<std::string> outputs(cfg.ls.size());
    std::vector<std::optional<Failure>> failures(cfg.ls.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cfg.ls.size();) {
            try {
                Twist t(cfg.p, cfg.ls[i], cfg.c);
                char* raw = nullptr;
                check(vdv_classify(t.handle, cfg.n, 0, nullptr, &raw));
                outputs[i] = take(raw);
            } catch (const Failure& f) {
                failures[i] = f;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.exact_jobs, static_cast<unsigned>(cfg.ls.size())));
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (cfg.format == "csv") std::cout << "p,n,l,g,v,s,u,classification\n";
    for (std::size_t i = 0; i < cfg.ls.size(); ++i) {
        if (failures[i]) throw *failures[i];
        json r = json::parse(outputs[i]);
        if (cfg.format == "json") {
            r.erase("lines");
            std::cout << r.dump() << '\n';
        } else if (cfg.format == "csv") {
            std::cout << r["p"] << ',' << r["n"] << ',' << r["l"] << ',' << r["g"] << ',' << r["v"] << ',' << r["s"]
                      << ',' << r["u"] << ',' << r["classification"].get<std::string>() << '\n';
        } else {
            for (const auto& line : r["lines"]) std::cout << line.get<std::string>() << '\n';
        }
    }
    return kOk;
}

int cmd_bernoulli(const Config& cfg) {
    if (cfg.format == "csv") std::cout << "p,index,irregular\n";
    for (auto p : primes_in_range(cfg)) {
        std::size_t len = 0;
        check(vdv_irregular_exponents(p, nullptr, 0, &len));
        std::vector<std::uint32_t> ns(len);
        check(vdv_irregular_exponents(p, ns.data(), ns.size(), &len));
        const json arr = ns;
        if (cfg.format == "json") {
            std::cout << json{{"p", p}, {"index", len}, {"irregular", arr}}.dump() << '\n';
        } else if (cfg.format == "csv") {
            std::cout << p << ',' << len << ',' << join(arr, " ") << '\n';
        } else {
            std::cout << "p=" << p << " index=" << len;
            if (len) std::cout << " irregular:" << join(arr, ",");
            std::cout << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vandiver criteria via Jacobi-sum twists of Gauss sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vdv_version()));

    Config cfg;
    std::vector<std::string> formats{"text", "json", "csv"};
    app.add_option("--jobs", cfg.jobs, "mod-p worker threads")->envname("VANDIVER_JOBS")->check(CLI::PositiveNumber);
    app.add_option("--exact-jobs", cfg.exact_jobs, "exact-arithmetic worker threads")
        ->envname("VANDIVER_EXACT_JOBS")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cfg.cache_dir, "directory for JSON-lines caches")->envname("VANDIVER_CACHE_DIR");
    app.add_option("--format", cfg.format, "text, json or csv")
        ->envname("VANDIVER_FORMAT")
        ->check(CLI::IsMember(formats));
    app.add_flag("--resume", cfg.resume, "reuse existing cache entries instead of starting fresh");
    app.fallthrough();

    auto with_p = [&](CLI::App* sub, bool range) {
        sub->add_option("--p", cfg.p, "odd prime p")->required();
        if (range) sub->add_option("--p-max", cfg.p_max, "last p of a range");
        sub->add_option("--c", cfg.c, "twist parameter (primitive root mod p), default smallest");
    };

    auto* expp = app.add_subcommand("expp", "exponents of p-primarity for one split prime l");
    with_p(expp, true);
    expp->add_option("--l", cfg.ls, "split prime(s); default the first one");

    auto* vand = app.add_subcommand("vandiver", "run the single-prime (a) or running-intersection (b) test");
    with_p(vand, true);
    vand->add_option("--mode", cfg.mode, "a or b")->check(CLI::IsMember({"a", "b"}));
    vand->add_option("--l", cfg.ls, "split prime for mode a");
    vand->add_option("--count", cfg.count, "largest N for mode b (default 100)");
    vand->add_option("--l-max", cfg.l_max, "bound on l for mode b");

    auto* minimal = app.add_subcommand("minimal", "first split prime l with an empty exponent set");
    with_p(minimal, true);
    minimal->add_option("--l-max", cfg.l_max, "bound on l")->required();

    auto* scan = app.add_subcommand("scan", "density of exponents over the first split primes");
    with_p(scan, true);
    scan->add_option("--count", cfg.count, "number of split primes (default 100)");

    auto* rank = app.add_subcommand("rank", "F_p-rank of the coefficient rows of J(l)");
    with_p(rank, true);
    rank->add_option("--l", cfg.ls, "report the conjugate rank at these l instead");
    rank->add_option("--l-max", cfg.l_max, "bound on l");
    rank->add_option("--count", cfg.count, "bound on the number of l");

    auto* trace = app.add_subcommand("trace", "trace polynomials R_l of Gaussian periods");
    with_p(trace, false);
    trace->add_option("--l", cfg.ls, "split prime(s)");
    trace->add_option("--l-max", cfg.l_max, "all split primes up to this bound");
    trace->add_flag("--distinct", cfg.distinct, "only report the number of distinct R_l");

    auto* symbol = app.add_subcommand("symbol", "p-th power residue symbol of the exact component");
    with_p(symbol, false);
    symbol->add_option("--n", cfg.n, "even exponent n")->required();
    symbol->add_option("--l", cfg.ls, "split prime(s)")->required();

    auto* bern = app.add_subcommand("bernoulli", "exponents of p-irregularity");
    with_p(bern, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*expp) return cmd_expp(cfg);
        if (*vand) return cmd_vandiver(cfg);
        if (*minimal) return cmd_minimal(cfg);
        if (*scan) return cmd_scan(cfg);
        if (*rank) return cmd_rank(cfg);
        if (*trace) return cmd_trace(cfg);
        if (*symbol) return cmd_symbol(cfg);
        if (*bern) return cmd_bernoulli(cfg);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return exit_code_for(f.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
