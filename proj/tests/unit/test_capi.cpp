#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "vandiver/vandiver.h"

using nlohmann::json;

namespace {

json take_json(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    vdv_string_free(s);
    return j;
}

struct TwistHandle {
    vdv_twist* t = nullptr;
    TwistHandle(uint32_t p, uint64_t l, uint32_t c = 0, uint64_t g = 0) {
        REQUIRE(vdv_twist_create(p, l, c, g, &t) == VDV_OK);
    }
    ~TwistHandle() { vdv_twist_destroy(t); }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(vdv_version()) > 0);
    CHECK(std::string(vdv_status_name(VDV_BUFFER_TOO_SMALL)) == "buffer too small");
}

TEST_CASE("errors set the thread's last message") {
    int flag = 0;
    CHECK(vdv_is_prime(97, &flag) == VDV_OK);
    CHECK(flag == 1);
    uint64_t root = 0;
    CHECK(vdv_primitive_root(191, &root) == VDV_OK);
    CHECK(root == 19);
    CHECK(vdv_primitive_root(91, &root) == VDV_INVALID_ARGUMENT);
    CHECK(std::strlen(vdv_last_error()) > 0);

    vdv_twist* t = nullptr;
    CHECK(vdv_twist_create(37, 151, 0, 0, &t) == VDV_INVALID_ARGUMENT);
    CHECK(t == nullptr);
    CHECK(vdv_twist_create(37, 149, 0, 0, nullptr) == VDV_INVALID_ARGUMENT);
    vdv_twist_destroy(nullptr);
}

TEST_CASE("size query and short buffers") {
    size_t len = 0;
    CHECK(vdv_split_primes(37, 0, 6, nullptr, &len) == VDV_OK);
    CHECK(len == 6);
    std::vector<uint64_t> small(3);
    CHECK(vdv_split_primes(37, 0, 3, small.data(), &len) == VDV_OK);
    CHECK(len == 3);
    CHECK(small == std::vector<uint64_t>{149, 223, 593});
    CHECK(vdv_split_primes(5, 50, 10, nullptr, &len) == VDV_OK);
    CHECK(len == 3);

    TwistHandle h(53, 107);
    CHECK(vdv_exponent_set(h.t, 0, nullptr, 0, &len) == VDV_OK);
    CHECK(len == 2);
    uint32_t one = 0;
    CHECK(vdv_exponent_set(h.t, 0, &one, 1, &len) == VDV_BUFFER_TOO_SMALL);
    CHECK(len == 2);
    uint32_t two[2] = {0, 0};
    for (int by_products : {0, 1}) {
        CHECK(vdv_exponent_set(h.t, by_products, two, 2, &len) == VDV_OK);
        CHECK(two[0] == 10);
        CHECK(two[1] == 34);
    }
}

TEST_CASE("twist handles") {
    TwistHandle h(11, 23);
    uint32_t p = 0, c = 0;
    uint64_t l = 0, g = 0;
    CHECK(vdv_twist_params(h.t, &p, &l, &c, &g) == VDV_OK);
    CHECK(p == 11);
    CHECK(l == 23);
    CHECK(c == 2);
    CHECK(g == 5);

    std::vector<uint32_t> J(10);
    size_t len = 0;
    CHECK(vdv_twist_product(h.t, J.data(), J.size(), &len) == VDV_OK);
    CHECK(len == 10);
    uint64_t sum = 0;
    for (auto a : J) sum += a;
    CHECK(sum % 11 == 1);
    CHECK(vdv_jacobi_sum(h.t, 1, J.data(), J.size(), &len) == VDV_OK);
    CHECK(vdv_jacobi_sum(h.t, 2, J.data(), J.size(), &len) == VDV_INVALID_ARGUMENT);

    int is_one = -1;
    CHECK(vdv_component_is_one(h.t, 2, &is_one) == VDV_OK);
    CHECK(is_one == 1);
    CHECK(vdv_component_is_one(h.t, 3, &is_one) == VDV_INVALID_ARGUMENT);
    int ok = 0;
    CHECK(vdv_derivation_check(h.t, &ok) == VDV_OK);
    CHECK(ok == 1);
}

TEST_CASE("Bernoulli entry points") {
    size_t len = 0;
    uint32_t e[4];
    CHECK(vdv_irregular_exponents(37, e, 4, &len) == VDV_OK);
    CHECK(len == 1);
    CHECK(e[0] == 32);
    uint32_t v = 99;
    CHECK(vdv_b_c_factor(11, 2, 2, &v) == VDV_OK);
    CHECK(v == 7);
    CHECK(vdv_b1_omega(37, 31, &v) == VDV_OK);
    CHECK(v == 0);
}

namespace {
void count_records(const char* record, void* user) {
    auto* seen = static_cast<std::vector<json>*>(user);
    seen->push_back(json::parse(record));
}
}  // namespace

TEST_CASE("criteria with callbacks and a cache file") {
    vdv_scan_options opts;
    vdv_scan_options_init(&opts);
    CHECK(opts.jobs == 1);
    std::vector<json> seen;
    opts.on_record = count_records;
    opts.user = &seen;
    const auto path = std::filesystem::temp_directory_path() / "vandiver_capi_cache.jsonl";
    std::filesystem::remove(path);
    const std::string path_str = path.string();
    opts.cache_path = path_str.c_str();

    int holds = 0;
    char* raw = nullptr;
    CHECK(vdv_criterion_b(11, 10, 0, &opts, &holds, &raw) == VDV_OK);
    CHECK(holds == 1);
    const auto v = take_json(raw);
    CHECK(v["steps"] == 2);
    CHECK(seen.size() == 2);
    CHECK(seen[1]["l"] == 67);

    CHECK(vdv_criterion_a(37, 149, &opts, &holds, &raw) == VDV_OK);
    CHECK(holds == 1);
    vdv_string_free(raw);
    CHECK(std::filesystem::exists(path));

    int found = 0;
    uint64_t l = 0;
    uint32_t index = 0;
    CHECK(vdv_minimal_empty_l(11, 1000, &opts, &found, &l, &index) == VDV_OK);
    CHECK(found == 1);
    CHECK(l == 67);
    CHECK(index == 2);

    CHECK(vdv_density_scan(11, 20, &opts, &raw) == VDV_OK);
    const auto d = take_json(raw);
    CHECK(d["Nel"] == 20);

    CHECK(vdv_scan_record(53, 107, nullptr, &raw) == VDV_OK);
    const auto r = take_json(raw);
    CHECK(r["expp"] == json::array({10, 34}));

    vdv_scan_options bad = opts;
    // a cache whose parent "directory" is a regular file
    const std::string under_file = path_str + "/y.jsonl";
    bad.cache_path = under_file.c_str();
    CHECK(vdv_criterion_a(37, 149, &bad, &holds, &raw) == VDV_IO_ERROR);
}

TEST_CASE("symbols and exact components") {
    TwistHandle h(37, 149);
    vdv_symbol_report rep{};
    char* raw = nullptr;
    CHECK(vdv_classify(h.t, 32, 0, &rep, &raw) == VDV_OK);
    CHECK(rep.v == 259);
    CHECK(rep.u == 102);
    CHECK(rep.classification == VDV_NON_LOCAL_AT_L);
    const auto j = take_json(raw);
    CHECK(j["lines"][0] == "p=37 el=149 v=259 u=102");
    CHECK(vdv_classify(h.t, 32, 64, &rep, nullptr) == VDV_RESOURCE_LIMIT);

    TwistHandle small(11, 23, 2);
    CHECK(vdv_exact_component_norm(small.t, 2, 0, &raw) == VDV_OK);
    std::string n = raw;
    vdv_string_free(raw);
    CHECK(n.size() > 300);
    CHECK(vdv_exact_component(small.t, 2, 0, &raw) == VDV_OK);
    CHECK(std::string(raw).find('x') != std::string::npos);
    vdv_string_free(raw);
}

namespace {
void count_traces(const char*, void* user) { ++*static_cast<int*>(user); }
}  // namespace

TEST_CASE("spectra") {
    char* raw = nullptr;
    CHECK(vdv_rank_scan(7, 0, 0, 0, 1, 0, &raw) == VDV_OK);
    CHECK(take_json(raw)["text"] == "p=7 r=3 elp=113");
    uint32_t r = 0;
    CHECK(vdv_conjugate_rank(37, 2591, 0, &r) == VDV_OK);
    CHECK(r == 29);

    uint32_t coeffs[8];
    size_t len = 0;
    uint32_t f = 0;
    CHECK(vdv_trace_polynomial(7, 29, 0, 0, nullptr, 0, &len, nullptr) == VDV_OK);
    CHECK(len == 8);
    CHECK(vdv_trace_polynomial(7, 29, 0, 1, coeffs, 8, &len, &f) == VDV_OK);
    CHECK(f == 7);
    CHECK(coeffs[0] == 1);
    CHECK(coeffs[5] == 2);
    CHECK(vdv_trace_polynomial_json(7, 43, &raw) == VDV_OK);
    CHECK(take_json(raw)["text"] == "el=43 f=1 R=x^7 + x^6 + 3*x^5 + 3*x^3 + 6*x^2");

    int calls = 0;
    CHECK(vdv_distinct_traces(3, 500, 2, nullptr, count_traces, &calls, &raw) == VDV_OK);
    const auto d = take_json(raw);
    CHECK(d["count"] == 6);
    CHECK(calls == d["processed"].get<int>());

    double h = 0;
    CHECK(vdv_heuristic_probability(5, &h) == VDV_OK);
    CHECK(h == doctest::Approx(0.04));
    CHECK(vdv_heuristic_probability(3, &h) == VDV_INVALID_ARGUMENT);
}
