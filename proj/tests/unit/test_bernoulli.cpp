#include "doctest.h"

#include "oracles.hpp"
#include "vandiver/bernoulli.hpp"
#include "vandiver/error.hpp"
#include "vandiver/modarith.hpp"

using namespace vandiver;

TEST_CASE("Teichmuller lift") {
    for (std::uint32_t p : {5u, 37u, 157u}) {
        const std::uint64_t p2 = std::uint64_t{p} * p;
        for (std::uint64_t a = 1; a < p; ++a) {
            const auto w = teichmuller(a, p);
            REQUIRE(w % p == a);
            REQUIRE(pow_mod(w, p - 1, p2) == 1);
        }
    }
    CHECK_THROWS_AS(teichmuller(37, 37), InvalidArgument);
}

TEST_CASE("B_{1,omega^{n-1}} = B_n / n mod p against exact rationals") {
    const auto bern = oracle::bernoulli_numbers(200);
    CHECK(bern[2] == mpq_class(1, 6));
    CHECK(bern[12] == mpq_class(-691, 2730));
    for (std::uint32_t p = 5; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        for (std::uint32_t n = 2; n + 3 <= p; n += 2) {
            // B_n / n mod p
            mpq_class q = bern[n] / n;
            mpz_class num = q.get_num(), den = q.get_den();
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
            mpz_class r = num * inv;
            mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p);
            REQUIRE(b1_omega(p, n - 1) == r.get_ui());
        }
    }
}

TEST_CASE("irregular primes below 200") {
    CHECK(irregularity_report(37).set.members() == std::vector<std::uint32_t>{32});
    CHECK(irregularity_report(59).set.members() == std::vector<std::uint32_t>{44});
    CHECK(irregularity_report(157).set.members() == std::vector<std::uint32_t>{62, 110});
    CHECK(irregularity_report(157).index == 2);
    CHECK(irregularity_report(13).set.empty());
    CHECK(irregularity_report(3).set.empty());
    CHECK(irregularity_report(5).set.empty());
    const std::vector<std::uint32_t> irregular{37, 59, 67, 101, 103, 131, 149, 157};
    for (std::uint32_t p = 5; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        const bool listed = std::find(irregular.begin(), irregular.end(), p) != irregular.end();
        CHECK_MESSAGE(!irregularity_report(p).set.empty() == listed, "p=" << p);
    }
}

TEST_CASE("b_c factor") {
    // Nonzero unit-times-Bernoulli value; 7 for p = 11, c = 2, n = 2.
    CHECK(b_c_factor(11, 2, 2) == 7);
    CHECK(b_c_factor(37, 2, 32) == 0);
    CHECK(b_c_factor(37, 2, 30) != 0);
    CHECK_THROWS_AS(b_c_factor(11, 3, 2), InvalidArgument);
}
