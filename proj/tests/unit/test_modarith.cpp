#include "doctest.h"

#include <random>

#include "vandiver/error.hpp"
#include "vandiver/modarith.hpp"

using namespace vandiver;

namespace {

std::vector<bool> sieve(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i)
        if (prime[i])
            for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
    return prime;
}

std::uint64_t brute_order(std::uint64_t a, std::uint64_t q) {
    std::uint64_t x = a % q, k = 1;
    while (x != 1) {
        x = x * a % q;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("pow_mod and inv_mod") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(3, 0, 7) == 1);
    const std::uint64_t big = (std::uint64_t{1} << 61) - 1;
    CHECK(pow_mod(5, big - 1, big) == 1);
    for (std::uint64_t a = 1; a < 101; ++a) CHECK(mul_mod(a, inv_mod(a, 101), 101) == 1);
}

TEST_CASE("is_prime agrees with a sieve") {
    const auto prime = sieve(200000);
    for (std::uint64_t n = 0; n <= 200000; ++n) REQUIRE(is_prime(n) == prime[n]);
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK_FALSE(is_prime((std::uint64_t{1} << 61) + 1));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(1869389));
    CHECK_FALSE(is_prime(1345));
}

TEST_CASE("prime_factors and valuation") {
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
    CHECK(valuation(360, 2) == 3);
    CHECK(valuation(360, 7) == 0);
    CHECK(valuation(37 * 37 * 5, 37) == 2);
}

TEST_CASE("multiplicative order and smallest primitive root against brute force") {
    for (std::uint64_t q = 3; q < 2000; ++q) {
        if (!is_prime(q)) continue;
        std::uint64_t g = 2;
        while (brute_order(g, q) != q - 1) ++g;
        REQUIRE(primitive_root(q) == g);
        CHECK(is_primitive_root(g, q));
        for (std::uint64_t a = 2; a < 12 && a < q; ++a) REQUIRE(multiplicative_order(a, q) == brute_order(a, q));
    }
    CHECK(primitive_root(191) == 19);
    CHECK(primitive_root(1087) == 3);
    CHECK(primitive_root(4441) == 21);
    CHECK_THROWS_AS(primitive_root(91), InvalidArgument);
}

TEST_CASE("LogTable inverts exponentiation") {
    LogTable t(1087, 3);
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k < 1086; ++k) {
        REQUIRE(t.log(x) == k);
        x = x * 3 % 1087;
    }
    CHECK_THROWS_AS(LogTable(1087, 2), InvalidArgument);  // 2 is not primitive mod 1087
    CHECK_THROWS_AS(LogTable(1085, 2), InvalidArgument);
    CHECK_THROWS_AS(t.log(0), InvalidArgument);
    CHECK_THROWS_AS(LogTable((std::uint64_t{1} << 26) + 15, 3), ResourceLimit);
}

TEST_CASE("split prime stream") {
    SplitPrimeStream s(37);
    CHECK(s.take(6) == std::vector<std::uint64_t>{149, 223, 593, 1259, 1481, 1777});
    CHECK(split_primes(11, 3) == std::vector<std::uint64_t>{23, 67, 89});
    const auto upto = split_primes_upto(7, 113);
    CHECK(upto.back() == 113);
    for (auto l : upto) {
        CHECK(is_prime(l));
        CHECK(l % 14 == 1);
    }
    SplitPrimeStream bounded(5, 50);
    CHECK(bounded.take(100) == std::vector<std::uint64_t>{11, 31, 41});
    CHECK_FALSE(bounded.next().has_value());
    CHECK_THROWS_AS(SplitPrimeStream(9), InvalidArgument);
}
