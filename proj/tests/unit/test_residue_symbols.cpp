#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vandiver/error.hpp"
#include "vandiver/residue_symbols.hpp"

using namespace vandiver;

namespace {

CycBigInt from_basis(std::uint32_t p, const std::vector<mpz_class>& c) {
    std::vector<mpz_class> cyc(c.begin(), c.end());
    cyc.push_back(0);
    return CycBigInt::from_cyclic(p, cyc);
}

CycBigInt random_big(std::uint32_t p, std::mt19937_64& rng) {
    std::vector<mpz_class> c(p - 1);
    for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
    return from_basis(p, c);
}

}  // namespace

TEST_CASE("exact ring arithmetic agrees with the schoolbook oracle") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {3u, 7u, 23u}) {
        for (int t = 0; t < 10; ++t) {
            const auto a = random_big(p, rng), b = random_big(p, rng);
            REQUIRE((a * b).coeffs() == oracle::mul_exact(p, a.coeffs(), b.coeffs()));
            REQUIRE(galois(a, 3 % p ? 3 : 2).coeffs() == oracle::galois_exact(p, a.coeffs(), 3 % p ? 3 : 2));
            REQUIRE(pow(a, 3) == a * a * a);
            REQUIRE((a - a).is_zero());
        }
    }
}

TEST_CASE("exact Jacobi sums") {
    TwistContext ctx(7, 43, 3);
    for (std::uint32_t i = 1; i < 3; ++i)
        CHECK(exact_jacobi_sum(ctx, i).coeffs() == oracle::jacobi_exact(7, 43, ctx.g(), i));
    CHECK(exact_twist_product(ctx).reduce_mod_p() == twist_product(ctx));
    CHECK_THROWS_AS(exact_jacobi_sum(ctx, 0), InvalidArgument);
}

TEST_CASE("J_i times its complex conjugate is l") {
    for (std::uint32_t p : {5u, 11u, 37u}) {
        for (auto l : split_primes(p, 3)) {
            TwistContext ctx(p, l, 0);
            for (std::uint32_t i = 1; i < ctx.c(); ++i) {
                const auto J = exact_jacobi_sum(ctx, i);
                CHECK(J * galois(J, p - 1) == CycBigInt::constant(p, static_cast<unsigned long>(l)));
            }
        }
    }
}

TEST_CASE("exact full-range component reduces to the square of the half-range one") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        for (auto l : split_primes(p, 4)) {
            TwistContext ctx(p, l);
            const auto J = twist_product(ctx);
            for (std::uint32_t n = 2; n + 3 <= p; n += 2) {
                const auto half = component(ctx, J, n);
                const auto exact = exact_twist_component(ctx, n).reduce_mod_p();
                REQUIRE(exact == half * half);
                REQUIRE(is_one(exact) == is_one(half));
            }
        }
    }
}

TEST_CASE("norms") {
    CHECK(norm(CycBigInt::constant(7, 3)) == 729);
    CHECK(norm(CycBigInt::one(11)) == 1);
    std::vector<mpz_class> x{0, 1, 0, 0};
    CHECK(norm(from_basis(5, x)) == 1);
    std::vector<mpz_class> one_minus_x{1, -1, 0, 0, 0, 0};
    CHECK(norm(from_basis(7, one_minus_x)) == 7);
    CHECK(norm(CycBigInt(7)) == 0);
}

TEST_CASE("the p = 11, l = 23, n = 2 example") {
    TwistContext ctx(11, 23, 2);
    const auto sn = exact_twist_component(ctx, 2);
    const auto np = norm_as_power(sn, 23);
    REQUIRE(np);
    CHECK(np->sign == 1);
    CHECK(np->exponent == 275);
    CHECK(p_valuation_of_difference(sn) == std::optional<std::uint64_t>(1));
    const mpz_class nd = norm(sn - CycBigInt::one(11));
    mpz_class rest;
    CHECK(mpz_remove(rest.get_mpz_t(), nd.get_mpz_t(), mpz_class(11).get_mpz_t()) == 13);
}

TEST_CASE("residue symbols for p = 37, n = 32") {
    const auto r = classify(TwistContext(37, 149), 32);
    CHECK(r.v == 259);
    CHECK(r.u == 102);
    CHECK(r.classification == SymbolClass::non_local_at_L);
    CHECK(r.text_lines() == std::vector<std::string>{"p=37 el=149 v=259 u=102", "Sn NON local pth power at L"});
    CHECK(r.to_json()["classification"] == "non_local_at_L");
    CHECK(classify(TwistContext(37, 223), 32).u == 132);
}

TEST_CASE("l-content and symbol edge cases") {
    CHECK_THROWS_AS(l_content(CycBigInt(5), 11), InvalidArgument);
    const auto c = l_content(CycBigInt::constant(5, 11 * 11 * 3), 11);
    CHECK(c.v == 2);
    CHECK(c.reduced == CycBigInt::constant(5, 3));
    CHECK_FALSE(p_valuation_of_difference(CycBigInt::one(5)).has_value());
    CHECK_THROWS_AS(residue_symbol(CycBigInt::one(5), 13, 2), InvalidArgument);
    // A rational integer k has symbol k^{(l-1)/p} mod l.
    CHECK(residue_symbol(CycBigInt::constant(5, 3), 11, 2) == pow_mod(3, 2, 11));
}

TEST_CASE("memory cap") {
    ExactOptions tiny;
    tiny.memory_cap_bytes = 64;
    CHECK_THROWS_AS(exact_twist_component(TwistContext(37, 149), 32, tiny), ResourceLimit);
}
