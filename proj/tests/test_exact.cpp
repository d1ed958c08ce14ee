#include <catch2/catch_amalgamated.hpp>

#include "quartic/exact.hpp"

using namespace quartic;

TEST_CASE("make_rat canonicalizes", "[exact]") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(3, -6) == make_rat(-1, 2));
    CHECK(make_rat(Int(0), Int(7)) == Rat(0));
    CHECK(make_rat(21, 8).get_num() == 21);
    CHECK(make_rat(21, 8).get_den() == 8);
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("factorial and binomial", "[exact]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);

    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);

    // Pascal recurrence on a small triangle.
    for (long n = 1; n <= 20; ++n)
        for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("pochhammer", "[exact]") {
    CHECK(pochhammer(3, 4) == 360);  // 3*4*5*6
    CHECK(pochhammer(7, 0) == 1);
    CHECK(pochhammer(Int(-2), 3) == 0);  // hits zero
    CHECK(pochhammer(1, 5) == factorial(5));
    CHECK_THROWS_AS(pochhammer(2, -1), std::domain_error);
}

TEST_CASE("primality guard", "[exact]") {
    CHECK(is_prime_small(2));
    CHECK(is_prime_small(3));
    CHECK(is_prime_small(17));
    CHECK_FALSE(is_prime_small(1));
    CHECK_FALSE(is_prime_small(9));
    CHECK_FALSE(is_prime_small(15));
    CHECK_THROWS_AS(require_prime(4), std::domain_error);
    CHECK_NOTHROW(require_prime(101));
}

TEST_CASE("p-adic valuations", "[exact]") {
    CHECK(nu2_int(Int(48)) == 4);
    CHECK(nu2_int(Int(1)) == 0);
    CHECK(nu2(40) == 3);
    CHECK(nu_int(3, Int(72)) == 2);
    CHECK(nu_int(5, Int(72)) == 0);
    CHECK_THROWS_AS(nu_int(3, Int(0)), std::domain_error);
    CHECK_THROWS_AS(nu_int(4, Int(8)), std::domain_error);
}

TEST_CASE("binary digit sum", "[exact]") {
    CHECK(s2(255) == 8);
    CHECK(s2(256) == 1);
    CHECK(s2(Int(0)) == 0);
    CHECK(s2(6) == 2);
}

TEST_CASE("factorial valuation via carries", "[exact]") {
    CHECK(nu_factorial(2, Int(10)) == 8);
    CHECK(nu_factorial(5, Int(100)) == 24);
    CHECK(nu_factorial_l(3, 9) == 4);
    // Legendre in base 2: nu2(n!) = n - s2(n).
    for (long n = 0; n <= 200; ++n) {
        CHECK(nu_factorial_l(2, n) == n - s2(n));
        if (n > 0) CHECK(nu_int(2, factorial(n)) == n - s2(n));
    }
}

TEST_CASE("powers", "[exact]") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(int_pow(Int(3), 5) == 243);
    CHECK(int_pow(Int(7), 0) == 1);
    CHECK_THROWS_AS(pow2(-1), std::domain_error);
}

TEST_CASE("checked exact division", "[exact]") {
    CHECK(div_exact(Int(84), Int(12)) == 7);
    CHECK(div_exact(Int(-84), Int(12)) == -7);
    CHECK_THROWS_AS(div_exact(Int(7), Int(2)), std::domain_error);
    CHECK_THROWS_AS(div_exact(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("odd part", "[exact]") {
    CHECK(odd_part(Int(48)) == 3);
    CHECK(odd_part(Int(7)) == 7);
    CHECK(odd_part_l(64) == 1);
    CHECK_THROWS_AS(odd_part(Int(0)), std::domain_error);
}
