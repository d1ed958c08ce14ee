#include <catch2/catch_amalgamated.hpp>

#include "quartic/dlm.hpp"

using namespace quartic;

TEST_CASE("binomial cache", "[dlm]") {
    PascalTable pt(30);
    for (long n = 0; n <= 30; ++n)
        for (long k = -1; k <= n + 1; ++k) CHECK(pt(n, k) == binomial(n, k));
}

TEST_CASE("coefficient values at small size", "[dlm]") {
    CHECK(d_coeff(0, 0) == 1);
    CHECK(d_coeff(0, 1) == make_rat(3, 2));
    CHECK(d_coeff(1, 1) == 1);
    CHECK(d_coeff(0, 2) == make_rat(21, 8));
    CHECK(d_coeff(1, 2) == make_rat(15, 4));
    CHECK(d_coeff(2, 2) == make_rat(3, 2));
    CHECK_THROWS_AS(d_coeff(3, 2), std::domain_error);
    CHECK_THROWS_AS(d_coeff(-1, 2), std::domain_error);
}

TEST_CASE("all three routes agree", "[dlm]") {
    for (long m = 0; m <= 14; ++m)
        for (long l = 0; l <= m; ++l) {
            Rat s = d_single(l, m);
            CHECK(s == d_triple(l, m));
            CHECK(s == d_center(l, m));
        }
}

TEST_CASE("row helper matches pointwise route", "[dlm]") {
    for (long m = 0; m <= 20; ++m) {
        std::vector<Rat> row = d_row_single(m);
        REQUIRE(row.size() == static_cast<size_t>(m) + 1);
        for (long l = 0; l <= m; ++l) CHECK(row[static_cast<size_t>(l)] == d_single(l, m));
    }
}

TEST_CASE("extended lookup vanishes outside the triangle", "[dlm]") {
    std::vector<Rat> row = d_row_single(5);
    CHECK(d_ext(-1, 5, row) == 0);
    CHECK(d_ext(6, 5, row) == 0);
    CHECK(d_ext(2, 5, row) == d_single(2, 5));
}

TEST_CASE("table fills the triangle", "[dlm]") {
    DTable t = d_table(6, DMethod::center);
    REQUIRE(t.d.size() == 7);
    for (long m = 0; m <= 6; ++m) {
        REQUIRE(t.d[static_cast<size_t>(m)].size() == static_cast<size_t>(m) + 1);
        for (long l = 0; l <= m; ++l) CHECK(t.d[static_cast<size_t>(m)][static_cast<size_t>(l)] == d_single(l, m));
    }
}

TEST_CASE("closed forms on the diagonal edges", "[dlm]") {
    for (long m = 1; m <= 25; ++m) {
        CHECK(d_coeff(m, m) == make_rat(binomial(2 * m, m), pow2(m)));
        CHECK(d_coeff(m - 1, m) == make_rat((2 * m + 1) * binomial(2 * m, m), pow2(m + 1)));
    }
}

TEST_CASE("shifted-variable polynomial", "[dlm]") {
    // coefficients of A: 2^k C(2m-2k, m-k) C(m+k, m) / 4^m
    std::vector<Int> sc = a_scaled_coeffs(5);
    CHECK(sc == std::vector<Int>{Int(252), Int(840), Int(1680), Int(2688), Int(4032), Int(8064)});
    for (long m = 0; m <= 10; ++m) {
        Poly a = a_poly(m);
        std::vector<Int> s = a_scaled_coeffs(m);
        for (long k = 0; k <= m; ++k) CHECK(a.at(k) == make_rat(s[static_cast<size_t>(k)], pow2(2 * m)));
    }
}

TEST_CASE("coefficient polynomial equals shifted form", "[dlm]") {
    for (long m = 0; m <= 12; ++m) {
        Poly via_d([&] {
            std::vector<Rat> row = d_row_single(m);
            return Poly(std::move(row));
        }());
        Poly expanded = p_poly(m, PMethod::expanded);
        Poly shifted = p_poly(m, PMethod::shifted);
        CHECK(expanded == via_d);
        CHECK(shifted == via_d);
        // P_m(x) = A(x + 1)
        CHECK(taylor_shift(a_poly(m), Rat(1)) == via_d);
    }
    CHECK(p_poly(1) == Poly({make_rat(3, 2), Rat(1)}));
}

TEST_CASE("even reciprocal-distance polynomial", "[dlm]") {
    CHECK(t_poly(2) == Poly({Rat(1), Rat(0), Rat(3), Rat(0), Rat(1)}));
    CHECK(t_poly(0) == Poly({Rat(1)}));
    for (long m = 0; m <= 10; ++m) {
        Poly t = t_poly(m);
        CHECK(t.degree() == 2 * m);
        for (long k = 0; k <= m; ++k) CHECK(t.at(2 * k) == Rat(binomial(m + k, m - k)));
    }
}

TEST_CASE("walks ending on the vertical axis", "[dlm]") {
    CHECK(enumerate_paths(0) == 2);
    CHECK(enumerate_paths(1) == 20);
    CHECK(enumerate_paths(2) == 252);
    CHECK(enumerate_paths(3) == 3432);
    CHECK(enumerate_paths(4) == 48620);
    for (long m = 0; m <= 4; ++m) CHECK(enumerate_paths(m) == binomial(4 * m + 2, 2 * m + 1));
    CHECK_THROWS_AS(enumerate_paths(5), std::domain_error);
}
