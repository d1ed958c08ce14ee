#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <tuple>

#include "quartic/tree.hpp"

using namespace quartic;

namespace {

using CaseTuple = std::tuple<long, long, long, long>;

std::vector<CaseTuple> sorted_cases(const PiecewiseFormula& pf) {
    std::vector<CaseTuple> out;
    for (const PiecewiseCase& c : pf.cases) out.emplace_back(c.modulus, c.residue, c.constant, c.shift);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("top level of the binary split", "[tree]") {
    CHECK(kstar(1) == 0);
    CHECK(kstar(3) == 1);
    CHECK(kstar(13) == 3);
    CHECK(kstar(16) == 4);
    CHECK_THROWS_AS(kstar(0), std::domain_error);
}

TEST_CASE("terminal constants from factorial valuations", "[tree]") {
    Gammas g = gammas(3, 1, 1);
    REQUIRE(g.gamma1.has_value());
    CHECK(*g.gamma1 == 7);
    Gammas h = gammas(13, 3, 1);
    REQUIRE(h.gamma1.has_value());
    CHECK(*h.gamma1 == 36);
    Gammas h4 = gammas(13, 3, 4);
    REQUIRE(h4.gamma2.has_value());
    CHECK(*h4.gamma2 == 40);
    CHECK_THROWS_AS(gammas(3, 1, 3), std::domain_error);  // a > 2^k
}

TEST_CASE("piecewise formula matches the known small cases", "[tree]") {
    CHECK(sorted_cases(piecewise_formula(1)) == std::vector<CaseTuple>{{1, 0, 2, 0}});
    CHECK(sorted_cases(piecewise_formula(2)) == std::vector<CaseTuple>{{1, 0, 5, 0}});
    CHECK(sorted_cases(piecewise_formula(4)) == std::vector<CaseTuple>{{1, 0, 11, 0}});
    CHECK(sorted_cases(piecewise_formula(3)) ==
          std::vector<CaseTuple>{{2, 1, 7, 1}, {4, 0, 9, 0}, {4, 2, 9, 2}});
    CHECK(sorted_cases(piecewise_formula(6)) ==
          std::vector<CaseTuple>{{2, 1, 16, 1}, {4, 0, 18, 0}, {4, 2, 18, 2}});
}

TEST_CASE("thirteen cases at l = 13", "[tree]") {
    std::vector<CaseTuple> want{
        {8, 1, 36, 7},   {8, 2, 37, 6},   {8, 3, 36, 5},   {16, 0, 40, 0},  {16, 4, 40, 12},
        {16, 5, 38, 11}, {16, 6, 39, 10}, {16, 7, 38, 9},  {16, 8, 40, 8},  {16, 12, 40, 4},
        {16, 13, 38, 3}, {16, 14, 39, 2}, {16, 15, 38, 1},
    };
    CHECK(sorted_cases(piecewise_formula(13)) == want);
}

TEST_CASE("strided diagonal series", "[tree]") {
    ValuationSeries s = c_series(3, 5);
    CHECK(s.values == std::vector<long>{7, 9, 8, 9, 7});
    // stride for l = 3 is 2, so these sit at m = 3, 5, 7, 9, 11 of X(3)
    for (long i = 0; i < 5; ++i) CHECK(s.values[static_cast<size_t>(i)] == nu2_a_formula(3, 3 + 2 * i));
}

TEST_CASE("formula evaluation agrees with the series", "[tree]") {
    for (long l : {1L, 2L, 3L, 5L, 6L, 12L, 13L}) {
        PiecewiseFormula pf = piecewise_formula(l);
        ValuationSeries s = c_series(l, 64);
        for (long m = 1; m <= 64; ++m) CHECK(eval_piecewise(pf, m) == s.values[static_cast<size_t>(m - 1)]);
        CHECK(verify_piecewise(l, 128).passed);
    }
}

TEST_CASE("empirical tree shape", "[tree]") {
    DecisionTree t1 = build_tree(1);
    REQUIRE(t1.nodes.size() == 1);
    CHECK(t1.nodes[0].terminal);
    REQUIRE(t1.nodes[0].gamma.has_value());
    CHECK(*t1.nodes[0].gamma == 2);
    CHECK(tree_signature(t1) == "t");

    for (long l = 1; l <= 12; ++l) {
        DecisionTree t = build_tree(l);
        INFO("l = " << l);
        CHECK(tree_shape_ok(t));
    }

    // terminal counts per level follow the odd part
    DecisionTree t5 = build_tree(5);
    std::vector<long> c5 = terminal_counts(t5);
    REQUIRE(c5.size() == 4);
    CHECK(c5[2] == 3);
    CHECK(c5[3] == 2);

    DecisionTree t12 = build_tree(12);
    std::vector<long> c12 = terminal_counts(t12);
    REQUIRE(c12.size() == 3);
    CHECK(c12[1] == 1);
    CHECK(c12[2] == 2);
}

TEST_CASE("shape depends only on the odd part", "[tree]") {
    for (long l : {3L, 5L, 7L}) {
        std::string base = tree_signature(build_tree(l));
        CHECK(tree_signature(build_tree(2 * l)) == base);
        CHECK(tree_signature(build_tree(4 * l)) == base);
    }
}
