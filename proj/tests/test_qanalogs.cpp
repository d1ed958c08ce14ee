#include <catch2/catch_amalgamated.hpp>

#include "quartic/emit.hpp"
#include "quartic/qanalogs.hpp"

using namespace quartic;

TEST_CASE("gaussian binomials", "[qanalogs]") {
    CHECK(gaussian_binomial(4, 2) == QPoly({Int(1), Int(1), Int(2), Int(1), Int(1)}));
    CHECK(gaussian_binomial(3, 0) == QPoly({Int(1)}));
    CHECK(gaussian_binomial(3, 5).is_zero());
    CHECK(gaussian_binomial(5, -1).is_zero());
    // q = 1 collapses to ordinary binomials
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k).eval(Int(1)) == binomial(n, k));
    // palindromic coefficient vector
    QPoly g = gaussian_binomial(7, 3);
    for (long i = 0; i <= g.degree(); ++i) CHECK(g.at(i) == g.at(g.degree() - i));
}

TEST_CASE("quantum binomials", "[qanalogs]") {
    QLaurent q21 = quantum_binomial(2, 1);
    CHECK(laurent_str(q21) == "q^-1 + q");
    CHECK(quantum_binomial(3, 1) ==
          QLaurent::monomial(-2, Int(1)) + QLaurent::monomial(0, Int(1)) + QLaurent::monomial(2, Int(1)));
    CHECK(quantum_binomial(4, 6).is_zero());
    // invariant under q -> 1/q
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            QLaurent v = quantum_binomial(n, k);
            CHECK(v == v.bar());
        }
}

TEST_CASE("stretch-and-shift bridge between the two families", "[qanalogs]") {
    for (long n = 0; n <= 16; ++n)
        for (long k = 0; k <= n; ++k) CHECK(quantum_gaussian_relation(n, k));
}

TEST_CASE("operator on Laurent sequences", "[qanalogs]") {
    std::vector<QLaurent> f{quantum_binomial(2, 0), quantum_binomial(2, 1), quantum_binomial(2, 2)};
    QLSeq r = q_l_operator(f);
    REQUIRE(r.entries.size() == 3);
    // middle entry: (q^-1+q)^2 - 1 = q^-2 + 1 + q^2
    CHECK(r.entries[1] == QLaurent::monomial(-2, Int(1)) + QLaurent::monomial(0, Int(1)) + QLaurent::monomial(2, Int(1)));
    CHECK(r.nonneg[0]);
    CHECK(r.nonneg[1]);
    CHECK(r.nonneg[2]);
}

TEST_CASE("second iterate digs up a negative coefficient", "[qanalogs]") {
    QWitness w = gaussian_depth2_scan(12);
    REQUIRE(w.found);
    CHECK(w.coefficient < 0);
    // re-derive the reported coefficient from scratch
    std::vector<QLaurent> row;
    for (long k = 0; k <= w.n; ++k) row.push_back(QLaurent::from_dense(gaussian_binomial(w.n, k)));
    QLSeq once = q_l_operator(row);
    QLSeq twice = q_l_operator(once.entries);
    CHECK(twice.entries[static_cast<size_t>(w.k)].at(w.exponent) == w.coefficient);

    Report rep = gaussian_depth2_witness(12);
    CHECK(rep.passed);
    CHECK_THROWS_AS(gaussian_depth2_witness(3), std::domain_error);
}

TEST_CASE("family probes stay nonnegative at small depth", "[qanalogs]") {
    CHECK(quantum_conjecture_probe(q_row(6), 3, 12).passed);
    CHECK(quantum_conjecture_probe(q_row(0), 1, 12).passed);
    CHECK(quantum_conjecture_probe(q_column(2), 3, 12).passed);
    CHECK(quantum_conjecture_probe(q_diagonal(3, 1, 2), 2, 10).passed);
    CHECK_THROWS_AS(quantum_conjecture_probe(q_diagonal(3, 2, 1), 2, 10), std::domain_error);
}

TEST_CASE("lowest degree of the diagonal defect", "[qanalogs]") {
    // hand expansion at (0,2,1): <2 1>^2 - <4 2> = -q^4 - q^-4
    DiagonalDefect base = diagonal_defect(0, 2, 1);
    CHECK(base.lowest_exponent == -4);
    CHECK(base.lowest_coefficient == -1);

    for (long n = 0; n <= 10; ++n)
        for (long v = 1; v <= 3; ++v)
            for (long u = v + 1; u <= 4; ++u) {
                CHECK(diagonal_lowest_degree(n, u, v) == -1);
                CHECK(diagonal_defect(n, u, v).lowest_exponent == -2 * v * (n + 2 * u - 2 * v));
            }
    CHECK_THROWS_AS(diagonal_lowest_degree(3, 1, 2), std::domain_error);
    CHECK_THROWS_AS(diagonal_lowest_degree(3, 1, 1), std::domain_error);
}
