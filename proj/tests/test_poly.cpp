#include <catch2/catch_amalgamated.hpp>

#include "quartic/poly.hpp"

using namespace quartic;

TEST_CASE("dense polynomial arithmetic", "[poly]") {
    Poly p({Rat(1), Rat(1)});  // 1 + x
    Poly sq = p * p;
    CHECK(sq == Poly({Rat(1), Rat(2), Rat(1)}));
    CHECK(sq.eval(Rat(3)) == 16);
    CHECK(sq.degree() == 2);
    CHECK((sq - sq).is_zero());
    CHECK(sq.at(5) == 0);
    CHECK(sq.at(-1) == 0);

    Poly d = sq.derivative();
    CHECK(d == Poly({Rat(2), Rat(2)}));

    // trim removes a vanishing leading coefficient produced by subtraction
    Poly q = sq - Poly({Rat(0), Rat(0), Rat(1)});
    CHECK(q.degree() == 1);
}

TEST_CASE("linear composition and shift", "[poly]") {
    Poly p({Rat(1), Rat(1), Rat(2)});  // 1 + x + 2x^2
    Poly shifted = taylor_shift(p, Rat(1));
    CHECK(shifted == Poly({Rat(4), Rat(5), Rat(2)}));
    // p(2x - 1)
    Poly comp = compose_linear(p, Rat(2), Rat(-1));
    CHECK(comp.eval(Rat(1)) == p.eval(Rat(1)));
    CHECK(comp.eval(Rat(0)) == p.eval(Rat(-1)));
}

TEST_CASE("division and gcd", "[poly]") {
    Poly num({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
    Poly den({Rat(-1), Rat(1)});          // x - 1
    CHECK(poly_div_exact(num, den) == Poly({Rat(1), Rat(1)}));

    auto [q, r] = divmod(Poly({Rat(1), Rat(0), Rat(1)}), den);
    CHECK(q == Poly({Rat(1), Rat(1)}));
    CHECK(r == Poly({Rat(2)}));

    Poly g = poly_gcd(num, Poly({Rat(1), Rat(-2), Rat(1)}));  // gcd(x^2-1, (x-1)^2)
    CHECK(g == Poly({Rat(-1), Rat(1)}));

    Poly sf = squarefree_part(den * den * Poly({Rat(2), Rat(1)}));
    CHECK(make_monic(sf) == make_monic(den * Poly({Rat(2), Rat(1)})));
}

TEST_CASE("primitive integer form", "[poly]") {
    QPoly z = make_primitive(Poly({Rat(1, 2), Rat(3, 4)}));
    CHECK(z == QPoly({Int(2), Int(3)}));
    QPoly w = make_primitive(Poly({Rat(4), Rat(8)}));
    CHECK(w == QPoly({Int(1), Int(2)}));
}

TEST_CASE("sturm root counting", "[poly]") {
    CHECK(count_distinct_real_roots(Poly({Rat(-1), Rat(0), Rat(1)})) == 2);
    CHECK(count_distinct_real_roots(Poly({Rat(1), Rat(0), Rat(1)})) == 0);
    CHECK(count_distinct_real_roots(Poly({Rat(0), Rat(1)})) == 1);

    Poly cubic = Poly({Rat(1), Rat(1)}) * Poly({Rat(2), Rat(1)}) * Poly({Rat(3), Rat(1)});
    CHECK(is_real_rooted(cubic));
    CHECK_FALSE(is_real_rooted(Poly({Rat(1), Rat(1), Rat(1)})));
    // repeated roots still count as real-rooted
    CHECK(is_real_rooted(Poly({Rat(1), Rat(2), Rat(1)})));

    // roots of x^2 - 3x + 2 in the half-open interval (0, 3]
    Poly two_roots({Rat(2), Rat(-3), Rat(1)});
    CHECK(count_roots_half_open(two_roots, Rat(0), Rat(3)) == 2);
    CHECK(count_roots_half_open(two_roots, Rat(1), Rat(3)) == 1);
}

TEST_CASE("sparse Laurent basics", "[poly]") {
    QLaurent v = QLaurent::monomial(-1, Int(1)) + QLaurent::monomial(1, Int(1));
    QLaurent sq = v * v;
    CHECK(sq.at(-2) == 1);
    CHECK(sq.at(0) == 2);
    CHECK(sq.at(2) == 1);
    CHECK(sq.lowest() == -2);
    CHECK(sq.highest() == 2);
    CHECK(sq == sq.bar());
    CHECK(v.stretch(2) == QLaurent::monomial(-2, Int(1)) + QLaurent::monomial(2, Int(1)));
    CHECK(v.shifted(1).at(0) == 1);
    CHECK(v.all_nonneg());
    CHECK_FALSE((v - sq).all_nonneg());
    CHECK((v - v).is_zero());
    CHECK_THROWS_AS(QLaurent().lowest(), std::domain_error);
    CHECK_THROWS_AS(v.stretch(0), std::domain_error);

    QLaurent dense = QLaurent::from_dense(QPoly({Int(1), Int(0), Int(5)}), -1);
    CHECK(dense.at(-1) == 1);
    CHECK(dense.at(0) == 0);
    CHECK(dense.at(1) == 5);
}

TEST_CASE("Laurent exact division", "[poly]") {
    LaurentPoly v = LaurentPoly::monomial(-1, Rat(1)) + LaurentPoly::monomial(1, Rat(1));
    LaurentPoly num = LaurentPoly::monomial(-2, Rat(1)) - LaurentPoly::monomial(2, Rat(1));
    LaurentPoly q = laurent_div_exact(num, v);
    CHECK(q == LaurentPoly::monomial(-1, Rat(1)) - LaurentPoly::monomial(1, Rat(1)));
    CHECK_THROWS_AS(laurent_div_exact(num, LaurentPoly()), std::domain_error);
}

TEST_CASE("evaluation at phi minus its inverse", "[poly]") {
    // y^2 at y = phi - 1/phi gives phi^2 - 2 + phi^-2
    LaurentPoly r = substitute_phi(Poly({Rat(0), Rat(0), Rat(1)}));
    CHECK(r.at(2) == 1);
    CHECK(r.at(0) == -2);
    CHECK(r.at(-2) == 1);
    // constants pass through
    CHECK(substitute_phi(Poly({Rat(7)})) == LaurentPoly::monomial(0, Rat(7)));
}
