#include <catch2/catch_amalgamated.hpp>

#include "quartic/identities.hpp"

using namespace quartic;

namespace {
std::string witness_value(const Report& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return {};
}
}  // namespace

TEST_CASE("identity name round trip", "[identities]") {
    for (const auto& [id, name] : identity_names()) {
        CHECK(identity_from_name(name) == id);
        CHECK(identity_name(id) == name);
    }
    CHECK_THROWS_AS(identity_from_name("nope"), std::domain_error);
}

TEST_CASE("alternating central sum stays integral", "[identities]") {
    // S_m = sum_i 4^{floor(m/2)-i} C(m,2i) C(2i,i); first values 1,1,6,10,70
    CHECK(detail::sum1_scaled(0) == 1);
    CHECK(detail::sum1_scaled(1) == 1);
    CHECK(detail::sum1_scaled(2) == 6);
    CHECK(detail::sum1_scaled(3) == 10);
    CHECK(detail::sum1_scaled(4) == 70);
}

TEST_CASE("finite sum identities pass on a modest range", "[identities]") {
    CHECK(check_sum1(120).passed);
    CHECK(check_recur2(120).passed);
    CHECK(check_pretty(80).passed);
    CHECK(check_s1_closed(80).passed);
    CHECK(check_binom_product(50).passed);
    CHECK(check_wallis_moment(50).passed);
}

TEST_CASE("golden-ratio rewrites", "[identities]") {
    CHECK(check_newform2(40).passed);
    CHECK(check_rec22(40).passed);
    // (phi^3 + phi^-3)/(phi + phi^-1) = phi^2 - 1 + phi^-2
    LaurentPoly n1 = laurent_div_exact(detail::phi_pair(1), detail::phi_pair(0));
    CHECK(n1.at(2) == 1);
    CHECK(n1.at(0) == -1);
    CHECK(n1.at(-2) == 1);
    CHECK(n1.lowest() == -2);
    CHECK(n1.highest() == 2);
}

TEST_CASE("coefficient recurrences", "[identities]") {
    CHECK(check_closed_dmm(60).passed);
    CHECK(check_kp_rec1(40).passed);
    CHECK(check_kp_rec2(40).passed);
    CHECK(check_dj_rec(40).passed);
}

TEST_CASE("row minimum sits at the top index", "[identities]") {
    Report r = check_minexpr(2);
    CHECK(r.passed);
    CHECK(witness_value(r, "value_at_m_max") == "27/2");
}

TEST_CASE("dispatcher reaches every identity", "[identities]") {
    for (const auto& [id, name] : identity_names()) {
        Report r = check_identity(id, 12);
        INFO(name);
        CHECK(r.passed);
        CHECK(r.id == name);
    }
}
