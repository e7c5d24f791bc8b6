#include "doctest.h"

#include "branchlab/reps.hpp"
#include "branchlab/verify.hpp"
#include "branchlab/weights.hpp"
#include "support.hpp"

using namespace branchlab;
using testsupport::get;

namespace {

Symbol symbol(const CaseRecord& c, const std::string& name) {
    for (const auto& s : c.independent)
        if (s.name == name) return s;
    for (const auto& r : c.relations)
        for (const auto& [coef, s] : r.terms)
            if (s.name == name) return s;
    throw std::invalid_argument(c.id() + " has no symbol " + name);
}

WeightVector nu_rho(const CaseRecord& c, const Params& theta) { return infinitesimal_character(theta_label(c, theta)).value; }

WeightVector halves(std::initializer_list<long> v) {
    WeightVector out;
    for (long x : v) out.push_back(rat(x, 2));
    return out;
}

}  // namespace

TEST_CASE("generator evaluation examples") {
    CHECK(evaluate_generator(get("vi"), symbol(get("vi"), "C_Gt"), {2, 0}) == 32);
    CHECK(evaluate_generator(get("star"), symbol(get("star"), "C_K"), {1, 1, 2}) == 12);
    CHECK(evaluate_generator(get("ii_odd:2"), symbol(get("ii_odd:2"), "P_1"), {0, 0, 0}) == 26);
}

TEST_CASE("property: P-side Casimir equals the Casimir of pi(theta)") {
    for (const auto& id : {"i:2", "vi", "vii", "x", "star"}) {
        const auto& c = get(id);
        Symbol s = symbol(c, c.tag == "star" ? "C_Gt^(1)" : "C_Gt");
        for (const auto& theta : enumerate_disc(c, 4)) {
            auto per_factor = casimir_eigenvalue(pi_label(c, pi_params(c, theta)));
            Rational want = c.tag == "star" ? per_factor.at(0) : casimir_total(pi_label(c, pi_params(c, theta)));
            CHECK_MESSAGE(evaluate_generator(c, s, theta) == want, c.id(), " ", params_string(theta));
        }
    }
}

TEST_CASE("relation suite examples") {
    const auto& i2 = get("i:2");
    auto rep = check_relations(i2, 4);
    CHECK(rep.passed());
    CHECK(rep.checks_run() >= 25);
    // 12 = 2*6 - 0 at (1,1).
    CHECK(evaluate_generator(i2, symbol(i2, "C_Gt"), {1, 1}) == 12);

    const auto& st = get("star");
    Params t{1, 1, 2};
    Rational cp = evaluate_generator(st, symbol(st, "C_Gt^(1)"), t) + evaluate_generator(st, symbol(st, "C_Gt^(2)"), t);
    CHECK(3 * cp == 6 * 15 - 4 * 12);
    CHECK(check_relations(st, 6).passed());
    CHECK(check_relations(get("ii_odd:2"), 3).passed());
}

TEST_CASE("a wrong coefficient is reported with its theta") {
    CaseRecord c = get("vi");
    c.relations[0].terms[0].first = 2;
    auto rep = check_relations(c, 3);
    REQUIRE_FALSE(rep.passed());
    const auto& ch = rep.checks[0];
    REQUIRE(ch.first_failure.has_value());
    CHECK(c.theta.contains(ch.first_failure->theta));
    CHECK(ch.first_failure->expected != ch.first_failure->got);
}

TEST_CASE("transfer examples") {
    const auto& i2 = get("i:2");
    CHECK(transfer_map(i2, {1}).apply(WeightVector{5}) == WeightVector{3, 0, -2});
    CHECK(weyl_orbit_equal(i2.g.weyl, WeightVector{3, 0, -2}, nu_rho(i2, {2, 1})));

    const auto& vi = get("vi");
    CHECK(transfer_map(vi, {2}).apply(WeightVector{11}) == halves({11, 7, 5, 3}));
    CHECK(weyl_orbit_equal(vi.g.weyl, halves({11, 7, 5, 3}), nu_rho(vi, {4, 2})));
    CHECK_THROWS_AS(transfer_map(vi, {-1}), std::invalid_argument);

    const auto& xi = get("xi");
    for (long k = 0; k <= 6; ++k) {
        WeightVector want{rat(2 * k + 5, 2), rat(2 * k + 3, 2), rat(2 * k + 1, 2)};
        CHECK(xi.lambda_rho.apply(pi_params(xi, {k})) == WeightVector{2 * k + 3});
        CHECK(weyl_orbit_equal(xi.g.weyl, transfer_map(xi, {}).apply(WeightVector{2 * k + 3}), want));
    }
}

TEST_CASE("uncorrected transfer formulas disagree with nu + rho") {
    // vii: the uncorrected map is (lambda, 2k+3, 2k+1)/2; the SO(5) part must be (j+3/2, k+1/2).
    const auto& vii = get("vii");
    Params t{3, 1};
    WeightVector lam = vii.lambda_rho.apply(pi_params(vii, t));
    WeightVector wrong{lam[0] / 2, rat(2 * 1 + 3, 2), rat(2 * 1 + 1, 2)};
    CHECK_FALSE(weyl_orbit_equal(vii.g.weyl, wrong, nu_rho(vii, t)));
    CHECK(weyl_orbit_equal(vii.g.weyl, transfer_map(vii, {1}).apply(lam), nu_rho(vii, t)));

    // star: the uncorrected last coordinate (lambda-a-3)/2 has the wrong sign for D4.
    const auto& st = get("star");
    Params s{1, 2, 3};
    WeightVector l2 = st.lambda_rho.apply(pi_params(st, s));
    Rational a = 3;
    WeightVector shown{(l2[0] + a + 3) / 2, (l2[1] + 1) / 2, (l2[1] - 1) / 2, (l2[0] - a - 3) / 2};
    CHECK_FALSE(weyl_orbit_equal(st.g.weyl, shown, nu_rho(st, s)));
    CHECK(weyl_orbit_equal(st.g.weyl, transfer_map(st, {3}).apply(l2), nu_rho(st, s)));
}

TEST_CASE("property: transfer holds on every case") {
    for (const auto& c : testsupport::cases()) {
        if (c.tag == "iv" && c.size == 3) continue;  // covered by the acceptance run
        auto rep = check_transfer(c, 4);
        CHECK_MESSAGE(rep.passed(), c.id());
    }
}

TEST_CASE("independence certificates") {
    const auto& i2 = get("i:2");
    auto cert = independence_certificate(i2, {symbol(i2, "C_Gt"), symbol(i2, "E_K")}, 4, 2);
    CHECK(cert.full_rank);
    CHECK(cert.columns == 6);
    CHECK(cert.witness.size() == 6);
    auto zero = independence_certificate(i2, {symbol(i2, "C_Gt"), symbol(i2, "E_K")}, 4, 0);
    CHECK(zero.full_rank);
    CHECK(zero.columns == 1);

    const auto& st = get("star");
    CHECK(independence_certificate(st, st.independent, 5, 2).full_rank);

    // A generator repeated twice is dependent.
    auto dup = independence_certificate(i2, {symbol(i2, "C_Gt"), symbol(i2, "C_Gt")}, 4, 1);
    CHECK_FALSE(dup.full_rank);
    CHECK(dup.rank == 2);

    CHECK_THROWS_AS(independence_certificate(i2, i2.independent, 0, 3), std::invalid_argument);
}

TEST_CASE("index-two exception") {
    auto r = check_index_two(get("ix"), 4);
    CHECK(r.passed());
}

TEST_CASE("structural checks pass") {
    for (const auto& c : testsupport::cases()) {
        CHECK_MESSAGE(check_rank_identity(c).passed(), c.id());
        CHECK_MESSAGE(check_degree_counts(c).passed(), c.id());
        CHECK_MESSAGE(check_pi_tau(c, 3).passed(), c.id());
    }
}

TEST_CASE("report json") {
    auto rep = verify_case(get("x"), {3, 2, 8});
    CHECK(rep.passed());
    auto j = to_json(rep);
    CHECK(j["case"] == "x");
    CHECK(j["checks"].size() == rep.checks.size());
    CHECK(params_string({1, -2}) == "(1,-2)");
}
