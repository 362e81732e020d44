#include <doctest.h>

#include <random>

#include "support.hpp"
#include "x0curve/errors.hpp"
#include "x0curve/io.hpp"
#include "x0curve/modforms.hpp"
#include "x0curve/verify.hpp"

using namespace x0;
using namespace x0::testing;

TEST_CASE("check_vanishing verdicts")
{
    const QExp z = QExp::zero(1, 20);
    CHECK(check_vanishing("c", std::nullopt, z, -5, 10).outcome == Outcome::pass);
    CHECK(check_vanishing("c", std::nullopt, z, -5, 19).outcome == Outcome::pass);
    CHECK(check_vanishing("c", std::nullopt, z, -5, 20).outcome == Outcome::inconclusive);
    const QExp f(1, 20, {{15, 3}});
    const auto r = check_vanishing("c", 6, f, -5, 16);
    CHECK(r.outcome == Outcome::fail);
    CHECK(r.detail.find("3*q^(15)") != std::string::npos);
    CHECK(check_vanishing("c", 6, f, -5, 14).outcome == Outcome::pass);
    // A nonzero coefficient is a disproof even when the window is short.
    CHECK(check_vanishing("c", 6, f, -5, 40).outcome == Outcome::fail);
}

TEST_CASE("theta-eta and Jacobi identities")
{
    for (const auto& r : verify_theta_eta(200)) {
        CAPTURE(r.claim);
        CHECK(r.outcome == Outcome::pass);
        CHECK(r.required_hi == 200);
        CHECK(r.covers_requirement());
    }
    CHECK(verify_jacobi_quartic(200).outcome == Outcome::pass);
}

TEST_CASE("recursion identities")
{
    for (int n = 5; n <= 9; ++n) {
        CAPTURE(n);
        for (const auto& r : verify_recursion_identities(n, 200)) {
            CHECK(r.outcome == Outcome::pass);
            CHECK(r.required_hi == 200 * (1L << (n - 4)));
        }
    }
    CHECK_THROWS(verify_recursion_identities(4, 10));
}

TEST_CASE("defining equations for even n")
{
    const auto r6 = verify_defining_equation(6);
    CHECK(r6.outcome == Outcome::pass);
    CHECK(r6.required_lo == -12);
    CHECK(r6.required_hi == 10);
    CHECK(r6.covers_requirement());

    const auto r8 = verify_defining_equation(8);
    CHECK(r8.outcome == Outcome::pass);
    CHECK(r8.required_lo == -240);

    VerifyOptions wide;
    wide.margin = 40;
    CHECK(verify_defining_equation(8, wide).outcome == Outcome::pass);
    CHECK(verify_defining_equation(8, wide).required_hi == 40);
}

TEST_CASE("odd n is rejected with the failing Newman condition")
{
    for (int n : {7, 9, 11}) {
        CAPTURE(n);
        try {
            verify_defining_equation(n);
            FAIL("expected NotApplicable");
        } catch (const NotApplicable& e) {
            const std::string msg = e.what();
            CHECK(msg.find("not modular") != std::string::npos);
            CHECK(msg.find("condition (2)") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(verify_defining_equation(4), NotApplicable);
}

TEST_CASE("truncation override below the derived bound is never a pass")
{
    VerifyOptions o;
    o.trunc_override = 5;
    CHECK(verify_defining_equation(6, o).outcome == Outcome::inconclusive);
    o.trunc_override = defining_equation_trunc(6, 12, 10) - 1;
    CHECK(verify_defining_equation(6, o).outcome == Outcome::inconclusive);
    o.trunc_override = defining_equation_trunc(6, 12, 10);
    CHECK(verify_defining_equation(6, o).outcome == Outcome::pass);
    o.trunc_override = 500;
    CHECK(verify_defining_equation(6, o).outcome == Outcome::pass);
}

TEST_CASE("cap turns into inconclusive")
{
    VerifyOptions o;
    o.cap = 8;
    const auto r = verify_defining_equation(10, o);
    CHECK(r.outcome == Outcome::inconclusive);
    CHECK(r.detail.find("cap") != std::string::npos);
}

TEST_CASE("mutation sensitivity")
{
    for (int n : {6, 8}) {
        CAPTURE(n);
        const BiPoly p = p_poly(n);
        REQUIRE(verify_defining_equation_for(p, n).outcome == Outcome::pass);
        std::vector<std::pair<int, int>> keys;
        for (const auto& [key, c] : p.terms())
            keys.push_back(key);
        keys.push_back({0, 0});
        keys.push_back({1, 1});
        for (auto [i, j] : keys) {
            CAPTURE(i);
            CAPTURE(j);
            BiPoly m = p;
            m.add_term(i, j, 1);
            CHECK(verify_defining_equation_for(m, n).outcome == Outcome::fail);
        }
    }
}

TEST_CASE("property: a pass always covers the requirement")
{
    std::mt19937_64 rng(31);
    int passes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        VerifyOptions o;
        o.margin = static_cast<long>(rng() % 20);
        if (rng() % 2)
            o.trunc_override = static_cast<long>(rng() % 300);
        const int n = (rng() % 2) ? 6 : 8;
        const auto r = verify_defining_equation(n, o);
        if (r.outcome == Outcome::pass) {
            ++passes;
            REQUIRE(r.covers_requirement());
            REQUIRE(r.required_hi == o.margin);
        }
    }
    CHECK(passes > 0);
}

TEST_CASE("reports serialize deterministically")
{
    const auto a = io::to_json(verify_defining_equation(8)).dump();
    const auto b = io::to_json(verify_defining_equation(8)).dump();
    CHECK(a == b);
    const auto j = io::to_json(verify_defining_equation(6));
    CHECK(j["outcome"] == "pass");
    CHECK(j["n"] == 6);
    CHECK(j["rigor_bound"] == "[-12, 10]");
    CHECK(j["window"].size() == 2);
}

TEST_CASE("pole structure")
{
    for (int n : {6, 8, 10, 12}) {
        CAPTURE(n);
        CHECK(verify_pole_structure(n).outcome == Outcome::pass);
    }
    CHECK_THROWS_AS(verify_pole_structure(7), NotApplicable);
}

TEST_CASE("X_0(64) quartic and its mutation")
{
    CHECK(verify_x0_64_quartic(200).outcome == Outcome::pass);
    const long t = 201;
    const QExp x = eta_quotient_series(EtaQuotient(4, {{2, 2}, {3, 2}}), t);
    const QExp y_no2 = eta_quotient_series(EtaQuotient(4, {{3, 2}, {4, 2}}), t);
    const QExp z = eta_quotient_series(EtaQuotient(4, {{2, -2}, {3, 8}, {4, -2}}), t);
    CHECK(check_quartic(x, y_no2.scaled(2), z, 200).outcome == Outcome::pass);
    CHECK(check_quartic(x, y_no2, z, 200).outcome == Outcome::fail);

    // Single-coefficient mutation of y.
    std::vector<QExp::Term> terms = y_no2.scaled(2).terms();
    terms[3].c += 1;
    const QExp y_mut(y_no2.denom(), y_no2.trunc(), terms);
    CHECK(check_quartic(x, y_mut, z, 200).outcome == Outcome::fail);
}

TEST_CASE("Fermat birational map")
{
    const auto r = verify_fermat_birational();
    CHECK(r.outcome == Outcome::pass);
    CHECK(r.detail.find("numerator = 16 * (y^4 - x^3 - 4x)") != std::string::npos);
    BirationalMap bad;
    bad.shift = -1;
    CHECK(verify_fermat_birational(bad).outcome == Outcome::fail);
    BirationalMap bad_scale;
    bad_scale.y_scale = 1;
    CHECK(verify_fermat_birational(bad_scale).outcome == Outcome::fail);
}

TEST_CASE("genus coincidence")
{
    const auto r = verify_genus_coincidence(5);
    CHECK(r.outcome == Outcome::pass);
    CHECK(r.detail.find("degenerate") != std::string::npos);
    CHECK(verify_genus_coincidence(30).outcome == Outcome::pass);
    CHECK_THROWS(verify_genus_coincidence(0));
}
