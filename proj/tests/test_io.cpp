#include <doctest.h>

#include <random>

#include "support.hpp"
#include "x0curve/io.hpp"

using namespace x0;
using namespace x0::testing;

TEST_CASE("rationals as strings")
{
    CHECK(io::rational_string(Rational(3)) == "3/1");
    CHECK(io::rational_string(Rational(-1, 2)) == "-1/2");
    CHECK(io::parse_rational("6/4") == Rational(3, 2));
    CHECK(io::parse_rational("-7") == -7);
    CHECK_THROWS(io::parse_rational("x"));
    CHECK_THROWS(io::parse_rational("1/0"));
}

TEST_CASE("plain text")
{
    CHECK(io::format_text(p6()) == "y^4 - x^3 - 4*x");
    CHECK(io::format_text(BiPoly()) == "0");
    CHECK(io::format_text(C(-3)) == "-3");
    CHECK(io::format_text(C(2) * X() * Yp(3) + C(1)) == "2*x*y^3 + 1");
    CHECK(io::format_text(golden_p7()) ==
          "y^8 - x^7 - 8*x^6 - 28*x^5 - 64*x^4 - 112*x^3 - 128*x^2 - 64*x");
}

TEST_CASE("LaTeX")
{
    CHECK(io::format_latex(p6()) == "y^{4} - x^{3} - 4x");
    const std::string uv8 = io::format_latex_uv(p_poly(8));
    CHECK(uv8 == "y^{16} - 16v y^{8} - u v");
    const std::string uv10 = io::format_latex_uv(p_poly(10));
    for (const char* c : {"4096v y^{56}", "61696u v y^{48}", "512u v (253u + 30464v) y^{40}", "4619u^{2} - 525568u v + 33488896v^{2}",
                          "196608u v^{2} + 8388608v^{3}", "47u^{2} - 320000u v + 17268736v^{2}",
                          "1310720u v^{2} + 67108864v^{3}", "- u^{7} v"})
        CHECK(uv10.find(c) != std::string::npos);
}

TEST_CASE("series text")
{
    const QExp f(1, 10, {{-4, 1}, {0, 20}, {4, -3}});
    CHECK(io::format_series(f, 5) == "q^-4 + 20 - 3*q^4 + O(q^10)");
    CHECK(io::format_series(f, 2) == "q^-4 + 20 + ...");
    CHECK(io::format_series(QExp::monomial(2, 1, 8, 9), 3) == "2*q^(1/8) + O(q^(9/8))");
    CHECK(io::format_series(QExp::zero(), 3) == "0");
}

TEST_CASE("property: polynomial JSON round trip")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        BiPoly p = random_bipoly(rng, 20, 20, 1000000);
        p *= Integer(1) << static_cast<unsigned>(rng() % 200);
        const auto j = io::to_json(p, 6);
        REQUIRE(io::bipoly_from_json(j) == p);
        REQUIRE(io::bipoly_from_json(nlohmann::json::parse(j.dump())) == p);
    }
    const auto j10 = io::to_json(p_poly(10), 10);
    CHECK(j10["n"] == 10);
    CHECK(io::bipoly_from_json(j10) == p_poly(10));
    // First entry is the leading monomial y^64.
    CHECK(j10["monomials"][0] == nlohmann::json::array({0, 64, "1"}));
}

TEST_CASE("property: series JSON round trip")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 24);
        const QExp f = random_series(rng, d, -20, 30, 10);
        REQUIRE(io::qexp_from_json(nlohmann::json::parse(io::to_json(f).dump())) == f);
    }
    const auto j = io::to_json(QExp::constant(Rational(1, 2)));
    CHECK(j["trunc"].is_null());
    CHECK(io::qexp_from_json(j) == QExp::constant(Rational(1, 2)));
}

TEST_CASE("eta quotient and cusp JSON")
{
    const EtaQuotient eq = x_quotient(8);
    const auto j = io::to_json(eq);
    CHECK(j["n"] == 8);
    CHECK(j["exps"]["7"] == 6);
    CHECK(io::eta_quotient_from_json(j) == eq);

    const auto rows = io::cusp_report(6);
    REQUIRE(rows.size() == 12);
    CHECK(rows.back()["orders"]["x"] == "-4/1");
    CHECK(rows.back()["orders"]["y"] == "-3/1");
    CHECK(io::cusp_report(2)[0]["orders"].empty());
}
