#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdaha/report.hpp"

using namespace bcd;

TEST_CASE("run reports re-serialize byte-identically") {
    RunReport report;
    report.command = "verify";
    report.params = {{"p", 1}, {"q", 2}};
    report.results["dimension"] = 2;
    report.results["value"] = rational_json(rat(-3, 7));
    report.timingMs = 12;
    std::string first = report.to_json().dump(2);
    std::string again = nlohmann::json::parse(first).dump(2);
    CHECK(first == again);
}

TEST_CASE("status reflects the discrepancy list") {
    RunReport report;
    report.command = "x";
    CHECK(report.pass());
    CHECK(report.to_json()["status"] == "pass");
    report.discrepancies.push_back("something");
    CHECK(!report.pass());
    CHECK(report.to_json()["status"] == "fail");
}

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(rational_json(rat(1, 2)) == "1/2");
    CHECK(rational_json(Rational(-4)) == "-4/1");
}

TEST_CASE("spectra are sorted multisets with multiplicities") {
    ExactMatrix m = ExactMatrix::diagonal({rat(1, 2), rat(1, 2), rat(-1)});
    nlohmann::json j = spectrum_json(rational_spectrum(m));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["value"] == "-1/1");
    CHECK(j[0]["multiplicity"] == 1);
    CHECK(j[1]["value"] == "1/2");
    CHECK(j[1]["multiplicity"] == 2);
}

TEST_CASE("parameter parsing accepts rationals as strings") {
    nlohmann::json j = {{"p", 1},          {"q", 2}, {"n", 1}, {"mu", "0"},
                        {"nvec", {-1}},    {"xi", {0}}, {"nu", {"3/5"}}};
    FunctorParams p = params_from_json(j);
    CHECK(p.mu == 0);
    CHECK(p.nu[0] == rat(3, 5));
}

TEST_CASE("parameter parsing rejects malformed documents") {
    CHECK_THROWS_AS(params_from_json(nlohmann::json::array()), std::invalid_argument);
    nlohmann::json j = {{"p", 1}, {"q", 2}, {"n", 1}, {"mu", "0"}, {"nvec", {-1}}, {"xi", {0}}};
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);
    j["nu"] = {"3//5"};
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);
}
