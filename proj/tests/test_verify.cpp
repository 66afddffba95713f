#include <doctest.h>

#include <stdexcept>

#include "pythag/report_json.hpp"
#include "pythag/verify.hpp"

using namespace pythag;

TEST_CASE("suite registry") {
    const auto& names = verify::suite_names();
    CHECK(names.size() == 12);
    CHECK(names.front() == "euclid");
    CHECK(names.back() == "all");
    CHECK(verify::is_suite("complex-line"));
    CHECK(!verify::is_suite("bogus"));
    CHECK_THROWS_AS(verify::run_suite("bogus", 0, 1e-9, 10), std::invalid_argument);
}

TEST_CASE("every suite passes at the default tolerance") {
    for (const auto& name : verify::suite_names()) {
        if (name == "all") continue;
        const auto report = verify::run_suite(name, 42, 1e-9, 50);
        INFO("suite " << name << " max residual " << report.max_residual);
        CHECK(report.failures == 0);
        CHECK(report.cases == 50);
        CHECK(report.per_case.size() == 50);
        CHECK(report.max_residual <= 1e-9);
    }
}

TEST_CASE("a single degua case is essentially exact") {
    const auto report = verify::run_suite("degua", 3, 1e-9, 1);
    REQUIRE(report.cases == 1);
    CHECK(report.per_case[0].residual <= 1e-12);
}

TEST_CASE("impossible tolerance fails") {
    const auto report = verify::run_suite("spherical", 42, 0.0, 50);
    CHECK(report.failures > 0);
}

TEST_CASE("all aggregates the eleven suites") {
    const auto report = verify::run_suite("all", 9, 1e-9, 10);
    CHECK(report.cases == 110);
    CHECK(report.failures == 0);
    CHECK(report.suite == "all");
}

TEST_CASE("reports are deterministic and mode-independent") {
    const auto a = verify::run_suite("all", 5, 1e-9, 20, par::Mode::serial);
    const auto b = verify::run_suite("all", 5, 1e-9, 20, par::Mode::serial);
    const auto c = verify::run_suite("all", 5, 1e-9, 20, par::Mode::openmp);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(report_json::to_json(a) == report_json::to_json(c));

    const auto other_seed = verify::run_suite("all", 6, 1e-9, 20);
    CHECK(!(a == other_seed));
}

TEST_CASE("json round-trip is lossless") {
    const auto report = verify::run_suite("projection", 11, 1e-9, 25);
    const auto text = report_json::to_json(report);
    const auto parsed = report_json::verify_report_from_json(text);
    CHECK(parsed == report);
    CHECK(report_json::to_json(parsed) == text);

    CHECK_THROWS_AS(report_json::verify_report_from_json("{not json"), std::runtime_error);
}

TEST_CASE("number formatting carries 17 significant digits") {
    CHECK(report_json::format_number(1.0) == "1");
    CHECK(report_json::format_number(0.1) == "0.10000000000000001");
    const double v = 3.141592653589793;
    CHECK(std::stod(report_json::format_number(v)) == v);
}
