#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/harness.hpp"

#include <cmath>
#include <set>
#include <string>

using namespace ellsos;

TEST_CASE("quick suite passes with unique check ids") {
    const suite_result r = run_suite(suite_kind::quick);
    CHECK(r.pass);
    std::set<std::string> ids;
    for (const check_result& c : r.checks) {
        CAPTURE(c.id);
        CHECK(c.pass);
        CHECK(std::isfinite(c.residual));
        CHECK(ids.insert(c.id).second);
    }
    CHECK(r.seconds < 10.0);
}

TEST_CASE("suite is deterministic for a fixed seed") {
    const suite_result a = run_suite(suite_kind::quick);
    const suite_result b = run_suite(suite_kind::quick);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == b.checks[i].id);
        CHECK(a.checks[i].residual == b.checks[i].residual);
    }
}

TEST_CASE("seed changes move the sampled residuals") {
    sample_policy p1;
    p1.seed = 1;
    sample_policy p2;
    p2.seed = 2;
    const suite_result a = run_suite(suite_kind::quick, p1);
    const suite_result b = run_suite(suite_kind::quick, p2);
    bool any_differs = false;
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        any_differs = any_differs || (a.checks[i].residual != b.checks[i].residual);
    CHECK(any_differs);
    CHECK(a.pass);
    CHECK(b.pass);
}

TEST_CASE("fault injection fails exactly the tagged check") {
    sample_policy p;
    p.fault_tag = "dyb";
    const suite_result r = run_suite(suite_kind::quick, p);
    CHECK_FALSE(r.pass);
    for (const check_result& c : r.checks) {
        CAPTURE(c.id);
        if (c.id == "dyb")
            CHECK_FALSE(c.pass);
        else
            CHECK(c.pass);
    }
}

TEST_CASE("drawn configurations are generic and well-formed") {
    sample_policy p;
    p.seed = 4242;
    const drawn_configuration d = draw_configuration(3, p);
    CHECK(d.params.valid());
    CHECK(d.params.L == 3);
    CHECK(d.cfg.x.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK(std::abs(d.cfg.x[i] - d.cfg.x[j]) > 0.0);
    CHECK(std::abs(d.cfg.x0 - d.cfg.x0bar) > 0.0);
}
