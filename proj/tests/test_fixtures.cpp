#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifield/fixtures.hpp"

using namespace ifield;

TEST_CASE("every registered fixture passes") {
    for (auto& id : fixture_ids()) {
        FixtureReport rep = check_fixture(id);
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("unknown fixture rejected") {
    CHECK_THROWS_AS(check_fixture("nope"), ExprError);
}

TEST_CASE("fixture count and ids") {
    auto ids = fixture_ids();
    CHECK(ids.size() == 10);
    CHECK(check_fixture("s211-ode").checks.size() == 1);
    CHECK(check_fixture("spheroidal-leading-order").checks.size() == 18);
    CHECK(check_fixture("no-coordinate-leading-order").checks.size() == 17);
}
