#pragma once

#include "ifield/catalog.hpp"

namespace ifield {

// Leading-order fixtures: printed determining-equation sets with their
// candidate solution families. check_fixture substitutes the family into
// every printed equation and requires the normal form to vanish.
struct FixtureReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_text() const;
};

std::vector<std::string> fixture_ids();
FixtureReport check_fixture(const std::string& id);
std::vector<FixtureReport> check_all_fixtures();

}  // namespace ifield
