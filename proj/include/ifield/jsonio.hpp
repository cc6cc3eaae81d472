#pragma once

#include "ifield/catalog.hpp"
#include "ifield/detgen.hpp"
#include "ifield/fixtures.hpp"

namespace ifield {

// serialized JSON (versioned schema, docs/system-format.md)
std::string system_to_json(const FieldSystem& sys);
std::string report_to_json(const VerificationReport& rep);
std::string fixture_report_to_json(const FixtureReport& rep);
std::string deteqset_to_json(const DetEqSet& set);

}  // namespace ifield
