#pragma once

#include "ifield/catalog.hpp"

namespace ifield::data {

FieldSystem elliptic_a_nonzero(const ParamMap& params);
FieldSystem elliptic_a_zero(const ParamMap& params);
FieldSystem limit_standard(const ParamMap& params);
FieldSystem class_iii(const ParamMap& params);
FieldSystem special_first_order(const ParamMap& params);
FieldSystem cd_zero_leading(const ParamMap& params);

// raw transcription strings for the two new systems (shared with tests)
const std::map<std::string, std::string>& system_a_strings();
const std::map<std::string, std::string>& system_b_strings();
// U1, U2 per epsilon branch
std::map<std::string, Expr> u_branch(int eps);

}  // namespace ifield::data
