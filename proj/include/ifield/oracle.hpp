#pragma once

#include "ifield/observable.hpp"

namespace ifield {

// central finite-difference estimate of {F,G} at a phase point; F,G must be
// canonical with concrete (numeric-parameter) coefficients
double numeric_bracket_oracle(const Observable& F, const Observable& G,
                              const std::array<double, 6>& pt, double h);

}  // namespace ifield
