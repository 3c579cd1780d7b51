#pragma once

// Cohomology of a circle bundle computed straight from the twisted cochain
// complex C(W) + C(W)z with dz = e, bypassing the short exact sequences.

#include <vector>

#include "tdual/catalog/graded_cohomology.hpp"

namespace oracle {

std::vector<tdual::FgGroup> twisted_complex_cohomology(const tdual::GradedCohomology& base,
                                                      const tdual::GroupElement& euler, int max_degree);

}  // namespace oracle
