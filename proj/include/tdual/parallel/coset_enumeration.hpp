#pragma once

#include <cstddef>
#include <vector>

#include "tdual/abelian/group_ops.hpp"

namespace tdual {

// One representative per element of a finite quotient, lifted to the
// ambient group through the quotient's section. Index i enumerates the
// quotient in mixed radix over its torsion factors (first factor fastest).
std::vector<GroupElement> coset_representatives_serial(const Quotient& q, const FgGroup& ambient);

// Same result, filled in parallel with OpenMP.
std::vector<GroupElement> coset_representatives(const Quotient& q, const FgGroup& ambient);

// Canonical coordinates of quotient element number i.
std::vector<Int> quotient_element(const FgGroup& finite, std::size_t i);

}  // namespace tdual
