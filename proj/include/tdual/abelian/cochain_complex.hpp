#pragma once

#include <cstddef>
#include <vector>

#include "tdual/abelian/fg_group.hpp"

namespace tdual {

// Finite cochain complex of free modules. C^k is zero outside [0, dims.size()).
struct CochainComplex {
  std::vector<std::size_t> dims;
  // differentials[k] : C^k -> C^{k+1}, shape dims[k+1] x dims[k]
  std::vector<IntMatrix> differentials;

  std::size_t dim(int k) const;
  // Zero matrix of the right shape when k is out of range.
  IntMatrix d(int k) const;
  bool is_complex() const;
};

struct CohomologyDegree {
  FgGroup group;
  // dims[k] x ngens: a representative cocycle per canonical generator
  IntMatrix representatives;
  // ngens x dims[k]: class of a cocycle (meaningless on non-cocycles)
  IntMatrix cocycle_to_class;
};

CohomologyDegree cohomology_at(const CochainComplex& c, int k);

}  // namespace tdual
