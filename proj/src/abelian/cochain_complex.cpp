#include "tdual/abelian/cochain_complex.hpp"

#include "tdual/abelian/group_ops.hpp"
#include "tdual/abelian/normal_forms.hpp"
#include "tdual/errors.hpp"

namespace tdual {

std::size_t CochainComplex::dim(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) return 0;
  return dims[static_cast<std::size_t>(k)];
}

IntMatrix CochainComplex::d(int k) const {
  if (k >= 0 && static_cast<std::size_t>(k) < differentials.size()) {
    const IntMatrix& m = differentials[static_cast<std::size_t>(k)];
    if (m.rows() != dim(k + 1) || m.cols() != dim(k))
      throw MismatchedGroups("differential " + std::to_string(k) + " has the wrong shape");
    return m;
  }
  return IntMatrix(dim(k + 1), dim(k));
}

bool CochainComplex::is_complex() const {
  for (int k = 0; k + 1 < static_cast<int>(dims.size()); ++k)
    if (!(d(k + 1) * d(k)).is_zero()) return false;
  return true;
}

CohomologyDegree cohomology_at(const CochainComplex& c, int k) {
  const std::size_t n = c.dim(k);
  IntMatrix z = kernel_basis(c.d(k));
  const std::size_t zr = z.cols();
  // The cocycle lattice is saturated, so its Smith form is [I; 0] and gives
  // an integral left inverse.
  SmithForm s = smith_normal_form(z);
  IntMatrix select(zr, n);
  for (std::size_t i = 0; i < zr; ++i) select(i, i) = 1;
  IntMatrix left_inverse = s.v * select * s.u;
  IntMatrix boundaries = left_inverse * c.d(k - 1);
  Quotient q = present(boundaries);
  return CohomologyDegree{q.group, z * q.section, q.projection.matrix() * left_inverse};
}

}  // namespace tdual
