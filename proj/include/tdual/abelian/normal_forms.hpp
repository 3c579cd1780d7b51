#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdual/abelian/int_matrix.hpp"

namespace tdual {

// u * m * v = d, with u_inv and v_inv the inverses of the unimodular factors.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  // d(i,i) for i < min(rows, cols).
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// transform * m = h, h in row echelon form with positive pivots and reduced
// entries above each pivot. Pivots are searched only among the first
// pivot_cols columns, so augmented matrices can carry a passenger block.
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm row_hermite_form(const IntMatrix& m);
HermiteForm row_hermite_form(const IntMatrix& m, std::size_t pivot_cols);

// Columns form an echelon basis of {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Columns form an echelon basis of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

// Some integer x with a x = b (column by column), or nullopt.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

}  // namespace tdual
