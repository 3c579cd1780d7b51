#pragma once

#include <string>
#include <string_view>

#include "tdual/catalog/graded_cohomology.hpp"

namespace tdual {

inline constexpr int kCatalogMaxDegree = 8;

enum class SpaceKind { Point, Sphere, Torus, Surface, RealProjective, ComplexProjective, KZ2Truncation };

// Catalog names: point, S<n>, T2, Sigma<g>, RP<n>, CP<n>, KZ2 or KZ2_<n>.
// KZ2_<n> is the 2n-skeleton of K(Z,2), i.e. CP^n; its cohomology agrees
// with K(Z,2) below degree 2n+1.
struct CatalogSpace {
  SpaceKind kind = SpaceKind::Point;
  int n = 0;

  static CatalogSpace parse(std::string_view name);
  std::string name() const;
  int dimension() const;
  bool simply_connected() const;
};

GradedCohomology cohomology_of(const CatalogSpace& space, int max_degree);
// max_degree defaults to min(dim + 2, 8): enough for every Gysin segment of
// a circle bundle over the space.
GradedCohomology cohomology_of(const CatalogSpace& space);
int default_max_degree(const CatalogSpace& space);

// H^k(W x S^1) = H^k(W) + H^{k-1}(W), generators suffixed x1 and xz.
GradedCohomology kunneth_with_circle(const GradedCohomology& w);

// Builds graded cohomology (groups, names, cup2) from a cochain model.
// cell_names[k][j] labels basis cochain j of C^k.
GradedCohomology cohomology_from_cochains(std::string space, bool simply_connected, int max_degree,
                                          CochainModel model,
                                          const std::vector<std::vector<std::string>>& cell_names);

}  // namespace tdual
