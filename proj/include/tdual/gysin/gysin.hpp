#pragma once

#include <string>
#include <vector>

#include "tdual/abelian/group_ops.hpp"
#include "tdual/catalog/graded_cohomology.hpp"

namespace tdual {

struct CircleBundle {
  GradedCohomology base;
  GroupElement euler;

  CircleBundle(GradedCohomology base, GroupElement euler);
};

// One degree of the total space, assembled from
//   0 -> coker(e: H^{k-2} -> H^k) -> H^k(E) -> ker(e: H^{k-1} -> H^{k+1}) -> 0.
// The presentation has the cokernel generators first (suffix x1), then a
// chosen lift of each kernel generator (suffix xz).
struct GysinDegree {
  FgGroup group;
  std::vector<std::string> names;
  Hom pullback;     // H^k(W) -> H^k(E)
  Hom pushforward;  // H^k(E) -> H^{k-1}(W)
  bool ambiguous = false;

  Quotient base_cokernel;
  Subgroup fiber_kernel;
  // extension[i] = d_i * lift_i in cokernel coordinates, for torsion kernel generators
  std::vector<std::vector<Int>> extension;
  IntMatrix from_presentation;  // ngens x (coker gens + kernel gens)
  IntMatrix to_presentation;    // (coker gens + kernel gens) x ngens
};

class TotalSpaceCohomology {
 public:
  TotalSpaceCohomology() = default;
  explicit TotalSpaceCohomology(std::vector<GysinDegree> degrees) : degrees_(std::move(degrees)) {}

  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  const GysinDegree& degree(int k) const;
  const FgGroup& group(int k) const { return degree(k).group; }
  const std::vector<std::string>& names(int k) const { return degree(k).names; }
  std::vector<FgGroup> groups() const;
  bool ambiguous(int k) const { return degree(k).ambiguous; }
  std::vector<int> ambiguous_degrees() const;

  // The element of H^k(E) given by the chosen lift of a kernel element.
  GroupElement lift_from_kernel(int k, const GroupElement& kernel_element) const;
  GroupElement element(int k, std::vector<Int> coords) const { return GroupElement(group(k), std::move(coords)); }

 private:
  std::vector<GysinDegree> degrees_;
};

// Degrees 0..max_degree; the base must have cup data through max_degree+1.
TotalSpaceCohomology total_space_cohomology(const CircleBundle& bundle, int max_degree);

GroupElement pushforward_of(const TotalSpaceCohomology& tsc, int k, const GroupElement& x);
GroupElement pullback_of(const TotalSpaceCohomology& tsc, int k, const GroupElement& y);

// Positions of the five-term segments where exactness fails, as readable
// labels; empty when the whole sequence checks out.
std::vector<std::string> exactness_failures(const CircleBundle& bundle, const TotalSpaceCohomology& tsc);

}  // namespace tdual
