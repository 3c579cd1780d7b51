#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdual/abelian/group_ops.hpp"
#include "tdual/catalog/graded_cohomology.hpp"
#include "tdual/gysin/gysin.hpp"

namespace tdual {

// Generator of a Z-action on a finitely generated abelian group.
class ZAction {
 public:
  explicit ZAction(Hom automorphism);
  static ZAction on_free(const IntMatrix& matrix);

  const FgGroup& group() const { return automorphism_.domain(); }
  const Hom& automorphism() const { return automorphism_; }
  Hom inverse() const;
  // theta^m for any integer m
  Hom power(long m) const;

 private:
  Hom automorphism_;
};

struct ZGroupCohomology {
  Subgroup h0;  // invariants ker(theta - 1)
  Quotient h1;  // coinvariants coker(theta - 1)
};

ZGroupCohomology z_group_cohomology(const ZAction& action);

// A space presented as the mapping torus of a self-map of its universal cover
// with deck group Z. actions[k] acts on H^k(cover).
struct MappingTorusData {
  std::string space;
  GradedCohomology cover;
  std::vector<ZAction> actions;
  std::string circle_name = "l";
};

// H^n = H^0(Z; H^n(cover)) (+) H^1(Z; H^{n-1}(cover)), through cover.max_degree.
// Invariant generators keep their cover names; coinvariant ones get the circle
// name appended. Cup products by H^2 classes are carried where they descend.
GradedCohomology mapping_torus_cohomology(const MappingTorusData& data);

// Degrees where the invariant part has torsion, so the split form is a guess.
std::vector<int> mapping_torus_ambiguous_degrees(const MappingTorusData& data);

MappingTorusData r2_data();
MappingTorusData r32_data();
const GradedCohomology& r2_cohomology();
const GradedCohomology& r32_cohomology();

struct UniversalBundle {
  std::string name;
  CircleBundle bundle;
  TotalSpaceCohomology total;
};

struct UniversalBundleTables {
  UniversalBundle e32;      // euler a1
  UniversalBundle e32_hat;  // euler a2
};

// Gysin over the given table of R_{3,2} (names a1, a2 required in degree 2).
UniversalBundleTables universal_bundle_tables(const GradedCohomology& r32);
// Over the computed table of R_{3,2}.
const UniversalBundleTables& universal_bundle_tables();

// Linear map between named bases in one degree. Columns whose image is not
// fixed by the available data are left zero and marked undetermined.
struct DegreeAction {
  int degree = 0;
  std::vector<std::string> source;
  std::vector<std::string> target;
  IntMatrix matrix;
  std::vector<bool> determined;

  std::vector<std::string> undetermined() const;
};

struct T32Action {
  std::vector<DegreeAction> base;    // H*(R_{3,2}) -> H*(R_{3,2})
  std::vector<DegreeAction> bundle;  // H*(E_{3,2}) -> H*(E^_{3,2})
};

T32Action t32_cohomology_action();
// Composite of an endomorphism table with itself; a column is determined only
// when everything it touches is.
DegreeAction squared(const DegreeAction& a);

struct HomotopyTable {
  std::string space;
  std::vector<FgGroup> pi;  // pi[i - 1] = pi_i, i = 1..pi.size()
  IntMatrix pi1_action_on_pi2;
};

// Computed from the fibration sequences with vanishing boundary maps,
// through pi_max.
std::vector<HomotopyTable> homotopy_tables(int pi_max = 5);

// Orbit representative of element under the cyclic group generated by the
// action. Supports actions with (theta - 1)^2 = 0: the orbit is x + m v with
// v = (theta - 1) x, and the first nonzero coordinate of v fixes m.
GroupElement unbased_class_over_sphere(const ZAction& action, const GroupElement& element);

}  // namespace tdual
