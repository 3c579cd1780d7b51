#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdual/abelian/cochain_complex.hpp"
#include "tdual/abelian/fg_group.hpp"

namespace tdual {

// Cellular cochains together with cochain-level multiplication by degree-2
// cochains. Only present for spaces built from an explicit cell structure;
// the Gysin engine uses it to resolve extension problems.
struct CochainModel {
  CochainComplex complex;
  // right_mult[j][k] : C^k -> C^{k+2}, product with basis cochain j of C^2
  std::vector<std::vector<IntMatrix>> right_mult;
  std::vector<IntMatrix> representatives;
  std::vector<IntMatrix> cocycle_to_class;

  IntMatrix multiplication_by(const std::vector<Int>& cochain2, int k) const;
};

struct GradedCohomology {
  std::string space;
  bool simply_connected = false;
  int max_degree = 0;
  std::vector<FgGroup> groups;
  std::vector<std::vector<std::string>> names;
  // cup2[k][i] : H^k -> H^{k+2}, cup with canonical generator i of H^2
  std::vector<std::vector<std::optional<Hom>>> cup2;
  std::optional<CochainModel> cochains;

  // Zero group below degree 0; throws DegreeOverflow above max_degree.
  const FgGroup& group(int k) const;
  const std::vector<std::string>& generator_names(int k) const;
  std::optional<std::size_t> generator_index(int k, std::string_view name) const;
  GroupElement element(int k, std::vector<Int> coords) const;

  Hom cup_by(const GroupElement& e, int k) const;
  bool has_cup_data(int k) const;
};

// Wraps a composite label in parentheses before a suffix is appended.
std::string suffixed(const std::string& name, std::string_view suffix);

}  // namespace tdual
