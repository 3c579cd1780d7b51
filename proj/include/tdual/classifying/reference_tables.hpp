#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdual/catalog/graded_cohomology.hpp"
#include "tdual/classifying/classifying_spaces.hpp"

namespace tdual {

struct ReferenceTable {
  std::vector<FgGroup> groups;
  std::vector<std::vector<std::string>> names;
  // cup[h2 generator][source generator] = target expression
  std::map<std::string, std::map<std::string, std::string>> cup;
  // pushforward[total generator] = base expression
  std::map<std::string, std::string> pushforward;
  // reference name -> engine name
  std::map<std::string, std::string> aliases;
};

struct ReferenceTables {
  std::map<std::string, ReferenceTable> cohomology;
  std::map<std::string, std::vector<FgGroup>> homotopy;
  std::map<std::string, IntMatrix> pi1_actions;
};

ReferenceTables load_reference_tables(const std::string& path);
// Path compiled in from the source tree; overridable with TDUAL_REFERENCE_TABLES.
std::string default_reference_tables_path();
const ReferenceTables& reference_tables();

// The table as a GradedCohomology with the listed cup products (absent
// products are zero); used to run the engine on recorded tables.
GradedCohomology graded_from_reference(const std::string& space, const ReferenceTable& t);

// Differences between an engine table and a reference, one line each; empty
// when groups, names (through aliases) and listed pushforwards all agree.
std::vector<std::string> compare_with_reference(const GradedCohomology& computed, const ReferenceTable& ref);
std::vector<std::string> compare_with_reference(const UniversalBundle& computed, const ReferenceTable& ref);

// Universal bundle tables over the computed R_{3,2}, with the mismatches
// against the reference tables.
struct UniversalBundleCheck {
  std::vector<std::string> e32;
  std::vector<std::string> e32_hat;
  bool ok() const { return e32.empty() && e32_hat.empty(); }
};
UniversalBundleCheck check_universal_bundles(const UniversalBundleTables& tables, const ReferenceTables& refs);
// Throws SelfTestMismatch listing every difference.
const UniversalBundleTables& universal_bundle_tables_checked();

}  // namespace tdual
