#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdual/gysin/gysin.hpp"

namespace tdual {

inline constexpr const char* kFlagConjecture = "CONJECTURE";
inline constexpr const char* kFlagAmbiguousExtension = "AMBIGUOUS-EXTENSION";
inline constexpr const char* kFlagBNotLiftable = "B-NOT-LIFTABLE";
inline constexpr const char* kFlagNoNaturalIso = "NO-NATURAL-ISO";

struct Triple {
  CircleBundle bundle;
  TotalSpaceCohomology total;
  GroupElement b;     // in H^2(E)
  GroupElement flux;  // in H^3(E)
};

// Total space through degree max_degree (at least 3).
Triple make_triple(CircleBundle bundle, int max_degree, std::vector<Int> b, std::vector<Int> flux);

struct CosetPartition {
  GroupElement generator;
  Quotient quotient;
  // Filled when the quotient is finite and small enough to list.
  std::optional<std::vector<GroupElement>> representatives;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 4096;

CosetPartition coset_partition(const TotalSpaceCohomology& tsc, const GroupElement& gen, int degree = 2,
                               std::size_t enumeration_limit = kDefaultEnumerationLimit);

struct DualFlux {
  GroupElement flux;
  Subgroup ambiguity;  // image of the dual pullback in H^3(E#)
};

GroupElement dual_euler(const Triple& t);
DualFlux dual_flux(const Triple& t, const TotalSpaceCohomology& dual_total);

struct DualityReport {
  Triple dual;
  Subgroup flux_ambiguity;
  GroupElement b_base;  // beta in H^2(W) with p*(beta) = b
  CosetPartition source_cosets;
  CosetPartition target_cosets;
  std::optional<Hom> coset_iso;
  std::vector<std::string> flags;
  std::vector<std::string> notes;
};

DualityReport dualize(const Triple& t);

bool verify_coset_isomorphism(const Triple& source, const DualityReport& report);

}  // namespace tdual
