#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdual/abelian/fg_group.hpp"

namespace tdual {

// A quotient with its projection and a set-theoretic section: column i of
// section lifts canonical generator i back to the ambient coordinates.
struct Quotient {
  FgGroup group;
  Hom projection;
  IntMatrix section;
};

// A subgroup carried by an injective map into the ambient group.
struct Subgroup {
  FgGroup group;
  Hom inclusion;
};

struct DirectSum {
  FgGroup group;
  Hom inject_first;
  Hom inject_second;
  Hom project_first;
  Hom project_second;
};

// Z^n modulo the span of the columns of relations.
Quotient present(const IntMatrix& relations);

Quotient cokernel(const Hom& h);
Subgroup kernel(const Hom& h);
Subgroup image(const Hom& h);
// Quotient of the ambient group by the subgroup generated by gens.
Quotient quotient_by(const FgGroup& ambient, const std::vector<GroupElement>& gens);

bool is_exact_at(const Hom& f, const Hom& g);
bool is_isomorphism(const Hom& h);
bool contains(const Subgroup& s, const GroupElement& x);
bool same_subgroup(const Subgroup& a, const Subgroup& b);

// nullopt means infinite order.
std::optional<Int> element_order(const GroupElement& x);

// Some x with h(x) = y, if one exists.
std::optional<GroupElement> preimage(const Hom& h, const GroupElement& y);

DirectSum direct_sum(const FgGroup& a, const FgGroup& b);

// Human-readable linear combination such as "a+2*b" or "(a+b)" style names.
std::string combination_name(const std::vector<std::string>& names, const std::vector<Int>& coeffs);
// Inverse of combination_name: "a+2*b", "-a", "3*volxz", "0". Repeated names
// accumulate; unknown names throw ValidationError.
std::vector<Int> parse_combination(const std::vector<std::string>& names, std::string_view text);

}  // namespace tdual
