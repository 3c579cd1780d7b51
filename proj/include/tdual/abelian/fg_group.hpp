#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdual/abelian/int_matrix.hpp"

namespace tdual {

// Z^r + Z/d1 + ... + Z/dk with every di >= 2 and d1 | d2 | ... | dk.
// Canonical generators: the r free ones first, then one per torsion factor.
class FgGroup {
 public:
  FgGroup() = default;
  FgGroup(std::size_t free_rank, std::vector<Int> torsion);

  static FgGroup free(std::size_t rank) { return FgGroup(rank, {}); }
  static FgGroup cyclic(const Int& n);
  // Accepts any list of cyclic orders (0 meaning Z) and normalizes it.
  static FgGroup normalized(std::size_t free_rank, const std::vector<Int>& factors);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
  // 0 for a free generator, otherwise its order.
  Int generator_order(std::size_t i) const;

  bool is_zero() const noexcept { return generator_count() == 0; }
  bool is_free() const noexcept { return torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  std::optional<Int> order() const;

  // Square diagonal matrix with the generator orders.
  IntMatrix relation_matrix() const;
  // Only the nonzero relation columns (one per torsion generator).
  IntMatrix torsion_relations() const;

  std::vector<Int> reduce(std::vector<Int> coords) const;
  std::string to_string() const;

  bool operator==(const FgGroup& o) const;
  bool operator!=(const FgGroup& o) const { return !(*this == o); }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FgGroup group, std::vector<Int> coords);

  static GroupElement zero(const FgGroup& g);
  static GroupElement generator(const FgGroup& g, std::size_t i);

  const FgGroup& group() const noexcept { return group_; }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement scaled(const Int& k) const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FgGroup group_;
  std::vector<Int> coords_;
};

// Homomorphism given by its matrix on canonical generators; column i is the
// image of generator i. Construction checks well-definedness.
class Hom {
 public:
  Hom() = default;
  Hom(FgGroup domain, FgGroup codomain, IntMatrix matrix);

  static Hom zero(const FgGroup& domain, const FgGroup& codomain);
  static Hom identity(const FgGroup& g);

  const FgGroup& domain() const noexcept { return domain_; }
  const FgGroup& codomain() const noexcept { return codomain_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  bool is_zero() const { return matrix_.is_zero(); }
  bool operator==(const Hom& o) const;

  Hom operator+(const Hom& o) const;
  Hom operator-(const Hom& o) const;
  Hom scaled(const Int& k) const;

 private:
  FgGroup domain_;
  FgGroup codomain_;
  IntMatrix matrix_;
};

// g after f.
Hom compose(const Hom& g, const Hom& f);

// Rows reduced modulo the orders of the codomain's torsion generators.
IntMatrix reduce_rows(const FgGroup& codomain, IntMatrix m);

}  // namespace tdual
