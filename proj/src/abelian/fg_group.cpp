#include "tdual/abelian/fg_group.hpp"

#include <sstream>

#include "tdual/abelian/normal_forms.hpp"
#include "tdual/errors.hpp"

namespace tdual {

FgGroup::FgGroup(std::size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw ValidationError("torsion factor below 2: " + torsion_[i].get_str());
    if (i > 0 && !divides(torsion_[i - 1], torsion_[i]))
      throw ValidationError("torsion factors do not form a divisibility chain");
  }
}

FgGroup FgGroup::cyclic(const Int& n) {
  if (n == 0) return free(1);
  Int m = abs(n);
  if (m == 1) return FgGroup();
  return FgGroup(0, {m});
}

FgGroup FgGroup::normalized(std::size_t free_rank, const std::vector<Int>& factors) {
  IntMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
  SmithForm s = smith_normal_form(diag);
  std::size_t rank = free_rank;
  std::vector<Int> tors;
  for (const Int& d : s.diagonal()) {
    if (d == 0)
      ++rank;
    else if (d != 1)
      tors.push_back(d);
  }
  return FgGroup(rank, std::move(tors));
}

Int FgGroup::generator_order(std::size_t i) const {
  if (i < free_rank_) return 0;
  return torsion_.at(i - free_rank_);
}

std::optional<Int> FgGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

IntMatrix FgGroup::relation_matrix() const {
  const std::size_t n = generator_count();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < torsion_.size(); ++i) m(free_rank_ + i, free_rank_ + i) = torsion_[i];
  return m;
}

IntMatrix FgGroup::torsion_relations() const {
  IntMatrix m(generator_count(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m(free_rank_ + i, i) = torsion_[i];
  return m;
}

std::vector<Int> FgGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != generator_count())
    throw MismatchedGroups("coordinate vector has length " + std::to_string(coords.size()) +
                           ", group " + to_string() + " has " +
                           std::to_string(generator_count()) + " generators");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int& c = coords[free_rank_ + i];
    c = mod_floor(c, torsion_[i]);
  }
  return coords;
}

std::string FgGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

bool FgGroup::operator==(const FgGroup& o) const {
  if (free_rank_ != o.free_rank_ || torsion_.size() != o.torsion_.size()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (torsion_[i] != o.torsion_[i]) return false;
  return true;
}

GroupElement::GroupElement(FgGroup group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(group_.reduce(std::move(coords))) {}

GroupElement GroupElement::zero(const FgGroup& g) {
  return GroupElement(g, std::vector<Int>(g.generator_count(), Int(0)));
}

GroupElement GroupElement::generator(const FgGroup& g, std::size_t i) {
  std::vector<Int> c(g.generator_count(), Int(0));
  c.at(i) = 1;
  return GroupElement(g, std::move(c));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  if (group_ != o.group_) throw MismatchedGroups("adding elements of different groups");
  std::vector<Int> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(const Int& k) const {
  std::vector<Int> c = coords_;
  for (auto& x : c) x *= k;
  return GroupElement(group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement& o) const {
  return group_ == o.group_ && coords_ == o.coords_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

IntMatrix reduce_rows(const FgGroup& codomain, IntMatrix m) {
  const std::size_t r = codomain.free_rank();
  for (std::size_t i = 0; i < codomain.torsion().size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r + i, c) = mod_floor(m(r + i, c), codomain.torsion()[i]);
  return m;
}

Hom::Hom(FgGroup domain, FgGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (matrix.rows() != codomain_.generator_count() || matrix.cols() != domain_.generator_count())
    throw MismatchedGroups("matrix shape " + std::to_string(matrix.rows()) + "x" +
                           std::to_string(matrix.cols()) + " does not fit " + domain_.to_string() +
                           " -> " + codomain_.to_string());
  matrix_ = reduce_rows(codomain_, std::move(matrix));
  for (std::size_t j = domain_.free_rank(); j < domain_.generator_count(); ++j) {
    const Int& d = domain_.generator_order(j);
    for (std::size_t i = 0; i < codomain_.generator_count(); ++i) {
      Int v = d * matrix_(i, j);
      const Int& t = codomain_.generator_order(i);
      if (t == 0 ? v != 0 : !divides(t, v))
        throw IllDefinedHom("generator " + std::to_string(j) + " of order " + d.get_str() +
                            " cannot map to coordinate " + std::to_string(i) + " value " +
                            matrix_(i, j).get_str());
    }
  }
}

Hom Hom::zero(const FgGroup& domain, const FgGroup& codomain) {
  return Hom(domain, codomain, IntMatrix(codomain.generator_count(), domain.generator_count()));
}

Hom Hom::identity(const FgGroup& g) {
  return Hom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupElement Hom::operator()(const GroupElement& x) const {
  if (x.group() != domain_)
    throw MismatchedGroups("element of " + x.group().to_string() + " applied to map from " +
                           domain_.to_string());
  return GroupElement(codomain_, matrix_.apply(x.coords()));
}

bool Hom::operator==(const Hom& o) const {
  return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
}

Hom Hom::operator+(const Hom& o) const {
  if (domain_ != o.domain_ || codomain_ != o.codomain_) throw MismatchedGroups("adding maps with different ends");
  return Hom(domain_, codomain_, matrix_ + o.matrix_);
}

Hom Hom::operator-(const Hom& o) const {
  if (domain_ != o.domain_ || codomain_ != o.codomain_) throw MismatchedGroups("subtracting maps with different ends");
  return Hom(domain_, codomain_, matrix_ - o.matrix_);
}

Hom Hom::scaled(const Int& k) const { return Hom(domain_, codomain_, matrix_.scaled(k)); }

Hom compose(const Hom& g, const Hom& f) {
  if (f.codomain() != g.domain())
    throw MismatchedGroups("cannot compose " + f.domain().to_string() + " -> " + f.codomain().to_string() +
                           " with a map from " + g.domain().to_string());
  return Hom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

}  // namespace tdual
