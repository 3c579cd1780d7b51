#include "tdual/catalog/graded_cohomology.hpp"

#include "tdual/errors.hpp"

namespace tdual {

IntMatrix CochainModel::multiplication_by(const std::vector<Int>& cochain2, int k) const {
  IntMatrix m(complex.dim(k + 2), complex.dim(k));
  if (k < 0) return m;
  for (std::size_t j = 0; j < cochain2.size(); ++j) {
    if (cochain2[j] == 0) continue;
    const auto& per_degree = right_mult.at(j);
    if (static_cast<std::size_t>(k) >= per_degree.size())
      throw DegreeOverflow("no cochain product data in degree " + std::to_string(k));
    m = m + per_degree[static_cast<std::size_t>(k)].scaled(cochain2[j]);
  }
  return m;
}

const FgGroup& GradedCohomology::group(int k) const {
  static const FgGroup zero;
  if (k < 0) return zero;
  if (k > max_degree)
    throw DegreeOverflow(space + ": degree " + std::to_string(k) + " above computed range " +
                         std::to_string(max_degree));
  return groups[static_cast<std::size_t>(k)];
}

const std::vector<std::string>& GradedCohomology::generator_names(int k) const {
  static const std::vector<std::string> none;
  if (k < 0) return none;
  group(k);
  return names[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> GradedCohomology::generator_index(int k, std::string_view name) const {
  const auto& n = generator_names(k);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return i;
  return std::nullopt;
}

GroupElement GradedCohomology::element(int k, std::vector<Int> coords) const {
  return GroupElement(group(k), std::move(coords));
}

bool GradedCohomology::has_cup_data(int k) const {
  if (k < 0) return k + 2 <= max_degree;
  if (k + 2 > max_degree || static_cast<std::size_t>(k) >= cup2.size()) return false;
  for (const auto& h : cup2[static_cast<std::size_t>(k)])
    if (!h) return false;
  return true;
}

Hom GradedCohomology::cup_by(const GroupElement& e, int k) const {
  if (e.group() != group(2)) throw MismatchedGroups(space + ": cup class is not in H^2");
  const FgGroup& target = group(k + 2);
  const FgGroup& source = group(k);
  Hom out = Hom::zero(source, target);
  if (k < 0) return out;
  for (std::size_t i = 0; i < e.coords().size(); ++i) {
    if (e.coords()[i] == 0) continue;
    const auto& row = static_cast<std::size_t>(k) < cup2.size() ? cup2[static_cast<std::size_t>(k)]
                                                               : std::vector<std::optional<Hom>>{};
    if (i >= row.size() || !row[i])
      throw MissingCupData(space + ": no cup product with " + names[2][i] + " on H^" + std::to_string(k));
    out = out + row[i]->scaled(e.coords()[i]);
  }
  return out;
}

std::string suffixed(const std::string& name, std::string_view suffix) {
  bool composite = name.find_first_of("+-*") != std::string::npos;
  std::string base = composite ? "(" + name + ")" : name;
  return base + std::string(suffix);
}

}  // namespace tdual
