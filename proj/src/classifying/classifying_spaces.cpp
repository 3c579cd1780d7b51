#include "tdual/classifying/classifying_spaces.hpp"

#include <algorithm>

#include "tdual/errors.hpp"

namespace tdual {

ZAction::ZAction(Hom automorphism) : automorphism_(std::move(automorphism)) {
  if (automorphism_.domain() != automorphism_.codomain())
    throw ValidationError("a Z-action needs an endomorphism, got " + automorphism_.domain().to_string() + " -> " +
                          automorphism_.codomain().to_string());
  if (!is_isomorphism(automorphism_))
    throw ValidationError("action matrix " + automorphism_.matrix().to_string() + " is not invertible over Z");
}

ZAction ZAction::on_free(const IntMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw ValidationError("action matrix must be square");
  FgGroup g = FgGroup::free(matrix.rows());
  return ZAction(Hom(g, g, matrix));
}

Hom ZAction::inverse() const {
  const FgGroup& g = group();
  IntMatrix m(g.generator_count(), g.generator_count());
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    auto x = preimage(automorphism_, GroupElement::generator(g, i));
    m.set_column(i, x->coords());
  }
  return Hom(g, g, std::move(m));
}

Hom ZAction::power(long m) const {
  Hom base = m < 0 ? inverse() : automorphism_;
  unsigned long e = m < 0 ? static_cast<unsigned long>(-m) : static_cast<unsigned long>(m);
  Hom acc = Hom::identity(group());
  while (e) {
    if (e & 1) acc = compose(base, acc);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

ZGroupCohomology z_group_cohomology(const ZAction& action) {
  Hom d = action.automorphism() - Hom::identity(action.group());
  return ZGroupCohomology{kernel(d), cokernel(d)};
}

namespace {

std::string circle_suffixed(const std::string& name, const std::string& circle) {
  return name == "1" ? circle : suffixed(name, circle);
}

struct TorusDegree {
  ZGroupCohomology zc;
  DirectSum sum;
};

void check_data(const MappingTorusData& data) {
  const int top = data.cover.max_degree;
  if (static_cast<int>(data.actions.size()) < top + 1)
    throw ValidationError(data.space + ": missing action data above degree " +
                          std::to_string(static_cast<int>(data.actions.size()) - 1));
  for (int k = 0; k <= top; ++k)
    if (data.actions[static_cast<std::size_t>(k)].group() != data.cover.group(k))
      throw ValidationError(data.space + ": action in degree " + std::to_string(k) + " is on " +
                            data.actions[static_cast<std::size_t>(k)].group().to_string() + ", cover has " +
                            data.cover.group(k).to_string());
}

// Cup with an invariant class u on the two blocks; nullopt when the cover
// product does not descend.
std::optional<Hom> torus_cup(const MappingTorusData& data, const std::vector<TorusDegree>& deg, const GroupElement& u,
                             int k) {
  const GradedCohomology& cover = data.cover;
  if (!cover.has_cup_data(k) || (k >= 1 && !cover.has_cup_data(k - 1))) return std::nullopt;
  const TorusDegree& src = deg[static_cast<std::size_t>(k)];
  const TorusDegree& dst = deg[static_cast<std::size_t>(k + 2)];
  Hom total = Hom::zero(src.sum.group, dst.sum.group);

  // invariants -> invariants
  Hom up = compose(cover.cup_by(u, k), src.zc.h0.inclusion);
  IntMatrix m0(dst.zc.h0.group.generator_count(), src.zc.h0.group.generator_count());
  for (std::size_t j = 0; j < src.zc.h0.group.generator_count(); ++j) {
    auto pre = preimage(dst.zc.h0.inclusion, up(GroupElement::generator(src.zc.h0.group, j)));
    if (!pre) return std::nullopt;
    m0.set_column(j, pre->coords());
  }
  Hom first(src.zc.h0.group, dst.zc.h0.group, std::move(m0));
  total = total + compose(dst.sum.inject_first, compose(first, src.sum.project_first));

  // coinvariants of degree k-1 -> coinvariants of degree k+1
  if (k >= 1) {
    // deg[n] carries the coinvariants of H^{n-1}(cover)
    const TorusDegree& s1 = src;
    const TorusDegree& d1 = dst;
    Hom cup = cover.cup_by(u, k - 1);
    const ZAction& act = data.actions[static_cast<std::size_t>(k - 1)];
    Hom shift = act.automorphism() - Hom::identity(act.group());
    if (!compose(d1.zc.h1.projection, compose(cup, shift)).is_zero()) return std::nullopt;
    IntMatrix m1 = d1.zc.h1.projection.matrix() * cup.matrix() * s1.zc.h1.section;
    Hom second;
    try {
      second = Hom(s1.zc.h1.group, d1.zc.h1.group, std::move(m1));
    } catch (const IllDefinedHom&) {
      return std::nullopt;
    }
    total = total + compose(dst.sum.inject_second, compose(second, src.sum.project_second));
  }
  return total;
}

}  // namespace

GradedCohomology mapping_torus_cohomology(const MappingTorusData& data) {
  check_data(data);
  const GradedCohomology& cover = data.cover;
  const int top = cover.max_degree;
  std::vector<TorusDegree> deg;
  std::vector<ZGroupCohomology> zc;
  for (int k = 0; k <= top; ++k) zc.push_back(z_group_cohomology(data.actions[static_cast<std::size_t>(k)]));
  const FgGroup zero;
  GradedCohomology out;
  out.space = data.space;
  out.simply_connected = false;
  out.max_degree = top;
  for (int k = 0; k <= top; ++k) {
    const ZGroupCohomology& inv = zc[static_cast<std::size_t>(k)];
    ZGroupCohomology coinv = k >= 1 ? zc[static_cast<std::size_t>(k - 1)]
                                    : ZGroupCohomology{Subgroup{zero, Hom::zero(zero, zero)},
                                                       Quotient{zero, Hom::zero(zero, zero), IntMatrix(0, 0)}};
    DirectSum ds = direct_sum(inv.h0.group, coinv.h1.group);
    std::vector<std::string> pres;
    for (std::size_t i = 0; i < inv.h0.group.generator_count(); ++i)
      pres.push_back(combination_name(cover.generator_names(k), inv.h0.inclusion.matrix().column(i)));
    for (std::size_t i = 0; i < coinv.h1.group.generator_count(); ++i)
      pres.push_back(circle_suffixed(combination_name(cover.generator_names(k - 1), coinv.h1.section.column(i)),
                                     data.circle_name));
    IntMatrix section = IntMatrix::vstack(ds.project_first.matrix(), ds.project_second.matrix());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ds.group.generator_count(); ++i)
      names.push_back(combination_name(pres, section.column(i)));
    out.groups.push_back(ds.group);
    out.names.push_back(std::move(names));
    ZGroupCohomology part{inv.h0, coinv.h1};
    deg.push_back(TorusDegree{std::move(part), std::move(ds)});
  }
  if (top >= 2) {
    const TorusDegree& d2 = deg[2];
    for (int k = 0; k + 2 <= top; ++k) {
      std::vector<std::optional<Hom>> row;
      for (std::size_t i = 0; i < d2.sum.group.generator_count(); ++i) {
        GroupElement gi = GroupElement::generator(d2.sum.group, i);
        if (!d2.sum.project_second(gi).is_zero()) {
          row.emplace_back(std::nullopt);
          continue;
        }
        GroupElement u = d2.zc.h0.inclusion(d2.sum.project_first(gi));
        row.push_back(torus_cup(data, deg, u, k));
      }
      out.cup2.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<int> mapping_torus_ambiguous_degrees(const MappingTorusData& data) {
  check_data(data);
  std::vector<int> out;
  for (int k = 1; k <= data.cover.max_degree; ++k) {
    ZGroupCohomology inv = z_group_cohomology(data.actions[static_cast<std::size_t>(k)]);
    ZGroupCohomology prev = z_group_cohomology(data.actions[static_cast<std::size_t>(k - 1)]);
    if (!inv.h0.group.is_free() && !prev.h1.group.is_zero()) out.push_back(k);
  }
  return out;
}

namespace {

Hom free_hom(std::size_t from, std::size_t to, IntMatrix m) {
  return Hom(FgGroup::free(from), FgGroup::free(to), std::move(m));
}

void rename(GradedCohomology& g, const std::map<std::string, std::string>& aliases) {
  for (auto& row : g.names)
    for (auto& n : row)
      if (auto it = aliases.find(n); it != aliases.end()) n = it->second;
}

}  // namespace

// Universal cover K(Z^2, 2) of R_2: H^2 = Z b + Z w, H^4 = Sym^2.
MappingTorusData r2_data() {
  GradedCohomology cover;
  cover.space = "K(Z^2,2)";
  cover.simply_connected = true;
  cover.max_degree = 4;
  cover.groups = {FgGroup::free(1), FgGroup(), FgGroup::free(2), FgGroup(), FgGroup::free(3)};
  cover.names = {{"1"}, {}, {"b", "w"}, {}, {"b^2", "bw", "w^2"}};
  cover.cup2 = {
      {free_hom(1, 2, IntMatrix{{1}, {0}}), free_hom(1, 2, IntMatrix{{0}, {1}})},
      {free_hom(0, 0, IntMatrix(0, 0)), free_hom(0, 0, IntMatrix(0, 0))},
      {free_hom(2, 3, IntMatrix{{1, 0}, {0, 1}, {0, 0}}), free_hom(2, 3, IntMatrix{{0, 0}, {1, 0}, {0, 1}})},
  };
  // S(a, b) = (a + b, b) on pi_2, so w -> b + w; degree 4 is its symmetric square.
  std::vector<ZAction> actions = {
      ZAction::on_free(IntMatrix::identity(1)),
      ZAction::on_free(IntMatrix(0, 0)),
      ZAction::on_free(IntMatrix{{1, 1}, {0, 1}}),
      ZAction::on_free(IntMatrix(0, 0)),
      ZAction::on_free(IntMatrix{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}),
  };
  return MappingTorusData{"R2", std::move(cover), std::move(actions), "a"};
}

// Universal cover R_3 x K(Z, 2) of R_{3,2}, through degree 4.
MappingTorusData r32_data() {
  GradedCohomology cover;
  cover.space = "R3xK(Z,2)";
  cover.simply_connected = true;
  cover.max_degree = 4;
  cover.groups = {FgGroup::free(1), FgGroup(), FgGroup::free(3), FgGroup(), FgGroup::free(5)};
  cover.names = {{"1"}, {}, {"a1", "a2", "c"}, {}, {"a1^2", "a2^2", "a1c", "a2c", "c^2"}};
  cover.cup2 = {
      {free_hom(1, 3, IntMatrix{{1}, {0}, {0}}), free_hom(1, 3, IntMatrix{{0}, {1}, {0}}),
       free_hom(1, 3, IntMatrix{{0}, {0}, {1}})},
      {free_hom(0, 0, IntMatrix(0, 0)), free_hom(0, 0, IntMatrix(0, 0)), free_hom(0, 0, IntMatrix(0, 0))},
      {free_hom(3, 5, IntMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}}),
       free_hom(3, 5, IntMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
       free_hom(3, 5, IntMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
  };
  std::vector<ZAction> actions = {
      ZAction::on_free(IntMatrix::identity(1)),
      ZAction::on_free(IntMatrix(0, 0)),
      ZAction::on_free(IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
      ZAction::on_free(IntMatrix(0, 0)),
      // basis (a1^2, a2^2, a1c, a2c, c^2), as printed
      ZAction::on_free(IntMatrix{{1, 0, 2, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
  };
  return MappingTorusData{"R32", std::move(cover), std::move(actions), "l"};
}

const GradedCohomology& r2_cohomology() {
  static const GradedCohomology g = [] {
    GradedCohomology h = mapping_torus_cohomology(r2_data());
    rename(h, {{"wa", "c"}});
    return h;
  }();
  return g;
}

const GradedCohomology& r32_cohomology() {
  static const GradedCohomology g = [] {
    GradedCohomology h = mapping_torus_cohomology(r32_data());
    rename(h, {{"a2c", "x"}});
    return h;
  }();
  return g;
}

UniversalBundleTables universal_bundle_tables(const GradedCohomology& r32) {
  auto euler = [&](const char* name) {
    auto i = r32.generator_index(2, name);
    if (!i) throw UnknownSpace(r32.space + " has no degree-2 generator " + name);
    std::vector<Int> c(r32.group(2).generator_count(), 0);
    c[*i] = 1;
    return r32.element(2, c);
  };
  const int top = r32.max_degree - 1;
  CircleBundle e(r32, euler("a1"));
  CircleBundle eh(r32, euler("a2"));
  TotalSpaceCohomology te = total_space_cohomology(e, top);
  TotalSpaceCohomology teh = total_space_cohomology(eh, top);
  return UniversalBundleTables{UniversalBundle{"E32", std::move(e), std::move(te)},
                               UniversalBundle{"E32_hat", std::move(eh), std::move(teh)}};
}

const UniversalBundleTables& universal_bundle_tables() {
  static const UniversalBundleTables t = universal_bundle_tables(r32_cohomology());
  return t;
}

std::vector<std::string> DegreeAction::undetermined() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!determined[i]) out.push_back(source[i]);
  return out;
}

namespace {

// images: source name -> target expression; sources not listed stay undetermined
DegreeAction degree_action(int k, const std::vector<std::string>& source, const std::vector<std::string>& target,
                           const std::map<std::string, std::string>& images) {
  DegreeAction a{k, source, target, IntMatrix(target.size(), source.size()), std::vector<bool>(source.size(), false)};
  for (std::size_t j = 0; j < source.size(); ++j) {
    auto it = images.find(source[j]);
    if (it == images.end()) continue;
    a.matrix.set_column(j, parse_combination(target, it->second));
    a.determined[j] = true;
  }
  return a;
}

}  // namespace

T32Action t32_cohomology_action() {
  const GradedCohomology& r = r32_cohomology();
  T32Action t;
  // T^* is a ring map fixing 1; on generators l -> 0, a1 <-> a2, a2 l -> 0.
  const std::map<std::string, std::string> base = {{"1", "1"},       {"l", "0"},          {"a1", "a2"},
                                                   {"a2", "a1"},     {"a2l", "0"},        {"a1^2", "a2^2"},
                                                   {"a2^2", "a1^2"}};
  for (int k = 0; k <= r.max_degree; ++k)
    t.base.push_back(degree_action(k, r.generator_names(k), r.generator_names(k), base));
  // On the universal bundles: y -> 0, p*(a2) -> p^*(a1), p*(a2 l) -> 0, h -> h^.
  const UniversalBundleTables& u = universal_bundle_tables();
  const std::map<std::string, std::string> bundle = {
      {"1", "1"}, {"lx1", "0"}, {"a2x1", "a1x1"}, {"a2lx1", "0"}, {"a2xz", "a1xz"}};
  for (int k = 0; k <= u.e32.total.max_degree(); ++k)
    t.bundle.push_back(degree_action(k, u.e32.total.names(k), u.e32_hat.total.names(k), bundle));
  return t;
}

DegreeAction squared(const DegreeAction& a) {
  if (a.source != a.target) throw MismatchedGroups("only an endomorphism table can be squared");
  DegreeAction s{a.degree, a.source, a.target, a.matrix * a.matrix, std::vector<bool>(a.source.size(), false)};
  for (std::size_t j = 0; j < a.source.size(); ++j) {
    if (!a.determined[j]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < a.source.size(); ++i)
      if (a.matrix(i, j) != 0 && !a.determined[i]) ok = false;
    s.determined[j] = ok;
  }
  return s;
}

namespace {

// pi_* of a product of Eilenberg-MacLane spaces K(Z, n) for the listed n.
std::vector<FgGroup> em_product(const std::vector<int>& degrees, int pi_max) {
  std::vector<FgGroup> out;
  for (int i = 1; i <= pi_max; ++i)
    out.push_back(FgGroup::free(static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), i))));
  return out;
}

// F -> E -> B with all boundary maps zero; every group is free, so each
// short exact piece splits.
std::vector<FgGroup> total_of_fibration(const std::vector<FgGroup>& fiber, const std::vector<FgGroup>& base) {
  std::vector<FgGroup> out;
  for (std::size_t i = 0; i < fiber.size(); ++i) out.push_back(direct_sum(fiber[i], base[i]).group);
  return out;
}

}  // namespace

std::vector<HomotopyTable> homotopy_tables(int pi_max) {
  if (pi_max < 3) throw ValidationError("homotopy tables need at least pi_3");
  // K(Z,2) -> R_2 -> K(Z,2) x K(Z,1)
  std::vector<FgGroup> r2 = total_of_fibration(em_product({2}, pi_max), em_product({2, 1}, pi_max));
  // K(Z,3) x K(Z,2) -> R_{3,2} -> R_2
  std::vector<FgGroup> r32 = total_of_fibration(em_product({3, 2}, pi_max), r2);
  return {HomotopyTable{"R2", r2, IntMatrix{{1, 1}, {0, 1}}},
          HomotopyTable{"R32", r32, IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}};
}

GroupElement unbased_class_over_sphere(const ZAction& action, const GroupElement& element) {
  if (element.group() != action.group()) throw MismatchedGroups("element is not in the acted-on group");
  Hom shift = action.automorphism() - Hom::identity(action.group());
  if (!compose(shift, shift).is_zero())
    throw ValidationError("orbit representatives need (theta - 1)^2 = 0, got theta = " +
                          action.automorphism().matrix().to_string());
  if (!action.group().is_free()) throw ValidationError("orbit representatives are implemented on free groups");
  GroupElement v = shift(element);
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    const Int& vi = v.coords()[i];
    if (vi == 0) continue;
    const Int& xi = element.coords()[i];
    Int r = mod_floor(xi, Int(abs(vi)));
    Int m = (r - xi) / vi;
    return element + v.scaled(m);
  }
  return element;
}

}  // namespace tdual
