#include "tdual/catalog/space_catalog.hpp"

#include <charconv>

#include "tdual/abelian/group_ops.hpp"
#include "tdual/errors.hpp"

namespace tdual {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw UnknownSpace("unknown space '" + std::string(whole) + "'");
  return v;
}

void check_range(bool ok, std::string_view what) {
  if (!ok) throw UnknownSpace(std::string(what) + " parameter out of range");
}

// Cells and products of a space with one cell per listed degree pattern.
struct CellData {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> names;
  std::vector<IntMatrix> d;
  // product with the single degree-2 cell, per degree; empty when C^2 = 0
  std::vector<IntMatrix> mult;
};

CellData cells_for(const CatalogSpace& s, int top) {
  CellData c;
  const int len = top + 1;
  c.dims.assign(static_cast<std::size_t>(len), 0);
  c.names.assign(static_cast<std::size_t>(len), {});
  auto set_cell = [&](int k, std::vector<std::string> names) {
    if (k > top) return;
    c.dims[static_cast<std::size_t>(k)] = names.size();
    c.names[static_cast<std::size_t>(k)] = std::move(names);
  };
  auto power = [](const std::string& g, int j) { return j == 1 ? g : g + "^" + std::to_string(j); };
  switch (s.kind) {
    case SpaceKind::Point:
      set_cell(0, {"1"});
      break;
    case SpaceKind::Sphere:
      set_cell(0, {"1"});
      set_cell(s.n, {"vol"});
      break;
    case SpaceKind::Torus:
    case SpaceKind::Surface: {
      int g = s.kind == SpaceKind::Torus ? 1 : s.n;
      std::vector<std::string> one;
      if (g == 1) {
        one = {"a", "b"};
      } else {
        for (int i = 1; i <= g; ++i) one.push_back("a" + std::to_string(i));
        for (int i = 1; i <= g; ++i) one.push_back("b" + std::to_string(i));
      }
      set_cell(0, {"1"});
      set_cell(1, one);
      set_cell(2, {"vol"});
      break;
    }
    case SpaceKind::RealProjective:
      for (int k = 0; k <= s.n; ++k) {
        if (k == 0)
          set_cell(k, {"1"});
        else if (k % 2 == 0)
          set_cell(k, {power("alpha", k / 2)});
        else
          set_cell(k, {k == s.n ? "vol" : "e" + std::to_string(k)});
      }
      break;
    case SpaceKind::ComplexProjective:
    case SpaceKind::KZ2Truncation:
      for (int j = 0; j <= s.n; ++j) set_cell(2 * j, {j == 0 ? "1" : power("alpha", j)});
      break;
  }
  for (int k = 0; k < top; ++k) {
    IntMatrix dk(c.dims[static_cast<std::size_t>(k + 1)], c.dims[static_cast<std::size_t>(k)]);
    // RP^n: d = 2 from odd to even degrees
    if (s.kind == SpaceKind::RealProjective && k % 2 == 1 && dk.rows() == 1 && dk.cols() == 1) dk(0, 0) = 2;
    c.d.push_back(std::move(dk));
  }
  if (top >= 2 && c.dims[2] == 1) {
    for (int k = 0; k + 2 <= top; ++k) {
      IntMatrix m(c.dims[static_cast<std::size_t>(k + 2)], c.dims[static_cast<std::size_t>(k)]);
      bool cellular_shift = s.kind == SpaceKind::RealProjective || s.kind == SpaceKind::ComplexProjective ||
                            s.kind == SpaceKind::KZ2Truncation || k == 0;
      if (cellular_shift && m.rows() == 1 && m.cols() == 1) m(0, 0) = 1;
      c.mult.push_back(std::move(m));
    }
  }
  return c;
}

}  // namespace

CatalogSpace CatalogSpace::parse(std::string_view name) {
  CatalogSpace s;
  auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
  if (name == "point" || name == "pt") {
    s.kind = SpaceKind::Point;
  } else if (name == "T2") {
    s.kind = SpaceKind::Torus;
    s.n = 1;
  } else if (starts("Sigma")) {
    s.kind = SpaceKind::Surface;
    s.n = parse_int(name.substr(5), name);
    check_range(s.n >= 1 && s.n <= 8, "genus");
  } else if (starts("RP")) {
    s.kind = SpaceKind::RealProjective;
    s.n = parse_int(name.substr(2), name);
    check_range(s.n >= 1 && s.n <= 8, "RP dimension");
  } else if (starts("CP")) {
    s.kind = SpaceKind::ComplexProjective;
    s.n = parse_int(name.substr(2), name);
    check_range(s.n >= 1 && s.n <= 4, "CP dimension");
  } else if (starts("KZ2")) {
    s.kind = SpaceKind::KZ2Truncation;
    s.n = name.size() == 3 ? 4 : parse_int(name.substr(name[3] == '_' ? 4 : 3), name);
    check_range(s.n >= 1 && s.n <= 4, "K(Z,2) truncation");
  } else if (starts("S")) {
    s.kind = SpaceKind::Sphere;
    s.n = parse_int(name.substr(1), name);
    check_range(s.n >= 1 && s.n <= 8, "sphere dimension");
  } else {
    throw UnknownSpace("unknown space '" + std::string(name) + "'");
  }
  if (s.kind == SpaceKind::Surface && s.n == 1) s.kind = SpaceKind::Torus;
  return s;
}

std::string CatalogSpace::name() const {
  switch (kind) {
    case SpaceKind::Point: return "point";
    case SpaceKind::Sphere: return "S" + std::to_string(n);
    case SpaceKind::Torus: return "T2";
    case SpaceKind::Surface: return "Sigma" + std::to_string(n);
    case SpaceKind::RealProjective: return "RP" + std::to_string(n);
    case SpaceKind::ComplexProjective: return "CP" + std::to_string(n);
    case SpaceKind::KZ2Truncation: return "KZ2_" + std::to_string(n);
  }
  return "?";
}

int CatalogSpace::dimension() const {
  switch (kind) {
    case SpaceKind::Point: return 0;
    case SpaceKind::Sphere: return n;
    case SpaceKind::Torus:
    case SpaceKind::Surface: return 2;
    case SpaceKind::RealProjective: return n;
    case SpaceKind::ComplexProjective:
    case SpaceKind::KZ2Truncation: return 2 * n;
  }
  return 0;
}

bool CatalogSpace::simply_connected() const {
  switch (kind) {
    case SpaceKind::Point:
    case SpaceKind::ComplexProjective:
    case SpaceKind::KZ2Truncation: return true;
    case SpaceKind::Sphere: return n >= 2;
    case SpaceKind::Torus:
    case SpaceKind::Surface:
    case SpaceKind::RealProjective: return false;
  }
  return false;
}

int default_max_degree(const CatalogSpace& space) {
  return std::min(space.dimension() + 2, kCatalogMaxDegree);
}

GradedCohomology cohomology_from_cochains(std::string space, bool simply_connected, int max_degree,
                                          CochainModel model,
                                          const std::vector<std::vector<std::string>>& cell_names) {
  GradedCohomology g;
  g.space = std::move(space);
  g.simply_connected = simply_connected;
  g.max_degree = max_degree;
  model.representatives.clear();
  model.cocycle_to_class.clear();
  for (int k = 0; k <= max_degree; ++k) {
    CohomologyDegree c = cohomology_at(model.complex, k);
    std::vector<std::string> names;
    const auto& cells = cell_names[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < c.group.generator_count(); ++i)
      names.push_back(combination_name(cells, c.representatives.column(i)));
    g.groups.push_back(c.group);
    g.names.push_back(std::move(names));
    model.representatives.push_back(std::move(c.representatives));
    model.cocycle_to_class.push_back(std::move(c.cocycle_to_class));
  }
  for (int k = 0; k + 2 <= max_degree; ++k) {
    std::vector<std::optional<Hom>> row;
    const IntMatrix& reps2 = model.representatives[2];
    for (std::size_t i = 0; i < g.groups[2].generator_count(); ++i) {
      IntMatrix m = model.multiplication_by(reps2.column(i), k);
      IntMatrix on_classes = model.cocycle_to_class[static_cast<std::size_t>(k + 2)] * m *
                             model.representatives[static_cast<std::size_t>(k)];
      row.emplace_back(Hom(g.groups[static_cast<std::size_t>(k)], g.groups[static_cast<std::size_t>(k + 2)],
                           std::move(on_classes)));
    }
    g.cup2.push_back(std::move(row));
  }
  g.cochains = std::move(model);
  return g;
}

GradedCohomology cohomology_of(const CatalogSpace& space, int max_degree) {
  if (max_degree < 0 || max_degree > kCatalogMaxDegree)
    throw DegreeOverflow("max degree " + std::to_string(max_degree) + " outside [0, " +
                         std::to_string(kCatalogMaxDegree) + "]");
  const int top = max_degree + 2;
  CellData cells = cells_for(space, top);
  CochainModel model;
  model.complex.dims = cells.dims;
  model.complex.differentials = cells.d;
  if (!cells.mult.empty()) model.right_mult.push_back(cells.mult);
  return cohomology_from_cochains(space.name(), space.simply_connected(), max_degree, std::move(model),
                                  cells.names);
}

GradedCohomology cohomology_of(const CatalogSpace& space) {
  return cohomology_of(space, default_max_degree(space));
}

GradedCohomology kunneth_with_circle(const GradedCohomology& w) {
  GradedCohomology out;
  out.space = w.space + "xS1";
  out.simply_connected = false;
  out.max_degree = w.max_degree;
  std::vector<DirectSum> sums;
  for (int k = 0; k <= w.max_degree; ++k) {
    DirectSum ds = direct_sum(w.group(k), w.group(k - 1));
    std::vector<std::string> pres;
    for (const auto& n : w.generator_names(k)) pres.push_back(suffixed(n, "x1"));
    for (const auto& n : w.generator_names(k - 1)) pres.push_back(suffixed(n, "xz"));
    std::vector<std::string> names;
    IntMatrix section = IntMatrix::vstack(ds.project_first.matrix(), ds.project_second.matrix());
    for (std::size_t i = 0; i < ds.group.generator_count(); ++i)
      names.push_back(combination_name(pres, section.column(i)));
    out.groups.push_back(ds.group);
    out.names.push_back(std::move(names));
    sums.push_back(std::move(ds));
  }
  if (w.max_degree >= 2) {
    const DirectSum& ds2 = sums[2];
    for (int k = 0; k + 2 <= w.max_degree; ++k) {
      std::vector<std::optional<Hom>> row;
      for (std::size_t i = 0; i < ds2.group.generator_count(); ++i) {
        GroupElement gi = GroupElement::generator(ds2.group, i);
        if (!ds2.project_second(gi).is_zero()) {
          row.emplace_back(std::nullopt);
          continue;
        }
        GroupElement c = ds2.project_first(gi);
        if (!w.has_cup_data(k) || !w.has_cup_data(k - 1)) {
          row.emplace_back(std::nullopt);
          continue;
        }
        const DirectSum& src = sums[static_cast<std::size_t>(k)];
        const DirectSum& dst = sums[static_cast<std::size_t>(k + 2)];
        Hom first = compose(dst.inject_first, compose(w.cup_by(c, k), src.project_first));
        Hom second = compose(dst.inject_second, compose(w.cup_by(c, k - 1), src.project_second));
        row.emplace_back(first + second);
      }
      out.cup2.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace tdual
