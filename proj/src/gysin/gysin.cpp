#include "tdual/gysin/gysin.hpp"

#include "tdual/abelian/normal_forms.hpp"
#include "tdual/errors.hpp"

namespace tdual {

CircleBundle::CircleBundle(GradedCohomology b, GroupElement e) : base(std::move(b)), euler(std::move(e)) {
  if (euler.group() != base.group(2))
    throw MismatchedGroups("Euler class " + euler.to_string() + " is not in H^2(" + base.space + ") = " +
                           base.group(2).to_string());
}

const GysinDegree& TotalSpaceCohomology::degree(int k) const {
  if (k < 0 || k > max_degree())
    throw DegreeOverflow("total space degree " + std::to_string(k) + " outside [0, " +
                         std::to_string(max_degree()) + "]");
  return degrees_[static_cast<std::size_t>(k)];
}

std::vector<FgGroup> TotalSpaceCohomology::groups() const {
  std::vector<FgGroup> out;
  for (const auto& d : degrees_) out.push_back(d.group);
  return out;
}

std::vector<int> TotalSpaceCohomology::ambiguous_degrees() const {
  std::vector<int> out;
  for (int k = 0; k <= max_degree(); ++k)
    if (degrees_[static_cast<std::size_t>(k)].ambiguous) out.push_back(k);
  return out;
}

GroupElement TotalSpaceCohomology::lift_from_kernel(int k, const GroupElement& kernel_element) const {
  const GysinDegree& d = degree(k);
  if (kernel_element.group() != d.fiber_kernel.group)
    throw MismatchedGroups("kernel element outside the Gysin kernel term");
  const std::size_t nc = d.base_cokernel.group.generator_count();
  std::vector<Int> pres(nc, Int(0));
  pres.insert(pres.end(), kernel_element.coords().begin(), kernel_element.coords().end());
  return GroupElement(d.group, d.from_presentation.apply(pres));
}

namespace {

// Ext(K, C) vanishes iff C/dC = 0 for every torsion factor d of K.
bool ext_nonzero(const FgGroup& k, const FgGroup& c) {
  if (k.torsion().empty()) return false;
  if (c.free_rank() > 0) return true;
  for (const auto& d : k.torsion())
    for (const auto& t : c.torsion())
      if (gcd(d, t) != 1) return true;
  return false;
}

std::vector<Int> column_of(const IntMatrix& m, std::size_t c) { return m.column(c); }

IntMatrix solve_or_throw(const IntMatrix& a, const std::vector<Int>& b, const char* what) {
  auto x = solve(a, IntMatrix::from_column(b));
  if (!x) throw MembershipFailure(what);
  return *x;
}

// Extension values from the twisted cochain complex C(W) + C(W)z, dz = e.
// For a kernel generator of order d with cocycle y: pick x with dx = -e*y and
// w with dw = d*y; then d*(x, y) is cohomologous to p*(d*x + e*w).
std::vector<std::vector<Int>> cochain_extensions(const GradedCohomology& base, const GroupElement& euler,
                                                 int k, const Quotient& coker, const Subgroup& kern) {
  const CochainModel& cm = *base.cochains;
  const CochainComplex& cx = cm.complex;
  std::vector<Int> e2 = cm.representatives[2].apply(euler.coords());
  std::vector<std::vector<Int>> out;
  const FgGroup& kg = kern.group;
  for (std::size_t t = 0; t < kg.torsion().size(); ++t) {
    const Int& d = kg.torsion()[t];
    std::size_t gi = kg.free_rank() + t;
    std::vector<Int> cls = kern.inclusion.matrix().column(gi);
    std::vector<Int> y = cm.representatives[static_cast<std::size_t>(k - 1)].apply(cls);
    std::vector<Int> ey = cm.multiplication_by(e2, k - 1).apply(y);
    for (auto& v : ey) v = -v;
    IntMatrix x = solve_or_throw(cx.d(k), ey, "Gysin extension: e*y is not a coboundary");
    std::vector<Int> dy = y;
    for (auto& v : dy) v *= d;
    std::vector<Int> w(cx.dim(k - 2), Int(0));
    if (cx.dim(k - 2) > 0) {
      w = column_of(solve_or_throw(cx.d(k - 2), dy, "Gysin extension: d*y is not a coboundary"), 0);
    } else {
      for (const auto& v : dy)
        if (v != 0) throw MembershipFailure("Gysin extension: torsion class in degree 0");
    }
    std::vector<Int> c = cm.multiplication_by(e2, k - 2).apply(w);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d * x(i, 0);
    std::vector<Int> base_class = cm.cocycle_to_class[static_cast<std::size_t>(k)].apply(c);
    out.push_back(coker.projection(GroupElement(base.group(k), base_class)).coords());
  }
  return out;
}

}  // namespace

TotalSpaceCohomology total_space_cohomology(const CircleBundle& bundle, int max_degree) {
  const GradedCohomology& w = bundle.base;
  if (max_degree < 0) throw DegreeOverflow("negative max degree");
  if (max_degree + 1 > w.max_degree)
    throw DegreeOverflow("total space through degree " + std::to_string(max_degree) + " needs " + w.space +
                         " through degree " + std::to_string(max_degree + 1));
  std::vector<GysinDegree> degrees;
  for (int k = 0; k <= max_degree; ++k) {
    GysinDegree g;
    Hom left = w.cup_by(bundle.euler, k - 2);
    Hom right = w.cup_by(bundle.euler, k - 1);
    g.base_cokernel = cokernel(left);
    g.fiber_kernel = kernel(right);
    const FgGroup& cg = g.base_cokernel.group;
    const FgGroup& kg = g.fiber_kernel.group;
    const std::size_t nc = cg.generator_count();
    const std::size_t nk = kg.generator_count();

    if (!kg.torsion().empty()) {
      if (w.cochains) {
        g.extension = cochain_extensions(w, bundle.euler, k, g.base_cokernel, g.fiber_kernel);
      } else {
        g.extension.assign(kg.torsion().size(), std::vector<Int>(nc, Int(0)));
        g.ambiguous = ext_nonzero(kg, cg);
      }
    }

    IntMatrix rel(nc + nk, cg.torsion().size() + kg.torsion().size());
    std::size_t col = 0;
    for (std::size_t t = 0; t < cg.torsion().size(); ++t, ++col) rel(cg.free_rank() + t, col) = cg.torsion()[t];
    for (std::size_t t = 0; t < kg.torsion().size(); ++t, ++col) {
      rel(nc + kg.free_rank() + t, col) = kg.torsion()[t];
      for (std::size_t i = 0; i < nc; ++i) rel(i, col) = -g.extension[t][i];
    }
    Quotient q = present(rel);
    g.group = q.group;
    g.from_presentation = q.projection.matrix();
    g.to_presentation = q.section;

    IntMatrix embed_c = IntMatrix::vstack(g.base_cokernel.projection.matrix(),
                                          IntMatrix(nk, w.group(k).generator_count()));
    g.pullback = Hom(w.group(k), g.group, g.from_presentation * embed_c);
    IntMatrix select_k = IntMatrix::hstack(IntMatrix(nk, nc), IntMatrix::identity(nk));
    g.pushforward = Hom(g.group, w.group(k - 1), g.fiber_kernel.inclusion.matrix() * select_k * g.to_presentation);

    std::vector<std::string> pres;
    for (std::size_t i = 0; i < nc; ++i)
      pres.push_back(suffixed(combination_name(w.generator_names(k), g.base_cokernel.section.column(i)), "x1"));
    for (std::size_t i = 0; i < nk; ++i)
      pres.push_back(suffixed(combination_name(w.generator_names(k - 1), g.fiber_kernel.inclusion.matrix().column(i)), "xz"));
    for (std::size_t i = 0; i < g.group.generator_count(); ++i)
      g.names.push_back(combination_name(pres, g.to_presentation.column(i)));
    degrees.push_back(std::move(g));
  }
  return TotalSpaceCohomology(std::move(degrees));
}

GroupElement pushforward_of(const TotalSpaceCohomology& tsc, int k, const GroupElement& x) {
  return tsc.degree(k).pushforward(x);
}

GroupElement pullback_of(const TotalSpaceCohomology& tsc, int k, const GroupElement& y) {
  return tsc.degree(k).pullback(y);
}

std::vector<std::string> exactness_failures(const CircleBundle& bundle, const TotalSpaceCohomology& tsc) {
  std::vector<std::string> bad;
  const GradedCohomology& w = bundle.base;
  for (int k = 0; k <= tsc.max_degree(); ++k) {
    const GysinDegree& g = tsc.degree(k);
    Hom left = w.cup_by(bundle.euler, k - 2);
    Hom right = w.cup_by(bundle.euler, k - 1);
    std::string at = "degree " + std::to_string(k);
    if (!is_exact_at(left, g.pullback)) bad.push_back(at + ": H^k(W)");
    if (!is_exact_at(g.pullback, g.pushforward)) bad.push_back(at + ": H^k(E)");
    if (!is_exact_at(g.pushforward, right)) bad.push_back(at + ": H^{k-1}(W)");
    if (!compose(g.pushforward, g.pullback).is_zero()) bad.push_back(at + ": pushforward after pullback");
  }
  return bad;
}

}  // namespace tdual
