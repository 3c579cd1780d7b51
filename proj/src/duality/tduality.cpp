#include "tdual/duality/tduality.hpp"

#include <algorithm>

#include "tdual/errors.hpp"
#include "tdual/parallel/coset_enumeration.hpp"

namespace tdual {

namespace {

void add_flag(std::vector<std::string>& flags, const std::string& f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

// Sends a class of H^2(E) to H^2(E#): the cokernel part goes through the base
// and the dual pullback, the kernel part (a class of H^1(W) killed by both
// Euler classes) to the dual lift of the same class.
std::optional<GroupElement> transport(const Triple& src, const Triple& dst, const GroupElement& x) {
  const GysinDegree& s = src.total.degree(2);
  const GysinDegree& d = dst.total.degree(2);
  std::vector<Int> pres = s.to_presentation.apply(x.coords());
  const std::size_t nc = s.base_cokernel.group.generator_count();
  std::vector<Int> c(pres.begin(), pres.begin() + static_cast<std::ptrdiff_t>(nc));
  std::vector<Int> kappa(pres.begin() + static_cast<std::ptrdiff_t>(nc), pres.end());
  GroupElement beta(src.bundle.base.group(2), s.base_cokernel.section.apply(c));
  GroupElement y = d.pullback(beta);
  GroupElement h1(src.bundle.base.group(1), s.fiber_kernel.inclusion.matrix().apply(kappa));
  if (h1.is_zero()) return y;
  auto k2 = preimage(d.fiber_kernel.inclusion, h1);
  if (!k2) return std::nullopt;
  return y + dst.total.lift_from_kernel(2, *k2);
}

}  // namespace

Triple make_triple(CircleBundle bundle, int max_degree, std::vector<Int> b, std::vector<Int> flux) {
  if (max_degree < 3) throw DegreeOverflow("a triple needs the total space through degree 3");
  TotalSpaceCohomology total = total_space_cohomology(bundle, max_degree);
  GroupElement be(total.group(2), std::move(b));
  GroupElement he(total.group(3), std::move(flux));
  return Triple{std::move(bundle), std::move(total), std::move(be), std::move(he)};
}

CosetPartition coset_partition(const TotalSpaceCohomology& tsc, const GroupElement& gen, int degree,
                               std::size_t enumeration_limit) {
  const FgGroup& amb = tsc.group(degree);
  CosetPartition cp{gen, quotient_by(amb, {gen}), std::nullopt};
  const FgGroup& q = cp.quotient.group;
  if (q.is_finite() && *q.order() <= enumeration_limit) cp.representatives = coset_representatives(cp.quotient, amb);
  return cp;
}

GroupElement dual_euler(const Triple& t) { return pushforward_of(t.total, 3, t.flux); }

DualFlux dual_flux(const Triple& t, const TotalSpaceCohomology& dual_total) {
  const GysinDegree& d3 = dual_total.degree(3);
  auto kappa = preimage(d3.fiber_kernel.inclusion, t.bundle.euler);
  if (!kappa)
    throw MembershipFailure("Euler class " + t.bundle.euler.to_string() +
                            " is not killed by the dual Euler class; dual flux does not exist");
  return DualFlux{dual_total.lift_from_kernel(3, *kappa), image(d3.pullback)};
}

DualityReport dualize(const Triple& t) {
  const GradedCohomology& w = t.bundle.base;
  const int top = t.total.max_degree();
  GroupElement e_dual = dual_euler(t);
  CircleBundle dual_bundle(w, e_dual);
  TotalSpaceCohomology dual_total = total_space_cohomology(dual_bundle, top);
  DualFlux df = dual_flux(t, dual_total);

  const GysinDegree& s2 = t.total.degree(2);
  auto beta = preimage(s2.pullback, t.b);
  if (!beta)
    throw BNotLiftable("b = " + t.b.to_string() + " is not pulled back from H^2(" + w.space +
                       "); its pushforward is " + pushforward_of(t.total, 2, t.b).to_string());
  GroupElement b_dual = dual_total.degree(2).pullback(*beta);

  Triple dual{std::move(dual_bundle), std::move(dual_total), b_dual, df.flux};
  GroupElement src_gen = pullback_of(t.total, 2, e_dual);
  GroupElement tgt_gen = pullback_of(dual.total, 2, pushforward_of(dual.total, 3, dual.flux));

  DualityReport r{dual,
                  df.ambiguity,
                  *beta,
                  coset_partition(t.total, src_gen),
                  coset_partition(dual.total, tgt_gen),
                  std::nullopt,
                  {},
                  {}};

  const Quotient& qs = r.source_cosets.quotient;
  const Quotient& qt = r.target_cosets.quotient;
  IntMatrix m(qt.group.generator_count(), qs.group.generator_count());
  bool natural = true;
  for (std::size_t j = 0; j < qs.group.generator_count() && natural; ++j) {
    GroupElement x(t.total.group(2), qs.section.column(j));
    auto y = transport(t, r.dual, x);
    if (!y) {
      natural = false;
      break;
    }
    m.set_column(j, qt.projection(*y).coords());
  }
  if (natural)
    r.coset_iso = Hom(qs.group, qt.group, std::move(m));
  else
    add_flag(r.flags, kFlagNoNaturalIso);

  if (!w.simply_connected) {
    add_flag(r.flags, kFlagConjecture);
    r.notes.push_back("base " + w.space +
                      " is not simply connected: that each coset is exactly the set of B-classes with the "
                      "same dual is conjectural here");
  }
  if (!t.total.ambiguous_degrees().empty() || !r.dual.total.ambiguous_degrees().empty())
    add_flag(r.flags, kFlagAmbiguousExtension);
  r.notes.push_back("dual B-class is the canonical lift q*(beta) of the image coset, not a unique class");
  r.notes.push_back("dual flux is determined only modulo the image of q* in H^3");
  return r;
}

bool verify_coset_isomorphism(const Triple& source, const DualityReport& report) {
  if (!report.coset_iso) return false;
  const Hom& iso = *report.coset_iso;
  if (report.source_cosets.quotient.group != report.target_cosets.quotient.group) return false;
  if (!is_isomorphism(iso)) return false;
  GroupElement from = report.source_cosets.quotient.projection(source.b);
  GroupElement to = report.target_cosets.quotient.projection(report.dual.b);
  return iso(from) == to;
}

}  // namespace tdual
