#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "tdual/classifying/classifying_spaces.hpp"
#include "tdual/classifying/reference_tables.hpp"
#include "tdual/errors.hpp"

using namespace tdual;

namespace {

std::vector<std::string> names_of(const GradedCohomology& g, int k) { return g.generator_names(k); }

std::vector<FgGroup> frees(std::initializer_list<std::size_t> ranks) {
  std::vector<FgGroup> out;
  for (auto r : ranks) out.push_back(FgGroup::free(r));
  return out;
}

}  // namespace

TEST_CASE("Z-group cohomology of small actions") {
  ZGroupCohomology t = z_group_cohomology(ZAction::on_free(IntMatrix{{1, 1}, {0, 1}}));
  CHECK(t.h0.group == FgGroup::free(1));
  CHECK(t.h1.group == FgGroup::free(1));
  for (std::size_t k = 0; k <= 4; ++k) {
    ZGroupCohomology id = z_group_cohomology(ZAction::on_free(IntMatrix::identity(k)));
    CHECK(id.h0.group == FgGroup::free(k));
    CHECK(id.h1.group == FgGroup::free(k));
  }
  ZGroupCohomology neg = z_group_cohomology(ZAction::on_free(IntMatrix{{-1}}));
  CHECK(neg.h0.group.is_zero());
  CHECK(neg.h1.group == FgGroup::cyclic(2));
  CHECK_THROWS_AS(ZAction::on_free(IntMatrix{{2}}), ValidationError);
  CHECK_THROWS_AS(ZAction::on_free(IntMatrix{{1, 2}, {3, 4}}), ValidationError);
}

TEST_CASE("degree-4 action of R32: invariants and coinvariants") {
  MappingTorusData d = r32_data();
  ZGroupCohomology z = z_group_cohomology(d.actions[4]);
  CHECK(z.h0.group == FgGroup::free(3));
  // the coinvariants carry a Z/2 from the entry 2 in the a1c column
  CHECK(z.h1.group == FgGroup(3, {Int(2)}));
}

TEST_CASE("rank of invariants equals rank of coinvariants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> e(-3, 3);
  int tried = 0;
  while (tried < 200) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix m = IntMatrix::identity(n);
    // random products of elementary matrices are unimodular
    for (int s = 0; s < 6; ++s) {
      std::size_t i = rng() % n, j = rng() % n;
      if (i != j) m.add_row_multiple(i, j, e(rng));
      if (rng() % 5 == 0) m.negate_row(i);
    }
    ZGroupCohomology z = z_group_cohomology(ZAction::on_free(m));
    CHECK(z.h0.group.free_rank() == z.h1.group.free_rank());
    ++tried;
  }
}

TEST_CASE("R2 table") {
  const GradedCohomology& r2 = r2_cohomology();
  CHECK(std::vector<FgGroup>(r2.groups.begin(), r2.groups.begin() + 4) == frees({1, 1, 1, 1}));
  CHECK(names_of(r2, 1) == std::vector<std::string>{"a"});
  CHECK(names_of(r2, 2) == std::vector<std::string>{"b"});
  CHECK(names_of(r2, 3) == std::vector<std::string>{"c"});
  CHECK(r2.group(4) == FgGroup::free(1));
  CHECK(names_of(r2, 4) == std::vector<std::string>{"b^2"});
  // a.b = 0 and b.b = b^2
  GroupElement b = r2.element(2, {1});
  CHECK(r2.cup_by(b, 1).is_zero());
  CHECK(r2.cup_by(b, 2).matrix() == IntMatrix{{1}});
  CHECK(compare_with_reference(r2, reference_tables().cohomology.at("R2")).empty());
  CHECK(mapping_torus_ambiguous_degrees(r2_data()).empty());
}

TEST_CASE("R32 table as computed") {
  const GradedCohomology& r = r32_cohomology();
  CHECK(std::vector<FgGroup>(r.groups.begin(), r.groups.end()) == frees({1, 1, 2, 2, 3}));
  CHECK(names_of(r, 1) == std::vector<std::string>{"l"});
  CHECK(names_of(r, 2) == std::vector<std::string>{"a1", "a2"});
  CHECK(names_of(r, 3) == std::vector<std::string>{"a2l", "cl"});
  CHECK(names_of(r, 4) == std::vector<std::string>{"a1^2", "a2^2", "x"});
  GroupElement a1 = r.element(2, {1, 0}), a2 = r.element(2, {0, 1});
  CHECK(r.cup_by(a1, 1).is_zero());
  CHECK(r.cup_by(a2, 1).matrix() == IntMatrix{{1}, {0}});
  CHECK(r.cup_by(a1, 2).matrix() == IntMatrix{{1, 0}, {0, 0}, {0, 0}});
  CHECK(r.cup_by(a2, 2).matrix() == IntMatrix{{0, 0}, {0, 1}, {0, 0}});
  std::vector<std::string> diff = compare_with_reference(r, reference_tables().cohomology.at("R32"));
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].rfind("H^3", 0) == 0);
}

TEST_CASE("trivial action gives the circle product rule") {
  MappingTorusData d = r32_data();
  for (int k = 0; k <= d.cover.max_degree; ++k)
    d.actions[static_cast<std::size_t>(k)] = ZAction::on_free(IntMatrix::identity(d.cover.group(k).generator_count()));
  GradedCohomology g = mapping_torus_cohomology(d);
  for (int k = 0; k <= 4; ++k)
    CHECK(g.group(k).free_rank() == d.cover.group(k).free_rank() + d.cover.group(k - 1).free_rank());
  CHECK(names_of(g, 3) == std::vector<std::string>{"a1l", "a2l", "cl"});
}

TEST_CASE("missing action data is rejected") {
  MappingTorusData d = r2_data();
  d.actions.pop_back();
  CHECK_THROWS_AS(mapping_torus_cohomology(d), ValidationError);
  MappingTorusData e = r2_data();
  e.actions[2] = ZAction::on_free(IntMatrix::identity(3));
  CHECK_THROWS_AS(mapping_torus_cohomology(e), ValidationError);
}

TEST_CASE("universal bundles over the recorded R32 table") {
  const ReferenceTables& refs = reference_tables();
  GradedCohomology rec = graded_from_reference("R32", refs.cohomology.at("R32"));
  UniversalBundleTables u = universal_bundle_tables(rec);
  CHECK(u.e32.total.groups() == frees({1, 1, 2, 2}));
  CHECK(u.e32_hat.total.groups() == frees({1, 1, 1, 1}));
  UniversalBundleCheck c = check_universal_bundles(u, refs);
  CHECK(c.e32.empty());
  CHECK(c.e32_hat.empty());
  CHECK(exactness_failures(u.e32.bundle, u.e32.total).empty());
  CHECK(exactness_failures(u.e32_hat.bundle, u.e32_hat.total).empty());
}

TEST_CASE("universal bundles over the computed R32 table") {
  const UniversalBundleTables& u = universal_bundle_tables();
  CHECK(u.e32.total.groups() == frees({1, 1, 2, 3}));
  CHECK(u.e32.total.names(3) == std::vector<std::string>{"a2lx1", "clx1", "a2xz"});
  CHECK(u.e32_hat.total.groups() == frees({1, 1, 1, 2}));
  CHECK(u.e32_hat.total.names(3) == std::vector<std::string>{"clx1", "a1xz"});
  CHECK(exactness_failures(u.e32.bundle, u.e32.total).empty());
  CHECK(exactness_failures(u.e32_hat.bundle, u.e32_hat.total).empty());
  // the pushforwards the tables record still hold
  CHECK(pushforward_of(u.e32.total, 2, u.e32.total.element(2, {0, 1})).coords() == std::vector<Int>{1});
  CHECK(pushforward_of(u.e32.total, 3, u.e32.total.element(3, {0, 0, 1})).coords() == std::vector<Int>{0, 1});
  CHECK(pushforward_of(u.e32_hat.total, 3, u.e32_hat.total.element(3, {0, 1})).coords() == std::vector<Int>{1, 0});
  UniversalBundleCheck c = check_universal_bundles(u, reference_tables());
  CHECK(c.e32.size() == 1);
  CHECK(c.e32_hat.size() == 1);
  CHECK_THROWS_AS(universal_bundle_tables_checked(), SelfTestMismatch);
}

TEST_CASE("T32 action") {
  T32Action t = t32_cohomology_action();
  REQUIRE(t.base.size() == 5);
  const DegreeAction& h1 = t.base[1];
  CHECK(h1.matrix == IntMatrix{{0}});
  const DegreeAction& h2 = t.base[2];
  CHECK(h2.matrix == IntMatrix{{0, 1}, {1, 0}});
  CHECK(t.base[3].undetermined() == std::vector<std::string>{"cl"});
  CHECK(t.base[4].undetermined() == std::vector<std::string>{"x"});
  for (const auto& d : t.base) {
    DegreeAction s = squared(d);
    for (std::size_t j = 0; j < s.source.size(); ++j) {
      if (!s.determined[j]) continue;
      const std::string& n = s.source[j];
      std::vector<Int> col = s.matrix.column(j);
      if (n == "l" || n == "a2l") {
        CHECK(std::all_of(col.begin(), col.end(), [](const Int& x) { return x == 0; }));
      } else {
        std::vector<Int> e(s.source.size(), 0);
        e[j] = 1;
        CHECK(col == e);
      }
    }
  }
  // on H^1 the square is zero, not the identity
  CHECK(squared(t.base[1]).matrix == IntMatrix{{0}});
  CHECK(squared(t.base[2]).matrix == IntMatrix::identity(2));

  REQUIRE(t.bundle.size() == 4);
  CHECK(t.bundle[1].matrix == IntMatrix{{0}});
  CHECK(t.bundle[2].undetermined() == std::vector<std::string>{"lxz"});
  const DegreeAction& b3 = t.bundle[3];
  CHECK(b3.target == std::vector<std::string>{"clx1", "a1xz"});
  CHECK(b3.undetermined() == std::vector<std::string>{"clx1"});
  CHECK(b3.matrix.column(2) == std::vector<Int>{0, 1});
  CHECK(b3.matrix.column(0) == std::vector<Int>{0, 0});
}

TEST_CASE("homotopy tables against the reference") {
  const ReferenceTables& refs = reference_tables();
  for (const auto& t : homotopy_tables()) {
    CHECK(t.pi == refs.homotopy.at(t.space));
    CHECK(t.pi1_action_on_pi2 == refs.pi1_actions.at(t.space));
    CHECK(t.pi[0] == FgGroup::free(1));
  }
  std::vector<HomotopyTable> h = homotopy_tables();
  CHECK(h[1].pi[2] == FgGroup::free(1));
  CHECK(h[1].pi[4].is_zero());
}

TEST_CASE("orbit representatives") {
  ZAction theta = ZAction::on_free(IntMatrix{{1, 1}, {0, 1}});
  FgGroup z2 = FgGroup::free(2);
  CHECK(unbased_class_over_sphere(theta, GroupElement(z2, {7, 3})).coords() == std::vector<Int>{1, 3});
  CHECK(unbased_class_over_sphere(theta, GroupElement(z2, {-7, -3})).coords() == std::vector<Int>{2, -3});
  CHECK(unbased_class_over_sphere(theta, GroupElement(z2, {5, 0})).coords() == std::vector<Int>{5, 0});
  for (long b = -6; b <= 6; ++b) {
    if (b == 0) continue;
    std::set<std::vector<Int>> classes;
    for (long a = -40; a <= 40; ++a) classes.insert(unbased_class_over_sphere(theta, GroupElement(z2, {a, b})).coords());
    CHECK(classes.size() == static_cast<std::size_t>(std::labs(b)));
  }
  ZAction pi2 = ZAction::on_free(IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  FgGroup z3 = FgGroup::free(3);
  CHECK(unbased_class_over_sphere(pi2, GroupElement(z3, {9, 4, 4})).coords() == std::vector<Int>{1, 4, 4});
  CHECK(unbased_class_over_sphere(pi2, GroupElement(z3, {9, 4, 0})).coords() == std::vector<Int>{9, 4, 0});
  CHECK_THROWS_AS(unbased_class_over_sphere(ZAction::on_free(IntMatrix{{2, 1}, {1, 1}}), GroupElement(z2, {1, 1})),
                  ValidationError);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coord(-50, 50), power(-30, 30);
  for (const ZAction* act : {&theta, &pi2}) {
    const FgGroup& g = act->group();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Int> c;
      for (std::size_t i = 0; i < g.generator_count(); ++i) c.emplace_back(coord(rng));
      GroupElement x(g, c);
      GroupElement r = unbased_class_over_sphere(*act, x);
      CHECK(unbased_class_over_sphere(*act, r) == r);
      GroupElement moved = act->power(power(rng))(x);
      CHECK(unbased_class_over_sphere(*act, moved) == r);
    }
  }
}

TEST_CASE("powers and inverses of actions") {
  ZAction theta = ZAction::on_free(IntMatrix{{1, 1}, {0, 1}});
  CHECK(theta.power(5).matrix() == IntMatrix{{1, 5}, {0, 1}});
  CHECK(theta.power(-3).matrix() == IntMatrix{{1, -3}, {0, 1}});
  CHECK(theta.power(0) == Hom::identity(theta.group()));
  FgGroup t(0, {Int(5)});
  ZAction two(Hom(t, t, IntMatrix{{2}}));
  CHECK(compose(two.inverse(), two.automorphism()) == Hom::identity(t));
}
