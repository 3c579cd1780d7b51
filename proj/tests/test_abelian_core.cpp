#include <random>

#include "doctest.h"
#include "oracles/brute_force.hpp"
#include "oracles/minors.hpp"
#include "tdual/abelian/group_ops.hpp"
#include "tdual/abelian/normal_forms.hpp"
#include "tdual/errors.hpp"

using namespace tdual;

namespace {

FgGroup Zn(long n) { return FgGroup::cyclic(n); }

std::vector<Int> diag_nonzero(const SmithForm& s) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.d(i, i));
  return out;
}

bool is_diagonal_chain(const SmithForm& s) {
  const IntMatrix& d = s.d;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size() && !divides(diag[i], diag[i + 1])) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  SmithForm s = smith_normal_form(IntMatrix::identity(2));
  CHECK(s.d == IntMatrix::identity(2));
  CHECK(s.u == IntMatrix::identity(2));
  CHECK(s.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form against determinantal divisors") {
  IntMatrix m{{2, 4}, {6, 8}};
  std::vector<Int> expected = oracle::invariant_factors_by_minors(m);
  REQUIRE(expected == std::vector<Int>{2, 4});
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(diag_nonzero(s) == expected);

  IntMatrix n{{0, 1}, {0, 0}};
  REQUIRE(oracle::invariant_factors_by_minors(n) == std::vector<Int>{1});
  SmithForm t = smith_normal_form(n);
  CHECK(t.d == IntMatrix{{1, 0}, {0, 0}});
}

TEST_CASE("smith normal form property over random matrices") {
  std::mt19937 rng(20241);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(is_diagonal_chain(s));
    REQUIRE(abs(s.u.determinant()) == 1);
    REQUIRE(abs(s.v.determinant()) == 1);
    REQUIRE(s.u * s.u_inv == IntMatrix::identity(r));
    REQUIRE(s.v * s.v_inv == IntMatrix::identity(c));
    if (trial % 10 == 0) REQUIRE(diag_nonzero(s) == oracle::invariant_factors_by_minors(m));
  }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    REQUIRE(m.determinant() == oracle::laplace_determinant(m));
  }
}

TEST_CASE("kernel basis and lattice basis") {
  IntMatrix a{{1, 1, 0}, {0, 0, 1}};
  IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(k == IntMatrix{{1}, {-1}, {0}});

  IntMatrix g{{2, 4}, {0, 6}};
  IntMatrix b = lattice_basis(g);
  CHECK(b.cols() == 2);
  CHECK(abs(b.determinant()) == 12);
}

TEST_CASE("solve finds integral solutions or reports none") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve(a, IntMatrix{{4}, {9}});
  REQUIRE(x);
  CHECK(a * *x == IntMatrix{{4}, {9}});
  CHECK_FALSE(solve(a, IntMatrix{{1}, {0}}));
}

TEST_CASE("group canonical form") {
  CHECK(FgGroup::normalized(0, {2, 3}) == FgGroup(0, {6}));
  CHECK(FgGroup::normalized(1, {4, 6, 1, 0}) == FgGroup(2, {2, 12}));
  CHECK_THROWS_AS(FgGroup(0, {4, 6}), ValidationError);
  CHECK_THROWS_AS(FgGroup(0, {1}), ValidationError);
  CHECK(FgGroup().to_string() == "0");
  CHECK(FgGroup(2, {4}).to_string() == "Z^2 + Z/4");
  for (const auto& chain : oracle::invariant_chains(64)) {
    FgGroup g = oracle::group_from_chain(chain);
    FgGroup once = FgGroup::normalized(g.free_rank(), g.torsion());
    CHECK(once == g);
    CHECK(FgGroup::normalized(once.free_rank(), once.torsion()) == once);
  }
}

TEST_CASE("hom well-definedness") {
  CHECK_THROWS_AS(Hom(Zn(2), Zn(4), IntMatrix{{1}}), IllDefinedHom);
  CHECK_NOTHROW(Hom(Zn(2), Zn(4), IntMatrix{{2}}));
  CHECK_THROWS_AS(Hom(Zn(2), Zn(0), IntMatrix{{1}}), IllDefinedHom);
  CHECK_THROWS_AS(Hom(Zn(2), Zn(4), IntMatrix{{1, 0}}), MismatchedGroups);
}

TEST_CASE("cokernel examples") {
  for (long p = 2; p <= 7; ++p) {
    Hom h(FgGroup::free(1), FgGroup::free(3), IntMatrix{{p}, {0}, {0}});
    Quotient q = cokernel(h);
    CHECK(q.group == FgGroup(2, {p}));
    CHECK(compose(q.projection, h).is_zero());
  }
  CHECK(cokernel(Hom(Zn(0), Zn(0), IntMatrix{{1}})).group.is_zero());

  // Z -> Z/2 + Z, x -> (x mod 2, 0); in canonical order the free coordinate comes first
  FgGroup z2z(1, {2});
  Hom h(FgGroup::free(1), z2z, IntMatrix{{0}, {1}});
  CHECK(cokernel(h).group == FgGroup::free(1));
}

TEST_CASE("kernel examples") {
  Hom proj(FgGroup::free(2), FgGroup::free(1), IntMatrix{{1, 0}});
  Subgroup k = kernel(proj);
  CHECK(k.group == FgGroup::free(1));
  CHECK(k.inclusion.matrix() == IntMatrix{{0}, {1}});

  Hom twice(Zn(4), Zn(4), IntMatrix{{2}});
  CHECK(kernel(twice).group == Zn(2));
  CHECK(oracle::kernel_set(twice).size() == 2);

  Hom red(FgGroup::free(1), Zn(2), IntMatrix{{1}});
  Subgroup kr = kernel(red);
  CHECK(kr.group == FgGroup::free(1));
  CHECK(kr.inclusion.matrix() == IntMatrix{{2}});
}

TEST_CASE("image examples") {
  Hom times_p(FgGroup::free(1), FgGroup::free(1), IntMatrix{{5}});
  Subgroup im = image(times_p);
  CHECK(im.group == FgGroup::free(1));
  CHECK(abs(im.inclusion.matrix()(0, 0)) == 5);

  Hom theta_minus_one(FgGroup::free(2), FgGroup::free(2), IntMatrix{{0, 1}, {0, 0}});
  CHECK(image(theta_minus_one).group == FgGroup::free(1));

  Hom dbl(Zn(2), Zn(4), IntMatrix{{2}});
  CHECK(image(dbl).group == Zn(2));
  CHECK(oracle::image_set(dbl).size() == 2);
}

TEST_CASE("exactness examples") {
  for (long p = 2; p <= 6; ++p) {
    Hom f(FgGroup::free(1), FgGroup::free(1), IntMatrix{{p}});
    Hom g(FgGroup::free(1), Zn(p), IntMatrix{{1}});
    CHECK(is_exact_at(f, g));
  }
  Hom zero(FgGroup::free(1), FgGroup::free(1), IntMatrix{{0}});
  Hom one(FgGroup::free(1), FgGroup::free(1), IntMatrix{{1}});
  CHECK(is_exact_at(zero, one));

  Hom f(FgGroup::free(1), FgGroup::free(1), IntMatrix{{2}});
  Hom g(FgGroup::free(1), Zn(4), IntMatrix{{1}});
  CHECK_FALSE(is_exact_at(f, g));
  CHECK_THROWS_AS(is_exact_at(f, Hom(Zn(2), Zn(2), IntMatrix{{1}})), MismatchedGroups);
}

TEST_CASE("element orders") {
  CHECK(*element_order(GroupElement::zero(FgGroup(1, {3}))) == 1);
  CHECK(*element_order(GroupElement::generator(Zn(7), 0)) == 7);
  CHECK_FALSE(element_order(GroupElement(FgGroup(1, {2}), {1, 1})));
  CHECK(*element_order(GroupElement(FgGroup(0, {2, 6}), {1, 2})) == 6);
}

TEST_CASE("direct sums") {
  DirectSum ds = direct_sum(Zn(2), Zn(3));
  CHECK(ds.group == Zn(6));
  CHECK(compose(ds.project_first, ds.inject_first) == Hom::identity(Zn(2)));
  CHECK(compose(ds.project_second, ds.inject_second) == Hom::identity(Zn(3)));
  CHECK(compose(ds.project_second, ds.inject_first).is_zero());
}

TEST_CASE("kernel, image and cokernel agree with enumeration on small groups") {
  std::mt19937 rng(99);
  auto chains = oracle::invariant_chains(24);
  for (const auto& a : chains) {
    for (const auto& b : chains) {
      FgGroup ga = oracle::group_from_chain(a);
      FgGroup gb = oracle::group_from_chain(b);
      Hom h = oracle::random_hom(ga, gb, rng);
      auto ob = oracle::orders_of(gb);
      auto oa = oracle::orders_of(ga);
      auto ks = oracle::kernel_set(h);
      auto is = oracle::image_set(h);
      REQUIRE(oracle::torsion_profile(kernel(h).group, 24) == oracle::torsion_profile(ks, oa, 24));
      REQUIRE(oracle::torsion_profile(image(h).group, 24) == oracle::torsion_profile(is, ob, 24));
      REQUIRE(oracle::torsion_profile(cokernel(h).group, 24) == oracle::quotient_profile(is, ob, 24));
    }
  }
}

TEST_CASE("rank and order bookkeeping for maps with free parts") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    FgGroup dom = FgGroup::normalized(rng() % 3, {Int(static_cast<long>(rng() % 6)), Int(static_cast<long>(rng() % 6))});
    FgGroup cod = FgGroup::normalized(rng() % 3, {Int(static_cast<long>(rng() % 6))});
    Hom h = oracle::random_hom(dom, cod, rng);
    Subgroup k = kernel(h);
    Subgroup im = image(h);
    REQUIRE(dom.free_rank() == k.group.free_rank() + im.group.free_rank());
    REQUIRE(compose(h, k.inclusion).is_zero());
    REQUIRE(kernel(k.inclusion).group.is_zero());
    REQUIRE(kernel(im.inclusion).group.is_zero());
    if (dom.is_finite()) REQUIRE(*dom.order() == *k.group.order() * *im.group.order());
    REQUIRE(is_exact_at(k.inclusion, h));
  }
}
