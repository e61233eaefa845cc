#include "doctest.h"
#include "oracles.hpp"
#include "oscomp/families.hpp"
#include "oscomp/interval.hpp"

using namespace oscomp;

namespace {

Element el(Int v) { return Element{{std::move(v)}}; }

Element el2(Int a, Int b) { return Element{{std::move(a), std::move(b)}}; }

SemigroupModel ds11() {
  DirectSumKind k;
  k.components.push_back(family_wn(1));
  k.components.push_back(family_wn(1));
  return SemigroupModel(std::move(k), OrderMode::Algebraic, Int(48));
}

SemigroupModel affine_half() {
  AffineKind k;
  k.dimension = 2;
  k.generators = {{Int(1), Int(1)}, {Int(2), Int(0)}};
  return SemigroupModel(std::move(k), OrderMode::Algebraic, Int(40));
}

}  // namespace

TEST_SUITE("interval") {

TEST_CASE("principal arithmetic on the naturals") {
  SemigroupModel z = family_zplus(Int(100));
  Interval p2 = Interval::principal(z, el(2));
  Interval p3 = Interval::principal(z, el(3));
  Interval sum = interval_add(z, p2, p3);
  CHECK(sum == Interval::principal(z, el(5)));
  CHECK(sum.kind() == IntervalKind::Principal);
  CHECK(interval_member(z, sum, el(5)));
  CHECK_FALSE(interval_member(z, sum, el(6)));
}

TEST_CASE("a growing chain in a one-coordinate model canonicalizes to the top") {
  SemigroupModel z = family_zplus(Int(100));
  Interval c = Interval::chain(z, {el(1)}, el(1));
  CHECK(c.is_top());
  // membership in the top interval is bound free
  CHECK(interval_member_probe(z, c, el(Int(1000000))) == Probe3::Yes);

  SemigroupModel w2 = family_wn(2);
  CHECK(Interval::chain(w2, {el(3)}, el(3)).is_top());
}

TEST_CASE("zero growth collapses to a principal interval") {
  SemigroupModel w2 = family_wn(2);
  Interval c = Interval::raw_chain(w2, el(4), el(0));
  CHECK(c.kind() == IntervalKind::Principal);
  CHECK(c.cap() == el(4));
}

TEST_CASE("membership probes are decisive on numerical models") {
  SemigroupModel w2 = family_wn(2);
  Interval p4 = Interval::principal(w2, el(4));
  CHECK(interval_member_probe(w2, p4, el(3)) == Probe3::No);  // 1 is not a member
  CHECK(interval_member(w2, p4, el(4)));
  CHECK_FALSE(interval_member(w2, p4, el(3)));
}

TEST_CASE("membership misses degrade to Miss only off the numerical fragment") {
  SemigroupModel a = affine_half();
  Interval c = Interval::raw_chain(a, a.zero(), el2(2, 0));
  CHECK(c.kind() == IntervalKind::Chain);
  // coordinate 1 never grows, so (1,1) stays out of reach; no decisive rule
  CHECK(interval_member_probe(a, c, el2(1, 1)) == Probe3::Miss);
  CHECK(interval_member_probe(a, c, el2(4, 0)) == Probe3::Yes);
}

TEST_CASE("containment between intervals follows the frozen table") {
  SemigroupModel w2 = family_wn(2);
  Interval p3 = Interval::principal(w2, el(3));
  Interval p7 = Interval::principal(w2, el(7));
  CHECK(interval_leq(w2, p3, p7));
  CHECK_FALSE(interval_leq(w2, p7, p3));
  CHECK(interval_leq(w2, p7, Interval::top(w2)));
  CHECK_FALSE(interval_leq(w2, Interval::top(w2), p7));
}

TEST_CASE("direct sum chains keep partial growth and compare coordinatewise") {
  SemigroupModel ds = ds11();
  IntervalChain seq{{Interval::principal(ds, el2(2, 0))}, Interval::principal(ds, el2(2, 0))};
  Interval sup = sup_chain(ds, seq);
  REQUIRE(sup.kind() == IntervalKind::Chain);
  CHECK(sup.cap() == el2(0, 0));
  CHECK(sup.growth() == el2(2, 0));

  CHECK(interval_member(ds, sup, el2(4, 0)));
  CHECK_FALSE(interval_member(ds, sup, el2(0, 2)));

  CHECK(interval_leq(ds, sup, Interval::top(ds)));
  CHECK_FALSE(interval_leq(ds, Interval::top(ds), sup));

  Interval doubled = interval_scale(ds, Int(2), sup);
  REQUIRE(doubled.kind() == IntervalKind::Chain);
  CHECK(doubled.growth() == el2(4, 0));

  // adding a principal part is absorbed by the canonical form
  Interval shifted = interval_add(ds, Interval::principal(ds, el2(2, 0)), sup);
  CHECK(shifted == sup);
}

TEST_CASE("chain membership agrees with a finite unrolling oracle") {
  SemigroupModel ds = ds11();
  Interval c = Interval::raw_chain(ds, el2(0, 2), el2(2, 0));
  for (const Element& x : enumerate_elements(ds, Int(10))) {
    bool expect = false;
    Element stage = el2(0, 2);
    for (int t = 0; t <= 12 && !expect; ++t) {
      if (oracle::leq(ds, x, stage)) expect = true;
      stage = element_add(stage, el2(2, 0));
    }
    CAPTURE(x.coords[0].str());
    CAPTURE(x.coords[1].str());
    CHECK(interval_member(ds, c, x) == expect);
  }
}

TEST_CASE("the chain factory certifies monotonicity and membership") {
  SemigroupModel w2 = family_wn(2);
  CHECK_THROWS_AS(Interval::chain(w2, {el(7), el(4)}, el(3)), Error);
  CHECK_THROWS_AS(Interval::chain(w2, {el(3)}, el(5)), Error);  // growth not a member
  CHECK_THROWS_AS(Interval::chain(w2, {}, el(3)), Error);
  CHECK_THROWS_AS(Interval::principal(w2, el(5)), Error);  // cap not a member
}

TEST_CASE("induced mode rejects chains that leave the model") {
  SemigroupModel ind(NumericalKind{{Int(3), Int(4)}}, OrderMode::Induced, Int(60));
  // growth 1 passes the pointwise check but the stages 4, 5 leave the model
  CHECK_THROWS_WITH_AS(Interval::chain(ind, {el(3)}, el(1)),
                       doctest::Contains("leaves the model"), Error);
  Interval c = Interval::chain(ind, {el(3)}, el(3));
  CHECK(c.is_top());
}

TEST_CASE("compactness probes single out principal intervals") {
  SemigroupModel z = family_zplus(Int(100));
  CHECK(way_below(z, Interval::principal(z, el(2)), Interval::top(z)));
  CHECK_FALSE(way_below(z, Interval::top(z), Interval::top(z)));

  SemigroupModel ds = ds11();
  Interval sup = Interval::raw_chain(ds, el2(0, 0), el2(2, 0));
  CHECK(way_below(ds, Interval::principal(ds, el2(2, 0)), sup));
  CHECK_FALSE(way_below(ds, sup, Interval::top(ds)));
}

TEST_CASE("the trivial model collapses every interval") {
  SemigroupModel t(NumericalKind{{}}, OrderMode::Algebraic, Int(10));
  Interval top = Interval::top(t);
  CHECK(top.kind() == IntervalKind::Principal);
  CHECK(top.cap() == t.zero());
  CHECK(interval_leq(t, top, Interval::principal(t, t.zero())));
  CHECK(way_below(t, top, top));
}

TEST_CASE("interval kinds are guarded") {
  SemigroupModel z = family_zplus(Int(100));
  Interval top = Interval::top(z);
  CHECK_THROWS_AS(top.cap(), Error);
  Interval p = Interval::principal(z, el(2));
  CHECK_THROWS_AS(p.growth(), Error);
  CHECK(std::string(interval_kind_name(IntervalKind::Chain)) == "chain");
}

TEST_CASE("sup of a shift-by-K chain matches the closed form") {
  SemigroupModel ds = ds11();
  // S, S+K, S+2K, ... with S principal at (2,0) and K principal at (0,2):
  // the sup caps the fixed part and grows by everything in K
  IntervalChain seq{{Interval::principal(ds, el2(2, 0))}, Interval::principal(ds, el2(0, 2))};
  Interval sup = sup_chain(ds, seq);
  REQUIRE(sup.kind() == IntervalKind::Chain);
  CHECK(sup.cap() == el2(2, 0));
  CHECK(sup.growth() == el2(0, 2));
  // every finite stage embeds below the sup
  Element stage = el2(2, 0);
  for (int i = 0; i < 5; ++i) {
    CHECK(interval_member(ds, sup, stage));
    stage = element_add(stage, el2(0, 2));
  }
}

}  // TEST_SUITE
