#include "doctest.h"
#include "oracles.hpp"
#include "oscomp/families.hpp"
#include "oscomp/model.hpp"

using namespace oscomp;

namespace {

SemigroupModel w2() { return family_wn(2); }

SemigroupModel w1_pair() { return family_womega(1); }  // single summand, dim 1

SemigroupModel ds11() {
  DirectSumKind k;
  k.components.push_back(family_wn(1));
  k.components.push_back(family_wn(1));
  return SemigroupModel(std::move(k), OrderMode::Algebraic, Int(48));
}

// Brute-force factorization enumeration for small values.
std::vector<std::vector<Int>> all_factorizations(const std::vector<Int>& gens, const Int& v) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, Int rest) -> void {
    if (i + 1 == gens.size()) {
      if (rest % gens[i] == 0) {
        cur[i] = rest / gens[i];
        out.push_back(cur);
      }
      return;
    }
    for (Int c = 0; c * gens[i] <= rest; ++c) {
      cur[i] = c;
      self(self, i + 1, rest - c * gens[i]);
    }
  };
  rec(rec, 0, v);
  return out;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("membership matches the closure oracle on a two-generator model") {
  SemigroupModel m = w2();
  auto members = oracle::member_set(m, Int(30));
  for (Int v = 0; v <= 30; ++v) {
    CAPTURE(v.str());
    CHECK(m.contains(Element{{v}}) == (members.count({v}) > 0));
  }
  CHECK_FALSE(m.contains(Element{{Int(5)}}));
  CHECK(m.contains(Element{{Int(6)}}));
}

TEST_CASE("membership matches the closure oracle on a direct sum") {
  SemigroupModel m = ds11();
  auto members = oracle::member_set(m, Int(12));
  for (Int a = 0; a <= 12; ++a)
    for (Int b = 0; a + b <= 12; ++b) {
      Element e{{a, b}};
      CAPTURE(a.str());
      CAPTURE(b.str());
      CHECK(m.contains(e) == (members.count(e.coords) > 0));
    }
}

TEST_CASE("membership matches the closure oracle on an affine model") {
  AffineKind k;
  k.dimension = 2;
  k.generators = {{Int(1), Int(1)}, {Int(2), Int(0)}};
  SemigroupModel m(std::move(k), OrderMode::Algebraic, Int(20));
  auto members = oracle::member_set(m, Int(14));
  for (Int a = 0; a <= 10; ++a)
    for (Int b = 0; a + b <= 14; ++b) {
      Element e{{a, b}};
      CHECK(m.contains(e) == (members.count(e.coords) > 0));
    }
  CHECK(m.contains(Element{{Int(3), Int(1)}}));
  CHECK_FALSE(m.contains(Element{{Int(0), Int(1)}}));
}

TEST_CASE("factorization is present exactly for members and is lex-smallest") {
  SemigroupModel m = w2();
  for (Int v = 0; v <= 24; ++v) {
    MemberResult r = member(m, Element{{v}});
    auto all = all_factorizations({Int(3), Int(4)}, v);
    CHECK(r.member == !all.empty());
    if (r.member) {
      REQUIRE(r.factorization.has_value());
      std::sort(all.begin(), all.end());
      CHECK(*r.factorization == all.front());
      Int total = 0;
      total += (*r.factorization)[0] * 3 + (*r.factorization)[1] * 4;
      CHECK(total == v);
    }
  }
  MemberResult six = member(m, Element{{Int(6)}});
  REQUIRE(six.factorization.has_value());
  CHECK(*six.factorization == std::vector<Int>{Int(2), Int(0)});
}

TEST_CASE("frobenius values agree with the gap-scan oracle") {
  struct Row {
    std::vector<Int> gens;
    Int expected;
  };
  std::vector<Row> rows = {
      {{Int(3), Int(4)}, Int(5)},
      {{Int(2), Int(3)}, Int(1)},
      {{Int(5), Int(7)}, Int(23)},
      {{Int(4), Int(6)}, Int(14)},  // gcd 2: largest even non-member
      {{Int(6), Int(9), Int(20)}, Int(43)},
  };
  for (const auto& row : rows) {
    SemigroupModel m(NumericalKind{row.gens}, OrderMode::Algebraic, Int(200));
    FrobeniusResult r = frobenius(m);
    CAPTURE(row.expected.str());
    if (gcd_all(row.gens) == 1) {
      REQUIRE(r.value.has_value());
      CHECK(r.reason == FrobeniusReason::Finite);
      CHECK(*r.value == row.expected);
      CHECK(*r.value == oracle::frobenius_scan(row.gens, Int(200)));
    } else {
      CHECK(r.reason == FrobeniusReason::InfinitelyManyGaps);
      CHECK_FALSE(r.value.has_value());
    }
  }
  SemigroupModel full(NumericalKind{{Int(1)}}, OrderMode::Algebraic, Int(50));
  CHECK(frobenius(full).reason == FrobeniusReason::NoGaps);
}

TEST_CASE("element enumeration is complete and graded lexicographic") {
  SemigroupModel m = w2();
  std::vector<Element> got = enumerate_elements(m, Int(10));
  std::vector<Int> flat;
  for (const Element& e : got) flat.push_back(e.coords[0]);
  CHECK(flat == std::vector<Int>{Int(0), Int(3), Int(4), Int(6), Int(7), Int(8), Int(9), Int(10)});

  SemigroupModel ds = ds11();
  std::vector<Element> pool = enumerate_elements(ds, Int(2));
  REQUIRE(pool.size() == 3);
  CHECK(pool[0] == Element{{Int(0), Int(0)}});
  CHECK(pool[1] == Element{{Int(0), Int(2)}});
  CHECK(pool[2] == Element{{Int(2), Int(0)}});

  auto members = oracle::member_set(ds, Int(6));
  CHECK(enumerate_elements(ds, Int(6)).size() == members.size());
}

TEST_CASE("order certificates replay and match the definitional oracle") {
  SemigroupModel m = w2();
  auto c = leq(m, Element{{Int(3)}}, Element{{Int(7)}});
  REQUIRE(c.has_value());
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->coords[0] == 4);
  CHECK(replay_order(m, *c));

  CHECK_FALSE(leq(m, Element{{Int(4)}}, Element{{Int(6)}}).has_value());

  OrderCertificate bad = *c;
  bad.witness = Element{{Int(5)}};  // not a member
  CHECK_FALSE(replay_order(m, bad));
  bad.witness = Element{{Int(3)}};  // member, wrong difference
  CHECK_FALSE(replay_order(m, bad));

  std::vector<Element> pool = enumerate_elements(m, Int(20));
  for (const Element& x : pool)
    for (const Element& y : pool) {
      bool expect = oracle::leq(m, x, y);
      auto got = leq(m, x, y);
      CAPTURE(x.coords[0].str());
      CAPTURE(y.coords[0].str());
      CHECK(got.has_value() == expect);
      if (got) CHECK(replay_order(m, *got));
    }
}

TEST_CASE("induced order is coordinatewise and certificate-free") {
  SemigroupModel m(NumericalKind{{Int(3), Int(4)}}, OrderMode::Induced, Int(48));
  auto c = leq(m, Element{{Int(4)}}, Element{{Int(6)}});
  REQUIRE(c.has_value());  // 4 <= 6 pointwise, both members
  CHECK_FALSE(c->witness.has_value());
  CHECK(replay_order(m, *c));
  CHECK_FALSE(leq(m, Element{{Int(7)}}, Element{{Int(6)}}).has_value());

  std::vector<Element> pool = enumerate_elements(m, Int(20));
  for (const Element& x : pool)
    for (const Element& y : pool)
      CHECK(leq(m, x, y).has_value() == oracle::leq(m, x, y));
}

TEST_CASE("order is a partial order on members") {
  for (const SemigroupModel& m : {w2(), ds11()}) {
    std::vector<Element> pool = enumerate_elements(m, Int(12));
    for (const Element& x : pool) {
      CHECK(leq(m, x, x).has_value());
      for (const Element& y : pool) {
        bool xy = leq(m, x, y).has_value();
        if (xy && leq(m, y, x).has_value()) CHECK(x == y);
        if (!xy) continue;
        for (const Element& z : pool)
          if (leq(m, y, z).has_value()) CHECK(leq(m, x, z).has_value());
      }
    }
  }
}

TEST_CASE("propto finds the smallest multiplier and replays") {
  SemigroupModel m = w2();
  auto p = propto(m, Element{{Int(3)}}, Element{{Int(4)}}, Int(10));
  REQUIRE(p.has_value());
  CHECK(p->n == 3);  // 3 <= 12 = 3*4, and 3 <= 4, 3 <= 8 both fail
  CHECK(replay_propto(m, Element{{Int(3)}}, Element{{Int(4)}}, *p));
  CHECK_FALSE(leq_raw(m, Element{{Int(3)}}, Element{{Int(8)}}));

  CHECK(propto_obstructed(m, Element{{Int(3)}}, Element{{Int(0)}}));
  CHECK_FALSE(propto(m, Element{{Int(3)}}, Element{{Int(0)}}, Int(10)).has_value());
  CHECK_FALSE(propto_obstructed(m, Element{{Int(0)}}, Element{{Int(3)}}));

  ProptoCertificate tampered = *p;
  tampered.n = 2;
  CHECK_FALSE(replay_propto(m, Element{{Int(3)}}, Element{{Int(4)}}, tampered));
}

TEST_CASE("value policing rejects out-of-contract inputs") {
  SemigroupModel m = w2();
  CHECK_THROWS_WITH_AS(member(m, Element{{Int(49)}}), doctest::Contains("bound"),
                       Error);
  CHECK_THROWS_AS(member(m, Element{{Int(-1)}}), Error);
  CHECK_THROWS_AS(member(m, Element{{Int(1), Int(1)}}), Error);
  CHECK_THROWS_AS(SemigroupModel(NumericalKind{{Int(-2)}}, OrderMode::Algebraic, Int(10)),
                  Error);
}

TEST_CASE("zero generators normalize away, leaving the trivial model") {
  SemigroupModel t(NumericalKind{{Int(0)}}, OrderMode::Algebraic, Int(10));
  CHECK_FALSE(t.has_nonzero_member());
  CHECK(t.contains(Element{{Int(0)}}));
  CHECK_FALSE(t.contains(Element{{Int(1)}}));
  SemigroupModel e(NumericalKind{{}}, OrderMode::Algebraic, Int(10));
  CHECK_FALSE(e.has_nonzero_member());
  CHECK(enumerate_elements(e, Int(10)).size() == 1);
}

TEST_CASE("model structure accessors") {
  SemigroupModel m = family_womega(3);
  CHECK(m.is_direct_sum());
  CHECK(m.flat_dim() == 3);
  CHECK(m.leaves().size() == 3);
  CHECK(m.all_leaves_numerical());
  CHECK(m.has_nonzero_member());
  CHECK(m.component_offsets() == std::vector<std::size_t>{0, 1, 2});

  SemigroupModel raised = m.with_element_bound(Int(1000));
  CHECK(raised.element_bound() == 1000);
  CHECK(raised.flat_dim() == m.flat_dim());

  SemigroupModel single = w1_pair();
  CHECK(single.flat_dim() == 1);

  // The predicate is about the semigroup, not the bounded window.
  SemigroupModel narrow(NumericalKind{{Int(5)}}, OrderMode::Algebraic, Int(4));
  CHECK(narrow.has_nonzero_member());
  CHECK(enumerate_elements(narrow, Int(4)).size() == 1);
}

TEST_CASE("default search horizon is positive and scales with the model") {
  CHECK(default_kmax(w2()) > 0);
  CHECK(default_kmax(family_wn(5)) > default_kmax(family_wn(1)));
}

}  // TEST_SUITE
