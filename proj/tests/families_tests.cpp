#include <set>

#include "doctest.h"
#include "oscomp/families.hpp"
#include "oscomp/json_io.hpp"

using namespace oscomp;

TEST_SUITE("families") {

TEST_CASE("the staircase levels carry consecutive generators") {
  for (Int n = 1; n <= 6; ++n) {
    SemigroupModel m = family_wn(n);
    REQUIRE(m.is_numerical());
    const auto& gens = m.flat_generators();
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].value() == n + 1);
    CHECK(gens[1].value() == n + 2);
    CHECK(m.element_bound() == 4 * (n + 1) * (n + 2));
    CHECK(m.order_mode() == OrderMode::Algebraic);
    FrobeniusResult f = frobenius(m);
    REQUIRE(f.value.has_value());
    CHECK(*f.value == n * n + n - 1);
  }
}

TEST_CASE("the truncated tower stacks the levels in order") {
  SemigroupModel m = family_womega(3);
  REQUIRE(m.is_direct_sum());
  auto leaves = m.leaves();
  REQUIRE(leaves.size() == 3);
  CHECK(m.flat_dim() == 3);
  CHECK(m.component_offsets() == std::vector<std::size_t>({0, 1, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& gens = leaves[i].model->flat_generators();
    CHECK(gens[0].value() == Int(i) + 2);  // level i+1 starts at i+2
    CHECK(gens[1].value() == Int(i) + 3);
  }
  // the tower bound covers its deepest level
  CHECK(m.element_bound() == family_wn(3).element_bound());

  // levels embed: a supported-on-one-level element is a member exactly when
  // the level accepts it
  Element e = m.zero();
  e.coords[1] = 4;
  CHECK(m.contains(e));
  e.coords[1] = 5;
  CHECK_FALSE(m.contains(e));
}

TEST_CASE("the free model accepts everything under its bound") {
  SemigroupModel m = family_zplus(Int(10));
  REQUIRE(m.is_numerical());
  CHECK(m.flat_generators().size() == 1);
  CHECK(m.flat_generators()[0].value() == 1);
  for (Int v = 0; v <= 10; ++v) CHECK(m.contains(Element{{v}}));
}

TEST_CASE("seeded models are reproducible and policed") {
  RandomModelParams p;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SemigroupModel a = random_model(seed, p);
    SemigroupModel b = random_model(seed, p);
    CHECK(model_to_json(a) == model_to_json(b));
    REQUIRE(a.is_numerical());
    // normalization may drop redundant draws, so only the ceiling survives
    const auto& gens = a.flat_generators();
    CHECK(gens.size() >= 1);
    CHECK(gens.size() <= p.max_generators);
    for (const Element& g : gens) {
      CHECK(g.value() >= 1);
      CHECK(g.value() <= Int(p.max_value));
    }
    CHECK(a.element_bound() == p.element_bound);
  }
}

TEST_CASE("different seeds explore different models") {
  RandomModelParams p;
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    seen.insert(model_to_json(random_model(seed, p)).dump());
  CHECK(seen.size() > 10);
}

TEST_CASE("the affine flag switches the corpus shape") {
  RandomModelParams p;
  p.affine = true;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SemigroupModel m = random_model(seed, p);
    REQUIRE(m.is_affine());
    CHECK(m.flat_dim() == p.dimension);
    for (const Element& g : m.flat_generators()) {
      REQUIRE(g.coords.size() == p.dimension);
      bool nonzero = false;
      for (const Int& c : g.coords) {
        CHECK(c >= 0);
        CHECK(c <= Int(p.coord_cap));
        nonzero |= c != 0;
      }
      CHECK(nonzero);
    }
  }
}

}  // TEST_SUITE
