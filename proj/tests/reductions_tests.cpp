#include "doctest.h"
#include "oracles.hpp"
#include "oscomp/families.hpp"
#include "oscomp/reductions.hpp"

using namespace oscomp;

namespace {

Element el(Int v) { return Element{{std::move(v)}}; }

CfpInstance w2_const_instance() {
  CfpInstance inst;
  inst.xprime = el(3);
  inst.x_seq.period = {el(3)};
  inst.y_seq.period = {el(4)};
  inst.multiplier = 3;
  return inst;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("grouping reduction produces the frozen certificate") {
  SemigroupModel m = family_wn(2);
  CfpInstance inst = w2_const_instance();
  GroupingCertificate c = omega_to_cfp_grouping(m, inst, partial_sum_oracle(), Int(16));
  CHECK(c.multiplier == 3);
  CHECK(c.n == 0);
  CHECK(c.k == 4);  // (n+1) * (multiplier+1)
  REQUIRE(c.z_blocks.size() == 1);
  CHECK(c.z_blocks[0] == el(16));  // four consecutive y terms
  CHECK(replay_grouping(m, inst, c));

  // the blocks are sums of consecutive y terms, re-derived here
  Int sum = 0;
  for (int i = 0; i < 4; ++i) sum += 4;
  CHECK(c.z_blocks[0].coords[0] == sum);
}

TEST_CASE("grouping replay rejects every tampered field") {
  SemigroupModel m = family_wn(2);
  CfpInstance inst = w2_const_instance();
  GroupingCertificate good = omega_to_cfp_grouping(m, inst, partial_sum_oracle(), Int(16));

  GroupingCertificate bad = good;
  bad.k = 5;
  CHECK_FALSE(replay_grouping(m, inst, bad));

  bad = good;
  bad.z_blocks[0] = el(12);
  CHECK_FALSE(replay_grouping(m, inst, bad));

  bad = good;
  bad.dom_chain[0].witness = el(33);
  CHECK_FALSE(replay_grouping(m, inst, bad));

  bad = good;
  bad.final_cert.rhs = el(20);
  CHECK_FALSE(replay_grouping(m, inst, bad));

  bad = good;
  bad.n = 1;
  CHECK_FALSE(replay_grouping(m, inst, bad));
}

TEST_CASE("single-element instances reduce like their constant sequence") {
  SemigroupModel m = family_wn(2);
  CfpInstance seq_form = w2_const_instance();
  CfpInstance single;
  single.xprime = el(3);
  single.x_single = el(3);
  single.y_seq.period = {el(4)};
  single.multiplier = 3;

  GroupingCertificate a = omega_to_cfp_grouping(m, seq_form, partial_sum_oracle(), Int(16));
  GroupingCertificate b = omega_to_cfp_grouping(m, single, partial_sum_oracle(), Int(16));
  CHECK(a.n == b.n);
  CHECK(a.k == b.k);
  CHECK(a.z_blocks == b.z_blocks);
  CHECK(replay_grouping(m, single, b));
}

TEST_CASE("a refusing or out-of-range oracle trips the failure tripwire") {
  SemigroupModel m = family_wn(2);
  CfpInstance inst = w2_const_instance();
  OmegaOracle refuse = [](const SemigroupModel&, const Element&,
                          const std::vector<Element>&) { return std::nullopt; };
  CHECK_THROWS_WITH_AS(omega_to_cfp_grouping(m, inst, refuse, Int(16)),
                       doctest::Contains("OracleFailure"), Error);

  OmegaOracle out_of_range = [](const SemigroupModel&, const Element&,
                                const std::vector<Element>& blocks) {
    return std::optional<Int>(Int(blocks.size()) + 7);
  };
  CHECK_THROWS_AS(omega_to_cfp_grouping(m, inst, out_of_range, Int(16)), Error);
}

TEST_CASE("a non-minimal oracle answer still yields a valid certificate") {
  SemigroupModel m = family_wn(2);
  CfpInstance inst = w2_const_instance();
  OmegaOracle lazy = [](const SemigroupModel&, const Element&,
                        const std::vector<Element>&) { return std::optional<Int>(Int(2)); };
  GroupingCertificate c = omega_to_cfp_grouping(m, inst, lazy, Int(16));
  CHECK(c.n == 2);
  CHECK(c.k == 12);
  CHECK(c.z_blocks.size() == 3);
  CHECK(replay_grouping(m, inst, c));
}

TEST_CASE("the weak reduction trims the non-full prefix") {
  SemigroupModel m = family_wn(1).with_element_bound(Int(40));
  CfpInstance inst;
  inst.xprime = el(0);
  inst.x_seq = ElementSequence{{el(0)}, {el(2)}};
  inst.y_seq = ElementSequence{{el(0)}, {el(2)}};
  inst.multiplier = 1;
  inst.bound = 40;

  WeakGroupingResult r =
      weak_omega_to_cfp(m, inst, partial_sum_oracle(), el(2), el(4), Int(16));
  CHECK(r.trim == 1);  // y_0 = 0 never dominates the full element 2
  CHECK(r.cert.n == 0);
  CHECK(r.cert.k == 2);
  CHECK(replay_grouping(m, r.trimmed, r.cert));
  CHECK(r.trimmed.y_seq.preamble.empty());
  CHECK(r.cert.z_blocks[0] == el(4));  // blocks drawn from the trimmed tail

  // plain grouping keeps the zero prefix inside its first block
  GroupingCertificate raw = omega_to_cfp_grouping(m, inst, partial_sum_oracle(), Int(16));
  CHECK(raw.z_blocks[0] == el(2));
}

TEST_CASE("the weak reduction polices its full pair") {
  SemigroupModel m = family_wn(1).with_element_bound(Int(40));
  CfpInstance inst;
  inst.xprime = el(0);
  inst.x_seq.period = {el(2)};
  inst.y_seq.period = {el(2)};
  inst.multiplier = 1;
  inst.bound = 40;
  // 0 is not a full element
  CHECK_THROWS_WITH_AS(weak_omega_to_cfp(m, inst, partial_sum_oracle(), el(0), el(4), Int(16)),
                       doctest::Contains("full"), Error);
  // 4 is not below 2
  CHECK_THROWS_AS(weak_omega_to_cfp(m, inst, partial_sum_oracle(), el(4), el(2), Int(16)),
                  Error);
}

TEST_CASE("two dominations share a multiplier with the frozen chain") {
  SemigroupModel m = family_wn(2);
  CommonKChain c = sdom_common_k(m, el(3), el(4), el(6), Int(200));
  CHECK(c.k == 12);
  CHECK(c.m1 == 3);
  CHECK(c.m2 == 2);
  CHECK(c.c1.lhs == el(39));  // (k+1) x
  CHECK(c.c1.rhs == el(48));  // k y
  CHECK(c.c2.lhs == el(48));
  CHECK(c.c2.rhs == el(52));  // (k+1) y
  CHECK(c.c3.lhs == el(52));
  CHECK(c.c3.rhs == el(72));  // k z
  CHECK(replay_common_k(m, el(3), el(4), el(6), c));

  CommonKChain bad = c;
  bad.k = 11;
  CHECK_FALSE(replay_common_k(m, el(3), el(4), el(6), bad));
  bad = c;
  bad.c2.witness = el(3);
  CHECK_FALSE(replay_common_k(m, el(3), el(4), el(6), bad));
}

TEST_CASE("the common multiplier witnesses transitivity across a member pool") {
  SemigroupModel m = family_wn(2).with_element_bound(Int(4000));
  std::vector<Element> pool = enumerate_elements(m, Int(10));
  for (const Element& x : pool)
    for (const Element& y : pool)
      for (const Element& z : pool) {
        if (!oracle::stable_dom_k(m, x, y, Int(30)) ||
            !oracle::stable_dom_k(m, y, z, Int(30)))
          continue;
        CommonKChain c = sdom_common_k(m, x, y, z, Int(200));
        CHECK(replay_common_k(m, x, y, z, c));
        // chaining the three certificates gives (k+1) x <= k z
        CHECK(oracle::leq(m, oracle::scale(c.k + 1, x), oracle::scale(c.k, z)));
      }
}

TEST_CASE("missing dominations are a precondition violation") {
  SemigroupModel m = family_wn(2);
  CHECK_THROWS_AS(sdom_common_k(m, el(4), el(3), el(6), Int(50)), Error);
}

}  // TEST_SUITE
