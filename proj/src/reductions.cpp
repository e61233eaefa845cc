#include "oscomp/reductions.hpp"

#include <string>

namespace oscomp {

namespace {

OrderCertificate make_cert(const SemigroupModel& m, Element lhs, Element rhs) {
  OrderCertificate oc{std::move(lhs), std::move(rhs), m.order_mode(), std::nullopt};
  if (m.order_mode() == OrderMode::Algebraic) oc.witness = *element_sub(oc.rhs, oc.lhs);
  return oc;
}

Element y_block(const SemigroupModel& m, const CfpInstance& inst, std::size_t j,
                std::size_t block_len) {
  Element z = m.zero();
  for (std::size_t i = 0; i < block_len; ++i)
    z = element_add(z, inst.y_seq.term(j * block_len + i));
  return z;
}

GroupingCertificate build_grouping(const SemigroupModel& m, const CfpInstance& inst,
                                   const OmegaOracle& oracle, const Int& block_cap,
                                   bool require_fullness) {
  validate_cfp_instance(m, inst, /*strong=*/false, require_fullness);
  if (block_cap < 1) fail(Errc::PreconditionViolated, "need at least one block");
  std::size_t block_len = to_index(inst.multiplier) + 1;
  std::size_t cap = to_index(block_cap);
  std::vector<Element> blocks;
  blocks.reserve(cap);
  for (std::size_t j = 0; j < cap; ++j) blocks.push_back(y_block(m, inst, j, block_len));

  std::optional<Int> n = oracle(m, inst.xprime, blocks);
  if (!n) fail(Errc::OracleFailure, "the comparison oracle found no index below the cap");
  std::size_t n_idx = to_index(*n);
  if (n_idx >= blocks.size()) fail(Errc::OracleFailure, "the oracle answered past the cap");

  GroupingCertificate c;
  c.multiplier = inst.multiplier;
  c.n = *n;
  c.k = (*n + 1) * (inst.multiplier + 1);
  c.z_blocks.assign(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(n_idx) + 1);

  // Each block of multiplier+1 x terms sits above (multiplier+1) copies of
  // the first term and below multiplier times the matching y block.
  Element lhs = element_scale(inst.multiplier + 1, inst.x_seq.term(0));
  for (std::size_t j = 0; j <= n_idx; ++j) {
    Element rhs = element_scale(inst.multiplier, c.z_blocks[j]);
    if (!leq_raw(m, lhs, rhs))
      fail(Errc::OracleFailure, "block domination failed to verify at block " + std::to_string(j));
    c.dom_chain.push_back(make_cert(m, lhs, std::move(rhs)));
  }

  Element sum = m.zero();
  for (const Element& z : c.z_blocks) sum = element_add(sum, z);
  if (!leq_raw(m, inst.xprime, sum))
    fail(Errc::OracleFailure, "the oracle's index does not replay");
  c.final_cert = make_cert(m, inst.xprime, std::move(sum));
  return c;
}

ElementSequence drop_prefix(const ElementSequence& seq, std::size_t t) {
  ElementSequence out;
  if (t < seq.preamble.size()) {
    out.preamble.assign(seq.preamble.begin() + static_cast<std::ptrdiff_t>(t),
                        seq.preamble.end());
    out.period = seq.period;
    return out;
  }
  std::size_t d = (t - seq.preamble.size()) % seq.period.size();
  out.period.assign(seq.period.begin() + static_cast<std::ptrdiff_t>(d), seq.period.end());
  out.period.insert(out.period.end(), seq.period.begin(),
                    seq.period.begin() + static_cast<std::ptrdiff_t>(d));
  return out;
}

}  // namespace

OmegaOracle partial_sum_oracle() {
  return [](const SemigroupModel& m, const Element& xprime,
            const std::vector<Element>& z_blocks) -> std::optional<Int> {
    Element sum = m.zero();
    for (std::size_t j = 0; j < z_blocks.size(); ++j) {
      sum = element_add(sum, z_blocks[j]);
      if (leq_raw(m, xprime, sum)) return Int(j);
    }
    return std::nullopt;
  };
}

GroupingCertificate omega_to_cfp_grouping(const SemigroupModel& m, const CfpInstance& inst,
                                          const OmegaOracle& oracle, const Int& block_cap) {
  return build_grouping(m, sequence_form(inst), oracle, block_cap, /*require_fullness=*/true);
}

bool replay_grouping(const SemigroupModel& m, const CfpInstance& raw,
                     const GroupingCertificate& c) {
  CfpInstance inst = sequence_form(raw);
  if (c.n < 0 || c.multiplier < 1) return false;
  if (c.k != (c.n + 1) * (c.multiplier + 1)) return false;
  if (inst.multiplier != c.multiplier || inst.y_seq.period.empty()) return false;
  std::size_t n_idx = to_index(c.n);
  if (c.z_blocks.size() != n_idx + 1 || c.dom_chain.size() != n_idx + 1) return false;
  std::size_t block_len = to_index(c.multiplier) + 1;
  Element lhs = element_scale(c.multiplier + 1, inst.x_seq.term(0));
  Element sum = m.zero();
  for (std::size_t j = 0; j <= n_idx; ++j) {
    if (c.z_blocks[j] != y_block(m, inst, j, block_len)) return false;
    const OrderCertificate& oc = c.dom_chain[j];
    if (oc.lhs != lhs || oc.rhs != element_scale(c.multiplier, c.z_blocks[j])) return false;
    if (!replay_order(m, oc)) return false;
    sum = element_add(sum, c.z_blocks[j]);
  }
  if (c.final_cert.lhs != inst.xprime || c.final_cert.rhs != sum) return false;
  return replay_order(m, c.final_cert);
}

WeakGroupingResult weak_omega_to_cfp(const SemigroupModel& m, const CfpInstance& raw,
                                     const OmegaOracle& oracle, const Element& v_full,
                                     const Element& w_above, const Int& block_cap) {
  CfpInstance inst = sequence_form(raw);
  check_value(m, v_full, "v");
  check_value(m, w_above, "w");
  if (!m.contains(v_full) || !m.contains(w_above))
    fail(Errc::NoFullPair, "the full pair has a non-member");
  if (!leq_raw(m, v_full, w_above)) fail(Errc::NoFullPair, "v is not below w");
  Int sweep = inst.bound > 0 ? inst.bound : m.element_bound();
  if (!is_full_element(m, v_full, sweep)) fail(Errc::NoFullPair, "v is not full at the bound");

  validate_cfp_instance(m, inst, /*strong=*/false, /*require_fullness=*/false);

  // A y term that multiple-dominates the full v is itself full; past the last
  // term that fails this, the plain reduction applies.
  Int n_lim = m.all_leaves_numerical() ? max_conductor(m) + v_full.total() + 1 : sweep;
  auto dominates_v = [&](std::size_t i) {
    return propto_raw(m, v_full, inst.y_seq.term(i), n_lim).has_value();
  };
  std::size_t ypre = inst.y_seq.preamble.size();
  for (std::size_t i = ypre; i < inst.y_seq.window(); ++i)
    if (!dominates_v(i)) fail(Errc::NoFullPair, "the y tail never becomes full over v");
  std::size_t t = 0;
  for (std::size_t i = 0; i < ypre; ++i)
    if (!dominates_v(i)) t = i + 1;

  CfpInstance trimmed = inst;
  trimmed.x_seq = drop_prefix(inst.x_seq, t);
  trimmed.y_seq = drop_prefix(inst.y_seq, t);
  WeakGroupingResult r{build_grouping(m, trimmed, oracle, block_cap, /*require_fullness=*/false),
                       Int(t), std::move(trimmed)};
  return r;
}

CommonKChain sdom_common_k(const SemigroupModel& m, const Element& x, const Element& y,
                           const Element& z, const Int& k_max) {
  check_value(m, x, "x");
  check_value(m, y, "y");
  check_value(m, z, "z");
  for (const Element* e : {&x, &y, &z})
    if (!m.contains(*e)) fail(Errc::PreconditionViolated, "inputs must be members");
  auto smallest = [&](const Element& a, const Element& b, const char* what) -> Int {
    for (Int k = 1; k <= k_max; ++k)
      if (leq_raw(m, element_scale(k + 1, a), element_scale(k, b))) return k;
    fail(Errc::PreconditionViolated, std::string(what) + " is not certified within k_max");
  };
  CommonKChain c;
  c.m1 = smallest(x, y, "x <_s y");
  c.m2 = smallest(y, z, "y <_s z");
  // Past (m+1)m the multiplier can only keep working, so the larger of the
  // two thresholds serves every inequality in the chain at once.
  c.k = (c.m1 + 1) * c.m1;
  Int k2 = (c.m2 + 1) * c.m2;
  if (k2 > c.k) c.k = k2;
  if (c.k < 1) c.k = 1;
  Element tx = element_scale(c.k + 1, x);
  Element ty = element_scale(c.k, y);
  Element ty1 = element_scale(c.k + 1, y);
  Element tz = element_scale(c.k, z);
  if (!leq_raw(m, tx, ty) || !leq_raw(m, ty, ty1) || !leq_raw(m, ty1, tz))
    fail(Errc::OracleFailure, "the tail bound broke on a certified pair");
  c.c1 = make_cert(m, std::move(tx), ty);
  c.c2 = make_cert(m, std::move(ty), ty1);
  c.c3 = make_cert(m, std::move(ty1), std::move(tz));
  return c;
}

bool replay_common_k(const SemigroupModel& m, const Element& x, const Element& y,
                     const Element& z, const CommonKChain& c) {
  if (c.k < 1) return false;
  if (c.c1.lhs != element_scale(c.k + 1, x) || c.c1.rhs != element_scale(c.k, y)) return false;
  if (c.c2.lhs != c.c1.rhs || c.c2.rhs != element_scale(c.k + 1, y)) return false;
  if (c.c3.lhs != c.c2.rhs || c.c3.rhs != element_scale(c.k, z)) return false;
  return replay_order(m, c.c1) && replay_order(m, c.c2) && replay_order(m, c.c3);
}

}  // namespace oscomp
