#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "oscomp/completion.hpp"

namespace oscomp {

/**
 * Replayable product of the grouping reduction: consecutive y terms are
 * summed into blocks of multiplier+1, an injected comparison oracle names the
 * block index n with x' below the first n+1 blocks, and the certificate pins
 * everything down with plain order certificates. Replay needs no oracle.
 *
 *   dom_chain[j]  (multiplier+1) * x_1 <= multiplier * z_j   for j = 0..n
 *   final_cert    x' <= z_0 + ... + z_n
 *   k             (n+1) * (multiplier+1), the factorization length in y terms
 */
struct GroupingCertificate {
  Int multiplier;
  Int n;
  Int k;
  std::vector<Element> z_blocks;
  std::vector<OrderCertificate> dom_chain;
  OrderCertificate final_cert;
};

// Answers: smallest index n with x' <= z_0 + ... + z_n, or nullopt. The
// blocks are handed over fully materialized up to the caller's cap.
using OmegaOracle = std::function<std::optional<Int>(
    const SemigroupModel& m, const Element& xprime, const std::vector<Element>& z_blocks)>;

// The honest default oracle: scans the partial sums directly.
OmegaOracle partial_sum_oracle();

GroupingCertificate omega_to_cfp_grouping(const SemigroupModel& m, const CfpInstance& inst,
                                          const OmegaOracle& oracle, const Int& block_cap);

bool replay_grouping(const SemigroupModel& m, const CfpInstance& inst,
                     const GroupingCertificate& c);

/**
 * Grouping reduction without eventual fullness of {x_n}: a full member v
 * below w compensates. The least index from which v is multiple-dominated by
 * every later y term is trimmed off both sequences; past it every y term is
 * full again and the plain reduction applies. NoFullPair when the given pair
 * fails to verify or no trim point exists.
 */
struct WeakGroupingResult {
  GroupingCertificate cert;
  Int trim;
  CfpInstance trimmed;  // the instance the certificate replays against
};

WeakGroupingResult weak_omega_to_cfp(const SemigroupModel& m, const CfpInstance& inst,
                                     const OmegaOracle& oracle, const Element& v_full,
                                     const Element& w_above, const Int& block_cap);

/**
 * A single multiplier past both tail thresholds for x <_s y <_s z, with the
 * three order certificates chaining (k+1)x <= ky <= (k+1)y <= kz. The
 * premises are re-certified by scan up to k_max first.
 */
struct CommonKChain {
  Int k;
  Int m1;
  Int m2;
  OrderCertificate c1;
  OrderCertificate c2;
  OrderCertificate c3;
};

CommonKChain sdom_common_k(const SemigroupModel& m, const Element& x, const Element& y,
                           const Element& z, const Int& k_max);

bool replay_common_k(const SemigroupModel& m, const Element& x, const Element& y,
                     const Element& z, const CommonKChain& c);

}  // namespace oscomp
