#pragma once

#include <optional>
#include <vector>

#include "oscomp/interval.hpp"

namespace oscomp {

// Every distinct interval representable at the bound: principals over the
// members with total <= bound, canonical chains with cap and nonzero growth
// drawn from the same pool, and optionally the whole-model interval.
std::vector<Interval> enumerate_intervals(const SemigroupModel& m, const Int& bound,
                                          bool include_top);

// True iff every member with total <= bound lies in some multiple of I. The
// multiple horizon is decisive when every leaf is numerical; otherwise a miss
// at the horizon counts against fullness.
bool interval_full(const SemigroupModel& m, const Interval& I, const Int& bound);

/**
 * The largest interval together with the evidence that it is an honest
 * supremum of principals: a full member whose multiples exhaust the model.
 * Candidates are assembled from minimal positive members per leaf and from
 * the generator sum; a model whose full candidates all overshoot the element
 * bound reports NoFullElement.
 */
struct LargestElement {
  Interval p;
  Element full_element;
  bool properly_infinite;
};

LargestElement largest_element(const SemigroupModel& m);

/**
 * Absorption checks over the representable intervals at a bound.
 *
 *   Q   no proper interval has a multiple equal to the largest one
 *   QQ  no interval acquires proper infiniteness by taking multiples
 *
 * Exact over bases with all-numerical leaves (canonical forms decide interval
 * equality); with an affine leaf the verdict is UnknownAtBound.
 */
enum class QMode { Q, QQ };

struct QVerdict {
  Verdict status;
  std::optional<Interval> witness_u;
  std::optional<Int> witness_multiplier;
};

QVerdict property_q_check(const SemigroupModel& m, QMode mode, const Int& bound);

// Fullness of the supremum of an increasing interval chain, tested against
// every principal representable at the bound. Exact for principal probes:
// a principal lies in a multiple of the supremum iff it lies in a multiple
// of some chain term.
bool is_full_sequence(const SemigroupModel& m, const IntervalChain& seq, const Int& bound);

// Bounded classification of stable domination between intervals:
// does (k+1)*I <= k*J hold for some k? Decisive both ways when every leaf is
// numerical (growth support and cap blocking refute; the conductor horizon
// confirms); Unknown only past an affine leaf's scan limit.
struct IntervalDomScan {
  DomStatus status;
  std::optional<Int> k;
};

IntervalDomScan interval_sdom(const SemigroupModel& m, const Interval& I, const Interval& J,
                              const Int& k_limit);

// Eventually periodic interval sequence: preamble then a repeating period.
struct IntervalSequence {
  std::vector<Interval> preamble;
  std::vector<Interval> period;  // nonempty
};

const Interval& sequence_term(const IntervalSequence& seq, const Int& i);

/**
 * Bounded search for the comparison index: given x' compactly below x and a
 * sequence of intervals each stably dominating x, find the smallest n with
 * x' <= y_0 + ... + y_n. Weak mode additionally requires every term full.
 * Preconditions are re-verified and raise PreconditionViolated.
 */
struct OmegaVerdict {
  std::optional<Int> n;
  Int k_max;
};

OmegaVerdict omega_comparison_check(const SemigroupModel& m, const Interval& xprime,
                                    const Interval& x, const IntervalSequence& y_seq,
                                    const Int& k_max, bool weak);

// Exhaustive surrogate over members at the bound: every stably dominated pair
// must already be multiple-dominated. Decisive per pair when the coordinate
// criterion is exact; otherwise misses degrade the verdict to UnknownAtBound.
struct SurrogateWitness {
  Element x;
  Element y;
};

struct SurrogateVerdict {
  Verdict status;
  std::optional<SurrogateWitness> witness;
};

SurrogateVerdict omega_surrogate_check(const SemigroupModel& m, const Int& bound,
                                       const Int& n_max);

// Eventually periodic member sequence.
struct ElementSequence {
  std::vector<Element> preamble;
  std::vector<Element> period;  // nonempty

  const Element& term(std::size_t i) const;
  std::size_t window() const { return preamble.size() + period.size(); }
};

/**
 * A factorization problem instance: x' compactly below the (eventually
 * constant) increasing sequence {x_n}, with x_n <= multiplier * y_n termwise.
 * Strong form fixes a single x instead of a sequence and drops the fullness
 * requirement. `bound` is the sweep horizon for the fullness check (0 means
 * the model's element bound).
 */
struct CfpInstance {
  Element xprime;
  std::optional<Element> x_single;  // strong form only
  ElementSequence x_seq;            // used when x_single is absent
  ElementSequence y_seq;
  Int multiplier = 1;
  Int bound = 0;
};

// An instance given in single-element form, read as the constant sequence.
// No-op when x_seq is already populated or x_single is absent.
CfpInstance sequence_form(const CfpInstance& inst);

// Re-verifies every instance precondition; throws on the first violation.
// require_fullness = false drops the eventual-fullness requirement on {x_n}
// (the weak reduction replaces it with a full pair and sequence trimming).
void validate_cfp_instance(const SemigroupModel& m, const CfpInstance& inst, bool strong,
                           bool require_fullness = true);

// Smallest k with x' <= y_1 + ... + y_k, with the replayable order
// certificate and the partial sums that led to it.
struct CfpVerdict {
  std::optional<Int> k;
  std::optional<OrderCertificate> cert;
  std::vector<Element> partial_sums;
  Int k_max;
};

CfpVerdict check_cfp(const SemigroupModel& m, const CfpInstance& inst, const Int& k_max,
                     bool strong);
bool replay_cfp(const SemigroupModel& m, const CfpInstance& inst, const CfpVerdict& v);

/**
 * Exhaustive constant-sequence scan at a bound: instances are triples
 * (x', x, y) of members with x' <= x and x <= mult*y for the smallest
 * mult <= m_max. Strong mode admits every x; plain mode restricts x to full
 * members. Each instance asks for the smallest k with x' <= k*y; continuous
 * mode replays that question through interval arithmetic. A miss below the
 * decisive horizon refutes; past it the verdict degrades to UnknownAtBound.
 */
struct CfpScanInstance {
  Element xprime;
  Element x;
  Element y;
  Int multiplier;
  std::optional<Int> k;
};

struct CfpScanVerdict {
  Verdict status;
  std::optional<CfpScanInstance> counterexample;
  std::optional<Int> max_k_needed;
  std::vector<CfpScanInstance> instances;
};

CfpScanVerdict cfp_scan(const SemigroupModel& m, const Int& bound, const Int& m_max,
                        const Int& k_max, bool strong, bool continuous);

}  // namespace oscomp
