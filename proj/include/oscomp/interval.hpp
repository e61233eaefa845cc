#pragma once

#include <vector>

#include "oscomp/comparison.hpp"
#include "oscomp/model.hpp"

namespace oscomp {

/**
 * Intervals of a model: downward closed, upward directed subsets generated by
 * countable increasing sequences of members. Three representable shapes:
 *
 *   Principal  the downset of a single member g
 *   Chain      the union of the downsets of cap, cap+growth, cap+2*growth, ...
 *   Top        the downset of the whole model
 *
 * Chains are kept in a canonical form so that structural equality decides set
 * equality whenever every leaf of the base model is numerical: a coordinate
 * with positive growth swallows its cap (the cap entry is zeroed), and a chain
 * growing on every coordinate that can be positive at all collapses to Top.
 * With an affine leaf those rewrites are unsound, so the raw shape is kept and
 * comparisons fall back to bounded probes.
 */

enum class IntervalKind { Principal, Chain, Top };

const char* interval_kind_name(IntervalKind k);

class Interval {
 public:
  // Policed constructors for user-supplied data: caps must be members within
  // the element bound. `chain` also certifies the preamble increasing and the
  // arithmetic tail inside the model, then keeps only (last cap, growth).
  static Interval principal(const SemigroupModel& m, const Element& cap);
  static Interval chain(const SemigroupModel& m, const std::vector<Element>& preamble,
                        const Element& growth);
  static Interval top(const SemigroupModel& m);

  // Unpoliced constructors for values produced by interval arithmetic, where
  // membership is preserved structurally and totals may exceed the bound.
  static Interval raw_principal(const SemigroupModel& m, Element cap);
  static Interval raw_chain(const SemigroupModel& m, Element cap, Element growth);

  IntervalKind kind() const { return kind_; }
  bool is_top() const { return kind_ == IntervalKind::Top; }
  const Element& cap() const;     // Principal and Chain only
  const Element& growth() const;  // Chain only (nonzero)

  // Structural comparison of canonical forms. Decides set equality when every
  // leaf of the base is numerical.
  bool operator==(const Interval& o) const;
  bool operator!=(const Interval& o) const { return !(*this == o); }

 private:
  Interval() = default;

  IntervalKind kind_ = IntervalKind::Top;
  Element cap_;
  Element growth_;
};

// Three-valued membership probe, no input policing. Miss means the bounded
// scan was inconclusive (possible only for chains over a base with an affine
// leaf); the policed wrappers map it to their documented defaults.
enum class Probe3 { Yes, No, Miss };

Probe3 interval_member_probe(const SemigroupModel& m, const Interval& I, const Element& x);

// Membership of x in the interval. x must be a member within the element
// bound. An inconclusive chain probe counts as absent.
bool interval_member(const SemigroupModel& m, const Interval& I, const Element& x);

// Setwise sum {a + b}. Caps and growths add; Top absorbs.
Interval interval_add(const SemigroupModel& m, const Interval& I, const Interval& J);

// n-fold sum, n >= 0. n = 0 is the zero principal.
Interval interval_scale(const SemigroupModel& m, const Int& n, const Interval& I);

// Set containment I <= J. Exact for bases with all-numerical leaves; with an
// affine leaf a decisive answer is returned when the probes find one and
// UndecidableAtBound is raised otherwise.
bool interval_leq(const SemigroupModel& m, const Interval& I, const Interval& J);

// Compact containment: every increasing chain with supremum containing J
// eventually contains I. Principal I reduces to membership of its cap in J;
// a genuine chain or Top is never way-below anything unless the model is zero.
bool way_below(const SemigroupModel& m, const Interval& I, const Interval& J);

// An increasing interval chain given by finitely many explicit terms and a
// constant step added from the last term on: terms preamble[0], ...,
// preamble[k], preamble[k] + increment, preamble[k] + 2*increment, ...
struct IntervalChain {
  std::vector<Interval> preamble;
  Interval increment;
};

// Supremum (setwise union) of the chain. Verifies the preamble increasing
// under interval_leq first.
Interval sup_chain(const SemigroupModel& m, const IntervalChain& chain);

}  // namespace oscomp
