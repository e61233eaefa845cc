#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oscomp/model.hpp"
#include "oscomp/statecone.hpp"

namespace oscomp {

enum class Verdict { Holds, FailsWithWitness, UnknownAtBound };

const char* verdict_name(Verdict v);

// Largest absolute conductor over the numerical leaves: every multiple of a
// leaf gcd at or past it lies in that leaf. Zero when no leaf has gaps.
Int max_conductor(const SemigroupModel& m);

// True when the coordinatewise criterion for stable domination is exact:
// induced order, or algebraic order with every leaf numerical.
bool sdom_exact(const SemigroupModel& m);

// True iff every element of `members` is propto-below x within n_full scans.
// x = 0 qualifies only in the zero model.
bool full_against_list(const SemigroupModel& m, const Element& x,
                       const std::vector<Element>& members, const Int& n_full);

// Evidence for x <_s y: the order certificate proves (k+1)x <= ky.
struct StableDomCertificate {
  Int k;
  OrderCertificate inner;
};

// Smallest k <= k_max with (k+1)x <= ky, or nullopt. An empty result means
// "not found below k_max", not a refutation; use the state criterion or
// classify_stable_dom for decisive negatives.
std::optional<StableDomCertificate> stably_dominated(const SemigroupModel& m, const Element& x,
                                                     const Element& y, const Int& k_max);

bool replay_stable_dom(const SemigroupModel& m, const Element& x, const Element& y,
                       const StableDomCertificate& c);

// Checks (k+1)x <= ky for every k in [m(m+1), m(m+1) + probe_extra], where m
// is `multiplier` and (m+1)x <= my must already hold (re-verified here).
// A false return means the tail bound is broken, which should never happen.
bool tail_property_check(const SemigroupModel& model, const Element& x, const Element& y,
                         const Int& multiplier, const Int& probe_extra);

enum class DomStatus { Yes, No, Unknown };

struct DomScan {
  DomStatus status = DomStatus::Unknown;
  std::optional<StableDomCertificate> cert;   // present on Yes
  std::optional<std::size_t> blocking_coord;  // present on No
  bool exact = false;                         // classification cannot return Unknown
};

// Unpoliced three-way classification of x <_s y for internal sweeps; inputs
// must be members but are not bound-checked. A coordinate with 0 < x_i and
// y_i <= x_i refutes decisively in every model. With induced order, or with
// algebraic order over all-numerical leaves, the absence of such a coordinate
// is decisive the other way and k_scan_limit is ignored; otherwise the scan
// stops at k_scan_limit and reports Unknown.
DomScan classify_stable_dom(const SemigroupModel& m, const Element& x, const Element& y,
                            const Int& k_scan_limit);

struct AgreementEntry {
  Element x, y;
  Int k_used;
  std::optional<StableDomCertificate> scan;
  std::optional<StatesVerdict> states;  // absent for y = 0, where no state normalizes
  bool decisive_disagreement = false;
  bool bound_exhaustion = false;  // states certain, scan exhausted
};

struct AgreementReport {
  std::vector<AgreementEntry> entries;
  std::size_t decisive_disagreements = 0;
  std::size_t bound_exhaustions = 0;
};

// Cross-checks the multiplier-scan criterion against the state criterion on
// the given pairs. k_max is clamped per pair so the scan stays within the
// element bound; n_max feeds the propto side of the state criterion.
AgreementReport check_sdom_agreement(const SemigroupModel& m,
                                     const std::vector<std::pair<Element, Element>>& pairs,
                                     const Int& k_max, const Int& n_max);

struct NComparisonWitness {
  Element x;
  std::vector<Element> ys;
  std::vector<StableDomCertificate> dom_certs;
};

struct ComparisonVerdict {
  Verdict status = Verdict::UnknownAtBound;
  Int n = 0;
  Int bound = 0;
  bool weak = false;
  std::optional<NComparisonWitness> witness;
};

// Exhaustive bounded test: over all members x and (n+1)-tuples (y_0..y_n) of
// members with totals <= bound (weak mode restricts the y pool to full
// elements), does x <_s y_j for all j force x <= y_0+...+y_n? The witness on
// failure is the graded-lex-first counterexample: smallest x, then the
// lexicographically first nondecreasing tuple. n = 0 is almost unperforation.
// Holds degrades to UnknownAtBound when some pair resisted classification.
ComparisonVerdict n_comparison(const SemigroupModel& m, const Int& n, const Int& bound,
                               bool weak);

bool replay_n_comparison(const SemigroupModel& m, const ComparisonVerdict& v);

// True iff every member y with total <= bound has y <= n*x for some n (the
// multiplier horizon is decisive for numerical leaves). x = 0 qualifies only
// when the model has no nonzero member.
bool is_full_element(const SemigroupModel& m, const Element& x, const Int& bound);

}  // namespace oscomp
