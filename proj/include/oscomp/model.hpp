#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "oscomp/errors.hpp"
#include "oscomp/ints.hpp"

namespace oscomp {

/**
 * Positively ordered abelian semigroups given by finite generating data.
 *
 * Three kinds of model:
 *   - Numerical: a sub-semigroup of the non-negative integers.
 *   - Affine:    a finitely generated sub-semigroup of Z^d_{>=0}.
 *   - DirectSum: a finite direct sum of component models.
 *
 * Elements are stored as dense non-negative integer vectors in the model's
 * flattened coordinate space (numerical models have one coordinate, direct
 * sums concatenate their components). The zero element is always a member.
 *
 * Two order modes:
 *   - Algebraic: x <= y iff y = x + z for some member z (the default).
 *   - Induced:   coordinatewise integer order restricted to members.
 *
 * element_bound is the enumeration/search horizon for bounded procedures.
 * Membership itself is decidable at any size; the bound is a policy limit
 * on inputs and sweeps, not a decidability limit.
 */

enum class OrderMode { Algebraic, Induced };

class SemigroupModel;

struct NumericalKind {
  std::vector<Int> generators;  // strictly positive, sorted, deduplicated
};

struct AffineKind {
  std::size_t dimension = 0;
  std::vector<std::vector<Int>> generators;  // non-negative, nonzero, deduplicated
};

struct DirectSumKind {
  std::vector<SemigroupModel> components;
};

struct Element {
  std::vector<Int> coords;

  bool is_zero() const;
  // Grading used by enumeration order and the bound policy: coordinate sum.
  Int total() const;
  const Int& value() const;  // numerical elements only (single coordinate)

  bool operator==(const Element& o) const { return coords == o.coords; }
  bool operator!=(const Element& o) const { return coords != o.coords; }
};

// Graded lexicographic order: by total, then by coordinate vector.
bool graded_lex_less(const Element& a, const Element& b);

Element element_add(const Element& a, const Element& b);
Element element_scale(const Int& n, const Element& a);
// Componentwise difference hi - lo, or nullopt if any coordinate goes negative.
std::optional<Element> element_sub(const Element& hi, const Element& lo);

// Acceleration table for a numerical kind: everything is reduced by the gcd
// of the generators. Built eagerly at model construction; immutable after.
struct NumericalTable {
  Int gcd;                  // 0 when the generator list is empty
  Int frobenius_reduced;    // largest gap of W/gcd; -1 when there is none
  std::vector<char> member_reduced;  // membership of W/gcd on [0, limit]
  Int limit;                // table certified: every value > limit is a member
};

class SemigroupModel {
 public:
  using KindVariant = std::variant<NumericalKind, AffineKind, DirectSumKind>;

  SemigroupModel(KindVariant kind, OrderMode mode, Int element_bound);
  SemigroupModel(const SemigroupModel&);
  SemigroupModel(SemigroupModel&&) noexcept;
  SemigroupModel& operator=(const SemigroupModel&);
  SemigroupModel& operator=(SemigroupModel&&) noexcept;
  ~SemigroupModel();

  const KindVariant& kind() const { return kind_; }
  bool is_numerical() const { return std::holds_alternative<NumericalKind>(kind_); }
  bool is_affine() const { return std::holds_alternative<AffineKind>(kind_); }
  bool is_direct_sum() const { return std::holds_alternative<DirectSumKind>(kind_); }
  const NumericalKind& numerical() const;
  const AffineKind& affine() const;
  const DirectSumKind& direct_sum() const;

  OrderMode order_mode() const { return order_mode_; }
  const Int& element_bound() const { return element_bound_; }
  std::size_t flat_dim() const { return flat_dim_; }

  // Flat coordinate offset of each direct-sum component.
  const std::vector<std::size_t>& component_offsets() const;

  // Leaf decomposition of the flattened coordinate space: a leaf is a maximal
  // non-direct-sum sub-model. Numerical leaves span one coordinate. Computed
  // on demand so the pointers always refer to this object's own components.
  struct Leaf {
    std::size_t offset;
    std::size_t dim;
    const SemigroupModel* model;
  };
  std::vector<Leaf> leaves() const;
  // True when every leaf is numerical (coordinatewise-decomposable membership).
  bool all_leaves_numerical() const { return all_leaves_numerical_; }

  const NumericalTable& table() const;  // numerical models only

  // Embedded generators of the whole model, in canonical order.
  const std::vector<Element>& flat_generators() const { return flat_generators_; }

  bool has_nonzero_member() const { return !flat_generators_.empty(); }

  // Same generating data and order mode; element_bound may differ.
  bool same_structure(const SemigroupModel& o) const;

  SemigroupModel with_element_bound(Int bound) const;

  Element zero() const;

  // Exact membership, any size, no bound policing. Coordinates must be >= 0.
  bool contains(const Element& v) const;

  // Lexicographically smallest generator-coefficient vector, or nullopt.
  std::optional<std::vector<Int>> factorization(const Element& v) const;

 private:
  void validate_and_finish();
  void collect_leaves(std::size_t base_offset, std::vector<Leaf>* out) const;
  bool contains_affine(const std::vector<Int>& v) const;

  KindVariant kind_;
  OrderMode order_mode_;
  Int element_bound_;
  std::size_t flat_dim_ = 0;
  std::vector<std::size_t> component_offsets_;
  bool all_leaves_numerical_ = true;
  std::shared_ptr<const NumericalTable> table_;
  std::vector<Element> flat_generators_;
};

// ---- Bounded operations (spec surface) ----

// Validates an element for use as an op input: dimension, non-negativity,
// and total() <= element_bound. Throws on violation.
void check_value(const SemigroupModel& m, const Element& v, const char* role);

struct MemberResult {
  bool member;
  std::optional<std::vector<Int>> factorization;  // lex-smallest, present iff member
};

// Membership with factorization; enforces the element bound on the input.
MemberResult member(const SemigroupModel& m, const Element& v);

enum class FrobeniusReason { Finite, NoGaps, InfinitelyManyGaps };

struct FrobeniusResult {
  std::optional<Int> value;
  FrobeniusReason reason;
};

// Largest non-member of a numerical model, or None with a reason.
FrobeniusResult frobenius(const SemigroupModel& m);

// All members with total() <= bound, in graded lexicographic order.
std::vector<Element> enumerate_elements(const SemigroupModel& m, const Int& bound);

/**
 * Replayable witness for x <= y. In algebraic mode the witness z satisfies
 * y = x + z with z a member; in induced mode there is no witness and replay
 * re-checks memberships plus the coordinatewise inequality.
 */
struct OrderCertificate {
  Element lhs;
  Element rhs;
  OrderMode mode;
  std::optional<Element> witness;
};

// Decides x <= y in the model's order mode. Inputs must be members in bound.
std::optional<OrderCertificate> leq(const SemigroupModel& m, const Element& x, const Element& y);

// Re-evaluates a stored certificate from scratch (no bound policing).
bool replay_order(const SemigroupModel& m, const OrderCertificate& c);

// Internal order test without input policing; used by sweeps that manage
// their own horizons. Does not check membership of x or y.
bool leq_raw(const SemigroupModel& m, const Element& x, const Element& y);

struct ProptoCertificate {
  Int n;
  OrderCertificate inner;  // x <= n*y
};

// Smallest n <= n_max with x <= n*y, or nullopt. The scan also stops when
// n*y would leave the element bound.
std::optional<ProptoCertificate> propto(const SemigroupModel& m, const Element& x,
                                        const Element& y, const Int& n_max);

// Unpoliced multiplier scan for internal sweeps: no membership or bound
// checks on the inputs, no element-bound horizon on the scan.
std::optional<Int> propto_raw(const SemigroupModel& m, const Element& x, const Element& y,
                              const Int& n_max);

bool replay_propto(const SemigroupModel& m, const Element& x, const Element& y,
                   const ProptoCertificate& c);

// True when some coordinate has y_i = 0 but x_i > 0: then x <= n*y fails for
// every n, decisively (for all-numerical-leaf models this refutes x propto y).
bool propto_obstructed(const SemigroupModel& m, const Element& x, const Element& y);

// Default search horizon: 4 * (frobenius-style horizon + largest generator).
Int default_kmax(const SemigroupModel& m);

}  // namespace oscomp
