#pragma once

#include <optional>
#include <vector>

#include "oscomp/model.hpp"
#include "oscomp/simplex.hpp"

namespace oscomp {

/**
 * Normalized states at y as an exact rational polyhedral cone slice.
 *
 * A state is an additive, order-preserving functional on the order ideal of
 * y with f(y) = 1, extended by +infinity off the ideal. On these models every
 * such functional is represented by a rational vector v acting by inner
 * product on the flat coordinates of the ideal's support:
 *     v . g >= 0   for each generator g of the ideal of y,
 *     v . y == 1.
 *
 * For a direct sum, the ideal of y is supported on the components where y is
 * nonzero (per-component ideals, embedded); components outside the support
 * carry no variables and no rows. The cone is marked incomplete when ideal
 * membership of some generator could not be decided at the bound; NO verdicts
 * are never drawn from an incomplete cone.
 */
struct StateCone {
  std::vector<std::size_t> support_coords;   // flat coords carrying variables
  std::vector<std::vector<Int>> ineq_rows;   // restricted generator rows
  std::vector<Int> normal_row;               // restricted y, v.y == 1
  bool empty = false;                        // no state exists at y
  bool complete = true;
  Element normalizer;
};

// Builds the cone; Algebraic order only. Throws ZeroNormalizer when y == 0
// and UnsupportedOrderMode in induced mode.
StateCone state_cone(const SemigroupModel& m, const Element& y, const Int& propto_n_max);

enum class StatesOutcome { True, False, Unknown };

struct StatesVerdict {
  StatesOutcome outcome;
  std::optional<Rat> max_value;  // sup of f(x), when finite and computed
  bool unbounded = false;        // sup of f(x) is +infinity over the cone
  bool cone_empty = false;
  bool cone_complete = true;
  std::optional<ProptoCertificate> propto_cert;
};

/**
 * State-functional criterion for stable domination: x propto y and
 * f(x) < 1 for every normalized state f at y (vacuous when no state exists).
 * Exact rational maximization; strictness is decided exactly. False is only
 * reported decisively: either a coordinate obstruction to x propto y, or a
 * complete cone whose maximum reaches 1.
 */
StatesVerdict stable_dom_via_states(const SemigroupModel& m, const Element& x,
                                    const Element& y, const Int& propto_n_max);

}  // namespace oscomp
