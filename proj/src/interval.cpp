#include "oscomp/interval.hpp"

#include <algorithm>

namespace oscomp {

const char* interval_kind_name(IntervalKind k) {
  switch (k) {
    case IntervalKind::Principal: return "principal";
    case IntervalKind::Chain: return "chain";
    case IntervalKind::Top: return "top";
  }
  return "?";
}

namespace {

bool all_zero(const Element& e) {
  for (const Int& c : e.coords)
    if (c != 0) return false;
  return true;
}

// Coordinates that are positive in some member.
std::vector<char> live_coords(const SemigroupModel& m) {
  std::vector<char> live(m.flat_dim(), 0);
  for (const Element& g : m.flat_generators())
    for (std::size_t i = 0; i < g.coords.size(); ++i)
      if (g.coords[i] > 0) live[i] = 1;
  return live;
}

void check_shape(const SemigroupModel& m, const Interval& I, const char* role) {
  if (I.is_top()) return;
  if (I.cap().coords.size() != m.flat_dim())
    fail(Errc::IncompatibleModels, std::string(role) + " interval does not fit the model");
}

// Per-flat-coordinate owning leaf; valid only when every leaf is numerical
// (each leaf then spans exactly one coordinate).
std::vector<const SemigroupModel*> coordinate_leaves(const SemigroupModel& m) {
  std::vector<const SemigroupModel*> per(m.flat_dim(), nullptr);
  for (const auto& lf : m.leaves()) per[lf.offset] = lf.model;
  return per;
}

// a <= b in the one-coordinate order of a numerical leaf.
bool coord_leq(const SemigroupModel& m, const SemigroupModel* leaf, const Int& a, const Int& b) {
  if (a > b) return false;
  if (m.order_mode() == OrderMode::Induced) return true;
  return leaf->contains(Element{{b - a}});
}

}  // namespace

const Element& Interval::cap() const {
  if (kind_ == IntervalKind::Top) fail(Errc::WrongKind, "the top interval has no cap");
  return cap_;
}

const Element& Interval::growth() const {
  if (kind_ != IntervalKind::Chain) fail(Errc::WrongKind, "only chain intervals grow");
  return growth_;
}

bool Interval::operator==(const Interval& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == IntervalKind::Top) return true;
  if (cap_ != o.cap_) return false;
  return kind_ == IntervalKind::Principal || growth_ == o.growth_;
}

Interval Interval::top(const SemigroupModel& m) {
  // In the zero model every interval is {0}; collapsing keeps structural
  // equality faithful to set equality.
  if (!m.has_nonzero_member()) return raw_principal(m, m.zero());
  Interval r;
  r.kind_ = IntervalKind::Top;
  return r;
}

Interval Interval::raw_principal(const SemigroupModel& m, Element cap) {
  if (cap.coords.size() != m.flat_dim())
    fail(Errc::IncompatibleModels, "interval cap does not fit the model");
  Interval r;
  r.kind_ = IntervalKind::Principal;
  r.cap_ = std::move(cap);
  return r;
}

Interval Interval::raw_chain(const SemigroupModel& m, Element cap, Element growth) {
  if (cap.coords.size() != m.flat_dim() || growth.coords.size() != m.flat_dim())
    fail(Errc::IncompatibleModels, "interval data does not fit the model");
  if (all_zero(growth)) return raw_principal(m, std::move(cap));
  if (m.all_leaves_numerical()) {
    std::vector<char> live = live_coords(m);
    bool covers = true;
    for (std::size_t i = 0; i < live.size(); ++i)
      if (live[i] && growth.coords[i] == 0) covers = false;
    // Growth on every coordinate that can be positive reaches past any member.
    if (covers) return top(m);
    // A growing coordinate outranges its cap, so the cap entry is redundant.
    for (std::size_t i = 0; i < growth.coords.size(); ++i)
      if (growth.coords[i] > 0) cap.coords[i] = 0;
  }
  Interval r;
  r.kind_ = IntervalKind::Chain;
  r.cap_ = std::move(cap);
  r.growth_ = std::move(growth);
  return r;
}

Interval Interval::principal(const SemigroupModel& m, const Element& cap) {
  check_value(m, cap, "interval cap");
  if (!m.contains(cap)) fail(Errc::PreconditionViolated, "interval cap is not a member");
  return raw_principal(m, cap);
}

Interval Interval::chain(const SemigroupModel& m, const std::vector<Element>& preamble,
                         const Element& growth) {
  if (preamble.empty()) fail(Errc::PreconditionViolated, "chain interval needs a first term");
  for (const Element& e : preamble) {
    check_value(m, e, "chain term");
    if (!m.contains(e)) fail(Errc::PreconditionViolated, "chain term is not a member");
  }
  for (std::size_t i = 0; i + 1 < preamble.size(); ++i)
    if (!leq_raw(m, preamble[i], preamble[i + 1]))
      fail(Errc::NotIncreasing, "chain terms must be increasing");
  check_value(m, growth, "chain growth");
  if (m.order_mode() == OrderMode::Algebraic) {
    // A member step keeps every later term a member and the chain increasing.
    if (!m.contains(growth)) fail(Errc::NotIncreasing, "chain growth is not a member");
  } else {
    // Coordinatewise steps stay increasing for free but can leave the model;
    // probe the arithmetic tail. The window is decisive for numerical leaves
    // (divisibility faults and gap faults both show up within the conductor);
    // for affine leaves it is a bounded certification.
    Int window = max_conductor(m) + 2;
    Element e = preamble.back();
    for (Int t = 1; t <= window; ++t) {
      e = element_add(e, growth);
      if (!m.contains(e)) fail(Errc::NotIncreasing, "chain leaves the model");
    }
  }
  return raw_chain(m, preamble.back(), growth);
}

Probe3 interval_member_probe(const SemigroupModel& m, const Interval& I, const Element& x) {
  check_shape(m, I, "queried");
  if (x.coords.size() != m.flat_dim())
    fail(Errc::IncompatibleModels, "query element does not fit the model");
  switch (I.kind()) {
    case IntervalKind::Top:
      return Probe3::Yes;
    case IntervalKind::Principal:
      return leq_raw(m, x, I.cap()) ? Probe3::Yes : Probe3::No;
    case IntervalKind::Chain:
      break;
  }
  // Decisive horizon when every leaf is numerical: a fixed coordinate never
  // changes its verdict, and a growing coordinate clears its conductor within
  // max_conductor + total(x) steps.
  Int limit = max_conductor(m) + x.total() + 1;
  Element e = I.cap();
  for (Int t = 0; t <= limit; ++t) {
    if (leq_raw(m, x, e)) return Probe3::Yes;
    e = element_add(e, I.growth());
  }
  return m.all_leaves_numerical() ? Probe3::No : Probe3::Miss;
}

bool interval_member(const SemigroupModel& m, const Interval& I, const Element& x) {
  check_value(m, x, "interval member query");
  if (!m.contains(x)) fail(Errc::PreconditionViolated, "query element is not a member");
  return interval_member_probe(m, I, x) == Probe3::Yes;
}

Interval interval_add(const SemigroupModel& m, const Interval& I, const Interval& J) {
  check_shape(m, I, "left");
  check_shape(m, J, "right");
  if (I.is_top() || J.is_top()) return Interval::top(m);
  Element cap = element_add(I.cap(), J.cap());
  Element growth = m.zero();
  if (I.kind() == IntervalKind::Chain) growth = element_add(growth, I.growth());
  if (J.kind() == IntervalKind::Chain) growth = element_add(growth, J.growth());
  return Interval::raw_chain(m, std::move(cap), std::move(growth));
}

Interval interval_scale(const SemigroupModel& m, const Int& n, const Interval& I) {
  if (n < 0) fail(Errc::NegativeInput, "negative interval multiple");
  check_shape(m, I, "scaled");
  if (n == 0) return Interval::raw_principal(m, m.zero());
  if (I.is_top()) return Interval::top(m);
  Element cap = element_scale(n, I.cap());
  Element growth =
      I.kind() == IntervalKind::Chain ? element_scale(n, I.growth()) : m.zero();
  return Interval::raw_chain(m, std::move(cap), std::move(growth));
}

bool interval_leq(const SemigroupModel& m, const Interval& I, const Interval& J) {
  check_shape(m, I, "left");
  check_shape(m, J, "right");
  if (!m.has_nonzero_member()) return true;
  if (J.is_top()) return true;
  if (I.is_top()) {
    // Totals below a cap are bounded while the model's are not, and a proper
    // canonical chain keeps some live coordinate capped.
    if (J.kind() == IntervalKind::Principal || m.all_leaves_numerical()) return false;
    fail(Errc::UndecidableAtBound, "whole-model interval against an affine chain");
  }
  if (I.kind() == IntervalKind::Principal) {
    switch (interval_member_probe(m, J, I.cap())) {
      case Probe3::Yes: return true;
      case Probe3::No: return false;
      case Probe3::Miss: fail(Errc::UndecidableAtBound, "membership probe exhausted");
    }
  }
  // I is a proper chain: its term totals are unbounded.
  if (J.kind() == IntervalKind::Principal) return false;
  if (m.all_leaves_numerical()) {
    // Coordinatewise rule: growth must not escape J's growth support, and on
    // the fixed coordinates the caps must compare in the leaf order. Both
    // directions are exact for one-coordinate leaves.
    std::vector<const SemigroupModel*> per = coordinate_leaves(m);
    for (std::size_t i = 0; i < m.flat_dim(); ++i) {
      bool grows_i = I.growth().coords[i] > 0;
      bool grows_j = J.growth().coords[i] > 0;
      if (grows_i && !grows_j) return false;
      if (!grows_j && !coord_leq(m, per[i], I.cap().coords[i], J.cap().coords[i])) return false;
    }
    return true;
  }
  // Affine leaf present: every term of I must lie in J, so any decisive
  // exclusion refutes; confirmation would need infinitely many probes.
  Int limit = max_conductor(m) + I.cap().total() + 1;
  Element e = I.cap();
  for (Int t = 0; t <= limit; ++t) {
    if (interval_member_probe(m, J, e) == Probe3::No) return false;
    e = element_add(e, I.growth());
  }
  fail(Errc::UndecidableAtBound, "chain containment over an affine leaf");
}

bool way_below(const SemigroupModel& m, const Interval& I, const Interval& J) {
  check_shape(m, I, "left");
  check_shape(m, J, "right");
  if (!m.has_nonzero_member()) return true;
  if (I.kind() == IntervalKind::Principal) {
    switch (interval_member_probe(m, J, I.cap())) {
      case Probe3::Yes: return true;
      case Probe3::No: return false;
      case Probe3::Miss: fail(Errc::UndecidableAtBound, "membership probe exhausted");
    }
  }
  // A proper chain or the whole model has unbounded term totals, yet the
  // principal terms of any chain written for J would have to absorb it whole:
  // the multiples of the generator sum exhaust the model, so such chains
  // exist and refute compactness here.
  return false;
}

Interval sup_chain(const SemigroupModel& m, const IntervalChain& chain) {
  if (chain.preamble.empty())
    fail(Errc::PreconditionViolated, "interval chain needs a first term");
  for (const Interval& I : chain.preamble) check_shape(m, I, "chain");
  check_shape(m, chain.increment, "increment");
  for (std::size_t i = 0; i + 1 < chain.preamble.size(); ++i)
    if (!interval_leq(m, chain.preamble[i], chain.preamble[i + 1]))
      fail(Errc::NotIncreasing, "interval chain must be increasing");
  const Interval& last = chain.preamble.back();
  const Interval& step = chain.increment;
  if (last.is_top() || step.is_top()) return Interval::top(m);
  // sup of last, last+step, last+2*step, ...: entry (j, t) of the j-th term is
  // cap_last + j*cap_step + t*(growth_last + j*growth_step), and every such
  // entry sits below the u-th entry of Chain(cap_last, G) for u >= max(j, t*j)
  // with G the sum below; conversely the u-th entry of that chain sits inside
  // the u-th term. The two unions agree.
  Element g = last.kind() == IntervalKind::Chain ? last.growth() : m.zero();
  g = element_add(g, step.cap());
  if (step.kind() == IntervalKind::Chain) g = element_add(g, step.growth());
  return Interval::raw_chain(m, last.cap(), std::move(g));
}

}  // namespace oscomp
