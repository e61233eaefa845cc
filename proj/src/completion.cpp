#include "oscomp/completion.hpp"

#include <numeric>
#include <set>
#include <string>

namespace oscomp {

namespace {

std::string interval_key(const Interval& I) {
  std::string k(1, static_cast<char>('0' + static_cast<int>(I.kind())));
  if (I.kind() != IntervalKind::Top) {
    for (const Int& c : I.cap().coords) k += ',' + c.str();
    if (I.kind() == IntervalKind::Chain) {
      k += ';';
      for (const Int& c : I.growth().coords) k += ',' + c.str();
    }
  }
  return k;
}

bool growth_at(const Interval& I, std::size_t i) {
  return I.kind() == IntervalKind::Chain && I.growth().coords[i] > 0;
}

}  // namespace

std::vector<Interval> enumerate_intervals(const SemigroupModel& m, const Int& bound,
                                          bool include_top) {
  std::vector<Element> members = enumerate_elements(m, bound);
  std::vector<Interval> out;
  std::set<std::string> seen;
  auto push = [&](const Interval& I) {
    if (seen.insert(interval_key(I)).second) out.push_back(I);
  };
  for (const Element& a : members) push(Interval::raw_principal(m, a));
  for (const Element& cap : members)
    for (const Element& g : members) {
      if (g.is_zero()) continue;
      // The policed constructor rejects steps that leave the model in
      // induced mode; such pairs are simply not representable chains.
      try {
        push(Interval::chain(m, {cap}, g));
      } catch (const Error&) {
      }
    }
  if (include_top) push(Interval::top(m));
  return out;
}

bool interval_full(const SemigroupModel& m, const Interval& I, const Int& bound) {
  std::vector<Element> members = enumerate_elements(m, bound);
  Int limit = m.all_leaves_numerical() ? max_conductor(m) + bound + 1 : bound;
  for (const Element& a : members) {
    bool hit = false;
    for (Int mult = 1; mult <= limit && !hit; ++mult)
      hit = interval_member_probe(m, interval_scale(m, mult, I), a) == Probe3::Yes;
    if (!hit) return false;
  }
  return true;
}

LargestElement largest_element(const SemigroupModel& m) {
  std::vector<Element> candidates;
  if (!m.has_nonzero_member()) {
    candidates.push_back(m.zero());
  } else {
    if (m.all_leaves_numerical()) {
      // One minimal positive member per populated leaf reaches everything.
      Element e = m.zero();
      for (const auto& lf : m.leaves())
        if (lf.model->has_nonzero_member())
          e.coords[lf.offset] = lf.model->numerical().generators.front();
      candidates.push_back(std::move(e));
    }
    Element s = m.zero();
    for (const Element& g : m.flat_generators()) s = element_add(s, g);
    candidates.push_back(std::move(s));
  }
  for (const Element& cand : candidates) {
    if (cand.total() > m.element_bound()) continue;
    if (!is_full_element(m, cand, m.element_bound())) continue;
    LargestElement r{Interval::top(m), cand, false};
    r.properly_infinite = interval_leq(m, interval_add(m, r.p, r.p), r.p);
    return r;
  }
  fail(Errc::NoFullElement, "no full member inside the element bound");
}

QVerdict property_q_check(const SemigroupModel& m, QMode mode, const Int& bound) {
  QVerdict r;
  r.status = Verdict::Holds;
  if (mode == QMode::Q) largest_element(m);  // the target of the absorption test
  if (!m.all_leaves_numerical()) {
    // Interval equality and proper infiniteness are only probe-decidable here.
    r.status = Verdict::UnknownAtBound;
    return r;
  }
  std::vector<Interval> pool = enumerate_intervals(m, bound, mode == QMode::QQ);
  auto properly_infinite = [&](const Interval& I) {
    return interval_leq(m, interval_add(m, I, I), I);
  };
  for (const Interval& u : pool) {
    if (mode == QMode::Q) {
      if (u.is_top()) continue;
      for (Int mult = 1; mult <= bound; ++mult)
        if (interval_scale(m, mult, u).is_top()) {
          r.status = Verdict::FailsWithWitness;
          r.witness_u = u;
          r.witness_multiplier = mult;
          return r;
        }
    } else {
      if (properly_infinite(u)) continue;
      for (Int mult = 1; mult <= bound; ++mult)
        if (properly_infinite(interval_scale(m, mult, u))) {
          r.status = Verdict::FailsWithWitness;
          r.witness_u = u;
          r.witness_multiplier = mult;
          return r;
        }
    }
  }
  return r;
}

bool is_full_sequence(const SemigroupModel& m, const IntervalChain& seq, const Int& bound) {
  // Principal probes see through the supremum: a member sits in a multiple of
  // sup iff it sits in a multiple of some term. Every principal is compactly
  // below the whole-model interval, so the quantifier over compact pairs
  // collapses to fullness of the supremum.
  Interval sup = sup_chain(m, seq);
  return interval_full(m, sup, bound);
}

IntervalDomScan interval_sdom(const SemigroupModel& m, const Interval& I, const Interval& J,
                              const Int& k_limit) {
  IntervalDomScan r{DomStatus::Unknown, std::nullopt};
  if (!m.has_nonzero_member() || J.is_top()) {
    r.status = DomStatus::Yes;
    r.k = 1;
    return r;
  }
  if (I.is_top()) {
    if (m.all_leaves_numerical()) r.status = DomStatus::No;
    return r;
  }
  for (std::size_t i = 0; i < m.flat_dim(); ++i) {
    // A growing coordinate of I outruns every multiple of a J that is fixed
    // there, and a fixed coordinate blocks exactly as for members.
    if (growth_at(I, i) && !growth_at(J, i)) {
      r.status = DomStatus::No;
      return r;
    }
    if (!growth_at(J, i) && I.cap().coords[i] > 0 &&
        J.cap().coords[i] <= I.cap().coords[i]) {
      r.status = DomStatus::No;
      return r;
    }
  }
  bool exact = m.all_leaves_numerical();
  Int limit = exact ? max_conductor(m) + I.cap().total() + 1 : k_limit;
  for (Int k = 1; k <= limit; ++k) {
    bool ok;
    try {
      ok = interval_leq(m, interval_scale(m, k + 1, I), interval_scale(m, k, J));
    } catch (const Error& e) {
      if (e.code() != Errc::UndecidableAtBound) throw;
      ok = false;
    }
    if (ok) {
      r.status = DomStatus::Yes;
      r.k = k;
      return r;
    }
  }
  if (exact)
    fail(Errc::OracleFailure, "unobstructed interval domination missed its decisive horizon");
  return r;
}

const Interval& sequence_term(const IntervalSequence& seq, const Int& i) {
  std::size_t idx = to_index(i);
  if (idx < seq.preamble.size()) return seq.preamble[idx];
  return seq.period[(idx - seq.preamble.size()) % seq.period.size()];
}

OmegaVerdict omega_comparison_check(const SemigroupModel& m, const Interval& xprime,
                                    const Interval& x, const IntervalSequence& y_seq,
                                    const Int& k_max, bool weak) {
  if (y_seq.period.empty())
    fail(Errc::PreconditionViolated, "interval sequence needs a period");
  if (!way_below(m, xprime, x))
    fail(Errc::PreconditionViolated, "x' is not compactly below x");
  Int k_scan = default_kmax(m);
  std::size_t terms = y_seq.preamble.size() + y_seq.period.size();
  for (std::size_t j = 0; j < terms; ++j) {
    const Interval& y = sequence_term(y_seq, Int(j));
    if (interval_sdom(m, x, y, k_scan).status != DomStatus::Yes)
      fail(Errc::PreconditionViolated,
           "x is not stably dominated by sequence term " + std::to_string(j));
    if (weak && !interval_full(m, y, m.element_bound()))
      fail(Errc::PreconditionViolated, "sequence term " + std::to_string(j) + " is not full");
  }
  OmegaVerdict v{std::nullopt, k_max};
  Interval sum = Interval::raw_principal(m, m.zero());
  for (Int n = 0; n < k_max; ++n) {
    sum = interval_add(m, sum, sequence_term(y_seq, n));
    bool ok;
    try {
      ok = interval_leq(m, xprime, sum);
    } catch (const Error& e) {
      if (e.code() != Errc::UndecidableAtBound) throw;
      ok = false;
    }
    if (ok) {
      v.n = n;
      return v;
    }
  }
  return v;
}

SurrogateVerdict omega_surrogate_check(const SemigroupModel& m, const Int& bound,
                                       const Int& n_max) {
  SurrogateVerdict v{Verdict::Holds, std::nullopt};
  std::vector<Element> members = enumerate_elements(m, bound);
  Int k_scan = default_kmax(m);
  bool exact = sdom_exact(m);
  Int n_limit = exact ? max_conductor(m) + bound + 1 : n_max;
  bool unknown = false;
  for (const Element& x : members)
    for (const Element& y : members) {
      DomScan d = classify_stable_dom(m, x, y, k_scan);
      if (d.status == DomStatus::Unknown) {
        unknown = true;
        continue;
      }
      if (d.status == DomStatus::No) continue;
      if (!propto_raw(m, x, y, n_limit)) {
        if (exact) {
          v.status = Verdict::FailsWithWitness;
          v.witness = SurrogateWitness{x, y};
          return v;
        }
        unknown = true;
      }
    }
  if (unknown) v.status = Verdict::UnknownAtBound;
  return v;
}

const Element& ElementSequence::term(std::size_t i) const {
  if (i < preamble.size()) return preamble[i];
  return period[(i - preamble.size()) % period.size()];
}

CfpInstance sequence_form(const CfpInstance& inst) {
  if (!inst.x_single || !inst.x_seq.period.empty()) return inst;
  CfpInstance out = inst;
  out.x_seq.period = {*inst.x_single};
  return out;
}

void validate_cfp_instance(const SemigroupModel& m, const CfpInstance& inst, bool strong,
                           bool require_fullness) {
  if (inst.y_seq.period.empty())
    fail(Errc::PreconditionViolated, "the y sequence needs a period");
  if (inst.multiplier < 1)
    fail(Errc::PreconditionViolated, "the multiplier must be positive");
  auto police = [&](const Element& e, const char* role) {
    check_value(m, e, role);
    if (!m.contains(e)) fail(Errc::PreconditionViolated, std::string(role) + " is not a member");
  };
  police(inst.xprime, "x'");
  for (const Element& e : inst.y_seq.preamble) police(e, "y term");
  for (const Element& e : inst.y_seq.period) police(e, "y term");

  std::size_t xw = 1;
  if (strong) {
    if (!inst.x_single) fail(Errc::PreconditionViolated, "strong form needs a single x");
    police(*inst.x_single, "x");
  } else {
    if (inst.x_seq.period.empty())
      fail(Errc::PreconditionViolated, "the x sequence needs a period");
    for (const Element& e : inst.x_seq.preamble) police(e, "x term");
    for (const Element& e : inst.x_seq.period) police(e, "x term");
    xw = inst.x_seq.window();
    // One full cycle plus the wrap pins down the whole eventually periodic
    // sequence; an increasing periodic tail is forced constant here.
    for (std::size_t i = 0; i < xw; ++i)
      if (!leq_raw(m, inst.x_seq.term(i), inst.x_seq.term(i + 1)))
        fail(Errc::NotIncreasing, "x sequence decreases at index " + std::to_string(i));
  }

  std::size_t yw = inst.y_seq.window();
  std::size_t pairs =
      strong ? yw
             : std::max(inst.x_seq.preamble.size(), inst.y_seq.preamble.size()) +
                   std::lcm(inst.x_seq.period.size(), inst.y_seq.period.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    const Element& xi = strong ? *inst.x_single : inst.x_seq.term(i);
    if (!leq_raw(m, xi, element_scale(inst.multiplier, inst.y_seq.term(i))))
      fail(Errc::PreconditionViolated,
           "x_n <= multiplier * y_n fails at index " + std::to_string(i));
  }

  const Element& first_x = strong ? *inst.x_single : inst.x_seq.term(0);
  if (!leq_raw(m, inst.xprime, first_x))
    fail(Errc::PreconditionViolated, "x' is not below the first x term");

  if (!strong && require_fullness) {
    Int sweep = inst.bound > 0 ? inst.bound : m.element_bound();
    const Element& tail = inst.x_seq.term(xw - 1);
    if (!is_full_element(m, tail, sweep))
      fail(Errc::PreconditionViolated, "the x sequence is not eventually full");
  }
}

CfpVerdict check_cfp(const SemigroupModel& m, const CfpInstance& raw, const Int& k_max,
                     bool strong) {
  CfpInstance inst = strong ? raw : sequence_form(raw);
  validate_cfp_instance(m, inst, strong);
  CfpVerdict v;
  v.k_max = k_max;
  Element sum = m.zero();
  for (Int k = 1; k <= k_max; ++k) {
    sum = element_add(sum, inst.y_seq.term(to_index(k - 1)));
    v.partial_sums.push_back(sum);
    if (leq_raw(m, inst.xprime, sum)) {
      OrderCertificate oc{inst.xprime, sum, m.order_mode(), std::nullopt};
      if (m.order_mode() == OrderMode::Algebraic) oc.witness = *element_sub(sum, inst.xprime);
      v.k = k;
      v.cert = std::move(oc);
      return v;
    }
  }
  return v;
}

bool replay_cfp(const SemigroupModel& m, const CfpInstance& inst, const CfpVerdict& v) {
  if (!v.k || !v.cert) return false;
  if (*v.k < 1 || inst.y_seq.period.empty()) return false;
  Element sum = m.zero();
  for (Int k = 1; k <= *v.k; ++k) sum = element_add(sum, inst.y_seq.term(to_index(k - 1)));
  if (v.cert->lhs != inst.xprime || v.cert->rhs != sum) return false;
  if (!v.partial_sums.empty() && v.partial_sums.back() != sum) return false;
  return replay_order(m, *v.cert);
}

CfpScanVerdict cfp_scan(const SemigroupModel& m, const Int& bound, const Int& m_max,
                        const Int& k_max, bool strong, bool continuous) {
  CfpScanVerdict v;
  v.status = Verdict::Holds;
  std::vector<Element> members = enumerate_elements(m, bound);
  Int n_full = max_conductor(m) + bound + 1;
  bool exact = m.all_leaves_numerical();
  Int decisive = max_conductor(m) + bound + 1;
  bool unknown = false;
  for (const Element& x : members) {
    if (!strong && !full_against_list(m, x, members, n_full)) continue;
    for (const Element& y : members) {
      auto mult = propto_raw(m, x, y, m_max);
      if (!mult) continue;
      for (const Element& xp : members) {
        if (!leq_raw(m, xp, x)) continue;
        CfpScanInstance inst{xp, x, y, *mult, std::nullopt};
        if (continuous) {
          Interval pxp = Interval::raw_principal(m, xp);
          Interval py = Interval::raw_principal(m, y);
          for (Int k = 1; k <= k_max && !inst.k; ++k)
            if (interval_leq(m, pxp, interval_scale(m, k, py))) inst.k = k;
        } else {
          Element sum = m.zero();
          for (Int k = 1; k <= k_max && !inst.k; ++k) {
            sum = element_add(sum, y);
            if (leq_raw(m, xp, sum)) inst.k = k;
          }
        }
        if (!inst.k) {
          if (exact && k_max >= decisive) {
            if (v.status == Verdict::Holds) {
              v.status = Verdict::FailsWithWitness;
              v.counterexample = inst;
            }
          } else {
            unknown = true;
            if (!v.counterexample) v.counterexample = inst;
          }
        } else if (!v.max_k_needed || *inst.k > *v.max_k_needed) {
          v.max_k_needed = *inst.k;
        }
        v.instances.push_back(std::move(inst));
      }
    }
  }
  if (v.status == Verdict::Holds && unknown) v.status = Verdict::UnknownAtBound;
  return v;
}

}  // namespace oscomp
