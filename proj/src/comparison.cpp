#include "oscomp/comparison.hpp"

#include <algorithm>
#include <set>

namespace oscomp {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::UnknownAtBound: return "UnknownAtBound";
  }
  return "?";
}

Int max_conductor(const SemigroupModel& m) {
  Int c = 0;
  for (const auto& lf : m.leaves()) {
    if (!lf.model->is_numerical()) continue;
    const NumericalTable& t = lf.model->table();
    if (t.frobenius_reduced >= 0) {
      Int ci = t.gcd * (t.frobenius_reduced + 1);
      if (ci > c) c = ci;
    }
  }
  return c;
}

bool sdom_exact(const SemigroupModel& m) {
  return m.order_mode() == OrderMode::Induced || m.all_leaves_numerical();
}

namespace {

std::optional<std::size_t> blocking_coordinate(const Element& x, const Element& y) {
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] > 0 && y.coords[i] <= x.coords[i]) return i;
  return std::nullopt;
}

StableDomCertificate make_sdom_cert(const SemigroupModel& m, const Element& x,
                                    const Element& y, const Int& k) {
  Element lhs = element_scale(k + 1, x);
  Element rhs = element_scale(k, y);
  OrderCertificate inner{lhs, rhs, m.order_mode(), std::nullopt};
  if (m.order_mode() == OrderMode::Algebraic) inner.witness = *element_sub(rhs, lhs);
  return StableDomCertificate{k, inner};
}

}  // namespace

DomScan classify_stable_dom(const SemigroupModel& m, const Element& x, const Element& y,
                            const Int& k_scan_limit) {
  DomScan r;
  r.exact = sdom_exact(m);
  if (auto b = blocking_coordinate(x, y)) {
    // k*y_i < (k+1)*x_i for every k once 0 < x_i and y_i <= x_i, and both
    // order modes refine the coordinatewise order, so this refutes.
    r.status = DomStatus::No;
    r.blocking_coord = b;
    return r;
  }
  Int limit = k_scan_limit;
  if (r.exact) {
    // With no blocking coordinate every growing coordinate gains at least 1
    // per step, so the smallest multiplier appears by conductor + |x| + 1.
    limit = max_conductor(m) + x.total() + 1;
  }
  for (Int k = 1; k <= limit; ++k) {
    if (leq_raw(m, element_scale(k + 1, x), element_scale(k, y))) {
      r.status = DomStatus::Yes;
      r.cert = make_sdom_cert(m, x, y, k);
      return r;
    }
  }
  if (r.exact) fail(Errc::OracleFailure, "guaranteed multiplier missing below its threshold");
  r.status = DomStatus::Unknown;
  return r;
}

std::optional<StableDomCertificate> stably_dominated(const SemigroupModel& m, const Element& x,
                                                     const Element& y, const Int& k_max) {
  check_value(m, x, "x");
  check_value(m, y, "y");
  if (k_max < 1) fail(Errc::PreconditionViolated, "k_max must be >= 1");
  if (!m.contains(x)) fail(Errc::PreconditionViolated, "x is not a member");
  if (!m.contains(y)) fail(Errc::PreconditionViolated, "y is not a member");
  if (k_max * y.total() > m.element_bound())
    fail(Errc::ValueOutOfBound, "k_max * y leaves the element bound");
  for (Int k = 1; k <= k_max; ++k)
    if (leq_raw(m, element_scale(k + 1, x), element_scale(k, y)))
      return make_sdom_cert(m, x, y, k);
  return std::nullopt;
}

bool replay_stable_dom(const SemigroupModel& m, const Element& x, const Element& y,
                       const StableDomCertificate& c) {
  if (c.k < 1) return false;
  if (c.inner.lhs != element_scale(c.k + 1, x)) return false;
  if (c.inner.rhs != element_scale(c.k, y)) return false;
  return replay_order(m, c.inner);
}

bool tail_property_check(const SemigroupModel& model, const Element& x, const Element& y,
                         const Int& multiplier, const Int& probe_extra) {
  check_value(model, x, "x");
  check_value(model, y, "y");
  if (multiplier < 1) fail(Errc::PreconditionViolated, "multiplier must be >= 1");
  if (probe_extra < 0) fail(Errc::NegativeInput, "probe_extra must be >= 0");
  if (!model.contains(x) || !model.contains(y))
    fail(Errc::PreconditionViolated, "x and y must be members");
  if (!leq_raw(model, element_scale(multiplier + 1, x), element_scale(multiplier, y)))
    fail(Errc::PreconditionViolated, "(m+1)x <= my fails for the given multiplier");
  Int k0 = (multiplier + 1) * multiplier;
  for (Int k = k0; k <= k0 + probe_extra; ++k)
    if (!leq_raw(model, element_scale(k + 1, x), element_scale(k, y))) return false;
  return true;
}

AgreementReport check_sdom_agreement(const SemigroupModel& m,
                                     const std::vector<std::pair<Element, Element>>& pairs,
                                     const Int& k_max, const Int& n_max) {
  AgreementReport rep;
  for (const auto& pr : pairs) {
    AgreementEntry e;
    e.x = pr.first;
    e.y = pr.second;
    Int k_eff = k_max;
    Int ytot = pr.second.total();
    if (ytot > 0) {
      Int cap = m.element_bound() / ytot;
      if (cap < k_eff) k_eff = cap;
    }
    if (k_eff < 1) k_eff = 1;
    e.k_used = k_eff;
    e.scan = stably_dominated(m, pr.first, pr.second, k_eff);
    if (m.order_mode() == OrderMode::Algebraic && !pr.second.is_zero()) {
      e.states = stable_dom_via_states(m, pr.first, pr.second, n_max);
      if (e.scan && e.states->outcome == StatesOutcome::False) e.decisive_disagreement = true;
      if (!e.scan && e.states->outcome == StatesOutcome::True) e.bound_exhaustion = true;
    }
    if (e.decisive_disagreement) ++rep.decisive_disagreements;
    if (e.bound_exhaustion) ++rep.bound_exhaustions;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool full_against_list(const SemigroupModel& m, const Element& x,
                       const std::vector<Element>& members, const Int& n_full) {
  if (x.is_zero()) return !m.has_nonzero_member();
  for (const Element& y : members)
    if (!propto_raw(m, y, x, n_full)) return false;
  return true;
}

namespace {

// Lex-first counterexample search over nondecreasing index tuples into dom.
// Suffix sums L(t, i) = sums of t entries with indices >= i, nondecreasing:
// L(t, i) = L(t, i+1) u (dom[i] + L(t-1, i)).

std::optional<std::vector<std::size_t>> lexfirst_bad_tuple_numeric(
    const SemigroupModel& m, const Element& x, const std::vector<Element>& dom,
    std::size_t tlen, const Int& bound) {
  std::size_t dsz = dom.size();
  std::size_t vcap = to_index(Int(tlen) * bound) + 1;
  std::vector<char> bad(vcap);
  for (std::size_t v = 0; v < vcap; ++v)
    bad[v] = leq_raw(m, x, Element{{Int(v)}}) ? 0 : 1;
  std::vector<std::size_t> dval(dsz);
  for (std::size_t i = 0; i < dsz; ++i) dval[i] = to_index(dom[i].coords[0]);

  std::size_t stride = dsz + 1;
  std::vector<std::vector<char>> L((tlen + 1) * stride, std::vector<char>(vcap, 0));
  for (std::size_t i = 0; i <= dsz; ++i) L[0 * stride + i][0] = 1;
  for (std::size_t t = 1; t <= tlen; ++t) {
    for (std::size_t i = dsz; i-- > 0;) {
      std::vector<char>& cell = L[t * stride + i];
      cell = L[t * stride + i + 1];
      const std::vector<char>& prev = L[(t - 1) * stride + i];
      for (std::size_t v = 0; v < vcap; ++v)
        if (prev[v] && v + dval[i] < vcap) cell[v + dval[i]] = 1;
    }
  }

  const std::vector<char>& sums = L[tlen * stride + 0];
  bool any = false;
  for (std::size_t v = 0; v < vcap; ++v)
    if (sums[v] && bad[v]) {
      any = true;
      break;
    }
  if (!any) return std::nullopt;

  std::vector<std::size_t> idx;
  std::size_t prefix = 0, imin = 0;
  for (std::size_t pos = 0; pos < tlen; ++pos) {
    std::size_t rem = tlen - pos - 1;
    bool chosen = false;
    for (std::size_t i = imin; i < dsz && !chosen; ++i) {
      std::size_t base = prefix + dval[i];
      const std::vector<char>& comp = L[rem * stride + i];
      for (std::size_t v = 0; v < vcap; ++v) {
        if (!comp[v] || base + v >= vcap) continue;
        if (bad[base + v]) {
          idx.push_back(i);
          prefix = base;
          imin = i;
          chosen = true;
          break;
        }
      }
    }
    if (!chosen) fail(Errc::OracleFailure, "witness reconstruction lost the bad sum");
  }
  if (prefix >= vcap || !bad[prefix])
    fail(Errc::OracleFailure, "reconstructed tuple sum is not a counterexample");
  return idx;
}

std::optional<std::vector<std::size_t>> lexfirst_bad_tuple_generic(
    const SemigroupModel& m, const Element& x, const std::vector<Element>& dom,
    std::size_t tlen) {
  std::size_t dsz = dom.size();
  auto vadd = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  };
  auto is_bad = [&](const std::vector<Int>& s) { return !leq_raw(m, x, Element{s}); };

  using VecSet = std::set<std::vector<Int>>;
  std::size_t stride = dsz + 1;
  std::vector<VecSet> L((tlen + 1) * stride);
  std::vector<Int> zero(m.flat_dim(), 0);
  for (std::size_t i = 0; i <= dsz; ++i) L[0 * stride + i].insert(zero);
  for (std::size_t t = 1; t <= tlen; ++t) {
    for (std::size_t i = dsz; i-- > 0;) {
      VecSet& cell = L[t * stride + i];
      cell = L[t * stride + i + 1];
      for (const auto& s : L[(t - 1) * stride + i]) cell.insert(vadd(s, dom[i].coords));
    }
  }

  bool any = false;
  for (const auto& s : L[tlen * stride + 0])
    if (is_bad(s)) {
      any = true;
      break;
    }
  if (!any) return std::nullopt;

  std::vector<std::size_t> idx;
  std::vector<Int> prefix = zero;
  std::size_t imin = 0;
  for (std::size_t pos = 0; pos < tlen; ++pos) {
    std::size_t rem = tlen - pos - 1;
    bool chosen = false;
    for (std::size_t i = imin; i < dsz && !chosen; ++i) {
      std::vector<Int> base = vadd(prefix, dom[i].coords);
      for (const auto& s : L[rem * stride + i]) {
        if (is_bad(vadd(base, s))) {
          idx.push_back(i);
          prefix = std::move(base);
          imin = i;
          chosen = true;
          break;
        }
      }
    }
    if (!chosen) fail(Errc::OracleFailure, "witness reconstruction lost the bad sum");
  }
  if (!is_bad(prefix)) fail(Errc::OracleFailure, "reconstructed tuple sum is not a counterexample");
  return idx;
}

}  // namespace

ComparisonVerdict n_comparison(const SemigroupModel& m, const Int& n, const Int& bound,
                               bool weak) {
  if (n < 0) fail(Errc::NegativeInput, "n must be >= 0");
  if (bound < 0) fail(Errc::NegativeInput, "bound must be >= 0");
  if ((n + 1) * bound > m.element_bound())
    fail(Errc::ValueOutOfBound, "(n+1)-fold sums leave the element bound");

  ComparisonVerdict out;
  out.n = n;
  out.bound = bound;
  out.weak = weak;

  std::vector<Element> elems = enumerate_elements(m, bound);
  bool any_nonzero = false;
  for (const Element& e : elems)
    if (!e.is_zero()) {
      any_nonzero = true;
      break;
    }
  if (!any_nonzero) fail(Errc::BoundTooSmall, "no nonzero member fits under the bound");

  std::vector<Element> pool;
  if (weak) {
    Int n_full = max_conductor(m) + bound + 1;
    for (const Element& e : elems)
      if (full_against_list(m, e, elems, n_full)) pool.push_back(e);
  } else {
    pool = elems;
  }

  std::size_t tlen = to_index(n) + 1;
  Int k_scan = default_kmax(m);
  bool saw_unknown = false;

  for (const Element& x : elems) {
    std::vector<Element> dom;
    std::vector<StableDomCertificate> certs;
    for (const Element& y : pool) {
      DomScan ds = classify_stable_dom(m, x, y, k_scan);
      if (ds.status == DomStatus::Yes) {
        dom.push_back(y);
        certs.push_back(*ds.cert);
      } else if (ds.status == DomStatus::Unknown) {
        saw_unknown = true;
      }
    }
    if (dom.empty()) continue;
    std::optional<std::vector<std::size_t>> hit =
        m.flat_dim() == 1 ? lexfirst_bad_tuple_numeric(m, x, dom, tlen, bound)
                          : lexfirst_bad_tuple_generic(m, x, dom, tlen);
    if (hit) {
      NComparisonWitness w;
      w.x = x;
      for (std::size_t i : *hit) {
        w.ys.push_back(dom[i]);
        w.dom_certs.push_back(certs[i]);
      }
      out.witness = std::move(w);
      out.status = Verdict::FailsWithWitness;
      return out;
    }
  }
  out.status = saw_unknown ? Verdict::UnknownAtBound : Verdict::Holds;
  return out;
}

bool replay_n_comparison(const SemigroupModel& m, const ComparisonVerdict& v) {
  if (v.status != Verdict::FailsWithWitness) return true;
  if (!v.witness) return false;
  const NComparisonWitness& w = *v.witness;
  std::size_t want = to_index(v.n) + 1;
  if (w.ys.size() != want || w.dom_certs.size() != want) return false;
  if (!m.contains(w.x) || w.x.total() > v.bound) return false;
  Element sum = m.zero();
  for (std::size_t j = 0; j < want; ++j) {
    if (!m.contains(w.ys[j]) || w.ys[j].total() > v.bound) return false;
    if (v.weak && !is_full_element(m, w.ys[j], v.bound)) return false;
    if (!replay_stable_dom(m, w.x, w.ys[j], w.dom_certs[j])) return false;
    sum = element_add(sum, w.ys[j]);
  }
  return !leq_raw(m, w.x, sum);
}

bool is_full_element(const SemigroupModel& m, const Element& x, const Int& bound) {
  check_value(m, x, "x");
  if (!m.contains(x)) fail(Errc::PreconditionViolated, "x is not a member");
  std::vector<Element> elems = enumerate_elements(m, bound);
  Int n_full = max_conductor(m) + bound + 1;
  return full_against_list(m, x, elems, n_full);
}

}  // namespace oscomp
