#pragma once

// Independent reimplementations used to cross-check the library. Everything
// here is deliberately naive: breadth-first closures and direct definitional
// scans, no shared code with src/.

#include <boost/integer/common_factor.hpp>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "oscomp/model.hpp"

namespace oracle {

using oscomp::Element;
using oscomp::Int;
using oscomp::SemigroupModel;

// Every member with total <= bound, by BFS over generator additions.
inline std::set<std::vector<Int>> member_set(const SemigroupModel& m, const Int& bound) {
  std::set<std::vector<Int>> seen;
  std::queue<Element> work;
  seen.insert(m.zero().coords);
  work.push(m.zero());
  while (!work.empty()) {
    Element cur = work.front();
    work.pop();
    for (const Element& g : m.flat_generators()) {
      Element next = cur;
      for (std::size_t i = 0; i < next.coords.size(); ++i) next.coords[i] += g.coords[i];
      if (next.total() > bound) continue;
      if (seen.insert(next.coords).second) work.push(next);
    }
  }
  return seen;
}

inline bool is_member(const SemigroupModel& m, const Element& x) {
  return member_set(m, x.total()).count(x.coords) > 0;
}

// Definitional order check. Algebraic: the difference is a member. Induced:
// coordinatewise comparison.
inline bool leq(const SemigroupModel& m, const Element& x, const Element& y) {
  Element diff;
  diff.coords.reserve(x.coords.size());
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] > y.coords[i]) return false;
    diff.coords.push_back(y.coords[i] - x.coords[i]);
  }
  if (m.order_mode() == oscomp::OrderMode::Induced) return true;
  return is_member(m, diff);
}

inline Element scale(const Int& n, const Element& x) {
  Element r = x;
  for (Int& c : r.coords) c *= n;
  return r;
}

// Smallest k <= k_max with (k+1)x <= ky, by the definition alone.
inline std::optional<Int> stable_dom_k(const SemigroupModel& m, const Element& x,
                                       const Element& y, const Int& k_max) {
  for (Int k = 1; k <= k_max; ++k)
    if (oracle::leq(m, scale(k + 1, x), scale(k, y))) return k;
  return std::nullopt;
}

// Conductor of a numerical semigroup by direct scan: past it every multiple
// of the gcd is a member.
inline Int frobenius_scan(const std::vector<Int>& gens, const Int& horizon) {
  SemigroupModel m(oscomp::NumericalKind{gens}, oscomp::OrderMode::Algebraic, horizon);
  auto members = member_set(m, horizon);
  Int g = 0;
  for (const Int& v : gens) g = boost::integer::gcd(g, v);
  Int last_gap = -1;
  for (Int v = 0; v <= horizon; v += g)
    if (!members.count({v})) last_gap = v;
  return last_gap;
}

}  // namespace oracle
