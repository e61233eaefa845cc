// Acceptance sweep for the library: nine end-to-end checks over the example
// families and the seeded corpus. Each check prints one line; a nonzero exit
// means at least one selected check failed. An argument restricts the run to
// that check number.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscomp/comparison.hpp"
#include "oscomp/completion.hpp"
#include "oscomp/families.hpp"
#include "oscomp/json_io.hpp"
#include "oscomp/reductions.hpp"
#include "oscomp/report.hpp"
#include "oscomp/statecone.hpp"

using namespace oscomp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Element el(Int v) { return Element{{std::move(v)}}; }

bool leq_holds(const SemigroupModel& m, const Element& a, const Element& b) {
  return leq(m, a, b).has_value();
}

// 1. The staircase family has the closed-form largest gap.
bool frobenius_family_closed_form(std::ostream& log) {
  auto t0 = Clock::now();
  for (Int n = 1; n <= 50; ++n) {
    FrobeniusResult f = frobenius(family_wn(n));
    if (!f.value || *f.value != n * n + n - 1) {
      log << "level " << n << " gap mismatch";
      return false;
    }
  }
  double dt = seconds_since(t0);
  log << "50 levels in " << dt << "s";
  return dt < 1.0;
}

// 2. Level n fails comparison at rung n-1 with the canonical witness and
// passes at rung n, exhaustively.
bool staircase_strict_comparison(std::ostream& log) {
  auto t0 = Clock::now();
  for (Int n = 1; n <= 5; ++n) {
    Int b = 6 * (n + 1) * (n + 2);
    SemigroupModel m = family_wn(n).with_element_bound((n + 1) * b);
    ComparisonVerdict lower = n_comparison(m, n - 1, b, false);
    if (lower.status != Verdict::FailsWithWitness || !lower.witness) {
      log << "level " << n << " rung " << (n - 1) << " did not fail";
      return false;
    }
    const NComparisonWitness& w = *lower.witness;
    if (w.x != el(n + 1)) {
      log << "level " << n << " witness x is " << w.x.coords[0];
      return false;
    }
    if (Int(w.ys.size()) != n) {
      log << "level " << n << " witness has " << w.ys.size() << " terms";
      return false;
    }
    for (const Element& y : w.ys)
      if (y != el(n + 2)) {
        log << "level " << n << " witness term " << y.coords[0];
        return false;
      }
    ComparisonVerdict upper = n_comparison(m, n, b, false);
    if (upper.status != Verdict::Holds) {
      log << "level " << n << " rung " << n << " is " << verdict_name(upper.status);
      return false;
    }
  }
  double dt = seconds_since(t0);
  log << "5 levels in " << dt << "s";
  return dt < 120.0;
}

// 3. The four-level tower fails every rung below the top with witnesses
// embedded in single coordinates, while the chain surrogate holds.
bool tower_report_ladder(std::ostream& log) {
  ReportParams p;
  PropertyReport r = run_property_report(family_womega(4), "tower", p);
  if (!r.replay_ok) {
    log << "witness replay failed";
    return false;
  }
  if (int_from_json(r.bounds["element_bound_used"]) < 32) {
    log << "element bound was not raised";
    return false;
  }
  for (Int n = 0; n <= 3; ++n) {
    std::string name = "n-comparison-" + n.str();
    const CheckEntry* entry = nullptr;
    for (const CheckEntry& c : r.checks)
      if (c.property == name) entry = &c;
    if (!entry || entry->status != Verdict::FailsWithWitness) {
      log << name << " did not fail";
      return false;
    }
    // the witness lives on one coordinate: the embedded copy of a level
    Json wx = entry->detail["witness"]["x"];
    if (!wx.is_array() || wx.size() != 1) {
      log << name << " witness is not embedded in one coordinate";
      return false;
    }
  }
  for (const CheckEntry& c : r.checks)
    if (c.property == "omega-surrogate" && c.status != Verdict::Holds) {
      log << "the chain surrogate does not hold";
      return false;
    }
  log << "4 rungs fail embedded, surrogate holds";
  return true;
}

// Deterministic member picks for the corpus sweeps.
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// 4. The multiplier-scan criterion and the exact state-cone criterion never
// decisively disagree, on seeded random triples and on staircase pairs.
bool scan_vs_states_agreement(std::ostream& log) {
  auto t0 = Clock::now();
  std::size_t decisive = 0, total = 0;

  RandomModelParams params;
  params.element_bound = 2000;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    SemigroupModel m = random_model(seed, params);
    std::vector<Element> elems = enumerate_elements(m, Int(20));
    if (elems.size() < 2) continue;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::vector<std::pair<Element, Element>> pairs = {
        {elems[pick(rng, elems.size())], elems[pick(rng, elems.size())]}};
    AgreementReport rep = check_sdom_agreement(m, pairs, Int(40), Int(40));
    if (rep.decisive_disagreements != 0) {
      log << "seed " << seed << " disagrees";
      return false;
    }
    total += rep.entries.size();
    for (const AgreementEntry& e : rep.entries)
      if (e.scan || (e.states && e.states->outcome != StatesOutcome::Unknown)) ++decisive;
  }

  for (Int lvl = 1; lvl <= 3; ++lvl) {
    SemigroupModel m = family_wn(lvl).with_element_bound(Int(20000));
    std::vector<Element> elems = enumerate_elements(m, Int(30));
    std::vector<std::pair<Element, Element>> pairs;
    for (const Element& x : elems)
      for (const Element& y : elems) pairs.emplace_back(x, y);
    AgreementReport rep = check_sdom_agreement(m, pairs, Int(200), Int(200));
    if (rep.decisive_disagreements != 0) {
      log << "level " << lvl << " disagrees";
      return false;
    }
    total += rep.entries.size();
  }

  double dt = seconds_since(t0);
  log << total << " pairs, " << decisive << " decisive on the seeded side, 0 disagreements, "
      << dt << "s";
  return dt < 300.0;
}

// 5. Every certified multiple-domination obeys the tail bound over a window
// of one hundred further multipliers.
bool tail_bound_probe(std::ostream& log) {
  std::size_t certified = 0;
  for (Int lvl = 1; lvl <= 3; ++lvl) {
    SemigroupModel m = family_wn(lvl).with_element_bound(Int(400000));
    std::vector<Element> elems = enumerate_elements(m, Int(30));
    for (const Element& x : elems)
      for (const Element& y : elems) {
        DomScan ds = classify_stable_dom(m, x, y, Int(200));
        if (ds.status != DomStatus::Yes) continue;
        ++certified;
        if (!tail_property_check(m, x, y, ds.cert->k, Int(100))) {
          log << "tail broken at level " << lvl << " for (" << x.coords[0] << ", "
              << y.coords[0] << ")";
          return false;
        }
      }
  }
  log << certified << " certified pairs, every tail window clean";
  return certified > 0;
}

// 6. Wherever two dominations chain, a single multiplier certifies both.
bool transitivity_common_multiplier(std::ostream& log) {
  auto t0 = Clock::now();
  std::size_t chained = 0;
  for (Int lvl = 1; lvl <= 3; ++lvl) {
    SemigroupModel m = family_wn(lvl).with_element_bound(Int(20000));
    std::vector<Element> elems = enumerate_elements(m, Int(20));
    for (const Element& x : elems)
      for (const Element& y : elems) {
        if (classify_stable_dom(m, x, y, Int(200)).status != DomStatus::Yes) continue;
        for (const Element& z : elems) {
          if (classify_stable_dom(m, y, z, Int(200)).status != DomStatus::Yes) continue;
          CommonKChain c = sdom_common_k(m, x, y, z, Int(500));
          if (!replay_common_k(m, x, y, z, c)) {
            log << "replay failed at level " << lvl;
            return false;
          }
          ++chained;
        }
      }
  }
  log << chained << " chained triples, zero replay failures, " << seconds_since(t0) << "s";
  return chained > 0;
}

// Seeded eventually-constant instance over a staircase level: an increasing
// prefix reaching a nonzero constant tail, with each y a member above its x.
CfpInstance seeded_instance(const SemigroupModel& m, std::mt19937_64& rng,
                            const std::vector<Element>& members) {
  CfpInstance inst;
  std::size_t prefix_len = pick(rng, 3);
  Element cur = members[1 + pick(rng, members.size() - 1)];  // nonzero start
  for (std::size_t i = 0; i < prefix_len; ++i) {
    inst.x_seq.preamble.push_back(cur);
    cur = element_add(cur, members[pick(rng, members.size())]);
  }
  inst.x_seq.period = {cur};

  for (const Element& x : inst.x_seq.preamble)
    inst.y_seq.preamble.push_back(element_add(x, members[pick(rng, members.size())]));
  inst.y_seq.period = {element_add(cur, members[pick(rng, members.size())])};

  inst.multiplier = 1 + Int(pick(rng, 3));
  inst.bound = 200;  // fullness sweep window, far above every member drawn
  const Element& first = inst.x_seq.term(0);
  std::vector<Element> below;
  for (const Element& e : members)
    if (leq_holds(m, e, first)) below.push_back(e);
  inst.xprime = below[pick(rng, below.size())];
  return inst;
}

// 7. Seeded grouped reductions replay end-to-end with the exact block count.
bool grouping_replay_exact_k(std::ostream& log) {
  std::size_t built = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    SemigroupModel m = family_wn(1 + Int(pick(rng, 3))).with_element_bound(Int(100000));
    std::vector<Element> members = enumerate_elements(m, Int(30));
    CfpInstance inst = seeded_instance(m, rng, members);
    GroupingCertificate c = omega_to_cfp_grouping(m, inst, partial_sum_oracle(), Int(50));
    if (c.k != (c.n + 1) * (c.multiplier + 1)) {
      log << "seed " << seed << " has k " << c.k;
      return false;
    }
    if (!replay_grouping(m, inst, c)) {
      log << "seed " << seed << " failed replay";
      return false;
    }
    ++built;
  }
  log << built << " seeded instances, exact block count, all replayed";
  return built == 100;
}

// 8. The discrete scan on a model and the continuous scan over its interval
// completion ask the same questions and get the same answers.
bool discrete_continuous_scan_match(std::ostream& log) {
  std::vector<std::pair<std::string, SemigroupModel>> models;
  models.emplace_back("free", family_zplus(Int(48)));
  models.emplace_back("w1", family_wn(1));
  models.emplace_back("w2", family_wn(2));
  std::size_t matched = 0;
  for (const auto& [name, base] : models) {
    SemigroupModel m = base.with_element_bound(Int(5000));
    CfpScanVerdict discrete = cfp_scan(m, Int(10), Int(3), Int(200), true, false);
    CfpScanVerdict continuous = cfp_scan(m, Int(10), Int(3), Int(200), true, true);
    if (discrete.instances.empty()) {
      log << name << " scan found no instances";
      return false;
    }
    matched += discrete.instances.size();
    if (discrete.status != continuous.status ||
        discrete.instances.size() != continuous.instances.size()) {
      log << name << " scans differ in shape";
      return false;
    }
    for (std::size_t i = 0; i < discrete.instances.size(); ++i) {
      const CfpScanInstance& a = discrete.instances[i];
      const CfpScanInstance& b = continuous.instances[i];
      if (a.xprime != b.xprime || a.x != b.x || a.y != b.y ||
          a.multiplier != b.multiplier || a.k != b.k) {
        log << name << " instance " << i << " differs";
        return false;
      }
    }
  }
  log << "3 models, " << matched << " matched instances all agree";
  return matched > 0;
}

// 9. Wherever the multiple-collapse property holds, every valid seeded
// instance certifies within the multiplier budget.
bool q_implies_cfp_instances(std::ostream& log) {
  std::vector<std::pair<std::string, SemigroupModel>> corpus;
  corpus.emplace_back("free", family_zplus(Int(24)));
  corpus.emplace_back("w1", family_wn(1));
  corpus.emplace_back("w2", family_wn(2));
  corpus.emplace_back("w3", family_wn(3));
  corpus.emplace_back("tower2", family_womega(2));

  std::size_t covered = 0, instances = 0;
  for (const auto& [name, base] : corpus) {
    QVerdict q = property_q_check(base, QMode::Q, Int(12));
    if (q.status != Verdict::Holds) continue;
    ++covered;
    SemigroupModel m = base.with_element_bound(Int(100000));
    std::vector<Element> members = enumerate_elements(m, Int(12));
    std::vector<Element> full;
    for (const Element& e : members)
      if (is_full_element(m, e, Int(12))) full.push_back(e);
    if (full.empty()) {
      log << name << " has no full member in the window";
      return false;
    }
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      std::mt19937_64 rng(seed * 31 + covered);
      const Element& x = full[pick(rng, full.size())];
      const Element& y = members[pick(rng, members.size())];
      std::optional<Int> mult;
      for (Int k = 1; k <= 3; ++k)
        if (leq_holds(m, x, element_scale(k, y))) {
          mult = k;
          break;
        }
      if (!mult) continue;  // no valid instance from this draw
      CfpInstance inst;
      inst.xprime = x;
      inst.x_seq.period = {x};
      inst.y_seq.period = {y};
      inst.multiplier = *mult;
      inst.bound = 12;  // fullness sweep stays in the drawing window
      CfpVerdict v = check_cfp(m, inst, Int(500), false);
      if (!v.k || !replay_cfp(m, inst, v)) {
        log << name << " seed " << seed << " did not certify";
        return false;
      }
      ++instances;
    }
  }
  log << covered << " models hold the collapse property, " << instances
      << " seeded instances all certified";
  return covered > 0 && instances > 0;
}

struct Criterion {
  int number;
  const char* label;
  bool (*run)(std::ostream&);
};

const Criterion kCriteria[] = {
    {1, "frobenius family closed form", frobenius_family_closed_form},
    {2, "staircase strict comparison", staircase_strict_comparison},
    {3, "tower report ladder", tower_report_ladder},
    {4, "scan vs states agreement", scan_vs_states_agreement},
    {5, "tail bound probe", tail_bound_probe},
    {6, "transitivity common multiplier", transitivity_common_multiplier},
    {7, "grouping replay exact k", grouping_replay_exact_k},
    {8, "discrete continuous scan match", discrete_continuous_scan_match},
    {9, "q implies cfp instances", q_implies_cfp_instances},
};

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    std::cout << "criterion " << c.number << " (" << c.label << "): "
              << (ok ? "pass" : "FAIL") << " [" << log.str() << "]\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
