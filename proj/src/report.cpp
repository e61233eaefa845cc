#include "oscomp/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace oscomp {

namespace {

// Bound exhaustion inside a single check degrades that entry instead of
// killing the whole report.  Anything else (oracle tripwires, bad input)
// still propagates.
bool degradable(Errc c) {
  return c == Errc::UndecidableAtBound || c == Errc::BoundTooSmall ||
         c == Errc::NoFullElement || c == Errc::NoFullPair;
}

template <typename Fn>
CheckEntry run_check(std::string property, Fn&& fn) {
  CheckEntry e;
  e.property = std::move(property);
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [status, detail] = fn();
    e.status = status;
    e.detail = std::move(detail);
  } catch (const Error& err) {
    if (!degradable(err.code())) throw;
    e.status = Verdict::UnknownAtBound;
    e.detail = Json{{"error", err.what()}};
  }
  auto t1 = std::chrono::steady_clock::now();
  e.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return e;
}

std::size_t resolve_threads(const ReportParams& p) {
  if (p.threads > 0) return p.threads;
  if (const char* env = std::getenv("OSCOMP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

std::optional<Verdict> status_of(const PropertyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.property == name) return c.status;
  return std::nullopt;
}

void collect_violations(const PropertyReport& r, const ReportParams& p,
                        std::vector<HierarchyViolation>& out) {
  auto ladder = [&](const std::string& prefix) {
    for (Int n = 0; n < p.n_max; ++n) {
      auto lo = status_of(r, prefix + n.str());
      auto hi = status_of(r, prefix + Int(n + 1).str());
      if (lo && hi && *lo == Verdict::Holds && *hi == Verdict::FailsWithWitness)
        out.push_back({r.model_id, prefix + n.str() + " holds but " + prefix + Int(n + 1).str() +
                                       " fails: the ladder is inverted"});
    }
  };
  ladder("n-comparison-");
  if (p.weak) {
    ladder("weak-n-comparison-");
    for (Int n = 0; n <= p.n_max; ++n) {
      auto plain = status_of(r, "n-comparison-" + n.str());
      auto weak = status_of(r, "weak-n-comparison-" + n.str());
      if (plain && weak && *plain == Verdict::Holds && *weak == Verdict::FailsWithWitness)
        out.push_back({r.model_id, "n-comparison-" + n.str() +
                                       " holds but its weak form fails: the restriction to "
                                       "full elements cannot add witnesses"});
    }
  }
}

}  // namespace

bool ReportDocument::ok() const {
  if (!violations.empty()) return false;
  for (const auto& r : reports)
    if (!r.replay_ok) return false;
  return true;
}

PropertyReport run_property_report(const SemigroupModel& m, const std::string& model_id,
                                   const ReportParams& p) {
  if (p.n_max < 0 || p.bound < 1 || p.q_bound < 1 || p.m_max < 1 || p.k_max < 1)
    fail(Errc::PreconditionViolated, "report parameters must be positive");
  Int needed = (p.n_max + 1) * p.bound;
  SemigroupModel eff = m.element_bound() < needed ? m.with_element_bound(needed) : m;

  PropertyReport rep;
  rep.model_id = model_id;
  rep.bounds = Json{{"n_max", int_to_json(p.n_max)},
                    {"bound", int_to_json(p.bound)},
                    {"q_bound", int_to_json(p.q_bound)},
                    {"m_max", int_to_json(p.m_max)},
                    {"k_max", int_to_json(p.k_max)},
                    {"element_bound_used", int_to_json(eff.element_bound())}};

  auto ncomp_entry = [&](const Int& n, bool weak) {
    std::string name = (weak ? std::string("weak-n-comparison-") : std::string("n-comparison-")) +
                       n.str();
    return run_check(name, [&] {
      ComparisonVerdict v = n_comparison(eff, n, p.bound, weak);
      if (v.status == Verdict::FailsWithWitness && !replay_n_comparison(eff, v))
        rep.replay_ok = false;
      return std::pair{v.status, comparison_verdict_to_json(eff, v)};
    });
  };

  std::vector<CheckEntry> plain;
  for (Int n = 0; n <= p.n_max; ++n) plain.push_back(ncomp_entry(n, false));

  CheckEntry aup = plain.front();
  aup.property = "almost-unperforation";
  rep.checks.push_back(std::move(aup));
  for (auto& e : plain) rep.checks.push_back(std::move(e));
  if (p.weak)
    for (Int n = 0; n <= p.n_max; ++n) rep.checks.push_back(ncomp_entry(n, true));

  rep.checks.push_back(run_check("omega-surrogate", [&] {
    SurrogateVerdict v = omega_surrogate_check(eff, p.bound, p.k_max);
    return std::pair{v.status, surrogate_verdict_to_json(eff, v)};
  }));

  rep.checks.push_back(run_check("Q", [&] {
    QVerdict v = property_q_check(eff, QMode::Q, p.q_bound);
    return std::pair{v.status, q_verdict_to_json(eff, v)};
  }));
  rep.checks.push_back(run_check("QQ", [&] {
    QVerdict v = property_q_check(eff, QMode::QQ, p.q_bound);
    return std::pair{v.status, q_verdict_to_json(eff, v)};
  }));

  auto cfp_entry = [&](bool strong) {
    return run_check(strong ? "strong-CFP" : "CFP", [&] {
      CfpScanVerdict v = cfp_scan(eff, p.bound, p.m_max, p.k_max, strong, true);
      Json detail = cfp_scan_to_json(eff, v, false);
      detail["scan_class"] = "constant-sequence-continuous";
      return std::pair{v.status, std::move(detail)};
    });
  };
  rep.checks.push_back(cfp_entry(false));
  rep.checks.push_back(cfp_entry(true));

  return rep;
}

ReportDocument run_report(const std::vector<std::pair<std::string, SemigroupModel>>& models,
                          const ReportParams& p) {
  ReportDocument doc;
  doc.reports.resize(models.size());
  std::size_t threads = std::min(resolve_threads(p), std::max<std::size_t>(models.size(), 1));

  if (threads <= 1) {
    for (std::size_t i = 0; i < models.size(); ++i)
      doc.reports[i] = run_property_report(models[i].second, models[i].first, p);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= models.size()) return;
          try {
            doc.reports[i] = run_property_report(models[i].second, models[i].first, p);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const auto& r : doc.reports) collect_violations(r, p, doc.violations);
  return doc;
}

Json report_to_json(const ReportDocument& d, bool timings) {
  Json j;
  Json reports = Json::array();
  for (const auto& r : d.reports) {
    Json row;
    row["model"] = r.model_id;
    row["bounds"] = r.bounds;
    row["replay_ok"] = r.replay_ok;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json entry;
      entry["property"] = c.property;
      entry["status"] = verdict_name(c.status);
      entry["detail"] = c.detail;
      if (timings) entry["wall_ms"] = c.wall_ms;
      checks.push_back(std::move(entry));
    }
    row["checks"] = std::move(checks);
    reports.push_back(std::move(row));
  }
  j["reports"] = std::move(reports);
  Json viols = Json::array();
  for (const auto& v : d.violations)
    viols.push_back(Json{{"model", v.model_id}, {"description", v.description}});
  j["violations"] = std::move(viols);
  j["ok"] = d.ok();
  return j;
}

}  // namespace oscomp
