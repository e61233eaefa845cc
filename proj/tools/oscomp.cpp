#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "oscomp/families.hpp"
#include "oscomp/reductions.hpp"
#include "oscomp/report.hpp"

using namespace oscomp;

namespace {

Int parse_big(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "malformed integer: " + s);
  }
}

Element parse_element(const SemigroupModel& m, const std::string& s) {
  std::vector<Int> coords;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ' ') continue;
    if (ch != ',') {
      cur += ch;
      continue;
    }
    if (cur.empty()) fail(Errc::ParseError, "empty coordinate in element: " + s);
    coords.push_back(parse_big(cur));
    cur.clear();
  }
  if (coords.size() != m.flat_dim())
    fail(Errc::ParseError, "element has " + std::to_string(coords.size()) +
                               " coordinates, the model needs " + std::to_string(m.flat_dim()));
  for (const Int& c : coords)
    if (c < 0) fail(Errc::ParseError, "element coordinates must be non-negative");
  return Element{std::move(coords)};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  bool table = false;
  std::string out_path;

  void emit(const Json& j) const {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) fail(Errc::ParseError, "cannot write " + out_path);
      f << j.dump(2) << "\n";
    }
    if (table)
      flatten(j, "", std::cout);
    else
      std::cout << j.dump(2) << "\n";
  }
};

// Raises the element bound so (n+1)-fold sums fit; the bound actually used
// is reported back, never applied silently.
SemigroupModel raise_for_sums(const SemigroupModel& m, const Int& n, const Int& bound) {
  Int needed = (n + 1) * bound;
  return m.element_bound() < needed ? m.with_element_bound(needed) : m;
}

Json factorization_json(const std::vector<Int>& f) {
  Json a = Json::array();
  for (const Int& v : f) a.push_back(int_to_json(v));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificate-producing decision procedures for ordered semigroups"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--table", out.table, "key = value output instead of JSON");
  int exit_code = 0;

  std::string model_path;
  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "model JSON file")->required();
  };

  // member
  {
    auto* cmd = app.add_subcommand("member", "membership with factorization");
    static std::string el;
    add_model(cmd);
    cmd->add_option("element", el, "comma-separated coordinates")->required();
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      MemberResult r = member(m, parse_element(m, el));
      Json j;
      j["member"] = r.member;
      if (r.factorization) j["factorization"] = factorization_json(*r.factorization);
      out.emit(j);
    });
  }

  // order
  {
    auto* cmd = app.add_subcommand("order", "semigroup order with certificate");
    static std::string lhs, rhs;
    add_model(cmd);
    cmd->add_option("lhs", lhs)->required();
    cmd->add_option("rhs", rhs)->required();
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      auto c = leq(m, parse_element(m, lhs), parse_element(m, rhs));
      Json j;
      j["leq"] = c.has_value();
      if (c) {
        j["certificate"] = order_certificate_to_json(m, *c);
        j["replay_ok"] = replay_order(m, *c);
      }
      out.emit(j);
    });
  }

  // sdom
  {
    auto* cmd = app.add_subcommand("sdom", "stable domination via multiplier scan");
    static std::string lhs, rhs;
    static std::int64_t kmax = 0;
    add_model(cmd);
    cmd->add_option("lhs", lhs)->required();
    cmd->add_option("rhs", rhs)->required();
    cmd->add_option("--kmax", kmax, "multiplier cap, 0 = model default");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      Element x = parse_element(m, lhs), y = parse_element(m, rhs);
      Int k = kmax > 0 ? Int(kmax) : default_kmax(m);
      DomScan r = classify_stable_dom(m, x, y, k);
      Json j;
      j["status"] = r.status == DomStatus::Yes  ? "Yes"
                    : r.status == DomStatus::No ? "No"
                                                : "Unknown";
      j["exact"] = r.exact;
      j["k_max"] = int_to_json(k);
      if (r.cert) {
        j["certificate"] = sdom_certificate_to_json(m, *r.cert);
        j["replay_ok"] = replay_stable_dom(m, x, y, *r.cert);
      }
      if (r.blocking_coord) j["blocking_coord"] = *r.blocking_coord;
      out.emit(j);
    });
  }

  // states
  {
    auto* cmd = app.add_subcommand("states", "stable domination via the state criterion");
    static std::string lhs, rhs;
    static std::int64_t nmax = 50;
    add_model(cmd);
    cmd->add_option("lhs", lhs)->required();
    cmd->add_option("rhs", rhs)->required();
    cmd->add_option("--nmax", nmax, "multiplier cap for the proportionality side");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      StatesVerdict v =
          stable_dom_via_states(m, parse_element(m, lhs), parse_element(m, rhs), Int(nmax));
      out.emit(states_verdict_to_json(m, v));
    });
  }

  // agree
  {
    auto* cmd = app.add_subcommand("agree", "cross-check scan against states on all pairs");
    static std::int64_t bound = 12, kmax = 0, nmax = 50;
    add_model(cmd);
    cmd->add_option("--bound", bound, "pair pool: members with total <= bound");
    cmd->add_option("--kmax", kmax, "scan cap, 0 = model default");
    cmd->add_option("--nmax", nmax, "propto cap for the state side");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      std::vector<Element> pool = enumerate_elements(m, Int(bound));
      std::vector<std::pair<Element, Element>> pairs;
      for (const Element& x : pool)
        for (const Element& y : pool) pairs.emplace_back(x, y);
      Int k = kmax > 0 ? Int(kmax) : default_kmax(m);
      AgreementReport r = check_sdom_agreement(m, pairs, k, Int(nmax));
      Json j = agreement_to_json(m, r);
      j.erase("entries");
      j["pair_count"] = pairs.size();
      out.emit(j);
      if (r.decisive_disagreements > 0) exit_code = 1;
    });
  }

  // ncomp
  {
    auto* cmd = app.add_subcommand("ncomp", "bounded n-comparison test");
    static std::int64_t n = 0, bound = 8;
    static bool weak = false;
    add_model(cmd);
    cmd->add_option("--n", n)->required();
    cmd->add_option("--bound", bound, "member pool: totals <= bound");
    cmd->add_flag("--weak", weak, "restrict the y pool to full elements");
    cmd->callback([&] {
      SemigroupModel m = raise_for_sums(load_model_file(model_path), Int(n), Int(bound));
      ComparisonVerdict v = n_comparison(m, Int(n), Int(bound), weak);
      Json j = comparison_verdict_to_json(m, v);
      j["element_bound_used"] = int_to_json(m.element_bound());
      if (v.status == Verdict::FailsWithWitness) {
        j["replay_ok"] = replay_n_comparison(m, v);
        exit_code = 1;
        if (j["replay_ok"] == false) j["status"] = std::string("ReplayFailed");
      }
      out.emit(j);
    });
  }

  // qcheck
  {
    auto* cmd = app.add_subcommand("qcheck", "interval regularity of the completion");
    static std::string mode = "Q";
    static std::int64_t bound = 12;
    add_model(cmd);
    cmd->add_option("--mode", mode)->check(CLI::IsMember({"Q", "QQ"}));
    cmd->add_option("--bound", bound, "interval pool cap");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      QVerdict v = property_q_check(m, mode == "Q" ? QMode::Q : QMode::QQ, Int(bound));
      out.emit(q_verdict_to_json(m, v));
      if (v.status == Verdict::FailsWithWitness) exit_code = 1;
    });
  }

  // cfp
  {
    auto* cmd = app.add_subcommand("cfp", "factorize one instance with certificate");
    static std::string instance_path;
    static std::int64_t kmax = 200;
    static bool strong = false;
    add_model(cmd);
    cmd->add_option("--instance", instance_path, "instance JSON file")->required();
    cmd->add_option("--kmax", kmax);
    cmd->add_flag("--strong", strong, "require the single-element form");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      CfpInstance inst = load_instance_file(m, instance_path);
      CfpVerdict v = check_cfp(m, inst, Int(kmax), strong);
      Json j = cfp_verdict_to_json(m, v);
      if (v.k) {
        j["replay_ok"] = replay_cfp(m, inst, v);
        if (j["replay_ok"] == false) exit_code = 1;
      } else {
        j["status"] = std::string("UnknownAtBound");
      }
      out.emit(j);
    });
  }

  // scan
  {
    auto* cmd = app.add_subcommand("scan", "factorization property over all small instances");
    static std::int64_t bound = 10, mmax = 3, kmax = 200;
    static bool strong = false, discrete = false, instances = false;
    add_model(cmd);
    cmd->add_option("--bound", bound, "instance pool: totals <= bound");
    cmd->add_option("--mmax", mmax, "multiplier cap");
    cmd->add_option("--kmax", kmax);
    cmd->add_flag("--strong", strong);
    cmd->add_flag("--discrete", discrete, "scan elements instead of the completion");
    cmd->add_flag("--instances", instances, "list every instance with its k");
    cmd->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      CfpScanVerdict v = cfp_scan(m, Int(bound), Int(mmax), Int(kmax), strong, !discrete);
      out.emit(cfp_scan_to_json(m, v, instances));
      if (v.status == Verdict::FailsWithWitness) exit_code = 1;
    });
  }

  // reduce
  {
    auto* red = app.add_subcommand("reduce", "reductions between comparison properties");
    red->require_subcommand(1);

    auto* grp = red->add_subcommand("omega-cfp", "grouping reduction with replayable output");
    static std::string instance_path, v_el, w_el;
    static std::int64_t blocks = 64;
    static bool weak = false;
    grp->add_option("--model", model_path, "model JSON file")->required();
    grp->add_option("--instance", instance_path, "instance JSON file")->required();
    grp->add_option("--blocks", blocks, "cap on materialized blocks");
    grp->add_flag("--weak", weak, "use the full-pair compensation form");
    grp->add_option("--v", v_el, "full element (weak form)");
    grp->add_option("--w", w_el, "member above v (weak form)");
    grp->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      CfpInstance inst = load_instance_file(m, instance_path);
      Json j;
      if (weak) {
        if (v_el.empty() || w_el.empty())
          fail(Errc::ParseError, "--weak needs --v and --w");
        WeakGroupingResult r =
            weak_omega_to_cfp(m, inst, partial_sum_oracle(), parse_element(m, v_el),
                              parse_element(m, w_el), Int(blocks));
        j = grouping_to_json(m, r.cert);
        j["trim"] = int_to_json(r.trim);
        j["replay_ok"] = replay_grouping(m, r.trimmed, r.cert);
        if (j["replay_ok"] == false) exit_code = 1;
      } else {
        GroupingCertificate c = omega_to_cfp_grouping(m, inst, partial_sum_oracle(), Int(blocks));
        j = grouping_to_json(m, c);
        j["replay_ok"] = replay_grouping(m, inst, c);
        if (j["replay_ok"] == false) exit_code = 1;
      }
      out.emit(j);
    });

    auto* ck = red->add_subcommand("common-k", "shared multiplier for two dominations");
    static std::string x_el, y_el, z_el;
    static std::int64_t kmax = 200;
    ck->add_option("--model", model_path, "model JSON file")->required();
    ck->add_option("--x", x_el)->required();
    ck->add_option("--y", y_el)->required();
    ck->add_option("--z", z_el)->required();
    ck->add_option("--kmax", kmax);
    ck->callback([&] {
      SemigroupModel m = load_model_file(model_path);
      Element x = parse_element(m, x_el), y = parse_element(m, y_el), z = parse_element(m, z_el);
      CommonKChain c = sdom_common_k(m, x, y, z, Int(kmax));
      Json j = common_k_to_json(m, c);
      j["replay_ok"] = replay_common_k(m, x, y, z, c);
      if (j["replay_ok"] == false) exit_code = 1;
      out.emit(j);
    });
  }

  // family
  {
    auto* cmd = app.add_subcommand("family", "write a built-in model to JSON");
    static std::int64_t wn = -1, womega = -1, zplus = -1, bound = -1;
    cmd->add_option("--wn", wn, "two-generator level n");
    cmd->add_option("--womega", womega, "direct sum of levels 1..n");
    cmd->add_option("--zplus", zplus, "naturals with the given element bound");
    cmd->add_option("--bound", bound, "override the element bound");
    cmd->add_option("--out", out.out_path, "write to file as well as stdout");
    cmd->callback([&] {
      int picked = (wn >= 0) + (womega >= 0) + (zplus >= 0);
      if (picked != 1) fail(Errc::ParseError, "pick exactly one of --wn, --womega, --zplus");
      SemigroupModel m = wn >= 0       ? family_wn(Int(wn))
                         : womega >= 0 ? family_womega(Int(womega))
                                       : family_zplus(Int(zplus));
      if (bound > 0) m = m.with_element_bound(Int(bound));
      out.emit(model_to_json(m));
    });
  }

  // report
  {
    auto* cmd = app.add_subcommand("report", "full property survey over a model list");
    static std::vector<std::string> model_files;
    static std::vector<std::int64_t> wns, womegas;
    static std::int64_t nmax = 3, bound = 8, qbound = 12, mmax = 3, kmax = 200, threads = 0;
    static bool no_weak = false, timings = false;
    cmd->add_option("--models", model_files, "model JSON files");
    cmd->add_option("--wn", wns, "include built-in two-generator levels");
    cmd->add_option("--womega", womegas, "include built-in direct sums");
    cmd->add_option("--nmax", nmax);
    cmd->add_option("--bound", bound);
    cmd->add_option("--qbound", qbound);
    cmd->add_option("--mmax", mmax);
    cmd->add_option("--kmax", kmax);
    cmd->add_option("--threads", threads, "0 = honor OSCOMP_THREADS, else 1");
    cmd->add_flag("--no-weak", no_weak, "skip the weak comparison ladder");
    cmd->add_flag("--timings", timings, "include wall times");
    cmd->add_option("--out", out.out_path, "write to file as well as stdout");
    cmd->callback([&] {
      std::vector<std::pair<std::string, SemigroupModel>> models;
      for (const auto& f : model_files) models.emplace_back(f, load_model_file(f));
      for (auto n : wns) models.emplace_back("wn-" + std::to_string(n), family_wn(Int(n)));
      for (auto n : womegas)
        models.emplace_back("womega-" + std::to_string(n), family_womega(Int(n)));
      if (models.empty()) fail(Errc::ParseError, "no models given");
      ReportParams p;
      p.n_max = nmax;
      p.bound = bound;
      p.q_bound = qbound;
      p.m_max = mmax;
      p.k_max = kmax;
      p.weak = !no_weak;
      p.timings = timings;
      p.threads = threads > 0 ? static_cast<std::size_t>(threads) : 0;
      ReportDocument doc = run_report(models, p);
      out.emit(report_to_json(doc, timings));
      if (!doc.ok()) exit_code = 1;
    });
  }

  std::function<void(CLI::App*)> allow_global_flags = [&](CLI::App* a) {
    for (CLI::App* sc : a->get_subcommands([](CLI::App*) { return true; })) {
      sc->fallthrough();
      allow_global_flags(sc);
    }
  };
  allow_global_flags(&app);

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
