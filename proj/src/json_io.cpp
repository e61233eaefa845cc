#include "oscomp/json_io.hpp"

#include <fstream>

namespace oscomp {

namespace {

// Largest integer magnitude that survives a double round-trip.
const Int kJsonNumberMax = (Int(1) << 53) - 1;

Json el_json(const SemigroupModel& m, const Element& e);

Json ds_sparse(const SemigroupModel& m, const Element& e) {
  Json out = Json::array();
  const auto& comps = m.direct_sum().components;
  const auto& offs = m.component_offsets();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Element slice{std::vector<Int>(e.coords.begin() + static_cast<std::ptrdiff_t>(offs[c]),
                                   e.coords.begin() +
                                       static_cast<std::ptrdiff_t>(offs[c] + comps[c].flat_dim()))};
    if (slice.is_zero()) continue;
    out.push_back(Json::array({Json(c), el_json(comps[c], slice)}));
  }
  return out;
}

Json el_json(const SemigroupModel& m, const Element& e) {
  if (m.flat_dim() == 1 && m.is_numerical()) return int_to_json(e.coords[0]);
  if (m.is_direct_sum()) return ds_sparse(m, e);
  Json out = Json::array();
  for (const Int& c : e.coords) out.push_back(int_to_json(c));
  return out;
}

bool looks_sparse(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& entry : j)
    if (!(entry.is_array() && entry.size() == 2 && entry[0].is_number_unsigned()))
      return false;
  return true;
}

Element el_parse(const SemigroupModel& m, const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_string()) {
    if (m.flat_dim() != 1) fail(Errc::ParseError, "scalar element for a multi-coordinate model");
    return Element{{int_from_json(j)}};
  }
  if (!j.is_array()) fail(Errc::ParseError, "element must be a number, string, or array");
  if (m.is_direct_sum() && looks_sparse(j)) {
    const auto& comps = m.direct_sum().components;
    const auto& offs = m.component_offsets();
    Element e = m.zero();
    for (const Json& entry : j) {
      std::size_t c = entry[0].get<std::size_t>();
      if (c >= comps.size()) fail(Errc::ParseError, "component index out of range");
      Element slice = el_parse(comps[c], entry[1]);
      for (std::size_t i = 0; i < slice.coords.size(); ++i)
        e.coords[offs[c] + i] = std::move(slice.coords[i]);
    }
    return e;
  }
  if (j.size() != m.flat_dim()) fail(Errc::ParseError, "element has the wrong dimension");
  Element e;
  e.coords.reserve(j.size());
  for (const Json& c : j) e.coords.push_back(int_from_json(c));
  return e;
}

const char* mode_name(OrderMode mode) {
  return mode == OrderMode::Algebraic ? "algebraic" : "induced";
}

OrderMode mode_parse(const std::string& s) {
  if (s == "algebraic") return OrderMode::Algebraic;
  if (s == "induced") return OrderMode::Induced;
  fail(Errc::ParseError, "unknown order mode: " + s);
}

SemigroupModel model_parse(const Json& j, const OrderMode* inherit_mode,
                           const Int* inherit_bound) {
  if (!j.is_object() || !j.contains("kind"))
    fail(Errc::ParseError, "model document needs a kind");
  OrderMode mode;
  if (j.contains("order_mode"))
    mode = mode_parse(j.at("order_mode").get<std::string>());
  else if (inherit_mode)
    mode = *inherit_mode;
  else
    fail(Errc::ParseError, "top-level model needs an order_mode");
  Int bound;
  if (j.contains("element_bound"))
    bound = int_from_json(j.at("element_bound"));
  else if (inherit_bound)
    bound = *inherit_bound;
  else
    fail(Errc::ParseError, "top-level model needs an element_bound");

  std::string kind = j.at("kind").get<std::string>();
  if (kind == "numerical") {
    std::vector<Int> gens;
    for (const Json& g : j.at("generators")) gens.push_back(int_from_json(g));
    return SemigroupModel(NumericalKind{std::move(gens)}, mode, bound);
  }
  if (kind == "affine") {
    AffineKind k;
    k.dimension = j.at("dimension").get<std::size_t>();
    for (const Json& g : j.at("generators")) {
      std::vector<Int> row;
      for (const Json& c : g) row.push_back(int_from_json(c));
      k.generators.push_back(std::move(row));
    }
    return SemigroupModel(std::move(k), mode, bound);
  }
  if (kind == "direct_sum") {
    DirectSumKind k;
    for (const Json& c : j.at("components")) k.components.push_back(model_parse(c, &mode, &bound));
    return SemigroupModel(std::move(k), mode, bound);
  }
  fail(Errc::ParseError, "unknown model kind: " + kind);
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v <= kJsonNumberMax && v >= -kJsonNumberMax)
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(Errc::ParseError, "malformed integer string: " + j.get<std::string>());
    }
  }
  fail(Errc::ParseError, "expected an integer or decimal string");
}

Json rat_to_json(const Rat& v) {
  return Json(v.numerator().str() + "/" + v.denominator().str());
}

Json element_to_json(const SemigroupModel& m, const Element& e) { return el_json(m, e); }

Element element_from_json(const SemigroupModel& m, const Json& j) {
  Element e = el_parse(m, j);
  for (const Int& c : e.coords)
    if (c < 0) fail(Errc::ParseError, "element coordinates must be non-negative");
  return e;
}

Json model_to_json(const SemigroupModel& m) {
  Json j;
  j["order_mode"] = mode_name(m.order_mode());
  j["element_bound"] = int_to_json(m.element_bound());
  if (m.is_numerical()) {
    j["kind"] = "numerical";
    Json gens = Json::array();
    for (const Int& g : m.numerical().generators) gens.push_back(int_to_json(g));
    j["generators"] = std::move(gens);
  } else if (m.is_affine()) {
    j["kind"] = "affine";
    j["dimension"] = m.affine().dimension;
    Json gens = Json::array();
    for (const auto& g : m.affine().generators) {
      Json row = Json::array();
      for (const Int& c : g) row.push_back(int_to_json(c));
      gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
  } else {
    j["kind"] = "direct_sum";
    Json comps = Json::array();
    for (const auto& c : m.direct_sum().components) comps.push_back(model_to_json(c));
    j["components"] = std::move(comps);
  }
  return j;
}

SemigroupModel model_from_json(const Json& j) { return model_parse(j, nullptr, nullptr); }

SemigroupModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open model file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(Errc::ParseError, std::string("model file: ") + e.what());
  }
  return model_from_json(j);
}

Json order_certificate_to_json(const SemigroupModel& m, const OrderCertificate& c) {
  Json j;
  j["lhs"] = el_json(m, c.lhs);
  j["rhs"] = el_json(m, c.rhs);
  j["mode"] = mode_name(c.mode);
  if (c.witness) j["witness"] = el_json(m, *c.witness);
  return j;
}

OrderCertificate order_certificate_from_json(const SemigroupModel& m, const Json& j) {
  OrderCertificate c;
  c.lhs = element_from_json(m, j.at("lhs"));
  c.rhs = element_from_json(m, j.at("rhs"));
  c.mode = mode_parse(j.at("mode").get<std::string>());
  if (j.contains("witness")) c.witness = element_from_json(m, j.at("witness"));
  return c;
}

Json sdom_certificate_to_json(const SemigroupModel& m, const StableDomCertificate& c) {
  Json j;
  j["k"] = int_to_json(c.k);
  j["inner"] = order_certificate_to_json(m, c.inner);
  return j;
}

StableDomCertificate sdom_certificate_from_json(const SemigroupModel& m, const Json& j) {
  StableDomCertificate c;
  c.k = int_from_json(j.at("k"));
  c.inner = order_certificate_from_json(m, j.at("inner"));
  return c;
}

Json states_verdict_to_json(const SemigroupModel& m, const StatesVerdict& v) {
  Json j;
  switch (v.outcome) {
    case StatesOutcome::True: j["outcome"] = "true"; break;
    case StatesOutcome::False: j["outcome"] = "false"; break;
    case StatesOutcome::Unknown: j["outcome"] = "unknown"; break;
  }
  if (v.max_value) j["max_value"] = rat_to_json(*v.max_value);
  j["unbounded"] = v.unbounded;
  j["cone_empty"] = v.cone_empty;
  j["cone_complete"] = v.cone_complete;
  if (v.propto_cert) {
    Json p;
    p["n"] = int_to_json(v.propto_cert->n);
    p["inner"] = order_certificate_to_json(m, v.propto_cert->inner);
    j["propto"] = std::move(p);
  }
  return j;
}

Json comparison_verdict_to_json(const SemigroupModel& m, const ComparisonVerdict& v) {
  Json j;
  j["status"] = verdict_name(v.status);
  j["n"] = int_to_json(v.n);
  j["bound"] = int_to_json(v.bound);
  j["weak"] = v.weak;
  if (v.witness) {
    Json w;
    w["x"] = el_json(m, v.witness->x);
    Json ys = Json::array();
    for (const Element& y : v.witness->ys) ys.push_back(el_json(m, y));
    w["ys"] = std::move(ys);
    Json certs = Json::array();
    for (const auto& c : v.witness->dom_certs) certs.push_back(sdom_certificate_to_json(m, c));
    w["dom_certs"] = std::move(certs);
    j["witness"] = std::move(w);
  }
  return j;
}

Json interval_to_json(const SemigroupModel& m, const Interval& I) {
  Json j;
  j["variant"] = interval_kind_name(I.kind());
  if (I.kind() != IntervalKind::Top) {
    j["cap"] = el_json(m, I.cap());
    if (I.kind() == IntervalKind::Chain) j["growth"] = el_json(m, I.growth());
  }
  return j;
}

Interval interval_from_json(const SemigroupModel& m, const Json& j) {
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "top") return Interval::top(m);
  if (variant == "principal") return Interval::principal(m, element_from_json(m, j.at("cap")));
  if (variant != "chain") fail(Errc::ParseError, "unknown interval variant: " + variant);
  std::vector<Element> preamble;
  if (j.contains("preamble"))
    for (const Json& e : j.at("preamble")) preamble.push_back(element_from_json(m, e));
  else
    preamble.push_back(element_from_json(m, j.at("cap")));
  return Interval::chain(m, preamble, element_from_json(m, j.at("growth")));
}

Json element_sequence_to_json(const SemigroupModel& m, const ElementSequence& s) {
  Json j;
  Json pre = Json::array();
  for (const Element& e : s.preamble) pre.push_back(el_json(m, e));
  Json per = Json::array();
  for (const Element& e : s.period) per.push_back(el_json(m, e));
  j["preamble"] = std::move(pre);
  j["period"] = std::move(per);
  return j;
}

ElementSequence element_sequence_from_json(const SemigroupModel& m, const Json& j) {
  ElementSequence s;
  if (j.contains("preamble"))
    for (const Json& e : j.at("preamble")) s.preamble.push_back(element_from_json(m, e));
  if (!j.contains("period") || j.at("period").empty())
    fail(Errc::ParseError, "sequence needs a nonempty period");
  for (const Json& e : j.at("period")) s.period.push_back(element_from_json(m, e));
  return s;
}

Json cfp_instance_to_json(const SemigroupModel& m, const CfpInstance& inst) {
  Json j;
  j["xprime"] = el_json(m, inst.xprime);
  if (inst.x_single)
    j["x"] = el_json(m, *inst.x_single);
  else
    j["x_seq"] = element_sequence_to_json(m, inst.x_seq);
  j["y_seq"] = element_sequence_to_json(m, inst.y_seq);
  j["m"] = int_to_json(inst.multiplier);
  if (inst.bound > 0) j["bound"] = int_to_json(inst.bound);
  return j;
}

CfpInstance cfp_instance_from_json(const SemigroupModel& m, const Json& j) {
  CfpInstance inst;
  inst.xprime = element_from_json(m, j.at("xprime"));
  if (j.contains("x")) inst.x_single = element_from_json(m, j.at("x"));
  if (j.contains("x_seq")) inst.x_seq = element_sequence_from_json(m, j.at("x_seq"));
  if (!j.contains("x") && !j.contains("x_seq"))
    fail(Errc::ParseError, "instance needs x or x_seq");
  inst.y_seq = element_sequence_from_json(m, j.at("y_seq"));
  inst.multiplier = int_from_json(j.at("m"));
  if (j.contains("bound")) inst.bound = int_from_json(j.at("bound"));
  return inst;
}

CfpInstance load_instance_file(const SemigroupModel& m, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open instance file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(Errc::ParseError, std::string("instance file: ") + e.what());
  }
  return cfp_instance_from_json(m, j);
}

Json cfp_verdict_to_json(const SemigroupModel& m, const CfpVerdict& v) {
  Json j;
  if (v.k) j["k"] = int_to_json(*v.k);
  j["k_max"] = int_to_json(v.k_max);
  if (v.cert) j["certificate"] = order_certificate_to_json(m, *v.cert);
  Json sums = Json::array();
  for (const Element& s : v.partial_sums) sums.push_back(el_json(m, s));
  j["partial_sums"] = std::move(sums);
  return j;
}

Json grouping_to_json(const SemigroupModel& m, const GroupingCertificate& c) {
  Json j;
  j["m"] = int_to_json(c.multiplier);
  j["n"] = int_to_json(c.n);
  j["k"] = int_to_json(c.k);
  Json blocks = Json::array();
  for (const Element& z : c.z_blocks) blocks.push_back(el_json(m, z));
  j["z_blocks"] = std::move(blocks);
  Json chain = Json::array();
  for (const auto& oc : c.dom_chain) chain.push_back(order_certificate_to_json(m, oc));
  j["dom_chain"] = std::move(chain);
  j["final"] = order_certificate_to_json(m, c.final_cert);
  return j;
}

Json common_k_to_json(const SemigroupModel& m, const CommonKChain& c) {
  Json j;
  j["k"] = int_to_json(c.k);
  j["m1"] = int_to_json(c.m1);
  j["m2"] = int_to_json(c.m2);
  j["c1"] = order_certificate_to_json(m, c.c1);
  j["c2"] = order_certificate_to_json(m, c.c2);
  j["c3"] = order_certificate_to_json(m, c.c3);
  return j;
}

Json q_verdict_to_json(const SemigroupModel& m, const QVerdict& v) {
  Json j;
  j["status"] = verdict_name(v.status);
  if (v.witness_u) j["witness_u"] = interval_to_json(m, *v.witness_u);
  if (v.witness_multiplier) j["witness_multiplier"] = int_to_json(*v.witness_multiplier);
  return j;
}

Json surrogate_verdict_to_json(const SemigroupModel& m, const SurrogateVerdict& v) {
  Json j;
  j["status"] = verdict_name(v.status);
  if (v.witness) {
    j["witness"] = Json{{"x", el_json(m, v.witness->x)}, {"y", el_json(m, v.witness->y)}};
  }
  return j;
}

namespace {

Json scan_instance_json(const SemigroupModel& m, const CfpScanInstance& inst) {
  Json j;
  j["xprime"] = el_json(m, inst.xprime);
  j["x"] = el_json(m, inst.x);
  j["y"] = el_json(m, inst.y);
  j["m"] = int_to_json(inst.multiplier);
  if (inst.k) j["k"] = int_to_json(*inst.k);
  return j;
}

}  // namespace

Json cfp_scan_to_json(const SemigroupModel& m, const CfpScanVerdict& v, bool include_instances) {
  Json j;
  j["status"] = verdict_name(v.status);
  if (v.max_k_needed) j["max_k_needed"] = int_to_json(*v.max_k_needed);
  if (v.counterexample) j["counterexample"] = scan_instance_json(m, *v.counterexample);
  j["instance_count"] = v.instances.size();
  if (include_instances) {
    Json list = Json::array();
    for (const auto& inst : v.instances) list.push_back(scan_instance_json(m, inst));
    j["instances"] = std::move(list);
  }
  return j;
}

Json agreement_to_json(const SemigroupModel& m, const AgreementReport& r) {
  Json j;
  j["decisive_disagreements"] = r.decisive_disagreements;
  j["bound_exhaustions"] = r.bound_exhaustions;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json row;
    row["x"] = el_json(m, e.x);
    row["y"] = el_json(m, e.y);
    row["k_used"] = int_to_json(e.k_used);
    if (e.scan) row["scan"] = sdom_certificate_to_json(m, *e.scan);
    if (e.states) row["states"] = states_verdict_to_json(m, *e.states);
    row["decisive_disagreement"] = e.decisive_disagreement;
    row["bound_exhaustion"] = e.bound_exhaustion;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace oscomp
