#pragma once

#include <string>

#include "json.hpp"
#include "oscomp/reductions.hpp"

namespace oscomp {

using Json = nlohmann::json;

// Integers small enough to survive a double round-trip emit as JSON numbers,
// everything else as decimal strings. Both shapes parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json rat_to_json(const Rat& v);  // "p/q"

/**
 * Element shape follows the model: a one-coordinate model uses a bare
 * number (or decimal string), a multi-coordinate leaf uses a flat array, and
 * a direct sum uses a sparse list [[component_index, component_element], ...]
 * with zero components omitted and indices zero-based.
 */
Json element_to_json(const SemigroupModel& m, const Element& e);
Element element_from_json(const SemigroupModel& m, const Json& j);

/**
 * Model documents:
 *   {"kind": "numerical", "generators": [3, 4],
 *    "order_mode": "algebraic", "element_bound": 48}
 *   {"kind": "affine", "dimension": 2, "generators": [[1, 0], [1, 1]], ...}
 *   {"kind": "direct_sum", "components": [...], ...}
 * Components may omit order_mode and element_bound; they inherit the parent's.
 */
Json model_to_json(const SemigroupModel& m);
SemigroupModel model_from_json(const Json& j);
SemigroupModel load_model_file(const std::string& path);

Json order_certificate_to_json(const SemigroupModel& m, const OrderCertificate& c);
OrderCertificate order_certificate_from_json(const SemigroupModel& m, const Json& j);

Json sdom_certificate_to_json(const SemigroupModel& m, const StableDomCertificate& c);
StableDomCertificate sdom_certificate_from_json(const SemigroupModel& m, const Json& j);

Json states_verdict_to_json(const SemigroupModel& m, const StatesVerdict& v);
Json comparison_verdict_to_json(const SemigroupModel& m, const ComparisonVerdict& v);

// {"variant": "principal" | "chain" | "top", "cap": ..., "growth": ...};
// chains also accept {"preamble": [...], "growth": ...} on input and are
// re-canonicalized through the policed constructor.
Json interval_to_json(const SemigroupModel& m, const Interval& I);
Interval interval_from_json(const SemigroupModel& m, const Json& j);

Json element_sequence_to_json(const SemigroupModel& m, const ElementSequence& s);
ElementSequence element_sequence_from_json(const SemigroupModel& m, const Json& j);

// {"xprime": ..., "x": ... or "x_seq": {"preamble": [...], "period": [...]},
//  "y_seq": {...}, "m": 2, "bound": 30}
Json cfp_instance_to_json(const SemigroupModel& m, const CfpInstance& inst);
CfpInstance cfp_instance_from_json(const SemigroupModel& m, const Json& j);
CfpInstance load_instance_file(const SemigroupModel& m, const std::string& path);

Json cfp_verdict_to_json(const SemigroupModel& m, const CfpVerdict& v);
Json grouping_to_json(const SemigroupModel& m, const GroupingCertificate& c);
Json common_k_to_json(const SemigroupModel& m, const CommonKChain& c);
Json q_verdict_to_json(const SemigroupModel& m, const QVerdict& v);
Json surrogate_verdict_to_json(const SemigroupModel& m, const SurrogateVerdict& v);
Json cfp_scan_to_json(const SemigroupModel& m, const CfpScanVerdict& v, bool include_instances);
Json agreement_to_json(const SemigroupModel& m, const AgreementReport& r);

}  // namespace oscomp
