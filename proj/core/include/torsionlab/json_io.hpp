#pragma once

#include "json.hpp"
#include "torsionlab/report.hpp"

namespace torsionlab {

// insertion-ordered so emitted reports are byte-stable
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);

// {"name", "size", "elements", "add", "mul", "zero", "one"}; name and
// elements may be omitted. Shape problems throw MalformedSpec naming the
// offending field or row, law problems propagate from validation.
RingPtr ring_from_json(const Json& j);
RingPtr load_ring(const std::string& path);

// {"name", "size", "add", "zero", "act_right", "act_left"}; actions are
// optional and act over the supplied ring.
FiniteModule module_from_json(const Json& j, const RingPtr& R);
FiniteModule load_module(const std::string& path, const RingPtr& R);

// either a bare array or {"name", "table"}
Derivation derivation_from_json(const Json& j, int expected_size);
Derivation load_derivation(const std::string& path, int expected_size);

Side side_from_string(const std::string& s);
std::string side_to_string(Side s);

// A filter spec is a bare name, {"named": ...}, or {"side": ..., "ideals":
// [[...], ...]}. Listed ideals are seeds; the smallest filter containing
// them is built. With "exact": true the list is taken as the full member
// set and checked as-is.
GabrielFilter filter_from_json(const RingPtr& R, Side side, const Json& j);
GabrielFilter filter_from_spec(const RingPtr& R, Side side,
                               const std::string& spec);

// {"named": "sym-..."} or {"left": spec, "right": spec}
SymmetricFilter symmetric_filter_from_json(const SymContextPtr& ctx,
                                           const Json& j);
SymmetricFilter symmetric_filter_from_spec(const SymContextPtr& ctx,
                                           const std::string& spec);

Json filter_to_json(const GabrielFilter& F);
Json symmetric_filter_to_json(const SymmetricFilter& SF);

Json quotient_report_json(const QuotientModule& QM,
                          const std::optional<std::string>& ring_iso_hint);
Json ring_quotient_report_json(const QuotientRing& QR);
Json extension_report_json(const ExtensionResult& E);
Json ring_extension_report_json(const RingExtensionResult& E);
Json agreement_report_json(const AgreementReport& A);
Json symmetric_quotient_report_json(const SymmetricQuotient& SQ);
Json symmetric_ring_report_json(const SymmetricQuotientRing& SQR);
Json symmetric_extension_report_json(const SymmetricExtension& E);
Json symmetric_agreement_report_json(const SymmetricAgreementReport& A);

Json analysis_json(const RingPtr& R);
Json census_json(const CensusReport& C);
Json suite_report_json(const SuiteReport& S, bool timings);

}  // namespace torsionlab
