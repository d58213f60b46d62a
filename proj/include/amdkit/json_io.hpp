#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "amdkit/amd.hpp"
#include "amdkit/field.hpp"
#include "amdkit/search.hpp"

namespace amdkit {

// Deterministic JSON bindings: insertion-ordered objects, elements as
// integer arrays, probabilities as lowest-terms "num/den" strings.
using Json = nlohmann::ordered_json;

/// Parsed {"cyclic":[...]} or {"field":{"p":...,"modulus":[...]}} descriptor.
/// A field descriptor also yields its additive group.
struct GroupDescriptor {
    std::optional<FiniteField> field;
    FiniteAbelianGroup group;
};

GroupDescriptor parse_group_descriptor(const Json& j);
Json group_to_json(const FiniteAbelianGroup& g);
Json field_to_json(const FiniteField& f);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const FiniteAbelianGroup& g, const Json& j);
std::string element_key(const GroupElement& e);

/// Family JSON: {"group": <descriptor>, "sets": [[elem,...],...]}; the
/// group member is optional when a group is supplied out of band.
Json family_to_json(const SetFamily& family);
SetFamily family_from_json(const Json& j, const FiniteAbelianGroup* fallback_group = nullptr);

Json frequency_map_to_json(const FrequencyMap& map);

Json parameters_to_json(const FamilyParameters& p);
Json report_to_json(const VerificationReport& r);
Json identity_checks_to_json(const std::vector<IdentityCheck>& checks);
Json partition_check_to_json(const PartitionCheckReport& r);

/// Code JSON: {"group":..., "sources":[{"name":..., "set":[...],
/// "probs":["1/2",...]},...]}.
Json code_to_json(const AmdCode& code);
AmdCode code_from_json(const Json& j);

Json weak_evaluation_to_json(const AmdCode& code, const WeakEvaluation& eval, bool full_table);
Json strong_evaluation_to_json(const AmdCode& code, const StrongEvaluation& eval, bool full_table);
Json weak_bounds_to_json(const WeakBounds& b);
Json strong_bounds_to_json(const AmdCode& code, const StrongBounds& b);
Json classification_to_json(const AmdCode& code, const Classification& c);
Json simultaneous_report_to_json(const SimultaneousOptimalityReport& r);

SearchSpec search_spec_from_json(const Json& j);
Json search_certificate_to_json(const SearchCertificate& cert);
Json sweep_report_to_json(const SweepReport& report);

} // namespace amdkit
