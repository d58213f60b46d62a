#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amdkit/diffcore.hpp"

namespace amdkit {

enum class FamilyType { ds, df, edf, bedf, sedf, gedf, gsedf, bgsedf, pedf };

std::string family_type_name(FamilyType t);
FamilyType family_type_from_name(const std::string& name);

/// One size class of a partitioned family: `count` sets of size `size`.
struct SizeClass {
    std::size_t count = 0;
    std::size_t size = 0;
    bool operator==(const SizeClass&) const = default;
};

/// Witnessed parameters of a verified family, e.g. (19,3,3,3)-EDF or
/// (13,6;2,1,3;3,4,1;5,3,3)-PEDF. For a DS, sizes holds the single set size
/// (the "m" of the (n,m,lambda)-DS convention) and m is 1.
struct FamilyParameters {
    FamilyType type = FamilyType::ds;
    std::int64_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> sizes;
    std::vector<std::int64_t> lambdas;
    std::vector<SizeClass> classes; // PEDF only

    bool uniform_size() const;
    std::string display() const;
    bool operator==(const FamilyParameters&) const = default;
};

struct Counterexample {
    GroupElement element;
    std::int64_t observed = 0;
    std::int64_t required = 0;
    std::string context;
};

struct VerificationReport {
    bool pass = false;
    FamilyType type = FamilyType::ds;
    std::optional<FamilyParameters> parameters;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Verifiers. Each one recomputes the relevant difference multisets and
// witnesses lambda from the observed counts; the bounded types (BEDF,
// BGSEDF) instead take the bound as input. Failures always carry a concrete
// counterexample that diffcore can re-check.
// ---------------------------------------------------------------------------

VerificationReport verify_ds(const FiniteAbelianGroup& g, const std::vector<GroupElement>& set);
VerificationReport verify_ds_indices(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& set);

/// Difference family; blocks need not be disjoint. With require_uniform_k
/// set, unequal block sizes are an error.
VerificationReport verify_df(const SetFamily& family, bool require_uniform_k = false);

VerificationReport verify_edf(const SetFamily& family);
/// Bounded external check. Equal set sizes are required by default (the
/// classical definition); pass require_uniform_k = false to bound-check a
/// mixed-size family.
VerificationReport verify_bedf(const SetFamily& family, std::int64_t lambda,
                               bool require_uniform_k = true);
VerificationReport verify_sedf(const SetFamily& family);
VerificationReport verify_gedf(const SetFamily& family);
VerificationReport verify_gsedf(const SetFamily& family);
VerificationReport verify_bgsedf(const SetFamily& family, const std::vector<std::int64_t>& lambdas);

/// Size classes are derived from the family (grouped by set size, ordered by
/// first appearance). A profile, when given, must match the derived one.
VerificationReport verify_pedf(const SetFamily& family,
                               const std::vector<SizeClass>& profile = {});

/// Derived (count, size) classes in order of first appearance.
std::vector<SizeClass> derive_size_classes(const SetFamily& family);
std::vector<std::vector<std::size_t>> class_index_lists(const SetFamily& family);

/// Dispatcher used by the CLI and the search module. lambda/lambdas feed the
/// bounded types; the profile feeds PEDF.
VerificationReport verify_family(const SetFamily& family, FamilyType type,
                                 const std::vector<std::int64_t>& lambdas = {},
                                 const std::vector<SizeClass>& profile = {});

// ---------------------------------------------------------------------------
// Arithmetic-only necessary conditions; never consults the sets.
// ---------------------------------------------------------------------------

struct IdentityCheck {
    bool pass = false;
    std::string identity; // rendered equation, e.g. "lambda*(n-1) = k^2*m*(m-1)"
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

std::vector<IdentityCheck> check_parameter_identity(const FamilyParameters& params);
bool parameters_feasible(const FamilyParameters& params);

// ---------------------------------------------------------------------------
// Implication lattice: SEDF -> {GSEDF, EDF}, DS -> {EDF, DF},
// GSEDF -> {BGSEDF, PEDF}, EDF -> {PEDF, BEDF}, PEDF -> GEDF.
// ---------------------------------------------------------------------------

const std::vector<std::pair<FamilyType, FamilyType>>& lattice_edges();
bool is_lattice_edge(FamilyType from, FamilyType to);

/// Verifies `family` as `from`, translates the witnessed parameters along
/// the lattice edge, re-verifies as `to`, and checks the translated
/// parameters match the re-verified ones. Non-edges throw errc::lattice.
/// For from == ds the family must consist of a single set; the DS -> EDF
/// edge lifts it to singletons internally.
VerificationReport implication_check(const SetFamily& family, FamilyType from, FamilyType to);

// ---------------------------------------------------------------------------
// Partition characterizations: a partition of G is a maximal GSEDF iff each
// part is an (n, k_i, k_i - lambda_i)-DS, and a maximal PEDF iff each size
// class is an (n, k_h, c_h*k_h - lambda_h)-DF. Both directions are computed
// independently and any disagreement is an internal-consistency failure.
// ---------------------------------------------------------------------------

struct PartitionCheckReport {
    VerificationReport whole;                 // GSEDF or PEDF verdict
    std::vector<VerificationReport> parts;    // per-part DS / per-class DF verdicts
    bool equivalence_consistent = true;       // the two routes agree
    std::vector<std::string> notes;
};

PartitionCheckReport maximal_gsedf_ds_check(const SetFamily& partition);
PartitionCheckReport maximal_pedf_df_check(const SetFamily& partition,
                                           const std::vector<SizeClass>& profile = {});

} // namespace amdkit
