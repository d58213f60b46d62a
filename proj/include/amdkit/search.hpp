#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amdkit/families.hpp"

namespace amdkit {

enum class SearchMode { first_solution, all_up_to_translation, count_only };
enum class SearchOutcome { found, exhausted_no_solution, budget_exhausted };

std::string search_mode_name(SearchMode m);
SearchMode search_mode_from_name(const std::string& name);
std::string search_outcome_name(SearchOutcome o);

/// A fully pinned search question: build `sizes[i]`-subsets of `group`,
/// pairwise disjoint (except for DF blocks, which may overlap), meeting the
/// lambda targets of `type`. Exact types treat lambdas as required counts,
/// bounded types as ceilings. For PEDF the lambdas are per size class in
/// order of first appearance in `sizes`.
struct SearchSpec {
    FiniteAbelianGroup group;
    FamilyType type;
    std::vector<std::size_t> sizes;
    std::vector<std::int64_t> lambdas;
    SearchMode mode = SearchMode::all_up_to_translation;
    std::uint64_t node_budget = 0; // 0 = unlimited
    unsigned jobs = 1;

    FamilyParameters parameters() const;
};

/// Search result. exhausted_no_solution certifies that the full canonical
/// search tree was traversed; budget_exhausted is a distinct outcome and is
/// never conflated with it. Solutions are canonical representatives of
/// translation classes, deterministically ordered.
struct SearchCertificate {
    SearchOutcome outcome = SearchOutcome::exhausted_no_solution;
    std::vector<SetFamily> solutions;
    std::uint64_t solutions_found = 0; // translation classes
    std::uint64_t nodes_explored = 0;  // candidate placements evaluated
    std::uint64_t nodes_pruned = 0;    // placements rejected by a count bound
    std::string spec_hash;
    std::string spec_display;
};

/// Exhaustive backtracking search with translation normalization (the first
/// set contains 0) and incremental difference-count pruning. Deterministic;
/// with jobs > 1 the tree is split below the first completed set and the
/// merged certificate is identical to the single-threaded one (first-solution
/// mode and budgeted runs always execute single-threaded).
/// Infeasible parameter identities throw errc::identity before any search.
SearchCertificate search_family(const SearchSpec& spec);

/// search_family with the mode forced to a full traversal, so a negative
/// answer is an exhausted-no-solution certificate.
SearchCertificate certify_nonexistence(const SearchSpec& spec);

/// Canonical representative of the translation class of a family: minimum
/// over all translations, with interchangeable sets reordered canonically.
SetFamily canonical_translate(const SetFamily& family, FamilyType type,
                              const std::vector<std::int64_t>& lambdas = {});

struct SweepRow {
    std::int64_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::int64_t lambda = 0;
    std::string group_desc;
    SearchOutcome outcome = SearchOutcome::exhausted_no_solution;
    std::uint64_t nodes = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::vector<std::string> excluded; // infeasible (n,m,k) tuples with reasons
};

/// Probes the open question of SEDFs with m > 2 and k > 1: enumerates every
/// feasible (n, m, k, lambda) with n <= n_max and runs certify_nonexistence
/// over all abelian groups of order n. Desk-scale evidence only.
SweepReport sweep_sedf_open_problem(std::int64_t n_max, std::uint64_t node_budget = 0,
                                    unsigned jobs = 1);

} // namespace amdkit
