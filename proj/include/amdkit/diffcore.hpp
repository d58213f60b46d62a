#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "amdkit/group.hpp"

namespace amdkit {

/// Multiset of nonzero group elements with exact nonnegative counts.
/// Sparse: only strictly positive counts are stored, keyed by element index;
/// the identity never appears as a key.
class FrequencyMap {
public:
    explicit FrequencyMap(FiniteAbelianGroup group) : group_(std::move(group)) {}

    const FiniteAbelianGroup& group() const { return group_; }
    const std::map<std::int64_t, std::int64_t>& counts() const { return counts_; }

    void add_index(std::int64_t element_index, std::int64_t count = 1);
    std::int64_t count_of_index(std::int64_t element_index) const;
    std::int64_t count_of(const GroupElement& g) const;

    std::int64_t total() const;
    std::int64_t max_count() const;

    /// lambda such that every one of the n-1 nonzero elements has exactly
    /// that count, or nullopt. The empty map is uniform with lambda = 0.
    std::optional<std::int64_t> uniform_value() const;

    /// First nonzero element (canonical order) whose count differs from
    /// lambda, with its observed count.
    std::optional<std::pair<std::int64_t, std::int64_t>> first_deviation(std::int64_t lambda) const;

    FrequencyMap& merge(const FrequencyMap& rhs);

    /// Map with counts[g] = this->counts[-g].
    FrequencyMap negated() const;

    bool operator==(const FrequencyMap& rhs) const {
        return group_ == rhs.group_ && counts_ == rhs.counts_;
    }

private:
    FiniteAbelianGroup group_;
    std::map<std::int64_t, std::int64_t> counts_;
};

/// Ordered list of subsets of a common group. Construction validates element
/// membership and rejects duplicates inside a set. Pairwise disjointness is
/// NOT enforced here (classical difference families allow overlapping
/// blocks); external-difference operations and verifiers require it and
/// throw errc::disjointness when violated.
class SetFamily {
public:
    SetFamily(FiniteAbelianGroup group, const std::vector<std::vector<GroupElement>>& sets);

    /// Internal constructor from canonical element indices (must be valid).
    static SetFamily from_indices(FiniteAbelianGroup group, std::vector<std::vector<std::int64_t>> index_sets);

    const FiniteAbelianGroup& group() const { return group_; }
    std::size_t set_count() const { return sets_.size(); }
    /// Sorted element indices per set.
    const std::vector<std::vector<std::int64_t>>& index_sets() const { return sets_; }
    std::vector<GroupElement> set_elements(std::size_t i) const;
    std::vector<std::size_t> sizes() const;
    std::int64_t total_size() const; // a = sum of set sizes
    bool pairwise_disjoint() const;
    void require_disjoint() const;
    /// Union of all sets, sorted; only meaningful when disjoint.
    std::vector<std::int64_t> union_indices() const;

    bool operator==(const SetFamily& rhs) const {
        return group_ == rhs.group_ && sets_ == rhs.sets_;
    }

private:
    SetFamily(FiniteAbelianGroup group, std::vector<std::vector<std::int64_t>> sets, bool);

    FiniteAbelianGroup group_;
    std::vector<std::vector<std::int64_t>> sets_; // sorted indices
};

/// D(A) = multiset { x - y : x,y in A, x != y }. Total |A|(|A|-1).
FrequencyMap internal_differences(const FiniteAbelianGroup& g, const std::vector<GroupElement>& set);
FrequencyMap internal_differences_indices(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& set);

/// D(A,B) = multiset { x - y : x in A, y in B } for disjoint nonempty A, B.
FrequencyMap cross_differences(const FiniteAbelianGroup& g,
                               const std::vector<GroupElement>& a,
                               const std::vector<GroupElement>& b);
FrequencyMap cross_differences_indices(const FiniteAbelianGroup& g,
                                       const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b);

/// Union over ordered pairs i != j of D(A_i, A_j). Requires m >= 2.
FrequencyMap external_difference_multiset(const SetFamily& family);

/// Union over j != i of D(A_i, A_j): differences leaving set i. 0-based i.
FrequencyMap outgoing_differences(const SetFamily& family, std::size_t i);

/// Differences landing in set j: counts of x - y with x in A_i (i != j),
/// y in A_j. Equals the negation reflection of outgoing_differences(j).
FrequencyMap incoming_differences(const SetFamily& family, std::size_t j);

/// Sum of outgoing_differences over a class of indices that must all share
/// one set size (errc::class_definition otherwise).
FrequencyMap class_differences(const SetFamily& family, const std::vector<std::size_t>& class_indices);

} // namespace amdkit
