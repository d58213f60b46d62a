#include "amdkit/diffcore.hpp"

#include <algorithm>

namespace amdkit {

void FrequencyMap::add_index(std::int64_t element_index, std::int64_t count) {
    if (element_index == 0)
        fail(errc::element_domain, "the identity cannot occur in a difference multiset");
    if (element_index < 0 || element_index >= group_.order())
        fail(errc::element_domain, "element index out of range");
    if (count == 0) return;
    auto [it, inserted] = counts_.try_emplace(element_index, count);
    if (!inserted) it->second += count;
    if (it->second == 0) counts_.erase(it);
}

std::int64_t FrequencyMap::count_of_index(std::int64_t element_index) const {
    auto it = counts_.find(element_index);
    return it == counts_.end() ? 0 : it->second;
}

std::int64_t FrequencyMap::count_of(const GroupElement& g) const {
    return count_of_index(group_.index_of(g));
}

std::int64_t FrequencyMap::total() const {
    std::int64_t t = 0;
    for (const auto& [idx, c] : counts_) t += c;
    return t;
}

std::int64_t FrequencyMap::max_count() const {
    std::int64_t m = 0;
    for (const auto& [idx, c] : counts_) m = std::max(m, c);
    return m;
}

std::optional<std::int64_t> FrequencyMap::uniform_value() const {
    if (counts_.empty()) return 0;
    std::int64_t lambda = counts_.begin()->second;
    if (static_cast<std::int64_t>(counts_.size()) != group_.order() - 1) return std::nullopt;
    for (const auto& [idx, c] : counts_)
        if (c != lambda) return std::nullopt;
    return lambda;
}

std::optional<std::pair<std::int64_t, std::int64_t>> FrequencyMap::first_deviation(std::int64_t lambda) const {
    for (std::int64_t idx = 1; idx < group_.order(); ++idx) {
        std::int64_t c = count_of_index(idx);
        if (c != lambda) return std::make_pair(idx, c);
    }
    return std::nullopt;
}

FrequencyMap& FrequencyMap::merge(const FrequencyMap& rhs) {
    if (group_ != rhs.group_) fail(errc::element_domain, "merging frequency maps over different groups");
    for (const auto& [idx, c] : rhs.counts_) add_index(idx, c);
    return *this;
}

FrequencyMap FrequencyMap::negated() const {
    FrequencyMap out(group_);
    for (const auto& [idx, c] : counts_) out.add_index(group_.neg_index(idx), c);
    return out;
}

SetFamily::SetFamily(FiniteAbelianGroup group, const std::vector<std::vector<GroupElement>>& sets)
    : group_(std::move(group)) {
    sets_.reserve(sets.size());
    for (const auto& set : sets) {
        std::vector<std::int64_t> idx;
        idx.reserve(set.size());
        for (const auto& e : set) idx.push_back(group_.index_of(e));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            fail(errc::element_domain, "duplicate element within a set");
        sets_.push_back(std::move(idx));
    }
}

SetFamily::SetFamily(FiniteAbelianGroup group, std::vector<std::vector<std::int64_t>> sets, bool)
    : group_(std::move(group)), sets_(std::move(sets)) {}

SetFamily SetFamily::from_indices(FiniteAbelianGroup group, std::vector<std::vector<std::int64_t>> index_sets) {
    for (auto& set : index_sets) {
        std::sort(set.begin(), set.end());
        for (std::int64_t idx : set)
            if (idx < 0 || idx >= group.order()) fail(errc::element_domain, "element index out of range");
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            fail(errc::element_domain, "duplicate element within a set");
    }
    return SetFamily(std::move(group), std::move(index_sets), true);
}

std::vector<GroupElement> SetFamily::set_elements(std::size_t i) const {
    if (i >= sets_.size()) fail(errc::index_range, "set index out of range");
    std::vector<GroupElement> out;
    out.reserve(sets_[i].size());
    for (std::int64_t idx : sets_[i]) out.push_back(group_.element_at(idx));
    return out;
}

std::vector<std::size_t> SetFamily::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(sets_.size());
    for (const auto& s : sets_) out.push_back(s.size());
    return out;
}

std::int64_t SetFamily::total_size() const {
    std::int64_t a = 0;
    for (const auto& s : sets_) a += static_cast<std::int64_t>(s.size());
    return a;
}

bool SetFamily::pairwise_disjoint() const {
    std::vector<std::int64_t> all;
    for (const auto& s : sets_) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

void SetFamily::require_disjoint() const {
    if (!pairwise_disjoint()) fail(errc::disjointness, "sets are not pairwise disjoint");
}

std::vector<std::int64_t> SetFamily::union_indices() const {
    std::vector<std::int64_t> all;
    for (const auto& s : sets_) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

FrequencyMap internal_differences_indices(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& set) {
    if (set.empty()) fail(errc::element_domain, "internal differences of an empty set");
    FrequencyMap out(g);
    for (std::int64_t x : set)
        for (std::int64_t y : set)
            if (x != y) out.add_index(g.sub_index(x, y));
    return out;
}

FrequencyMap internal_differences(const FiniteAbelianGroup& g, const std::vector<GroupElement>& set) {
    std::vector<std::int64_t> idx;
    idx.reserve(set.size());
    for (const auto& e : set) idx.push_back(g.index_of(e));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        fail(errc::element_domain, "duplicate element within a set");
    return internal_differences_indices(g, idx);
}

FrequencyMap cross_differences_indices(const FiniteAbelianGroup& g,
                                       const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) fail(errc::element_domain, "cross differences need nonempty sets");
    for (std::int64_t x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            fail(errc::disjointness, "cross differences require disjoint sets");
    FrequencyMap out(g);
    for (std::int64_t x : a)
        for (std::int64_t y : b)
            out.add_index(g.sub_index(x, y));
    return out;
}

FrequencyMap cross_differences(const FiniteAbelianGroup& g,
                               const std::vector<GroupElement>& a,
                               const std::vector<GroupElement>& b) {
    std::vector<std::int64_t> ia, ib;
    ia.reserve(a.size());
    ib.reserve(b.size());
    for (const auto& e : a) ia.push_back(g.index_of(e));
    for (const auto& e : b) ib.push_back(g.index_of(e));
    return cross_differences_indices(g, ia, ib);
}

FrequencyMap external_difference_multiset(const SetFamily& family) {
    if (family.set_count() < 2)
        fail(errc::trivial_family, "external differences need at least two sets");
    family.require_disjoint();
    const auto& g = family.group();
    FrequencyMap out(g);
    const auto& sets = family.index_sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            for (std::int64_t x : sets[i])
                for (std::int64_t y : sets[j])
                    out.add_index(g.sub_index(x, y));
        }
    return out;
}

FrequencyMap outgoing_differences(const SetFamily& family, std::size_t i) {
    if (family.set_count() < 2)
        fail(errc::trivial_family, "outgoing differences need at least two sets");
    if (i >= family.set_count()) fail(errc::index_range, "set index out of range");
    family.require_disjoint();
    const auto& g = family.group();
    FrequencyMap out(g);
    const auto& sets = family.index_sets();
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (j == i) continue;
        for (std::int64_t x : sets[i])
            for (std::int64_t y : sets[j])
                out.add_index(g.sub_index(x, y));
    }
    return out;
}

FrequencyMap incoming_differences(const SetFamily& family, std::size_t j) {
    if (family.set_count() < 2)
        fail(errc::trivial_family, "incoming differences need at least two sets");
    if (j >= family.set_count()) fail(errc::index_range, "set index out of range");
    family.require_disjoint();
    const auto& g = family.group();
    FrequencyMap out(g);
    const auto& sets = family.index_sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i == j) continue;
        for (std::int64_t x : sets[i])
            for (std::int64_t y : sets[j])
                out.add_index(g.sub_index(x, y));
    }
    return out;
}

FrequencyMap class_differences(const SetFamily& family, const std::vector<std::size_t>& class_indices) {
    if (class_indices.empty()) fail(errc::class_definition, "empty size class");
    std::size_t size = 0;
    for (std::size_t i : class_indices) {
        if (i >= family.set_count()) fail(errc::index_range, "set index out of range");
        std::size_t cur = family.index_sets()[i].size();
        if (size == 0)
            size = cur;
        else if (cur != size)
            fail(errc::class_definition, "size class mixes sets of different sizes");
    }
    FrequencyMap out(family.group());
    for (std::size_t i : class_indices) out.merge(outgoing_differences(family, i));
    return out;
}

} // namespace amdkit
