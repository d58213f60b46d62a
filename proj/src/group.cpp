#include "amdkit/group.hpp"

#include <algorithm>

namespace amdkit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty()) fail(errc::invalid_order, "group needs at least one cyclic factor");
    n_ = 1;
    for (std::int64_t o : orders_) {
        if (o < 2) fail(errc::invalid_order, "cyclic factor order must be >= 2, got " + std::to_string(o));
        n_ *= o;
        if (n_ > (std::int64_t{1} << 40)) fail(errc::invalid_order, "group order beyond desk scale");
    }
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * orders_[i];
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders_[i]) return false;
    return true;
}

void FiniteAbelianGroup::require_element(const GroupElement& a) const {
    if (!contains(a)) fail(errc::element_domain, "element does not belong to " + describe());
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    require_element(a);
    require_element(b);
    GroupElement r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        r[i] = (a[i] + b[i]) % orders_[i];
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    require_element(a);
    GroupElement r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    require_element(a);
    require_element(b);
    GroupElement r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        r[i] = (a[i] - b[i] + orders_[i]) % orders_[i];
    return r;
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
    require_element(a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        idx += a[i] * strides_[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= n_) fail(errc::element_domain, "element index out of range");
    GroupElement r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        r[i] = index / strides_[i];
        index %= strides_[i];
    }
    return r;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> all;
    all.reserve(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i) all.push_back(element_at(i));
    return all;
}

std::int64_t FiniteAbelianGroup::add_index(std::int64_t a, std::int64_t b) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t ca = a / strides_[i], cb = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        idx += ((ca + cb) % orders_[i]) * strides_[i];
    }
    return idx;
}

std::int64_t FiniteAbelianGroup::neg_index(std::int64_t a) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t ca = a / strides_[i];
        a %= strides_[i];
        idx += (ca == 0 ? 0 : orders_[i] - ca) * strides_[i];
    }
    return idx;
}

std::int64_t FiniteAbelianGroup::sub_index(std::int64_t a, std::int64_t b) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t ca = a / strides_[i], cb = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        idx += ((ca - cb + orders_[i]) % orders_[i]) * strides_[i];
    }
    return idx;
}

std::string FiniteAbelianGroup::describe() const {
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(orders_[i]);
    }
    return s;
}

FiniteAbelianGroup make_cyclic_group(std::int64_t n) {
    return FiniteAbelianGroup({n});
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Partitions of e in decreasing lexicographic order, e.g. 3 -> {3},{2,1},{1,1,1}.
void partitions_of(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(e, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(e - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n) {
    if (n < 2) fail(errc::invalid_order, "group order must be >= 2");
    std::vector<std::pair<std::int64_t, int>> factorization;
    std::int64_t rem = n;
    for (std::int64_t p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        factorization.emplace_back(p, e);
    }
    if (rem > 1) factorization.emplace_back(rem, 1);

    // One choice of partition per prime; the group is the product of the
    // prime-power cyclic factors p^part.
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : factorization) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_of(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<FiniteAbelianGroup> groups;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        std::vector<std::int64_t> orders;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            std::int64_t p = factorization[i].first;
            for (int part : per_prime[i][pick[i]]) {
                std::int64_t pw = 1;
                for (int j = 0; j < part; ++j) pw *= p;
                orders.push_back(pw);
            }
        }
        std::sort(orders.begin(), orders.end());
        groups.emplace_back(std::move(orders));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.orders() < b.orders(); });
    return groups;
}

} // namespace amdkit
