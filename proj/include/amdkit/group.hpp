#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amdkit/errors.hpp"

namespace amdkit {

/// A group element is a tuple of residues, one per cyclic factor.
using GroupElement = std::vector<std::int64_t>;

/// Finite abelian group presented as a direct product Z_{n1} x ... x Z_{nr}.
/// Immutable after construction; every operation is a pure function.
///
/// Elements carry a canonical order: lexicographic on coordinate tuples,
/// equivalently the mixed-radix index computed by index_of(). All
/// "first/smallest" choices elsewhere in the toolkit use this order.
class FiniteAbelianGroup {
public:
    /// Throws errc::invalid_order unless every factor order is >= 2.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> orders);

    std::int64_t order() const { return n_; }
    std::size_t rank() const { return orders_.size(); }
    const std::vector<std::int64_t>& orders() const { return orders_; }

    bool contains(const GroupElement& a) const;
    /// Throws errc::element_domain when a is not a valid element.
    void require_element(const GroupElement& a) const;

    GroupElement identity() const { return GroupElement(orders_.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;

    /// Rank of a in the canonical lexicographic enumeration, in [0, n).
    std::int64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::int64_t index) const;
    std::vector<GroupElement> elements() const;

    // Index-space arithmetic for hot paths; indices must be in [0, n).
    std::int64_t add_index(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_index(std::int64_t a) const;
    std::int64_t sub_index(std::int64_t a, std::int64_t b) const;

    /// "Z21" or "Z3xZ3"; used in reports and sweep tables.
    std::string describe() const;

    bool operator==(const FiniteAbelianGroup& rhs) const { return orders_ == rhs.orders_; }
    bool operator!=(const FiniteAbelianGroup& rhs) const { return !(*this == rhs); }

private:
    std::vector<std::int64_t> orders_;
    std::vector<std::int64_t> strides_; // strides_[i] = product of orders_[i+1..]
    std::int64_t n_;
};

FiniteAbelianGroup make_cyclic_group(std::int64_t n);

/// All abelian groups of order n up to isomorphism, in a deterministic order
/// (primary decomposition, factors sorted ascending). Desk-scale n only.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n);

bool is_prime(std::int64_t n);

} // namespace amdkit
