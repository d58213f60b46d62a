#pragma once

#include <cstdint>
#include <vector>

#include "amdkit/group.hpp"

namespace amdkit {

/// Finite field F_q, q = p^d, built as Z_p[x]/(modulus) for a monic
/// irreducible modulus. Field elements are coefficient vectors c0..c_{d-1}
/// (constant term first), which makes them exactly the elements of the
/// additive group (Z_p)^d. Degree-1 fields use modulus x, so arithmetic is
/// plain integers mod p.
class FiniteField {
public:
    /// Prime field F_p. Throws errc::not_prime for composite p.
    static FiniteField prime(std::int64_t p);

    /// Extension field Z_p[x]/(modulus); modulus is c0..c_d with c_d = 1.
    /// Irreducibility is verified by trial division and errc::reducible_polynomial
    /// is thrown on failure.
    static FiniteField extension(std::int64_t p, std::vector<std::int64_t> modulus);

    /// Field of the given prime-power order. Primes go through prime();
    /// prime powers q in {4,8,9,16,25,27,32,49,64} use a built-in modulus
    /// table; other prime powers need an explicit modulus via extension().
    static FiniteField of_order(std::int64_t q);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return degree_; }
    std::int64_t order() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    const FiniteAbelianGroup& additive_group() const { return additive_; }

    GroupElement zero() const { return additive_.identity(); }
    GroupElement one() const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const { return additive_.add(a, b); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement pow(const GroupElement& a, std::int64_t e) const;

    /// Order of a in the multiplicative group, by brute-force powering.
    /// Throws errc::element_domain for zero.
    std::int64_t multiplicative_order(const GroupElement& a) const;

private:
    FiniteField(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t p_;
    int degree_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    FiniteAbelianGroup additive_;
};

/// First element in canonical enumeration order whose multiplicative order
/// is q-1. Deterministic; a primitive element always exists.
GroupElement find_primitive_element(const FiniteField& field);

} // namespace amdkit
