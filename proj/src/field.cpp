#include "amdkit/field.hpp"

#include <algorithm>
#include <map>

namespace amdkit {
namespace {

// Polynomials over Z_p, coefficients c0..c_deg, possibly with trailing zeros.
using Poly = std::vector<std::int64_t>;

int poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

// Remainder of f modulo a monic divisor g (no inverses needed).
Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
    int dg = poly_degree(g);
    for (int i = poly_degree(f); i >= dg; --i) {
        std::int64_t c = f[static_cast<std::size_t>(i)] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            auto& coef = f[static_cast<std::size_t>(i - dg + j)];
            coef = ((coef - c * g[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    f.resize(static_cast<std::size_t>(dg));
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), modulus, p);
}

// Enumerates all monic polynomials of the given degree over Z_p and trial
// divides. Exponential in degree, fine for the desk-scale moduli shipped here.
bool is_irreducible(const Poly& f, std::int64_t p) {
    int d = poly_degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::int64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            Poly g(static_cast<std::size_t>(dd) + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < dd; ++i) {
                g[static_cast<std::size_t>(i)] = c % p;
                c /= p;
            }
            g[static_cast<std::size_t>(dd)] = 1;
            if (poly_degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

// Moduli for the prime powers a desk-scale run needs; everything here is
// re-verified by is_irreducible at construction.
const std::map<std::int64_t, std::pair<std::int64_t, Poly>>& builtin_moduli() {
    static const std::map<std::int64_t, std::pair<std::int64_t, Poly>> table = {
        {4, {2, {1, 1, 1}}},           // x^2+x+1
        {8, {2, {1, 1, 0, 1}}},        // x^3+x+1
        {9, {3, {1, 0, 1}}},           // x^2+1
        {16, {2, {1, 1, 0, 0, 1}}},    // x^4+x+1
        {25, {5, {2, 0, 1}}},          // x^2+2
        {27, {3, {1, 2, 0, 1}}},       // x^3+2x+1
        {32, {2, {1, 0, 1, 0, 0, 1}}}, // x^5+x^2+1
        {49, {7, {1, 0, 1}}},          // x^2+1
        {64, {2, {1, 1, 0, 0, 0, 0, 1}}}, // x^6+x+1
    };
    return table;
}

} // namespace

FiniteField::FiniteField(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p),
      degree_(poly_degree(modulus)),
      modulus_(std::move(modulus)),
      additive_(std::vector<std::int64_t>(static_cast<std::size_t>(std::max(poly_degree(modulus_), 1)), p)) {
    q_ = 1;
    for (int i = 0; i < degree_; ++i) q_ *= p_;
}

FiniteField FiniteField::prime(std::int64_t p) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    return FiniteField(p, {0, 1});
}

FiniteField FiniteField::extension(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    int d = poly_degree(modulus);
    if (d < 1) fail(errc::reducible_polynomial, "modulus must have degree >= 1");
    if (modulus[static_cast<std::size_t>(d)] != 1)
        fail(errc::reducible_polynomial, "modulus must be monic");
    modulus.resize(static_cast<std::size_t>(d) + 1);
    if (!is_irreducible(modulus, p))
        fail(errc::reducible_polynomial, "modulus is reducible over Z_" + std::to_string(p));
    return FiniteField(p, std::move(modulus));
}

FiniteField FiniteField::of_order(std::int64_t q) {
    if (is_prime(q)) return prime(q);
    auto it = builtin_moduli().find(q);
    if (it == builtin_moduli().end())
        fail(errc::parameter,
             "no built-in modulus for order " + std::to_string(q) + "; supply one explicitly");
    return extension(it->second.first, it->second.second);
}

GroupElement FiniteField::one() const {
    GroupElement e = additive_.identity();
    e[0] = 1;
    return e;
}

GroupElement FiniteField::mul(const GroupElement& a, const GroupElement& b) const {
    additive_.require_element(a);
    additive_.require_element(b);
    Poly prod = poly_mul_mod(a, b, modulus_, p_);
    prod.resize(static_cast<std::size_t>(degree_), 0);
    return prod;
}

GroupElement FiniteField::pow(const GroupElement& a, std::int64_t e) const {
    additive_.require_element(a);
    if (e < 0) fail(errc::parameter, "negative exponent");
    GroupElement result = one();
    GroupElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::int64_t FiniteField::multiplicative_order(const GroupElement& a) const {
    additive_.require_element(a);
    if (a == zero()) fail(errc::element_domain, "zero has no multiplicative order");
    GroupElement acc = a;
    std::int64_t ord = 1;
    const GroupElement unit = one();
    while (acc != unit) {
        acc = mul(acc, a);
        ++ord;
        if (ord > q_) fail(errc::internal, "multiplicative order search did not terminate");
    }
    return ord;
}

GroupElement find_primitive_element(const FiniteField& field) {
    const auto& g = field.additive_group();
    for (std::int64_t i = 1; i < field.order(); ++i) {
        GroupElement candidate = g.element_at(i);
        if (field.multiplicative_order(candidate) == field.order() - 1) return candidate;
    }
    fail(errc::internal, "no primitive element found"); // unreachable for a real field
}

} // namespace amdkit
