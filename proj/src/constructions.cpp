#include "amdkit/constructions.hpp"

#include <algorithm>

namespace amdkit {

TonchevParameters tonchev_parameters(std::int64_t q, std::int64_t u, std::int64_t l) {
    if (u < 1 || l < 1) fail(errc::parameter, "u and l must be positive");
    if (u % 2 == 0 || l % 2 == 0) fail(errc::parity, "u and l must both be odd");
    if (q != 2 * u * l + 1)
        fail(errc::parameter, "q must equal 2*u*l + 1, got q=" + std::to_string(q));
    TonchevParameters p;
    p.q = q;
    p.u = u;
    p.l = l;
    p.lambda_stated = (q - 2 * l - 1) / 4;
    p.lambda_witnessed = u * (l - 1) / 2;
    p.lambdas_agree = p.lambda_stated == p.lambda_witnessed;
    return p;
}

ConstructionResult tonchev_edf(std::int64_t q, std::int64_t u, std::int64_t l, const FiniteField& field) {
    TonchevParameters p = tonchev_parameters(q, u, l);
    if (field.order() != q)
        fail(errc::parameter, "field order " + std::to_string(field.order()) +
                                  " does not match q=" + std::to_string(q));

    const FiniteAbelianGroup& g = field.additive_group();
    GroupElement alpha = find_primitive_element(field);

    // C = subgroup of order u (index 2l), generated by alpha^{2l}.
    GroupElement gen = field.pow(alpha, 2 * l);
    std::vector<GroupElement> subgroup;
    GroupElement cur = field.one();
    for (std::int64_t i = 0; i < u; ++i) {
        subgroup.push_back(cur);
        cur = field.mul(cur, gen);
    }

    std::vector<std::vector<std::int64_t>> cosets;
    for (std::int64_t i = 0; i < l; ++i) {
        GroupElement shift = field.pow(alpha, 2 * i);
        std::vector<std::int64_t> coset;
        for (const auto& c : subgroup) coset.push_back(g.index_of(field.mul(shift, c)));
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }

    ConstructionResult result{SetFamily::from_indices(g, std::move(cosets)), {}, {}};
    result.report = l >= 2 ? verify_edf(result.family)
                           : verify_ds_indices(g, result.family.index_sets()[0]);
    if (!p.lambdas_agree) {
        result.notes.push_back("stated lambda (q-2l-1)/4 = " + std::to_string(p.lambda_stated) +
                               " differs from witnessed lambda " + std::to_string(p.lambda_witnessed) +
                               " for u != l; the family is reported with l sets of size u");
    }
    if (u == 1)
        result.notes.push_back("degenerate case u=1: singleton cosets");
    return result;
}

ConstructionResult two_set_sedf(std::int64_t k) {
    if (k < 1) fail(errc::parameter, "k must be >= 1");
    FiniteAbelianGroup g = make_cyclic_group(k * k + 1);
    std::vector<std::int64_t> a1, a2;
    for (std::int64_t i = 0; i < k; ++i) a1.push_back(i);
    for (std::int64_t i = 1; i <= k; ++i) a2.push_back(i * k);
    ConstructionResult result{SetFamily::from_indices(g, {std::move(a1), std::move(a2)}), {}, {}};
    result.report = verify_sedf(result.family);
    return result;
}

ConstructionResult singleton_sedf(std::int64_t n) {
    if (n < 2) fail(errc::parameter, "n must be >= 2");
    FiniteAbelianGroup g = make_cyclic_group(n);
    std::vector<std::vector<std::int64_t>> sets;
    for (std::int64_t i = 0; i < n; ++i) sets.push_back({i});
    ConstructionResult result{SetFamily::from_indices(g, std::move(sets)), {}, {}};
    result.report = verify_sedf(result.family);
    return result;
}

ConstructionResult complement_gsedf(std::int64_t n) {
    if (n < 2) fail(errc::parameter, "n must be >= 2");
    FiniteAbelianGroup g = make_cyclic_group(n);
    std::vector<std::int64_t> rest;
    for (std::int64_t i = 1; i < n; ++i) rest.push_back(i);
    ConstructionResult result{SetFamily::from_indices(g, {{0}, std::move(rest)}), {}, {}};
    result.report = verify_gsedf(result.family);
    return result;
}

ConstructionResult qr_gsedf() {
    FiniteAbelianGroup g = make_cyclic_group(7);
    ConstructionResult result{SetFamily::from_indices(g, {{1}, {2}, {4}, {0, 3, 5, 6}}), {}, {}};
    result.report = verify_gsedf(result.family);
    return result;
}

ConstructionResult pedf_example_z13() {
    FiniteAbelianGroup g = make_cyclic_group(13);
    ConstructionResult result{
        SetFamily::from_indices(g, {{0, 1, 4}, {3, 5, 10}, {2, 6, 7, 9}, {8}, {11}, {12}}), {}, {}};
    result.report = verify_pedf(result.family);
    return result;
}

} // namespace amdkit
