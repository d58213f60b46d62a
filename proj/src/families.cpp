#include "amdkit/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace amdkit {

std::string family_type_name(FamilyType t) {
    switch (t) {
        case FamilyType::ds: return "ds";
        case FamilyType::df: return "df";
        case FamilyType::edf: return "edf";
        case FamilyType::bedf: return "bedf";
        case FamilyType::sedf: return "sedf";
        case FamilyType::gedf: return "gedf";
        case FamilyType::gsedf: return "gsedf";
        case FamilyType::bgsedf: return "bgsedf";
        case FamilyType::pedf: return "pedf";
    }
    fail(errc::internal, "unknown family type");
}

FamilyType family_type_from_name(const std::string& name) {
    static const std::map<std::string, FamilyType> table = {
        {"ds", FamilyType::ds},         {"df", FamilyType::df},
        {"edf", FamilyType::edf},       {"bedf", FamilyType::bedf},
        {"sedf", FamilyType::sedf},     {"gedf", FamilyType::gedf},
        {"gsedf", FamilyType::gsedf},   {"bgsedf", FamilyType::bgsedf},
        {"pedf", FamilyType::pedf},
    };
    auto it = table.find(name);
    if (it == table.end()) fail(errc::usage, "unknown family type '" + name + "'");
    return it->second;
}

bool FamilyParameters::uniform_size() const {
    return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::string upper_name(FamilyType t) {
    std::string s = family_type_name(t);
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

std::string FamilyParameters::display() const {
    std::ostringstream os;
    os << "(" << n;
    switch (type) {
        case FamilyType::ds:
            os << "," << (sizes.empty() ? 0 : sizes[0]) << "," << (lambdas.empty() ? 0 : lambdas[0]);
            break;
        case FamilyType::df:
        case FamilyType::edf:
        case FamilyType::bedf:
        case FamilyType::sedf:
            if (uniform_size())
                os << "," << m << "," << (sizes.empty() ? 0 : sizes[0]) << "," << (lambdas.empty() ? 0 : lambdas[0]);
            else
                os << "," << m << ";" << join_sizes(sizes) << ";" << join(lambdas);
            break;
        case FamilyType::gedf:
            os << "," << m << ";" << join_sizes(sizes) << ";" << (lambdas.empty() ? 0 : lambdas[0]);
            break;
        case FamilyType::gsedf:
        case FamilyType::bgsedf:
            os << "," << m << ";" << join_sizes(sizes) << ";" << join(lambdas);
            break;
        case FamilyType::pedf: {
            std::vector<std::int64_t> cs, ks;
            for (const auto& c : classes) {
                cs.push_back(static_cast<std::int64_t>(c.count));
                ks.push_back(static_cast<std::int64_t>(c.size));
            }
            os << "," << m << ";" << join(cs) << ";" << join(ks) << ";" << join(lambdas);
            break;
        }
    }
    os << ")-" << upper_name(type);
    return os.str();
}

namespace {

// For a nonuniform map, witness the first element (canonical order) whose
// count differs from the count of element 1; uniformity would force them
// equal, and both counts are re-checkable by hand.
Counterexample nonuniform_witness(const FiniteAbelianGroup& g, const FrequencyMap& map,
                                  const std::string& context) {
    std::int64_t ref = map.count_of_index(1);
    auto dev = map.first_deviation(ref);
    Counterexample ce;
    ce.element = g.element_at(dev->first);
    ce.observed = dev->second;
    ce.required = ref;
    ce.context = context;
    return ce;
}

VerificationReport uniform_verdict(const SetFamily& family, FamilyType type, const FrequencyMap& map,
                                   FamilyParameters params, const std::string& context) {
    VerificationReport report;
    report.type = type;
    auto lambda = map.uniform_value();
    if (lambda) {
        params.lambdas = {*lambda};
        report.pass = true;
        report.parameters = std::move(params);
        return report;
    }
    report.pass = false;
    report.counterexample = nonuniform_witness(family.group(), map, context);
    return report;
}

FamilyParameters base_params(const SetFamily& family, FamilyType type) {
    FamilyParameters p;
    p.type = type;
    p.n = family.group().order();
    p.m = family.set_count();
    p.sizes = family.sizes();
    return p;
}

void require_external_preconditions(const SetFamily& family, FamilyType type, bool uniform_k) {
    if (family.set_count() < 2)
        fail(errc::trivial_family,
             family_type_name(type) + " requires at least two sets");
    family.require_disjoint();
    for (const auto& s : family.index_sets())
        if (s.empty()) fail(errc::element_domain, "family contains an empty set");
    if (uniform_k) {
        auto sizes = family.sizes();
        if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
            fail(errc::wrong_type,
                 family_type_name(type) + " requires equal set sizes (use the generalized type)");
    }
}

} // namespace

VerificationReport verify_ds_indices(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& set) {
    if (set.empty()) fail(errc::element_domain, "difference set must be nonempty");
    FrequencyMap diffs = internal_differences_indices(g, set);
    SetFamily wrapper = SetFamily::from_indices(g, {set});
    FamilyParameters params;
    params.type = FamilyType::ds;
    params.n = g.order();
    params.m = 1;
    params.sizes = {set.size()};
    return uniform_verdict(wrapper, FamilyType::ds, diffs, std::move(params), "internal differences");
}

VerificationReport verify_ds(const FiniteAbelianGroup& g, const std::vector<GroupElement>& set) {
    std::vector<std::int64_t> idx;
    idx.reserve(set.size());
    for (const auto& e : set) idx.push_back(g.index_of(e));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        fail(errc::element_domain, "duplicate element within a set");
    return verify_ds_indices(g, idx);
}

VerificationReport verify_df(const SetFamily& family, bool require_uniform_k) {
    if (family.set_count() == 0) fail(errc::trivial_family, "difference family must be nonempty");
    for (const auto& s : family.index_sets())
        if (s.empty()) fail(errc::element_domain, "family contains an empty set");
    if (require_uniform_k) {
        auto sizes = family.sizes();
        if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
            fail(errc::wrong_type, "df blocks have unequal sizes");
    }
    FrequencyMap sum(family.group());
    for (const auto& s : family.index_sets()) {
        if (s.size() > 1) sum.merge(internal_differences_indices(family.group(), s));
    }
    return uniform_verdict(family, FamilyType::df, sum, base_params(family, FamilyType::df),
                           "union of internal differences");
}

VerificationReport verify_edf(const SetFamily& family) {
    require_external_preconditions(family, FamilyType::edf, /*uniform_k=*/true);
    return uniform_verdict(family, FamilyType::edf, external_difference_multiset(family),
                           base_params(family, FamilyType::edf), "external differences");
}

VerificationReport verify_bedf(const SetFamily& family, std::int64_t lambda,
                               bool require_uniform_k) {
    require_external_preconditions(family, FamilyType::bedf, require_uniform_k);
    FrequencyMap map = external_difference_multiset(family);
    VerificationReport report;
    report.type = FamilyType::bedf;
    FamilyParameters params = base_params(family, FamilyType::bedf);
    params.lambdas = {lambda};
    report.notes.push_back("observed max count " + std::to_string(map.max_count()));
    if (map.max_count() <= lambda) {
        report.pass = true;
        report.parameters = std::move(params);
        return report;
    }
    for (const auto& [idx, c] : map.counts()) {
        if (c > lambda) {
            Counterexample ce;
            ce.element = family.group().element_at(idx);
            ce.observed = c;
            ce.required = lambda;
            ce.context = "external difference count exceeds bound";
            report.counterexample = std::move(ce);
            break;
        }
    }
    return report;
}

VerificationReport verify_sedf(const SetFamily& family) {
    require_external_preconditions(family, FamilyType::sedf, /*uniform_k=*/true);
    VerificationReport report;
    report.type = FamilyType::sedf;
    std::optional<std::int64_t> lambda;
    for (std::size_t i = 0; i < family.set_count(); ++i) {
        FrequencyMap map = outgoing_differences(family, i);
        auto value = map.uniform_value();
        std::string context = "outgoing differences of set " + std::to_string(i + 1);
        if (!value) {
            report.counterexample = nonuniform_witness(family.group(), map, context);
            return report;
        }
        if (lambda && *value != *lambda) {
            // Uniform, but at a different lambda than an earlier set.
            Counterexample ce;
            ce.element = family.group().element_at(1);
            ce.observed = *value;
            ce.required = *lambda;
            ce.context = context;
            report.counterexample = std::move(ce);
            return report;
        }
        lambda = value;
    }
    FamilyParameters params = base_params(family, FamilyType::sedf);
    params.lambdas = {*lambda};
    report.pass = true;
    report.parameters = std::move(params);
    return report;
}

VerificationReport verify_gedf(const SetFamily& family) {
    require_external_preconditions(family, FamilyType::gedf, /*uniform_k=*/false);
    return uniform_verdict(family, FamilyType::gedf, external_difference_multiset(family),
                           base_params(family, FamilyType::gedf), "external differences");
}

VerificationReport verify_gsedf(const SetFamily& family) {
    require_external_preconditions(family, FamilyType::gsedf, /*uniform_k=*/false);
    VerificationReport report;
    report.type = FamilyType::gsedf;
    std::vector<std::int64_t> lambdas;
    for (std::size_t i = 0; i < family.set_count(); ++i) {
        FrequencyMap map = outgoing_differences(family, i);
        auto value = map.uniform_value();
        if (!value) {
            report.counterexample = nonuniform_witness(
                family.group(), map, "outgoing differences of set " + std::to_string(i + 1));
            return report;
        }
        lambdas.push_back(*value);
    }
    FamilyParameters params = base_params(family, FamilyType::gsedf);
    params.lambdas = std::move(lambdas);
    report.pass = true;
    report.parameters = std::move(params);
    return report;
}

VerificationReport verify_bgsedf(const SetFamily& family, const std::vector<std::int64_t>& lambdas) {
    require_external_preconditions(family, FamilyType::bgsedf, /*uniform_k=*/false);
    if (lambdas.size() != family.set_count())
        fail(errc::parameter, "bgsedf needs one lambda bound per set");
    VerificationReport report;
    report.type = FamilyType::bgsedf;
    for (std::size_t j = 0; j < family.set_count(); ++j) {
        FrequencyMap map = incoming_differences(family, j);
        if (map.max_count() <= lambdas[j]) continue;
        for (const auto& [idx, c] : map.counts()) {
            if (c > lambdas[j]) {
                Counterexample ce;
                ce.element = family.group().element_at(idx);
                ce.observed = c;
                ce.required = lambdas[j];
                ce.context = "incoming differences of set " + std::to_string(j + 1);
                report.counterexample = std::move(ce);
                break;
            }
        }
        return report;
    }
    FamilyParameters params = base_params(family, FamilyType::bgsedf);
    params.lambdas = lambdas;
    report.pass = true;
    report.parameters = std::move(params);
    return report;
}

std::vector<SizeClass> derive_size_classes(const SetFamily& family) {
    std::vector<SizeClass> classes;
    for (const auto& s : family.index_sets()) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const SizeClass& c) { return c.size == s.size(); });
        if (it == classes.end())
            classes.push_back({1, s.size()});
        else
            ++it->count;
    }
    return classes;
}

std::vector<std::vector<std::size_t>> class_index_lists(const SetFamily& family) {
    std::vector<SizeClass> classes = derive_size_classes(family);
    std::vector<std::vector<std::size_t>> lists(classes.size());
    for (std::size_t i = 0; i < family.set_count(); ++i) {
        std::size_t size = family.index_sets()[i].size();
        for (std::size_t h = 0; h < classes.size(); ++h)
            if (classes[h].size == size) {
                lists[h].push_back(i);
                break;
            }
    }
    return lists;
}

VerificationReport verify_pedf(const SetFamily& family, const std::vector<SizeClass>& profile) {
    require_external_preconditions(family, FamilyType::pedf, /*uniform_k=*/false);
    std::vector<SizeClass> classes = derive_size_classes(family);
    if (!profile.empty() && profile != classes)
        fail(errc::class_definition, "class profile does not match the family's set sizes");
    VerificationReport report;
    report.type = FamilyType::pedf;
    std::vector<std::int64_t> lambdas;
    auto lists = class_index_lists(family);
    for (std::size_t h = 0; h < lists.size(); ++h) {
        FrequencyMap map = class_differences(family, lists[h]);
        auto value = map.uniform_value();
        if (!value) {
            report.counterexample = nonuniform_witness(
                family.group(), map, "class differences for size " + std::to_string(classes[h].size));
            return report;
        }
        lambdas.push_back(*value);
    }
    FamilyParameters params = base_params(family, FamilyType::pedf);
    params.classes = std::move(classes);
    params.lambdas = std::move(lambdas);
    report.pass = true;
    report.parameters = std::move(params);
    return report;
}

VerificationReport verify_family(const SetFamily& family, FamilyType type,
                                 const std::vector<std::int64_t>& lambdas,
                                 const std::vector<SizeClass>& profile) {
    switch (type) {
        case FamilyType::ds:
            if (family.set_count() != 1)
                fail(errc::wrong_type, "ds verification expects exactly one set");
            return verify_ds_indices(family.group(), family.index_sets()[0]);
        case FamilyType::df: return verify_df(family);
        case FamilyType::edf: return verify_edf(family);
        case FamilyType::bedf:
            if (lambdas.size() != 1) fail(errc::parameter, "bedf needs a single lambda bound");
            return verify_bedf(family, lambdas[0]);
        case FamilyType::sedf: return verify_sedf(family);
        case FamilyType::gedf: return verify_gedf(family);
        case FamilyType::gsedf: return verify_gsedf(family);
        case FamilyType::bgsedf: return verify_bgsedf(family, lambdas);
        case FamilyType::pedf: return verify_pedf(family, profile);
    }
    fail(errc::internal, "unknown family type");
}

std::vector<IdentityCheck> check_parameter_identity(const FamilyParameters& p) {
    std::vector<IdentityCheck> checks;
    auto push_eq = [&](const std::string& text, std::int64_t lhs, std::int64_t rhs) {
        checks.push_back({lhs == rhs, text, lhs, rhs});
    };
    auto push_ge = [&](const std::string& text, std::int64_t lhs, std::int64_t rhs) {
        checks.push_back({lhs >= rhs, text, lhs, rhs});
    };
    const std::int64_t n1 = p.n - 1;
    std::int64_t a = 0;
    for (std::size_t k : p.sizes) a += static_cast<std::int64_t>(k);
    auto l = [&](std::size_t i) { return i < p.lambdas.size() ? p.lambdas[i] : 0; };

    switch (p.type) {
        case FamilyType::ds: {
            std::int64_t s = p.sizes.empty() ? 0 : static_cast<std::int64_t>(p.sizes[0]);
            push_eq("lambda*(n-1) = s*(s-1)", l(0) * n1, s * (s - 1));
            break;
        }
        case FamilyType::df: {
            std::int64_t rhs = 0;
            for (std::size_t k : p.sizes) rhs += static_cast<std::int64_t>(k) * (static_cast<std::int64_t>(k) - 1);
            push_eq("lambda*(n-1) = sum k_i*(k_i-1)", l(0) * n1, rhs);
            break;
        }
        case FamilyType::edf: {
            std::int64_t k = p.sizes.empty() ? 0 : static_cast<std::int64_t>(p.sizes[0]);
            std::int64_t m = static_cast<std::int64_t>(p.m);
            push_eq("lambda*(n-1) = k^2*m*(m-1)", l(0) * n1, k * k * m * (m - 1));
            push_ge("n >= m*k", p.n, m * k);
            break;
        }
        case FamilyType::bedf: {
            std::int64_t k = p.sizes.empty() ? 0 : static_cast<std::int64_t>(p.sizes[0]);
            std::int64_t m = static_cast<std::int64_t>(p.m);
            push_ge("lambda*(n-1) >= k^2*m*(m-1)", l(0) * n1, k * k * m * (m - 1));
            push_ge("n >= m*k", p.n, m * k);
            break;
        }
        case FamilyType::sedf: {
            std::int64_t k = p.sizes.empty() ? 0 : static_cast<std::int64_t>(p.sizes[0]);
            std::int64_t m = static_cast<std::int64_t>(p.m);
            push_eq("lambda*(n-1) = k^2*(m-1)", l(0) * n1, k * k * (m - 1));
            push_ge("n >= m*k", p.n, m * k);
            break;
        }
        case FamilyType::gedf: {
            std::int64_t rhs = a * a;
            for (std::size_t k : p.sizes) rhs -= static_cast<std::int64_t>(k) * static_cast<std::int64_t>(k);
            push_eq("lambda*(n-1) = a^2 - sum k_i^2", l(0) * n1, rhs);
            push_ge("n >= a", p.n, a);
            break;
        }
        case FamilyType::gsedf: {
            for (std::size_t i = 0; i < p.sizes.size(); ++i) {
                std::int64_t k = static_cast<std::int64_t>(p.sizes[i]);
                push_eq("k_" + std::to_string(i + 1) + "*(a-k_" + std::to_string(i + 1) +
                            ") = lambda_" + std::to_string(i + 1) + "*(n-1)",
                        k * (a - k), l(i) * n1);
            }
            push_ge("n >= a", p.n, a);
            break;
        }
        case FamilyType::bgsedf: {
            for (std::size_t i = 0; i < p.sizes.size(); ++i) {
                std::int64_t k = static_cast<std::int64_t>(p.sizes[i]);
                push_ge("lambda_" + std::to_string(i + 1) + "*(n-1) >= k_" + std::to_string(i + 1) +
                            "*(a-k_" + std::to_string(i + 1) + ")",
                        l(i) * n1, k * (a - k));
            }
            push_ge("n >= a", p.n, a);
            break;
        }
        case FamilyType::pedf: {
            for (std::size_t h = 0; h < p.classes.size(); ++h) {
                std::int64_t c = static_cast<std::int64_t>(p.classes[h].count);
                std::int64_t k = static_cast<std::int64_t>(p.classes[h].size);
                push_eq("c_" + std::to_string(h + 1) + "*k_" + std::to_string(h + 1) + "*(a-k_" +
                            std::to_string(h + 1) + ") = lambda_" + std::to_string(h + 1) + "*(n-1)",
                        c * k * (a - k), l(h) * n1);
            }
            push_ge("n >= a", p.n, a);
            break;
        }
    }
    return checks;
}

bool parameters_feasible(const FamilyParameters& params) {
    for (const auto& c : check_parameter_identity(params))
        if (!c.pass) return false;
    return true;
}

const std::vector<std::pair<FamilyType, FamilyType>>& lattice_edges() {
    static const std::vector<std::pair<FamilyType, FamilyType>> edges = {
        {FamilyType::sedf, FamilyType::gsedf}, {FamilyType::sedf, FamilyType::edf},
        {FamilyType::ds, FamilyType::edf},     {FamilyType::ds, FamilyType::df},
        {FamilyType::gsedf, FamilyType::bgsedf}, {FamilyType::gsedf, FamilyType::pedf},
        {FamilyType::edf, FamilyType::pedf},   {FamilyType::edf, FamilyType::bedf},
        {FamilyType::pedf, FamilyType::gedf},
    };
    return edges;
}

bool is_lattice_edge(FamilyType from, FamilyType to) {
    for (const auto& [f, t] : lattice_edges())
        if (f == from && t == to) return true;
    return false;
}

VerificationReport implication_check(const SetFamily& family, FamilyType from, FamilyType to) {
    if (!is_lattice_edge(from, to))
        fail(errc::lattice, family_type_name(from) + " -> " + family_type_name(to) +
                                " is not an edge of the implication lattice");

    VerificationReport source = verify_family(family, from);
    if (!source.pass) {
        VerificationReport report;
        report.type = to;
        report.counterexample = source.counterexample;
        report.notes.push_back("family does not verify as " + family_type_name(from));
        return report;
    }
    const FamilyParameters& sp = *source.parameters;

    // Translate the witnessed source parameters along the edge.
    FamilyParameters expected;
    const SetFamily* target_family = &family;
    std::optional<SetFamily> lifted;
    switch (from) {
        case FamilyType::sedf:
            if (to == FamilyType::gsedf) {
                expected = sp;
                expected.type = FamilyType::gsedf;
                expected.lambdas.assign(sp.m, sp.lambdas[0]);
            } else { // edf: lambda scales by m
                expected = sp;
                expected.type = FamilyType::edf;
                expected.lambdas = {sp.lambdas[0] * static_cast<std::int64_t>(sp.m)};
            }
            break;
        case FamilyType::ds: {
            std::size_t s = sp.sizes[0];
            if (to == FamilyType::edf) {
                // Lift the set to a family of singletons.
                std::vector<std::vector<std::int64_t>> singletons;
                for (std::int64_t idx : family.index_sets()[0]) singletons.push_back({idx});
                lifted = SetFamily::from_indices(family.group(), std::move(singletons));
                target_family = &*lifted;
                expected.type = FamilyType::edf;
                expected.n = sp.n;
                expected.m = s;
                expected.sizes.assign(s, 1);
                expected.lambdas = sp.lambdas;
            } else { // df: one block of size s
                expected.type = FamilyType::df;
                expected.n = sp.n;
                expected.m = 1;
                expected.sizes = {s};
                expected.lambdas = sp.lambdas;
            }
            break;
        }
        case FamilyType::gsedf:
            if (to == FamilyType::bgsedf) {
                expected = sp;
                expected.type = FamilyType::bgsedf;
            } else { // pedf: classes by size, lambda_h sums the member lambdas
                expected.type = FamilyType::pedf;
                expected.n = sp.n;
                expected.m = sp.m;
                expected.sizes = sp.sizes;
                expected.classes = derive_size_classes(family);
                auto lists = class_index_lists(family);
                for (const auto& list : lists) {
                    std::int64_t sum = 0;
                    for (std::size_t i : list) sum += sp.lambdas[i];
                    expected.lambdas.push_back(sum);
                }
            }
            break;
        case FamilyType::edf:
            if (to == FamilyType::pedf) {
                expected.type = FamilyType::pedf;
                expected.n = sp.n;
                expected.m = sp.m;
                expected.sizes = sp.sizes;
                expected.classes = {{sp.m, sp.sizes[0]}};
                expected.lambdas = sp.lambdas;
            } else { // bedf with the same lambda
                expected = sp;
                expected.type = FamilyType::bedf;
            }
            break;
        case FamilyType::pedf: {
            expected.type = FamilyType::gedf;
            expected.n = sp.n;
            expected.m = sp.m;
            expected.sizes = sp.sizes;
            std::int64_t sum = 0;
            for (std::int64_t l : sp.lambdas) sum += l;
            expected.lambdas = {sum};
            break;
        }
        default:
            fail(errc::internal, "unhandled lattice edge");
    }

    VerificationReport target = verify_family(*target_family, to, expected.lambdas, expected.classes);
    target.notes.insert(target.notes.begin(),
                        "translated from " + sp.display() + " expecting " + expected.display());
    if (target.pass && *target.parameters != expected) {
        target.pass = false;
        target.notes.push_back("witnessed " + target.parameters->display() +
                               " differs from translated parameters");
    }
    return target;
}

PartitionCheckReport maximal_gsedf_ds_check(const SetFamily& partition) {
    if (partition.total_size() != partition.group().order() || !partition.pairwise_disjoint())
        fail(errc::precondition, "sets do not partition the group");

    PartitionCheckReport report;
    report.whole = verify_gsedf(partition);
    bool all_ds = true;
    for (std::size_t i = 0; i < partition.set_count(); ++i) {
        VerificationReport ds = verify_ds_indices(partition.group(), partition.index_sets()[i]);
        all_ds = all_ds && ds.pass;
        report.parts.push_back(std::move(ds));
    }
    report.equivalence_consistent = (report.whole.pass == all_ds);
    if (report.whole.pass && all_ds) {
        // lambda_DS = k_i - lambda_i must hold per part.
        for (std::size_t i = 0; i < partition.set_count(); ++i) {
            std::int64_t k = static_cast<std::int64_t>(partition.index_sets()[i].size());
            std::int64_t expected = k - report.whole.parameters->lambdas[i];
            if (report.parts[i].parameters->lambdas[0] != expected) {
                report.equivalence_consistent = false;
                report.notes.push_back("part " + std::to_string(i + 1) +
                                       " lambda_DS != k_i - lambda_i");
            }
        }
    }
    if (!report.equivalence_consistent)
        report.notes.push_back("internal-consistency failure: partition characterization violated");
    return report;
}

PartitionCheckReport maximal_pedf_df_check(const SetFamily& partition,
                                           const std::vector<SizeClass>& profile) {
    if (partition.total_size() != partition.group().order() || !partition.pairwise_disjoint())
        fail(errc::precondition, "sets do not partition the group");

    PartitionCheckReport report;
    report.whole = verify_pedf(partition, profile);
    auto classes = derive_size_classes(partition);
    auto lists = class_index_lists(partition);
    bool all_df = true;
    for (const auto& list : lists) {
        std::vector<std::vector<std::int64_t>> blocks;
        for (std::size_t i : list) blocks.push_back(partition.index_sets()[i]);
        SetFamily class_family = SetFamily::from_indices(partition.group(), std::move(blocks));
        VerificationReport df = verify_df(class_family);
        all_df = all_df && df.pass;
        report.parts.push_back(std::move(df));
    }
    report.equivalence_consistent = (report.whole.pass == all_df);
    if (report.whole.pass && all_df) {
        // lambda_DF = c_h*k_h - lambda_h per size class.
        for (std::size_t h = 0; h < classes.size(); ++h) {
            std::int64_t expected = static_cast<std::int64_t>(classes[h].count) *
                                        static_cast<std::int64_t>(classes[h].size) -
                                    report.whole.parameters->lambdas[h];
            if (report.parts[h].parameters->lambdas[0] != expected) {
                report.equivalence_consistent = false;
                report.notes.push_back("class " + std::to_string(h + 1) +
                                       " lambda_DF != c_h*k_h - lambda_h");
            }
        }
    }
    if (!report.equivalence_consistent)
        report.notes.push_back("internal-consistency failure: partition characterization violated");
    return report;
}

} // namespace amdkit
