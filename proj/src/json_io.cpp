#include "amdkit/json_io.hpp"

#include <algorithm>

namespace amdkit {
namespace {

[[noreturn]] void bad_input(const std::string& what) {
    fail(errc::usage, what);
}

std::int64_t as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad_input(what + " must be an integer");
    return j.get<std::int64_t>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad_input("probabilities must be \"num/den\" strings");
}

} // namespace

GroupDescriptor parse_group_descriptor(const Json& j) {
    if (!j.is_object()) bad_input("group descriptor must be an object");
    if (j.contains("cyclic")) {
        const Json& orders = j.at("cyclic");
        if (!orders.is_array() || orders.empty()) bad_input("\"cyclic\" must be a nonempty array");
        std::vector<std::int64_t> parsed;
        for (const auto& o : orders) parsed.push_back(as_int(o, "cyclic factor order"));
        return {std::nullopt, FiniteAbelianGroup(std::move(parsed))};
    }
    if (j.contains("field")) {
        const Json& f = j.at("field");
        std::int64_t p = as_int(f.at("p"), "field characteristic");
        FiniteField field = [&] {
            if (f.contains("modulus")) {
                std::vector<std::int64_t> modulus;
                for (const auto& c : f.at("modulus")) modulus.push_back(as_int(c, "modulus coefficient"));
                return FiniteField::extension(p, std::move(modulus));
            }
            return FiniteField::prime(p);
        }();
        FiniteAbelianGroup additive = field.additive_group();
        return {std::move(field), std::move(additive)};
    }
    bad_input("group descriptor needs \"cyclic\" or \"field\"");
}

Json group_to_json(const FiniteAbelianGroup& g) {
    return Json{{"cyclic", g.orders()}};
}

Json field_to_json(const FiniteField& f) {
    return Json{{"field", {{"p", f.characteristic()}, {"modulus", f.modulus()}}}};
}

Json element_to_json(const GroupElement& e) {
    return Json(e);
}

GroupElement element_from_json(const FiniteAbelianGroup& g, const Json& j) {
    GroupElement e;
    if (j.is_number_integer()) {
        // Bare integers are accepted for rank-1 groups.
        e.push_back(j.get<std::int64_t>());
    } else if (j.is_array()) {
        for (const auto& c : j) e.push_back(as_int(c, "element coordinate"));
    } else {
        bad_input("element must be an integer array");
    }
    g.require_element(e);
    return e;
}

std::string element_key(const GroupElement& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "]";
}

Json family_to_json(const SetFamily& family) {
    Json sets = Json::array();
    for (std::size_t i = 0; i < family.set_count(); ++i) {
        Json set = Json::array();
        for (const auto& e : family.set_elements(i)) set.push_back(element_to_json(e));
        sets.push_back(std::move(set));
    }
    return Json{{"group", group_to_json(family.group())}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const Json& j, const FiniteAbelianGroup* fallback_group) {
    if (!j.is_object() || !j.contains("sets")) bad_input("family JSON needs a \"sets\" array");
    std::optional<FiniteAbelianGroup> group;
    if (j.contains("group"))
        group = parse_group_descriptor(j.at("group")).group;
    else if (fallback_group)
        group = *fallback_group;
    else
        bad_input("family JSON needs a \"group\" descriptor");
    std::vector<std::vector<GroupElement>> sets;
    for (const auto& s : j.at("sets")) {
        std::vector<GroupElement> set;
        for (const auto& e : s) set.push_back(element_from_json(*group, e));
        sets.push_back(std::move(set));
    }
    return SetFamily(*group, sets);
}

Json frequency_map_to_json(const FrequencyMap& map) {
    Json out = Json::object();
    for (const auto& [idx, count] : map.counts())
        out[element_key(map.group().element_at(idx))] = count;
    return out;
}

Json parameters_to_json(const FamilyParameters& p) {
    Json out;
    out["type"] = family_type_name(p.type);
    out["n"] = p.n;
    out["m"] = p.m;
    out["sizes"] = p.sizes;
    out["lambdas"] = p.lambdas;
    if (p.type == FamilyType::pedf) {
        Json classes = Json::array();
        for (const auto& c : p.classes) classes.push_back({{"count", c.count}, {"size", c.size}});
        out["classes"] = std::move(classes);
    }
    out["display"] = p.display();
    return out;
}

Json report_to_json(const VerificationReport& r) {
    Json out;
    out["verdict"] = r.pass ? "pass" : "fail";
    out["type"] = family_type_name(r.type);
    if (r.parameters) out["parameters"] = parameters_to_json(*r.parameters);
    if (r.counterexample) {
        out["counterexample"] = {{"element", element_to_json(r.counterexample->element)},
                                 {"observed", r.counterexample->observed},
                                 {"required", r.counterexample->required},
                                 {"context", r.counterexample->context}};
    }
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

Json identity_checks_to_json(const std::vector<IdentityCheck>& checks) {
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back(
            {{"identity", c.identity}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return out;
}

Json partition_check_to_json(const PartitionCheckReport& r) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p));
    Json out;
    out["whole"] = report_to_json(r.whole);
    out["parts"] = std::move(parts);
    out["equivalence_consistent"] = r.equivalence_consistent;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

Json code_to_json(const AmdCode& code) {
    Json sources = Json::array();
    for (const auto& src : code.sources()) {
        Json set = Json::array();
        Json probs = Json::array();
        for (std::size_t i = 0; i < src.set.size(); ++i) {
            set.push_back(element_to_json(code.group().element_at(src.set[i])));
            probs.push_back(src.probs[i].str());
        }
        sources.push_back({{"name", src.name}, {"set", std::move(set)}, {"probs", std::move(probs)}});
    }
    return Json{{"group", group_to_json(code.group())}, {"sources", std::move(sources)}};
}

AmdCode code_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("sources"))
        bad_input("code JSON needs \"group\" and \"sources\"");
    FiniteAbelianGroup group = parse_group_descriptor(j.at("group")).group;
    std::vector<AmdSource> sources;
    for (const auto& s : j.at("sources")) {
        AmdSource src;
        src.name = s.contains("name") ? s.at("name").get<std::string>()
                                      : "s" + std::to_string(sources.size() + 1);
        const Json& set = s.at("set");
        for (const auto& e : set) src.set.push_back(group.index_of(element_from_json(group, e)));
        if (s.contains("probs")) {
            for (const auto& p : s.at("probs")) src.probs.push_back(rational_from_json(p));
        } else {
            src.probs.assign(src.set.size(), Rational(1, static_cast<std::int64_t>(src.set.size())));
        }
        sources.push_back(std::move(src));
    }
    return AmdCode(std::move(group), std::move(sources));
}

namespace {

Json delta_table(const AmdCode& code, const std::vector<Rational>& eps_by_delta) {
    Json table = Json::array();
    for (std::int64_t delta = 1; delta < code.n(); ++delta)
        table.push_back({{"delta", element_to_json(code.group().element_at(delta))},
                         {"eps", eps_by_delta[static_cast<std::size_t>(delta)].str()}});
    return table;
}

Json delta_list(const AmdCode& code, const std::vector<std::int64_t>& deltas) {
    Json out = Json::array();
    for (std::int64_t d : deltas) out.push_back(element_to_json(code.group().element_at(d)));
    return out;
}

} // namespace

Json weak_evaluation_to_json(const AmdCode& code, const WeakEvaluation& eval, bool full_table) {
    Json out;
    out["mode"] = "weak";
    out["eps_hat"] = eval.eps_hat.str();
    out["argmax_deltas"] = delta_list(code, eval.argmax_deltas);
    if (eval.degenerate) out["degenerate"] = true;
    if (full_table) out["table"] = delta_table(code, eval.eps_by_delta);
    return out;
}

Json strong_evaluation_to_json(const AmdCode& code, const StrongEvaluation& eval, bool full_table) {
    Json per_source = Json::array();
    for (std::size_t s = 0; s < code.source_count(); ++s) {
        Json row;
        row["source"] = code.sources()[s].name;
        row["eps_hat"] = eval.eps_hat_s[s].str();
        row["argmax_deltas"] = delta_list(code, eval.argmax_deltas_s[s]);
        if (full_table) row["table"] = delta_table(code, eval.eps[s]);
        per_source.push_back(std::move(row));
    }
    Json out;
    out["mode"] = "strong";
    out["eps_hat"] = eval.eps_hat.str();
    Json argmax_sources = Json::array();
    for (std::size_t s : eval.argmax_sources) argmax_sources.push_back(code.sources()[s].name);
    out["argmax_sources"] = std::move(argmax_sources);
    out["per_source"] = std::move(per_source);
    if (eval.degenerate) out["degenerate"] = true;
    return out;
}

Json weak_bounds_to_json(const WeakBounds& b) {
    Json out;
    out["rand"] = b.rand.str();
    out["guess"] = b.guess.str();
    out["product_rhs"] = b.product_rhs.str();
    out["deterministic_floor"] = b.deterministic_floor.str();
    if (b.uniform_rand) out["uniform_rand"] = b.uniform_rand->str();
    return out;
}

Json strong_bounds_to_json(const AmdCode& code, const StrongBounds& b) {
    Json per_source = Json::array();
    for (std::size_t s = 0; s < code.source_count(); ++s)
        per_source.push_back({{"source", code.sources()[s].name},
                              {"rand", b.rand_s[s].str()},
                              {"guess", b.guess_s[s].str()}});
    Json out;
    out["per_source"] = std::move(per_source);
    out["global_rand"] = b.global_rand.str();
    out["global_guess"] = b.global_guess.str();
    if (b.product_rhs) out["product_rhs"] = b.product_rhs->str();
    return out;
}

Json classification_to_json(const AmdCode& code, const Classification& c) {
    Json out;
    out["weak_R"] = c.weak_R;
    out["weak_G"] = c.weak_G;
    out["strong_R"] = c.strong_R;
    out["strong_G"] = c.strong_G;
    out["weak_eps_hat"] = c.weak.eps_hat.str();
    out["strong_eps_hat"] = c.strong.eps_hat.str();
    out["weak_bounds"] = weak_bounds_to_json(c.weak_bounds);
    out["strong_bounds"] = strong_bounds_to_json(code, c.strong_bounds);
    return out;
}

Json simultaneous_report_to_json(const SimultaneousOptimalityReport& r) {
    Json out;
    out["weak_R"] = r.weak_R;
    out["weak_G"] = r.weak_G;
    out["weak_simultaneous"] = r.weak_simultaneous;
    out["family_is_lambda1_edf"] = r.family_is_lambda1_edf;
    out["strong_R"] = r.strong_R;
    out["strong_G"] = r.strong_G;
    out["strong_simultaneous"] = r.strong_simultaneous;
    out["strong_eps_hat"] = r.strong_eps_hat.str();
    out["consistent"] = r.consistent;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

SearchSpec search_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("group"))
        bad_input("search spec needs \"type\" and \"group\"");
    FamilyType type = family_type_from_name(j.at("type").get<std::string>());
    FiniteAbelianGroup group = parse_group_descriptor(j.at("group")).group;

    std::vector<std::size_t> sizes;
    if (j.contains("sizes")) {
        for (const auto& s : j.at("sizes")) sizes.push_back(static_cast<std::size_t>(as_int(s, "set size")));
    } else if (j.contains("classes")) {
        for (const auto& c : j.at("classes")) {
            std::int64_t count = as_int(c.at("count"), "class count");
            std::int64_t size = as_int(c.at("size"), "class size");
            for (std::int64_t i = 0; i < count; ++i) sizes.push_back(static_cast<std::size_t>(size));
        }
    } else if (type == FamilyType::ds) {
        sizes.push_back(static_cast<std::size_t>(as_int(j.at("size"), "set size")));
    } else {
        std::int64_t m = as_int(j.at("m"), "set count");
        std::int64_t k = as_int(j.at("k"), "set size");
        sizes.assign(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
    }

    std::vector<std::int64_t> lambdas;
    if (j.contains("lambdas")) {
        for (const auto& l : j.at("lambdas")) lambdas.push_back(as_int(l, "lambda"));
    } else if (j.contains("lambda")) {
        lambdas.push_back(as_int(j.at("lambda"), "lambda"));
    } else {
        bad_input("search spec needs \"lambda\" or \"lambdas\"");
    }

    SearchSpec spec{std::move(group), type, std::move(sizes), std::move(lambdas),
                    SearchMode::all_up_to_translation, 0, 1};
    if (j.contains("mode")) spec.mode = search_mode_from_name(j.at("mode").get<std::string>());
    if (j.contains("budget_nodes"))
        spec.node_budget = static_cast<std::uint64_t>(as_int(j.at("budget_nodes"), "node budget"));
    if (j.contains("jobs")) spec.jobs = static_cast<unsigned>(as_int(j.at("jobs"), "jobs"));
    return spec;
}

Json search_certificate_to_json(const SearchCertificate& cert) {
    Json out;
    out["spec"] = cert.spec_display;
    out["spec_hash"] = cert.spec_hash;
    out["outcome"] = search_outcome_name(cert.outcome);
    out["solutions_found"] = cert.solutions_found;
    out["nodes_explored"] = cert.nodes_explored;
    out["nodes_pruned"] = cert.nodes_pruned;
    Json solutions = Json::array();
    for (const auto& family : cert.solutions) {
        Json sets = Json::array();
        for (std::size_t i = 0; i < family.set_count(); ++i) {
            Json set = Json::array();
            for (const auto& e : family.set_elements(i)) set.push_back(element_to_json(e));
            sets.push_back(std::move(set));
        }
        solutions.push_back(std::move(sets));
    }
    out["solutions"] = std::move(solutions);
    return out;
}

Json sweep_report_to_json(const SweepReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"n", r.n},
                        {"m", r.m},
                        {"k", r.k},
                        {"lambda", r.lambda},
                        {"group", r.group_desc},
                        {"outcome", search_outcome_name(r.outcome)},
                        {"nodes", r.nodes}});
    Json out;
    out["rows"] = std::move(rows);
    out["excluded"] = report.excluded;
    return out;
}

} // namespace amdkit
