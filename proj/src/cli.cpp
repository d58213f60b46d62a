#include "amdkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "amdkit/constructions.hpp"
#include "amdkit/corpus.hpp"
#include "amdkit/json_io.hpp"
#include "amdkit/version.hpp"

namespace amdkit::cli {
namespace {

std::string errc_name(errc code) {
    switch (code) {
        case errc::invalid_order: return "invalid-order";
        case errc::element_domain: return "element-domain";
        case errc::not_prime: return "not-prime";
        case errc::reducible_polynomial: return "reducible-polynomial";
        case errc::disjointness: return "disjointness";
        case errc::trivial_family: return "trivial-family";
        case errc::index_range: return "index-range";
        case errc::class_definition: return "class-definition";
        case errc::wrong_type: return "wrong-type";
        case errc::zero_delta: return "zero-delta";
        case errc::precondition: return "precondition";
        case errc::lattice: return "lattice";
        case errc::identity: return "identity";
        case errc::parameter: return "parameter";
        case errc::parity: return "parity";
        case errc::overflow: return "overflow";
        case errc::usage: return "usage";
        case errc::internal: return "internal";
    }
    return "unknown";
}

// Inline JSON, or @path to read from a file.
Json load_json(const std::string& text, const std::string& what) {
    std::string payload = text;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) fail(errc::usage, "cannot open " + text.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        payload = buf.str();
    }
    try {
        return Json::parse(payload);
    } catch (const Json::parse_error& e) {
        fail(errc::usage, what + ": " + e.what());
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    return out;
}

struct Command {
    std::string name;
    Json result;
    int exit_code = 0;
    std::string table; // human-readable alternative to the JSON result
};

std::string frequency_table_text(const FrequencyMap& map) {
    std::ostringstream diff_row, freq_row;
    diff_row << "difference";
    freq_row << "frequency ";
    const auto& g = map.group();
    for (std::int64_t idx = 1; idx < g.order(); ++idx) {
        std::string label = g.rank() == 1 ? std::to_string(idx) : element_key(g.element_at(idx));
        std::string count = std::to_string(map.count_of_index(idx));
        std::size_t w = std::max(label.size(), count.size()) + 1;
        diff_row << std::string(w - label.size(), ' ') << label;
        freq_row << std::string(w - count.size(), ' ') << count;
    }
    return diff_row.str() + "\n" + freq_row.str() + "\n";
}

std::string report_table_text(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL");
    if (r.parameters) os << " " << r.parameters->display();
    if (r.counterexample)
        os << " counterexample at " << element_key(r.counterexample->element) << ": observed "
           << r.counterexample->observed << ", required " << r.counterexample->required << " ("
           << r.counterexample->context << ")";
    os << "\n";
    for (const auto& note : r.notes) os << "  note: " << note << "\n";
    return os.str();
}

SetFamily family_from_options(const std::string& family_json, const std::string& group_json) {
    Json fj = load_json(family_json, "family JSON");
    if (fj.is_object() && fj.contains("family")) fj = fj.at("family"); // fixture wrapper
    if (!group_json.empty()) {
        GroupDescriptor gd = parse_group_descriptor(load_json(group_json, "group JSON"));
        return family_from_json(fj, &gd.group);
    }
    return family_from_json(fj);
}

AmdCode code_from_options(const std::string& code_json) {
    Json cj = load_json(code_json, "code JSON");
    if (cj.is_object() && cj.contains("code")) cj = cj.at("code"); // fixture wrapper
    return code_from_json(cj);
}

Command cmd_verify(const std::string& type_name, const std::string& group_json,
                   const std::string& family_json, const std::string& lambda_list,
                   const std::string& classes_list, bool allow_mixed_sizes) {
    FamilyType type = family_type_from_name(type_name);
    SetFamily family = family_from_options(family_json, group_json);
    std::vector<std::int64_t> lambdas = parse_int_list(lambda_list);
    std::vector<SizeClass> profile;
    if (!classes_list.empty()) {
        // "c1xk1,c2xk2,..." profile syntax, e.g. "2x3,1x4,3x1".
        std::stringstream ss(classes_list);
        std::string tok;
        profile.clear();
        while (std::getline(ss, tok, ',')) {
            auto x = tok.find('x');
            if (x == std::string::npos) fail(errc::usage, "class profile entries look like 2x3");
            profile.push_back({static_cast<std::size_t>(std::stoll(tok.substr(0, x))),
                               static_cast<std::size_t>(std::stoll(tok.substr(x + 1)))});
        }
    }
    VerificationReport report =
        type == FamilyType::bedf && allow_mixed_sizes
            ? verify_bedf(family, lambdas.at(0), /*require_uniform_k=*/false)
            : verify_family(family, type, lambdas, profile);
    Command cmd{"verify", report_to_json(report), report.pass ? 0 : 1, report_table_text(report)};
    return cmd;
}

Command cmd_diff(const std::string& op, const std::string& group_json,
                 const std::string& family_json, std::size_t index, std::size_t second,
                 const std::string& class_sets) {
    SetFamily family = family_from_options(family_json, group_json);
    FrequencyMap map = [&] {
        if (op == "internal")
            return internal_differences_indices(family.group(), family.index_sets().at(index - 1));
        if (op == "cross")
            return cross_differences_indices(family.group(), family.index_sets().at(index - 1),
                                             family.index_sets().at(second - 1));
        if (op == "external") return external_difference_multiset(family);
        if (op == "outgoing") return outgoing_differences(family, index - 1);
        if (op == "incoming") return incoming_differences(family, index - 1);
        if (op == "class") {
            std::vector<std::size_t> cls;
            for (std::int64_t i : parse_int_list(class_sets))
                cls.push_back(static_cast<std::size_t>(i - 1));
            return class_differences(family, cls);
        }
        fail(errc::usage, "unknown diff op '" + op + "'");
    }();
    Json result;
    result["op"] = op;
    result["counts"] = frequency_map_to_json(map);
    result["total"] = map.total();
    result["max"] = map.max_count();
    auto uniform = map.uniform_value();
    result["uniform"] = uniform ? Json(*uniform) : Json(nullptr);
    return {"diff", std::move(result), 0, frequency_table_text(map)};
}

std::int64_t smallest_prime_divisor(std::int64_t q) {
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

Command cmd_construct(const std::string& recipe, std::int64_t q, std::int64_t u, std::int64_t l,
                      const std::string& modulus, std::int64_t n, std::int64_t k) {
    std::optional<FiniteField> field;
    ConstructionResult built = [&] {
        if (recipe == "tonchev") {
            field = modulus.empty()
                        ? FiniteField::of_order(q)
                        : FiniteField::extension(smallest_prime_divisor(q), parse_int_list(modulus));
            return tonchev_edf(q, u, l, *field);
        }
        if (recipe == "two-set-sedf") return two_set_sedf(k);
        if (recipe == "singleton-sedf") return singleton_sedf(n);
        if (recipe == "complement-gsedf") return complement_gsedf(n);
        if (recipe == "qr-gsedf") return qr_gsedf();
        if (recipe == "pedf-z13") return pedf_example_z13();
        fail(errc::usage, "unknown recipe '" + recipe + "'");
    }();
    Json result;
    result["recipe"] = recipe;
    if (field) result["field"] = field_to_json(*field);
    result["family"] = family_to_json(built.family);
    result["verification"] = report_to_json(built.report);
    if (!built.notes.empty()) result["notes"] = built.notes;
    std::ostringstream table;
    table << "recipe " << recipe << "\n" << report_table_text(built.report);
    return {"construct", std::move(result), built.report.pass ? 0 : 1, table.str()};
}

Command cmd_eval(const std::string& mode, const std::string& code_json, bool full_table) {
    AmdCode code = code_from_options(code_json);
    Json result;
    std::string table;
    if (mode == "weak") {
        WeakEvaluation eval = eval_weak_optimum(code);
        result = weak_evaluation_to_json(code, eval, full_table);
        result["bounds"] = weak_bounds_to_json(weak_bounds(code));
        table = "weak eps_hat = " + eval.eps_hat.str() + "\n";
    } else if (mode == "strong") {
        StrongEvaluation eval = eval_strong_optimum(code);
        result = strong_evaluation_to_json(code, eval, full_table);
        result["bounds"] = strong_bounds_to_json(code, strong_bounds(code));
        std::ostringstream os;
        os << "strong eps_hat = " << eval.eps_hat.str() << "\n";
        for (std::size_t s = 0; s < code.source_count(); ++s)
            os << "  " << code.sources()[s].name << ": " << eval.eps_hat_s[s].str() << "\n";
        table = os.str();
    } else {
        fail(errc::usage, "mode must be weak or strong");
    }
    return {"eval", std::move(result), 0, table};
}

Command cmd_classify(const std::string& code_json) {
    AmdCode code = code_from_options(code_json);
    Classification cls = classify(code);
    Json result = classification_to_json(code, cls);
    result["simultaneous"] = simultaneous_report_to_json(check_simultaneous_optimality(code));
    std::ostringstream table;
    table << "weak_R=" << (cls.weak_R ? "true" : "false")
          << " weak_G=" << (cls.weak_G ? "true" : "false")
          << " strong_R=" << (cls.strong_R ? "true" : "false")
          << " strong_G=" << (cls.strong_G ? "true" : "false") << "\n";
    return {"classify", std::move(result), 0, table.str()};
}

Command cmd_to_family(const std::string& type_name, const std::string& code_json) {
    AmdCode code = code_from_options(code_json);
    RecoveredFamily recovered = family_from_code(code, family_type_from_name(type_name));
    Json result;
    result["family"] = family_to_json(recovered.family);
    result["parameters"] = parameters_to_json(recovered.parameters);
    return {"to-family", std::move(result), 0, recovered.parameters.display() + "\n"};
}

Command cmd_from_family(const std::string& type_name, const std::string& group_json,
                        const std::string& family_json) {
    SetFamily family = family_from_options(family_json, group_json);
    AmdCode code = code_from_family(family, family_type_from_name(type_name));
    Json result;
    result["code"] = code_to_json(code);
    return {"from-family", std::move(result), 0, "code with " + std::to_string(code.source_count()) +
                                                     " sources over " + code.group().describe() + "\n"};
}

Command cmd_search(const std::string& spec_json, const std::string& mode,
                   std::uint64_t budget_nodes, unsigned jobs, std::int64_t sweep_n_max) {
    if (sweep_n_max > 0) {
        SweepReport report = sweep_sedf_open_problem(sweep_n_max, budget_nodes, jobs);
        Json result = sweep_report_to_json(report);
        bool any_found = false;
        std::ostringstream table;
        table << "n m k lambda group outcome nodes\n";
        for (const auto& r : report.rows) {
            any_found = any_found || r.outcome == SearchOutcome::found;
            table << r.n << " " << r.m << " " << r.k << " " << r.lambda << " " << r.group_desc << " "
                  << search_outcome_name(r.outcome) << " " << r.nodes << "\n";
        }
        return {"search", std::move(result), any_found ? 0 : 1, table.str()};
    }
    SearchSpec spec = search_spec_from_json(load_json(spec_json, "search spec JSON"));
    if (!mode.empty()) spec.mode = search_mode_from_name(mode);
    if (budget_nodes > 0) spec.node_budget = budget_nodes;
    if (jobs > 0) spec.jobs = jobs;
    SearchCertificate cert = search_family(spec);
    int code = cert.outcome == SearchOutcome::found
                   ? 0
                   : (cert.outcome == SearchOutcome::exhausted_no_solution ? 1 : 2);
    std::ostringstream table;
    table << cert.spec_display << ": " << search_outcome_name(cert.outcome) << ", "
          << cert.solutions_found << " classes, " << cert.nodes_explored << " nodes\n";
    return {"search", search_certificate_to_json(cert), code, table.str()};
}

Command cmd_relate(const std::string& from, const std::string& to, const std::string& group_json,
                   const std::string& family_json) {
    SetFamily family = family_from_options(family_json, group_json);
    VerificationReport report =
        implication_check(family, family_type_from_name(from), family_type_from_name(to));
    return {"relate", report_to_json(report), report.pass ? 0 : 1, report_table_text(report)};
}

Command cmd_reproduce() {
    auto results = corpus::run_all();
    Json items = Json::array();
    bool all_pass = true;
    std::ostringstream table;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        Json item;
        item["name"] = r.name;
        item["summary"] = r.summary;
        item["pass"] = r.pass;
        if (!r.failures.empty()) item["failures"] = r.failures;
        items.push_back(std::move(item));
        table << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
        for (const auto& f : r.failures) table << "       " << f << "\n";
    }
    Json result;
    result["items"] = std::move(items);
    result["total"] = results.size();
    result["all_pass"] = all_pass;
    return {"reproduce-paper", std::move(result), all_pass ? 0 : 1, table.str()};
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"amdkit: difference families and manipulation-detection games over finite abelian groups"};
    app.require_subcommand(0, 1);

    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string type_name, group_json, family_json, code_json, lambda_list, classes_list;
    std::string diff_op = "external", spec_json, mode, relate_from, relate_to, recipe, modulus;
    std::size_t index = 1, second = 2;
    std::string class_sets;
    bool full_table = false, allow_mixed_sizes = false;
    std::int64_t q = 0, u = 0, l = 0, n = 0, k = 0, sweep_n_max = 0;
    std::uint64_t budget_nodes = 0;
    unsigned jobs = 0;
    if (const char* env = std::getenv("AMDKIT_JOBS")) jobs = static_cast<unsigned>(std::atoi(env));

    auto* verify = app.add_subcommand("verify", "verify a family against a type");
    verify->add_option("--type", type_name)->required();
    verify->add_option("--group", group_json);
    verify->add_option("--family", family_json)->required();
    verify->add_option("--lambda,--lambdas", lambda_list);
    verify->add_option("--classes", classes_list);
    verify->add_flag("--allow-mixed-sizes", allow_mixed_sizes, "relax equal set sizes (bedf)");

    auto* diff = app.add_subcommand("diff", "print a difference/frequency table");
    diff->add_option("--op", diff_op)
        ->check(CLI::IsMember({"internal", "cross", "external", "outgoing", "incoming", "class"}));
    diff->add_option("--group", group_json);
    diff->add_option("--family", family_json)->required();
    diff->add_option("--index", index, "1-based set index");
    diff->add_option("--second", second, "1-based second set (cross)");
    diff->add_option("--class-sets", class_sets, "1-based set indices, e.g. 1,2");

    auto* construct = app.add_subcommand("construct", "build a known family");
    construct->add_option("--recipe", recipe)->required();
    construct->add_option("--q", q);
    construct->add_option("--u", u);
    construct->add_option("--l", l);
    construct->add_option("--modulus", modulus);
    construct->add_option("--n", n);
    construct->add_option("--k", k);

    auto* eval = app.add_subcommand("eval", "evaluate the adversary game exactly");
    eval->add_option("--mode", mode)->required()->check(CLI::IsMember({"weak", "strong"}));
    eval->add_option("--code", code_json)->required();
    eval->add_flag("--full-table", full_table);

    auto* classify_cmd = app.add_subcommand("classify", "R/G-optimality flags");
    classify_cmd->add_option("--code", code_json)->required();

    auto* to_family = app.add_subcommand("to-family", "recover the family behind an optimal code");
    to_family->add_option("--type", type_name)->required();
    to_family->add_option("--code", code_json)->required();

    auto* from_family = app.add_subcommand("from-family", "equiprobable code over a verified family");
    from_family->add_option("--type", type_name)->required();
    from_family->add_option("--group", group_json);
    from_family->add_option("--family", family_json)->required();

    auto* search = app.add_subcommand("search", "exhaustive search / nonexistence certificates");
    search->add_option("--spec", spec_json);
    search->add_option("--mode", mode);
    search->add_option("--budget-nodes", budget_nodes);
    search->add_option("--jobs", jobs);
    search->add_option("--sweep-sedf", sweep_n_max, "sweep feasible SEDF tuples up to this n");

    auto* relate = app.add_subcommand("relate", "check one implication-lattice edge");
    relate->add_option("--from", relate_from)->required();
    relate->add_option("--to", relate_to)->required();
    relate->add_option("--group", group_json);
    relate->add_option("--family", family_json)->required();

    app.add_subcommand("reproduce-paper", "run the worked-example regression corpus");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        Json envelope;
        envelope["toolkit_version"] = kVersion;
        envelope["error"] = {{"kind", "usage"}, {"message", e.what()}};
        return {2, envelope.dump(2) + "\n"};
    }

    Json envelope;
    envelope["toolkit_version"] = kVersion;
    try {
        Command cmd = [&]() -> Command {
            if (verify->parsed())
                return cmd_verify(type_name, group_json, family_json, lambda_list, classes_list,
                                  allow_mixed_sizes);
            if (diff->parsed())
                return cmd_diff(diff_op, group_json, family_json, index, second, class_sets);
            if (construct->parsed()) return cmd_construct(recipe, q, u, l, modulus, n, k);
            if (eval->parsed()) return cmd_eval(mode, code_json, full_table);
            if (classify_cmd->parsed()) return cmd_classify(code_json);
            if (to_family->parsed()) return cmd_to_family(type_name, code_json);
            if (from_family->parsed()) return cmd_from_family(type_name, group_json, family_json);
            if (search->parsed())
                return cmd_search(spec_json, mode, budget_nodes, jobs, sweep_n_max);
            if (relate->parsed()) return cmd_relate(relate_from, relate_to, group_json, family_json);
            if (app.get_subcommand("reproduce-paper")->parsed()) return cmd_reproduce();
            fail(errc::usage, "no command given (try --help)");
        }();
        envelope["command"] = cmd.name;
        if (format == "table") return {cmd.exit_code, cmd.table.empty() ? cmd.result.dump(2) + "\n"
                                                                        : cmd.table};
        envelope["result"] = std::move(cmd.result);
        return {cmd.exit_code, envelope.dump(2) + "\n"};
    } catch (const error& e) {
        envelope["error"] = {{"kind", errc_name(e.code())}, {"message", e.what()}};
        return {2, envelope.dump(2) + "\n"};
    } catch (const std::exception& e) {
        envelope["error"] = {{"kind", "internal"}, {"message", e.what()}};
        return {2, envelope.dump(2) + "\n"};
    }
}

} // namespace amdkit::cli
