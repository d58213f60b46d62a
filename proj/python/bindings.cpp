// Python bindings for the main operations. The binding layer speaks the
// same JSON schemas as the CLI (dicts in, dicts out), so the two surfaces
// cannot drift apart.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amdkit/constructions.hpp"
#include "amdkit/corpus.hpp"
#include "amdkit/json_io.hpp"
#include "amdkit/version.hpp"

namespace py = pybind11;
using namespace amdkit;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json out = Json::array();
        for (const auto& item : obj) out.push_back(py_to_json(item));
        return out;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& [key, value] : obj.cast<py::dict>())
            out[key.cast<std::string>()] = py_to_json(value);
        return out;
    }
    throw py::type_error("cannot convert python object to JSON");
}

SetFamily family_arg(const py::handle& family) {
    return family_from_json(py_to_json(family));
}

AmdCode code_arg(const py::handle& code) {
    return code_from_json(py_to_json(code));
}

std::vector<std::int64_t> lambdas_arg(const py::handle& lambdas) {
    if (lambdas.is_none()) return {};
    return lambdas.cast<std::vector<std::int64_t>>();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "difference families and manipulation-detection games over finite abelian groups";
    m.attr("__version__") = kVersion;

    py::register_exception<error>(m, "AmdkitError");

    m.def("verify", [](const std::string& type, const py::handle& family,
                       const py::handle& lambdas) {
        VerificationReport report =
            verify_family(family_arg(family), family_type_from_name(type), lambdas_arg(lambdas));
        return json_to_py(report_to_json(report));
    }, py::arg("type"), py::arg("family"), py::arg("lambdas") = py::none());

    m.def("diff_table", [](const std::string& op, const py::handle& family, std::size_t index,
                           std::size_t second, const py::handle& class_sets) {
        SetFamily f = family_arg(family);
        FrequencyMap map = [&] {
            if (op == "internal") return internal_differences_indices(f.group(), f.index_sets().at(index));
            if (op == "cross")
                return cross_differences_indices(f.group(), f.index_sets().at(index),
                                                 f.index_sets().at(second));
            if (op == "external") return external_difference_multiset(f);
            if (op == "outgoing") return outgoing_differences(f, index);
            if (op == "incoming") return incoming_differences(f, index);
            if (op == "class")
                return class_differences(f, class_sets.cast<std::vector<std::size_t>>());
            fail(errc::usage, "unknown diff op '" + op + "'");
        }();
        return json_to_py(frequency_map_to_json(map));
    }, py::arg("op"), py::arg("family"), py::arg("index") = 0, py::arg("second") = 1,
       py::arg("class_sets") = py::none());

    m.def("construct", [](const std::string& recipe, const py::handle& params) {
        Json p = params.is_none() ? Json::object() : py_to_json(params);
        ConstructionResult built = [&] {
            if (recipe == "tonchev") {
                std::int64_t q = p.at("q").get<std::int64_t>();
                FiniteField field = p.contains("modulus")
                                        ? FiniteField::extension(p.at("p").get<std::int64_t>(),
                                                                 p.at("modulus").get<std::vector<std::int64_t>>())
                                        : FiniteField::of_order(q);
                return tonchev_edf(q, p.at("u").get<std::int64_t>(), p.at("l").get<std::int64_t>(),
                                   field);
            }
            if (recipe == "two-set-sedf") return two_set_sedf(p.at("k").get<std::int64_t>());
            if (recipe == "singleton-sedf") return singleton_sedf(p.at("n").get<std::int64_t>());
            if (recipe == "complement-gsedf") return complement_gsedf(p.at("n").get<std::int64_t>());
            if (recipe == "qr-gsedf") return qr_gsedf();
            if (recipe == "pedf-z13") return pedf_example_z13();
            fail(errc::usage, "unknown recipe '" + recipe + "'");
        }();
        Json out;
        out["family"] = family_to_json(built.family);
        out["verification"] = report_to_json(built.report);
        if (!built.notes.empty()) out["notes"] = built.notes;
        return json_to_py(out);
    }, py::arg("recipe"), py::arg("params") = py::none());

    m.def("evaluate", [](const std::string& mode, const py::handle& code, bool full_table) {
        AmdCode c = code_arg(code);
        Json out;
        if (mode == "weak") {
            out = weak_evaluation_to_json(c, eval_weak_optimum(c), full_table);
            out["bounds"] = weak_bounds_to_json(weak_bounds(c));
        } else if (mode == "strong") {
            out = strong_evaluation_to_json(c, eval_strong_optimum(c), full_table);
            out["bounds"] = strong_bounds_to_json(c, strong_bounds(c));
        } else {
            fail(errc::usage, "mode must be weak or strong");
        }
        return json_to_py(out);
    }, py::arg("mode"), py::arg("code"), py::arg("full_table") = false);

    m.def("classify", [](const py::handle& code) {
        AmdCode c = code_arg(code);
        Json out = classification_to_json(c, classify(c));
        out["simultaneous"] = simultaneous_report_to_json(check_simultaneous_optimality(c));
        return json_to_py(out);
    }, py::arg("code"));

    m.def("to_family", [](const std::string& type, const py::handle& code) {
        RecoveredFamily r = family_from_code(code_arg(code), family_type_from_name(type));
        Json out;
        out["family"] = family_to_json(r.family);
        out["parameters"] = parameters_to_json(r.parameters);
        return json_to_py(out);
    }, py::arg("type"), py::arg("code"));

    m.def("from_family", [](const std::string& type, const py::handle& family) {
        AmdCode code = code_from_family(family_arg(family), family_type_from_name(type));
        return json_to_py(code_to_json(code));
    }, py::arg("type"), py::arg("family"));

    m.def("relate", [](const std::string& from, const std::string& to, const py::handle& family) {
        VerificationReport report = implication_check(
            family_arg(family), family_type_from_name(from), family_type_from_name(to));
        return json_to_py(report_to_json(report));
    }, py::arg("from_type"), py::arg("to_type"), py::arg("family"));

    m.def("search", [](const py::handle& spec) {
        SearchCertificate cert = search_family(search_spec_from_json(py_to_json(spec)));
        return json_to_py(search_certificate_to_json(cert));
    }, py::arg("spec"));

    m.def("sweep_sedf", [](std::int64_t n_max, std::uint64_t node_budget, unsigned jobs) {
        return json_to_py(sweep_report_to_json(sweep_sedf_open_problem(n_max, node_budget, jobs)));
    }, py::arg("n_max"), py::arg("node_budget") = 0, py::arg("jobs") = 1);

    m.def("reproduce", [] {
        Json items = Json::array();
        bool all_pass = true;
        for (const auto& r : corpus::run_all()) {
            all_pass = all_pass && r.pass;
            Json item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            if (!r.failures.empty()) item["failures"] = r.failures;
            items.push_back(std::move(item));
        }
        Json out;
        out["items"] = std::move(items);
        out["all_pass"] = all_pass;
        return json_to_py(out);
    });
}
