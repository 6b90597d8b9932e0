#include "qbf/candecomp.hpp"
#include "qbf/problem.hpp"
#include "qbf/schofield.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qbf;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list l;
        for (const auto& e : j) l.append(json_to_py(e));
        return l;
    }
    case nlohmann::json::value_t::object: {
        py::dict d;
        for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = json_to_py(*it);
        return d;
    }
    default: return py::none();
    }
}

py::object bfn(const std::string& text, const std::string& method, uint64_t seed,
               int64_t max_reflections) {
    ProblemFile p = parse_problem(text);
    if (p.alphas.empty()) throw input_error("bfn requires at least one weight");
    nlohmann::json out;
    out["attempts"] = nlohmann::json::array();
    BfnOutcome winner;
    bool have = false;
    if (method == "slice" || method == "auto") {
        BfnOutcome o = run_slice_outcome(p, false, seed);
        out["attempts"].push_back(outcome_json(o));
        if (o.ok) {
            winner = o;
            have = true;
        }
    }
    if (method == "reflect" || (method == "auto" && !have)) {
        BfnOutcome o = run_reflect_outcome(p, ReflectDirection::Auto, max_reflections);
        out["attempts"].push_back(outcome_json(o));
        if (o.ok && !have) {
            winner = o;
            have = true;
        }
    }
    out["ok"] = have;
    if (have) {
        out["method"] = winner.method;
        out["b"] = factor_product_json(winner.b);
    }
    return json_to_py(out);
}

py::object oracle(const std::string& text, uint64_t seed, int64_t budget) {
    ProblemFile p = parse_problem(text);
    std::vector<int64_t> m = p.m.empty() ? std::vector<int64_t>(p.alphas.size(), 1) : p.m;
    auto fs = problem_polynomials(p, seed);
    SparsePoly b = bfunction_oracle(fs, m, budget);
    return py::str(b.to_string(b.nvars() == 1 ? std::vector<std::string>{"s"}
                                              : std::vector<std::string>{}));
}

py::object verify(const std::string& text, const std::string& method, uint64_t seed,
                  int64_t budget) {
    ProblemFile p = parse_problem(text);
    BfnOutcome o = (method == "reflect") ? run_reflect_outcome(p, ReflectDirection::Auto, 1000)
                                         : run_slice_outcome(p, false, seed);
    if (!o.ok) throw not_applicable("method failed: " + o.diagnostic);
    std::vector<int64_t> m = p.m.empty() ? std::vector<int64_t>(p.alphas.size(), 1) : p.m;
    auto fs = problem_polynomials(p, seed);
    VerifyReport rep = verify_against_oracle(o.b, fs, m, budget);
    py::dict d;
    d["match"] = rep.match;
    d["scalar"] = rat_to_string(rep.scalar);
    d["detail"] = rep.detail;
    return d;
}

py::object decompose(const std::string& text, uint64_t seed, bool dn_diagram) {
    ProblemFile p = parse_problem(text);
    auto cls = classify(p.quiver);
    py::dict d;
    Decomposition dec;
    std::string diagram;
    if (cls.kind == QuiverClass::Dynkin && cls.connected && cls.subtype[0] == 'D') {
        auto res = dn_canonical(p.quiver, p.beta, seed);
        dec = res.decomposition;
        diagram = res.diagram.render();
    } else {
        dec = generic_decomposition(p.quiver, p.beta, seed);
    }
    py::list summands;
    for (const auto& [r, k] : dec.summands) {
        py::list root;
        for (auto v : r) root.append(v);
        summands.append(py::make_tuple(root, k));
    }
    d["summands"] = summands;
    if (dn_diagram && !diagram.empty()) d["diagram"] = diagram;
    return d;
}

py::object info(const std::string& text) {
    ProblemFile p = parse_problem(text);
    auto cls = classify(p.quiver);
    py::dict d;
    d["class"] = (cls.kind == QuiverClass::Dynkin      ? "Dynkin"
                  : cls.kind == QuiverClass::Euclidean ? "Euclidean"
                                                       : "other");
    d["subtype"] = cls.subtype;
    if (cls.kind == QuiverClass::Dynkin && cls.connected) {
        py::list roots;
        for (const auto& r : positive_roots(p.quiver)) {
            py::list root;
            for (auto v : r) root.append(v);
            roots.append(root);
        }
        d["positive_roots"] = roots;
        d["coxeter_number"] = coxeter_number(cls);
    }
    py::list weights;
    for (const auto& al : p.alphas) {
        auto w = convert_weight(p.quiver, WeightKind::Alpha, al);
        py::dict jw;
        jw["alpha"] = w.alpha;
        jw["sigma"] = w.sigma;
        jw["alphastar"] = w.alpha_star;
        weights.append(jw);
    }
    d["weights"] = weights;
    return d;
}

} // namespace

PYBIND11_MODULE(_qbf, mod) {
    mod.doc() = "b-functions of determinantal quiver semi-invariants";
    static py::exception<input_error> exc_input(mod, "InputError");
    static py::exception<not_applicable> exc_na(mod, "NotApplicable");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const input_error& e) {
            exc_input(e.what());
        } catch (const not_applicable& e) {
            exc_na(e.what());
        }
    });

    mod.def("bfn", &bfn, py::arg("problem"), py::arg("method") = "auto", py::arg("seed") = 42,
            py::arg("max_reflections") = 1000,
            "Compute the b-function of a problem file's semi-invariants.");
    mod.def("oracle", &oracle, py::arg("problem"), py::arg("seed") = 42,
            py::arg("budget") = kDefaultOracleBudget,
            "Brute-force Weyl-algebra b-function (string form).");
    mod.def("verify", &verify, py::arg("problem"), py::arg("method") = "slice",
            py::arg("seed") = 42, py::arg("budget") = kDefaultOracleBudget,
            "Compare an engine result against the oracle.");
    mod.def("decompose", &decompose, py::arg("problem"), py::arg("seed") = 42,
            py::arg("dn_diagram") = false, "Canonical decomposition of beta.");
    mod.def("info", &info, py::arg("problem"),
            "Classification, positive roots and weight conversions.");
}
