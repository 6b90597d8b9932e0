#include "qbf/candecomp.hpp"
#include "qbf/problem.hpp"
#include "qbf/schofield.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qbf::input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int64_t> parse_m_flag(const std::string& s) {
    std::vector<int64_t> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else
            cur += c;
    }
    return out;
}

int64_t oracle_budget() {
    if (const char* env = std::getenv("QBF_ORACLE_BUDGET")) return std::atoll(env);
    return qbf::kDefaultOracleBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"b-functions of determinantal quiver semi-invariants"};
    app.require_subcommand(1);

    std::string file, method = "auto", format = "text", m_flag;
    uint64_t seed = 42;
    int64_t max_reflections = 1000;
    bool do_verify = false, dn_diagram = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem file")->required();
        sub->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", seed, "random seed (default 42)");
    };

    CLI::App* bfn = app.add_subcommand("bfn", "compute the b-function");
    add_common(bfn);
    bfn->add_option("--method", method, "slice|reflect|auto")
        ->check(CLI::IsMember({"slice", "reflect", "auto"}));
    bfn->add_flag("--verify", do_verify, "verify against the Weyl-algebra oracle");
    bfn->add_option("--m", m_flag, "exponent tuple, comma separated");
    bfn->add_option("--max-reflections", max_reflections, "reflection iteration cap");

    CLI::App* dec = app.add_subcommand("decompose", "canonical decomposition of beta");
    add_common(dec);
    dec->add_flag("--dn-diagram", dn_diagram, "print the D_n diagram");

    CLI::App* ver = app.add_subcommand("verify", "oracle-only b-function computation");
    add_common(ver);
    ver->add_option("--m", m_flag, "exponent tuple, comma separated");

    CLI::App* info = app.add_subcommand("info", "classification, Euler/Coxeter matrices, roots");
    add_common(info);

    CLI11_PARSE(app, argc, argv);

    try {
        qbf::ProblemFile p = qbf::parse_problem(read_file(file));
        if (!m_flag.empty()) {
            p.m = parse_m_flag(m_flag);
            if (!p.alphas.empty() && p.m.size() != p.alphas.size())
                throw qbf::input_error("--m arity does not match the number of weights");
        }
        bool json = (format == "json");
        nlohmann::json out;

        if (*info) {
            auto cls = qbf::classify(p.quiver);
            auto e = qbf::euler_matrix(p.quiver);
            auto c = qbf::coxeter_matrix(p.quiver);
            auto mat_json = [](const qbf::IntMat& m) {
                nlohmann::json rows = nlohmann::json::array();
                for (int i = 0; i < m.rows; ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).str());
                    rows.push_back(row);
                }
                return rows;
            };
            out["class"] = (cls.kind == qbf::QuiverClass::Dynkin      ? "Dynkin"
                            : cls.kind == qbf::QuiverClass::Euclidean ? "Euclidean"
                                                                      : "other");
            out["subtype"] = cls.subtype;
            out["euler_matrix"] = mat_json(e);
            out["coxeter_matrix"] = mat_json(c);
            if (cls.kind == qbf::QuiverClass::Dynkin && cls.connected) {
                out["coxeter_number"] = qbf::coxeter_number(cls);
                nlohmann::json roots = nlohmann::json::array();
                for (const auto& r : qbf::positive_roots(p.quiver))
                    roots.push_back(qbf::dimvec_to_string(r));
                out["positive_roots"] = roots;
            }
            for (size_t i = 0; i < p.alphas.size(); ++i) {
                auto w = qbf::convert_weight(p.quiver, qbf::WeightKind::Alpha, p.alphas[i]);
                nlohmann::json jw;
                jw["alpha"] = w.alpha;
                jw["sigma"] = w.sigma;
                jw["alphastar"] = w.alpha_star;
                out["weights"].push_back(jw);
            }
            if (json) std::cout << out.dump(2) << "\n";
            else {
                std::cout << out["class"].get<std::string>() << " " << cls.subtype << "\n";
                std::cout << "Euler matrix:    " << out["euler_matrix"].dump() << "\n";
                std::cout << "Coxeter matrix:  " << out["coxeter_matrix"].dump() << "\n";
                if (out.contains("coxeter_number"))
                    std::cout << "Coxeter number:  " << out["coxeter_number"].get<int>() << "\n";
                if (out.contains("positive_roots"))
                    std::cout << "positive roots:  " << out["positive_roots"].size() << "\n";
                if (out.contains("weights"))
                    for (const auto& jw : out["weights"])
                        std::cout << "weight alpha=" << jw["alpha"].dump()
                                  << " sigma=" << jw["sigma"].dump()
                                  << " alpha*=" << jw["alphastar"].dump() << "\n";
            }
            return kExitOk;
        }

        if (*dec) {
            auto cls = qbf::classify(p.quiver);
            nlohmann::json jd;
            qbf::Decomposition d;
            std::string diagram;
            if (cls.kind == qbf::QuiverClass::Dynkin && cls.connected && cls.subtype[0] == 'D') {
                auto res = qbf::dn_canonical(p.quiver, p.beta, seed);
                d = res.decomposition;
                diagram = res.diagram.render();
            } else {
                d = qbf::generic_decomposition(p.quiver, p.beta, seed);
            }
            jd["summands"] = nlohmann::json::array();
            for (const auto& [r, k] : d.summands) {
                nlohmann::json js;
                js["root"] = r;
                js["mult"] = k;
                jd["summands"].push_back(js);
            }
            if (dn_diagram && !diagram.empty()) jd["diagram"] = diagram;
            if (json) std::cout << jd.dump(2) << "\n";
            else {
                std::cout << "decomposition: " << d.to_string() << "\n";
                if (dn_diagram && !diagram.empty()) std::cout << diagram;
            }
            return kExitOk;
        }

        if (*ver) {
            if (p.alphas.empty()) throw qbf::input_error("verify requires at least one weight");
            std::vector<int64_t> m = p.m.empty() ? std::vector<int64_t>(p.alphas.size(), 1) : p.m;
            auto fs = qbf::problem_polynomials(p, seed);
            qbf::SparsePoly b = qbf::bfunction_oracle(fs, m, oracle_budget());
            nlohmann::json jo;
            jo["oracle_b"] = b.to_string(b.nvars() == 1 ? std::vector<std::string>{"s"}
                                                        : std::vector<std::string>{});
            if (json) std::cout << jo.dump(2) << "\n";
            else std::cout << "oracle b = " << jo["oracle_b"].get<std::string>() << "\n";
            return kExitOk;
        }

        // bfn
        if (p.alphas.empty()) throw qbf::input_error("bfn requires at least one weight");
        std::vector<qbf::BfnOutcome> attempts;
        if (method == "slice" || method == "auto")
            attempts.push_back(qbf::run_slice_outcome(p));
        bool slice_failed = !attempts.empty() && !attempts.back().ok;
        if (method == "reflect" || (method == "auto" && slice_failed))
            attempts.push_back(
                qbf::run_reflect_outcome(p, qbf::ReflectDirection::Auto, max_reflections));

        const qbf::BfnOutcome* winner = nullptr;
        for (const auto& a : attempts)
            if (a.ok) winner = &a;

        nlohmann::json jout;
        jout["attempts"] = nlohmann::json::array();
        for (const auto& a : attempts) jout["attempts"].push_back(qbf::outcome_json(a));

        if (!json) {
            for (const auto& a : attempts) {
                if (a.ok) {
                    std::cout << a.method << ": b = " << a.b.to_string() << "\n";
                    std::cout << a.trace_text;
                } else {
                    std::cout << a.method << ": not applicable: " << a.diagnostic << "\n";
                    for (const auto& d : a.diagnostic_detail) std::cout << "  " << d << "\n";
                }
            }
        }
        if (!winner) {
            if (json) std::cout << jout.dump(2) << "\n";
            return kExitInapplicable;
        }
        if (do_verify) {
            std::vector<int64_t> m = p.m.empty() ? std::vector<int64_t>(p.alphas.size(), 1) : p.m;
            try {
                auto fs = qbf::problem_polynomials(p, seed);
                qbf::VerifyReport rep = qbf::verify_against_oracle(winner->b, fs, m, oracle_budget());
                jout["verify"] = {{"match", rep.match}, {"detail", rep.detail}};
                if (!json) std::cout << "oracle: " << rep.detail << "\n";
                if (!rep.match) {
                    if (json) std::cout << jout.dump(2) << "\n";
                    return kExitMismatch;
                }
            } catch (const qbf::not_applicable& e) {
                jout["verify"] = {{"match", nullptr}, {"detail", std::string("skipped: ") + e.what()}};
                if (!json) std::cout << "oracle: skipped: " << e.what() << "\n";
            }
        }
        if (json) std::cout << jout.dump(2) << "\n";
        return kExitOk;
    } catch (const qbf::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qbf::not_applicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const qbf::verification_mismatch& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const qbf::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
