#include "qbf/problem.hpp"

#include "qbf/schofield.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace qbf {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

int64_t parse_int(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw input_error("line " + std::to_string(lineno) + ": expected an integer, got '" + s +
                          "'");
    }
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int nverts = -1;
    struct RawWeight {
        WeightKind kind;
        DimVector v;
        int lineno;
    };
    std::vector<RawWeight> weights;
    bool have_beta = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        auto need_vec = [&](size_t want) {
            if (toks.size() != want + 1)
                throw input_error("line " + std::to_string(lineno) + ": '" + kw + "' expects " +
                                  std::to_string(want) + " integers, got " +
                                  std::to_string(toks.size() - 1));
            DimVector v;
            for (size_t i = 1; i < toks.size(); ++i) v.push_back(parse_int(toks[i], lineno));
            return v;
        };
        if (kw == "vertices") {
            if (toks.size() != 2)
                throw input_error("line " + std::to_string(lineno) + ": 'vertices' expects a count");
            nverts = (int)parse_int(toks[1], lineno);
            if (nverts <= 0)
                throw input_error("line " + std::to_string(lineno) + ": vertex count must be positive");
            for (int i = 1; i <= nverts; ++i) p.quiver.vertices.push_back(i);
        } else if (kw == "arrow") {
            // arrow <id>: <tail> -> <head>
            if (nverts < 0)
                throw input_error("line " + std::to_string(lineno) + ": 'arrow' before 'vertices'");
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += (i > 1 ? " " : "") + toks[i];
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw input_error("line " + std::to_string(lineno) +
                                  ": expected 'arrow <id>: <tail> -> <head>'");
            std::string id = rest.substr(0, colon);
            while (!id.empty() && id.back() == ' ') id.pop_back();
            std::string tail_head = rest.substr(colon + 1);
            auto arrowpos = tail_head.find("->");
            if (arrowpos == std::string::npos)
                throw input_error("line " + std::to_string(lineno) + ": missing '->'");
            std::string ts = tail_head.substr(0, arrowpos);
            std::string hs = tail_head.substr(arrowpos + 2);
            auto strip = [](std::string s) {
                size_t b = s.find_first_not_of(' ');
                size_t e = s.find_last_not_of(' ');
                return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
            };
            int64_t tv = parse_int(strip(ts), lineno);
            int64_t hv = parse_int(strip(hs), lineno);
            if (tv < 1 || tv > nverts || hv < 1 || hv > nverts)
                throw input_error("line " + std::to_string(lineno) + ": vertex out of range");
            p.quiver.arrows.push_back({id, (int)tv - 1, (int)hv - 1});
        } else if (kw == "beta") {
            if (nverts < 0)
                throw input_error("line " + std::to_string(lineno) + ": 'beta' before 'vertices'");
            p.beta = need_vec(nverts);
            for (auto v : p.beta)
                if (v < 0)
                    throw input_error("line " + std::to_string(lineno) +
                                      ": beta entries must be nonnegative");
            have_beta = true;
        } else if (kw == "alpha" || kw == "alphastar" || kw == "sigma") {
            if (nverts < 0)
                throw input_error("line " + std::to_string(lineno) + ": weight before 'vertices'");
            WeightKind k = kw == "alpha" ? WeightKind::Alpha
                         : kw == "sigma" ? WeightKind::Sigma
                                         : WeightKind::AlphaStar;
            weights.push_back({k, need_vec(nverts), lineno});
        } else if (kw == "m") {
            std::vector<int64_t> mv;
            for (size_t i = 1; i < toks.size(); ++i) mv.push_back(parse_int(toks[i], lineno));
            if (mv.empty())
                throw input_error("line " + std::to_string(lineno) + ": 'm' expects integers");
            for (auto v : mv)
                if (v < 0)
                    throw input_error("line " + std::to_string(lineno) + ": m must be nonnegative");
            p.m = mv;
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (nverts < 0) throw input_error("missing 'vertices' declaration");
    if (!have_beta) throw input_error("missing 'beta' declaration");
    auto val = validate_quiver(p.quiver);
    if (!val.ok) {
        std::string msg = "invalid quiver:";
        for (const auto& v : val.violations) msg += " " + v.message + ";";
        throw input_error(msg);
    }
    for (const auto& rw : weights) {
        Weights w = convert_weight(p.quiver, rw.kind, rw.v);
        Int sb = sigma_pairing(w.sigma, p.beta);
        if (sb != 0)
            throw input_error("line " + std::to_string(rw.lineno) +
                              ": weight is inconsistent with beta (sigma(beta) = " + sb.str() +
                              ", must be 0)");
        p.alphas.push_back(w.alpha);
    }
    if (!p.m.empty() && p.m.size() != p.alphas.size())
        throw input_error("'m' arity (" + std::to_string(p.m.size()) +
                          ") does not match the number of weights (" +
                          std::to_string(p.alphas.size()) + ")");
    return p;
}

std::string ProblemFile::render() const {
    std::ostringstream os;
    os << "vertices " << quiver.n() << "\n";
    for (const auto& a : quiver.arrows)
        os << "arrow " << a.id << ": " << quiver.vertices[a.tail] << " -> "
           << quiver.vertices[a.head] << "\n";
    os << "beta";
    for (auto v : beta) os << " " << v;
    os << "\n";
    for (const auto& al : alphas) {
        os << "alpha";
        for (auto v : al) os << " " << v;
        os << "\n";
    }
    if (!m.empty()) {
        os << "m";
        for (auto v : m) os << " " << v;
        os << "\n";
    }
    return os.str();
}

nlohmann::json factor_product_json(const FactorProduct& p) {
    nlohmann::json j;
    j["scalar"] = rat_to_string(p.scalar());
    j["nvars"] = p.nvars();
    j["factors"] = nlohmann::json::array();
    for (const auto& [f, m] : p.factors()) {
        nlohmann::json jf;
        jf["coeffs"] = f.coeffs;
        jf["shift"] = rat_to_string(f.shift);
        jf["mult"] = m;
        j["factors"].push_back(jf);
    }
    j["text"] = p.to_string();
    if (p.is_polynomial()) j["expanded"] = p.expand().to_string(
        p.nvars() == 1 ? std::vector<std::string>{"s"} : std::vector<std::string>{});
    return j;
}

namespace {

nlohmann::json bracket_json(const std::vector<int64_t>& d, int64_t a, int64_t b) {
    nlohmann::json j;
    j["d"] = d;
    j["a"] = a;
    j["b"] = b;
    j["text"] = bracket_to_string(d, a, b);
    return j;
}

} // namespace

nlohmann::json slice_trace_json(const SliceTrace& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json j;
        switch (s.kind) {
        case SliceStep::Kind::Slice: j["kind"] = "slice"; break;
        case SliceStep::Kind::DetSplit: j["kind"] = "det-split"; break;
        case SliceStep::Kind::SimplifyA: j["kind"] = "simplify-a"; break;
        case SliceStep::Kind::SimplifyB: j["kind"] = "simplify-b'"; break;
        case SliceStep::Kind::Prune: j["kind"] = "prune"; break;
        }
        if (s.kind == SliceStep::Kind::Slice || s.kind == SliceStep::Kind::DetSplit) {
            j["arrow"] = s.arrow_id;
            j["bracket"] = bracket_json(s.d, s.b1, s.b2);
        }
        j["vertex"] = s.vertex;
        if (!s.note.empty()) j["note"] = s.note;
        j["state"] = s.state_after;
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json reflect_trace_json(const ReflectTrace& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json j;
        switch (s.kind) {
        case ReflectStep::Kind::Castle: j["kind"] = "castle"; break;
        case ReflectStep::Kind::CastleDrop: j["kind"] = "castle-drop"; break;
        case ReflectStep::Kind::IndependentDrop: j["kind"] = "independent-drop"; break;
        case ReflectStep::Kind::ZeroDimDrop: j["kind"] = "zero-dim-drop"; break;
        }
        j["vertex"] = s.vertex_id;
        if (s.kind == ReflectStep::Kind::Castle || s.kind == ReflectStep::Kind::CastleDrop) {
            j["r1"] = s.r1;
            j["r2"] = s.r2;
            j["d"] = s.d;
        }
        if (!s.note.empty()) j["note"] = s.note;
        j["state"] = s.state_after;
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json outcome_json(const BfnOutcome& o) {
    nlohmann::json j;
    j["method"] = o.method;
    j["ok"] = o.ok;
    if (o.ok) j["b"] = factor_product_json(o.b);
    else {
        j["diagnostic"] = o.diagnostic;
        j["diagnostic_detail"] = o.diagnostic_detail;
    }
    j["trace"] = o.trace_text;
    return j;
}

BfnOutcome run_slice_outcome(const ProblemFile& p, bool randomize, uint64_t seed) {
    BfnOutcome o;
    o.method = "slice";
    SliceOptions opt;
    opt.m = p.m;
    opt.randomize = randomize;
    opt.choice_seed = seed;
    SliceResult r = run_slice(p.quiver, p.beta, p.alphas, opt);
    o.ok = r.ok;
    o.trace_text = r.trace.render();
    if (r.ok) o.b = r.b;
    else {
        o.diagnostic = r.diagnostic.summary;
        o.diagnostic_detail = r.diagnostic.per_arrow;
    }
    return o;
}

BfnOutcome run_reflect_outcome(const ProblemFile& p, ReflectDirection dir,
                               int64_t max_reflections) {
    BfnOutcome o;
    o.method = "reflect";
    ReflectOptions opt;
    opt.m = p.m;
    opt.direction = dir;
    opt.max_reflections = max_reflections;
    ReflectResult r = run_reflect(p.quiver, p.beta, p.alphas, opt);
    o.ok = r.ok;
    o.trace_text = r.trace.render();
    if (r.ok) o.b = r.b;
    else o.diagnostic = r.fail_reason;
    return o;
}

std::vector<SparsePoly> problem_polynomials(const ProblemFile& p, uint64_t seed) {
    std::vector<SparsePoly> fs;
    for (size_t i = 0; i < p.alphas.size(); ++i) {
        Representation V = random_exceptional(p.quiver, p.alphas[i], derive_seed(seed, 71 + i));
        SchofieldSystem sys = build_schofield(p.quiver, p.beta, V);
        if (sys.f.is_zero())
            throw not_applicable("semi-invariant for weight " + dimvec_to_string(p.alphas[i]) +
                                 " vanishes identically at this beta");
        // c^V is defined up to a scalar; normalize so oracle comparisons of
        // scalar-1 products report scalar 1
        fs.push_back(sys.f * (Rat(1) / sys.f.lex_leading_coeff()));
    }
    return fs;
}

} // namespace qbf
