#include "qbf/reflect.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qbf {

std::vector<std::vector<int64_t>> ReflectState::alphas() const {
    std::vector<std::vector<int64_t>> out;
    for (const auto& s : sigmas) out.push_back(alpha_from_sigma(quiver, s));
    return out;
}

std::string ReflectStep::line() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Castle: os << "castle"; break;
    case Kind::CastleDrop: os << "castle-drop"; break;
    case Kind::IndependentDrop: os << "independent-drop"; break;
    case Kind::ZeroDimDrop: os << "zero-dim-drop"; break;
    }
    os << " at vertex " << vertex_id;
    if (kind == Kind::Castle || kind == Kind::CastleDrop) {
        os << " (r1=" << r1 << ", r2=" << r2 << ", d=(";
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) os << ",";
            os << d[i];
        }
        os << ")): " << bracket_to_string(d, r1, r1);
        if (kind == Kind::Castle && r2 > 0) os << " / " << bracket_to_string(d, r2, r2);
    }
    if (!note.empty()) os << "  [" << note << "]";
    return os.str();
}

std::string ReflectTrace::render() const {
    std::ostringstream os;
    for (const auto& s : steps) {
        os << "  " << s.line() << "\n";
        os << "      ~> " << s.state_after << "\n";
    }
    return os.str();
}

namespace {

std::string render_state(const ReflectState& st) {
    std::ostringstream os;
    for (int i = 0; i < st.quiver.n(); ++i) {
        if (i) os << " ";
        os << st.quiver.vertices[i] << "[b=" << st.beta[i] << ",s=(";
        for (size_t w = 0; w < st.sigmas.size(); ++w) {
            if (w) os << ",";
            os << st.sigmas[w][i];
        }
        os << ")]";
    }
    if (!st.quiver.arrows.empty()) {
        os << " ;";
        for (const auto& a : st.quiver.arrows)
            os << " " << a.id << ":" << st.quiver.vertices[a.tail] << "->"
               << st.quiver.vertices[a.head];
    }
    return os.str();
}

void drop_vertex(ReflectState& st, int x) {
    // weights restrict (GL factor at a dropped vertex plays no role)
    std::vector<Arrow> kept;
    for (const auto& a : st.quiver.arrows) {
        if (a.tail == x || a.head == x) continue;
        Arrow b = a;
        if (b.tail > x) --b.tail;
        if (b.head > x) --b.head;
        kept.push_back(b);
    }
    st.quiver.arrows = kept;
    st.quiver.vertices.erase(st.quiver.vertices.begin() + x);
    st.beta.erase(st.beta.begin() + x);
    for (auto& s : st.sigmas) s.erase(s.begin() + x);
}

bool all_sigma_zero(const ReflectState& st) {
    for (const auto& s : st.sigmas)
        for (auto v : s)
            if (v != 0) return false;
    return true;
}

std::string serialize(const ReflectState& st) { return render_state(st); }

} // namespace

ReflectStep castle_step(ReflectState& st, int x, const std::vector<int64_t>& m) {
    int nw = (int)st.sigmas.size();
    if (!st.quiver.is_sink(x)) throw not_applicable("castle_step: vertex is not a sink");
    if (st.beta[x] <= 0) throw not_applicable("castle_step: beta_x must be positive");
    ReflectStep step(nw);
    step.vertex_id = st.quiver.vertices[x];
    auto alphas = st.alphas();
    int64_t r1 = st.beta[x];
    DimVector cbeta = reflect_vector(st.quiver, x, st.beta);
    int64_t r2 = cbeta[x];
    step.r1 = r1;
    step.r2 = r2;
    for (int w = 0; w < nw; ++w) {
        int64_t dw = reflect_vector(st.quiver, x, alphas[w])[x];
        if (dw < 0)
            throw invariant_violation("castle_step: negative GL-weight at sink " +
                                      std::to_string(step.vertex_id) +
                                      " (weight inconsistent with a sink step)");
        step.d.push_back(dw);
    }
    if (r2 > 0) {
        step.kind = ReflectStep::Kind::Castle;
        step.factor = bracket(step.d, m, r1, r1) / bracket(step.d, m, r2, r2);
        auto refl = reflect(st.quiver, x, st.beta, alphas);
        st.quiver = refl.quiver;
        st.beta = refl.beta;
        for (int w = 0; w < nw; ++w) st.sigmas[w] = sigma_from_alpha(st.quiver, refl.alphas[w]);
    } else if (r2 == 0) {
        step.kind = ReflectStep::Kind::CastleDrop;
        step.factor = bracket(step.d, m, r1, r1);
        auto refl = reflect(st.quiver, x, st.beta, alphas);
        st.quiver = refl.quiver;
        st.beta = refl.beta;
        for (int w = 0; w < nw; ++w) st.sigmas[w] = sigma_from_alpha(st.quiver, refl.alphas[w]);
        drop_vertex(st, x); // now zero-dimensional
        step.note = "c(beta)_x = 0: vertex dropped";
    } else {
        for (int w = 0; w < nw; ++w)
            if (st.sigmas[w][x] != 0)
                throw invariant_violation(
                    "castle_step: c(beta)_x < 0 but a weight does not vanish at vertex " +
                    std::to_string(step.vertex_id));
        step.kind = ReflectStep::Kind::IndependentDrop;
        drop_vertex(st, x);
        step.note = "semi-invariants do not depend on this vertex";
    }
    step.state_after = render_state(st);
    return step;
}

namespace {

// One full attempt in a fixed sink direction; mutates the state. Returns
// true when the weights became zero (b complete), false when stuck.
bool reflect_attempt(ReflectState& st, ReflectTrace& trace, FactorProduct& acc,
                     const std::vector<int64_t>& m, int64_t& budget, std::string& why) {
    int nw = (int)st.sigmas.size();
    std::set<std::string> seen;
    while (true) {
        // licensed drops: zero-dimensional vertices
        bool dropped = true;
        while (dropped) {
            dropped = false;
            for (int i = 0; i < st.quiver.n(); ++i)
                if (st.beta[i] == 0) {
                    ReflectStep s(nw);
                    s.kind = ReflectStep::Kind::ZeroDimDrop;
                    s.vertex_id = st.quiver.vertices[i];
                    drop_vertex(st, i);
                    s.state_after = render_state(st);
                    trace.steps.push_back(std::move(s));
                    dropped = true;
                    break;
                }
        }
        if (st.quiver.n() == 0 || all_sigma_zero(st)) return true;
        if (budget <= 0) {
            why = "cap";
            return false;
        }
        if (!seen.insert(serialize(st)).second) {
            why = "stuck (state repeats without progress)";
            return false;
        }
        // admissible ordering: smallest-id sink first, recomputed each time
        int sink = -1;
        for (int i = 0; i < st.quiver.n(); ++i)
            if (st.quiver.is_sink(i) && st.beta[i] > 0) {
                if (sink < 0 || st.quiver.vertices[i] < st.quiver.vertices[sink]) sink = i;
            }
        if (sink < 0) {
            why = "stuck (no sink with positive dimension)";
            return false;
        }
        ReflectStep s = castle_step(st, sink, m);
        acc = acc * s.factor;
        --budget;
        trace.steps.push_back(std::move(s));
    }
}

ReflectState oppose(const ReflectState& st) {
    ReflectState r;
    r.quiver = st.quiver.opposite();
    r.beta = st.beta;
    for (const auto& s : st.sigmas) {
        DimVector neg(s.size());
        for (size_t i = 0; i < s.size(); ++i) neg[i] = -s[i];
        r.sigmas.push_back(neg);
    }
    return r;
}

} // namespace

ReflectResult run_reflect(const Quiver& q, const DimVector& beta,
                          const std::vector<DimVector>& alphas, const ReflectOptions& opt) {
    auto val = validate_quiver(q);
    if (!val.ok) throw input_error("run_reflect: invalid quiver: " + val.violations[0].message);
    int l = (int)alphas.size();
    if (l == 0) throw input_error("run_reflect: at least one weight is required");
    std::vector<int64_t> m = opt.m;
    if (m.empty()) m.assign(l, 1);
    if ((int)m.size() != l) throw input_error("run_reflect: m arity mismatch");

    ReflectState st;
    st.quiver = q;
    st.beta = beta;
    for (const auto& al : alphas) {
        DimVector sig = sigma_from_alpha(q, al);
        if (sigma_pairing(sig, beta) != 0)
            throw input_error("run_reflect: sigma(beta) != 0 for weight " + dimvec_to_string(al));
        st.sigmas.push_back(sig);
    }

    ReflectResult res;
    res.b = FactorProduct(l);
    int64_t budget = opt.max_reflections;

    bool source_mode = (opt.direction == ReflectDirection::Source);
    if (source_mode) st = oppose(st);
    std::string why;
    int flips = 0;
    while (true) {
        std::string prev = serialize(st);
        bool done = reflect_attempt(st, res.trace, res.b, m, budget, why);
        if (done) {
            if (!res.b.is_polynomial())
                throw invariant_violation(
                    "run_reflect: terminal product is not a polynomial (beta violates the "
                    "nonvanishing inequalities)");
            res.ok = true;
            return res;
        }
        if (opt.direction != ReflectDirection::Auto || why == "cap") break;
        // alternate direction on the current state (mixed strategy)
        st = oppose(st);
        ++flips;
        if (serialize(st) == prev && flips > 2) break;
        if (flips > 8) break;
    }
    res.ok = false;
    res.fail_reason = why;
    return res;
}

namespace {

PreprojectiveResult iterate_coxeter(const Quiver& q, const DimVector& alpha, int64_t cap,
                                    bool inverse) {
    IntMat c = coxeter_matrix(q);
    if (inverse) c = inverse_unimodular(c);
    std::vector<Int> v(alpha.begin(), alpha.end());
    for (int64_t k = 0; k < cap; ++k) {
        v = c.mul_vec(v);
        bool neg = false, big = false;
        for (const auto& x : v) {
            if (x < 0) neg = true;
            if (abs(x) > Int(1) << 50) big = true;
        }
        if (neg) return {true, false};
        if (big) return {false, true};
    }
    return {false, true};
}

} // namespace

PreprojectiveResult is_preprojective(const Quiver& q, const DimVector& alpha, int64_t cap) {
    return iterate_coxeter(q, alpha, cap, false);
}

PreprojectiveResult is_preinjective(const Quiver& q, const DimVector& alpha, int64_t cap) {
    return iterate_coxeter(q, alpha, cap, true);
}

} // namespace qbf
