#include "qbf/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace qbf {

int Quiver::vertex_index(int64_t user_id) const {
    for (int i = 0; i < n(); ++i)
        if (vertices[i] == user_id) return i;
    throw input_error("unknown vertex id " + std::to_string(user_id));
}

int Quiver::arrow_mult(int x, int y) const {
    int m = 0;
    for (const auto& a : arrows)
        if (a.tail == x && a.head == y) ++m;
    return m;
}

int Quiver::edge_mult(int x, int y) const { return arrow_mult(x, y) + arrow_mult(y, x); }

int Quiver::degree(int x) const {
    int d = 0;
    for (const auto& a : arrows) d += (a.tail == x) + (a.head == x);
    return d;
}

bool Quiver::is_sink(int x) const {
    for (const auto& a : arrows)
        if (a.tail == x) return false;
    return true;
}

bool Quiver::is_source(int x) const {
    for (const auto& a : arrows)
        if (a.head == x) return false;
    return true;
}

Quiver Quiver::opposite() const {
    Quiver r = *this;
    for (auto& a : r.arrows) std::swap(a.tail, a.head);
    return r;
}

ValidationResult validate_quiver(const Quiver& q) {
    ValidationResult res;
    std::set<int64_t> vids;
    for (auto v : q.vertices)
        if (!vids.insert(v).second)
            res.violations.push_back({"duplicate vertex id " + std::to_string(v)});
    std::set<std::string> aids;
    for (const auto& a : q.arrows) {
        if (!aids.insert(a.id).second) res.violations.push_back({"duplicate arrow id " + a.id});
        if (a.tail == a.head)
            res.violations.push_back(
                {"loop at vertex " + std::to_string(q.vertices[a.tail]) + " (arrow " + a.id + ")"});
        if (a.tail < 0 || a.tail >= q.n() || a.head < 0 || a.head >= q.n())
            res.violations.push_back({"arrow " + a.id + " references an unknown vertex"});
    }
    if (!res.violations.empty()) return res;
    // Kahn topological sort
    std::vector<int> indeg(q.n(), 0);
    for (const auto& a : q.arrows) ++indeg[a.head];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < q.n(); ++i)
        if (!indeg[i]) ready.push(i);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        res.topo_order.push_back(v);
        for (const auto& a : q.arrows)
            if (a.tail == v && --indeg[a.head] == 0) ready.push(a.head);
    }
    if ((int)res.topo_order.size() != q.n()) {
        std::ostringstream os;
        os << "oriented cycle through vertices {";
        bool first = true;
        for (int i = 0; i < q.n(); ++i)
            if (indeg[i] > 0) {
                if (!first) os << ",";
                os << q.vertices[i];
                first = false;
            }
        os << "}";
        res.violations.push_back({os.str()});
        res.topo_order.clear();
        return res;
    }
    res.ok = true;
    return res;
}

IntMat euler_matrix(const Quiver& q) {
    IntMat e = IntMat::identity(q.n());
    for (const auto& a : q.arrows) e(a.tail, a.head) -= 1;
    return e;
}

Int euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    if ((int)alpha.size() != q.n() || (int)beta.size() != q.n())
        throw input_error("euler_form: vector length does not match the quiver");
    Int s = 0;
    for (int i = 0; i < q.n(); ++i) s += Int(alpha[i]) * beta[i];
    for (const auto& a : q.arrows) s -= Int(alpha[a.tail]) * beta[a.head];
    return s;
}

DimVector sigma_from_alpha(const Quiver& q, const DimVector& alpha) {
    DimVector sigma(q.n());
    for (int i = 0; i < q.n(); ++i) sigma[i] = alpha[i];
    for (const auto& a : q.arrows) sigma[a.head] -= alpha[a.tail];
    return sigma;
}

DimVector alpha_from_sigma(const Quiver& q, const DimVector& sigma) {
    auto val = validate_quiver(q);
    if (!val.ok) throw input_error("alpha_from_sigma: invalid quiver");
    DimVector alpha(q.n(), 0);
    for (int v : val.topo_order) {
        int64_t s = sigma[v];
        for (const auto& a : q.arrows)
            if (a.head == v) s += alpha[a.tail];
        alpha[v] = s;
    }
    return alpha;
}

DimVector alphastar_from_sigma(const Quiver& q, const DimVector& sigma) {
    auto val = validate_quiver(q);
    if (!val.ok) throw input_error("alphastar_from_sigma: invalid quiver");
    DimVector astar(q.n(), 0);
    for (auto it = val.topo_order.rbegin(); it != val.topo_order.rend(); ++it) {
        int v = *it;
        int64_t s = -sigma[v];
        for (const auto& a : q.arrows)
            if (a.tail == v) s += astar[a.head];
        astar[v] = s;
    }
    return astar;
}

DimVector sigma_from_alphastar(const Quiver& q, const DimVector& astar) {
    DimVector sigma(q.n());
    for (int i = 0; i < q.n(); ++i) sigma[i] = -astar[i];
    for (const auto& a : q.arrows) sigma[a.tail] += astar[a.head];
    return sigma;
}

Weights convert_weight(const Quiver& q, WeightKind kind, const DimVector& given) {
    if ((int)given.size() != q.n()) throw input_error("weight vector length mismatch");
    Weights w;
    switch (kind) {
    case WeightKind::Alpha:
        w.alpha = given;
        w.sigma = sigma_from_alpha(q, given);
        w.alpha_star = alphastar_from_sigma(q, w.sigma);
        break;
    case WeightKind::Sigma:
        w.sigma = given;
        w.alpha = alpha_from_sigma(q, given);
        w.alpha_star = alphastar_from_sigma(q, given);
        break;
    case WeightKind::AlphaStar:
        w.alpha_star = given;
        w.sigma = sigma_from_alphastar(q, given);
        w.alpha = alpha_from_sigma(q, w.sigma);
        break;
    }
    return w;
}

Int sigma_pairing(const DimVector& sigma, const DimVector& beta) {
    Int s = 0;
    for (size_t i = 0; i < sigma.size(); ++i) s += Int(sigma[i]) * beta[i];
    return s;
}

DimVector reflect_vector(const Quiver& q, int x, const DimVector& v) {
    DimVector r = v;
    int64_t s = -v[x];
    for (const auto& a : q.arrows) {
        if (a.tail == x && a.head != x) s += v[a.head];
        if (a.head == x && a.tail != x) s += v[a.tail];
    }
    r[x] = s;
    return r;
}

VertexReflection reflect(const Quiver& q, int x, const DimVector& beta,
                         const std::vector<DimVector>& alphas) {
    if (!q.is_sink(x) && !q.is_source(x))
        throw not_applicable("vertex " + std::to_string(q.vertices[x]) +
                             " is neither a sink nor a source");
    VertexReflection r;
    r.quiver = q;
    for (auto& a : r.quiver.arrows)
        if (a.tail == x || a.head == x) std::swap(a.tail, a.head);
    r.beta = reflect_vector(q, x, beta);
    for (const auto& al : alphas) r.alphas.push_back(reflect_vector(q, x, al));
    return r;
}

IntMat coxeter_matrix(const Quiver& q) {
    IntMat e = euler_matrix(q);
    IntMat einv = inverse_unimodular(e);
    IntMat c = einv.mul(e.transpose());
    for (auto& v : c.a) v = -v;
    return c;
}

namespace {

struct Graph {
    int n;
    std::vector<std::vector<int>> mult; // undirected multiplicities
};

Graph underlying(const Quiver& q) {
    Graph g{q.n(), std::vector<std::vector<int>>(q.n(), std::vector<int>(q.n(), 0))};
    for (const auto& a : q.arrows) {
        g.mult[a.tail][a.head]++;
        g.mult[a.head][a.tail]++;
    }
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, cur;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cur.push_back(v);
            for (int u = 0; u < g.n; ++u)
                if (g.mult[v][u] && comp[u] < 0) {
                    comp[u] = comp[v];
                    stack.push_back(u);
                }
        }
        out.push_back(cur);
    }
    return out;
}

Classification classify_connected(const Graph& g, const std::vector<int>& vs) {
    Classification c;
    c.connected = true;
    int n = (int)vs.size();
    int edges = 0, multi_pairs = 0, max_mult = 0;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int m = g.mult[vs[i]][vs[j]];
            edges += m;
            if (m >= 2) ++multi_pairs, max_mult = std::max(max_mult, m);
        }
    auto deg = [&](int v) {
        int d = 0;
        for (int u : vs) d += g.mult[v][u];
        return d;
    };
    if (n == 1) {
        c.kind = QuiverClass::Dynkin;
        c.subtype = "A1";
        return c;
    }
    if (multi_pairs > 0) {
        if (n == 2 && edges == 2) {
            c.kind = QuiverClass::Euclidean;
            c.subtype = "~A1";
        } else {
            c.kind = QuiverClass::Other;
            c.subtype = "other";
        }
        return c;
    }
    if (edges == n) {
        // single simple cycle?
        bool all2 = true;
        for (int v : vs) all2 &= (deg(v) == 2);
        if (all2) {
            c.kind = QuiverClass::Euclidean;
            c.subtype = "~A" + std::to_string(n - 1);
        } else {
            c.kind = QuiverClass::Other;
            c.subtype = "other";
        }
        return c;
    }
    if (edges != n - 1) {
        c.kind = QuiverClass::Other;
        c.subtype = "other";
        return c;
    }
    // tree: look at branch vertices
    std::vector<int> br;
    for (int v : vs)
        if (deg(v) >= 3) br.push_back(v);
    if (br.empty()) {
        c.kind = QuiverClass::Dynkin;
        c.subtype = "A" + std::to_string(n);
        return c;
    }
    auto arm_lengths = [&](int b) {
        std::vector<int> arms;
        for (int u : vs) {
            if (!g.mult[b][u]) continue;
            // walk away from b
            int len = 1, prev = b, cur = u;
            while (true) {
                int next = -1, d = 0;
                for (int w : vs)
                    if (g.mult[cur][w]) {
                        ++d;
                        if (w != prev) next = w;
                    }
                if (d != 2) break; // leaf (d==1) or another branch (d>=3)
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        return arms;
    };
    if (br.size() == 1) {
        auto arms = arm_lengths(br[0]);
        if (arms.size() == 3) {
            int a = arms[0], b = arms[1], cc = arms[2];
            if (a == 1 && b == 1) {
                c.kind = QuiverClass::Dynkin;
                c.subtype = "D" + std::to_string(cc + 3);
                return c;
            }
            if (a == 1 && b == 2 && cc == 2) { c.kind = QuiverClass::Dynkin; c.subtype = "E6"; return c; }
            if (a == 1 && b == 2 && cc == 3) { c.kind = QuiverClass::Dynkin; c.subtype = "E7"; return c; }
            if (a == 1 && b == 2 && cc == 4) { c.kind = QuiverClass::Dynkin; c.subtype = "E8"; return c; }
            if (a == 2 && b == 2 && cc == 2) { c.kind = QuiverClass::Euclidean; c.subtype = "~E6"; return c; }
            if (a == 1 && b == 3 && cc == 3) { c.kind = QuiverClass::Euclidean; c.subtype = "~E7"; return c; }
            if (a == 1 && b == 2 && cc == 5) { c.kind = QuiverClass::Euclidean; c.subtype = "~E8"; return c; }
        } else if (arms.size() == 4 && arms[0] == 1 && arms[1] == 1 && arms[2] == 1 && arms[3] == 1) {
            c.kind = QuiverClass::Euclidean;
            c.subtype = "~D4";
            return c;
        }
        c.kind = QuiverClass::Other;
        c.subtype = "other";
        return c;
    }
    if (br.size() == 2) {
        auto a1 = arm_lengths(br[0]);
        auto a2 = arm_lengths(br[1]);
        // ~D_n: both branch vertices of degree 3 with two length-1 leaf arms
        if (a1.size() == 3 && a2.size() == 3 && a1[0] == 1 && a1[1] == 1 && a2[0] == 1 && a2[1] == 1) {
            c.kind = QuiverClass::Euclidean;
            c.subtype = "~D" + std::to_string(n - 1);
            return c;
        }
    }
    c.kind = QuiverClass::Other;
    c.subtype = "other";
    return c;
}

} // namespace

std::vector<Classification> classify_components(const Quiver& q) {
    Graph g = underlying(q);
    std::vector<Classification> out;
    for (const auto& comp : components(g)) out.push_back(classify_connected(g, comp));
    return out;
}

Classification classify(const Quiver& q) {
    Graph g = underlying(q);
    auto comps = components(g);
    if (comps.size() == 1) return classify_connected(g, comps[0]);
    Classification c;
    c.connected = false;
    c.kind = QuiverClass::Dynkin;
    for (const auto& comp : comps) {
        auto cc = classify_connected(g, comp);
        if (cc.kind == QuiverClass::Other) c.kind = QuiverClass::Other;
        else if (cc.kind == QuiverClass::Euclidean && c.kind == QuiverClass::Dynkin)
            c.kind = QuiverClass::Euclidean;
        if (!c.subtype.empty()) c.subtype += "+";
        c.subtype += cc.subtype;
    }
    return c;
}

int coxeter_number(const Classification& c) {
    if (c.kind != QuiverClass::Dynkin || !c.connected)
        throw not_applicable("Coxeter number defined for connected Dynkin quivers");
    char t = c.subtype[0];
    int n = std::stoi(c.subtype.substr(1));
    if (t == 'A') return n + 1;
    if (t == 'D') return 2 * n - 2;
    if (n == 6) return 12;
    if (n == 7) return 18;
    return 30;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
    auto cls = classify(q);
    if (cls.kind != QuiverClass::Dynkin || !cls.connected)
        throw not_applicable("positive roots are enumerated for connected Dynkin quivers only");
    std::set<DimVector> roots;
    std::vector<DimVector> work;
    for (int i = 0; i < q.n(); ++i) {
        DimVector e(q.n(), 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        DimVector r = work.back();
        work.pop_back();
        for (int x = 0; x < q.n(); ++x) {
            DimVector s = reflect_vector(q, x, r);
            bool nonneg = true, nonzero = false;
            for (auto v : s) {
                if (v < 0) nonneg = false;
                if (v != 0) nonzero = true;
            }
            if (nonneg && nonzero && roots.insert(s).second) work.push_back(s);
        }
    }
    return std::vector<DimVector>(roots.begin(), roots.end());
}

DimVector projective_dim_vector(const Quiver& q, int x) {
    auto val = validate_quiver(q);
    if (!val.ok) throw input_error("projective_dim_vector: invalid quiver");
    DimVector d(q.n(), 0);
    d[x] = 1; // trivial path
    for (int v : val.topo_order) {
        if (d[v] == 0) continue;
        for (const auto& a : q.arrows)
            if (a.tail == v) d[a.head] += d[v];
    }
    return d;
}

std::string dimvec_to_string(const DimVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace qbf
