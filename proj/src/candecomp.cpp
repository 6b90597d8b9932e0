#include "qbf/candecomp.hpp"

#include "qbf/schofield.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace qbf {

bool Decomposition::same_multiset(const Decomposition& o) const {
    auto key = [](const Decomposition& d) {
        std::map<DimVector, int64_t> m;
        for (const auto& [r, k] : d.summands) m[r] += k;
        return m;
    };
    return key(*this) == key(o);
}

std::string Decomposition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, k] : summands) {
        if (!first) os << " + ";
        first = false;
        os << dimvec_to_string(r);
        if (k != 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct RootReps {
    std::vector<DimVector> roots;
    std::vector<Representation> reps;
    mutable std::map<std::pair<int, int>, int> hom_cache;
    const Quiver* q = nullptr;

    int hom(int i, int j) const {
        auto key = std::make_pair(i, j);
        auto it = hom_cache.find(key);
        if (it != hom_cache.end()) return it->second;
        int h = hom_dim(*q, reps[i], reps[j], /*fast=*/true);
        hom_cache.emplace(key, h);
        return h;
    }
};

RootReps sample_root_reps(const Quiver& q, const std::vector<DimVector>& roots, uint64_t seed) {
    RootReps rr;
    rr.q = &q;
    rr.roots = roots;
    for (size_t i = 0; i < roots.size(); ++i)
        rr.reps.push_back(random_exceptional(q, roots[i], derive_seed(seed, i)));
    return rr;
}

/// Order roots so that hom(V_i, V_j) != 0 with i != j implies j comes first.
std::vector<int> hom_topological_order(const RootReps& rr) {
    int t = (int)rr.roots.size();
    std::vector<int> remaining(t), order;
    for (int i = 0; i < t; ++i) remaining[i] = i;
    while (!remaining.empty()) {
        int pick = -1;
        for (int cand : remaining) {
            bool src = true;
            for (int other : remaining) {
                if (other == cand) continue;
                if (rr.hom(cand, other) != 0) {
                    src = false;
                    break;
                }
            }
            if (src && (pick < 0 || rr.roots[cand] < rr.roots[pick])) pick = cand;
        }
        if (pick < 0)
            throw invariant_violation("Hom relation among roots is not acyclic");
        order.push_back(pick);
        remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
    }
    return order;
}

std::optional<std::map<DimVector, int64_t>> decomposition_attempt(const Quiver& q,
                                                                  const DimVector& beta,
                                                                  const std::vector<DimVector>& roots,
                                                                  uint64_t seed) {
    RootReps rr = sample_root_reps(q, roots, seed);
    std::vector<int> order = hom_topological_order(rr);
    Representation M = random_representation(q, beta, derive_seed(seed, 424242));
    int t = (int)roots.size();
    std::vector<int64_t> h(t);
    for (int i = 0; i < t; ++i) h[i] = hom_dim(q, rr.reps[i], M, /*fast=*/true);
    // forward substitution along the hom order (H is unitriangular there)
    std::vector<int64_t> mult(t, 0);
    for (int oi = 0; oi < t; ++oi) {
        int i = order[oi];
        int64_t v = h[i];
        for (int oj = 0; oj < oi; ++oj) {
            int j = order[oj];
            if (mult[j]) v -= (int64_t)rr.hom(i, j) * mult[j];
        }
        if (v < 0) return std::nullopt; // non-generic sample
        mult[i] = v;
    }
    DimVector total(q.n(), 0);
    for (int i = 0; i < t; ++i)
        for (int x = 0; x < q.n(); ++x) total[x] += mult[i] * roots[i][x];
    if (total != beta) return std::nullopt;
    std::map<DimVector, int64_t> out;
    for (int i = 0; i < t; ++i)
        if (mult[i]) out[roots[i]] = mult[i];
    return out;
}

} // namespace

Decomposition generic_decomposition(const Quiver& q, const DimVector& beta, uint64_t seed) {
    for (auto v : beta)
        if (v < 0) throw input_error("generic_decomposition: beta must be nonnegative");
    std::vector<DimVector> roots = positive_roots(q);
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto r1 = decomposition_attempt(q, beta, roots, derive_seed(seed, 10 + attempt));
        auto r2 = decomposition_attempt(q, beta, roots, derive_seed(seed, 90000 + attempt));
        if (r1 && r2 && *r1 == *r2) {
            Decomposition d;
            for (const auto& [r, k] : *r1) d.summands.push_back({r, k});
            return d;
        }
    }
    throw not_applicable("generic_decomposition: seeds disagree after retries");
}

namespace {

struct AnSplit {
    std::vector<std::pair<DimVector, int64_t>> second_class, first_class, z_class;
};

// Build the class split and the inner orders; `swap_classes` exchanges the
// roles when the Hom criterion alone does not decide.
std::optional<AnSplit> an_split(const Quiver& q, const DimVector& beta, uint64_t seed,
                                bool swap_classes) {
    Decomposition dec = generic_decomposition(q, beta, seed);
    std::vector<std::pair<DimVector, int64_t>> z, g0, g1;
    for (const auto& [r, k] : dec.summands) {
        if (q.n() < 2 || r[1] == 0) z.push_back({r, k});
        else if (r[0] == 0) g0.push_back({r, k});
        else g1.push_back({r, k});
    }
    // hom between distinct root classes, via exceptional representatives
    std::vector<DimVector> all;
    for (const auto& [r, k] : g0) all.push_back(r);
    for (const auto& [r, k] : g1) all.push_back(r);
    RootReps rr = sample_root_reps(q, all, derive_seed(seed, 777));
    auto hom_roots = [&](const DimVector& a, const DimVector& b) {
        int ia = (int)(std::find(all.begin(), all.end(), a) - all.begin());
        int ib = (int)(std::find(all.begin(), all.end(), b) - all.begin());
        return rr.hom(ia, ib);
    };
    auto no_cross = [&](const std::vector<std::pair<DimVector, int64_t>>& from,
                        const std::vector<std::pair<DimVector, int64_t>>& to) {
        for (const auto& [f, kf] : from)
            for (const auto& [t, kt] : to)
                if (!(f == t) && hom_roots(f, t) != 0) return false;
        return true;
    };
    AnSplit sp;
    // first class = the side that only receives (condition (c))
    bool g1_first = no_cross(g1, g0);
    bool g0_first = no_cross(g0, g1);
    if (!g1_first && !g0_first) return std::nullopt;
    bool pick_g1 = g1_first;
    if (g1_first && g0_first) pick_g1 = !swap_classes; // ambiguous: caller tries both
    if (pick_g1) {
        sp.first_class = g1;
        sp.second_class = g0;
    } else {
        sp.first_class = g0;
        sp.second_class = g1;
    }
    sp.z_class = z;
    // order first class: top row receives from everything below it
    std::vector<std::pair<DimVector, int64_t>> rest = sp.first_class, ordered;
    while (!rest.empty()) {
        int pick = -1;
        for (size_t i = 0; i < rest.size(); ++i) {
            bool src = true;
            for (size_t j = 0; j < rest.size(); ++j) {
                if (i == j) continue;
                if (hom_roots(rest[i].first, rest[j].first) != 0) {
                    src = false;
                    break;
                }
            }
            if (src && (pick < 0 || rest[i].first < rest[pick].first)) pick = (int)i;
        }
        if (pick < 0) return std::nullopt;
        ordered.push_back(rest[pick]);
        rest.erase(rest.begin() + pick);
    }
    sp.first_class = ordered;
    // order second class by how far down the first class it maps
    auto tau = [&](const DimVector& w) {
        int64_t row = 0, best = 0;
        for (const auto& [v, k] : sp.first_class) {
            for (int64_t c = 0; c < k; ++c) {
                ++row;
                if (hom_roots(w, v) != 0) best = row;
            }
        }
        return best;
    };
    std::stable_sort(sp.second_class.begin(), sp.second_class.end(),
                     [&](const auto& a, const auto& b) {
                         int64_t ta = tau(a.first), tb = tau(b.first);
                         if (ta != tb) return ta < tb;
                         return a.first < b.first;
                     });
    return sp;
}

} // namespace

AnOrdered an_decomposition(const Quiver& q, const DimVector& beta, uint64_t seed) {
    auto cls = classify(q);
    if (!(cls.kind == QuiverClass::Dynkin && !cls.subtype.empty() && cls.subtype[0] == 'A'))
        throw input_error("an_decomposition expects a connected type-A quiver");
    auto sp = an_split(q, beta, seed, false);
    if (!sp) throw not_applicable("an_decomposition: class split is not Hom-consistent");
    AnOrdered out;
    out.second_class = sp->second_class;
    out.first_class = sp->first_class;
    out.z_class = sp->z_class;
    for (const auto& s : sp->second_class) out.ordered.summands.push_back(s);
    for (const auto& s : sp->first_class) out.ordered.summands.push_back(s);
    for (const auto& s : sp->z_class) out.ordered.summands.push_back(s);
    return out;
}

std::string DnDiagram::render() const {
    auto cell = [](int64_t d) -> std::string {
        if (d == 0) return ".";
        if (d == 1) return "*";
        if (d == 2) return "**";
        return std::to_string(d);
    };
    std::ostringstream os;
    auto row_str = [&](bool circ, const DimVector& a, const DimVector& b) {
        std::ostringstream rs;
        rs << (circ ? "o " : "  ");
        for (int i = 0; i < chain_len; ++i) {
            int64_t d = a[i] + (b.empty() ? 0 : b[i]);
            rs << " " << cell(d);
        }
        return rs.str();
    };
    DimVector none;
    for (const auto& r : above) os << row_str(false, r, none) << "\n";
    os << "  " << std::string(2 * chain_len, '-') << "\n";
    for (const auto& r : between) os << row_str(true, r.first, r.moved) << "\n";
    os << "  " << std::string(2 * chain_len, '-') << "\n";
    for (const auto& r : below_first) os << row_str(false, r, none) << "\n";
    for (const auto& [r, k] : zrows)
        for (int64_t c = 0; c < k; ++c) os << row_str(false, r, none) << "\n";
    return os.str();
}

namespace {

struct DnLabeling {
    std::vector<int> chain; // original vertex indices for canonical 1..n-1
    int nvert;              // original index of the canonical vertex n
    bool opposed = false;
};

DnLabeling dn_labeling(const Quiver& q0) {
    auto cls = classify(q0);
    if (!(cls.kind == QuiverClass::Dynkin && cls.subtype.size() && cls.subtype[0] == 'D'))
        throw input_error("dn_canonical expects a connected type-D quiver");
    Quiver q = q0;
    int n = q.n();
    int branch = -1;
    for (int i = 0; i < n; ++i)
        if (q.degree(i) == 3) branch = i;
    if (branch < 0) throw input_error("dn_canonical: no branch vertex");
    std::vector<int> leaf_nbrs, chain_nbrs;
    for (int i = 0; i < n; ++i) {
        if (i == branch || q.edge_mult(branch, i) == 0) continue;
        if (q.degree(i) == 1) leaf_nbrs.push_back(i);
        else chain_nbrs.push_back(i);
    }
    DnLabeling lab;
    // pick the canonical vertex n among the leaf neighbours (largest id),
    // preferring an arrow branch -> leaf; otherwise pass to the opposite quiver
    int nleaf = -1;
    for (int v : leaf_nbrs)
        if (q.arrow_mult(branch, v) == 1 && v > nleaf) nleaf = v;
    if (nleaf < 0) {
        lab.opposed = true;
        for (int v : leaf_nbrs)
            if (v > nleaf) nleaf = v; // after opposing every leaf arrow leaves the branch
    }
    lab.nvert = nleaf;
    std::vector<int> rem;
    for (int v : leaf_nbrs)
        if (v != nleaf) rem.push_back(v);
    int one = -1;
    if (!chain_nbrs.empty()) {
        if (rem.size() != 1) throw input_error("dn_canonical: unexpected branch shape");
        one = rem[0];
    } else {
        // D4: two remaining leaves; smaller id becomes vertex 1
        std::sort(rem.begin(), rem.end());
        one = rem[0];
    }
    lab.chain.push_back(one);
    lab.chain.push_back(branch);
    if (!chain_nbrs.empty()) {
        int prev = branch, cur = chain_nbrs[0];
        while (true) {
            lab.chain.push_back(cur);
            int next = -1;
            for (int i = 0; i < q.n(); ++i)
                if (i != prev && i != cur && q.edge_mult(cur, i)) next = i;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    } else {
        lab.chain.push_back(rem[1]);
    }
    if ((int)lab.chain.size() != n - 1) throw input_error("dn_canonical: bad chain walk");
    return lab;
}

struct DnAttempt {
    Decomposition dec; // in canonical coordinates (chain..., n)
    DnDiagram diagram;
};

DnAttempt dn_attempt(const Quiver& qc, const DimVector& betac, const Quiver& chainq,
                     const DimVector& beta_chain, uint64_t seed, bool swap_classes) {
    int n = qc.n();
    auto sp = an_split(chainq, beta_chain, seed, swap_classes);
    if (!sp) throw not_applicable("dn_canonical: class split is not Hom-consistent");

    // hom oracle between chain roots for condition (c)
    std::vector<DimVector> all;
    for (const auto& [r, k] : sp->second_class) all.push_back(r);
    for (const auto& [r, k] : sp->first_class) all.push_back(r);
    RootReps rr = sample_root_reps(chainq, all, derive_seed(seed, 4040));
    auto hom_roots = [&](const DimVector& a, const DimVector& b) {
        int ia = (int)(std::find(all.begin(), all.end(), a) - all.begin());
        int ib = (int)(std::find(all.begin(), all.end(), b) - all.begin());
        return rr.hom(ia, ib);
    };

    // expand rows
    std::vector<DimVector> W, V;
    for (const auto& [r, k] : sp->second_class)
        for (int64_t c = 0; c < k; ++c) W.push_back(r);
    for (const auto& [r, k] : sp->first_class)
        for (int64_t c = 0; c < k; ++c) V.push_back(r);

    int64_t circles = betac[n - 1];
    int64_t p = (int64_t)V.size();
    int64_t with_circle = std::min(circles, p);
    int64_t extra = circles - with_circle;

    // targets from the bottom: extra empty rows first, then V rows bottom-up
    struct Target {
        bool empty;
        int64_t vrow; // index into V when !empty
    };
    std::vector<Target> targets;
    for (int64_t i = 0; i < extra; ++i) targets.push_back({true, -1});
    for (int64_t i = with_circle; i-- > 0;) targets.push_back({false, i});

    std::vector<DimVector> moved_into(with_circle, DimVector(n - 1, 0));
    std::vector<DimVector> extra_moved(extra, DimVector(n - 1, 0));
    size_t wnext = 0;
    for (const auto& t : targets) {
        if (wnext >= W.size()) break; // (b) ran out of second class
        if (!t.empty && hom_roots(W[wnext], V[t.vrow]) != 0) break; // (c)
        if (t.empty) extra_moved[&t - targets.data()] = W[wnext];
        else moved_into[t.vrow] = W[wnext];
        ++wnext;
    } // reaching the top line = running out of targets: (a)

    DnAttempt at;
    at.diagram.chain_len = n - 1;
    auto widen = [&](const DimVector& chaindims, int64_t dim_n) {
        DimVector v(n, 0);
        for (int i = 0; i < n - 1; ++i) v[i] = chaindims[i];
        v[n - 1] = dim_n;
        return v;
    };
    std::map<DimVector, int64_t> acc;
    for (size_t wi = wnext; wi < W.size(); ++wi) {
        at.diagram.above.push_back(W[wi]);
        acc[widen(W[wi], 0)] += 1;
    }
    for (int64_t i = 0; i < with_circle; ++i) {
        DimVector sum(n - 1, 0);
        for (int k = 0; k < n - 1; ++k) sum[k] = V[i][k] + moved_into[i][k];
        at.diagram.between.push_back({V[i], moved_into[i]});
        acc[widen(sum, 1)] += 1;
    }
    for (int64_t i = extra; i-- > 0;) {
        at.diagram.between.push_back({DimVector(n - 1, 0), extra_moved[i]});
        acc[widen(extra_moved[i], 1)] += 1;
    }
    for (int64_t i = with_circle; i < p; ++i) {
        at.diagram.below_first.push_back(V[i]);
        acc[widen(V[i], 0)] += 1;
    }
    at.diagram.zrows = sp->z_class;
    for (const auto& [r, k] : sp->z_class) acc[widen(r, 0)] += k;
    for (const auto& [r, k] : acc) at.dec.summands.push_back({r, k});
    return at;
}

} // namespace

DnResult dn_canonical(const Quiver& q, const DimVector& beta, uint64_t seed) {
    DnLabeling lab = dn_labeling(q);
    Quiver q1 = lab.opposed ? q.opposite() : q;
    int n = q.n();
    // canonical quiver: vertices reordered chain..., n
    std::vector<int> order = lab.chain;
    order.push_back(lab.nvert);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Quiver qc;
    for (int i = 0; i < n; ++i) qc.vertices.push_back(q1.vertices[order[i]]);
    for (const auto& a : q1.arrows) qc.arrows.push_back({a.id, pos[a.tail], pos[a.head]});
    DimVector betac(n);
    for (int i = 0; i < n; ++i) betac[i] = beta[order[i]];
    // chain subquiver
    Quiver chainq;
    for (int i = 0; i < n - 1; ++i) chainq.vertices.push_back(qc.vertices[i]);
    for (const auto& a : qc.arrows)
        if (a.tail != n - 1 && a.head != n - 1) chainq.arrows.push_back(a);
    DimVector beta_chain(betac.begin(), betac.end() - 1);

    Decomposition oracle = generic_decomposition(q, beta, derive_seed(seed, 31337));

    std::string last_err;
    for (int sw = 0; sw < 2; ++sw) {
        DnAttempt at;
        try {
            at = dn_attempt(qc, betac, chainq, beta_chain, seed, sw == 1);
        } catch (const std::exception& e) {
            last_err = e.what();
            continue;
        }
        // back to original coordinates
        Decomposition mapped;
        for (const auto& [r, k] : at.dec.summands) {
            DimVector v(n, 0);
            for (int i = 0; i < n; ++i) v[order[i]] = r[i];
            mapped.summands.push_back({v, k});
        }
        std::sort(mapped.summands.begin(), mapped.summands.end());
        if (mapped.same_multiset(oracle)) {
            DnResult res;
            res.decomposition = mapped;
            res.diagram = at.diagram;
            return res;
        }
        last_err = "diagram result " + mapped.to_string() + " disagrees with the numeric oracle " +
                   oracle.to_string();
    }
    throw invariant_violation("dn_canonical cross-check failed: " + last_err);
}

void verify_decomposition(const Quiver& q, const DimVector& beta, const Decomposition& dec,
                          uint64_t seed) {
    DimVector total(q.n(), 0);
    for (const auto& [r, k] : dec.summands) {
        if (k <= 0) throw invariant_violation("nonpositive multiplicity");
        for (int i = 0; i < q.n(); ++i) total[i] += r[i] * k;
    }
    if (total != beta) throw invariant_violation("decomposition does not sum to beta");
    auto roots = positive_roots(q);
    std::set<DimVector> rootset(roots.begin(), roots.end());
    for (const auto& [r, k] : dec.summands)
        if (!rootset.count(r))
            throw invariant_violation("summand " + dimvec_to_string(r) + " is not a positive root");
    for (size_t i = 0; i < dec.summands.size(); ++i)
        for (size_t j = 0; j < dec.summands.size(); ++j) {
            if (i == j) continue;
            auto he = generic_hom_ext(q, dec.summands[i].first, dec.summands[j].first,
                                      derive_seed(seed, i * 100 + j));
            if (he.ext != 0)
                throw invariant_violation("generic Ext does not vanish between summands");
        }
}

} // namespace qbf
