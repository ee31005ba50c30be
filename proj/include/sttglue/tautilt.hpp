// Support tau-tilting pairs, torsion classes, the Hasse quiver with brick
// labels, semibricks, and maximal green sequences, all by exhaustive
// enumeration over the indecomposables of a representation-finite hereditary
// algebra.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sttglue/naming.hpp"
#include "sttglue/rep.hpp"

namespace sttglue {

inline constexpr int kDefaultIndecCap = 64;

/// The module category at desk scale: a deterministic list of all
/// indecomposables with cached AR translates and compatibility tables.
struct ModCategory {
    AlgebraPtr alg;
    std::vector<Rep> indecs;
    std::vector<std::string> names;
    std::vector<Rep> taus;                      // tau(indecs[i])
    std::vector<std::vector<char>> hom_nz;      // Hom(M_i, M_j) != 0
    std::vector<std::vector<char>> hom_tau_nz;  // Hom(M_i, tau M_j) != 0
    std::vector<char> brick;                    // End(M_i) a division algebra

    int find(const Rep& m) const {
        for (int i = 0; i < static_cast<int>(indecs.size()); ++i)
            if (is_isomorphic(indecs[i], m)) return i;
        throw InvariantViolation("module not found among the indecomposables");
    }

    std::vector<int> summand_indices(const Rep& m) const {
        std::vector<int> out;
        for (const auto& s : decompose(m)) out.push_back(find(s));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Rep sum_of(const std::vector<int>& idx) const {
        std::vector<Rep> parts;
        for (int i : idx) parts.push_back(indecs[i]);
        return direct_sum(alg, parts);
    }
};

/// tau^{-1}-orbits of the projectives; exhaustive for representation-finite
/// hereditary algebras (every indecomposable is preprojective).
inline ModCategory make_mod_category(const AlgebraPtr& alg, int cap = kDefaultIndecCap) {
    ModCategory cat;
    cat.alg = alg;
    std::vector<Rep> work;
    for (int v = 0; v < alg->num_vertices(); ++v) work.push_back(proj_rep(alg, v));
    while (!work.empty()) {
        Rep m = std::move(work.back());
        work.pop_back();
        bool known = false;
        for (const auto& k : cat.indecs)
            if (is_isomorphic(k, m)) {
                known = true;
                break;
            }
        if (known) continue;
        cat.indecs.push_back(m);
        if (static_cast<int>(cat.indecs.size()) > cap)
            throw RepInfiniteError("representation-infinite (or cap too small)");
        Rep next = tau_inverse(m);
        if (!next.is_zero()) work.push_back(std::move(next));
    }
    detail::sort_reps(cat.indecs);
    // Tie-break equal dimension vectors by name for full determinism.
    std::stable_sort(cat.indecs.begin(), cat.indecs.end(), [](const Rep& a, const Rep& b) {
        auto ka = detail::canonical_key(a), kb = detail::canonical_key(b);
        if (ka != kb) return ka < kb;
        return name_indec(a) < name_indec(b);
    });

    const int n = static_cast<int>(cat.indecs.size());
    for (const auto& m : cat.indecs) {
        cat.names.push_back(name_indec(m));
        cat.taus.push_back(tau(m));
    }
    cat.hom_nz.assign(n, std::vector<char>(n, 0));
    cat.hom_tau_nz.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cat.hom_nz[i][j] = hom_dim(cat.indecs[i], cat.indecs[j]) > 0;
            cat.hom_tau_nz[i][j] =
                !cat.taus[j].is_zero() && hom_dim(cat.indecs[i], cat.taus[j]) > 0;
        }
    for (int i = 0; i < n; ++i) {
        auto inv = end_algebra(cat.indecs[i]).invariants();
        cat.brick.push_back(inv.radical_dim == 0 && inv.num_simples == 1);
    }
    return cat;
}

/// A support tau-tilting pair, stored as indices into the category's
/// indecomposable list plus the excluded vertex set (the idempotent).
struct SttPair {
    std::vector<int> indecs;             // sorted
    std::vector<int> excluded_vertices;  // sorted

    bool operator==(const SttPair&) const = default;
};

inline bool is_tau_rigid(const ModCategory& cat, const std::vector<int>& idx) {
    for (int i : idx)
        for (int j : idx)
            if (cat.hom_tau_nz[i][j]) return false;
    return true;
}

inline std::vector<int> zero_support_vertices(const ModCategory& cat,
                                              const std::vector<int>& idx) {
    std::vector<int> out;
    for (int v = 0; v < cat.alg->num_vertices(); ++v) {
        bool zero = true;
        for (int i : idx)
            if (cat.indecs[i].dims[v] > 0) zero = false;
        if (zero) out.push_back(v);
    }
    return out;
}

inline bool is_stt_pair(const ModCategory& cat, const SttPair& p) {
    if (!is_tau_rigid(cat, p.indecs)) return false;
    if (zero_support_vertices(cat, p.indecs) != p.excluded_vertices) return false;
    return static_cast<int>(p.indecs.size() + p.excluded_vertices.size()) ==
           cat.alg->num_vertices();
}

/// All support tau-tilting pairs, by backtracking over tau-compatible
/// subsets; deterministic (lexicographic in indec indices).
inline std::vector<SttPair> enumerate_stt(const ModCategory& cat) {
    const int n = static_cast<int>(cat.indecs.size());
    std::vector<SttPair> out;
    std::vector<int> cur;
    auto consider = [&]() {
        SttPair p{cur, zero_support_vertices(cat, cur)};
        if (static_cast<int>(p.indecs.size() + p.excluded_vertices.size()) ==
            cat.alg->num_vertices())
            out.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, int start) -> void {
        consider();
        for (int i = start; i < n; ++i) {
            if (cat.hom_tau_nz[i][i]) continue;
            bool ok = true;
            for (int j : cur)
                if (cat.hom_tau_nz[i][j] || cat.hom_tau_nz[j][i]) ok = false;
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

using TorsionClass = std::vector<int>;  // sorted indec indices

/// Fac(G) intersected with the indecomposable list.
inline TorsionClass fac_class(const ModCategory& cat, const Rep& gen) {
    TorsionClass t;
    for (int i = 0; i < static_cast<int>(cat.indecs.size()); ++i)
        if (gen_membership(cat.indecs[i], gen)) t.push_back(i);
    return t;
}

inline TorsionClass fac_of_pair(const ModCategory& cat, const SttPair& p) {
    return fac_class(cat, cat.sum_of(p.indecs));
}

/// Ext-projective generator P(T): the N in T with Ext^1(N, G) = 0.
inline std::vector<int> ext_projectives(const ModCategory& cat, const TorsionClass& t) {
    Rep g = cat.sum_of(t);
    std::vector<int> out;
    for (int i : t)
        if (ext1_dim(cat.indecs[i], g) == 0) out.push_back(i);
    return out;
}

/// Smallest torsion class containing every member of `members`: intersection
/// of the finitely many torsion classes Fac(stt module) that contain them.
inline TorsionClass smallest_torsion_class(const ModCategory& cat,
                                           const std::vector<SttPair>& all_stt,
                                           const std::vector<int>& members) {
    std::vector<char> keep(cat.indecs.size(), 1);
    bool found = false;
    for (const auto& p : all_stt) {
        TorsionClass t = fac_of_pair(cat, p);
        bool contains = true;
        for (int m : members)
            if (!std::binary_search(t.begin(), t.end(), m)) contains = false;
        if (!contains) continue;
        found = true;
        std::vector<char> in(cat.indecs.size(), 0);
        for (int i : t) in[i] = 1;
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = keep[i] && in[i];
    }
    if (!found) throw InvariantViolation("no torsion class contains the given modules");
    TorsionClass out;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

struct HasseEdge {
    int from;   // node index of the larger torsion class
    int to;     // node index of the smaller
    int label;  // indec index of the brick label
};

struct HasseQuiver {
    std::vector<SttPair> nodes;
    std::vector<TorsionClass> classes;  // parallel to nodes
    std::vector<HasseEdge> edges;
    int bottom = -1;  // the zero torsion class
    int top = -1;     // mod A
};

inline HasseQuiver hasse(const ModCategory& cat) {
    HasseQuiver h;
    h.nodes = enumerate_stt(cat);
    for (const auto& p : h.nodes) h.classes.push_back(fac_of_pair(cat, p));
    const int n = static_cast<int>(h.nodes.size());
    auto subset = [](const TorsionClass& a, const TorsionClass& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int i = 0; i < n; ++i) {
        if (h.classes[i].empty()) h.bottom = i;
        if (h.classes[i].size() == cat.indecs.size()) h.top = i;
    }
    if (h.bottom < 0 || h.top < 0)
        throw InvariantViolation("torsion lattice is missing its endpoints");

    for (int big = 0; big < n; ++big)
        for (int small = 0; small < n; ++small) {
            if (big == small) continue;
            if (!subset(h.classes[small], h.classes[big]) ||
                h.classes[small].size() == h.classes[big].size())
                continue;
            bool covering = true;
            for (int mid = 0; mid < n && covering; ++mid) {
                if (mid == big || mid == small) continue;
                if (subset(h.classes[small], h.classes[mid]) &&
                    subset(h.classes[mid], h.classes[big]) &&
                    h.classes[mid].size() != h.classes[small].size() &&
                    h.classes[mid].size() != h.classes[big].size())
                    covering = false;
            }
            if (!covering) continue;
            // Brick label: the unique brick S in the big class with
            // Hom(G', S) = 0 for G' the generator of the small class.
            Rep gsmall = cat.sum_of(h.classes[small]);
            std::vector<int> cands;
            for (int s : h.classes[big]) {
                if (!cat.brick[s]) continue;
                if (gsmall.is_zero() || hom_dim(gsmall, cat.indecs[s]) == 0) cands.push_back(s);
            }
            if (cands.size() != 1)
                throw InvariantViolation("brick label absent or not unique on a covering edge");
            h.edges.push_back({big, small, cands[0]});
        }
    return h;
}

/// Semibrick of a support tau-tilting pair: each summand modulo the images
/// of all radical maps from the full module into it.
inline std::vector<int> semibrick_of(const ModCategory& cat, const SttPair& p) {
    std::vector<int> out;
    for (int i : p.indecs) {
        const Rep& mi = cat.indecs[i];
        // Collect radical maps into M_i: all Hom components from other
        // summands, plus the radical of End(M_i).
        std::vector<Morph> maps;
        for (int j : p.indecs) {
            if (j == i) continue;
            for (const auto& f : hom_basis(cat.indecs[j], mi)) maps.push_back(f);
        }
        auto endo = hom_basis(mi, mi);
        Mat rad = end_algebra(mi).radical();
        for (int r = 0; r < rad.rows(); ++r) {
            Morph f = zero_morph(mi, mi);
            for (int c = 0; c < rad.cols(); ++c)
                if (rad.at(r, c)) f = morph_add(f, morph_scale(endo[c], rad.at(r, c)));
            maps.push_back(f);
        }
        // Quotient by the total image.
        std::vector<Rep> sources;
        for (const auto& f : maps) sources.push_back(f.source);
        Rep dom = direct_sum(cat.alg, sources);
        Morph big = zero_morph(dom, mi);
        for (std::size_t v = 0; v < mi.dims.size(); ++v) {
            int co = 0;
            for (const auto& f : maps) {
                const Mat& blk = f.blocks[v];
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c) big.blocks[v].at(r, co + c) = blk.at(r, c);
                co += blk.cols();
            }
        }
        Rep brick = maps.empty() ? mi : morphism_kit(big).cokernel;
        if (brick.is_zero()) continue;  // summand absorbed by the others
        int idx = cat.find(brick);
        if (!cat.brick[idx]) throw InvariantViolation("semibrick member is not a brick");
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    // Hom-orthogonality check.
    for (int a : out)
        for (int b : out)
            if (a != b && cat.hom_nz[a][b])
                throw InvariantViolation("semibrick members are not Hom-orthogonal");
    return out;
}

struct GreenSequence {
    std::vector<int> chain;   // node indices, increasing from bottom to top
    std::vector<int> labels;  // brick indec indices, in increasing order
};

/// All maximal chains bottom -> top in the Hasse quiver, labels read in
/// increasing order.
inline std::vector<GreenSequence> enumerate_mgs(const HasseQuiver& h) {
    // Downward adjacency from each node.
    std::map<int, std::vector<std::pair<int, int>>> down;  // from -> (to, label)
    for (const auto& e : h.edges) down[e.from].push_back({e.to, e.label});
    std::vector<GreenSequence> out;
    std::vector<int> chain{h.top};
    std::vector<int> labels;
    auto rec = [&](auto&& self, int node) -> void {
        if (node == h.bottom) {
            GreenSequence g;
            g.chain.assign(chain.rbegin(), chain.rend());
            g.labels.assign(labels.rbegin(), labels.rend());
            out.push_back(std::move(g));
            return;
        }
        auto it = down.find(node);
        if (it == down.end()) throw InvariantViolation("dead end above the bottom class");
        for (const auto& [to, label] : it->second) {
            chain.push_back(to);
            labels.push_back(label);
            self(self, to);
            chain.pop_back();
            labels.pop_back();
        }
    };
    rec(rec, h.top);
    return out;
}

/// Complete forward hom-orthogonal sequence test: bricks, Hom(M_i, M_j) = 0
/// for i < j, and the sequence is the label sequence of some maximal chain.
inline bool is_complete_fho(const ModCategory& cat, const std::vector<GreenSequence>& all,
                            const std::vector<int>& seq) {
    for (int s : seq)
        if (!cat.brick[s]) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (cat.hom_nz[seq[i]][seq[j]]) return false;
    for (const auto& g : all)
        if (g.labels == seq) return true;
    return false;
}

/// Bongartz completion of a tau-rigid set: P(T) for T = {N : Hom(N, tau X) = 0}.
inline SttPair bongartz(const ModCategory& cat, const std::vector<int>& x) {
    if (!is_tau_rigid(cat, x)) throw InvariantViolation("input is not tau-rigid");
    TorsionClass t;
    for (int i = 0; i < static_cast<int>(cat.indecs.size()); ++i) {
        bool ok = true;
        for (int j : x)
            if (cat.hom_tau_nz[i][j]) ok = false;
        if (ok) t.push_back(i);
    }
    std::vector<int> comp = ext_projectives(cat, t);
    SttPair p{comp, zero_support_vertices(cat, comp)};
    if (!is_stt_pair(cat, p)) throw InvariantViolation("Bongartz completion is not stt");
    for (int i : x)
        if (!std::binary_search(comp.begin(), comp.end(), i))
            throw InvariantViolation("Bongartz completion lost a summand");
    return p;
}

}  // namespace sttglue
