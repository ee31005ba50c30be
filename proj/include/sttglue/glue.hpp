// Gluing over a triangular matrix algebra A = (B 0; M C): triple
// presentations (X, Y)_f, the six ladder functors, gluing of torsion
// classes / support tau-tilting pairs / semibricks / maximal green
// sequences, tau-tilting reduction along (X, 0), and the End-algebra
// recovery of C. Every theorem-shaped operation re-checks its conclusion
// and throws InvariantViolation on failure.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sttglue/tautilt.hpp"

namespace sttglue {

/// A-modules as triples (X, Y)_f with X over B, Y over C and
/// f: Y (x)_C M -> X a B-morphism (f.source must be tensor_with_M(y)).
struct Triple {
    Rep x;
    Rep y;
    Morph f;
};

namespace detail {

/// Basis layout of Y (x)_C M at each B-vertex: entries (connecting arrow m,
/// B-path s: tgt(m) -> b), each spanning dim Y_{src(m)} coordinates.
struct TensorLayout {
    // per B-vertex: (connecting index, B-path index into paths_between, offset)
    std::vector<std::vector<std::tuple<int, int, int>>> entries;
    std::vector<int> dims;
};

inline TensorLayout tensor_layout(const GluedAlgebra& g, const std::vector<int>& ydims) {
    const AlgebraPtr& b = g.B();
    TensorLayout lay;
    lay.entries.resize(b->num_vertices());
    lay.dims.assign(b->num_vertices(), 0);
    for (int v = 0; v < b->num_vertices(); ++v) {
        int off = 0;
        for (int m = 0; m < static_cast<int>(g.connecting().size()); ++m) {
            const auto& paths = b->paths_between(g.connecting()[m].tgt, v);
            for (int s = 0; s < static_cast<int>(paths.size()); ++s) {
                lay.entries[v].push_back({m, s, off});
                off += ydims[g.connecting()[m].src];
            }
        }
        lay.dims[v] = off;
    }
    return lay;
}

}  // namespace detail

/// Y (x)_C M as a B-module; equals the B-restriction of j_1(Y).
inline Rep tensor_with_M(const GluedAlgebra& g, const Rep& y) {
    const AlgebraPtr& b = g.B();
    const fp_t p = b->modulus();
    auto lay = detail::tensor_layout(g, y.dims);
    Rep t{b, lay.dims, {}};
    const auto& arrows = b->quiver().arrows();
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int vs = arrows[a].src, vt = arrows[a].tgt;
        Mat blk(lay.dims[vt], lay.dims[vs], p);
        for (const auto& [m, s, off] : lay.entries[vs]) {
            // (m, s, y) |-> (m, s.a, y)
            const int start = g.connecting()[m].tgt;
            Path ext = b->paths()[b->paths_between(start, vs)[s]];
            ext.arrows.push_back(a);
            ext.tgt = vt;
            const auto& tpaths = b->paths_between(start, vt);
            for (const auto& [m2, s2, off2] : lay.entries[vt]) {
                if (m2 != m) continue;
                if (b->paths()[tpaths[s2]].arrows != ext.arrows) continue;
                const int yd = y.dims[g.connecting()[m].src];
                for (int k = 0; k < yd; ++k) blk.at(off2 + k, off + k) = 1;
            }
        }
        t.action.push_back(std::move(blk));
    }
    return t;
}

/// Gluing context: the glued algebra plus cached module categories and
/// support tau-tilting enumerations for B, C, and A.
struct GluingContext {
    GluedAlgebra glued;
    ModCategory catB, catC, catA;
    std::vector<SttPair> sttB, sttC, sttA;
};

inline GluingContext make_gluing_context(GluedAlgebra g, int cap = kDefaultIndecCap) {
    GluingContext ctx{std::move(g), {}, {}, {}, {}, {}, {}};
    ctx.catB = make_mod_category(ctx.glued.B(), cap);
    ctx.catC = make_mod_category(ctx.glued.C(), cap);
    ctx.catA = make_mod_category(ctx.glued.A(), cap);
    ctx.sttB = enumerate_stt(ctx.catB);
    ctx.sttC = enumerate_stt(ctx.catC);
    ctx.sttA = enumerate_stt(ctx.catA);
    return ctx;
}

// --- the ladder -----------------------------------------------------------

/// i_0(X) = (X, 0).
inline Rep i_0(const GluedAlgebra& g, const Rep& x) {
    Rep z = zero_rep(g.A());
    const int nb = g.B()->num_vertices();
    const auto& barr = g.B()->quiver().arrows();
    for (int v = 0; v < nb; ++v) z.dims[v] = x.dims[v];
    for (int v = nb; v < g.A()->num_vertices(); ++v) z.dims[v] = 0;
    const auto& aarr = g.A()->quiver().arrows();
    for (int a = 0; a < static_cast<int>(aarr.size()); ++a) {
        if (a < static_cast<int>(barr.size()))
            z.action[a] = x.action[a];
        else
            z.action[a] = Mat(z.dims[aarr[a].tgt], z.dims[aarr[a].src], g.A()->modulus());
    }
    return z;
}

/// i_{-1}(Z) = Z restricted to the B-part.
inline Rep i_minus1(const GluedAlgebra& g, const Rep& z) {
    Rep x{g.B(), {}, {}};
    const int nb = g.B()->num_vertices();
    x.dims.assign(z.dims.begin(), z.dims.begin() + nb);
    for (int a = 0; a < static_cast<int>(g.B()->quiver().arrows().size()); ++a)
        x.action.push_back(z.action[a]);
    return x;
}

/// j_0(Z) = Z restricted to the C-part.
inline Rep j_0(const GluedAlgebra& g, const Rep& z) {
    Rep y{g.C(), {}, {}};
    const int nb = g.B()->num_vertices();
    y.dims.assign(z.dims.begin() + nb, z.dims.end());
    const int boff = static_cast<int>(g.B()->quiver().arrows().size());
    for (int a = 0; a < static_cast<int>(g.C()->quiver().arrows().size()); ++a)
        y.action.push_back(z.action[boff + a]);
    return y;
}

/// j_{-1}(Y) = (0, Y).
inline Rep j_minus1(const GluedAlgebra& g, const Rep& y) {
    Rep z = zero_rep(g.A());
    const int nb = g.B()->num_vertices();
    for (int v = 0; v < g.C()->num_vertices(); ++v) z.dims[nb + v] = y.dims[v];
    const int boff = static_cast<int>(g.B()->quiver().arrows().size());
    const auto& aarr = g.A()->quiver().arrows();
    for (int a = 0; a < static_cast<int>(aarr.size()); ++a) {
        const int ca = a - boff;
        if (ca >= 0 && ca < static_cast<int>(g.C()->quiver().arrows().size()))
            z.action[a] = y.action[ca];
        else
            z.action[a] = Mat(z.dims[aarr[a].tgt], z.dims[aarr[a].src], g.A()->modulus());
    }
    return z;
}

/// Assemble the A-module of a triple (X, Y)_f.
inline Rep from_triple(const GluedAlgebra& g, const Triple& t) {
    const fp_t p = g.A()->modulus();
    Rep z = zero_rep(g.A());
    const int nb = g.B()->num_vertices();
    for (int v = 0; v < nb; ++v) z.dims[v] = t.x.dims[v];
    for (int v = 0; v < g.C()->num_vertices(); ++v) z.dims[nb + v] = t.y.dims[v];
    const int boff = static_cast<int>(g.B()->quiver().arrows().size());
    const int coff = boff + static_cast<int>(g.C()->quiver().arrows().size());
    auto lay = detail::tensor_layout(g, t.y.dims);
    const auto& aarr = g.A()->quiver().arrows();
    for (int a = 0; a < static_cast<int>(aarr.size()); ++a) {
        if (a < boff) {
            z.action[a] = t.x.action[a];
        } else if (a < coff) {
            z.action[a] = t.y.action[a - boff];
        } else {
            // Connecting arrow m: c -> b acts through f at the basis slot
            // (m, e_b).
            const int m = a - coff;
            const int b = g.connecting()[m].tgt;
            const int c = g.connecting()[m].src;
            Mat blk(t.x.dims[b], t.y.dims[c], p);
            for (const auto& [m2, s2, off2] : lay.entries[b]) {
                if (m2 != m) continue;
                if (!g.B()->paths()[g.B()->paths_between(b, b)[s2]].arrows.empty()) continue;
                for (int r = 0; r < t.x.dims[b]; ++r)
                    for (int k = 0; k < t.y.dims[c]; ++k)
                        blk.at(r, k) = t.f.blocks[b].at(r, off2 + k);
            }
            z.action[a] = std::move(blk);
        }
    }
    validate_rep(z);
    return z;
}

/// Read the triple off an A-module.
inline Triple to_triple(const GluedAlgebra& g, const Rep& z) {
    Triple t{i_minus1(g, z), j_0(g, z), {}};
    Rep tensor = tensor_with_M(g, t.y);
    Morph f = zero_morph(tensor, t.x);
    auto lay = detail::tensor_layout(g, t.y.dims);
    const int nb = g.B()->num_vertices();
    const int coff = static_cast<int>(g.B()->quiver().arrows().size()) +
                     static_cast<int>(g.C()->quiver().arrows().size());
    for (int v = 0; v < nb; ++v) {
        for (const auto& [m, s, off] : lay.entries[v]) {
            const int b = g.connecting()[m].tgt;
            const int c = g.connecting()[m].src;
            // f(m, s, y) = Z_s(Z_m(y)).
            Mat zm = z.action[coff + m];  // Z_c -> Z_b
            Mat zs = path_action(t.x, g.B()->paths()[g.B()->paths_between(b, v)[s]]);
            Mat col = zs * zm;
            for (int r = 0; r < col.rows(); ++r)
                for (int k = 0; k < t.y.dims[c]; ++k) f.blocks[v].at(r, off + k) = col.at(r, k);
        }
    }
    if (!is_valid_morph(f)) throw InvariantViolation("triple connecting map is not B-linear");
    t.f = std::move(f);
    return t;
}

/// j_1(Y) = (Y (x)_C M, Y)_{id}.
inline Rep j_1(const GluedAlgebra& g, const Rep& y) {
    Rep tensor = tensor_with_M(g, y);
    return from_triple(g, Triple{tensor, y, identity_morph(tensor)});
}

/// i_1(Z) = coker(f) over B.
inline Rep i_1(const GluedAlgebra& g, const Rep& z) {
    Triple t = to_triple(g, z);
    return morphism_kit(t.f).cokernel;
}

// --- gluing ---------------------------------------------------------------

/// Indecomposables of A whose triple has X-part in tb and Y-part in tc.
inline TorsionClass glue_torsion_class(const GluingContext& ctx, const TorsionClass& tb,
                                       const TorsionClass& tc) {
    TorsionClass out;
    for (int i = 0; i < static_cast<int>(ctx.catA.indecs.size()); ++i) {
        Triple t = to_triple(ctx.glued, ctx.catA.indecs[i]);
        bool ok = true;
        if (!t.x.is_zero())
            for (int s : ctx.catB.summand_indices(t.x))
                if (!std::binary_search(tb.begin(), tb.end(), s)) ok = false;
        if (!t.y.is_zero())
            for (int s : ctx.catC.summand_indices(t.y))
                if (!std::binary_search(tc.begin(), tc.end(), s)) ok = false;
        if (ok) out.push_back(i);
    }
    return out;
}

/// Result of gluing two support tau-tilting pairs, with the approximation
/// data that produced the connecting part.
struct GlueResult {
    SttPair pair;          // over A
    Rep j1y;               // j_1(Y)
    Rep glued_part;        // (X_Y, Y)_f as an A-module
    std::string approx;    // e.g. "3/1/2 -> 3/1" (empty when no map happens)
    LeftApprox b_approx;   // f: Y (x) M -> X_Y over B
};

inline SttPair pair_of_indices(const ModCategory& cat, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return SttPair{idx, zero_support_vertices(cat, idx)};
}

/// Glue support tau-tilting pairs: Z = (X, 0) + (X_Y, Y)_f with f the
/// minimal left Fac(X)-approximation of Y (x)_C M.
inline GlueResult glue_stt(const GluingContext& ctx, const SttPair& px, const SttPair& py) {
    if (!is_stt_pair(ctx.catB, px) || !is_stt_pair(ctx.catC, py))
        throw InvariantViolation("glue_stt inputs must be support tau-tilting pairs");
    Rep x = ctx.catB.sum_of(px.indecs);
    Rep y = ctx.catC.sum_of(py.indecs);
    Rep w = tensor_with_M(ctx.glued, y);

    TorsionClass facx = fac_class(ctx.catB, x);
    std::vector<Rep> targets;
    for (int i : facx) targets.push_back(ctx.catB.indecs[i]);
    LeftApprox ap = minimal_left_approximation(w, targets);

    Rep glued_part = from_triple(ctx.glued, Triple{ap.f.target, y, ap.f});
    Rep z = direct_sum(ctx.glued.A(), {i_0(ctx.glued, x), glued_part});

    GlueResult res{pair_of_indices(ctx.catA, ctx.catA.summand_indices(z)),
                   j_1(ctx.glued, y), glued_part, "", std::move(ap)};
    if (!res.j1y.is_zero() && !is_isomorphic(res.j1y, res.glued_part))
        res.approx = name_module(res.j1y) + " -> " + name_module(res.glued_part);

    // Postconditions: the result is a support tau-tilting pair and Fac(Z) is
    // the glued torsion class.
    if (!is_stt_pair(ctx.catA, res.pair))
        throw InvariantViolation("glued module is not support tau-tilting");
    if (fac_of_pair(ctx.catA, res.pair) !=
        glue_torsion_class(ctx, fac_class(ctx.catB, x), fac_class(ctx.catC, y)))
        throw InvariantViolation("Fac of the glued module differs from the glued torsion class");
    return res;
}

/// The no-approximation shortcut: valid when Hom_B(Y (x) M, tau X) = 0 and
/// Y (x) M vanishes on the X-excluded vertices; returns absent otherwise.
inline std::optional<SttPair> glue_stt_simple(const GluingContext& ctx, const SttPair& px,
                                              const SttPair& py) {
    Rep x = ctx.catB.sum_of(px.indecs);
    Rep y = ctx.catC.sum_of(py.indecs);
    Rep w = tensor_with_M(ctx.glued, y);
    for (int v : px.excluded_vertices)
        if (w.dims[v] != 0) return std::nullopt;  // Hom(eB, Y(x)M) != 0
    Rep tx = tau(x);
    if (!tx.is_zero() && !w.is_zero() && hom_dim(w, tx) > 0) return std::nullopt;

    Rep z = direct_sum(ctx.glued.A(), {i_0(ctx.glued, x), j_1(ctx.glued, y)});
    SttPair p = pair_of_indices(ctx.catA, ctx.catA.summand_indices(z));
    if (p != glue_stt(ctx, px, py).pair)
        throw InvariantViolation("shortcut gluing disagrees with the approximation gluing");
    return p;
}

inline SttPair regular_pair(const ModCategory& cat) {
    return pair_of_indices(cat, cat.summand_indices(regular_rep(cat.alg)));
}

/// Bongartz completion of (X, 0) for a tau-tilting B-module X: glue with C.
inline GlueResult bongartz_glued(const GluingContext& ctx, const SttPair& px) {
    if (!px.excluded_vertices.empty())
        throw InvariantViolation("bongartz_glued needs a tau-tilting module (full support)");
    GlueResult res = glue_stt(ctx, px, regular_pair(ctx.catC));
    // Fac(result) must be the perpendicular category of tau(X, 0).
    Rep taui0x = tau(i_0(ctx.glued, ctx.catB.sum_of(px.indecs)));
    TorsionClass perp;
    for (int i = 0; i < static_cast<int>(ctx.catA.indecs.size()); ++i)
        if (taui0x.is_zero() || hom_dim(ctx.catA.indecs[i], taui0x) == 0) perp.push_back(i);
    if (fac_of_pair(ctx.catA, res.pair) != perp)
        throw InvariantViolation("Bongartz gluing does not generate the perpendicular class");
    return res;
}

/// Semibrick gluing: {(S, 0)} union {(0, S')}.
inline std::vector<int> glue_semibrick(const GluingContext& ctx, const std::vector<int>& sbB,
                                       const std::vector<int>& sbC) {
    std::vector<int> out;
    for (int s : sbB) out.push_back(ctx.catA.find(i_0(ctx.glued, ctx.catB.indecs[s])));
    for (int s : sbC) out.push_back(ctx.catA.find(j_minus1(ctx.glued, ctx.catC.indecs[s])));
    std::sort(out.begin(), out.end());
    for (int a : out) {
        if (!ctx.catA.brick[a]) throw InvariantViolation("glued semibrick member is not a brick");
        for (int b : out)
            if (a != b && ctx.catA.hom_nz[a][b])
                throw InvariantViolation("glued semibrick is not Hom-orthogonal");
    }
    // Check: T(glued semibrick) = glued torsion class of the
    // component-generated classes.
    TorsionClass tb = smallest_torsion_class(ctx.catB, ctx.sttB, sbB);
    TorsionClass tc = smallest_torsion_class(ctx.catC, ctx.sttC, sbC);
    if (smallest_torsion_class(ctx.catA, ctx.sttA, out) != glue_torsion_class(ctx, tb, tc))
        throw InvariantViolation("glued semibrick generates the wrong torsion class");
    return out;
}

// --- reduction ------------------------------------------------------------

/// Reduction along a tau-tilting B-module X: the pairs over A having (X, 0)
/// as a summand correspond to all pairs over C.
struct ReduceReport {
    SttPair x;                                            // over B
    std::vector<std::pair<SttPair, SttPair>> bijection;   // (A-pair, C-pair)
    TorsionClass lower, upper;                            // interval ends over A
};

inline SttPair restrict_to_c(const GluingContext& ctx, const SttPair& pa) {
    Rep s = j_0(ctx.glued, ctx.catA.sum_of(pa.indecs));
    return pair_of_indices(ctx.catC, s.is_zero() ? std::vector<int>{}
                                                 : ctx.catC.summand_indices(s));
}

inline ReduceReport reduce(const GluingContext& ctx, const SttPair& px) {
    if (!px.excluded_vertices.empty())
        throw InvariantViolation("reduce needs a tau-tilting module (full support)");
    Rep i0x = i_0(ctx.glued, ctx.catB.sum_of(px.indecs));
    std::vector<int> i0x_idx = ctx.catA.summand_indices(i0x);

    ReduceReport rep{px, {}, fac_class(ctx.catA, i0x), {}};
    Rep ti0x = tau(i0x);
    for (int i = 0; i < static_cast<int>(ctx.catA.indecs.size()); ++i)
        if (ti0x.is_zero() || hom_dim(ctx.catA.indecs[i], ti0x) == 0) rep.upper.push_back(i);

    // Forward: A-pairs with (X, 0) as a summand, restricted to C.
    std::vector<SttPair> domain;
    for (const auto& pa : ctx.sttA) {
        bool has = true;
        for (int i : i0x_idx)
            if (!std::binary_search(pa.indecs.begin(), pa.indecs.end(), i)) has = false;
        if (has) domain.push_back(pa);
    }
    for (const auto& pa : domain) rep.bijection.push_back({pa, restrict_to_c(ctx, pa)});

    // Mutual inverse on the full enumerations.
    if (domain.size() != ctx.sttC.size())
        throw InvariantViolation("reduction domain and sttC have different sizes");
    for (const auto& [pa, pc] : rep.bijection)
        if (glue_stt(ctx, px, pc).pair != pa)
            throw InvariantViolation("reduction round-trip failed");
    for (const auto& pc : ctx.sttC) {
        SttPair pa = glue_stt(ctx, px, pc).pair;
        if (restrict_to_c(ctx, pa) != pc)
            throw InvariantViolation("reduction round-trip failed (C side)");
    }

    // Order-preserving both ways, and the image is the full interval.
    auto leq = [](const TorsionClass& a, const TorsionClass& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (const auto& [pa1, pc1] : rep.bijection)
        for (const auto& [pa2, pc2] : rep.bijection) {
            bool la = leq(fac_of_pair(ctx.catA, pa1), fac_of_pair(ctx.catA, pa2));
            bool lc = leq(fac_of_pair(ctx.catC, pc1), fac_of_pair(ctx.catC, pc2));
            if (la != lc) throw InvariantViolation("reduction is not order-preserving");
        }
    for (const auto& pa : ctx.sttA) {
        TorsionClass t = fac_of_pair(ctx.catA, pa);
        bool inside = leq(rep.lower, t) && leq(t, rep.upper);
        bool indom = false;
        for (const auto& [pd, pc] : rep.bijection) indom = indom || pd == pa;
        if (inside != indom)
            throw InvariantViolation("reduction image is not the expected interval");
    }
    return rep;
}

// --- End-algebra recovery of the second factor -----------------------------

struct CprimeReport {
    AlgebraInvariants cprime;
    AlgebraInvariants c;
};

inline CprimeReport cprime_invariants(const GluingContext& ctx, const SttPair& px) {
    if (!px.excluded_vertices.empty())
        throw InvariantViolation("cprime_invariants needs a tau-tilting module");
    Rep x = ctx.catB.sum_of(px.indecs);
    Rep y = regular_rep(ctx.glued.C());
    Rep w = tensor_with_M(ctx.glued, y);
    TorsionClass facx = fac_class(ctx.catB, x);
    std::vector<Rep> targets;
    for (int i : facx) targets.push_back(ctx.catB.indecs[i]);
    LeftApprox ap = minimal_left_approximation(w, targets);
    Rep i0x = i_0(ctx.glued, x);
    Rep glued_part = from_triple(ctx.glued, Triple{ap.f.target, y, ap.f});
    Rep t = direct_sum(ctx.glued.A(), {i0x, glued_part});

    // e = the block projection onto (X, 0); the two-sided ideal it generates
    // is the maps factoring through add(X, 0).
    Morph e = zero_morph(t, t);
    for (std::size_t v = 0; v < t.dims.size(); ++v)
        for (int i = 0; i < i0x.dims[v]; ++i) e.blocks[v].at(i, i) = 1;
    if (!is_valid_morph(e)) throw InvariantViolation("block projection is not an endomorphism");

    EndData ed = end_data(t);
    FinDimAlgebra endo = end_algebra_from(t, ed);
    FinDimAlgebra cprime = endo.quotient_by_idempotent_ideal(end_coords(ed, e));
    CprimeReport repn{cprime.invariants(),
                      path_algebra_as_findim(*ctx.glued.C()).invariants()};
    if (!(repn.cprime == repn.c))
        throw InvariantViolation("C' invariants differ from C");
    return repn;
}

// --- maximal green sequences ------------------------------------------------

/// Concatenate maximal green sequences: B-part chain lifted by (-, 0), then
/// the C-part chain lifted over all of mod B.
inline GreenSequence glue_mgs(const GluingContext& ctx, const HasseQuiver& hb,
                              const HasseQuiver& hc, const HasseQuiver& ha,
                              const GreenSequence& alpha, const GreenSequence& beta) {
    const TorsionClass modB = fac_class(ctx.catB, regular_rep(ctx.glued.B()));
    std::vector<TorsionClass> chain;
    for (int node : alpha.chain)
        chain.push_back(glue_torsion_class(ctx, hb.classes[node], {}));
    for (std::size_t i = 1; i < beta.chain.size(); ++i)
        chain.push_back(glue_torsion_class(ctx, modB, hc.classes[beta.chain[i]]));

    GreenSequence out;
    auto node_of = [&](const TorsionClass& t) {
        for (int i = 0; i < static_cast<int>(ha.classes.size()); ++i)
            if (ha.classes[i] == t) return i;
        throw InvariantViolation("glued chain member is not a torsion class of A");
    };
    for (const auto& t : chain) out.chain.push_back(node_of(t));
    // Each step must be a covering relation; read its label.
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
        bool found = false;
        for (const auto& e : ha.edges)
            if (e.from == out.chain[i + 1] && e.to == out.chain[i]) {
                out.labels.push_back(e.label);
                found = true;
            }
        if (!found) throw InvariantViolation("glued chain step is not a covering relation");
    }
    if (out.labels.size() != alpha.labels.size() + beta.labels.size())
        throw InvariantViolation("glued sequence length is not l(alpha) + l(beta)");
    // Labels are the lifted component bricks, in order.
    for (std::size_t i = 0; i < alpha.labels.size(); ++i) {
        Rep want = i_0(ctx.glued, ctx.catB.indecs[alpha.labels[i]]);
        if (!is_isomorphic(ctx.catA.indecs[out.labels[i]], want))
            throw InvariantViolation("glued label differs from the lifted B-brick");
    }
    for (std::size_t i = 0; i < beta.labels.size(); ++i) {
        Rep want = j_minus1(ctx.glued, ctx.catC.indecs[beta.labels[i]]);
        if (!is_isomorphic(ctx.catA.indecs[out.labels[alpha.labels.size() + i]], want))
            throw InvariantViolation("glued label differs from the lifted C-brick");
    }
    return out;
}

}  // namespace sttglue
