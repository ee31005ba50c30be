// Finite-dimensional right modules over a path algebra: Hom spaces,
// kernels/images/cokernels, Krull-Schmidt decomposition, minimal projective
// presentations, the AR translate, Ext^1, Fac membership, and minimal left
// approximations.
//
// Convention: a right kQ-module is a representation assigning to each arrow
// a a map M_{src(a)} -> M_{tgt(a)}, so P_2 over 1 <- 2 is the uniserial
// module with top S_2 and socle S_1.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sttglue/errors.hpp"
#include "sttglue/findim.hpp"
#include "sttglue/mat.hpp"
#include "sttglue/quiver.hpp"

namespace sttglue {

// Search budgets.
inline constexpr std::uint64_t kIsoSearchCap = 1u << 16;
inline constexpr std::uint64_t kExtEnumCap = 1u << 12;
inline constexpr int kRandomTrialCap = 20000;
inline constexpr std::uint32_t kDefaultSeed = 0x5717;

struct Rep {
    AlgebraPtr alg;
    std::vector<int> dims;    // one per vertex
    std::vector<Mat> action;  // one per arrow; rows = dim at target, cols = dim at source

    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }
};

inline Rep zero_rep(const AlgebraPtr& alg) {
    Rep r{alg, std::vector<int>(alg->num_vertices(), 0), {}};
    for (const auto& a : alg->quiver().arrows())
        r.action.emplace_back(0, 0, alg->modulus()), (void)a;
    return r;
}

inline void validate_rep(const Rep& m) {
    const auto& arrows = m.alg->quiver().arrows();
    if (m.dims.size() != static_cast<std::size_t>(m.alg->num_vertices()) ||
        m.action.size() != arrows.size())
        throw std::invalid_argument("rep shape mismatch");
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (m.action[a].rows() != m.dims[arrows[a].tgt] ||
            m.action[a].cols() != m.dims[arrows[a].src])
            throw std::invalid_argument("rep action shape mismatch at arrow " + arrows[a].name);
}

inline Rep simple_rep(const AlgebraPtr& alg, int v) {
    Rep r = zero_rep(alg);
    r.dims[v] = 1;
    const auto& arrows = alg->quiver().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        r.action[a] = Mat(r.dims[arrows[a].tgt], r.dims[arrows[a].src], alg->modulus());
    return r;
}

/// P_v = e_v A: basis at vertex w is the set of paths v -> w; arrows act by
/// appending.
inline Rep proj_rep(const AlgebraPtr& alg, int v) {
    const fp_t p = alg->modulus();
    Rep r{alg, {}, {}};
    r.dims.resize(alg->num_vertices());
    for (int w = 0; w < alg->num_vertices(); ++w)
        r.dims[w] = static_cast<int>(alg->paths_between(v, w).size());
    const auto& arrows = alg->quiver().arrows();
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const auto& src_paths = alg->paths_between(v, arrows[a].src);
        const auto& tgt_paths = alg->paths_between(v, arrows[a].tgt);
        Mat m(static_cast<int>(tgt_paths.size()), static_cast<int>(src_paths.size()), p);
        for (int c = 0; c < static_cast<int>(src_paths.size()); ++c) {
            Path ext = alg->paths()[src_paths[c]];
            ext.arrows.push_back(a);
            ext.tgt = arrows[a].tgt;
            for (int ridx = 0; ridx < static_cast<int>(tgt_paths.size()); ++ridx)
                if (alg->paths()[tgt_paths[ridx]].arrows == ext.arrows) {
                    m.at(ridx, c) = 1;
                    break;
                }
        }
        r.action.push_back(std::move(m));
    }
    return r;
}

/// I_v = D(A e_v): basis at vertex w is dual to the set of paths w -> v;
/// arrows act by the transpose of prepending.
inline Rep inj_rep(const AlgebraPtr& alg, int v) {
    const fp_t p = alg->modulus();
    Rep r{alg, {}, {}};
    r.dims.resize(alg->num_vertices());
    for (int w = 0; w < alg->num_vertices(); ++w)
        r.dims[w] = static_cast<int>(alg->paths_between(w, v).size());
    const auto& arrows = alg->quiver().arrows();
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        const auto& from_s = alg->paths_between(s, v);
        const auto& from_t = alg->paths_between(t, v);
        // mu: Paths(t->v) -> Paths(s->v), q |-> a.q ; action = transpose.
        Mat mu(static_cast<int>(from_s.size()), static_cast<int>(from_t.size()), p);
        for (int c = 0; c < static_cast<int>(from_t.size()); ++c) {
            Path ext{s, v, {a}};
            const auto& q = alg->paths()[from_t[c]];
            ext.arrows.insert(ext.arrows.end(), q.arrows.begin(), q.arrows.end());
            for (int ridx = 0; ridx < static_cast<int>(from_s.size()); ++ridx)
                if (alg->paths()[from_s[ridx]].arrows == ext.arrows) {
                    mu.at(ridx, c) = 1;
                    break;
                }
        }
        r.action.push_back(mu.transpose());
    }
    return r;
}

inline Rep direct_sum(const AlgebraPtr& alg, const std::vector<Rep>& parts) {
    const fp_t p = alg->modulus();
    Rep r = zero_rep(alg);
    for (const auto& m : parts)
        for (int v = 0; v < alg->num_vertices(); ++v) r.dims[v] += m.dims[v];
    const auto& arrows = alg->quiver().arrows();
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        Mat blk(r.dims[arrows[a].tgt], r.dims[arrows[a].src], p);
        int ro = 0, co = 0;
        for (const auto& m : parts) {
            const Mat& ma = m.action[a];
            for (int i = 0; i < ma.rows(); ++i)
                for (int j = 0; j < ma.cols(); ++j) blk.at(ro + i, co + j) = ma.at(i, j);
            ro += ma.rows();
            co += ma.cols();
        }
        r.action[a] = std::move(blk);
    }
    return r;
}

inline Rep regular_rep(const AlgebraPtr& alg) {
    std::vector<Rep> parts;
    for (int v = 0; v < alg->num_vertices(); ++v) parts.push_back(proj_rep(alg, v));
    return direct_sum(alg, parts);
}

/// Composite of the arrow actions along a path (identity for e_v).
inline Mat path_action(const Rep& m, const Path& pa) {
    Mat r = Mat::identity(m.dims[pa.src], m.alg->modulus());
    for (int a : pa.arrows) r = m.action[a] * r;
    return r;
}

struct Morph {
    Rep source;
    Rep target;
    std::vector<Mat> blocks;  // one per vertex, dims target_v x source_v

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

inline Morph zero_morph(const Rep& s, const Rep& t) {
    Morph f{s, t, {}};
    for (std::size_t v = 0; v < s.dims.size(); ++v)
        f.blocks.emplace_back(t.dims[v], s.dims[v], s.alg->modulus());
    return f;
}

inline Morph identity_morph(const Rep& m) {
    Morph f{m, m, {}};
    for (int d : m.dims) f.blocks.push_back(Mat::identity(d, m.alg->modulus()));
    return f;
}

inline bool is_valid_morph(const Morph& f) {
    const auto& arrows = f.source.alg->quiver().arrows();
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        if (!(f.blocks[t] * f.source.action[a] == f.target.action[a] * f.blocks[s]))
            return false;
    }
    return true;
}

inline Morph compose(const Morph& g, const Morph& f) {  // g after f
    Morph h{f.source, g.target, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

inline Morph morph_add(const Morph& f, const Morph& g) {
    Morph h = f;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks[v] = f.blocks[v] + g.blocks[v];
    return h;
}

inline Morph morph_scale(const Morph& f, fp_t c) {
    Morph h = f;
    for (auto& b : h.blocks) b = b.scaled(c);
    return h;
}

/// Basis of Hom_A(M, N) in a deterministic order: solve the intertwining
/// conditions blockwise.
inline std::vector<Morph> hom_basis(const Rep& m, const Rep& n) {
    if (m.alg.get() != n.alg.get())
        throw std::invalid_argument("hom_basis: algebra mismatch");
    const fp_t p = m.alg->modulus();
    const int nv = m.alg->num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    const int nvars = offset[nv];

    const auto& arrows = m.alg->quiver().arrows();
    int nrows = 0;
    for (const auto& a : arrows) nrows += n.dims[a.tgt] * m.dims[a.src];
    Mat sys(nrows, nvars, p);
    int row = 0;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        // phi_t * M_a - N_a * phi_s = 0, entrywise.
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j) {
                for (int k = 0; k < m.dims[t]; ++k)
                    sys.at(row, offset[t] + i * m.dims[t] + k) = fp_add(
                        sys.at(row, offset[t] + i * m.dims[t] + k), m.action[a].at(k, j), p);
                for (int k = 0; k < n.dims[s]; ++k)
                    sys.at(row, offset[s] + k * m.dims[s] + j) =
                        fp_sub(sys.at(row, offset[s] + k * m.dims[s] + j),
                               n.action[a].at(i, k), p);
                ++row;
            }
    }
    auto kit = rref_kit(sys);
    std::vector<Morph> basis;
    for (const auto& vec : kit.kernel_basis) {
        Morph f = zero_morph(m, n);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    f.blocks[v].at(i, j) = vec.at(offset[v] + i * m.dims[v] + j, 0);
        basis.push_back(std::move(f));
    }
    return basis;
}

inline int hom_dim(const Rep& m, const Rep& n) {
    return static_cast<int>(hom_basis(m, n).size());
}

/// Kernel / image / cokernel with the structure maps relating them to the
/// ambient modules.
struct MorphismKit {
    Rep kernel;
    Morph kernel_incl;  // kernel -> source
    Rep image;
    Morph image_incl;  // image -> target
    Rep cokernel;
    Morph coker_proj;  // target -> cokernel
};

inline MorphismKit morphism_kit(const Morph& f) {
    const AlgebraPtr& alg = f.source.alg;
    const fp_t p = alg->modulus();
    const int nv = alg->num_vertices();
    const auto& arrows = alg->quiver().arrows();
    MorphismKit kit{zero_rep(alg), {}, zero_rep(alg), {}, zero_rep(alg), {}};

    std::vector<Mat> kincl(nv, Mat(0, 0, p)), iincl(nv, Mat(0, 0, p)),
        cproj(nv, Mat(0, 0, p)), csect(nv, Mat(0, 0, p));
    for (int v = 0; v < nv; ++v) {
        auto rk = rref_kit(f.blocks[v]);
        // Kernel inclusion: columns are the kernel basis vectors.
        Mat ki(f.source.dims[v], static_cast<int>(rk.kernel_basis.size()), p);
        for (int j = 0; j < ki.cols(); ++j)
            for (int i = 0; i < ki.rows(); ++i) ki.at(i, j) = rk.kernel_basis[j].at(i, 0);
        kincl[v] = std::move(ki);
        kit.kernel.dims[v] = kincl[v].cols();
        // Image inclusion: echelon basis of the column space.
        Mat ii(f.target.dims[v], static_cast<int>(rk.image_basis.size()), p);
        for (int j = 0; j < ii.cols(); ++j)
            for (int i = 0; i < ii.rows(); ++i) ii.at(i, j) = rk.image_basis[j].at(i, 0);
        iincl[v] = std::move(ii);
        kit.image.dims[v] = iincl[v].cols();
        // Cokernel: quotient coordinates are the non-pivot positions of the
        // image row space.
        Mat img_rows = iincl[v].transpose();
        Rref rr = rref(img_rows);
        std::vector<bool> is_pivot(f.target.dims[v], false);
        for (int c : rr.pivots) is_pivot[c] = true;
        std::vector<int> comp;
        for (int c = 0; c < f.target.dims[v]; ++c)
            if (!is_pivot[c]) comp.push_back(c);
        Mat pr(static_cast<int>(comp.size()), f.target.dims[v], p);
        Mat se(f.target.dims[v], static_cast<int>(comp.size()), p);
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) se.at(comp[i], i) = 1;
        // pr(x) = complement coordinates of x after reduction by the image.
        for (int c0 = 0; c0 < f.target.dims[v]; ++c0) {
            std::vector<fp_t> x(f.target.dims[v], 0);
            x[c0] = 1;
            for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i) {
                fp_t cc = x[rr.pivots[i]];
                if (!cc) continue;
                for (int t = 0; t < f.target.dims[v]; ++t)
                    x[t] = fp_sub(x[t], fp_mul(cc, rr.m.at(i, t), p), p);
            }
            for (int i = 0; i < static_cast<int>(comp.size()); ++i) pr.at(i, c0) = x[comp[i]];
        }
        cproj[v] = std::move(pr);
        csect[v] = std::move(se);
        kit.cokernel.dims[v] = cproj[v].rows();
    }

    auto solve_cols = [&](const Mat& basis, const Mat& rhs) {
        // basis * X = rhs, column by column; basis has full column rank.
        Mat x(basis.cols(), rhs.cols(), p);
        for (int j = 0; j < rhs.cols(); ++j) {
            Mat b(rhs.rows(), 1, p);
            for (int i = 0; i < rhs.rows(); ++i) b.at(i, 0) = rhs.at(i, j);
            auto sol = solve(basis, b);
            if (!sol) throw InvariantViolation("subrepresentation is not arrow-stable");
            for (int i = 0; i < basis.cols(); ++i) x.at(i, j) = sol->at(i, 0);
        }
        return x;
    };

    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        kit.kernel.action[a] = solve_cols(kincl[t], f.source.action[a] * kincl[s]);
        kit.image.action[a] = solve_cols(iincl[t], f.target.action[a] * iincl[s]);
        kit.cokernel.action[a] = cproj[t] * (f.target.action[a] * csect[s]);
    }
    kit.kernel_incl = Morph{kit.kernel, f.source, kincl};
    kit.image_incl = Morph{kit.image, f.target, iincl};
    kit.coker_proj = Morph{f.target, kit.cokernel, cproj};
    return kit;
}

inline bool is_invertible_morph(const Morph& f) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
        if (f.source.dims[v] != f.target.dims[v]) return false;
        if (!is_invertible(f.blocks[v])) return false;
    }
    return true;
}

inline bool is_surjective_morph(const Morph& f) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (rank(f.blocks[v]) != f.target.dims[v]) return false;
    return true;
}

namespace detail {

/// Iterate vectors of length k over F_p in lexicographic order; calls fn for
/// each, stops early if fn returns true. Returns whether fn succeeded.
inline bool for_each_vector(int k, fp_t p, std::uint64_t cap,
                            const std::function<bool(const std::vector<fp_t>&)>& fn,
                            bool* exhausted) {
    std::vector<fp_t> c(k, 0);
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        count *= p;
        if (count > cap) {
            *exhausted = false;
            return false;
        }
    }
    *exhausted = true;
    while (true) {
        if (fn(c)) return true;
        int i = 0;
        while (i < k && c[i] == p - 1) c[i++] = 0;
        if (i == k) return false;
        ++c[i];
    }
}

inline Morph combine(const std::vector<Morph>& basis, const std::vector<fp_t>& c,
                     const Rep& s, const Rep& t) {
    Morph f = zero_morph(s, t);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i]) f = morph_add(f, morph_scale(basis[i], c[i]));
    return f;
}

}  // namespace detail

/// Iso test with witness. Exhaustive over the Hom space while p^dim is
/// within the cap, seeded random after that; throws UndecidedError rather
/// than returning a silent false.
inline std::optional<Morph> find_isomorphism(const Rep& m, const Rep& n,
                                             std::uint32_t seed = kDefaultSeed) {
    if (m.dims != n.dims) return std::nullopt;
    if (m.is_zero()) return identity_morph(m);
    auto basis = hom_basis(m, n);
    if (basis.empty()) return std::nullopt;
    const fp_t p = m.alg->modulus();
    std::optional<Morph> found;
    bool exhausted = false;
    detail::for_each_vector(
        static_cast<int>(basis.size()), p, kIsoSearchCap,
        [&](const std::vector<fp_t>& c) {
            Morph f = detail::combine(basis, c, m, n);
            if (is_invertible_morph(f)) {
                found = f;
                return true;
            }
            return false;
        },
        &exhausted);
    if (found || exhausted) return found;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<fp_t> dist(0, p - 1);
    for (int trial = 0; trial < kRandomTrialCap; ++trial) {
        std::vector<fp_t> c(basis.size());
        for (auto& x : c) x = dist(rng);
        Morph f = detail::combine(basis, c, m, n);
        if (is_invertible_morph(f)) return f;
    }
    throw UndecidedError("isomorphism search cap exceeded");
}

inline bool is_isomorphic(const Rep& m, const Rep& n, std::uint32_t seed = kDefaultSeed) {
    return find_isomorphism(m, n, seed).has_value();
}

namespace detail {

inline std::pair<int, std::vector<int>> canonical_key(const Rep& m) {
    return {m.total_dim(), m.dims};
}

inline void sort_reps(std::vector<Rep>& reps) {
    std::stable_sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) {
        return canonical_key(a) < canonical_key(b);
    });
}

}  // namespace detail

/// Krull-Schmidt decomposition by Fitting's lemma: find a non-nilpotent,
/// non-invertible endomorphism, split along ker/im of its stabilized power,
/// recurse. With the exhaustive End scan, "no splitter" certifies End local.
inline std::vector<Rep> decompose(const Rep& m, std::uint32_t seed = kDefaultSeed) {
    if (m.is_zero()) return {};
    auto endo = hom_basis(m, m);
    const fp_t p = m.alg->modulus();
    const int n = m.total_dim();

    auto try_split = [&](const Morph& phi) -> std::optional<std::pair<Rep, Rep>> {
        Morph pw = phi;
        for (int i = 1; i < n; ++i) pw = compose(pw, phi);  // phi^n
        if (pw.is_zero() || is_invertible_morph(pw)) return std::nullopt;
        auto kit = morphism_kit(pw);
        if (kit.kernel.is_zero() || kit.image.is_zero())
            return std::nullopt;  // phi^n not yet stable in a degenerate way
        return std::make_pair(kit.kernel, kit.image);
    };

    std::optional<std::pair<Rep, Rep>> split;
    bool exhausted = false;
    detail::for_each_vector(
        static_cast<int>(endo.size()), p, kIsoSearchCap,
        [&](const std::vector<fp_t>& c) {
            split = try_split(detail::combine(endo, c, m, m));
            return split.has_value();
        },
        &exhausted);
    if (!split && !exhausted) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<fp_t> dist(0, p - 1);
        for (int trial = 0; trial < kRandomTrialCap && !split; ++trial) {
            std::vector<fp_t> c(endo.size());
            for (auto& x : c) x = dist(rng);
            split = try_split(detail::combine(endo, c, m, m));
        }
        if (!split)
            throw UndecidedError("decompose: splitting search exhausted without certificate");
    }
    if (!split) return {m};  // End(M) is local
    auto left = decompose(split->first, seed);
    auto right = decompose(split->second, seed);
    left.insert(left.end(), right.begin(), right.end());
    detail::sort_reps(left);
    return left;
}

/// dims of top(M) = M / (sum of arrow images), per vertex.
inline std::vector<int> top_dims(const Rep& m) {
    const int nv = m.alg->num_vertices();
    const fp_t p = m.alg->modulus();
    std::vector<int> top(nv);
    for (int v = 0; v < nv; ++v) {
        Mat stacked(m.dims[v], 0, p);
        for (int a = 0; a < static_cast<int>(m.alg->quiver().arrows().size()); ++a)
            if (m.alg->quiver().arrows()[a].tgt == v) stacked = stacked.hstack(m.action[a]);
        top[v] = m.dims[v] - rank(stacked);
    }
    return top;
}

/// Projective cover P_0 -> M together with the vertex list of the summands
/// of P_0 (in block order).
struct ProjCover {
    Rep p0;
    std::vector<int> summand_vertices;
    Morph cover;  // surjective
};

inline ProjCover proj_cover(const Rep& m) {
    const AlgebraPtr& alg = m.alg;
    const fp_t p = alg->modulus();
    const int nv = alg->num_vertices();
    auto top = top_dims(m);

    // Lift a basis of top(M): complement coordinates of the radical at v.
    std::vector<std::vector<std::vector<fp_t>>> lifts(nv);
    for (int v = 0; v < nv; ++v) {
        Mat stacked(m.dims[v], 0, p);
        for (int a = 0; a < static_cast<int>(alg->quiver().arrows().size()); ++a)
            if (alg->quiver().arrows()[a].tgt == v) stacked = stacked.hstack(m.action[a]);
        Rref rr = rref(stacked.transpose());
        std::vector<bool> is_pivot(m.dims[v], false);
        for (int c : rr.pivots) is_pivot[c] = true;
        for (int c = 0; c < m.dims[v]; ++c)
            if (!is_pivot[c]) {
                std::vector<fp_t> e(m.dims[v], 0);
                e[c] = 1;
                lifts[v].push_back(std::move(e));
            }
    }

    std::vector<Rep> parts;
    std::vector<int> verts;
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k < top[v]; ++k) {
            parts.push_back(proj_rep(alg, v));
            verts.push_back(v);
        }
    Rep p0 = direct_sum(alg, parts);

    Morph cover = zero_morph(p0, m);
    // Column offsets of each summand inside P0, per vertex.
    std::vector<int> col_off(alg->num_vertices(), 0);
    std::vector<int> lift_idx(nv, 0);
    for (std::size_t s = 0; s < parts.size(); ++s) {
        const int v = verts[s];
        const auto& lift = lifts[v][lift_idx[v]++];
        for (int w = 0; w < nv; ++w) {
            const auto& pw = alg->paths_between(v, w);
            for (int col = 0; col < static_cast<int>(pw.size()); ++col) {
                // Generator e_v maps to the lift; the path basis vector maps
                // to the path acting on the lift.
                Mat l(m.dims[v], 1, p);
                for (int i = 0; i < m.dims[v]; ++i) l.at(i, 0) = lift[i];
                Mat img = path_action(m, alg->paths()[pw[col]]) * l;
                for (int i = 0; i < m.dims[w]; ++i)
                    cover.blocks[w].at(i, col_off[w] + col) = img.at(i, 0);
            }
        }
        for (int w = 0; w < nv; ++w)
            col_off[w] += static_cast<int>(alg->paths_between(v, w).size());
    }
    if (!is_valid_morph(cover) || !is_surjective_morph(cover))
        throw InvariantViolation("projective cover construction failed");
    return {std::move(p0), std::move(verts), std::move(cover)};
}

/// Minimal projective presentation P_1 -> P_0 -> M -> 0.
struct ProjPresentation {
    Rep p1;
    std::vector<int> p1_vertices;
    Rep p0;
    std::vector<int> p0_vertices;
    Morph g;      // P_1 -> P_0
    Morph cover;  // P_0 -> M
};

inline ProjPresentation min_proj_presentation(const Rep& m) {
    ProjCover c0 = proj_cover(m);
    auto kit = morphism_kit(c0.cover);
    ProjCover c1 = proj_cover(kit.kernel);
    Morph g = compose(kit.kernel_incl, c1.cover);
    return {std::move(c1.p0), std::move(c1.summand_vertices), std::move(c0.p0),
            std::move(c0.summand_vertices), std::move(g), std::move(c0.cover)};
}

namespace detail {

/// nu(phi_p): I_i -> I_j for a path p: j -> i; at vertex v the block is the
/// transpose of Paths(v->j) -> Paths(v->i), q |-> q.p.
inline std::vector<Mat> nakayama_blocks(const AlgebraPtr& alg, const Path& pa) {
    const fp_t p = alg->modulus();
    const int i = pa.tgt, j = pa.src;
    std::vector<Mat> blocks;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        const auto& to_j = alg->paths_between(v, j);
        const auto& to_i = alg->paths_between(v, i);
        Mat mu(static_cast<int>(to_i.size()), static_cast<int>(to_j.size()), p);
        for (int c = 0; c < static_cast<int>(to_j.size()); ++c) {
            Path ext = alg->paths()[to_j[c]];
            ext.arrows.insert(ext.arrows.end(), pa.arrows.begin(), pa.arrows.end());
            for (int r = 0; r < static_cast<int>(to_i.size()); ++r)
                if (alg->paths()[to_i[r]].arrows == ext.arrows) {
                    mu.at(r, c) = 1;
                    break;
                }
        }
        blocks.push_back(mu.transpose());
    }
    return blocks;
}

}  // namespace detail

/// Auslander-Reiten translate: tau(M) = ker(nu P_1 -> nu P_0) for a minimal
/// projective presentation, with nu read off from the path-basis duality.
inline Rep tau(const Rep& m) {
    if (m.is_zero()) return zero_rep(m.alg);
    const AlgebraPtr& alg = m.alg;
    const fp_t p = alg->modulus();
    const int nv = alg->num_vertices();
    ProjPresentation pres = min_proj_presentation(m);
    if (pres.p1.is_zero()) return zero_rep(alg);  // projective module

    std::vector<Rep> i1parts, i0parts;
    for (int v : pres.p1_vertices) i1parts.push_back(inj_rep(alg, v));
    for (int v : pres.p0_vertices) i0parts.push_back(inj_rep(alg, v));
    Rep nu1 = direct_sum(alg, i1parts);
    Rep nu0 = direct_sum(alg, i0parts);
    Morph nug = zero_morph(nu1, nu0);

    // Offsets of the summand blocks inside P and nu(P), per vertex.
    auto offsets_proj = [&](const std::vector<int>& verts) {
        std::vector<std::vector<int>> off(verts.size(), std::vector<int>(nv, 0));
        std::vector<int> run(nv, 0);
        for (std::size_t s = 0; s < verts.size(); ++s) {
            for (int w = 0; w < nv; ++w) {
                off[s][w] = run[w];
                run[w] += static_cast<int>(alg->paths_between(verts[s], w).size());
            }
        }
        return off;
    };
    auto offsets_inj = [&](const std::vector<int>& verts) {
        std::vector<std::vector<int>> off(verts.size(), std::vector<int>(nv, 0));
        std::vector<int> run(nv, 0);
        for (std::size_t s = 0; s < verts.size(); ++s) {
            for (int w = 0; w < nv; ++w) {
                off[s][w] = run[w];
                run[w] += static_cast<int>(alg->paths_between(w, verts[s]).size());
            }
        }
        return off;
    };
    auto p1off = offsets_proj(pres.p1_vertices);
    auto p0off = offsets_proj(pres.p0_vertices);
    auto i1off = offsets_inj(pres.p1_vertices);
    auto i0off = offsets_inj(pres.p0_vertices);

    for (std::size_t a = 0; a < pres.p1_vertices.size(); ++a) {
        const int sa = pres.p1_vertices[a];
        // Generator of the a-th summand: trivial path inside (P_1)_{sa}.
        const auto& loops = alg->paths_between(sa, sa);
        int gen = -1;
        for (int i = 0; i < static_cast<int>(loops.size()); ++i)
            if (alg->paths()[loops[i]].arrows.empty()) gen = i;
        const int gen_col = p1off[a][sa] + gen;
        for (std::size_t b = 0; b < pres.p0_vertices.size(); ++b) {
            const int tb = pres.p0_vertices[b];
            const auto& pb = alg->paths_between(tb, sa);
            for (int k = 0; k < static_cast<int>(pb.size()); ++k) {
                fp_t coeff = pres.g.blocks[sa].at(p0off[b][sa] + k, gen_col);
                if (!coeff) continue;
                auto nu_blocks = detail::nakayama_blocks(alg, alg->paths()[pb[k]]);
                for (int v = 0; v < nv; ++v) {
                    const Mat& nb = nu_blocks[v];
                    for (int r = 0; r < nb.rows(); ++r)
                        for (int c = 0; c < nb.cols(); ++c)
                            nug.blocks[v].at(i0off[b][v] + r, i1off[a][v] + c) =
                                fp_add(nug.blocks[v].at(i0off[b][v] + r, i1off[a][v] + c),
                                       fp_mul(coeff, nb.at(r, c), p), p);
                }
            }
        }
    }
    if (!is_valid_morph(nug)) throw InvariantViolation("Nakayama image is not a morphism");
    return morphism_kit(nug).kernel;
}

/// Standard duality D: mod A -> mod A^op (transpose every arrow action).
inline Rep dual_rep(const Rep& m, const AlgebraPtr& op) {
    Rep r{op, m.dims, {}};
    for (const auto& a : m.action) r.action.push_back(a.transpose());
    return r;
}

/// tau^{-1}(M) = D tau_{A^op} D M; zero on injectives.
inline Rep tau_inverse(const Rep& m) {
    AlgebraPtr op = opposite_algebra(*m.alg);
    Rep t = tau(dual_rep(m, op));
    return dual_rep(t, m.alg);
}

/// Euler form <dim M, dim N> for the hereditary path algebra.
inline int euler_form(const Rep& m, const Rep& n) {
    int e = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v) e += m.dims[v] * n.dims[v];
    for (const auto& a : m.alg->quiver().arrows()) e -= m.dims[a.src] * n.dims[a.tgt];
    return e;
}

/// dim Ext^1(M, N) via Hom applied to the projective presentation, with the
/// Euler-form identity as a hereditary cross-check.
inline int ext1_dim(const Rep& m, const Rep& n) {
    if (m.alg.get() != n.alg.get()) throw std::invalid_argument("ext1: algebra mismatch");
    if (m.is_zero() || n.is_zero()) return 0;
    ProjPresentation pres = min_proj_presentation(m);
    int d = hom_dim(pres.p1, n) - hom_dim(pres.p0, n) + hom_dim(m, n);
    int viaEuler = hom_dim(m, n) - euler_form(m, n);
    if (d != viaEuler)
        throw InvariantViolation("Ext^1 presentation/Euler cross-check failed");
    return d;
}

/// All middle terms of extensions of M by N (i.e. 0 -> N -> E -> M -> 0),
/// deduplicated up to isomorphism; includes the split extension.
inline std::vector<Rep> ext1_middle_terms(const Rep& m, const Rep& n) {
    const AlgebraPtr& alg = m.alg;
    const fp_t p = alg->modulus();
    const int nv = alg->num_vertices();
    const auto& arrows = alg->quiver().arrows();

    // Cocycles: one block Hom(M_src, N_tgt) per arrow. Coboundaries: image
    // of h |-> (N_a h_src - h_tgt M_a).
    std::vector<int> zoff(arrows.size() + 1, 0);
    for (std::size_t a = 0; a < arrows.size(); ++a)
        zoff[a + 1] = zoff[a] + n.dims[arrows[a].tgt] * m.dims[arrows[a].src];
    const int zdim = zoff[arrows.size()];
    std::vector<int> hoff(nv + 1, 0);
    for (int v = 0; v < nv; ++v) hoff[v + 1] = hoff[v] + n.dims[v] * m.dims[v];

    Mat delta(zdim, hoff[nv], p);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j) {
                const int row = zoff[a] + i * m.dims[s] + j;
                for (int k = 0; k < n.dims[s]; ++k)
                    delta.at(row, hoff[s] + k * m.dims[s] + j) = fp_add(
                        delta.at(row, hoff[s] + k * m.dims[s] + j), n.action[a].at(i, k), p);
                for (int k = 0; k < m.dims[t]; ++k)
                    delta.at(row, hoff[t] + i * m.dims[t] + k) =
                        fp_sub(delta.at(row, hoff[t] + i * m.dims[t] + k),
                               m.action[a].at(k, j), p);
            }
    }
    // Complement of the coboundary space inside the cocycle space.
    Mat bspace = row_space_canonical(delta.transpose());
    Rref rr = rref(bspace);
    std::vector<bool> is_pivot(zdim, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < zdim; ++c)
        if (!is_pivot[c]) comp.push_back(c);
    const int extd = static_cast<int>(comp.size());
    if (extd != ext1_dim(m, n))
        throw InvariantViolation("cocycle Ext dimension disagrees with presentation Ext");

    std::uint64_t classes = 1;
    for (int i = 0; i < extd; ++i) {
        classes *= p;
        if (classes > kExtEnumCap)
            throw UndecidedError("ext1_middle_terms: enumeration cap exceeded");
    }

    std::vector<Rep> out;
    bool exhausted = false;
    detail::for_each_vector(
        extd, p, kExtEnumCap,
        [&](const std::vector<fp_t>& c) {
            Rep e{alg, {}, {}};
            e.dims.resize(nv);
            for (int v = 0; v < nv; ++v) e.dims[v] = n.dims[v] + m.dims[v];
            for (std::size_t a = 0; a < arrows.size(); ++a) {
                const int s = arrows[a].src, t = arrows[a].tgt;
                Mat blk(e.dims[t], e.dims[s], p);
                for (int i = 0; i < n.dims[t]; ++i)
                    for (int j = 0; j < n.dims[s]; ++j) blk.at(i, j) = n.action[a].at(i, j);
                for (int i = 0; i < m.dims[t]; ++i)
                    for (int j = 0; j < m.dims[s]; ++j)
                        blk.at(n.dims[t] + i, n.dims[s] + j) = m.action[a].at(i, j);
                for (int i = 0; i < n.dims[t]; ++i)
                    for (int j = 0; j < m.dims[s]; ++j) {
                        fp_t val = 0;
                        for (int k = 0; k < extd; ++k) {
                            // Component of the k-th complement vector at
                            // cocycle coordinate (a, i, j).
                            const int zc = zoff[a] + i * m.dims[s] + j;
                            if (comp[k] == zc) val = fp_add(val, c[k], p);
                        }
                        blk.at(i, n.dims[s] + j) = val;
                    }
                e.action.push_back(std::move(blk));
            }
            bool dup = false;
            for (const auto& prev : out)
                if (is_isomorphic(prev, e)) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(std::move(e));
            return false;
        },
        &exhausted);
    detail::sort_reps(out);
    return out;
}

/// N in Fac(G): the evaluation map G^{dim Hom(G,N)} -> N is surjective.
inline bool gen_membership(const Rep& n, const Rep& g) {
    if (n.is_zero()) return true;
    auto basis = hom_basis(g, n);
    const fp_t p = n.alg->modulus();
    for (std::size_t v = 0; v < n.dims.size(); ++v) {
        if (n.dims[v] == 0) continue;
        Mat stacked(n.dims[v], 0, p);
        for (const auto& h : basis) stacked = stacked.hstack(h.blocks[v]);
        if (rank(stacked) != n.dims[v]) return false;
    }
    return true;
}

/// End(M) with its Hom basis and the flattened coordinate matrix, so
/// callers can express specific endomorphisms (e.g. idempotents) in the
/// abstract algebra's coordinates.
struct EndData {
    std::vector<Morph> basis;
    Mat bmat;  // k x flat, row i = flattened basis[i]
    int flat;
};

inline std::vector<fp_t> flatten_morph(const Morph& f) {
    std::vector<fp_t> v;
    for (const auto& blk : f.blocks)
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) v.push_back(blk.at(i, j));
    return v;
}

inline EndData end_data(const Rep& m) {
    EndData d{hom_basis(m, m), Mat(0, 0, m.alg->modulus()), 0};
    const int k = static_cast<int>(d.basis.size());
    const fp_t p = m.alg->modulus();
    d.flat = m.is_zero() ? 0 : static_cast<int>(flatten_morph(zero_morph(m, m)).size());
    Mat bmat(k, std::max(d.flat, 1), p);
    for (int i = 0; i < k; ++i) {
        auto v = flatten_morph(d.basis[i]);
        for (int j = 0; j < d.flat; ++j) bmat.at(i, j) = v[j];
    }
    d.bmat = std::move(bmat);
    return d;
}

inline std::vector<fp_t> end_coords(const EndData& d, const Morph& f) {
    const fp_t p = d.bmat.modulus();
    auto v = flatten_morph(f);
    Mat b(std::max(d.flat, 1), 1, p);
    for (int j = 0; j < d.flat; ++j) b.at(j, 0) = v[j];
    auto sol = solve(d.bmat.transpose(), b);
    if (!sol) throw InvariantViolation("endomorphism outside its own Hom space");
    std::vector<fp_t> out(d.basis.size());
    for (std::size_t j = 0; j < d.basis.size(); ++j) out[j] = sol->at(static_cast<int>(j), 0);
    return out;
}

inline FinDimAlgebra end_algebra_from(const Rep& m, const EndData& d) {
    const int k = static_cast<int>(d.basis.size());
    const fp_t p = m.alg->modulus();
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("f" + std::to_string(i));
    std::vector<std::vector<std::vector<fp_t>>> sc(
        k, std::vector<std::vector<fp_t>>(k, std::vector<fp_t>(k, 0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sc[i][j] = end_coords(d, compose(d.basis[j], d.basis[i]));
    // Convention: product x*y acts as "x then y"; the radical and the
    // two-sided ideal quotients used downstream are convention-independent.
    std::vector<fp_t> unit = k ? end_coords(d, identity_morph(m)) : std::vector<fp_t>{};
    return FinDimAlgebra(std::move(labels), std::move(sc), std::move(unit), p);
}

/// End(M) as an abstract algebra (basis = hom_basis(M, M)).
inline FinDimAlgebra end_algebra(const Rep& m) { return end_algebra_from(m, end_data(m)); }

/// Minimal left approximation of W into the additive closure of the listed
/// target modules.
struct LeftApprox {
    Morph f;                          // W -> T_W
    std::vector<int> target_indices;  // summands of T_W, indices into targets
};

namespace detail {

inline std::optional<std::vector<fp_t>> factor_through(const Morph& f, const Morph& h,
                                                       const std::vector<Morph>& psis) {
    // Solve sum c_j (psi_j . f) = h.
    const fp_t p = f.source.alg->modulus();
    const int nv = f.source.alg->num_vertices();
    int flat = 0;
    for (int v = 0; v < nv; ++v) flat += h.blocks[v].rows() * h.blocks[v].cols();
    Mat sys(flat, static_cast<int>(psis.size()), p);
    Mat rhs(flat, 1, p);
    int row = 0;
    std::vector<Morph> comps;
    for (const auto& psi : psis) comps.push_back(compose(psi, f));
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < h.blocks[v].rows(); ++i)
            for (int j = 0; j < h.blocks[v].cols(); ++j) {
                for (std::size_t k = 0; k < psis.size(); ++k)
                    sys.at(row, static_cast<int>(k)) = comps[k].blocks[v].at(i, j);
                rhs.at(row, 0) = h.blocks[v].at(i, j);
                ++row;
            }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    std::vector<fp_t> out(psis.size());
    for (std::size_t k = 0; k < psis.size(); ++k) out[k] = sol->at(static_cast<int>(k), 0);
    return out;
}

inline bool is_left_approximation(const Morph& f, const std::vector<Rep>& targets) {
    for (const auto& t : targets) {
        auto psis = hom_basis(f.target, t);
        for (const auto& h : hom_basis(f.source, t))
            if (!factor_through(f, h, psis)) return false;
    }
    return true;
}

}  // namespace detail

/// Minimal left approximation of W into add(targets): universal map,
/// greedy summand dropping, then the radical minimality certificate
/// ({psi : psi f = 0} inside rad End(T_W)).
inline LeftApprox minimal_left_approximation(const Rep& w, const std::vector<Rep>& targets) {
    const AlgebraPtr& alg = w.alg;

    // Universal map: one block per Hom-basis element into each target.
    std::vector<int> idx;        // target index per summand
    std::vector<Morph> columns;  // the corresponding maps W -> target
    for (int t = 0; t < static_cast<int>(targets.size()); ++t)
        for (const auto& h : hom_basis(w, targets[t])) {
            idx.push_back(t);
            columns.push_back(h);
        }

    auto assemble = [&](const std::vector<int>& keep) {
        std::vector<Rep> parts;
        for (int s : keep) parts.push_back(targets[idx[s]]);
        Rep tw = direct_sum(alg, parts);
        Morph f = zero_morph(w, tw);
        for (std::size_t v = 0; v < w.dims.size(); ++v) {
            int ro = 0;
            for (int s : keep) {
                const Mat& blk = columns[s].blocks[v];
                for (int i = 0; i < blk.rows(); ++i)
                    for (int j = 0; j < blk.cols(); ++j) f.blocks[v].at(ro + i, j) = blk.at(i, j);
                ro += blk.rows();
            }
        }
        return f;
    };

    std::vector<int> keep(columns.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
    Morph f = assemble(keep);
    if (!detail::is_left_approximation(f, targets))
        throw InvariantViolation("universal map is not a left approximation");

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < keep.size(); ++s) {
            std::vector<int> trial = keep;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(s));
            Morph g = assemble(trial);
            if (detail::is_left_approximation(g, targets)) {
                keep = std::move(trial);
                f = std::move(g);
                changed = true;
                break;
            }
        }
    }

    // Minimality certificate: every endomorphism killing f is radical.
    if (!f.target.is_zero()) {
        auto psis = hom_basis(f.target, f.target);
        const fp_t p = alg->modulus();
        const int k = static_cast<int>(psis.size());
        int flat = 0;
        for (std::size_t v = 0; v < w.dims.size(); ++v)
            flat += f.target.dims[v] * w.dims[v];
        Mat sys(flat, k, p);
        for (int j = 0; j < k; ++j) {
            Morph comp = compose(psis[j], f);
            int row = 0;
            for (std::size_t v = 0; v < w.dims.size(); ++v)
                for (int i = 0; i < comp.blocks[v].rows(); ++i)
                    for (int c = 0; c < comp.blocks[v].cols(); ++c)
                        sys.at(row++, j) = comp.blocks[v].at(i, c);
        }
        auto kit = rref_kit(sys);
        if (!kit.kernel_basis.empty()) {
            Mat rad = end_algebra(f.target).radical();
            for (const auto& v : kit.kernel_basis) {
                Mat row(1, k, p);
                for (int j = 0; j < k; ++j) row.at(0, j) = v.at(j, 0);
                if (!row_space_contains(rad, row))
                    throw InvariantViolation(
                        "left approximation stabilized without the minimality certificate");
            }
        }
    }

    std::vector<int> tidx;
    for (int s : keep) tidx.push_back(idx[s]);
    return {std::move(f), std::move(tidx)};
}

}  // namespace sttglue
