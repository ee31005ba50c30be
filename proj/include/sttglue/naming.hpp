// Human-readable module names: stacked notation with slashes ("3/1/2" is the
// uniserial module with top 3 and socle 2), read off the radical filtration.
#pragma once

#include <string>
#include <vector>

#include "sttglue/rep.hpp"

namespace sttglue {

namespace detail {

/// rad M as a representation (column span of all incoming arrow actions).
inline Rep radical_subrep(const Rep& m) {
    const AlgebraPtr& alg = m.alg;
    const fp_t p = alg->modulus();
    const int nv = alg->num_vertices();
    const auto& arrows = alg->quiver().arrows();
    std::vector<Mat> incl(nv, Mat(0, 0, p));
    Rep r = zero_rep(alg);
    for (int v = 0; v < nv; ++v) {
        Mat stacked(m.dims[v], 0, p);
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
            if (arrows[a].tgt == v) stacked = stacked.hstack(m.action[a]);
        auto kit = rref_kit(stacked);
        Mat ic(m.dims[v], static_cast<int>(kit.image_basis.size()), p);
        for (int j = 0; j < ic.cols(); ++j)
            for (int i = 0; i < ic.rows(); ++i) ic.at(i, j) = kit.image_basis[j].at(i, 0);
        incl[v] = std::move(ic);
        r.dims[v] = incl[v].cols();
    }
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        Mat rhs = m.action[a] * incl[s];
        Mat x(incl[t].cols(), rhs.cols(), p);
        for (int j = 0; j < rhs.cols(); ++j) {
            Mat b(rhs.rows(), 1, p);
            for (int i = 0; i < rhs.rows(); ++i) b.at(i, 0) = rhs.at(i, j);
            auto sol = solve(incl[t], b);
            if (!sol) throw InvariantViolation("radical is not arrow-stable");
            for (int i = 0; i < x.rows(); ++i) x.at(i, j) = sol->at(i, 0);
        }
        r.action[a] = std::move(x);
    }
    return r;
}

}  // namespace detail

/// Name one indecomposable (or any module, layer-wise) in stacked notation.
inline std::string name_indec(const Rep& m) {
    if (m.is_zero()) return "0";
    const auto& labels = m.alg->quiver().labels();
    std::vector<std::string> layers;
    Rep cur = m;
    while (!cur.is_zero()) {
        auto top = top_dims(cur);
        std::string layer;
        for (std::size_t v = 0; v < top.size(); ++v)
            for (int k = 0; k < top[v]; ++k) {
                if (!layer.empty()) layer += "+";
                layer += labels[v];
            }
        layers.push_back(layer);
        cur = detail::radical_subrep(cur);
    }
    std::string out;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (i) out += "/";
        out += layers[i];
    }
    return out;
}

/// Name a module by its indecomposable summands, sorted for determinism.
inline std::string name_module(const Rep& m, std::uint32_t seed = kDefaultSeed) {
    if (m.is_zero()) return "0";
    auto parts = decompose(m, seed);
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(name_indec(p));
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += "⊕";
        out += names[i];
    }
    return out;
}

inline std::string name_summand_list(std::vector<std::string> names) {
    if (names.empty()) return "0";
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += "⊕";
        out += names[i];
    }
    return out;
}

}  // namespace sttglue
