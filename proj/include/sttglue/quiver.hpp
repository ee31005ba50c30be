// Acyclic quivers, their path algebras, and the triangular-matrix gluing of
// two path algebras along connecting arrows.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sttglue/errors.hpp"
#include "sttglue/mat.hpp"

namespace sttglue {

struct Arrow {
    std::string name;
    int src;
    int tgt;
};

/// Finite directed graph without oriented cycles. Vertices are indexed
/// 0..n-1 and carry unique string labels.
class Quiver {
public:
    Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
        : labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
        validate();
    }

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& label) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (labels_[i] == label) return i;
        throw ParseError("unknown vertex label: " + label);
    }

private:
    void validate() const {
        std::map<std::string, int> seen;
        for (const auto& l : labels_)
            if (++seen[l] > 1) throw ParseError("duplicate vertex label: " + l);
        std::map<std::string, int> aseen;
        for (const auto& a : arrows_) {
            if (++aseen[a.name] > 1) throw ParseError("duplicate arrow name: " + a.name);
            if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices())
                throw ParseError("arrow endpoint out of range: " + a.name);
        }
        check_acyclic();
    }

    void check_acyclic() const {
        // DFS with a gray set; report the offending cycle on failure.
        const int n = num_vertices();
        std::vector<int> state(n, 0);  // 0 white, 1 gray, 2 black
        std::vector<int> stack;
        auto dfs = [&](auto&& self, int v) -> bool {
            state[v] = 1;
            stack.push_back(v);
            for (const auto& a : arrows_) {
                if (a.src != v) continue;
                if (state[a.tgt] == 1) {
                    std::string cyc;
                    auto it = std::find(stack.begin(), stack.end(), a.tgt);
                    for (; it != stack.end(); ++it) cyc += labels_[*it] + " -> ";
                    cyc += labels_[a.tgt];
                    throw ParseError("quiver has an oriented cycle: " + cyc);
                }
                if (state[a.tgt] == 0 && !self(self, a.tgt)) return false;
            }
            stack.pop_back();
            state[v] = 2;
            return true;
        };
        for (int v = 0; v < n; ++v)
            if (state[v] == 0) dfs(dfs, v);
    }

    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
};

/// A directed path: source vertex, target vertex, and the arrow indices it
/// traverses in order (empty for the trivial path e_v).
struct Path {
    int src;
    int tgt;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
};

/// Path algebra kQ of an acyclic quiver: all paths enumerated in a
/// deterministic order (by length, then lexicographically by arrow indices),
/// with the e_i A e_j dimension table.
class PathAlgebra {
public:
    PathAlgebra(Quiver q, fp_t p) : quiver_(std::move(q)), p_(p) {
        if (!is_prime(p)) throw ParseError("field modulus must be prime");
        enumerate_paths();
    }

    const Quiver& quiver() const { return quiver_; }
    fp_t modulus() const { return p_; }
    int num_vertices() const { return quiver_.num_vertices(); }
    int dim() const { return static_cast<int>(paths_.size()); }
    const std::vector<Path>& paths() const { return paths_; }

    /// Indices into paths() of all paths from i to j.
    const std::vector<int>& paths_between(int i, int j) const {
        return table_.at(static_cast<std::size_t>(i) * num_vertices() + j);
    }

    std::string path_name(const Path& pa) const {
        if (pa.arrows.empty()) return "e_" + quiver_.label(pa.src);
        std::string s;
        for (int a : pa.arrows) {
            if (!s.empty()) s += "*";
            s += quiver_.arrows()[a].name;
        }
        return s;
    }

private:
    void enumerate_paths() {
        const int n = num_vertices();
        // Trivial paths first, in vertex order; then grow by length.
        for (int v = 0; v < n; ++v) paths_.push_back({v, v, {}});
        std::size_t level_begin = 0, level_end = paths_.size();
        while (level_begin < level_end) {
            for (std::size_t i = level_begin; i < level_end; ++i) {
                Path base = paths_[i];
                for (int a = 0; a < static_cast<int>(quiver_.arrows().size()); ++a) {
                    if (quiver_.arrows()[a].src != base.tgt) continue;
                    Path ext = base;
                    ext.arrows.push_back(a);
                    ext.tgt = quiver_.arrows()[a].tgt;
                    paths_.push_back(std::move(ext));
                }
            }
            level_begin = level_end;
            level_end = paths_.size();
        }
        table_.assign(static_cast<std::size_t>(n) * n, {});
        for (int i = 0; i < dim(); ++i)
            table_[static_cast<std::size_t>(paths_[i].src) * n + paths_[i].tgt].push_back(i);
    }

    Quiver quiver_;
    fp_t p_;
    std::vector<Path> paths_;
    std::vector<std::vector<int>> table_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

inline AlgebraPtr make_path_algebra(Quiver q, fp_t p) {
    return std::make_shared<PathAlgebra>(std::move(q), p);
}

/// The opposite algebra, with the same vertex labels and reversed arrows.
inline AlgebraPtr opposite_algebra(const PathAlgebra& a) {
    std::vector<Arrow> rev;
    for (const auto& ar : a.quiver().arrows()) rev.push_back({ar.name, ar.tgt, ar.src});
    return make_path_algebra(Quiver(a.quiver().labels(), std::move(rev)), a.modulus());
}

/// Triangular-matrix gluing A = (B 0; M C): the path algebra of the union
/// quiver of B and C plus connecting arrows from C-vertices to B-vertices.
/// The bimodule M is spanned by the paths crossing exactly one connecting
/// arrow.
class GluedAlgebra {
public:
    GluedAlgebra(AlgebraPtr b, AlgebraPtr c, std::vector<Arrow> connecting)
        : b_(std::move(b)), c_(std::move(c)) {
        if (b_->modulus() != c_->modulus())
            throw ParseError("B and C must share the field modulus");
        const int nb = b_->num_vertices();
        const int nc = c_->num_vertices();

        std::vector<std::string> labels = b_->quiver().labels();
        labels.insert(labels.end(), c_->quiver().labels().begin(), c_->quiver().labels().end());

        std::vector<Arrow> arrows = b_->quiver().arrows();
        for (const auto& a : c_->quiver().arrows())
            arrows.push_back({a.name, a.src + nb, a.tgt + nb});
        // Connecting arrows are given with src indexing C-vertices and tgt
        // indexing B-vertices.
        for (const auto& a : connecting) {
            if (a.src < 0 || a.src >= nc || a.tgt < 0 || a.tgt >= nb)
                throw ParseError("connecting arrow must run from a C-vertex to a B-vertex: " +
                                 a.name);
            connecting_.push_back(a);
            arrows.push_back({a.name, a.src + nb, a.tgt});
        }
        a_ = make_path_algebra(Quiver(std::move(labels), std::move(arrows)), b_->modulus());

        // dim M = paths from the C-part to the B-part; each crosses exactly
        // one connecting arrow because there are no B-to-C arrows.
        dim_m_ = 0;
        for (int i = nb; i < nb + nc; ++i)
            for (int j = 0; j < nb; ++j)
                dim_m_ += static_cast<int>(a_->paths_between(i, j).size());
    }

    const AlgebraPtr& B() const { return b_; }
    const AlgebraPtr& C() const { return c_; }
    const AlgebraPtr& A() const { return a_; }
    /// Connecting arrows with src in C-vertex indexing and tgt in B-vertex
    /// indexing.
    const std::vector<Arrow>& connecting() const { return connecting_; }
    int dim_m() const { return dim_m_; }

    int b_vertex_in_a(int v) const { return v; }
    int c_vertex_in_a(int v) const { return v + b_->num_vertices(); }
    bool is_b_vertex(int v_in_a) const { return v_in_a < b_->num_vertices(); }

private:
    AlgebraPtr b_, c_, a_;
    std::vector<Arrow> connecting_;
    int dim_m_ = 0;
};

}  // namespace sttglue
