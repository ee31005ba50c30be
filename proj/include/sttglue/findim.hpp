// Abstract finite-dimensional algebras given by structure constants over
// F_p, with radical, simple count, and idempotent-ideal quotients. Used for
// End-algebra comparisons; desk scale only.
#pragma once

#include <string>
#include <vector>

#include "sttglue/errors.hpp"
#include "sttglue/mat.hpp"
#include "sttglue/quiver.hpp"

namespace sttglue {

struct AlgebraInvariants {
    int dim;
    int radical_dim;
    int num_simples;

    bool operator==(const AlgebraInvariants&) const = default;
};

/// Associative unital algebra over F_p with a fixed basis. Associativity and
/// the unit laws are checked on the basis at construction.
class FinDimAlgebra {
public:
    /// sc[i][j] = coefficient vector of basis_i * basis_j.
    FinDimAlgebra(std::vector<std::string> basis_labels,
                  std::vector<std::vector<std::vector<fp_t>>> sc, std::vector<fp_t> unit,
                  fp_t p)
        : labels_(std::move(basis_labels)), sc_(std::move(sc)), unit_(std::move(unit)), p_(p) {
        d_ = static_cast<int>(labels_.size());
        if (static_cast<int>(sc_.size()) != d_ || static_cast<int>(unit_.size()) != d_)
            throw std::invalid_argument("structure constant shape mismatch");
        for (auto& row : sc_) {
            if (static_cast<int>(row.size()) != d_)
                throw std::invalid_argument("structure constant shape mismatch");
            for (auto& v : row)
                if (static_cast<int>(v.size()) != d_)
                    throw std::invalid_argument("structure constant shape mismatch");
        }
        check_laws();
    }

    int dim() const { return d_; }
    fp_t modulus() const { return p_; }
    const std::vector<fp_t>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<fp_t> mul(const std::vector<fp_t>& x, const std::vector<fp_t>& y) const {
        std::vector<fp_t> r(d_, 0);
        for (int i = 0; i < d_; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < d_; ++j) {
                if (!y[j]) continue;
                fp_t c = fp_mul(x[i], y[j], p_);
                for (int k = 0; k < d_; ++k)
                    r[k] = fp_add(r[k], fp_mul(c, sc_[i][j][k], p_), p_);
            }
        }
        return r;
    }

    /// Matrix of left multiplication by x on the regular representation.
    Mat left_mult(const std::vector<fp_t>& x) const {
        Mat m(d_, d_, p_);
        for (int j = 0; j < d_; ++j) {
            std::vector<fp_t> ej(d_, 0);
            ej[j] = 1;
            auto col = mul(x, ej);
            for (int i = 0; i < d_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    /// Basis of the Jacobson radical as rows of a matrix in rref. Computed
    /// by the iterated characteristic-coefficient forms over F_p (the small
    /// characteristic replacement for the trace form: the coefficient of
    /// lambda^(d-q) in charpoly(L_{xy}) for q = 1, p, p^2, ...), then
    /// certified: the result must be a nilpotent two-sided ideal, which pins
    /// it to the radical exactly (the iteration never undershoots).
    Mat radical() const {
        Mat basis = Mat::identity(d_, p_);  // rows span the current candidate
        for (std::uint64_t q = 1; static_cast<int>(q) <= d_ && basis.rows() > 0; q *= p_) {
            const int k = basis.rows();
            // Constraint matrix: rows indexed by y in the candidate basis,
            // columns by x-coordinates; entry = coefficient of lambda^(d-q)
            // in charpoly(L_x L_y). This form is F_p-linear in x on the
            // current candidate.
            Mat cons(k, k, p_);
            std::vector<Mat> lmul(k, Mat(0, 0, p_));
            for (int i = 0; i < k; ++i) lmul[i] = left_mult(row_vec(basis, i));
            for (int jy = 0; jy < k; ++jy)
                for (int jx = 0; jx < k; ++jx) {
                    auto cp = char_poly(lmul[jx] * lmul[jy]);
                    cons.at(jy, jx) = cp[d_ - static_cast<int>(q)];
                }
            auto kit = rref_kit(cons);
            Mat next(static_cast<int>(kit.kernel_basis.size()), d_, p_);
            for (int r = 0; r < next.rows(); ++r)
                for (int c = 0; c < k; ++c) {
                    fp_t coeff = kit.kernel_basis[r].at(c, 0);
                    if (!coeff) continue;
                    for (int t = 0; t < d_; ++t)
                        next.at(r, t) =
                            fp_add(next.at(r, t), fp_mul(coeff, basis.at(c, t), p_), p_);
                }
            basis = row_space_canonical(next);
        }
        certify_radical(basis);
        return basis;
    }

    AlgebraInvariants invariants() const {
        Mat rad = radical();
        FinDimAlgebra q = quotient_by_subspace(rad);
        return {d_, rad.rows(), q.count_simples_semisimple()};
    }

    /// Quotient by the two-sided ideal generated by the idempotent e.
    FinDimAlgebra quotient_by_idempotent_ideal(const std::vector<fp_t>& e) const {
        if (mul(e, e) != e) throw std::invalid_argument("not an idempotent");
        // FeF is spanned by b_i e b_j over all basis pairs.
        Mat span(d_ * d_, d_, p_);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                std::vector<fp_t> bi(d_, 0), bj(d_, 0);
                bi[i] = 1;
                bj[j] = 1;
                auto v = mul(mul(bi, e), bj);
                for (int t = 0; t < d_; ++t) span.at(i * d_ + j, t) = v[t];
            }
        return quotient_by_subspace(row_space_canonical(span));
    }

    /// Number of simple modules of a *semisimple* algebra over F_p: the
    /// dimension of the Frobenius-fixed subspace of the center (Berlekamp).
    int count_simples_semisimple() const {
        // Center: x with x b_j = b_j x for every basis element.
        Mat cons(d_ * d_, d_, p_);
        for (int j = 0; j < d_; ++j) {
            std::vector<fp_t> bj(d_, 0);
            bj[j] = 1;
            Mat lj = left_mult(bj);
            Mat rj = right_mult(bj);
            Mat diff = lj - rj;
            for (int r = 0; r < d_; ++r)
                for (int c = 0; c < d_; ++c) cons.at(j * d_ + r, c) = diff.at(r, c);
        }
        auto kit = rref_kit(cons);
        const int zdim = static_cast<int>(kit.kernel_basis.size());
        std::vector<std::vector<fp_t>> zbasis;
        for (const auto& v : kit.kernel_basis) {
            std::vector<fp_t> x(d_);
            for (int t = 0; t < d_; ++t) x[t] = v.at(t, 0);
            zbasis.push_back(std::move(x));
        }
        // Frobenius minus identity on the center, in center coordinates.
        Mat zmat(zdim, d_, p_);
        for (int i = 0; i < zdim; ++i)
            for (int t = 0; t < d_; ++t) zmat.at(i, t) = zbasis[i][t];
        Mat fr(zdim, zdim, p_);
        for (int i = 0; i < zdim; ++i) {
            auto xp = alg_pow(zbasis[i], p_);
            auto coords = coords_in_rows(zmat, xp);
            for (int j = 0; j < zdim; ++j)
                fr.at(j, i) = fp_sub(coords[j], j == i ? 1 : 0, p_);
        }
        return static_cast<int>(rref_kit(fr).kernel_basis.size());
    }

    /// Quotient by a two-sided ideal given as an rref row basis.
    FinDimAlgebra quotient_by_subspace(const Mat& ideal) const {
        Rref r = rref(ideal);
        std::vector<bool> is_pivot(d_, false);
        for (int c : r.pivots) is_pivot[c] = true;
        std::vector<int> comp;  // complement coordinates
        for (int c = 0; c < d_; ++c)
            if (!is_pivot[c]) comp.push_back(c);
        const int qd = static_cast<int>(comp.size());

        // reduce(x): subtract the ideal part, read off complement coords.
        auto reduce = [&](std::vector<fp_t> x) {
            for (int i = 0; i < static_cast<int>(r.pivots.size()); ++i) {
                fp_t c = x[r.pivots[i]];
                if (!c) continue;
                for (int t = 0; t < d_; ++t)
                    x[t] = fp_sub(x[t], fp_mul(c, r.m.at(i, t), p_), p_);
            }
            std::vector<fp_t> out(qd);
            for (int i = 0; i < qd; ++i) out[i] = x[comp[i]];
            return out;
        };

        std::vector<std::string> qlabels;
        for (int i = 0; i < qd; ++i) qlabels.push_back(labels_[comp[i]] + "~");
        std::vector<std::vector<std::vector<fp_t>>> qsc(
            qd, std::vector<std::vector<fp_t>>(qd, std::vector<fp_t>(qd, 0)));
        for (int i = 0; i < qd; ++i)
            for (int j = 0; j < qd; ++j) {
                std::vector<fp_t> bi(d_, 0), bj(d_, 0);
                bi[comp[i]] = 1;
                bj[comp[j]] = 1;
                qsc[i][j] = reduce(mul(bi, bj));
            }
        return FinDimAlgebra(std::move(qlabels), std::move(qsc), reduce(unit_), p_);
    }

private:
    friend FinDimAlgebra path_algebra_as_findim(const PathAlgebra& a);

    std::vector<fp_t> row_vec(const Mat& m, int r) const {
        std::vector<fp_t> v(m.cols());
        for (int c = 0; c < m.cols(); ++c) v[c] = m.at(r, c);
        return v;
    }

    static Mat mat_pow(Mat m, std::uint64_t e) {
        Mat r = Mat::identity(m.rows(), m.modulus());
        while (e) {
            if (e & 1) r = r * m;
            m = m * m;
            e >>= 1;
        }
        return r;
    }

    std::vector<fp_t> alg_pow(std::vector<fp_t> x, std::uint64_t e) const {
        std::vector<fp_t> r = unit_;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    /// Coordinates of v in the row basis of m (rows independent; v must lie
    /// in the row space).
    std::vector<fp_t> coords_in_rows(const Mat& m, const std::vector<fp_t>& v) const {
        Mat b(static_cast<int>(v.size()), 1, p_);
        for (int i = 0; i < static_cast<int>(v.size()); ++i) b.at(i, 0) = v[i];
        auto sol = solve(m.transpose(), b);
        if (!sol) throw InvariantViolation("vector not in subspace");
        std::vector<fp_t> out(m.rows());
        for (int i = 0; i < m.rows(); ++i) out[i] = sol->at(i, 0);
        return out;
    }

    Mat right_mult(const std::vector<fp_t>& x) const {
        Mat m(d_, d_, p_);
        for (int j = 0; j < d_; ++j) {
            std::vector<fp_t> ej(d_, 0);
            ej[j] = 1;
            auto col = mul(ej, x);
            for (int i = 0; i < d_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    void check_laws() const {
        for (int i = 0; i < d_; ++i) {
            std::vector<fp_t> bi(d_, 0);
            bi[i] = 1;
            if (mul(unit_, bi) != bi || mul(bi, unit_) != bi)
                throw std::invalid_argument("unit laws fail on basis element " + labels_[i]);
        }
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                for (int k = 0; k < d_; ++k) {
                    std::vector<fp_t> bi(d_, 0), bj(d_, 0), bk(d_, 0);
                    bi[i] = 1;
                    bj[j] = 1;
                    bk[k] = 1;
                    if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk)))
                        throw std::invalid_argument("multiplication table is not associative");
                }
    }

    void certify_radical(const Mat& rad) const {
        // Two-sided ideal check.
        Mat full = rad;
        for (int i = 0; i < d_; ++i) {
            std::vector<fp_t> bi(d_, 0);
            bi[i] = 1;
            for (int r = 0; r < rad.rows(); ++r) {
                auto x = row_vec(rad, r);
                for (auto& prod : {mul(bi, x), mul(x, bi)}) {
                    Mat row(1, d_, p_);
                    for (int t = 0; t < d_; ++t) row.at(0, t) = prod[t];
                    if (!row_space_contains(rad, row))
                        throw InvariantViolation("radical candidate is not an ideal");
                }
            }
        }
        // Nilpotency: iterate subspace products until stable or zero.
        Mat power = rad;
        for (int step = 0; step <= d_ && power.rows() > 0; ++step) {
            Mat next(power.rows() * rad.rows(), d_, p_);
            for (int i = 0; i < power.rows(); ++i)
                for (int j = 0; j < rad.rows(); ++j) {
                    auto prod = mul(row_vec(power, i), row_vec(rad, j));
                    for (int t = 0; t < d_; ++t) next.at(i * rad.rows() + j, t) = prod[t];
                }
            power = row_space_canonical(next);
        }
        if (power.rows() > 0)
            throw InvariantViolation("radical candidate is not nilpotent");
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<fp_t>>> sc_;
    std::vector<fp_t> unit_;
    fp_t p_;
    int d_;
};

/// A path algebra as an abstract algebra: basis = paths, product =
/// concatenation when composable.
inline FinDimAlgebra path_algebra_as_findim(const PathAlgebra& a) {
    const int d = a.dim();
    std::vector<std::string> labels;
    for (const auto& pa : a.paths()) labels.push_back(a.path_name(pa));
    std::vector<std::vector<std::vector<fp_t>>> sc(
        d, std::vector<std::vector<fp_t>>(d, std::vector<fp_t>(d, 0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Path& pi = a.paths()[i];
            const Path& pj = a.paths()[j];
            if (pi.tgt != pj.src) continue;
            Path comp{pi.src, pj.tgt, pi.arrows};
            comp.arrows.insert(comp.arrows.end(), pj.arrows.begin(), pj.arrows.end());
            for (int k = 0; k < d; ++k)
                if (a.paths()[k].src == comp.src && a.paths()[k].arrows == comp.arrows) {
                    sc[i][j][k] = 1;
                    break;
                }
        }
    std::vector<fp_t> unit(d, 0);
    for (int v = 0; v < a.num_vertices(); ++v) unit[v] = 1;  // trivial paths come first
    return FinDimAlgebra(std::move(labels), std::move(sc), std::move(unit), a.modulus());
}

}  // namespace sttglue
