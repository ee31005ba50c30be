// Dense exact linear algebra over a prime field F_p.
//
// Everything downstream (Hom spaces, AR translates, approximations) reduces
// to rank/kernel/solve on small dense matrices, so the conventions here are
// deliberately rigid: row-major storage, Gauss-Jordan with first-nonzero
// pivoting, free variables set to zero. Identical inputs always give
// identical outputs.
#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sttglue {

using fp_t = std::uint32_t;

inline bool is_prime(fp_t n) {
    if (n < 2) return false;
    for (fp_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) { return (a + b) % p; }
inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return (a + p - b) % p; }
inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
    return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
    fp_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline fp_t fp_inv(fp_t a, fp_t p) {
    assert(a % p != 0);
    return fp_pow(a, p - 2, p);  // p prime
}

/// Dense row-major matrix over F_p. 0xN and Nx0 shapes are legal and act
/// as zero maps.
class Mat {
public:
    Mat() : rows_(0), cols_(0), p_(2) {}
    Mat(int rows, int cols, fp_t p)
        : rows_(rows), cols_(cols), p_(p),
          e_(static_cast<std::size_t>(rows) * cols, 0) {
        if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
    }

    static Mat identity(int n, fp_t p) {
        Mat m(n, n, p);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
        return m;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<int>> rows, fp_t p) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        Mat m(r, c, p);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("ragged rows");
            int j = 0;
            for (int v : row) m.at(i, j++) = static_cast<fp_t>(((v % static_cast<int>(p)) + p) % p);
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    fp_t modulus() const { return p_; }

    fp_t& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }
    fp_t at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool is_zero() const {
        for (fp_t v : e_)
            if (v) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
    }

    Mat operator*(const Mat& o) const {
        assert(p_ == o.p_);
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                fp_t a = at(i, k);
                if (!a) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = fp_add(r.at(i, j), fp_mul(a, o.at(k, j), p_), p_);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
        Mat r(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = fp_add(e_[i], o.e_[i], p_);
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
        Mat r(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = fp_sub(e_[i], o.e_[i], p_);
        return r;
    }

    Mat scaled(fp_t c) const {
        Mat r(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = fp_mul(e_[i], c, p_);
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Stack `o` below this matrix (column counts must agree).
    Mat vstack(const Mat& o) const {
        assert(cols_ == o.cols_ && p_ == o.p_);
        Mat r(rows_ + o.rows_, cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    /// Place `o` to the right of this matrix (row counts must agree).
    Mat hstack(const Mat& o) const {
        assert(rows_ == o.rows_ && p_ == o.p_);
        Mat r(rows_, cols_ + o.cols_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Mat submatrix(int r0, int c0, int nr, int nc) const {
        assert(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_);
        Mat r(nr, nc, p_);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += std::to_string(at(i, j));
                if (j + 1 < cols_) s += " ";
            }
            s += "]";
            if (i + 1 < rows_) s += "\n";
        }
        return s;
    }

private:
    int rows_, cols_;
    fp_t p_;
    std::vector<fp_t> e_;
};

/// Reduced row echelon form together with the pivot column list.
struct Rref {
    Mat m;
    std::vector<int> pivots;
};

inline Rref rref(Mat m) {
    const fp_t p = m.modulus();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        fp_t inv = fp_inv(m.at(row, col), p);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = fp_mul(m.at(row, j), inv, p);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            fp_t f = m.at(i, col);
            if (!f) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(row, j), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

/// rank + kernel basis (column vectors) + image basis (column vectors in
/// echelon form). rank + |kernel| = cols always holds.
struct RrefKit {
    int rank;
    std::vector<Mat> kernel_basis;  // cols x 1 vectors
    std::vector<Mat> image_basis;   // rows x 1 vectors
};

inline RrefKit rref_kit(const Mat& m) {
    const fp_t p = m.modulus();
    Rref r = rref(m);
    RrefKit kit;
    kit.rank = static_cast<int>(r.pivots.size());

    // Kernel: one vector per free column, pivot coordinates back-filled.
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivots) is_pivot[c] = true;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Mat v(m.cols(), 1, p);
        v.at(c, 0) = 1 % p;
        for (int i = 0; i < kit.rank; ++i)
            v.at(r.pivots[i], 0) = fp_sub(0, r.m.at(i, c), p);
        kit.kernel_basis.push_back(std::move(v));
    }

    // Image: echelon basis of the column space (rref of the transpose).
    Rref rt = rref(m.transpose());
    for (int i = 0; i < static_cast<int>(rt.pivots.size()); ++i) {
        Mat v(m.rows(), 1, p);
        for (int j = 0; j < m.rows(); ++j) v.at(j, 0) = rt.m.at(i, j);
        kit.image_basis.push_back(std::move(v));
    }
    return kit;
}

/// One solution of m x = b when consistent (free variables zero), else empty.
inline std::optional<Mat> solve(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows() || b.cols() != 1)
        throw std::invalid_argument("solve: shape mismatch");
    const fp_t p = m.modulus();
    Rref r = rref(m.hstack(b));
    // Inconsistent iff some pivot lands in the last column.
    for (int c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    Mat x(m.cols(), 1, p);
    for (int i = 0; i < static_cast<int>(r.pivots.size()); ++i)
        x.at(r.pivots[i], 0) = r.m.at(i, m.cols());
    return x;
}

inline bool is_invertible(const Mat& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Rref r = rref(m.hstack(Mat::identity(n, m.modulus())));
    if (static_cast<int>(r.pivots.size()) != n || (n > 0 && r.pivots[n - 1] != n - 1))
        return std::nullopt;
    // Pivots occupy the first n columns, so the right half is the inverse.
    for (int i = 0; i < n; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    return r.m.submatrix(0, n, n, n);
}

/// Characteristic polynomial of a square matrix, monic, as coefficients
/// c[0] + c[1] x + ... + c[n] x^n. Hessenberg reduction by similarity, then
/// the leading-minor recurrence; exact over F_p.
inline std::vector<fp_t> char_poly(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix required");
    const int n = m.rows();
    const fp_t p = m.modulus();

    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (m.at(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(j + 1, c));
            for (int r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, j + 1));
        }
        const fp_t inv = fp_inv(m.at(j + 1, j), p);
        for (int i = j + 2; i < n; ++i) {
            const fp_t f = fp_mul(m.at(i, j), inv, p);
            if (!f) continue;
            for (int c = 0; c < n; ++c)
                m.at(i, c) = fp_sub(m.at(i, c), fp_mul(f, m.at(j + 1, c), p), p);
            for (int r = 0; r < n; ++r)
                m.at(r, j + 1) = fp_add(m.at(r, j + 1), fp_mul(f, m.at(r, i), p), p);
        }
    }

    std::vector<std::vector<fp_t>> pk(n + 1);
    pk[0] = {1 % p};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - h_{k,k}) p_{k-1} - sum_i h_{i,k} (prod subdiag) p_{i-1}
        std::vector<fp_t> t(k + 1, 0);
        for (int c = 0; c < k; ++c) {
            t[c + 1] = fp_add(t[c + 1], pk[k - 1][c], p);
            t[c] = fp_sub(t[c], fp_mul(m.at(k - 1, k - 1), pk[k - 1][c], p), p);
        }
        fp_t prod = 1 % p;
        for (int i = k - 1; i >= 1; --i) {
            prod = fp_mul(prod, m.at(i, i - 1), p);
            const fp_t coeff = fp_mul(m.at(i - 1, k - 1), prod, p);
            if (!coeff) continue;
            for (int c = 0; c < i; ++c)
                t[c] = fp_sub(t[c], fp_mul(coeff, pk[i - 1][c], p), p);
        }
        pk[k] = std::move(t);
    }
    return pk[n];
}

/// Row space of `m` as an rref matrix with zero rows dropped; a canonical
/// form for subspace comparison.
inline Mat row_space_canonical(const Mat& m) {
    Rref r = rref(m);
    int rk = static_cast<int>(r.pivots.size());
    return r.m.submatrix(0, 0, rk, m.cols());
}

/// Does the row space of `sub` lie inside the row space of `sup`?
inline bool row_space_contains(const Mat& sup, const Mat& sub) {
    assert(sup.cols() == sub.cols());
    Mat canon = row_space_canonical(sup);
    return rank(canon.vstack(sub)) == canon.rows();
}

}  // namespace sttglue
