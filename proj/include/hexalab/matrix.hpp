#ifndef HEXALAB_MATRIX_HPP
#define HEXALAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "hexalab/errors.hpp"
#include "hexalab/field.hpp"

namespace hexalab {

// Dense row-major matrix over a field (or the dual-number ring).  The field
// object travels alongside as a function argument; Matrix itself is plain
// storage.  Everything here is sized for this artifact (nothing larger than
// 90x45), so no sparsity and no pivoting heuristics: the first nonzero entry
// wins, which keeps every reduction canonical.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(const F& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
};

template <class F>
bool mat_eq(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!f.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class F>
bool mat_is_zero(const F& f, const Matrix<F>& x) {
    for (const auto& e : x.a)
        if (!f.is_zero(e)) return false;
    return true;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> r(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return r;
}

template <class F>
Matrix<F> mat_add(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
    return r;
}

template <class F>
Matrix<F> mat_scale(const F& f, const typename F::Elem& c, const Matrix<F>& x) {
    Matrix<F> r = x;
    for (auto& e : r.a) e = f.mul(c, e);
    return r;
}

template <class F>
Matrix<F> transpose(const F& f, const Matrix<F>& x) {
    Matrix<F> r(f, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

template <class F>
Matrix<F> stack_rows(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows == 0) return y;
    if (y.rows == 0) return x;
    Matrix<F> r(f, x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
    return r;
}

template <class F>
Matrix<F> select_cols(const F& f, const Matrix<F>& x, const std::vector<int>& cols) {
    Matrix<F> r(f, x.rows, static_cast<int>(cols.size()));
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < r.cols; ++j) r.at(i, j) = x.at(i, cols[j]);
    return r;
}

// ---------------------------------------------------------------------------
// Reduced row echelon form.  Deterministic (first nonzero pivot), hence
// canonical: row-equivalent matrices reduce to the identical matrix.
// ---------------------------------------------------------------------------

template <class F>
struct RrefResult {
    Matrix<F> mat;
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row
};

template <class F>
RrefResult<F> rref(const F& f, Matrix<F> m) {
    RrefResult<F> res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const auto scale = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(scale, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

template <class F>
int rank_of(const F& f, const Matrix<F>& m) {
    return rref(f, m).rank;
}

// ---------------------------------------------------------------------------
// Subspace with canonical basis: the RREF of any spanning set, zero rows
// dropped.  Equal subspaces have bit-identical bases.
// ---------------------------------------------------------------------------

template <class F>
struct Subspace {
    int ambient = 0;
    Matrix<F> basis;       // dim x ambient, in RREF
    std::vector<int> pivots;

    int dim() const { return basis.rows; }

    static Subspace from_rows(const F& f, const Matrix<F>& rows) {
        auto red = rref(f, rows);
        Subspace s;
        s.ambient = rows.cols;
        s.pivots = red.pivots;
        s.basis = Matrix<F>(f, red.rank, rows.cols);
        for (int i = 0; i < red.rank; ++i)
            for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = red.mat.at(i, j);
        return s;
    }

    bool equal(const F& f, const Subspace& other) const {
        return ambient == other.ambient && mat_eq(f, basis, other.basis);
    }

    // Membership and coordinates come straight off the pivot columns; no
    // elimination needed against an RREF basis.
    std::optional<std::vector<typename F::Elem>> coordinates_of(
        const F& f, const std::vector<typename F::Elem>& v) const {
        std::vector<typename F::Elem> coeff;
        coeff.reserve(pivots.size());
        for (std::size_t t = 0; t < pivots.size(); ++t) coeff.push_back(v[pivots[t]]);
        for (int j = 0; j < ambient; ++j) {
            auto s = f.zero();
            for (int t = 0; t < basis.rows; ++t) s = f.add(s, f.mul(coeff[t], basis.at(t, j)));
            if (!f.eq(s, v[j])) return std::nullopt;
        }
        return coeff;
    }

    bool contains(const F& f, const std::vector<typename F::Elem>& v) const {
        return coordinates_of(f, v).has_value();
    }
};

template <class F>
int sum_dim(const F& f, const Subspace<F>& x, const Subspace<F>& y) {
    if (x.ambient != y.ambient) throw HexalabError("subspace ambient mismatch");
    return rank_of(f, stack_rows(f, x.basis, y.basis));
}

template <class F>
int intersection_dim(const F& f, const Subspace<F>& x, const Subspace<F>& y) {
    return x.dim() + y.dim() - sum_dim(f, x, y);
}

// Right null space with the canonical free-variable basis, re-reduced to the
// canonical subspace form.  dim = cols - rank, and m * v = 0 exactly for
// every basis vector v.
template <class F>
Subspace<F> kernel_basis(const F& f, const Matrix<F>& m) {
    auto red = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : red.pivots) is_pivot[c] = true;
    Matrix<F> vecs(f, m.cols - red.rank, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        vecs.at(row, c) = f.one();
        for (int t = 0; t < red.rank; ++t)
            vecs.at(row, red.pivots[t]) = f.neg(red.mat.at(t, c));
        ++row;
    }
    return Subspace<F>::from_rows(f, vecs);
}

// Solves A X = B; returns the canonical particular solution (free variables
// zero) or nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> aug(f, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
    }
    auto red = rref(f, aug);
    // pivots in the B block mean inconsistency
    for (int c : red.pivots)
        if (c >= a.cols) return std::nullopt;
    Matrix<F> x(f, a.cols, b.cols);
    for (std::size_t t = 0; t < red.pivots.size(); ++t)
        for (int j = 0; j < b.cols; ++j) x.at(red.pivots[t], j) = red.mat.at(static_cast<int>(t), a.cols + j);
    return x;
}

// ---------------------------------------------------------------------------
// Kernel over dual numbers.  Pivots only on entries with invertible constant
// part, so the pivot pattern equals the pivot pattern of the constant-part
// matrix and the returned vectors' constant parts are exactly the canonical
// free-variable kernel basis of m0.  A surviving nonzero (necessarily
// nilpotent) row means the generic lift does not exist: DegenerateLift.
// ---------------------------------------------------------------------------

template <class F>
std::vector<std::vector<DualNum<F>>> dual_kernel_basis(const DualField<F>& df,
                                                       Matrix<DualField<F>> m) {
    using D = DualField<F>;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (df.is_unit(m.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const auto scale = df.inv(m.at(r, c));
        // columns left of c can still hold nilpotent entries (they had no
        // invertible pivot), so row operations must cover every column
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = df.mul(scale, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || df.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = df.sub(m.at(i, j), df.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!df.is_zero(m.at(i, j)))
                throw DegenerateLiftError("nilpotent residue row in dual elimination");

    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename D::Elem>> out;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename D::Elem> v(m.cols, df.zero());
        v[c] = df.one();
        for (std::size_t t = 0; t < pivots.size(); ++t)
            v[pivots[t]] = df.neg(m.at(static_cast<int>(t), c));
        out.push_back(std::move(v));
    }
    return out;
}

// Row vector * matrix helpers used all over the verification code.

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Matrix<F>& m,
                                      const std::vector<typename F::Elem>& v) {
    std::vector<typename F::Elem> r(m.rows, f.zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
    return r;
}

template <class F>
bool vec_is_zero(const F& f, const std::vector<typename F::Elem>& v) {
    for (const auto& e : v)
        if (!f.is_zero(e)) return false;
    return true;
}

} // namespace hexalab

#endif
