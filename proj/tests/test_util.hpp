#ifndef HEXALAB_TEST_UTIL_HPP
#define HEXALAB_TEST_UTIL_HPP

#include <vector>

#include "hexalab/matrix.hpp"

namespace hexalab::testutil {

// Laplace-expansion determinant; fine for the <= 6x6 oracles used in tests.
template <class F>
typename F::Elem det_laplace(const F& f, const Matrix<F>& m) {
    const int n = m.rows;
    if (n == 1) return m.at(0, 0);
    auto acc = f.zero();
    for (int c = 0; c < n; ++c) {
        if (f.is_zero(m.at(0, c))) continue;
        Matrix<F> minor(f, n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        auto term = f.mul(m.at(0, c), det_laplace(f, minor));
        acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

// Independent rank oracle: the largest r admitting a nonvanishing r x r
// minor.  Exponential, deliberately different from the echelon path.
template <class F>
int rank_by_minors(const F& f, const Matrix<F>& m) {
    const int maxr = std::min(m.rows, m.cols);
    for (int r = maxr; r >= 1; --r) {
        std::vector<int> ri(r), ci(r);
        for (int i = 0; i < r; ++i) ri[i] = i;
        auto next_comb = [](std::vector<int>& idx, int n) {
            int k = static_cast<int>(idx.size());
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        do {
            for (int i = 0; i < r; ++i) ci[i] = i;
            do {
                Matrix<F> sub(f, r, r);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                if (!f.is_zero(det_laplace(f, sub))) return r;
            } while (next_comb(ci, m.cols));
        } while (next_comb(ri, m.rows));
    }
    return 0;
}

// Exact polynomial interpolation over a field: given values p(x_i) at
// distinct points, returns the coefficients of the unique polynomial of
// degree < n (Lagrange).
template <class F>
std::vector<typename F::Elem> interpolate(const F& f,
                                          const std::vector<typename F::Elem>& xs,
                                          const std::vector<typename F::Elem>& ys) {
    const int n = static_cast<int>(xs.size());
    std::vector<typename F::Elem> coeff(n, f.zero());
    for (int i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j), times y_i / denom
        std::vector<typename F::Elem> num{f.one()};
        auto denom = f.one();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom = f.mul(denom, f.sub(xs[i], xs[j]));
            std::vector<typename F::Elem> next(num.size() + 1, f.zero());
            for (std::size_t d = 0; d < num.size(); ++d) {
                next[d + 1] = f.add(next[d + 1], num[d]);
                next[d] = f.sub(next[d], f.mul(xs[j], num[d]));
            }
            num = std::move(next);
        }
        auto scale = f.div(ys[i], denom);
        for (std::size_t d = 0; d < num.size(); ++d)
            coeff[d] = f.add(coeff[d], f.mul(scale, num[d]));
    }
    return coeff;
}

} // namespace hexalab::testutil

#endif
