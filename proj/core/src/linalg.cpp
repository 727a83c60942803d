#include "hcm/linalg.hpp"

#include <utility>

namespace hcm {

RrefResult rref(const Matrix& a) {
    Matrix m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t hit = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                hit = i;
                break;
            }
        }
        if (hit == rows) continue;
        if (hit != pr)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pr, j), m(hit, j));
        const Rational inv_pivot = Rational(1) / m(pr, c);
        for (std::size_t j = c; j < cols; ++j) m(pr, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(pr, j);
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    const std::size_t rk = pivot_cols.size();
    return RrefResult{std::move(m), std::move(pivot_cols), rk};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
    const RrefResult r = rref(a);
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    basis.reserve(cols - r.rank);
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (std::size_t row = 0; row < r.rank; ++row)
            v[r.pivot_cols[row]] = -r.reduced(row, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hcm
