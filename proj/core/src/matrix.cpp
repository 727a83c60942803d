#include "hcm/matrix.hpp"

#include <string>

namespace hcm {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged initializer rows");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.cols()) + " columns vs " +
                                std::to_string(b.rows()) + " rows");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

Matrix anti_transpose(const Matrix& a) {
    if (!a.is_square()) throw NotSquare("anti_transpose of non-square matrix");
    const std::size_t n = a.rows();
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(n - 1 - j, n - 1 - i);
    return r;
}

}  // namespace hcm
