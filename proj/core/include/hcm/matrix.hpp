#ifndef HCM_MATRIX_HPP
#define HCM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hcm/rational.hpp"

namespace hcm {

/// Dense rectangular matrix of Rationals, row-major, 0-based indexing.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Row-major construction from nested braces; all rows must have the
    /// same length.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// Exact matrix product. Throws DimensionMismatch unless a.cols() == b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Transpose across the anti-diagonal: the (i,j) entry of the result is the
/// (n-j-1, n-i-1) entry of the input (0-based). Throws NotSquare.
Matrix anti_transpose(const Matrix& a);

}  // namespace hcm

#endif
