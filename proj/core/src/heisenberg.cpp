#include "hcm/heisenberg.hpp"

#include <string>

namespace hcm {

namespace {

void require_n(int n) {
    if (n < 3) throw UnsupportedN("algebra size n must be at least 3, got " + std::to_string(n));
}

void require_same_n(int a, int b) {
    if (a != b)
        throw SizeMismatch("algebra sizes differ: " + std::to_string(a) + " vs " +
                           std::to_string(b));
}

void require_interior(const Matrix& m, int n) {
    if (!m.is_square() || m.rows() != static_cast<std::size_t>(n))
        throw SizeMismatch("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_interior(m)) throw NotInteriorMatrix("matrix has nonzero boundary entries");
}

}  // namespace

int basis_dim(int n) {
    require_n(n);
    return 2 * n - 3;
}

int row_basis_index(int n, int j) {
    require_n(n);
    if (j < 2 || j > n) throw IndexOutOfRange("row position j out of range");
    return j - 1;
}

int col_basis_index(int n, int i) {
    require_n(n);
    if (i < 2 || i > n - 1) throw IndexOutOfRange("column position i out of range");
    return n + i - 2;
}

int center_index(int n) {
    require_n(n);
    return n - 1;
}

std::pair<int, int> basis_position(int n, int k) {
    if (k < 1 || k > basis_dim(n)) throw IndexOutOfRange("basis index out of range");
    if (k <= n - 1) return {1, k + 1};
    return {k - n + 2, n};
}

HeisenbergElement::HeisenbergElement(int n) : n_(n) {
    require_n(n);
    row_.resize(n - 1);
    col_.resize(n - 2);
}

HeisenbergElement::HeisenbergElement(int n, std::vector<Rational> row, std::vector<Rational> col)
    : n_(n), row_(std::move(row)), col_(std::move(col)) {
    require_n(n);
    if (row_.size() != static_cast<std::size_t>(n - 1) ||
        col_.size() != static_cast<std::size_t>(n - 2))
        throw SizeMismatch("element coordinate lengths must be n-1 and n-2");
}

const Rational& HeisenbergElement::coord(int k) const {
    if (k < 1 || k > dim()) throw IndexOutOfRange("coordinate index out of range");
    return k <= n_ - 1 ? row_[k - 1] : col_[k - n_];
}

Rational& HeisenbergElement::coord(int k) {
    if (k < 1 || k > dim()) throw IndexOutOfRange("coordinate index out of range");
    return k <= n_ - 1 ? row_[k - 1] : col_[k - n_];
}

const Rational& HeisenbergElement::row_entry(int j) const {
    if (j < 2 || j > n_) throw IndexOutOfRange("row position j out of range");
    return row_[j - 2];
}

const Rational& HeisenbergElement::col_entry(int i) const {
    if (i < 2 || i > n_ - 1) throw IndexOutOfRange("column position i out of range");
    return col_[i - 2];
}

std::vector<Rational> HeisenbergElement::coords() const {
    std::vector<Rational> c;
    c.reserve(dim());
    c.insert(c.end(), row_.begin(), row_.end());
    c.insert(c.end(), col_.begin(), col_.end());
    return c;
}

HeisenbergElement HeisenbergElement::from_coords(int n, const std::vector<Rational>& coords) {
    require_n(n);
    if (coords.size() != static_cast<std::size_t>(2 * n - 3))
        throw SizeMismatch("expected 2n-3 coordinates");
    return HeisenbergElement(n, {coords.begin(), coords.begin() + (n - 1)},
                             {coords.begin() + (n - 1), coords.end()});
}

bool HeisenbergElement::is_zero() const {
    for (const auto& r : row_)
        if (!r.is_zero()) return false;
    for (const auto& c : col_)
        if (!c.is_zero()) return false;
    return true;
}

HeisenbergElement& HeisenbergElement::operator+=(const HeisenbergElement& o) {
    require_same_n(n_, o.n_);
    for (std::size_t i = 0; i < row_.size(); ++i) row_[i] += o.row_[i];
    for (std::size_t i = 0; i < col_.size(); ++i) col_[i] += o.col_[i];
    return *this;
}

HeisenbergElement& HeisenbergElement::operator-=(const HeisenbergElement& o) {
    require_same_n(n_, o.n_);
    for (std::size_t i = 0; i < row_.size(); ++i) row_[i] -= o.row_[i];
    for (std::size_t i = 0; i < col_.size(); ++i) col_[i] -= o.col_[i];
    return *this;
}

HeisenbergElement& HeisenbergElement::operator*=(const Rational& s) {
    for (auto& r : row_) r *= s;
    for (auto& c : col_) c *= s;
    return *this;
}

HeisenbergElement HeisenbergElement::operator-() const {
    HeisenbergElement r = *this;
    return r *= Rational(-1);
}

CenterElement::CenterElement(int n, Rational coefficient) : n_(n), a_(std::move(coefficient)) {
    require_n(n);
}

HeisenbergElement CenterElement::to_element() const {
    HeisenbergElement x(n_);
    x.coord(center_index(n_)) = a_;
    return x;
}

CenterElement& CenterElement::operator+=(const CenterElement& o) {
    require_same_n(n_, o.n_);
    a_ += o.a_;
    return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& o) {
    require_same_n(n_, o.n_);
    a_ -= o.a_;
    return *this;
}

HeisenbergElement basis_element(int n, int k) {
    HeisenbergElement x(n);
    x.coord(k) = 1;  // coord() range-checks k
    return x;
}

CenterElement h_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
    require_same_n(x.n(), y.n());
    const int n = x.n();
    Rational a;
    for (int j = 2; j <= n - 1; ++j) a += x.row_entry(j) * y.col_entry(j);
    return CenterElement(n, std::move(a));
}

CenterElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) {
    return h_mul(x, y) - h_mul(y, x);
}

HeisenbergElement tau(const HeisenbergElement& x) {
    const int n = x.n();
    HeisenbergElement r(n);
    for (int j = 2; j <= n - 1; ++j) r.coord(row_basis_index(n, j)) = x.col_entry(n - j + 1);
    r.coord(center_index(n)) = x.row_entry(n);
    for (int i = 2; i <= n - 1; ++i) r.coord(col_basis_index(n, i)) = x.row_entry(n - i + 1);
    return r;
}

bool is_interior(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("interior test on non-square matrix");
    const std::size_t n = m.rows();
    for (std::size_t t = 0; t < n; ++t) {
        if (!m(0, t).is_zero() || !m(n - 1, t).is_zero()) return false;
        if (!m(t, 0).is_zero() || !m(t, n - 1).is_zero()) return false;
    }
    return true;
}

bool is_hollow_skew_persymmetric(const Matrix& m) {
    if (!is_interior(m)) return false;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, n - 1 - i).is_zero()) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (m(n - 1 - j, n - 1 - i) != -m(i, j)) return false;
    }
    return true;
}

bool is_central(const HeisenbergElement& x) {
    const int c = center_index(x.n());
    for (int k = 1; k <= x.dim(); ++k)
        if (k != c && !x.coord(k).is_zero()) return false;
    return true;
}

Matrix interior_identity(int n) {
    require_n(n);
    Matrix m(n, n);
    for (int j = 2; j <= n - 1; ++j) m(j - 1, j - 1) = 1;
    return m;
}

std::vector<std::pair<int, int>> hollow_skew_free_positions(int n) {
    require_n(n);
    std::vector<std::pair<int, int>> pos;
    pos.reserve(static_cast<std::size_t>((n - 2) * (n - 3)) / 2);
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 2; j <= n - 1; ++j)
            if (i + j < n + 1) pos.emplace_back(i, j);
    return pos;
}

Matrix hollow_skew_from_free(int n, const std::vector<Rational>& values) {
    const auto pos = hollow_skew_free_positions(n);
    if (values.size() != pos.size())
        throw SizeMismatch("expected " + std::to_string(pos.size()) + " free entries");
    Matrix m(n, n);
    for (std::size_t t = 0; t < pos.size(); ++t) {
        const auto [i, j] = pos[t];
        m(i - 1, j - 1) = values[t];
        m(n - j, n - i) = -values[t];
    }
    return m;
}

HeisenbergElement anti_commutator_action(const Matrix& a, const HeisenbergElement& x) {
    const int n = x.n();
    require_interior(a, n);
    HeisenbergElement r(n);
    for (int i = 2; i <= n - 1; ++i) {
        Rational row_i, col_i;
        for (int j = 2; j <= n - 1; ++j) {
            row_i += x.row_entry(j) * a(j - 1, i - 1);  // (XA)_{1,i}
            col_i += a(i - 1, j - 1) * x.col_entry(j);  // (AX)_{i,n}
        }
        r.coord(row_basis_index(n, i)) = std::move(row_i);
        r.coord(col_basis_index(n, i)) = std::move(col_i);
    }
    return r;
}

HeisenbergElement side_mul(const HeisenbergElement& x, const Matrix& m, Side side) {
    const int n = x.n();
    require_interior(m, n);
    HeisenbergElement r(n);
    for (int i = 2; i <= n - 1; ++i) {
        Rational acc;
        if (side == Side::right) {
            for (int j = 2; j <= n - 1; ++j) acc += x.row_entry(j) * m(j - 1, i - 1);
            r.coord(row_basis_index(n, i)) = std::move(acc);
        } else {
            for (int j = 2; j <= n - 1; ++j) acc += m(i - 1, j - 1) * x.col_entry(j);
            r.coord(col_basis_index(n, i)) = std::move(acc);
        }
    }
    return r;
}

}  // namespace hcm
