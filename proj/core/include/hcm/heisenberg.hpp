#ifndef HCM_HEISENBERG_HPP
#define HCM_HEISENBERG_HPP

#include <utility>
#include <vector>

#include "hcm/matrix.hpp"
#include "hcm/rational.hpp"

namespace hcm {

/// The algebra of n x n matrices supported on the first row (columns 2..n)
/// and last column (rows 1..n-1). Its dimension is 2n-3 and every triple
/// product of elements vanishes, so products collapse into the span of
/// e_{1,n}. Elements are stored compactly; dense n x n forms appear only as
/// oracles in the tests.
///
/// Basis convention, fixed once for every serialized artifact: for
/// k = 1..2n-3, E_k = e_{1,k+1} when k <= n-1 and E_k = e_{k-n+2,n} when
/// k >= n. The coordinate of e_{1,n} is k = n-1.

/// Dimension of the element space, 2n-3. Throws UnsupportedN when n < 3.
int basis_dim(int n);

/// Basis index of e_{1,j} for 2 <= j <= n.
int row_basis_index(int n, int j);

/// Basis index of e_{i,n} for 2 <= i <= n-1.
int col_basis_index(int n, int i);

/// Basis index of the central unit e_{1,n}, i.e. n-1.
int center_index(int n);

/// 1-based matrix position (i, j) of the basis unit E_k.
std::pair<int, int> basis_position(int n, int k);

class HeisenbergElement {
public:
    /// Zero element of the n x n algebra.
    explicit HeisenbergElement(int n);

    /// row holds x_{1,2}..x_{1,n} (length n-1), col holds x_{2,n}..x_{n-1,n}
    /// (length n-2).
    HeisenbergElement(int n, std::vector<Rational> row, std::vector<Rational> col);

    int n() const { return n_; }
    int dim() const { return 2 * n_ - 3; }

    /// Coordinate in the fixed basis, 1 <= k <= 2n-3.
    const Rational& coord(int k) const;
    Rational& coord(int k);

    /// x_{1,j} for 2 <= j <= n.
    const Rational& row_entry(int j) const;
    /// x_{i,n} for 2 <= i <= n-1.
    const Rational& col_entry(int i) const;

    std::vector<Rational> coords() const;
    static HeisenbergElement from_coords(int n, const std::vector<Rational>& coords);

    bool is_zero() const;

    HeisenbergElement& operator+=(const HeisenbergElement& o);
    HeisenbergElement& operator-=(const HeisenbergElement& o);
    HeisenbergElement& operator*=(const Rational& s);
    friend HeisenbergElement operator+(HeisenbergElement a, const HeisenbergElement& b) {
        return a += b;
    }
    friend HeisenbergElement operator-(HeisenbergElement a, const HeisenbergElement& b) {
        return a -= b;
    }
    friend HeisenbergElement operator*(const Rational& s, HeisenbergElement a) { return a *= s; }
    HeisenbergElement operator-() const;

    friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
        return a.n_ == b.n_ && a.row_ == b.row_ && a.col_ == b.col_;
    }
    friend bool operator!=(const HeisenbergElement& a, const HeisenbergElement& b) {
        return !(a == b);
    }

private:
    int n_;
    std::vector<Rational> row_;  // x_{1,2}..x_{1,n}
    std::vector<Rational> col_;  // x_{2,n}..x_{n-1,n}
};

/// A scalar multiple of e_{1,n}; the center of the algebra. Kept as its own
/// type so that "this product lands in the center" is visible in signatures.
class CenterElement {
public:
    explicit CenterElement(int n, Rational coefficient = Rational());

    int n() const { return n_; }
    const Rational& coefficient() const { return a_; }
    bool is_zero() const { return a_.is_zero(); }

    HeisenbergElement to_element() const;

    CenterElement& operator+=(const CenterElement& o);
    CenterElement& operator-=(const CenterElement& o);
    friend CenterElement operator+(CenterElement a, const CenterElement& b) { return a += b; }
    friend CenterElement operator-(CenterElement a, const CenterElement& b) { return a -= b; }

    friend bool operator==(const CenterElement& a, const CenterElement& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const CenterElement& a, const CenterElement& b) { return !(a == b); }

private:
    int n_;
    Rational a_;
};

/// Basis unit E_k. Throws IndexOutOfRange unless 1 <= k <= 2n-3.
HeisenbergElement basis_element(int n, int k);

/// Product of two elements. Every product lands in the center with
/// e_{1,n}-coefficient sum_{j=2}^{n-1} x_{1,j} y_{j,n}.
CenterElement h_mul(const HeisenbergElement& x, const HeisenbergElement& y);

/// Commutator x y - y x; always central.
CenterElement commutator(const HeisenbergElement& x, const HeisenbergElement& y);

/// Anti-transpose within the algebra: the compact image of reflecting the
/// dense form across the anti-diagonal. An involution.
HeisenbergElement tau(const HeisenbergElement& x);

/// True iff the first and last row and column of m are all zero (nonzero
/// entries confined to the interior block). Throws NotSquare.
bool is_interior(const Matrix& m);

/// True iff m is interior, equals the negation of its anti-transpose, and
/// has a zero anti-diagonal.
bool is_hollow_skew_persymmetric(const Matrix& m);

/// True iff every coordinate except possibly the e_{1,n} one is zero.
bool is_central(const HeisenbergElement& x);

/// n x n matrix with ones at (j,j) for 2 <= j <= n-1 and zeros elsewhere.
/// Acts on the algebra as the identity with the e_{1,n} coordinate dropped.
Matrix interior_identity(int n);

/// Free-entry positions of a hollow skew-persymmetric matrix: the 1-based
/// interior pairs (i, j) strictly above the anti-diagonal (i + j < n + 1),
/// row-major. This enumeration is fixed; parameter vectors and serialized
/// bases depend on it. Count is (n-2)(n-3)/2.
std::vector<std::pair<int, int>> hollow_skew_free_positions(int n);

/// Builds the hollow skew-persymmetric matrix with the given values at the
/// free positions and the mirrored negations below the anti-diagonal.
Matrix hollow_skew_from_free(int n, const std::vector<Rational>& values);

/// Anti-commutator {X, A} = XA + AX for an interior n x n matrix a. The
/// result has row part sum_j x_{1,j} a_{j,i}, column part
/// sum_j a_{i,j} x_{j,n}, and zero e_{1,n} coordinate. Throws
/// NotInteriorMatrix when a has nonzero boundary.
HeisenbergElement anti_commutator_action(const Matrix& a, const HeisenbergElement& x);

enum class Side { left, right };

/// One-sided product with an interior matrix: right gives X M (row entries
/// only), left gives M X (column entries only). Throws NotInteriorMatrix.
HeisenbergElement side_mul(const HeisenbergElement& x, const Matrix& m, Side side);

}  // namespace hcm

#endif
