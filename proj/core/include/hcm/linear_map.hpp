#ifndef HCM_LINEAR_MAP_HPP
#define HCM_LINEAR_MAP_HPP

#include "hcm/heisenberg.hpp"
#include "hcm/matrix.hpp"

namespace hcm {

/// Linear endomorphism of the (2n-3)-dimensional algebra, stored as its
/// coefficient matrix in the fixed basis: column b holds the coordinates of
/// f(E_b). The component functionals f_{1,i} and f_{i,n} of the dense image
/// are rows of this matrix.
class LinearMap {
public:
    /// Zero map.
    explicit LinearMap(int n);

    /// Takes ownership of a (2n-3) x (2n-3) coefficient matrix.
    LinearMap(int n, Matrix mat);

    static LinearMap identity(int n);

    int n() const { return n_; }
    int dim() const { return 2 * n_ - 3; }

    const Matrix& mat() const { return mat_; }

    /// Coefficient of E_out in f(E_in); both indices 1-based.
    const Rational& coeff(int out_k, int in_k) const { return mat_(out_k - 1, in_k - 1); }
    Rational& coeff(int out_k, int in_k) { return mat_(out_k - 1, in_k - 1); }

    /// f_{1,i}(E_k): coefficient of e_{1,i} in f(E_k), 2 <= i <= n.
    const Rational& row_component(int i, int k) const;
    /// f_{i,n}(E_k): coefficient of e_{i,n} in f(E_k), 2 <= i <= n-1.
    const Rational& col_component(int i, int k) const;

    HeisenbergElement apply(const HeisenbergElement& x) const;

    bool is_zero() const { return mat_.is_zero(); }

    LinearMap& operator+=(const LinearMap& o);
    LinearMap& operator-=(const LinearMap& o);
    LinearMap& operator*=(const Rational& s);
    friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
    friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
    friend LinearMap operator*(const Rational& s, LinearMap a) { return a *= s; }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.n_ == b.n_ && a.mat_ == b.mat_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    int n_;
    Matrix mat_;
};

}  // namespace hcm

#endif
