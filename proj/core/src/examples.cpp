#include "hcm/examples.hpp"

#include <string>

#include "hcm/decomposition.hpp"

namespace hcm {

LinearMap example_r(int n, const Rational& a) {
    if (n == 3) throw UnsupportedN("family r degenerates at n = 3");
    LinearMap f(n);  // validates n >= 3
    f.coeff(row_basis_index(n, n - 1), row_basis_index(n, 2)) = a;  // e_{1,2} -> a e_{1,n-1}
    f.coeff(col_basis_index(n, 2), col_basis_index(n, n - 1)) = a;  // e_{n-1,n} -> a e_{2,n}
    return f;
}

LinearMap example_g(int n, const std::vector<Rational>& a) {
    const int d = basis_dim(n);
    if (a.size() != static_cast<std::size_t>(n - 1))
        throw WrongCoefficientCount("family g needs n-1 coefficients, got " +
                                    std::to_string(a.size()));
    LinearMap f(n);
    for (int k = 1; k <= d; ++k) f.coeff(k, k) = k <= n - 1 ? a[k - 1] : a[k - n];
    return f;
}

Matrix example_B(int n) {
    basis_dim(n);
    Matrix b(n, n);
    for (int j = 2; j <= n - 2; ++j) b(1, j - 1) = 1;
    for (int i = 3; i <= n - 2; ++i) {
        b(i - 1, 1) = 1;
        b(i - 1, n - 2) = -1;
    }
    for (int j = 3; j <= n - 1; ++j) b(n - 2, j - 1) = -1;
    return b;
}

Matrix example_C(int n) {
    basis_dim(n);
    Matrix c(n, n);
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 2; j <= n - 1; ++j) {
            if (i + j <= n)
                c(i - 1, j - 1) = 1;
            else if (i + j >= n + 2)
                c(i - 1, j - 1) = -1;
        }
    return c;
}

LinearMap example_h(int n) {
    const int d = basis_dim(n);
    const Matrix b = example_B(n);
    LinearMap f(n);
    for (int col = 1; col <= d; ++col) {
        const HeisenbergElement xt = tau(basis_element(n, col));
        const HeisenbergElement y = side_mul(xt, b, Side::right) - side_mul(xt, b, Side::left);
        for (int k = 1; k <= d; ++k) f.coeff(k, col) = y.coord(k);
    }
    return f;
}

LinearMap example_newer(int n, const Matrix& a) {
    const int d = basis_dim(n);
    if (!a.is_square() || a.rows() != static_cast<std::size_t>(n))
        throw SizeMismatch("A must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_interior(a)) throw NotInteriorMatrix("A has nonzero boundary entries");
    return reconstruct(CanonicalDecomposition{n, a, example_B(n), example_C(n),
                                              std::vector<Rational>(d)});
}

}  // namespace hcm
