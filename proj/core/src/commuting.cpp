#include "hcm/commuting.hpp"

#include "hcm/decomposition.hpp"

namespace hcm {

namespace {

// e_{1,n}-coefficient of [E_k, E_m]. The only nonzero products of basis
// units are e_{1,j} e_{j,n} = e_{1,n} for 2 <= j <= n-1, so the value is
// always -1, 0, or 1.
int structure_coeff(int n, int k, int m) {
    int c = 0;
    if (k <= n - 2 && m == n + k - 1) c += 1;  // E_k = e_{1,k+1}, E_m = e_{k+1,n}
    if (m <= n - 2 && k == n + m - 1) c -= 1;
    return c;
}

}  // namespace

std::optional<std::pair<int, int>> commuting_witness(const LinearMap& f) {
    const int n = f.n();
    const int d = f.dim();
    for (int a = 1; a <= d; ++a) {
        for (int b = a; b <= d; ++b) {
            Rational phi;
            for (int k = 1; k <= d; ++k) {
                if (int c = structure_coeff(n, k, b); c != 0)
                    phi += Rational(c) * f.coeff(k, a);
                if (int c = structure_coeff(n, k, a); c != 0)
                    phi += Rational(c) * f.coeff(k, b);
            }
            if (!phi.is_zero()) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

bool is_commuting(const LinearMap& f) { return !commuting_witness(f).has_value(); }

Matrix constraint_matrix(int n) {
    const int d = basis_dim(n);
    Matrix k_mat(static_cast<std::size_t>(d) * (d + 1) / 2,
                 static_cast<std::size_t>(d) * d);
    std::size_t row = 0;
    for (int a = 1; a <= d; ++a) {
        for (int b = a; b <= d; ++b, ++row) {
            for (int k = 1; k <= d; ++k) {
                if (int c = structure_coeff(n, k, b); c != 0)
                    k_mat(row, static_cast<std::size_t>(a - 1) * d + k - 1) += Rational(c);
                if (int c = structure_coeff(n, k, a); c != 0)
                    k_mat(row, static_cast<std::size_t>(b - 1) * d + k - 1) += Rational(c);
            }
        }
    }
    return k_mat;
}

std::vector<LinearMap> commuting_space_basis(int n) {
    const int d = basis_dim(n);
    const auto vecs = kernel_basis(constraint_matrix(n));
    std::vector<LinearMap> basis;
    basis.reserve(vecs.size());
    for (const auto& v : vecs) {
        Matrix m(d, d);
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k) m(k, b) = v[static_cast<std::size_t>(b) * d + k];
        basis.emplace_back(n, std::move(m));
    }
    return basis;
}

int dimension_formula(int n) {
    basis_dim(n);  // validates n >= 3
    return (n - 2) * (n - 2) + (n - 2) * (n - 3) + (2 * n - 3);
}

Matrix parametrization_matrix(int n) {
    const int d = basis_dim(n);
    const int p = dimension_formula(n);
    Matrix result(static_cast<std::size_t>(d) * d, p);
    std::size_t col = 0;

    auto emit = [&](const CanonicalDecomposition& dec) {
        const LinearMap f = reconstruct(dec);
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k)
                result(static_cast<std::size_t>(b) * d + k, col) = f.mat()(k, b);
        ++col;
    };

    CanonicalDecomposition unit{n, Matrix(n, n), Matrix(n, n), Matrix(n, n),
                                std::vector<Rational>(d)};
    for (int i = 2; i <= n - 1; ++i) {
        for (int j = 2; j <= n - 1; ++j) {
            unit.A(i - 1, j - 1) = 1;
            emit(unit);
            unit.A(i - 1, j - 1) = 0;
        }
    }
    const auto free_pos = hollow_skew_free_positions(n);
    for (Matrix* target : {&unit.B, &unit.C}) {
        for (const auto& [i, j] : free_pos) {
            (*target)(i - 1, j - 1) = 1;
            (*target)(n - j, n - i) = -1;
            emit(unit);
            (*target)(i - 1, j - 1) = 0;
            (*target)(n - j, n - i) = 0;
        }
    }
    for (int k = 0; k < d; ++k) {
        unit.zeta[k] = 1;
        emit(unit);
        unit.zeta[k] = 0;
    }
    return result;
}

}  // namespace hcm
