#include "hcm/decomposition.hpp"

#include <string>

#include "hcm/commuting.hpp"

namespace hcm {

namespace {

void require_commuting(const LinearMap& f) {
    if (!is_commuting(f)) throw NotCommuting("map fails the commuting check");
}

}  // namespace

CanonicalDecomposition decompose(const LinearMap& f) {
    require_commuting(f);
    const int n = f.n();
    const int d = f.dim();
    CanonicalDecomposition dec{n, Matrix(n, n), Matrix(n, n), Matrix(n, n),
                               std::vector<Rational>(d)};
    for (int i = 2; i <= n - 1; ++i) {
        for (int j = 2; j <= n - 1; ++j) {
            dec.A(i - 1, j - 1) = f.col_component(i, col_basis_index(n, j));
            dec.B(i - 1, j - 1) = -f.row_component(n - i + 1, col_basis_index(n, j));
            dec.C(i - 1, j - 1) = -f.col_component(n - j + 1, row_basis_index(n, i));
        }
    }
    const int z = center_index(n);
    for (int b = 1; b <= d; ++b) dec.zeta[b - 1] = f.coeff(z, b);
    return dec;
}

LinearMap reconstruct(const CanonicalDecomposition& d) {
    const int n = d.n;
    const int dim = basis_dim(n);
    const auto sz = static_cast<std::size_t>(n);
    if (d.A.rows() != sz || d.A.cols() != sz || d.B.rows() != sz || d.B.cols() != sz ||
        d.C.rows() != sz || d.C.cols() != sz)
        throw InvalidDecomposition("matrices must be " + std::to_string(n) + "x" +
                                   std::to_string(n));
    if (!is_interior(d.A)) throw InvalidDecomposition("A has nonzero boundary entries");
    if (!is_hollow_skew_persymmetric(d.B))
        throw InvalidDecomposition("B is not hollow skew-persymmetric");
    if (!is_hollow_skew_persymmetric(d.C))
        throw InvalidDecomposition("C is not hollow skew-persymmetric");
    if (d.zeta.size() != static_cast<std::size_t>(dim))
        throw InvalidDecomposition("zeta must have 2n-3 coordinates");

    LinearMap f(n);
    const int z = center_index(n);
    for (int b = 1; b <= dim; ++b) {
        const HeisenbergElement x = basis_element(n, b);
        const HeisenbergElement xt = tau(x);
        HeisenbergElement y = anti_commutator_action(d.A, x);
        y += side_mul(xt, d.B, Side::right);
        y += side_mul(xt, d.C, Side::left);
        y.coord(z) += d.zeta[b - 1];
        for (int k = 1; k <= dim; ++k) f.coeff(k, b) = y.coord(k);
    }
    return f;
}

std::optional<StandardFormWitness> standard_form_witness(const LinearMap& f) {
    const CanonicalDecomposition dec = decompose(f);  // checks the precondition
    if (!dec.B.is_zero() || !dec.C.is_zero()) return std::nullopt;
    const int n = f.n();
    const Rational lambda = dec.A(1, 1);
    if (dec.A != lambda * interior_identity(n)) return std::nullopt;
    StandardFormWitness w{lambda, dec.zeta};
    w.mu[center_index(n) - 1] -= lambda;
    return w;
}

bool check_matched_components_vanish(const LinearMap& f) {
    require_commuting(f);
    const int n = f.n();
    for (int i = 2; i <= n - 1; ++i) {
        if (!f.row_component(i, col_basis_index(n, i)).is_zero()) return false;
        if (!f.col_component(i, row_basis_index(n, i)).is_zero()) return false;
    }
    return true;
}

bool check_component_exchange_relations(const LinearMap& f) {
    require_commuting(f);
    const int n = f.n();
    for (int i = 2; i <= n - 1; ++i) {
        for (int j = 2; j <= n - 1; ++j) {
            const int ei = row_basis_index(n, i);
            const int ej = row_basis_index(n, j);
            const int fi = col_basis_index(n, i);
            const int fj = col_basis_index(n, j);
            if (f.col_component(j, ei) != -f.col_component(i, ej)) return false;
            if (f.row_component(j, ei) != f.col_component(i, fj)) return false;
            if (f.row_component(j, fi) != -f.row_component(i, fj)) return false;
        }
    }
    return true;
}

bool check_component_expansion_formulas(const LinearMap& f) {
    require_commuting(f);
    const int n = f.n();
    const int d = f.dim();
    for (int k = 1; k <= d; ++k) {
        const HeisenbergElement x = basis_element(n, k);
        for (int i = 2; i <= n - 1; ++i) {
            const int ei = row_basis_index(n, i);
            const int fi = col_basis_index(n, i);
            Rational col_rhs, row_rhs;
            for (int j = 2; j <= n - 1; ++j) {
                col_rhs += f.row_component(j, ei) * x.col_entry(j) -
                           x.row_entry(j) * f.col_component(j, ei);
                row_rhs += x.row_entry(j) * f.col_component(j, fi) -
                           f.row_component(j, fi) * x.col_entry(j);
            }
            if (f.col_component(i, k) != col_rhs) return false;
            if (f.row_component(i, k) != row_rhs) return false;
        }
    }
    return true;
}

}  // namespace hcm
