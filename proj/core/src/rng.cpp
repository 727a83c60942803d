#include "hcm/rng.hpp"

namespace hcm {

CanonicalDecomposition random_decomposition(int n, SplitMix64& gen) {
    const int d = basis_dim(n);
    CanonicalDecomposition dec{n, random_interior_matrix(n, gen), Matrix(n, n), Matrix(n, n),
                               std::vector<Rational>(d)};
    const auto free_pos = hollow_skew_free_positions(n);
    for (Matrix* target : {&dec.B, &dec.C}) {
        std::vector<Rational> values;
        values.reserve(free_pos.size());
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            values.push_back(gen.next_small_rational());
        *target = hollow_skew_from_free(n, values);
    }
    for (int k = 0; k < d; ++k) dec.zeta[k] = gen.next_small_rational();
    return dec;
}

LinearMap random_standard_map(int n, SplitMix64& gen) {
    const int d = basis_dim(n);
    const Rational lambda = gen.next_small_rational();
    LinearMap f(n);
    for (int k = 1; k <= d; ++k) f.coeff(k, k) = lambda;
    const int z = center_index(n);
    for (int b = 1; b <= d; ++b) f.coeff(z, b) += gen.next_small_rational();
    return f;
}

Matrix random_interior_matrix(int n, SplitMix64& gen) {
    basis_dim(n);
    Matrix m(n, n);
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 2; j <= n - 1; ++j) m(i - 1, j - 1) = gen.next_small_rational();
    return m;
}

HeisenbergElement random_element(int n, SplitMix64& gen) {
    HeisenbergElement x(n);
    for (int k = 1; k <= x.dim(); ++k) x.coord(k) = gen.next_small_rational();
    return x;
}

}  // namespace hcm
