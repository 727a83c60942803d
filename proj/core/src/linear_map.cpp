#include "hcm/linear_map.hpp"

#include <string>

namespace hcm {

LinearMap::LinearMap(int n) : n_(n), mat_(basis_dim(n), basis_dim(n)) {}

LinearMap::LinearMap(int n, Matrix mat) : n_(n), mat_(std::move(mat)) {
    const std::size_t d = static_cast<std::size_t>(basis_dim(n));
    if (mat_.rows() != d || mat_.cols() != d)
        throw SizeMismatch("coefficient matrix must be " + std::to_string(d) + "x" +
                           std::to_string(d));
}

LinearMap LinearMap::identity(int n) { return LinearMap(n, Matrix::identity(basis_dim(n))); }

const Rational& LinearMap::row_component(int i, int k) const {
    return coeff(row_basis_index(n_, i), k);
}

const Rational& LinearMap::col_component(int i, int k) const {
    return coeff(col_basis_index(n_, i), k);
}

HeisenbergElement LinearMap::apply(const HeisenbergElement& x) const {
    if (x.n() != n_) throw SizeMismatch("map and element algebra sizes differ");
    const int d = dim();
    std::vector<Rational> out(d);
    for (int b = 1; b <= d; ++b) {
        const Rational& xb = x.coord(b);
        if (xb.is_zero()) continue;
        for (int k = 1; k <= d; ++k) {
            const Rational& c = mat_(k - 1, b - 1);
            if (!c.is_zero()) out[k - 1] += c * xb;
        }
    }
    return HeisenbergElement::from_coords(n_, out);
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
    if (n_ != o.n_) throw SizeMismatch("map algebra sizes differ");
    mat_ += o.mat_;
    return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
    if (n_ != o.n_) throw SizeMismatch("map algebra sizes differ");
    mat_ -= o.mat_;
    return *this;
}

LinearMap& LinearMap::operator*=(const Rational& s) {
    mat_ *= s;
    return *this;
}

}  // namespace hcm
