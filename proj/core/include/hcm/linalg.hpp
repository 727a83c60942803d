#ifndef HCM_LINALG_HPP
#define HCM_LINALG_HPP

#include <vector>

#include "hcm/matrix.hpp"

namespace hcm {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;  // strictly increasing, 0-based
    std::size_t rank;
};

/// Reduced row echelon form over the rationals. Pivot selection is the
/// first nonzero entry in column order; no magnitude pivoting is needed in
/// exact arithmetic. The result is the unique RREF of the input.
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Canonical nullspace basis read off the RREF free columns: one vector per
/// free column in increasing column order, with that free variable set to 1
/// and all other free variables 0. Vector count equals cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& a);

}  // namespace hcm

#endif
