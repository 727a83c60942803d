#ifndef HCM_COMMUTING_HPP
#define HCM_COMMUTING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hcm/linalg.hpp"
#include "hcm/linear_map.hpp"

namespace hcm {

/// A map f is commuting when [f(X), X] = 0 for every X. Over a field of
/// characteristic 0 this is equivalent to the polarized system
/// [f(E_a), E_b] + [f(E_b), E_a] = 0 over all basis pairs a <= b, which is
/// what the predicate evaluates.
bool is_commuting(const LinearMap& f);

/// Lexicographically first pair (a, b), a <= b, violating the polarized
/// identity, or nothing when f is commuting.
std::optional<std::pair<int, int>> commuting_witness(const LinearMap& f);

/// Linearization of the commuting condition: a matrix K with
/// (2n-3)(2n-2)/2 rows (basis pairs a <= b in lexicographic order) and
/// (2n-3)^2 columns (the coefficient matrix vectorized column-major, entry
/// mat[k,b] at 1-based column (b-1)(2n-3)+k). A map is commuting iff
/// K . vec(f) = 0.
Matrix constraint_matrix(int n);

/// Canonical basis of the space of commuting maps: the kernel basis of
/// constraint_matrix(n) reshaped column-major into coefficient matrices.
std::vector<LinearMap> commuting_space_basis(int n);

/// Closed-form dimension (n-2)^2 + (n-2)(n-3) + (2n-3). A derived count of
/// canonical-form parameters; the tests validate it against the kernel.
int dimension_formula(int n);

/// Columns are the vectorized maps produced by unit parameters of the
/// canonical form, in the fixed parameter order: interior entries of A
/// row-major, then the strictly-above-anti-diagonal free entries of B
/// row-major (each with mirrored negation), then those of C, then the 2n-3
/// central-functional coordinates. Shape (2n-3)^2 x dimension_formula(n).
Matrix parametrization_matrix(int n);

}  // namespace hcm

#endif
