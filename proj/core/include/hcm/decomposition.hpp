#ifndef HCM_DECOMPOSITION_HPP
#define HCM_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "hcm/linear_map.hpp"

namespace hcm {

/// Canonical form of a commuting map:
///
///   f(X) = {X, A} + X^tau B + C X^tau + zeta(X)
///
/// with A interior, B and C hollow skew-persymmetric, and zeta the central
/// functional X -> f's e_{1,n} output. zeta is stored as the coordinate
/// vector of that functional in the fixed basis.
struct CanonicalDecomposition {
    int n;
    Matrix A;
    Matrix B;
    Matrix C;
    std::vector<Rational> zeta;

    friend bool operator==(const CanonicalDecomposition&, const CanonicalDecomposition&) = default;
};

/// Extracts the canonical form of a commuting map from its coefficient
/// matrix:
///
///   A_{i,j}  =  f_{i,n}(e_{j,n})
///   B_{i,j}  = -f_{1,n-i+1}(e_{j,n})
///   C_{i,j}  = -f_{n-j+1,n}(e_{1,i})        (interior 2 <= i,j <= n-1)
///   zeta_k   =  f_{1,n}(E_k)
///
/// The signs on B and C make reconstruct use exactly the form above (the
/// identities guaranteeing B, C hollow skew-persymmetric and the exact
/// round trip hold precisely when f is commuting, hence the checked
/// precondition). Throws NotCommuting otherwise.
CanonicalDecomposition decompose(const LinearMap& f);

/// Assembles the coefficient matrix of {X,A} + X^tau B + C X^tau + zeta(X).
/// Throws InvalidDecomposition unless A is interior, B and C are hollow
/// skew-persymmetric, and zeta has length 2n-3.
LinearMap reconstruct(const CanonicalDecomposition& d);

/// Witness of the form f(X) = lambda X + mu(X) with mu valued in the
/// center; mu is stored like zeta, as a coordinate functional.
struct StandardFormWitness {
    Rational lambda;
    std::vector<Rational> mu;

    friend bool operator==(const StandardFormWitness&, const StandardFormWitness&) = default;
};

/// A commuting map has standard form iff its canonical decomposition has
/// B = C = 0 and A a scalar multiple of the interior identity. Returns the
/// witness, or nothing. Throws NotCommuting when the input is not
/// commuting.
std::optional<StandardFormWitness> standard_form_witness(const LinearMap& f);

/// Component identities satisfied by every commuting map; each throws
/// NotCommuting when the precondition fails.

/// f_{1,i}(e_{i,n}) = 0 and f_{i,n}(e_{1,i}) = 0 for 2 <= i <= n-1.
bool check_matched_components_vanish(const LinearMap& f);

/// The exchange relations between component values on basis units:
/// f_{j,n}(e_{1,i}) = -f_{i,n}(e_{1,j}), f_{1,j}(e_{1,i}) = f_{i,n}(e_{j,n}),
/// f_{1,j}(e_{i,n}) = -f_{1,i}(e_{j,n}).
bool check_component_exchange_relations(const LinearMap& f);

/// The expansion of each component functional through its values on basis
/// units:
/// f_{i,n}(X) = sum_j [f_{1,j}(e_{1,i}) x_{j,n} - x_{1,j} f_{j,n}(e_{1,i})],
/// f_{1,i}(X) = sum_j [x_{1,j} f_{j,n}(e_{i,n}) - f_{1,j}(e_{i,n}) x_{j,n}],
/// checked coordinate-wise on every basis unit X = E_k.
bool check_component_expansion_formulas(const LinearMap& f);

}  // namespace hcm

#endif
