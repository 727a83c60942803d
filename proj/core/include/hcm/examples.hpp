#ifndef HCM_EXAMPLES_HPP
#define HCM_EXAMPLES_HPP

#include <vector>

#include "hcm/linear_map.hpp"

namespace hcm {

/// The named commuting-map families used by the CLI and the test suites.
/// Families r and g are diagonal-style maps that already show the failure
/// of the standard form; h and newer exercise the one-sided anti-transpose
/// multipliers.

/// r(X) = a x_{1,2} e_{1,n-1} + a x_{n-1,n} e_{2,n}. Needs n >= 4: at n = 3
/// the target e_{1,n-1} collides with the source e_{1,2} and the formula
/// degenerates. Throws UnsupportedN for n = 3.
LinearMap example_r(int n, const Rational& a);

/// g scales e_{1,i+1} and e_{i+1,n} by a_i (a has length n-1; the last
/// coefficient scales e_{1,n}). Standard form iff all a_i coincide. Throws
/// WrongCoefficientCount.
LinearMap example_g(int n, const std::vector<Rational>& a);

/// Fixed hollow skew-persymmetric matrix with interior pattern
///   row 2:            1 ... 1 0
///   rows 3..n-2:      1 0 ... 0 -1
///   row n-1:          0 -1 ... -1
/// Zero for n = 3; interior [[1,0],[0,-1]] for n = 4.
Matrix example_B(int n);

/// Fixed hollow skew-persymmetric matrix with interior entries +1 above
/// the anti-diagonal (i + j <= n) and -1 below (i + j >= n + 2). Coincides
/// with example_B up to n = 5; the two first differ at n = 6.
Matrix example_C(int n);

/// h(X) = [X^tau, B] with B = example_B(n). Commuting; its canonical
/// decomposition has A = 0, zeta = 0, and C = -B.
LinearMap example_h(int n);

/// f(X) = {X, A} + X^tau B + C X^tau with B = example_B(n), C =
/// example_C(n), and the caller's interior matrix A. Commuting for every
/// interior A. Throws NotInteriorMatrix.
LinearMap example_newer(int n, const Matrix& a);

}  // namespace hcm

#endif
