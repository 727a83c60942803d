#ifndef HCM_RNG_HPP
#define HCM_RNG_HPP

#include <cstdint>

#include "hcm/decomposition.hpp"

namespace hcm {

/// splitmix64. Chosen for the synthesis contract because any implementation
/// in any language reproduces the same stream from the same seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// (next() mod 19) - 9: an integer in [-9, 9].
    int next_small_int() { return static_cast<int>(next() % 19) - 9; }

    Rational next_small_rational() { return Rational(next_small_int()); }

private:
    std::uint64_t state_;
};

/// Draws the canonical-form parameters in the fixed parametrization order:
/// interior entries of A row-major, then the free entries of B, then of C,
/// then the 2n-3 zeta coordinates, one small integer each.
CanonicalDecomposition random_decomposition(int n, SplitMix64& gen);

/// Draws lambda and then the 2n-3 coordinates of a central functional mu,
/// returning lambda * identity + mu: always a standard-form commuting map.
LinearMap random_standard_map(int n, SplitMix64& gen);

/// Interior n x n matrix with small-integer entries drawn row-major.
Matrix random_interior_matrix(int n, SplitMix64& gen);

/// Element with 2n-3 small-integer coordinates drawn in basis order.
HeisenbergElement random_element(int n, SplitMix64& gen);

}  // namespace hcm

#endif
