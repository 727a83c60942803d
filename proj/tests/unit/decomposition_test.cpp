#include <doctest.h>

#include "hcm/commuting.hpp"
#include "hcm/decomposition.hpp"
#include "hcm/examples.hpp"
#include "hcm/rng.hpp"

using hcm::CanonicalDecomposition;
using hcm::LinearMap;
using hcm::Matrix;
using hcm::Rational;

namespace {

LinearMap random_commuting(int n, hcm::SplitMix64& gen) {
    LinearMap combo(n);
    for (const auto& b : hcm::commuting_space_basis(n)) combo += gen.next_small_rational() * b;
    return combo;
}

}  // namespace

TEST_CASE("decompose on the named families") {
    const auto zero = hcm::decompose(LinearMap(4));
    CHECK(zero.A.is_zero());
    CHECK(zero.B.is_zero());
    CHECK(zero.C.is_zero());
    CHECK(zero.zeta == std::vector<Rational>(5));

    for (int n : {4, 5, 7}) {
        const Rational a(3, 2);
        const auto dec = hcm::decompose(hcm::example_r(n, a));
        Matrix expected_a(n, n);
        expected_a(1, n - 2) = a;  // a * e_{2,n-1}
        CHECK(dec.A == expected_a);
        CHECK(dec.B.is_zero());
        CHECK(dec.C.is_zero());
        CHECK(dec.zeta == std::vector<Rational>(2 * n - 3));
    }

    const int n = 5;
    const std::vector<Rational> coeffs{1, 2, 3, 4};
    const auto dec = hcm::decompose(hcm::example_g(n, coeffs));
    Matrix expected_a(n, n);
    for (int i = 2; i <= n - 1; ++i) expected_a(i - 1, i - 1) = coeffs[i - 2];
    CHECK(dec.A == expected_a);
    CHECK(dec.B.is_zero());
    CHECK(dec.C.is_zero());
    std::vector<Rational> expected_zeta(2 * n - 3);
    expected_zeta[hcm::center_index(n) - 1] = coeffs[n - 2];
    CHECK(dec.zeta == expected_zeta);

    CHECK_THROWS_AS(hcm::decompose(hcm::example_r(4, 1) + LinearMap(4, [] {
                                       Matrix m(5, 5);
                                       m(4, 0) = 1;  // breaks the commuting property
                                       return m;
                                   }())),
                    hcm::NotCommuting);
}

TEST_CASE("reconstruct on the named families") {
    CHECK(hcm::reconstruct(CanonicalDecomposition{4, Matrix(4, 4), Matrix(4, 4), Matrix(4, 4),
                                                  std::vector<Rational>(5)})
              .is_zero());

    for (int n = 3; n <= 7; ++n) {
        const Matrix b = hcm::example_B(n);
        const auto h = hcm::reconstruct(
            CanonicalDecomposition{n, Matrix(n, n), b, -b, std::vector<Rational>(2 * n - 3)});
        CHECK(h == hcm::example_h(n));
    }

    hcm::SplitMix64 gen(42);
    for (int n = 3; n <= 7; ++n) {
        const Matrix a = random_interior_matrix(n, gen);
        const auto f = hcm::reconstruct(CanonicalDecomposition{
            n, a, hcm::example_B(n), hcm::example_C(n), std::vector<Rational>(2 * n - 3)});
        CHECK(f == hcm::example_newer(n, a));
        CHECK(hcm::is_commuting(f));
    }
}

TEST_CASE("reconstruct validates its input") {
    const int n = 5;
    const std::vector<Rational> zeta(2 * n - 3);
    CHECK_THROWS_AS(
        hcm::reconstruct(CanonicalDecomposition{n, Matrix::identity(n), Matrix(n, n), Matrix(n, n),
                                                zeta}),
        hcm::InvalidDecomposition);
    CHECK_THROWS_AS(
        hcm::reconstruct(CanonicalDecomposition{n, Matrix(n, n), hcm::interior_identity(n),
                                                Matrix(n, n), zeta}),
        hcm::InvalidDecomposition);
    CHECK_THROWS_AS(
        hcm::reconstruct(CanonicalDecomposition{n, Matrix(n, n), Matrix(n, n), Matrix(n, n),
                                                std::vector<Rational>(2)}),
        hcm::InvalidDecomposition);
    CHECK_THROWS_AS(
        hcm::reconstruct(CanonicalDecomposition{n, Matrix(4, 4), Matrix(n, n), Matrix(n, n),
                                                zeta}),
        hcm::InvalidDecomposition);
}

TEST_CASE("round trip is exact on the commuting space") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& f : hcm::commuting_space_basis(n)) {
            const auto dec = hcm::decompose(f);
            CHECK(hcm::is_interior(dec.A));
            CHECK(hcm::is_hollow_skew_persymmetric(dec.B));
            CHECK(hcm::is_hollow_skew_persymmetric(dec.C));
            CHECK(hcm::reconstruct(dec) == f);
        }
        hcm::SplitMix64 gen(800 + n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_commuting(n, gen);
            CHECK(hcm::reconstruct(hcm::decompose(f)) == f);
        }
    }
}

TEST_CASE("reconstructed random decompositions are commuting") {
    for (int n = 3; n <= 6; ++n) {
        hcm::SplitMix64 gen(900 + n);
        for (int trial = 0; trial < 25; ++trial) {
            const auto dec = random_decomposition(n, gen);
            const auto f = hcm::reconstruct(dec);
            CHECK(hcm::is_commuting(f));
            // the extraction recovers the exact parameters
            CHECK(hcm::decompose(f) == dec);
        }
    }
}

TEST_CASE("zeta extraction is additive") {
    for (int n = 3; n <= 5; ++n) {
        hcm::SplitMix64 gen(1000 + n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_commuting(n, gen);
            const auto g = random_commuting(n, gen);
            const auto zf = hcm::decompose(f).zeta;
            const auto zg = hcm::decompose(g).zeta;
            const auto zsum = hcm::decompose(f + g).zeta;
            for (std::size_t k = 0; k < zf.size(); ++k) CHECK(zsum[k] == zf[k] + zg[k]);
        }
    }
}

TEST_CASE("parameter groups feed disjoint coefficient blocks") {
    // Row outputs (coordinates of e_{1,i}, i <= n-1) read row inputs through
    // A and column inputs through B; column outputs read column inputs
    // through A and row inputs through C; the e_{1,n} output row is zeta.
    for (int n = 4; n <= 6; ++n) {
        hcm::SplitMix64 gen(1100 + n);
        const auto dec = random_decomposition(n, gen);
        const int d = 2 * n - 3;
        const int z = hcm::center_index(n);
        const std::vector<Rational> zero_zeta(d);
        const Matrix zero(n, n);

        const auto f = hcm::reconstruct(dec);
        const auto fa =
            hcm::reconstruct(CanonicalDecomposition{n, dec.A, zero, zero, zero_zeta});
        const auto fb =
            hcm::reconstruct(CanonicalDecomposition{n, zero, dec.B, zero, zero_zeta});
        const auto fc =
            hcm::reconstruct(CanonicalDecomposition{n, zero, zero, dec.C, zero_zeta});

        for (int b = 1; b <= d; ++b) {
            CHECK(f.coeff(z, b) == dec.zeta[b - 1]);  // zeta row is exact
            const bool row_input = b <= n - 1;
            for (int k = 1; k <= d; ++k) {
                if (k == z) continue;
                const bool row_output = k <= n - 2;
                const LinearMap& source = row_output == row_input ? fa : (row_output ? fb : fc);
                CHECK(f.coeff(k, b) == source.coeff(k, b));
                // the other two groups contribute nothing to this block
                for (const LinearMap* other : {&fa, &fb, &fc})
                    if (other != &source) CHECK(other->coeff(k, b).is_zero());
            }
        }
    }
}

TEST_CASE("standard form detection") {
    const int n = 4;
    const auto w = hcm::standard_form_witness(Rational(3) * LinearMap::identity(n));
    REQUIRE(w.has_value());
    CHECK(w->lambda == Rational(3));
    CHECK(w->mu == std::vector<Rational>(5));

    // equal family-g coefficients align with the standard form
    const auto weq =
        hcm::standard_form_witness(hcm::example_g(n, {Rational(7, 2), Rational(7, 2), Rational(7, 2)}));
    REQUIRE(weq.has_value());
    CHECK(weq->lambda == Rational(7, 2));
    CHECK(weq->mu == std::vector<Rational>(5));

    CHECK_FALSE(hcm::standard_form_witness(hcm::example_g(4, {1, 2, 3})).has_value());
    CHECK_FALSE(hcm::standard_form_witness(hcm::example_h(6)).has_value());
    CHECK_FALSE(hcm::standard_form_witness(hcm::example_r(4, 1)).has_value());

    // lambda = 0 with nonzero central functional is still standard
    hcm::SplitMix64 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_standard_map(5, gen);
        const auto ws = hcm::standard_form_witness(f);
        REQUIRE(ws.has_value());
        // f == lambda * identity + central row
        LinearMap rebuilt = ws->lambda * LinearMap::identity(5);
        for (int b = 1; b <= 7; ++b) rebuilt.coeff(hcm::center_index(5), b) += ws->mu[b - 1];
        CHECK(rebuilt == f);
    }

    LinearMap bad(3);
    bad.coeff(3, 1) = 1;
    CHECK_THROWS_AS(hcm::standard_form_witness(bad), hcm::NotCommuting);
}

TEST_CASE("component identity suites hold on the commuting space") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& f : hcm::commuting_space_basis(n)) {
            CHECK(hcm::check_matched_components_vanish(f));
            CHECK(hcm::check_component_exchange_relations(f));
            CHECK(hcm::check_component_expansion_formulas(f));
        }
    }
    CHECK(hcm::check_matched_components_vanish(LinearMap::identity(6)));
    CHECK(hcm::check_matched_components_vanish(hcm::example_h(6)));
    CHECK(hcm::check_component_exchange_relations(LinearMap(5)));
    hcm::SplitMix64 gen(4);
    CHECK(hcm::check_component_exchange_relations(
        hcm::example_newer(5, random_interior_matrix(5, gen))));
    std::vector<Rational> coeffs{1, 2, 3, 4};
    CHECK(hcm::check_component_expansion_formulas(hcm::example_g(5, coeffs)));

    LinearMap bad(3);
    bad.coeff(3, 1) = 1;
    CHECK_THROWS_AS(hcm::check_matched_components_vanish(bad), hcm::NotCommuting);
    CHECK_THROWS_AS(hcm::check_component_exchange_relations(bad), hcm::NotCommuting);
    CHECK_THROWS_AS(hcm::check_component_expansion_formulas(bad), hcm::NotCommuting);
}
