// Copyright 2026 The entvar developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cmath>

#include <Eigen/QR>

#include "entvar/concurrence.hpp"
#include "entvar/rng.hpp"
#include "entvar/states.hpp"
#include "test_helpers.hpp"

using namespace entvar;
using entvar::test::close;
using entvar::test::matrix_close;

TEST_CASE("partial trace of a Bell state is maximally mixed on both sides") {
    const StateVector bell = named_state("bell_phi_plus");
    const Matrix half_identity = 0.5 * Matrix::Identity(2, 2);
    CHECK(matrix_close(partial_trace(bell, 0).entries(), half_identity, 1e-15));
    CHECK(matrix_close(partial_trace(bell, 1).entries(), half_identity, 1e-15));
}

TEST_CASE("partial trace of a product state recovers the local factor") {
    Vector v = Vector::Zero(4);
    v(1) = 1.0; // |0> (x) |1>
    const StateVector psi(PartyLayout({2, 2}), v);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(matrix_close(partial_trace(psi, 0).entries(), expected, 1e-15));
}

TEST_CASE("both marginals of a pure bipartite state share their purity") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const StateVector psi = haar_state(PartyLayout({3, 4}), seed);
        const double pa = purity(partial_trace(psi, 0));
        const double pb = purity(partial_trace(psi, 1));
        CHECK(close(pa, pb, 1e-12));
    }
}

TEST_CASE("partial trace of a mixed state matches the pure-state route") {
    const PartyLayout layout({2, 3});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const StateVector psi = haar_state(layout, seed);
        const DensityMatrix rho(psi.amplitudes() * psi.amplitudes().adjoint());
        for (int keep = 0; keep < 2; ++keep) {
            CHECK(matrix_close(partial_trace(rho, layout, keep).entries(),
                               partial_trace(psi, keep).entries(), 1e-12));
        }
    }
}

TEST_CASE("partial trace validates its keep set") {
    const StateVector bell = named_state("bell_phi_plus");
    CHECK_THROWS_AS(partial_trace(bell, 2), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace_keep(bell, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace_keep(bell, {0, 0}), std::invalid_argument);
}

TEST_CASE("spectral concurrence matches the two-qubit amplitude form on fixed states") {
    // (|00> + |01> + |10> - |11>)/2: amplitude form gives 2|(-1/4) - (1/4)| = 1.
    Vector v(4);
    v << 0.5, 0.5, 0.5, -0.5;
    const StateVector entangled(PartyLayout({2, 2}), v);
    CHECK(close(concurrence_spectral(entangled).value, 1.0, 1e-12));
    CHECK(close(entvar::test::two_qubit_amplitude_concurrence(entangled), 1.0, 1e-15));

    Vector w = Vector::Zero(4);
    w(0) = 1.0;
    const StateVector product(PartyLayout({2, 2}), w);
    CHECK(close(concurrence_spectral(product).value, 0.0, 1e-12));

    // (sqrt(3)|00> + |11>)/2: amplitude form gives 2 (sqrt(3)/2)(1/2) = sqrt(3)/2.
    Vector u = Vector::Zero(4);
    u(0) = std::sqrt(3.0) / 2.0;
    u(3) = 0.5;
    const StateVector tilted(PartyLayout({2, 2}), u);
    CHECK(close(concurrence_spectral(tilted).value, std::sqrt(3.0) / 2.0, 1e-12));
}

TEST_CASE("spectral concurrence equals the amplitude form on random two-qubit states") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const StateVector psi = haar_state(PartyLayout({2, 2}), seed);
        CHECK(close(concurrence_spectral(psi).value,
                    entvar::test::two_qubit_amplitude_concurrence(psi), 1e-12));
    }
}

TEST_CASE("variance bounds for the documented layouts") {
    const VarianceBounds qubits = variance_bounds(PartyLayout({2, 2}));
    CHECK(close(qubits.v_min, 4.0, 1e-15));
    CHECK(close(qubits.v_max, 6.0, 1e-15));

    const VarianceBounds qutrits = variance_bounds(PartyLayout({3, 3}));
    CHECK(close(qutrits.v_min, 8.0, 1e-14));
    CHECK(close(qutrits.v_max, 32.0 / 3.0, 1e-14));

    const VarianceBounds three_qubits = variance_bounds(PartyLayout({2, 2, 2}));
    CHECK(close(three_qubits.v_min, 6.0, 1e-15));
    CHECK(close(three_qubits.v_max, 9.0, 1e-15));
}

TEST_CASE("every product state sits at v_min") {
    const PartyLayout layout({2, 2, 2});
    const double v_min = variance_bounds(layout).v_min;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const StateVector psi = product_state(layout, seed);
        CHECK(close(total_variance(psi), v_min, 1e-9));
    }
}

TEST_CASE("total variance of the pinned states") {
    CHECK(close(total_variance(named_state("bell_phi_plus")), 6.0, 1e-12));

    Vector v = Vector::Zero(4);
    v(0) = 1.0;
    CHECK(close(total_variance(StateVector(PartyLayout({2, 2}), v)), 4.0, 1e-12));

    CHECK(close(total_variance(ghz_state(3)), 9.0, 1e-12));
}

TEST_CASE("total variance agrees with the literal definition") {
    const std::vector<std::vector<int>> layouts = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    for (const auto &dims : layouts) {
        const PartyLayout layout(dims);
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const StateVector psi = haar_state(layout, seed);
            CHECK(close(total_variance(psi), entvar::test::total_variance_by_definition(psi), 1e-9));
        }
    }
}

TEST_CASE("bipartite closed form: V = 2 n_A + 2 n_B - 4 Tr rho_r^2") {
    const std::vector<std::vector<int>> layouts = {{2, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 4}};
    for (const auto &dims : layouts) {
        const PartyLayout layout(dims);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const StateVector psi = haar_state(layout, seed);
            const double bridge = 2.0 * (dims[0] + dims[1]) - 4.0 * purity(partial_trace(psi, 0));
            CHECK(close(total_variance(psi), bridge, 1e-9));
        }
    }
}

TEST_CASE("total variance is independent of the observable basis") {
    const PartyLayout layout({2, 2});
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const StateVector psi = haar_state(layout, seed);
        const double reference = total_variance(psi);
        // Recombine both parties with independent random orthogonal maps.
        std::vector<ObservableBasis> bases;
        for (int k = 0; k < 2; ++k) {
            Eigen::MatrixXd g(3, 3);
            RandomStream stream(substream_seed(seed, 77, static_cast<std::uint64_t>(k)));
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    g(i, j) = stream.normal();
                }
            }
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
            bases.push_back(recombine_basis(observable_basis(2), Eigen::MatrixXd(qr.householderQ())));
        }
        CHECK(close(total_variance(psi, bases), reference, 1e-9));
    }
}

TEST_CASE("variance concurrence of the pinned states") {
    const ConcurrenceReport bell = concurrence_variance(named_state("bell_phi_plus"));
    CHECK(close(bell.value, 1.0, 1e-12));
    CHECK(close(bell.total_variance, 6.0, 1e-12));
    CHECK(close(bell.v_min, 4.0, 1e-15));
    CHECK(close(bell.v_max, 6.0, 1e-15));

    const StateVector triple_product = product_state(PartyLayout({2, 2, 2}), 3);
    CHECK(concurrence_variance(triple_product).value == 0.0);

    const ConcurrenceReport w3 = concurrence_variance(w_state(3));
    CHECK(close(w3.value, std::sqrt(8.0) / 3.0, 1e-12));
    CHECK(close(w3.total_variance, 26.0 / 3.0, 1e-12));
}

TEST_CASE("spectral and variance routes agree on bipartite layouts") {
    const std::vector<std::vector<int>> layouts = {{2, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 4}};
    for (const auto &dims : layouts) {
        const PartyLayout layout(dims);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const StateVector psi = haar_state(layout, seed);
            CHECK(close(concurrence_spectral(psi).value, concurrence_variance(psi).value, 1e-10));
        }
    }
}

TEST_CASE("report window reproduces the total variance") {
    const std::vector<std::vector<int>> layouts = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    for (const auto &dims : layouts) {
        const PartyLayout layout(dims);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const StateVector psi = haar_state(layout, seed);
            for (const ConcurrenceReport &report :
                 {concurrence_variance(psi),
                  concurrence_spectral(psi, std::vector<int>{0})}) {
                const double recovered =
                    report.value * report.value * (report.v_max - report.v_min) + report.v_min;
                CHECK(close(recovered, report.total_variance, 1e-9));
            }
        }
    }
}

TEST_CASE("concurrence vanishes exactly on pure marginals") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const StateVector psi = product_state(PartyLayout({2, 3}), seed);
        CHECK(close(purity(partial_trace(psi, 0)), 1.0, 1e-9));
        CHECK(close(concurrence_spectral(psi).value, 0.0, 1e-10));
        const StateVector entangled = haar_state(PartyLayout({2, 3}), seed);
        if (purity(partial_trace(entangled, 0)) < 1.0 - 1e-6) {
            CHECK(concurrence_spectral(entangled).value > 0.0);
        }
    }
}

TEST_CASE("multipartite cuts: GHZ is maximally entangled across every single party") {
    const StateVector ghz = ghz_state(3);
    for (int party = 0; party < 3; ++party) {
        CHECK(close(concurrence_spectral(ghz, {party}).value, 1.0, 1e-12));
    }
    const ConcurrenceReport two_one = concurrence_spectral(ghz, {0, 2});
    CHECK(close(two_one.value, 1.0, 1e-12));
}

TEST_CASE("concurrence rejects invalid cuts and single parties") {
    const StateVector ghz = ghz_state(3);
    CHECK_THROWS_AS(concurrence_spectral(ghz), std::invalid_argument);
    CHECK_THROWS_AS(concurrence_spectral(ghz, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(concurrence_spectral(ghz, {}), std::invalid_argument);
    CHECK_THROWS_AS(concurrence_spectral(ghz, {3}), std::invalid_argument);
}

TEST_CASE("unnormalized amplitudes are rejected at construction") {
    Vector v = Vector::Ones(4);
    CHECK_THROWS_AS(StateVector(PartyLayout({2, 2}), v), ValidationError);
}
