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

#include <sstream>

#include "entvar/concurrence.hpp"
#include "entvar/skew.hpp"
#include "entvar/state_io.hpp"
#include "entvar/states.hpp"
#include "test_helpers.hpp"

using namespace entvar;
using entvar::test::close;

TEST_CASE("pure states round trip bit-exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const StateVector psi = haar_state(PartyLayout({2, 3}), seed);
        std::stringstream buffer;
        write_state_file(buffer, psi);
        const LoadedStateFile loaded = parse_state_file(buffer);
        REQUIRE(std::holds_alternative<StateVector>(loaded.state));
        const StateVector &back = std::get<StateVector>(loaded.state);
        CHECK(back.layout() == psi.layout());
        CHECK((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(close(concurrence_variance(back).value, concurrence_variance(psi).value, 1e-12));
    }
}

TEST_CASE("mixed states round trip bit-exactly") {
    const PartyLayout layout({2, 2});
    const DensityMatrix rho = mixed_state(layout, 3, 21);
    std::stringstream buffer;
    write_state_file(buffer, rho, layout);
    const LoadedStateFile loaded = parse_state_file(buffer);
    REQUIRE(std::holds_alternative<DensityMatrix>(loaded.state));
    const DensityMatrix &back = std::get<DensityMatrix>(loaded.state);
    CHECK((back.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(close(total_skew_information(back, loaded.layout).total,
                total_skew_information(rho, layout).total, 1e-12));
}

TEST_CASE("comments and blank lines are ignored") {
    std::stringstream buffer(
        "# a Bell pair\n"
        "dims: 2 2   # two qubits\n"
        "\n"
        "kind: pure\n"
        "0.70710678118654752 0  # |00>\n"
        "0 0\n"
        "0 0\n"
        "0.70710678118654752 0\n");
    const LoadedStateFile loaded = parse_state_file(buffer);
    const StateVector &psi = std::get<StateVector>(loaded.state);
    CHECK(close(concurrence_spectral(psi).value, 1.0, 1e-10));
}

TEST_CASE("malformed files raise ParseError") {
    auto parse = [](const std::string &text) {
        std::stringstream buffer(text);
        return parse_state_file(buffer);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("dims: 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse("kind: pure\ndims: 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse("dims: 2 two\nkind: pure\n"), ParseError);
    CHECK_THROWS_AS(parse("dims: 1 4\nkind: pure\n"), ParseError);
    CHECK_THROWS_AS(parse("dims: 2\nkind: classical\n1 0\n0 0\n"), ParseError);
    // wrong amplitude count
    CHECK_THROWS_AS(parse("dims: 2\nkind: pure\n1 0\n"), ParseError);
    // non-numeric amplitude
    CHECK_THROWS_AS(parse("dims: 2\nkind: pure\n1 0\nx 0\n"), ParseError);
    // trailing tokens
    CHECK_THROWS_AS(parse("dims: 2\nkind: pure\n1 0 0\n0 0\n"), ParseError);
}

TEST_CASE("non-physical states raise ValidationError") {
    auto parse = [](const std::string &text) {
        std::stringstream buffer(text);
        return parse_state_file(buffer);
    };
    // unnormalized pure state
    CHECK_THROWS_AS(parse("dims: 2\nkind: pure\n1 0\n1 0\n"), ValidationError);
    // non-Hermitian mixed state
    CHECK_THROWS_AS(parse("dims: 2\nkind: mixed\n0.5 0\n1 0\n0 0\n0.5 0\n"), ValidationError);
    // wrong trace
    CHECK_THROWS_AS(parse("dims: 2\nkind: mixed\n0.5 0\n0 0\n0 0\n0.9 0\n"), ValidationError);
    // negative eigenvalue
    CHECK_THROWS_AS(parse("dims: 2\nkind: mixed\n1.5 0\n0 0\n0 0\n-0.5 0\n"), ValidationError);
}

TEST_CASE("missing files raise ParseError") {
    CHECK_THROWS_AS(load_state_file("/nonexistent/state.txt"), ParseError);
}
