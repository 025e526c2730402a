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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "entvar/types.hpp"

namespace entvar {

enum class StateKind { named, haar_pure, product, mixed_rank_r };

/// Recipe for a deterministic test state. `layout` may be omitted for
/// named states (the catalog fixes it); `rank` only applies to
/// mixed_rank_r; `seed` is ignored by named states.
struct StateSpec {
    StateKind kind = StateKind::haar_pure;
    std::optional<PartyLayout> layout;
    std::string name;
    int rank = 1;
    std::uint64_t seed = 0;
};

using GeneratedState = std::variant<StateVector, DensityMatrix>;

/// Frozen catalog, addressable by name from the CLI:
///   bell_phi_plus, bell_phi_minus, bell_psi_plus, bell_psi_minus,
///   ghz<K>  (K >= 2 qubits), w<K> (K >= 2 qubits),
///   max_entangled<n>  (sum_i |ii>/sqrt(n) on [n,n]).
StateVector named_state(const std::string &name);

StateVector ghz_state(int parties);
StateVector w_state(int parties);
StateVector max_entangled_state(int n);

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic in the seed.
StateVector haar_state(const PartyLayout &layout, std::uint64_t seed);

/// Tensor product of independent single-party Haar states. Concurrence 0
/// across every cut.
StateVector product_state(const PartyLayout &layout, std::uint64_t seed);

/// Equal-weight mixture of `rank` independent Haar pure states
/// (1 <= rank <= total_dim).
DensityMatrix mixed_state(const PartyLayout &layout, int rank, std::uint64_t seed);

GeneratedState make_state(const StateSpec &spec);

} // namespace entvar
