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

#include <iosfwd>
#include <string>
#include <variant>

#include "entvar/types.hpp"

namespace entvar {

/// Plain-text state file:
///
///     # optional comments anywhere ('#' starts a comment)
///     dims: 2 2
///     kind: pure            (or: mixed)
///     re im                 one amplitude per line, lexicographic order
///     ...                   (mixed: total_dim^2 row-major matrix entries)
///
/// Values are written with 17 significant digits so a round trip is exact.
/// Loading validates every state invariant; ParseError for malformed text,
/// ValidationError for well-formed but non-physical numbers.

using LoadedState = std::variant<StateVector, DensityMatrix>;

/// The layout of a loaded mixed state (pure states carry their own).
struct LoadedStateFile {
    LoadedState state;
    PartyLayout layout;
};

LoadedStateFile parse_state_file(std::istream &in);
LoadedStateFile load_state_file(const std::string &path);

void write_state_file(std::ostream &out, const StateVector &psi);
void write_state_file(std::ostream &out, const DensityMatrix &rho, const PartyLayout &layout);
void save_state_file(const std::string &path, const StateVector &psi);
void save_state_file(const std::string &path, const DensityMatrix &rho, const PartyLayout &layout);

} // namespace entvar
